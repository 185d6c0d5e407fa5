#pragma once

#include <iosfwd>

#include "vfc/index.h"

namespace vfc::tools {

// Line protocol over original (1-based) vertex ids:
//   U f1 .. fk   replace the failed set
//   Q x y        answer 1 or 0 under the current failed set
//   #...         comment
// Rejected lines print "E proto", or "E budget" for k > d*. A rejected U
// leaves no failed set open. Returns the number of rejected lines.
int RunSession(const Index& index, std::istream& in, std::ostream& out);

}  // namespace vfc::tools
