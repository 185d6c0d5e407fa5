#include "vfc/tools/session.h"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vfc/errors.h"

namespace vfc::tools {
namespace {

// Splits on spaces and tabs. Returns false if a token after the first is not
// an integer id.
bool Tokenize(const std::string& line, char& op, std::vector<long long>& ids) {
  ids.clear();
  std::size_t i = 0;
  auto skip = [&] {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
  };
  skip();
  std::size_t start = i;
  while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
  if (i - start != 1) return false;
  op = line[start];
  for (skip(); i < line.size(); skip()) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + i) return false;
    i = ptr - line.data();
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') return false;
    ids.push_back(value);
  }
  return true;
}

}  // namespace

int RunSession(const Index& index, std::istream& in, std::ostream& out) {
  std::optional<FailureOracle> oracle;
  std::vector<long long> ids;
  std::string line;
  int rejected = 0;
  auto reject = [&](const char* what) {
    out << what << '\n';
    ++rejected;
  };
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    char op = 0;
    if (!Tokenize(line, op, ids)) {
      reject("E proto");
      continue;
    }
    bool in_range = true;
    for (long long id : ids) in_range = in_range && id >= 1 && id <= index.n();
    if (op == 'U') {
      oracle.reset();
      if (!in_range) {
        reject("E proto");
        continue;
      }
      std::vector<NodeId> failed;
      failed.reserve(ids.size());
      for (long long id : ids) failed.push_back(static_cast<NodeId>(id - 1));
      try {
        oracle.emplace(index.Update(failed));
      } catch (const BudgetExceeded&) {
        reject("E budget");
      }
    } else if (op == 'Q') {
      if (!oracle || ids.size() != 2 || !in_range) {
        reject("E proto");
        continue;
      }
      try {
        bool yes = oracle->Connected(static_cast<NodeId>(ids[0] - 1),
                                     static_cast<NodeId>(ids[1] - 1));
        out << (yes ? '1' : '0') << '\n';
      } catch (const QueryOnFailedVertex&) {
        reject("E proto");
      }
    } else {
      reject("E proto");
    }
  }
  out.flush();
  return rejected;
}

}  // namespace vfc::tools
