#include "vfc/index.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "binary_io.h"
#include "vfc/errors.h"

namespace vfc {

namespace {

constexpr std::string_view kMagic = "VFC1";
constexpr std::uint32_t kVersion = 1;

}  // namespace

Index Index::Build(const Graph& g, int dstar) {
  if (dstar < 1) throw ContractViolation("d* must be at least 1");
  ComponentPartition parts = SplitComponents(g);
  Index idx;
  idx.dstar_ = dstar;
  idx.m_ = g.m();
  idx.comp_id_ = std::move(parts.comp_id);
  idx.local_id_ = std::move(parts.local_id);
  idx.members_ = std::move(parts.members);
  idx.comps_.reserve(parts.graphs.size());
  for (const Graph& cg : parts.graphs) idx.comps_.push_back(StaticStructure::Build(cg, dstar));
  return idx;
}

Index Index::Resized(int dstar) const {
  if (dstar < 1) throw ContractViolation("d* must be at least 1");
  Index idx;
  idx.dstar_ = dstar;
  idx.m_ = m_;
  idx.comp_id_ = comp_id_;
  idx.local_id_ = local_id_;
  idx.members_ = members_;
  idx.comps_.reserve(comps_.size());
  for (const auto& s : comps_) idx.comps_.push_back(s.Resized(dstar));
  return idx;
}

Vertex Index::dfs_number(NodeId u) const {
  return comps_[comp_id_[u]].tree().number(local_id_[u]);
}

NodeId Index::node(int comp, Vertex v) const {
  return members_[comp][comps_[comp].tree().node(v)];
}

FailureOracle Index::Update(std::span<const NodeId> failed) const {
  std::vector<NodeId> f(failed.begin(), failed.end());
  for (NodeId u : f) {
    if (u < 0 || u >= n()) throw ContractViolation("failed vertex id out of range");
  }
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  if (f.size() > static_cast<std::size_t>(dstar_)) throw BudgetExceeded(f.size(), dstar_);
  return FailureOracle(*this, std::move(f));
}

std::string Index::Serialize() const {
  BinaryWriter w;
  w.Raw(kMagic);
  w.U32(kVersion);
  w.I32(dstar_);
  w.U64(m_);
  w.I32Vector(comp_id_);
  w.U32(static_cast<std::uint32_t>(comps_.size()));
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    w.I32Vector(members_[c]);
    comps_[c].Serialize(w);
  }
  std::string out = w.buffer();
  BinaryWriter tail;
  tail.U64(Fnv1a64(out));
  out += tail.buffer();
  return out;
}

Index Index::Deserialize(std::string_view bytes) {
  Require(bytes.size() >= kMagic.size() + 8, "file too short for an index");
  Require(bytes.substr(0, kMagic.size()) == kMagic, "bad magic; not a vfc index");
  const auto body = bytes.substr(0, bytes.size() - 8);
  BinaryReader tail(bytes.substr(bytes.size() - 8));
  Require(tail.U64() == Fnv1a64(body), "checksum mismatch");

  BinaryReader r(body);
  r.Raw(kMagic.size());
  Require(r.U32() == kVersion, "unsupported index version");
  Index idx;
  idx.dstar_ = r.I32();
  Require(idx.dstar_ >= 1, "bad d*");
  idx.m_ = static_cast<std::size_t>(r.U64());
  idx.comp_id_ = r.I32Vector();
  const NodeId n = static_cast<NodeId>(idx.comp_id_.size());
  const std::uint32_t count = r.U32();
  Require(count <= static_cast<std::uint32_t>(n), "bad component count");
  idx.local_id_.assign(n, -1);
  for (std::uint32_t c = 0; c < count; ++c) {
    auto members = r.I32Vector();
    Require(!members.empty(), "empty component");
    for (std::size_t i = 0; i < members.size(); ++i) {
      const NodeId u = members[i];
      Require(u >= 0 && u < n && idx.comp_id_[u] == static_cast<int>(c) && idx.local_id_[u] == -1,
              "component membership mismatch");
      idx.local_id_[u] = static_cast<NodeId>(i);
    }
    idx.comps_.push_back(StaticStructure::Deserialize(r));
    Require(idx.comps_.back().n() == static_cast<Vertex>(members.size()) &&
                idx.comps_.back().dstar() == idx.dstar_,
            "component size mismatch");
    idx.members_.push_back(std::move(members));
  }
  Require(std::none_of(idx.local_id_.begin(), idx.local_id_.end(), [](NodeId l) { return l < 0; }),
          "vertex without component");
  Require(r.remaining() == 0, "trailing bytes after index");
  return idx;
}

void Index::Save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path + " for writing");
  const std::string bytes = Serialize();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing " + path);
}

Index Index::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open index " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return Deserialize(buf.str());
}

FailureOracle::FailureOracle(const Index& index, std::vector<NodeId> failed)
    : index_(&index), failed_(std::move(failed)) {
  std::vector<std::vector<Vertex>> per_comp(index.component_count());
  for (NodeId u : failed_) per_comp[index.component_of(u)].push_back(index.dfs_number(u));
  for (int c = 0; c < index.component_count(); ++c) {
    if (!per_comp[c].empty()) {
      states_.emplace_back(c, index.component(c).Update(std::move(per_comp[c])));
    }
  }
}

bool FailureOracle::IsFailed(NodeId u) const {
  return std::binary_search(failed_.begin(), failed_.end(), u);
}

const UpdateState* FailureOracle::state(int c) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), c,
                             [](const auto& p, int comp) { return p.first < comp; });
  return it != states_.end() && it->first == c ? &it->second : nullptr;
}

bool FailureOracle::Connected(NodeId x, NodeId y, QueryTrace* trace) const {
  for (NodeId u : {x, y}) {
    if (u < 0 || u >= index_->n()) throw ContractViolation("query vertex id out of range");
  }
  const int cx = index_->component_of(x);
  const int cy = index_->component_of(y);
  if (cx != cy) {
    if (IsFailed(x) || IsFailed(y)) throw QueryOnFailedVertex("vertex is in the failed set");
    return false;
  }
  const UpdateState* s = state(cx);
  if (s == nullptr) return true;
  return s->Connected(index_->dfs_number(x), index_->dfs_number(y), trace);
}

UpdateCounters FailureOracle::totals() const {
  UpdateCounters sum;
  for (const auto& [c, s] : states_) {
    sum.type1_queries += s.counters().type1_queries;
    sum.type2_queries += s.counters().type2_queries;
    sum.level_ancestor_queries += s.counters().level_ancestor_queries;
  }
  return sum;
}

}  // namespace vfc
