#include "motive_forge/wonderful.hpp"

#include <algorithm>

#include "motive_forge/error.hpp"

namespace motive_forge {

FaceLattice::FaceLattice(int ground, std::vector<std::uint32_t> faces) : ground_(ground), faces_(std::move(faces)) {
  if (ground < 0 || ground > kMaxRank)
    throw Error(ErrorCode::kInvalidLattice, "face lattice ground set must have at most " + std::to_string(kMaxRank) + " elements");
  full_ = ground == 0 ? 0u : ((1u << ground) - 1u);
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  for (std::uint32_t f : faces_)
    if (f & ~full_) throw Error(ErrorCode::kInvalidLattice, "face outside the ground set");
  if (!contains(full_)) throw Error(ErrorCode::kInvalidLattice, "face lattice must contain its top face");
}

bool FaceLattice::contains(std::uint32_t face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face);
}

int FaceLattice::max_codim() const noexcept {
  int m = 0;
  for (std::uint32_t f : faces_) m = std::max(m, codim(f));
  return m;
}

std::vector<std::uint32_t> FaceLattice::level(int r) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t f : faces_)
    if (codim(f) == r) out.push_back(f);
  return out;
}

std::vector<std::uint32_t> FaceLattice::boundary(std::uint32_t face) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t facet : level(1)) {
    std::uint32_t meet = face & facet;
    if (meet != face && contains(meet) && std::find(out.begin(), out.end(), meet) == out.end()) out.push_back(meet);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint32_t> FaceLattice::meet(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t m = a & b;
  if (!contains(m)) return std::nullopt;
  return m;
}

FaceLattice face_lattice(const RootSystem& rs) {
  if (rs.rank > kMaxRank) throw Error(ErrorCode::kRankOutOfRange, "face lattice supports rank at most 20");
  std::vector<std::uint32_t> faces;
  const std::uint32_t count = 1u << rs.rank;
  faces.reserve(count);
  for (std::uint32_t m = 0; m < count; ++m) faces.push_back(m);
  return FaceLattice(rs.rank, std::move(faces));
}

namespace {

std::vector<int> u_exponents(const WeylGroup& group, ParabolicSubset face, CellIndexRule rule) {
  const int top = group.max_length();
  std::vector<int> exps;
  exps.reserve(group.size());
  for (const WeylElement& u : group.elements()) {
    ParabolicSubset index_set = rule == CellIndexRule::kAscentSet ? ascent_set(u) : complement_support(u);
    exps.push_back(top - u.length + (face & index_set).size());
  }
  return exps;
}

void check_face(const WeylGroup& group, ParabolicSubset face) {
  if (!face.is_subset_of(group.root_system().simples()))
    throw Error(ErrorCode::kInvalidSubset, "face is not a subset of the simple roots");
}

}  // namespace

UPoly OrbitClosure::cell_polynomial() const {
  std::vector<std::int64_t> c;
  for (const OrbitCell& cell : cells) {
    if (c.size() <= static_cast<std::size_t>(cell.dim)) c.resize(static_cast<std::size_t>(cell.dim) + 1, 0);
    ++c[static_cast<std::size_t>(cell.dim)];
  }
  return UPoly(std::move(c));
}

int OrbitClosure::top_dim() const {
  int m = -1;
  for (const OrbitCell& cell : cells) m = std::max(m, cell.dim);
  return m;
}

OrbitClosure orbit_closure_cells(std::shared_ptr<const WeylGroup> group, ParabolicSubset face, CellIndexRule rule) {
  check_face(*group, face);
  OrbitClosure out;
  out.face = face;
  const std::vector<int> u_part = u_exponents(*group, face, rule);
  const std::size_t n = group->size();
  out.cells.reserve(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      out.cells.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), u_part[u] + (*group)[v].length});
  out.group = std::move(group);
  return out;
}

OrbitClosure orbit_closure_cells(const RootSystem& rs, ParabolicSubset face, std::uint64_t weyl_cap, CellIndexRule rule) {
  return orbit_closure_cells(std::make_shared<const WeylGroup>(rs, weyl_cap), face, rule);
}

UPoly orbit_closure_polynomial(const WeylGroup& group, ParabolicSubset face, CellIndexRule rule) {
  check_face(group, face);
  std::vector<std::int64_t> c;
  for (int e : u_exponents(group, face, rule)) {
    if (c.size() <= static_cast<std::size_t>(e)) c.resize(static_cast<std::size_t>(e) + 1, 0);
    ++c[static_cast<std::size_t>(e)];
  }
  return UPoly(std::move(c)) * weyl_poincare(group);
}

FlaggedMotive orbit_closure_motive(const WeylGroup& group, ParabolicSubset face, CharMode mode) {
  FlaggedMotive out;
  out.motive = TateExpr::from_lefschetz(orbit_closure_polynomial(group, face).coeffs());
  out.functor = mode == CharMode::kZero ? FunctorFlag::kBoth : FunctorFlag::kMc;
  out.assumptions.emplace_back("adjoint group");
  if (mode == CharMode::kPositive) out.assumptions.emplace_back("cells only up to universal homeomorphism");
  return out;
}

std::string orbit_closure_name(ParabolicSubset face) {
  std::string s = "D{";
  bool first = true;
  for (int idx : face.indices()) {
    s += (first ? "" : ",") + std::to_string(idx);
    first = false;
  }
  return s + "}";
}

Configuration boundary_configuration(const WeylGroup& group, CharMode mode) {
  const int r = group.root_system().rank;
  const ParabolicSubset all = group.root_system().simples();
  Configuration c;
  std::map<std::uint32_t, ConfigNode> by_face;
  auto node_for = [&](ParabolicSubset face) -> const ConfigNode& {
    auto it = by_face.find(face.mask());
    if (it != by_face.end()) return it->second;
    ConfigNode node;
    node.name = orbit_closure_name(face);
    node.cls = orbit_closure_motive(group, face, mode).motive;
    node.dim = 2 * group.max_length() + face.size();
    return by_face.emplace(face.mask(), std::move(node)).first->second;
  };
  for (int i = 0; i < r; ++i) c.components.push_back(node_for(ParabolicSubset(all.mask() & ~(1u << i))));
  const std::uint32_t count = r == 0 ? 0u : (1u << r);
  for (std::uint32_t subset = 1; subset < count; ++subset) {
    if (__builtin_popcount(subset) < 2) continue;
    c.intersections.emplace(subset, node_for(ParabolicSubset(all.mask() & ~subset)));
  }
  return c;
}

FaceModel wonderful_model(const WeylGroup& group, CharMode mode) {
  FaceModel model{face_lattice(group.root_system()), {}};
  for (std::uint32_t face : model.lattice.faces())
    model.face_motives.emplace(face, orbit_closure_motive(group, ParabolicSubset(face), mode).motive);
  return model;
}

}  // namespace motive_forge
