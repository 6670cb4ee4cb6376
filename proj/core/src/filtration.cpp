#include "motive_forge/filtration.hpp"

#include <algorithm>

#include "motive_forge/checked.hpp"
#include "motive_forge/config.hpp"
#include "motive_forge/error.hpp"

namespace motive_forge {

TriangleRecord make_triangle(MotiveTerm left, MotiveTerm middle, MotiveTerm right, std::string provenance) {
  TriangleRecord t{std::move(left), std::move(middle), std::move(right), std::move(provenance), false};
  t.split_verified = t.left.cls + t.right.cls == t.middle.cls && t.left.cls.is_effective() &&
                     t.middle.cls.is_effective() && t.right.cls.is_effective();
  return t;
}

const FiltrationNode& FiltrationTree::node(std::uint32_t face) const {
  auto it = std::find_if(nodes.begin(), nodes.end(), [face](const FiltrationNode& n) { return n.face == face; });
  if (it == nodes.end()) throw Error(ErrorCode::kInvalidLattice, "face not present in the filtration tree");
  return *it;
}

namespace {

std::string face_label(std::uint32_t face) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!((face >> i) & 1u)) continue;
    s += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

std::int64_t binomial(int n, int k) {
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = checked::mul(b, n - k + i) / i;
  return b;
}

}  // namespace

FiltrationTree nested_filtration(const FaceLattice& lattice, const std::map<std::uint32_t, TateExpr>& face_motive,
                                 const FibrationBase& base) {
  std::map<std::uint32_t, TateLedger> closure;
  for (std::uint32_t face : lattice.faces()) {
    auto it = face_motive.find(face);
    if (it == face_motive.end())
      throw Error(ErrorCode::kInvalidLattice, "no fiber motive given for face " + face_label(face));
    if (!it->second.is_pure_even())
      throw Error(ErrorCode::kNotPureEven, "fiber motive of face " + face_label(face) + " is not pure Tate even");
    CellMultiset cells = it->second.to_cells();
    const bool smooth = it->second.is_palindromic(cells.top_dimension());
    FibrationSpec spec{base, CellularVariety::make("D" + face_label(face), std::move(cells), true, smooth),
                       LocalTriviality::kZariski, false};
    closure.emplace(face, TateLedger(leray_hirsch(spec).motive));
  }

  auto union_of = [&](const std::vector<std::uint32_t>& members) {
    return inclusion_exclusion(static_cast<int>(members.size()), [&](std::uint32_t subset) -> std::optional<TateLedger> {
      std::uint32_t meet = lattice.top();
      for (std::size_t i = 0; i < members.size(); ++i)
        if ((subset >> i) & 1u) meet &= members[i];
      if (!lattice.contains(meet)) return std::nullopt;
      return closure.at(meet);
    });
  };

  FiltrationTree tree{lattice, {}, {}, {}, {}};
  std::map<std::uint32_t, TateLedger> open_part;
  const int max_codim = lattice.max_codim();
  for (int r = 0; r <= max_codim; ++r) {
    for (std::uint32_t face : lattice.level(r)) {
      std::vector<std::uint32_t> boundary = lattice.boundary(face);
      TateLedger boundary_class = union_of(boundary);
      TateLedger open = closure.at(face) - boundary_class;
      std::string name = "D" + face_label(face);
      TriangleRecord t = make_triangle({"Mc(boundary of " + name + ")", boundary_class, FunctorFlag::kMc},
                                       {"Mc(" + name + ")", closure.at(face), FunctorFlag::kMc},
                                       {"Mc(" + name + " open part)", open, FunctorFlag::kMc},
                                       "boundary triangle; open part by subtraction");
      if (!open.is_effective() && !open.is_zero()) tree.negative_faces.push_back(face);
      open_part.emplace(face, open);
      tree.nodes.push_back({face, r, std::move(t), std::move(boundary)});
    }
  }

  // Inclusion-exclusion over a level costs 2^|Q_r|; wide levels instead sum the open
  // strata of every face of codimension >= r (the union is down-closed).
  bool telescoped = false;
  auto level_union = [&](int r) {
    const std::vector<std::uint32_t> members = lattice.level(r);
    if (members.size() <= kMaxInclusionExclusion) return union_of(members);
    telescoped = true;
    TateLedger total;
    for (const auto& [face, open] : open_part)
      if (lattice.codim(face) >= r) total += open;
    return total;
  };

  for (int r = 0; r <= max_codim; ++r) {
    const std::vector<std::uint32_t> here = lattice.level(r);
    telescoped = false;
    TateLedger middle = level_union(r);
    TateLedger left = r < max_codim ? level_union(r + 1) : TateLedger();
    TateLedger graded;
    for (std::uint32_t face : here) graded += open_part.at(face);
    std::string provenance = r == 0 ? "root triangle: boundary, compactification, open part" : "level triangle";
    provenance += telescoped ? "; unions summed over open strata" : "; unions by inclusion-exclusion";
    tree.levels.push_back(make_triangle({"Mc(union Q_" + std::to_string(r + 1) + ")", left, FunctorFlag::kMc},
                                        {"Mc(union Q_" + std::to_string(r) + ")", middle, FunctorFlag::kMc},
                                        {"sum over Q_" + std::to_string(r) + " of open parts", graded, FunctorFlag::kMc},
                                        provenance));
  }
  tree.root_open_class = open_part.at(lattice.top());
  return tree;
}

FiltrationTree nested_filtration(const FaceModel& model, const FibrationBase& base) {
  return nested_filtration(model.lattice, model.face_motives, base);
}

FaceModel simplex_lattice(int n) {
  if (n < 1) throw Error(ErrorCode::kRankOutOfRange, "simplex dimension must be at least 1");
  if (n + 1 > kMaxRank) throw Error(ErrorCode::kRankOutOfRange, "simplex has too many vertices");
  std::vector<std::uint32_t> faces;
  const std::uint32_t count = 1u << (n + 1);
  for (std::uint32_t m = 1; m < count; ++m) faces.push_back(m);
  FaceModel model{FaceLattice(n + 1, faces), {}};
  for (std::uint32_t face : faces) {
    std::vector<int> dims;
    for (int d = 0; d < __builtin_popcount(face); ++d) dims.push_back(d);
    model.face_motives.emplace(face, TateExpr::from_cells(CellMultiset(std::move(dims))));
  }
  return model;
}

std::vector<TriangleRecord> slice_filtration_torus(int rank, const TateExpr& base) {
  if (rank < 0) throw Error(ErrorCode::kRankOutOfRange, "torus rank must be non-negative");
  std::vector<TateExpr> lambda;
  for (int p = 0; p <= rank; ++p) lambda.push_back(twist_shift(base, p, p).scaled(binomial(rank, p)));
  std::vector<TateExpr> nu(static_cast<std::size_t>(rank) + 2);
  for (int p = rank; p >= 0; --p) nu[static_cast<std::size_t>(p)] = sum(nu[static_cast<std::size_t>(p) + 1], lambda[static_cast<std::size_t>(p)]);

  std::vector<TriangleRecord> out;
  for (int p = 0; p <= rank; ++p) {
    auto idx = static_cast<std::size_t>(p);
    out.push_back(make_triangle({"nu>=" + std::to_string(p + 1), nu[idx + 1], FunctorFlag::kM},
                                {"nu>=" + std::to_string(p), nu[idx], FunctorFlag::kM},
                                {"lambda_" + std::to_string(p), lambda[idx], FunctorFlag::kM},
                                "slice filtration of a split torus bundle"));
  }
  return out;
}

TateExpr split_group_motive(const RootSystem& rs) {
  TateExpr m = TateExpr::unit();
  for (int d : rs.degrees) m = tensor(m, sum(TateExpr::unit(), TateExpr::tate(d, 2 * d - 1)));
  return m;
}

CurveBundleReport curve_bundle_triangles(const RootSystem& rs, int central_rank, const std::string& curve) {
  if (central_rank < 0) throw Error(ErrorCode::kRankOutOfRange, "central torus rank must be non-negative");
  CurveBundleReport report;
  report.group_motive = split_group_motive(rs);
  const TateExpr punctured_curve = sum(TateExpr::unit(), TateExpr::opaque("M1(" + curve + ")"));

  TateExpr left = tensor(report.group_motive, punctured_curve);
  TateExpr right = twist_shift(report.group_motive, report.gysin_twist, 2 * report.gysin_twist);
  TateExpr semisimple_bundle = sum(left, right);
  report.triangles.push_back(make_triangle({"M(G^s) (x) M(" + curve + " minus p)", left, FunctorFlag::kM},
                                           {"M(G_s-bundle)", semisimple_bundle, FunctorFlag::kM},
                                           {"M(G^s)(1)[2]", right, FunctorFlag::kM},
                                           "trivialization over the punctured curve and the fiber at p"));

  if (central_rank > 0) {
    for (TriangleRecord& t : slice_filtration_torus(central_rank, semisimple_bundle)) {
      t.provenance = "slice filtration of the central torus bundle over the G_s-bundle";
      report.triangles.push_back(std::move(t));
    }
  }

  const K0Class semisimple = group_class(rs, 0);
  const K0Class curve_class = K0Class::symbol("[" + curve + "]");
  report.k0_shadow = (semisimple * (curve_class - K0Class(1)) + semisimple) * torus_class(central_rank);
  report.assumptions = {"char k does not divide |pi_1(G)|", "connected center", "classes over a trivializing extension k'"};
  return report;
}

}  // namespace motive_forge
