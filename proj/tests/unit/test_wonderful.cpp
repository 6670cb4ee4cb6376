#include <doctest.h>

#include "motive_forge/cellular.hpp"
#include "motive_forge/wonderful.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace motive_forge;

namespace {

std::vector<std::int64_t> lefschetz_minus_one_pow(int k) {
  std::vector<std::int64_t> out{1};
  for (int i = 0; i < k; ++i) out = oracle::poly_mul(out, {-1, 1});
  return out;
}

// K0 oracle from the orbit structure: D_I is the union of the G x G-orbits O_J, J subset of I,
// and O_J fibres over G/P_J x G/P_J^- with fibre the adjoint group of the Levi of J:
// [O_J] = P_W * P_W / P_{W_J} * L^{N_J} (L - 1)^{|J|}.
std::vector<std::int64_t> orbit_sum(const RootSystem& rs, std::uint32_t I) {
  const auto pw = oracle::length_counts(oracle::weyl_closure(rs.cartan, rs.rank));
  std::vector<std::int64_t> total;
  for (std::uint32_t J = 0; J <= I; ++J) {
    if ((J & ~I) != 0) continue;
    int m = 0;
    const auto sub = oracle::sub_cartan(rs.cartan, rs.rank, J, m);
    const auto pwj = oracle::length_counts(oracle::weyl_closure(sub, m));
    const int nj = static_cast<int>(pwj.size()) - 1;
    std::vector<std::int64_t> term = oracle::poly_div(oracle::poly_mul(pw, pw), pwj);
    std::vector<std::int64_t> lnj(static_cast<std::size_t>(nj) + 1, 0);
    lnj.back() = 1;
    term = oracle::poly_mul(oracle::poly_mul(term, lnj), lefschetz_minus_one_pow(__builtin_popcount(J)));
    total = oracle::poly_add(total, term);
  }
  return total;
}

}  // namespace

TEST_CASE("face_lattice") {
  FaceLattice a1 = face_lattice(build_root_system("A1"));
  CHECK(a1.faces() == std::vector<std::uint32_t>{0, 1});
  CHECK(a1.level(0) == std::vector<std::uint32_t>{1});
  CHECK(a1.level(1) == std::vector<std::uint32_t>{0});
  FaceLattice a2 = face_lattice(build_root_system("A2"));
  CHECK(a2.faces().size() == 4);
  CHECK(a2.boundary(0b11) == std::vector<std::uint32_t>{0b01, 0b10});
  CHECK(a2.boundary(0b01) == std::vector<std::uint32_t>{0});
  CHECK(a2.boundary(0).empty());
  FaceLattice b2 = face_lattice(build_root_system("B2"));
  CHECK(b2.faces() == a2.faces());
  CHECK_ERROR_CODE(FaceLattice(2, {0b01}), ErrorCode::kInvalidLattice);
  CHECK_ERROR_CODE(FaceLattice(2, {0b11, 0b100}), ErrorCode::kInvalidLattice);
}

TEST_CASE("orbit closures of PGL_2") {
  RootSystem a1 = build_root_system("A1");
  OrbitClosure full = orbit_closure_cells(a1, a1.simples());
  std::vector<int> dims;
  for (const auto& c : full.cells) dims.push_back(c.dim);
  CHECK(dims == std::vector<int>{2, 3, 0, 1});
  CHECK(full.cell_polynomial() == UPoly{1, 1, 1, 1});
  OrbitClosure closed = orbit_closure_cells(a1, ParabolicSubset());
  dims.clear();
  for (const auto& c : closed.cells) dims.push_back(c.dim);
  CHECK(dims == std::vector<int>{1, 2, 0, 1});
  CHECK(closed.cell_polynomial() == UPoly{1, 2, 1});
}

TEST_CASE("orbit closure of PGL_3") {
  RootSystem a2 = build_root_system("A2");
  OrbitClosure full = orbit_closure_cells(a2, a2.simples());
  CHECK(full.cells.size() == 36);
  CHECK(full.top_dim() == 8);
  CHECK(full.cell_polynomial().eval(1) == 36);
  CHECK(full.cell_polynomial().is_palindromic());
}

TEST_CASE("orbit closures: counts, palindromicity, dimensions, closed orbit") {
  for (const char* t : testutil::small_types()) {
    CAPTURE(t);
    auto g = std::make_shared<const WeylGroup>(build_root_system(t));
    const RootSystem& rs = g->root_system();
    const UPoly flag = weyl_poincare(*g);
    const std::int64_t w = static_cast<std::int64_t>(g->size());
    int prev_top = -1;
    for (std::uint32_t mask = 0; mask < (1u << rs.rank); ++mask) {
      ParabolicSubset I(mask);
      const UPoly poly = orbit_closure_polynomial(*g, I);
      CHECK(poly.eval(1) == w * w);
      CHECK(poly.is_palindromic());
      CHECK(poly.low_degree() == 0);
      CHECK(poly.degree() == 2 * rs.num_positive() + I.size());
      if (mask == 0) CHECK(poly == flag * flag);
      if (I == rs.simples()) CHECK(poly.degree() == rs.group_dimension());
      if (__builtin_popcount(mask) == 1) CHECK(poly.degree() > prev_top);
      if (mask == 0) prev_top = poly.degree();
    }
  }
}

TEST_CASE("cell enumeration agrees with the polynomial shortcut") {
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    auto g = std::make_shared<const WeylGroup>(build_root_system(t));
    for (std::uint32_t mask = 0; mask < (1u << g->root_system().rank); ++mask) {
      OrbitClosure oc = orbit_closure_cells(g, ParabolicSubset(mask));
      CHECK(oc.cells.size() == g->size() * g->size());
      CHECK(oc.cell_polynomial() == orbit_closure_polynomial(*g, ParabolicSubset(mask)));
    }
  }
}

TEST_CASE("cell polynomials agree with the K0 orbit-sum oracle") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA2"}) {
    CAPTURE(t);
    RootSystem rs = build_root_system(t);
    WeylGroup g(rs);
    for (std::uint32_t mask = 0; mask < (1u << rs.rank); ++mask) {
      CAPTURE(mask);
      CHECK(orbit_closure_polynomial(g, ParabolicSubset(mask)).coeffs() == orbit_sum(rs, mask));
    }
  }
}

TEST_CASE("support-complement reading of I_u is not palindromic beyond rank one") {
  WeylGroup a1(build_root_system("A1"));
  CHECK(orbit_closure_polynomial(a1, ParabolicSubset(1), CellIndexRule::kSupportComplement) == UPoly{1, 1, 1, 1});
  WeylGroup a2(build_root_system("A2"));
  const UPoly literal = orbit_closure_polynomial(a2, ParabolicSubset(0b11), CellIndexRule::kSupportComplement);
  CHECK(literal.eval(1) == 36);
  CHECK(!literal.is_palindromic());
}

TEST_CASE("orbit_closure_motive and char modes") {
  WeylGroup a1(build_root_system("A1"));
  FlaggedMotive zero = orbit_closure_motive(a1, ParabolicSubset(1));
  CHECK(zero.motive.to_string() == "1 + L + L^2 + L^3");
  CHECK(zero.functor == FunctorFlag::kBoth);
  CHECK(zero.assumptions == std::vector<std::string>{"adjoint group"});
  FlaggedMotive p = orbit_closure_motive(a1, ParabolicSubset(1), CharMode::kPositive);
  CHECK(p.motive == zero.motive);
  CHECK(p.functor == FunctorFlag::kMc);
  for (std::int64_t q : {2, 3, 5})
    CHECK(lefschetz_specialize(zero.motive, q).constant == static_cast<std::int64_t>(oracle::projective_points(3, static_cast<int>(q)).size()));
}

TEST_CASE("boundary configuration") {
  WeylGroup a1(build_root_system("A1"));
  Configuration c1 = boundary_configuration(a1);
  REQUIRE(c1.size() == 1);
  CHECK(c1.components[0].cls.to_string() == "1 + 2*L + L^2");
  CHECK(c1.intersections.empty());

  WeylGroup a2(build_root_system("A2"));
  Configuration c2 = boundary_configuration(a2);
  REQUIRE(c2.size() == 2);
  CHECK(c2.components[0].name == "D{2}");
  CHECK(c2.components[1].name == "D{1}");
  REQUIRE(c2.intersections.size() == 1);
  CHECK(c2.intersections.at(0b11)->name == "D{}");
  CHECK(c2.intersections.at(0b11)->cls == TateExpr::from_lefschetz(orbit_closure_polynomial(a2, ParabolicSubset()).coeffs()));
  CHECK(check_mixed_tate_config(c2).depth() == 1);

  WeylGroup a3(build_root_system("A3"));
  Configuration c3 = boundary_configuration(a3);
  CHECK(c3.size() == 3);
  CHECK(c3.intersections.size() == 4);
  for (const auto& [mask, node] : c3.intersections) CHECK(node.has_value());
  CHECK(check_mixed_tate_config(c3).depth() == 2);

  // boundary = compactification minus open group (M^c level)
  for (const WeylGroup* g : {&a1, &a2, &a3}) {
    const TateLedger total(orbit_closure_motive(*g, g->root_system().simples()).motive);
    CHECK(to_k0(total - union_class(boundary_configuration(*g)).ledger) == group_class(g->root_system()));
  }
}
