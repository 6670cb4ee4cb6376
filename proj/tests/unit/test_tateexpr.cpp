#include <doctest.h>

#include <random>

#include "motive_forge/tateexpr.hpp"
#include "oracles.hpp"
#include "random_exprs.hpp"
#include "test_util.hpp"

using namespace motive_forge;

TEST_CASE("from_cells") {
  CHECK(TateExpr::from_cells({0}) == TateExpr::unit());
  CHECK(TateExpr::from_cells({0, 1}) == sum(TateExpr::tate(0, 0), TateExpr::tate(1, 2)));
  CHECK(TateExpr::from_cells({0, 1, 1, 2}).to_lefschetz_string() == "1 + 2*L + L^2");
  CHECK(TateExpr::from_cells({0, 1}).is_pure_even());
  CHECK(TateExpr::from_cells({}).is_zero());
}

TEST_CASE("sum, tensor, twist_shift") {
  CHECK(tensor(TateExpr::tate(1, 2), TateExpr::tate(2, 4)) == TateExpr::tate(3, 6));
  CHECK(tensor(TateExpr::from_cells({0, 1}), TateExpr::from_cells({0, 1})) == TateExpr::from_cells({0, 1, 1, 2}));
  CHECK(twist_shift(TateExpr::opaque("M(X)"), 1, 1) == TateExpr::opaque("M(X)", 1, 1));
  CHECK(twist_shift(TateExpr::opaque("M(X)"), 1, 1).to_string() == "M(X)(1)[1]");
  CHECK(tensor(TateExpr::opaque("M(X)"), TateExpr::from_cells({0, 1})).to_string() == "M(X) + M(X)(1)[2]");
  CHECK_ERROR_CODE(tensor(TateExpr::opaque("M(X)"), TateExpr::opaque("M(Y)")), ErrorCode::kOpaqueTensor);
  CHECK_ERROR_CODE(TateExpr::tate(-1, 0), ErrorCode::kNegativeTwist);
  CHECK_ERROR_CODE(twist_shift(TateExpr::unit(), -1, -2), ErrorCode::kNegativeTwist);
}

TEST_CASE("rendering") {
  TateExpr e = sum(TateExpr::tate(0, 0), TateExpr::tate(1, 2, 2));
  CHECK(e.to_bigraded_string() == "Z(0)[0] + 2*Z(1)[2]");
  CHECK(e.to_string() == "1 + 2*L");
  CHECK(sum(e, TateExpr::tate(1, 1)).to_string() == "Z(0)[0] + Z(1)[1] + 2*Z(1)[2]");
  CHECK(TateExpr().to_string() == "0");
}

TEST_CASE("dual_smooth_proper") {
  CHECK(dual_smooth_proper(TateExpr::unit(), 0) == TateExpr::unit());
  CHECK(dual_smooth_proper(TateExpr::from_cells({0, 1, 2, 3}), 3) == TateExpr::from_cells({0, 1, 2, 3}));
  CHECK(dual_smooth_proper(sum(TateExpr::unit(), TateExpr::tate(1, 2, 2)), 2) == sum(TateExpr::tate(2, 4), TateExpr::tate(1, 2, 2)));
  CHECK_ERROR_CODE(dual_smooth_proper(TateExpr::opaque("M(X)"), 2), ErrorCode::kNotPureEven);
  CHECK_ERROR_CODE(dual_smooth_proper(TateExpr::tate(1, 1), 2), ErrorCode::kNotPureEven);
  CHECK_ERROR_CODE(dual_smooth_proper(TateExpr::tate(3, 6), 2), ErrorCode::kTwistExceedsDimension);
}

TEST_CASE("lefschetz_specialize against projective point counts") {
  CHECK(lefschetz_specialize(TateExpr::from_cells({0, 1}), 2).constant == 3);
  CHECK(lefschetz_specialize(TateExpr::from_cells({0, 1, 2, 3}), 3).constant == 40);
  CHECK(lefschetz_specialize(TateExpr::unit(), 7).constant == 1);
  for (int n = 0; n <= 3; ++n)
    for (int q : {2, 3, 5}) {
      std::vector<int> cells;
      for (int d = 0; d <= n; ++d) cells.push_back(d);
      CHECK(lefschetz_specialize(TateExpr::from_cells(CellMultiset(cells)), q).constant ==
            static_cast<std::int64_t>(oracle::projective_points(n, q).size()));
    }
  LefschetzValue v = lefschetz_specialize(sum(TateExpr::unit(), TateExpr::opaque("M(X)", 1, 2)), 3);
  CHECK(v.constant == 1);
  CHECK(v.symbolic.at("M(X)") == 3);
  CHECK_ERROR_CODE(lefschetz_specialize(TateExpr::tate(1, 1), 2), ErrorCode::kNotPureEven);
}

TEST_CASE("cell multisets: unions and products") {
  CellMultiset a{0, 1}, b{0, 2, 2};
  CHECK(TateExpr::from_cells(a.disjoint_union(b)) == sum(TateExpr::from_cells(a), TateExpr::from_cells(b)));
  CHECK(TateExpr::from_cells(a.product(b)) == tensor(TateExpr::from_cells(a), TateExpr::from_cells(b)));
  CHECK(TateExpr::from_cells(a.product(b)).to_cells() == a.product(b));
}

TEST_CASE("ring laws on random expressions") {
  std::mt19937 rng(20261014);
  for (int i = 0; i < 300; ++i) {
    TateExpr a = testutil::random_tate(rng, false), b = testutil::random_tate(rng, false), c = testutil::random_tate(rng, false);
    CHECK(sum(a, b) == sum(b, a));
    CHECK(sum(sum(a, b), c) == sum(a, sum(b, c)));
    CHECK(tensor(a, b) == tensor(b, a));
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    CHECK(tensor(a, sum(b, c)) == sum(tensor(a, b), tensor(a, c)));
    CHECK(tensor(a, TateExpr::unit()) == a);
    TateExpr ea = testutil::random_tate(rng, true), eb = testutil::random_tate(rng, true);
    for (std::int64_t q : {2, 3}) {
      CHECK(lefschetz_specialize(sum(ea, eb), q).constant == lefschetz_specialize(ea, q).constant + lefschetz_specialize(eb, q).constant);
      CHECK(lefschetz_specialize(tensor(ea, eb), q).constant == lefschetz_specialize(ea, q).constant * lefschetz_specialize(eb, q).constant);
    }
  }
}

TEST_CASE("dual is an involution on random pure-even inputs") {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    TateExpr a = testutil::random_tate(rng, true);
    const int n = std::max(a.max_twist(), 0) + static_cast<int>(rng() % 3);
    CHECK(dual_smooth_proper(dual_smooth_proper(a, n), n) == a);
  }
}

TEST_CASE("TateLedger") {
  TateLedger l = TateLedger(TateExpr::from_cells({0, 1, 2, 3})) - TateLedger(TateExpr::from_cells({1, 2, 2, 3}));
  CHECK(l.to_string() == "-L^2 + 1");
  CHECK(!l.is_effective());
  CHECK(!l.to_effective());
  TateLedger m = TateLedger(TateExpr::from_cells({0, 1, 1})) - TateLedger(TateExpr::from_cells({1}));
  REQUIRE(m.to_effective());
  CHECK(*m.to_effective() == TateExpr::from_cells({0, 1}));
  CHECK(dual_ledger(l, 3).to_string() == "L^3 - L");
  CHECK((l + l).to_string() == l.scaled(2).to_string());
  CHECK((l - l).is_zero());
}
