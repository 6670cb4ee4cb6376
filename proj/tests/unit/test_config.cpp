#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "motive_forge/config.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace motive_forge;

namespace {

TateExpr pn(int n) {
  std::vector<int> dims(static_cast<std::size_t>(n) + 1);
  std::iota(dims.begin(), dims.end(), 0);
  return TateExpr::from_cells(CellMultiset(dims));
}

// Coordinate subspaces of P^n given by the coordinates allowed to be nonzero.
Configuration coordinate_config(const std::vector<std::uint32_t>& supports) {
  Configuration c;
  for (std::uint32_t s : supports) c.components.push_back({"P" + std::to_string(s), pn(__builtin_popcount(s) - 1), __builtin_popcount(s) - 1});
  const std::uint32_t count = 1u << supports.size();
  for (std::uint32_t J = 1; J < count; ++J) {
    if (__builtin_popcount(J) < 2) continue;
    std::uint32_t meet = ~0u;
    for (std::size_t i = 0; i < supports.size(); ++i)
      if ((J >> i) & 1u) meet &= supports[i];
    if (meet == 0) {
      c.intersections.emplace(J, std::nullopt);
    } else {
      const int d = __builtin_popcount(meet) - 1;
      c.intersections.emplace(J, ConfigNode{"meet", pn(d), d});
    }
  }
  return c;
}

std::int64_t at(const UnionClass& u, std::int64_t q) { return *specialize_points(u.k0(), q).as_integer(); }

std::vector<std::uint32_t> random_supports(std::mt19937& rng, int n, int k) {
  std::uniform_int_distribution<std::uint32_t> pick(1, (1u << (n + 1)) - 1);
  std::vector<std::uint32_t> out;
  while (static_cast<int>(out.size()) < k) {
    std::uint32_t s = pick(rng);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("check_mixed_tate_config examples") {
  Configuration single{{{"P1", pn(1), 1}}, {}};
  CHECK(check_mixed_tate_config(single).depth() == 0);

  Configuration two_lines{{{"L1", pn(1), 1}, {"L2", pn(1), 1}}, {{0b11, ConfigNode{"pt", pn(0), 0}}}};
  MixedTateCertificate cert = check_mixed_tate_config(two_lines);
  CHECK(cert.depth() == 1);
  CHECK(cert.levels[1] == std::vector<std::uint32_t>{0b11});
  CHECK(cert.checked_nodes == 3);
}

TEST_CASE("configuration refusals") {
  Configuration opaque{{{"X", TateExpr::opaque("M(X)"), 1}}, {}};
  CHECK_ERROR_CODE(check_mixed_tate_config(opaque), ErrorCode::kNonTateComponent);
  Configuration odd{{{"L1", pn(1), 1}, {"L2", pn(1), 1}}, {{0b11, ConfigNode{"pt", TateExpr::tate(1, 1), 0}}}};
  CHECK_ERROR_CODE(check_mixed_tate_config(odd), ErrorCode::kNonTateComponent);
  Configuration too_big{{{"L1", pn(1), 1}, {"L2", pn(1), 1}}, {{0b11, ConfigNode{"P2", pn(2), 2}}}};
  CHECK_ERROR_CODE(check_mixed_tate_config(too_big), ErrorCode::kInconsistentIntersections);
  // triple intersection nonempty while a pair is empty
  Configuration broken = coordinate_config({0b0011, 0b0110, 0b1100});
  broken.intersections[0b111] = ConfigNode{"pt", pn(0), 0};
  CHECK_ERROR_CODE(check_mixed_tate_config(broken), ErrorCode::kInconsistentIntersections);
  Configuration stray{{{"L1", pn(1), 1}}, {{0b11, ConfigNode{"pt", pn(0), 0}}}};
  CHECK_ERROR_CODE(check_mixed_tate_config(stray), ErrorCode::kInconsistentIntersections);
  CHECK_ERROR_CODE(check_mixed_tate_config(Configuration{}), ErrorCode::kInconsistentIntersections);
}

TEST_CASE("union_class examples") {
  Configuration two_lines{{{"L1", pn(1), 1}, {"L2", pn(1), 1}}, {{0b11, ConfigNode{"pt", pn(0), 0}}}};
  CHECK(union_class(two_lines).as_tate().to_string() == "1 + 2*L");
  Configuration triangle = coordinate_config({0b011, 0b110, 0b101});
  CHECK(union_class(triangle).as_tate().to_string() == "3*L");
  CHECK(check_mixed_tate_config(triangle).depth() == 1);
  Configuration single{{{"P1", pn(1), 1}}, {}};
  CHECK(union_class(single).as_tate() == pn(1));
}

TEST_CASE("union of coordinate subspaces: point counts in P^n (n <= 4)") {
  std::mt19937 rng(42);
  int cases = 0;
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      const int k = 1 + static_cast<int>(rng() % std::min(4u, (1u << (n + 1)) - 1));
      auto supports = random_supports(rng, n, k);
      UnionClass u = union_class(coordinate_config(supports));
      for (int q : {2, 3}) {
        CAPTURE(n);
        CAPTURE(q);
        CHECK(at(u, q) == oracle::count_union_of_coordinate_subspaces(n, q, supports));
      }
      ++cases;
    }
  CHECK(cases >= 10);
}

TEST_CASE("union_class is independent of component order") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto supports = random_supports(rng, 3, 4);
    const TateLedger expected = union_class(coordinate_config(supports)).ledger;
    std::shuffle(supports.begin(), supports.end(), rng);
    CHECK(union_class(coordinate_config(supports)).ledger == expected);
  }
}

TEST_CASE("sub-configurations never exceed the full union at L = 2") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto supports = random_supports(rng, 3, 4);
    const std::int64_t full = at(union_class(coordinate_config(supports)), 2);
    for (std::uint32_t keep = 1; keep < 16; ++keep) {
      std::vector<std::uint32_t> sub;
      for (int i = 0; i < 4; ++i)
        if ((keep >> i) & 1u) sub.push_back(supports[static_cast<std::size_t>(i)]);
      CHECK(at(union_class(coordinate_config(sub)), 2) <= full);
    }
  }
}

TEST_CASE("certificate deduplicates equal intersections") {
  // Two planes in P^3 and the line they share: every pairwise meet is that line.
  const std::vector<std::uint32_t> supports{0b0111, 0b1011, 0b0011};
  Configuration c = coordinate_config(supports);
  MixedTateCertificate cert = check_mixed_tate_config(c);
  REQUIRE(cert.levels.size() == 2);
  CHECK(cert.levels[1].size() == 1);
  for (int q : {2, 3})
    CHECK(*specialize_points(union_class(c).k0(), q).as_integer() == oracle::count_union_of_coordinate_subspaces(3, q, supports));
}
