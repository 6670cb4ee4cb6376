#include <doctest.h>

#include <functional>
#include <set>

#include "motive_forge/rootsys.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace motive_forge;

namespace {

// All reduced words of w, by peeling right descents (exchange property): every
// reduced word ends in a right descent s, and the prefix is a reduced word of ws.
void reduced_words(const WeylGroup& g, std::size_t idx, std::vector<int>& suffix, std::vector<std::vector<int>>& out) {
  if (g[idx].length == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int s = 0; s < g.root_system().rank; ++s) {
    std::size_t prev = g.times_simple(idx, s);
    if (g[prev].length != g[idx].length - 1) continue;
    suffix.push_back(s);
    reduced_words(g, prev, suffix, out);
    suffix.pop_back();
  }
}

std::vector<std::vector<int>> all_reduced_words(const WeylGroup& g, std::size_t idx) {
  std::vector<int> suffix;
  std::vector<std::vector<int>> out;
  reduced_words(g, idx, suffix, out);
  return out;
}

}  // namespace

TEST_CASE("build_root_system: ranks, positive roots, degrees") {
  struct Row {
    const char* label;
    int rank, n_pos;
    std::vector<int> degrees;
    std::uint64_t order;
  };
  const std::vector<Row> rows{
      {"A1", 1, 1, {2}, 2},          {"A2", 2, 3, {2, 3}, 6},        {"G2", 2, 6, {2, 6}, 12},
      {"B2", 2, 4, {2, 4}, 8},       {"B3", 3, 9, {2, 4, 6}, 48},    {"C3", 3, 9, {2, 4, 6}, 48},
      {"D4", 4, 12, {2, 4, 4, 6}, 192}, {"F4", 4, 24, {2, 6, 8, 12}, 1152},
      {"E6", 6, 36, {2, 5, 6, 8, 9, 12}, 51840}, {"A1xB2", 3, 5, {2, 2, 4}, 16},
  };
  for (const Row& row : rows) {
    CAPTURE(row.label);
    RootSystem rs = build_root_system(row.label);
    CHECK(rs.rank == row.rank);
    CHECK(rs.num_positive() == row.n_pos);
    CHECK(rs.degrees == row.degrees);
    CHECK(rs.weyl_order == row.order);
    // 2N + r = dim G and sum of (d_i - 1) = N
    int sum = 0;
    for (int d : rs.degrees) sum += d - 1;
    CHECK(sum == rs.num_positive());
  }
}

TEST_CASE("Cartan matrices match the standard tables") {
  CHECK(build_root_system("A2").cartan == std::vector<int>{2, -1, -1, 2});
  CHECK(build_root_system("B2").cartan == std::vector<int>{2, -2, -1, 2});
  CHECK(build_root_system("G2").cartan == std::vector<int>{2, -1, -3, 2});
  CHECK(build_root_system("B3").cartan == std::vector<int>{2, -1, 0, -1, 2, -2, 0, -1, 2});
  CHECK(build_root_system("C3").cartan == std::vector<int>{2, -1, 0, -1, 2, -1, 0, -2, 2});
  for (const char* t : {"A4", "B4", "C4", "D5", "F4", "E6", "E7", "E8"}) {
    CAPTURE(t);
    RootSystem rs = build_root_system(t, 1'000'000'000);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        if (i == j) {
          CHECK(rs.cartan_entry(i, j) == 2);
        } else {
          CHECK(rs.cartan_entry(i, j) <= 0);
          CHECK((rs.cartan_entry(i, j) == 0) == (rs.cartan_entry(j, i) == 0));
        }
      }
  }
}

TEST_CASE("build_root_system errors") {
  CHECK_ERROR_CODE(build_root_system("Q3"), ErrorCode::kUnknownLabel);
  CHECK_ERROR_CODE(build_root_system("A"), ErrorCode::kUnknownLabel);
  CHECK_ERROR_CODE(build_root_system(""), ErrorCode::kUnknownLabel);
  CHECK_ERROR_CODE(build_root_system("B1"), ErrorCode::kRankOutOfRange);
  CHECK_ERROR_CODE(build_root_system("C2"), ErrorCode::kRankOutOfRange);
  CHECK_ERROR_CODE(build_root_system("D3"), ErrorCode::kRankOutOfRange);
  CHECK_ERROR_CODE(build_root_system("G3"), ErrorCode::kRankOutOfRange);
  CHECK_ERROR_CODE(build_root_system("E9"), ErrorCode::kRankOutOfRange);
  CHECK_ERROR_CODE(build_root_system("A0"), ErrorCode::kRankOutOfRange);
  CHECK_ERROR_CODE(build_root_system("E7"), ErrorCode::kWeylCapExceeded);
  CHECK_ERROR_CODE(build_root_system("E8"), ErrorCode::kWeylCapExceeded);
  CHECK_ERROR_CODE(build_root_system("A3", 23), ErrorCode::kWeylCapExceeded);
  CHECK_NOTHROW(build_root_system("A3", 24));
}

TEST_CASE("trivial type has rank zero and the one-element Weyl group") {
  RootSystem rs = build_root_system("trivial");
  CHECK(rs.rank == 0);
  CHECK(rs.weyl_order == 1);
  WeylGroup g(rs);
  CHECK(g.size() == 1);
  CHECK(g[0].word_string() == "e");
}

TEST_CASE("enumerate_weyl agrees with brute-force closure of the reflection matrices") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "A1xA1", "A1xG2"}) {
    CAPTURE(t);
    RootSystem rs = build_root_system(t);
    auto brute = oracle::weyl_closure(rs.cartan, rs.rank);
    std::vector<WeylElement> ws = enumerate_weyl(rs);
    REQUIRE(ws.size() == brute.size());
    CHECK(ws.size() == rs.weyl_order);
    std::set<std::vector<int>> seen;
    for (const WeylElement& w : ws) {
      auto it = brute.find(testutil::action_as_ints(w));
      REQUIRE(it != brute.end());
      CHECK(it->second == w.length);
      CHECK(w.length == static_cast<int>(w.word.size()));
      CHECK(inversion_count(rs, w) == w.length);
      seen.insert(testutil::action_as_ints(w));
      // action is the product of the reflections of the word
      oracle::Matrix m = oracle::identity(rs.rank);
      for (auto letter : w.word) m = oracle::multiply(m, oracle::reflection(rs.cartan, rs.rank, letter), rs.rank);
      CHECK(m == testutil::action_as_ints(w));
    }
    CHECK(seen.size() == ws.size());
  }
}

TEST_CASE("enumeration order is (length, canonical word) and deterministic") {
  RootSystem rs = build_root_system("B3");
  auto a = enumerate_weyl(rs);
  auto b = enumerate_weyl(rs);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].word == b[i].word);
  for (std::size_t i = 1; i < a.size(); ++i) {
    bool ordered = a[i - 1].length < a[i].length || (a[i - 1].length == a[i].length && a[i - 1].word < a[i].word);
    CHECK(ordered);
  }
  CHECK(a.front().length == 0);
  int maxima = 0;
  for (const auto& w : a) maxima += w.length == rs.num_positive();
  CHECK(maxima == 1);
}

TEST_CASE("canonical word is the lexicographically least reduced word") {
  for (const char* t : {"A2", "A3", "B2", "B3", "G2"}) {
    CAPTURE(t);
    WeylGroup g(build_root_system(t));
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto words = all_reduced_words(g, i);
      REQUIRE(!words.empty());
      std::vector<int> canonical(g[i].word.begin(), g[i].word.end());
      CHECK(canonical == *std::min_element(words.begin(), words.end()));
    }
  }
}

TEST_CASE("enumerate_weyl examples") {
  auto a1 = enumerate_weyl(build_root_system("A1"));
  REQUIRE(a1.size() == 2);
  CHECK(a1[0].word_string() == "e");
  CHECK(a1[1].word_string() == "s1");
  auto lengths = [](const char* t) {
    std::vector<int> out;
    for (const auto& w : enumerate_weyl(build_root_system(t))) out.push_back(w.length);
    return out;
  };
  CHECK(lengths("A2") == std::vector<int>{0, 1, 1, 2, 2, 3});
  CHECK(lengths("B2") == std::vector<int>{0, 1, 1, 2, 2, 3, 3, 4});
  CHECK_ERROR_CODE(enumerate_weyl(build_root_system("A4"), 100), ErrorCode::kWeylCapExceeded);
}

TEST_CASE("longest element") {
  CHECK(longest_element(build_root_system("A1")).word_string() == "s1");
  CHECK(longest_element(build_root_system("A2")).word_string() == "s1s2s1");
  CHECK(longest_element(build_root_system("G2")).length == 6);
  for (const char* t : testutil::small_types()) {
    CAPTURE(t);
    WeylGroup g(build_root_system(t));
    const WeylElement& w0 = g[g.longest_index()];
    CHECK(w0.length == g.root_system().num_positive());
    CHECK(g.multiply(w0, w0).length == 0);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.multiply(w0, g[i]).length == w0.length - g[i].length);
  }
}

TEST_CASE("support and its complement") {
  RootSystem a2 = build_root_system("A2");
  WeylGroup g(a2);
  CHECK(complement_support(g[0]) == a2.simples());
  CHECK(support(g[0]).empty());
  CHECK(complement_support(simple_reflection(a2, 0)).indices() == std::vector<int>{2});
  CHECK(complement_support(g[g.longest_index()]).empty());
}

TEST_CASE("support is identical across all reduced words (|W| <= 48)") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA2", "A1xB2"}) {
    CAPTURE(t);
    WeylGroup g(build_root_system(t));
    REQUIRE(g.size() <= 48);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::uint32_t canonical = support(g[i]).mask();
      for (const auto& word : all_reduced_words(g, i)) {
        std::uint32_t letters = 0;
        for (int s : word) letters |= 1u << s;
        CHECK(letters == canonical);
      }
    }
  }
}

TEST_CASE("ascent and descent sets partition the simple roots") {
  WeylGroup g(build_root_system("B3"));
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK((ascent_set(g[i]) & descent_set(g[i])).empty());
    CHECK((ascent_set(g[i]) | descent_set(g[i])) == g.root_system().simples());
    for (int s = 0; s < 3; ++s) CHECK(descent_set(g[i]).contains(s) == (g[g.times_simple(i, s)].length < g[i].length));
  }
}

TEST_CASE("minimal coset representatives") {
  RootSystem a2 = build_root_system("A2");
  CHECK(minimal_coset_reps(a2, a2.simples()).size() == 1);
  CHECK(minimal_coset_reps(a2, ParabolicSubset()).size() == 6);
  auto reps = minimal_coset_reps(a2, ParabolicSubset::from_indices(std::vector<int>{1}, 2));
  std::vector<int> lengths;
  for (const auto& w : reps) lengths.push_back(w.length);
  CHECK(lengths == std::vector<int>{0, 1, 2});

  for (const char* t : {"A3", "B3", "G2", "A1xA2"}) {
    CAPTURE(t);
    WeylGroup g(build_root_system(t));
    const int r = g.root_system().rank;
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
      ParabolicSubset I(mask);
      auto w_i = parabolic_subgroup(g, I);
      auto w_I = minimal_coset_reps(g, I);
      CHECK(w_I.size() * w_i.size() == g.size());
      // unique length-additive factorization w = u v
      std::set<std::size_t> products;
      for (const auto& u : w_I) {
        for (int s : I.indices()) CHECK(g[g.times_simple(*g.find(u), s - 1)].length > u.length);
        for (const auto& v : w_i) {
          WeylElement p = g.multiply(u, v);
          CHECK(p.length == u.length + v.length);
          products.insert(*g.find(p));
        }
      }
      CHECK(products.size() == g.size());
      CHECK(coset_poincare(g, I) * parabolic_poincare(g, I) == weyl_poincare(g));
    }
  }
  CHECK_ERROR_CODE(ParabolicSubset::from_indices(std::vector<int>{3}, 2), ErrorCode::kInvalidSubset);
  CHECK_ERROR_CODE(ParabolicSubset::from_indices(std::vector<int>{0}, 2), ErrorCode::kInvalidSubset);
}

TEST_CASE("weyl_poincare examples and the product formula") {
  CHECK(weyl_poincare(build_root_system("A1")) == UPoly{1, 1});
  CHECK(weyl_poincare(build_root_system("A2")) == UPoly{1, 2, 2, 1});
  CHECK(weyl_poincare(build_root_system("B2")) == UPoly{1, 2, 2, 2, 1});
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "A2xG2"}) {
    CAPTURE(t);
    RootSystem rs = build_root_system(t);
    std::vector<std::int64_t> expected{1};
    for (int d : rs.degrees) expected = oracle::poly_mul(expected, std::vector<std::int64_t>(static_cast<std::size_t>(d), 1));
    CHECK(weyl_poincare(rs).coeffs() == expected);
    CHECK(degree_poincare(rs).coeffs() == expected);
  }
}
