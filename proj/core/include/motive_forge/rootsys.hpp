#pragma once

// Root systems and Weyl groups of split reductive groups.
//
// Simple roots are indexed 0..r-1 internally; labels and reports use the
// 1-based Bourbaki numbering. The Cartan matrix stores
// cartan(i, j) = <alpha_i, alpha_j^vee>, so s_j(alpha_i) = alpha_i - cartan(i, j) alpha_j.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "motive_forge/upoly.hpp"

namespace motive_forge {

inline constexpr std::uint64_t kDefaultWeylCap = 1'000'000;
inline constexpr int kMaxRank = 20;

struct SimpleType {
  char series = 'A';
  int rank = 1;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// A subset I of the simple roots, as a bitmask (bit i = alpha_{i+1}).
class ParabolicSubset {
 public:
  constexpr ParabolicSubset() = default;
  constexpr explicit ParabolicSubset(std::uint32_t mask) : mask_(mask) {}

  static ParabolicSubset all(int rank) {
    return ParabolicSubset(rank >= 32 ? ~0u : ((1u << rank) - 1u));
  }
  /// From 1-based simple-root indices; throws InvalidSubset if an index is outside 1..rank.
  static ParabolicSubset from_indices(std::span<const int> one_based, int rank);

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool contains(int i) const noexcept { return (mask_ >> i) & 1u; }
  int size() const noexcept { return __builtin_popcount(mask_); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool is_subset_of(ParabolicSubset other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  ParabolicSubset complement(int rank) const noexcept { return ParabolicSubset(all(rank).mask_ & ~mask_); }
  /// 1-based indices, ascending.
  std::vector<int> indices() const;

  constexpr ParabolicSubset operator&(ParabolicSubset o) const noexcept { return ParabolicSubset(mask_ & o.mask_); }
  constexpr ParabolicSubset operator|(ParabolicSubset o) const noexcept { return ParabolicSubset(mask_ | o.mask_); }
  friend constexpr bool operator==(ParabolicSubset, ParabolicSubset) = default;

 private:
  std::uint32_t mask_ = 0;
};

struct RootSystem {
  std::string label;
  std::vector<SimpleType> components;
  int rank = 0;
  /// Row-major rank x rank.
  std::vector<int> cartan;
  /// Positive roots in the simple-root basis, simple roots first, then by height.
  std::vector<std::vector<int>> positives;
  /// Invariant degrees, concatenated over components (each component ascending).
  std::vector<int> degrees;
  std::uint64_t weyl_order = 1;

  int cartan_entry(int i, int j) const { return cartan[static_cast<std::size_t>(i * rank + j)]; }
  int num_positive() const noexcept { return static_cast<int>(positives.size()); }
  /// dim G = 2N + r for the semisimple group of this type.
  int group_dimension() const noexcept { return 2 * num_positive() + rank; }
  ParabolicSubset simples() const { return ParabolicSubset::all(rank); }
};

/// Parses labels such as "A2", "G2", "A1xB2" or "trivial" (rank 0).
/// Throws UnknownLabel, RankOutOfRange, or WeylCapExceeded when prod(degrees) > weyl_cap.
RootSystem build_root_system(std::string_view label, std::uint64_t weyl_cap = kDefaultWeylCap);

/// Cartan matrix rows for one irreducible type, standard Bourbaki numbering.
std::vector<int> cartan_matrix(SimpleType type);
std::vector<int> invariant_degrees(SimpleType type);

struct WeylElement {
  /// Canonical (ShortLex least) reduced word, 0-based letters.
  std::vector<std::uint8_t> word;
  /// Column j is w(alpha_j) in the simple-root basis; row-major rank x rank.
  std::vector<std::int8_t> action;
  int length = 0;
  int rank = 0;

  std::int8_t entry(int row, int col) const { return action[static_cast<std::size_t>(row * rank + col)]; }
  /// "e" for the identity, otherwise "s1s2s1" with 1-based letters.
  std::string word_string() const;
  /// 1-based letters.
  std::vector<int> word_indices() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action == b.action; }
};

/// The full group, enumerated breadth-first from the identity.
/// Elements are sorted by (length, canonical word); index 0 is the identity.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs, std::uint64_t weyl_cap = kDefaultWeylCap);

  const RootSystem& root_system() const noexcept { return rs_; }
  std::span<const WeylElement> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const WeylElement& operator[](std::size_t idx) const { return elements_[idx]; }
  std::size_t longest_index() const noexcept { return elements_.size() - 1; }
  int max_length() const noexcept { return elements_.back().length; }

  std::optional<std::size_t> find(const WeylElement& w) const;
  /// Index of elements()[idx] * s_i.
  std::size_t times_simple(std::size_t idx, int i) const { return right_[idx * static_cast<std::size_t>(rank_) + i]; }
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;

 private:
  RootSystem rs_;
  int rank_ = 0;
  std::vector<WeylElement> elements_;
  std::vector<std::uint32_t> right_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::uint64_t weyl_cap = kDefaultWeylCap);
WeylElement longest_element(const RootSystem& rs, std::uint64_t weyl_cap = kDefaultWeylCap);

/// Simple-reflection matrix s_i on the simple-root basis.
WeylElement simple_reflection(const RootSystem& rs, int i);
/// Image of a root-coordinate vector under w.
std::vector<int> apply(const WeylElement& w, std::span<const int> coords);
/// Number of positive roots sent to negative roots.
int inversion_count(const RootSystem& rs, const WeylElement& w);

/// Letters of the canonical reduced word.
ParabolicSubset support(const WeylElement& w);
/// Delta minus support(w).
ParabolicSubset complement_support(const WeylElement& w);
/// {alpha_i : l(w s_i) > l(w)}, i.e. w(alpha_i) is positive.
ParabolicSubset ascent_set(const WeylElement& w);
/// {alpha_i : l(w s_i) < l(w)}.
ParabolicSubset descent_set(const WeylElement& w);

/// Minimal-length representatives of W / W_I, in canonical order.
std::vector<WeylElement> minimal_coset_reps(const WeylGroup& group, ParabolicSubset subset);
std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs, ParabolicSubset subset,
                                            std::uint64_t weyl_cap = kDefaultWeylCap);
/// Elements of W_I (support contained in I), in canonical order.
std::vector<WeylElement> parabolic_subgroup(const WeylGroup& group, ParabolicSubset subset);

/// sum over w of t^l(w), computed by enumeration.
UPoly weyl_poincare(const WeylGroup& group);
UPoly weyl_poincare(const RootSystem& rs, std::uint64_t weyl_cap = kDefaultWeylCap);
/// prod_i (1 + t + ... + t^(d_i - 1)) from the invariant degrees alone.
UPoly degree_poincare(const RootSystem& rs);
UPoly parabolic_poincare(const WeylGroup& group, ParabolicSubset subset);
UPoly coset_poincare(const WeylGroup& group, ParabolicSubset subset);

}  // namespace motive_forge
