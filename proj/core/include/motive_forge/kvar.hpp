#pragma once

// Symbolic Grothendieck ring of varieties: Z[L, opaque symbols].

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motive_forge/rootsys.hpp"
#include "motive_forge/tateexpr.hpp"
#include "motive_forge/upoly.hpp"

namespace motive_forge {

struct Monomial {
  int lefschetz = 0;
  /// Sorted by name, exponents >= 1.
  std::vector<std::pair<std::string, int>> symbols;

  /// "1", "L^3", "L*[C]", "[C]^2*[D]".
  std::string to_string() const;
  /// The symbol part alone; empty for pure powers of L.
  std::string symbol_string() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class K0Class {
 public:
  K0Class() = default;
  K0Class(std::int64_t constant);  // NOLINT: integers are classes

  static K0Class lefschetz(unsigned power = 1);
  /// Throws ParseError for an empty name or the reserved name "L".
  static K0Class symbol(const std::string& name);
  static K0Class from_poly(const UPoly& poly);

  const std::map<Monomial, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool has_symbols() const noexcept;
  std::int64_t coefficient(const Monomial& m) const;
  std::optional<std::int64_t> as_integer() const;
  /// Engaged when no opaque symbols occur.
  std::optional<UPoly> as_poly() const;

  K0Class& operator+=(const K0Class& other);
  K0Class& operator-=(const K0Class& other);
  friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
  friend K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }
  friend K0Class operator-(const K0Class& a) { return K0Class() - a; }
  friend K0Class operator*(const K0Class& a, const K0Class& b);
  K0Class pow(unsigned exp) const;
  friend bool operator==(const K0Class&, const K0Class&) = default;

  /// Terms grouped by symbol monomial, L-polynomial in descending degree:
  /// "L^3 - L", "(L^3 - L)*[C]".
  std::string to_string() const;

 private:
  void add(const Monomial& m, std::int64_t c);
  std::map<Monomial, std::int64_t> terms_;
};

/// Parses the text form produced by K0Class::to_string (and general +,-,*,^ and parentheses;
/// opaque symbols are written in brackets, e.g. "[C]").
K0Class parse_k0(std::string_view text);

/// sum of L^d over the cells.
K0Class class_from_cells(const CellMultiset& cells);
/// (L - 1)^r.
K0Class torus_class(int rank);
/// L^N * prod(L^d_i - 1) * (L - 1)^central_torus_rank.
K0Class group_class(const RootSystem& rs, int central_torus_rank = 0);
/// g * [curve].
K0Class bundle_over_curve_class(const K0Class& group, const std::string& curve_symbol = "[C]");
/// L -> q; opaque symbols stay symbolic.
K0Class specialize_points(const K0Class& c, std::int64_t q);

/// Image of an even expression under Z(p)[2p] -> L^p; opaque atoms become symbols.
K0Class to_k0(const TateLedger& e);

/// Over a general base only the difference [bundle] - [G][C] is available,
/// and it vanishes after an etale cover of the base.
struct CurveBundleDifference {
  K0Class difference;
  bool vanishes_after_etale_cover = true;
  std::string assumption = "char k does not divide |pi_1(G)|";
};

CurveBundleDifference curve_bundle_difference(const K0Class& group, const std::string& bundle_symbol = "[G-bundle]",
                                              const std::string& curve_symbol = "[C]");

}  // namespace motive_forge
