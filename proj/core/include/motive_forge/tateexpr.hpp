#pragma once

// Formal sums of Tate objects Z(p)[q], optionally tensored with one opaque
// base-motive symbol per term. Everything here is a split / associated-graded
// class: extension data is never represented.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace motive_forge {

/// Empty name is the unit motive Z(0)[0]; anything else is an opaque symbol like "M(X)".
struct Atom {
  std::string name;

  static Atom unit() { return {}; }
  bool is_unit() const noexcept { return name.empty(); }
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct TateKey {
  Atom atom;
  int twist = 0;  // p
  int shift = 0;  // q
  friend auto operator<=>(const TateKey&, const TateKey&) = default;
};

/// Dimensions of affine cells; kept sorted.
class CellMultiset {
 public:
  CellMultiset() = default;
  CellMultiset(std::initializer_list<int> dims);
  explicit CellMultiset(std::vector<int> dims);

  const std::vector<int>& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return dims_.size(); }
  bool empty() const noexcept { return dims_.empty(); }
  int top_dimension() const noexcept { return dims_.empty() ? -1 : dims_.back(); }
  /// Cell structure of a product: all pairwise sums.
  CellMultiset product(const CellMultiset& other) const;
  CellMultiset disjoint_union(const CellMultiset& other) const;
  friend bool operator==(const CellMultiset&, const CellMultiset&) = default;

 private:
  std::vector<int> dims_;
};

class TateLedger;

/// Nonnegative formal sum of atom (x) Z(p)[q] with p >= 0.
class TateExpr {
 public:
  TateExpr() = default;

  static TateExpr unit() { return tate(0, 0); }
  static TateExpr tate(int twist, int shift, std::int64_t mult = 1);
  static TateExpr opaque(const std::string& name, int twist = 0, int shift = 0, std::int64_t mult = 1);
  /// L^d per cell of dimension d.
  static TateExpr from_cells(const CellMultiset& cells);
  /// sum_d coeffs[d] * Z(d)[2d]; throws NegativeMultiplicity on a negative coefficient.
  static TateExpr from_lefschetz(std::span<const std::int64_t> coeffs);

  const std::map<TateKey, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t multiplicity(const TateKey& key) const;
  bool has_opaque() const noexcept;
  /// Distinct opaque atom names.
  std::vector<std::string> opaque_atoms() const;
  /// Unit atoms only and q = 2p everywhere.
  bool is_pure_even() const noexcept;
  /// q = 2p everywhere, opaque atoms allowed.
  bool is_even() const noexcept;
  /// Largest twist; -1 for zero.
  int max_twist() const noexcept;
  /// Coefficients of the Lefschetz polynomial; requires is_pure_even().
  std::vector<std::int64_t> lefschetz_coeffs() const;
  /// Inverse of from_cells; requires is_pure_even().
  CellMultiset to_cells() const;
  /// Palindromic about n/2 as a Lefschetz polynomial; requires is_pure_even().
  bool is_palindromic(int n) const;

  friend TateExpr sum(const TateExpr& a, const TateExpr& b);
  /// Throws OpaqueTensor if both operands carry opaque atoms.
  friend TateExpr tensor(const TateExpr& a, const TateExpr& b);
  friend TateExpr twist_shift(const TateExpr& a, int twist, int shift);
  TateExpr scaled(std::int64_t factor) const;

  friend bool operator==(const TateExpr&, const TateExpr&) = default;

  /// "Z(0)[0] + 2*Z(1)[2] + M(X)*Z(1)[1]", terms sorted by (atom, p, q).
  std::string to_bigraded_string() const;
  /// "1 + 2*L + L^2"; requires is_pure_even().
  std::string to_lefschetz_string() const;
  /// Lefschetz form when pure even, bigraded otherwise.
  std::string to_string() const;

 private:
  friend class TateLedger;
  void add_term(const TateKey& key, std::int64_t mult);
  std::map<TateKey, std::int64_t> terms_;
};

TateExpr sum(const TateExpr& a, const TateExpr& b);
TateExpr tensor(const TateExpr& a, const TateExpr& b);
TateExpr twist_shift(const TateExpr& a, int twist, int shift);

/// Z(p)[2p] -> Z(n-p)[2n-2p]. Throws NotPureEven for opaque atoms or odd terms,
/// TwistExceedsDimension when some p > n.
TateExpr dual_smooth_proper(const TateExpr& a, int n);

/// Result of L -> q: an integer part plus one integer coefficient per opaque atom.
struct LefschetzValue {
  std::int64_t constant = 0;
  std::map<std::string, std::int64_t> symbolic;
  bool is_integer() const noexcept { return symbolic.empty(); }
  friend bool operator==(const LefschetzValue&, const LefschetzValue&) = default;
};

/// Substitutes L -> q in an even expression (q = 2p on every term). Throws NotPureEven otherwise.
LefschetzValue lefschetz_specialize(const TateExpr& a, std::int64_t q);

/// Signed ledger over the same keys; used where classes are formed by subtraction.
class TateLedger {
 public:
  TateLedger() = default;
  TateLedger(const TateExpr& e);  // NOLINT: implicit widening is intended

  const std::map<TateKey, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_effective() const noexcept;
  bool is_even() const noexcept;
  std::int64_t multiplicity(const TateKey& key) const;
  /// Engaged iff every multiplicity is >= 0.
  std::optional<TateExpr> to_effective() const;

  TateLedger& operator+=(const TateLedger& other);
  TateLedger& operator-=(const TateLedger& other);
  friend TateLedger operator+(TateLedger a, const TateLedger& b) { return a += b; }
  friend TateLedger operator-(TateLedger a, const TateLedger& b) { return a -= b; }
  TateLedger scaled(std::int64_t factor) const;
  friend bool operator==(const TateLedger&, const TateLedger&) = default;

  /// Even ledgers render as Lefschetz polynomials per atom ("L^3 - L", "(L - 1)*M(X)");
  /// otherwise the bigraded form with signed multiplicities.
  std::string to_string() const;

 private:
  friend TateLedger dual_ledger(const TateLedger& a, int n);
  void add_term(const TateKey& key, std::int64_t mult);
  std::map<TateKey, std::int64_t> terms_;
};

/// Same reflection as dual_smooth_proper, on a signed ledger with one shared atom allowed.
TateLedger dual_ledger(const TateLedger& a, int n);

}  // namespace motive_forge
