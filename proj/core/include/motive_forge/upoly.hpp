#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace motive_forge {

/// Dense univariate polynomial with int64 coefficients, trimmed so the
/// leading coefficient is nonzero (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::initializer_list<std::int64_t> coeffs);
  explicit UPoly(std::vector<std::int64_t> coeffs);

  static UPoly monomial(unsigned degree, std::int64_t coeff = 1);
  /// 1 + t + ... + t^(n-1).
  static UPoly geometric(unsigned n);

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  std::int64_t operator[](std::size_t degree) const noexcept {
    return degree < coeffs_.size() ? coeffs_[degree] : 0;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest degree carrying a nonzero coefficient; -1 for zero.
  int low_degree() const noexcept;

  std::int64_t eval(std::int64_t t) const;
  /// Coefficients read the same forwards and backwards between low_degree() and degree().
  bool is_palindromic() const noexcept;

  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Exact division; returns false (leaving quotient unspecified) if `divisor` does not divide.
  bool divide_exact(const UPoly& divisor, UPoly& quotient) const;

  /// "1 + 2*t + t^2", ascending degree.
  std::string to_string(std::string_view var = "t") const;
  /// "L^3 - L", descending degree.
  std::string to_descending_string(std::string_view var = "L") const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Renders sum_k poly_k * symbol_k with the polynomial in descending degree:
/// "L^3 - L + (L - 1)*[C] + [D]". The empty symbol is the constant group and comes first.
std::string render_grouped(const std::vector<std::pair<std::string, UPoly>>& groups, std::string_view var = "L");

}  // namespace motive_forge
