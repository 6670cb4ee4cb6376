#include "motive_forge/upoly.hpp"

#include <sstream>

#include "motive_forge/checked.hpp"

namespace motive_forge {

UPoly::UPoly(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

UPoly::UPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(unsigned degree, std::int64_t coeff) {
  std::vector<std::int64_t> c(degree + 1, 0);
  c[degree] = coeff;
  return UPoly(std::move(c));
}

UPoly UPoly::geometric(unsigned n) { return UPoly(std::vector<std::int64_t>(n, 1)); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int UPoly::low_degree() const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

std::int64_t UPoly::eval(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked::add(checked::mul(acc, t), *it);
  return acc;
}

bool UPoly::is_palindromic() const noexcept {
  if (coeffs_.empty()) return true;
  std::size_t lo = static_cast<std::size_t>(low_degree());
  std::size_t hi = coeffs_.size() - 1;
  while (lo < hi) {
    if (coeffs_[lo] != coeffs_[hi]) return false;
    ++lo;
    --hi;
  }
  return true;
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked::add(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked::sub(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = checked::add(c[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return UPoly(std::move(c));
}

bool UPoly::divide_exact(const UPoly& divisor, UPoly& quotient) const {
  if (divisor.is_zero()) return false;
  if (is_zero()) {
    quotient = {};
    return true;
  }
  if (degree() < divisor.degree()) return false;
  std::vector<std::int64_t> rem = coeffs_;
  std::vector<std::int64_t> q(coeffs_.size() - divisor.coeffs_.size() + 1, 0);
  const std::int64_t lead = divisor.coeffs_.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    std::int64_t top = rem[k + divisor.coeffs_.size() - 1];
    if (top % lead != 0) return false;
    q[k] = top / lead;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
      rem[k + j] = checked::sub(rem[k + j], checked::mul(q[k], divisor.coeffs_[j]));
  }
  for (std::int64_t r : rem)
    if (r != 0) return false;
  quotient = UPoly(std::move(q));
  return true;
}

std::string UPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    std::int64_t c = coeffs_[d];
    if (c == 0) continue;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

}  // namespace motive_forge

namespace motive_forge {

namespace {

void append_monomial(std::ostringstream& os, std::int64_t mag, std::size_t d, std::string_view var) {
  if (d == 0) {
    os << mag;
    return;
  }
  if (mag != 1) os << mag << '*';
  os << var;
  if (d > 1) os << '^' << d;
}

}  // namespace

std::string UPoly::to_descending_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    std::int64_t c = coeffs_[d];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    append_monomial(os, c < 0 ? -c : c, d, var);
  }
  return os.str();
}

std::string render_grouped(const std::vector<std::pair<std::string, UPoly>>& groups, std::string_view var) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [symbol, poly] : groups) {
    if (poly.is_zero()) continue;
    if (symbol.empty()) {
      std::string body = poly.to_descending_string(var);
      if (!first && body.front() == '-') {
        os << " - " << body.substr(1);
      } else {
        os << (first ? "" : " + ") << body;
      }
      first = false;
      continue;
    }
    const bool single = poly.low_degree() == poly.degree();
    if (single) {
      std::int64_t c = poly[static_cast<std::size_t>(poly.degree())];
      auto d = static_cast<std::size_t>(poly.degree());
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      std::int64_t mag = c < 0 ? -c : c;
      if (d == 0) {
        if (mag != 1) os << mag << '*';
      } else {
        append_monomial(os, mag, d, var);
        os << '*';
      }
      os << symbol;
    } else {
      os << (first ? "" : " + ") << '(' << poly.to_descending_string(var) << ")*" << symbol;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace motive_forge
