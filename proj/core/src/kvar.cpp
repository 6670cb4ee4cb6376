#include "motive_forge/kvar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "motive_forge/checked.hpp"
#include "motive_forge/error.hpp"

namespace motive_forge {

namespace {

std::string symbols_string(const std::vector<std::pair<std::string, int>>& symbols) {
  std::string s;
  for (const auto& [name, exp] : symbols) {
    if (!s.empty()) s += '*';
    s += name;
    if (exp > 1) s += '^' + std::to_string(exp);
  }
  return s;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.lefschetz = a.lefschetz + b.lefschetz;
  std::map<std::string, int> merged;
  for (const auto& [name, exp] : a.symbols) merged[name] += exp;
  for (const auto& [name, exp] : b.symbols) merged[name] += exp;
  m.symbols.assign(merged.begin(), merged.end());
  return m;
}

}  // namespace

std::string Monomial::symbol_string() const { return symbols_string(symbols); }

std::string Monomial::to_string() const {
  std::string s;
  if (lefschetz > 0) s = lefschetz == 1 ? "L" : "L^" + std::to_string(lefschetz);
  std::string sym = symbol_string();
  if (!sym.empty()) s += (s.empty() ? "" : "*") + sym;
  return s.empty() ? "1" : s;
}

K0Class::K0Class(std::int64_t constant) { add(Monomial{}, constant); }

K0Class K0Class::lefschetz(unsigned power) {
  K0Class c;
  c.add(Monomial{static_cast<int>(power), {}}, 1);
  return c;
}

K0Class K0Class::symbol(const std::string& name) {
  if (name.empty() || name == "L") throw Error(ErrorCode::kParseError, "invalid K0 symbol name '" + name + "'");
  K0Class c;
  c.add(Monomial{0, {{name, 1}}}, 1);
  return c;
}

K0Class K0Class::from_poly(const UPoly& poly) {
  K0Class c;
  for (std::size_t d = 0; d < poly.coeffs().size(); ++d) c.add(Monomial{static_cast<int>(d), {}}, poly.coeffs()[d]);
  return c;
}

void K0Class::add(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, 0);
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

bool K0Class::has_symbols() const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return !kv.first.symbols.empty(); });
}

std::int64_t K0Class::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<std::int64_t> K0Class::as_integer() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1 && terms_.begin()->first == Monomial{}) return terms_.begin()->second;
  return std::nullopt;
}

std::optional<UPoly> K0Class::as_poly() const {
  if (has_symbols()) return std::nullopt;
  std::vector<std::int64_t> c;
  for (const auto& [m, coeff] : terms_) {
    if (c.size() <= static_cast<std::size_t>(m.lefschetz)) c.resize(static_cast<std::size_t>(m.lefschetz) + 1, 0);
    c[static_cast<std::size_t>(m.lefschetz)] = coeff;
  }
  return UPoly(std::move(c));
}

K0Class& K0Class::operator+=(const K0Class& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

K0Class& K0Class::operator-=(const K0Class& other) {
  for (const auto& [m, c] : other.terms_) add(m, checked::sub(0, c));
  return *this;
}

K0Class operator*(const K0Class& a, const K0Class& b) {
  K0Class out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add(multiply(ma, mb), checked::mul(ca, cb));
  return out;
}

K0Class K0Class::pow(unsigned exp) const {
  K0Class out(1);
  for (unsigned i = 0; i < exp; ++i) out = out * *this;
  return out;
}

std::string K0Class::to_string() const {
  std::map<std::vector<std::pair<std::string, int>>, std::vector<std::int64_t>> groups;
  for (const auto& [m, c] : terms_) {
    auto& coeffs = groups[m.symbols];
    if (coeffs.size() <= static_cast<std::size_t>(m.lefschetz)) coeffs.resize(static_cast<std::size_t>(m.lefschetz) + 1, 0);
    coeffs[static_cast<std::size_t>(m.lefschetz)] = c;
  }
  std::vector<std::pair<std::string, UPoly>> rendered;
  for (auto& [symbols, coeffs] : groups) rendered.emplace_back(symbols_string(symbols), UPoly(std::move(coeffs)));
  return render_grouped(rendered, "L");
}

namespace {

class K0Parser {
 public:
  explicit K0Parser(std::string_view text) : text_(text) {}

  K0Class parse() {
    K0Class value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                what + " at offset " + std::to_string(pos_) + " in K0 expression '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  K0Class expression() {
    K0Class value;
    bool negate = accept('-');
    if (!negate) accept('+');
    value = term();
    if (negate) value = -value;
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  K0Class term() {
    K0Class value = factor();
    while (accept('*')) value = value * factor();
    return value;
  }

  K0Class factor() {
    K0Class base = primary();
    if (accept('^')) base = base.pow(static_cast<unsigned>(integer()));
    return base;
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = checked::add(checked::mul(v, 10), text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  K0Class primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      K0Class inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // "L" alone is the Lefschetz class; otherwise an identifier such as M(X) or M1(C).
      std::size_t start = pos_++;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '(') {
        int depth = 0;
        do {
          if (text_[pos_] == '(') ++depth;
          if (text_[pos_] == ')') --depth;
          ++pos_;
        } while (pos_ < text_.size() && depth > 0);
        if (depth != 0) fail("unbalanced parentheses in symbol");
      }
      std::string name(text_.substr(start, pos_ - start));
      return name == "L" ? K0Class::lefschetz() : K0Class::symbol(name);
    }
    if (c == '[') {
      std::size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated symbol");
      std::string name(text_.substr(pos_, close - pos_ + 1));
      pos_ = close + 1;
      return K0Class::symbol(name);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return K0Class(integer());
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

K0Class parse_k0(std::string_view text) { return K0Parser(text).parse(); }

K0Class class_from_cells(const CellMultiset& cells) {
  K0Class c;
  for (int d : cells.dims()) c += K0Class::lefschetz(static_cast<unsigned>(d));
  return c;
}

K0Class torus_class(int rank) {
  if (rank < 0) throw Error(ErrorCode::kRankOutOfRange, "torus rank must be non-negative");
  return (K0Class::lefschetz() - K0Class(1)).pow(static_cast<unsigned>(rank));
}

K0Class group_class(const RootSystem& rs, int central_torus_rank) {
  K0Class c = K0Class::lefschetz(static_cast<unsigned>(rs.num_positive()));
  for (int d : rs.degrees) c = c * (K0Class::lefschetz(static_cast<unsigned>(d)) - K0Class(1));
  return c * torus_class(central_torus_rank);
}

K0Class bundle_over_curve_class(const K0Class& group, const std::string& curve_symbol) {
  return group * K0Class::symbol(curve_symbol);
}

K0Class specialize_points(const K0Class& c, std::int64_t q) {
  K0Class out;
  for (const auto& [m, coeff] : c.terms()) {
    K0Class rest(checked::mul(coeff, checked::pow(q, static_cast<unsigned>(m.lefschetz))));
    for (const auto& [name, exp] : m.symbols) rest = rest * K0Class::symbol(name).pow(static_cast<unsigned>(exp));
    out += rest;
  }
  return out;
}

K0Class to_k0(const TateLedger& e) {
  if (!e.is_even()) throw Error(ErrorCode::kNotPureEven, "K0 image needs q = 2p on every term, got " + e.to_string());
  K0Class out;
  for (const auto& [key, mult] : e.terms()) {
    K0Class term = K0Class::lefschetz(static_cast<unsigned>(key.twist)) * K0Class(mult);
    if (!key.atom.is_unit()) term = term * K0Class::symbol(key.atom.name);
    out += term;
  }
  return out;
}

CurveBundleDifference curve_bundle_difference(const K0Class& group, const std::string& bundle_symbol,
                                              const std::string& curve_symbol) {
  CurveBundleDifference d;
  d.difference = K0Class::symbol(bundle_symbol) - bundle_over_curve_class(group, curve_symbol);
  return d;
}

}  // namespace motive_forge
