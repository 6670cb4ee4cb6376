#include "motive_forge/tateexpr.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "motive_forge/checked.hpp"
#include "motive_forge/error.hpp"
#include "motive_forge/upoly.hpp"

namespace motive_forge {

CellMultiset::CellMultiset(std::initializer_list<int> dims) : CellMultiset(std::vector<int>(dims)) {}

CellMultiset::CellMultiset(std::vector<int> dims) : dims_(std::move(dims)) {
  for (int d : dims_)
    if (d < 0) throw Error(ErrorCode::kNegativeTwist, "cell dimension must be non-negative");
  if (!std::is_sorted(dims_.begin(), dims_.end())) std::sort(dims_.begin(), dims_.end());
}

CellMultiset CellMultiset::product(const CellMultiset& other) const {
  std::vector<int> out;
  out.reserve(dims_.size() * other.dims_.size());
  for (int a : dims_)
    for (int b : other.dims_) out.push_back(a + b);
  return CellMultiset(std::move(out));
}

CellMultiset CellMultiset::disjoint_union(const CellMultiset& other) const {
  std::vector<int> out = dims_;
  out.insert(out.end(), other.dims_.begin(), other.dims_.end());
  return CellMultiset(std::move(out));
}

namespace {

void bump(std::map<TateKey, std::int64_t>& terms, const TateKey& key, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms.try_emplace(key, 0);
  it->second = checked::add(it->second, mult);
  if (it->second == 0) terms.erase(it);
}

std::string key_string(const TateKey& key) {
  std::ostringstream os;
  if (key.atom.is_unit()) {
    os << "Z(" << key.twist << ")[" << key.shift << "]";
  } else {
    os << key.atom.name;
    if (key.twist != 0 || key.shift != 0) os << "(" << key.twist << ")[" << key.shift << "]";
  }
  return os.str();
}

std::string bigraded(const std::map<TateKey, std::int64_t>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, mult] : terms) {
    if (first) {
      if (mult < 0) os << '-';
    } else {
      os << (mult < 0 ? " - " : " + ");
    }
    first = false;
    std::int64_t mag = mult < 0 ? -mult : mult;
    if (mag != 1) os << mag << '*';
    os << key_string(key);
  }
  return os.str();
}

bool all_even(const std::map<TateKey, std::int64_t>& terms) {
  return std::all_of(terms.begin(), terms.end(), [](const auto& kv) { return kv.first.shift == 2 * kv.first.twist; });
}

std::set<std::string> atoms_of(const std::map<TateKey, std::int64_t>& terms) {
  std::set<std::string> names;
  for (const auto& [key, mult] : terms)
    if (!key.atom.is_unit()) names.insert(key.atom.name);
  return names;
}

void check_twist(int twist) {
  if (twist < 0) throw Error(ErrorCode::kNegativeTwist, "negative Tate twists are not effective");
}

}  // namespace

void TateExpr::add_term(const TateKey& key, std::int64_t mult) {
  if (mult < 0) throw Error(ErrorCode::kNegativeMultiplicity, "TateExpr multiplicities must be non-negative");
  check_twist(key.twist);
  bump(terms_, key, mult);
}

TateExpr TateExpr::tate(int twist, int shift, std::int64_t mult) {
  TateExpr e;
  e.add_term({Atom::unit(), twist, shift}, mult);
  return e;
}

TateExpr TateExpr::opaque(const std::string& name, int twist, int shift, std::int64_t mult) {
  if (name.empty()) return tate(twist, shift, mult);
  TateExpr e;
  e.add_term({Atom{name}, twist, shift}, mult);
  return e;
}

TateExpr TateExpr::from_cells(const CellMultiset& cells) {
  // dims are sorted: one map update per distinct dimension.
  TateExpr e;
  const auto& dims = cells.dims();
  for (std::size_t i = 0; i < dims.size();) {
    std::size_t j = i;
    while (j < dims.size() && dims[j] == dims[i]) ++j;
    e.add_term({Atom::unit(), dims[i], 2 * dims[i]}, static_cast<std::int64_t>(j - i));
    i = j;
  }
  return e;
}

TateExpr TateExpr::from_lefschetz(std::span<const std::int64_t> coeffs) {
  TateExpr e;
  for (std::size_t d = 0; d < coeffs.size(); ++d) e.add_term({Atom::unit(), static_cast<int>(d), 2 * static_cast<int>(d)}, coeffs[d]);
  return e;
}

std::int64_t TateExpr::multiplicity(const TateKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

bool TateExpr::has_opaque() const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return !kv.first.atom.is_unit(); });
}

std::vector<std::string> TateExpr::opaque_atoms() const {
  auto names = atoms_of(terms_);
  return {names.begin(), names.end()};
}

bool TateExpr::is_pure_even() const noexcept { return !has_opaque() && all_even(terms_); }

bool TateExpr::is_even() const noexcept { return all_even(terms_); }

int TateExpr::max_twist() const noexcept {
  int m = -1;
  for (const auto& [key, mult] : terms_) m = std::max(m, key.twist);
  return m;
}

std::vector<std::int64_t> TateExpr::lefschetz_coeffs() const {
  if (!is_pure_even()) throw Error(ErrorCode::kNotPureEven, "expression is not pure Tate even: " + to_bigraded_string());
  std::vector<std::int64_t> c(static_cast<std::size_t>(max_twist() + 1), 0);
  for (const auto& [key, mult] : terms_) c[static_cast<std::size_t>(key.twist)] = mult;
  return c;
}

CellMultiset TateExpr::to_cells() const {
  std::vector<int> dims;
  auto coeffs = lefschetz_coeffs();
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    for (std::int64_t k = 0; k < coeffs[d]; ++k) dims.push_back(static_cast<int>(d));
  return CellMultiset(std::move(dims));
}

bool TateExpr::is_palindromic(int n) const {
  auto coeffs = lefschetz_coeffs();
  if (static_cast<int>(coeffs.size()) - 1 > n) return false;
  coeffs.resize(static_cast<std::size_t>(n + 1), 0);
  return std::equal(coeffs.begin(), coeffs.end(), coeffs.rbegin());
}

TateExpr sum(const TateExpr& a, const TateExpr& b) {
  TateExpr out = a;
  for (const auto& [key, mult] : b.terms_) bump(out.terms_, key, mult);
  return out;
}

TateExpr tensor(const TateExpr& a, const TateExpr& b) {
  if (a.has_opaque() && b.has_opaque())
    throw Error(ErrorCode::kOpaqueTensor,
                "tensor of two expressions with opaque atoms is undefined: " + a.to_string() + " (x) " + b.to_string());
  TateExpr out;
  for (const auto& [ka, ma] : a.terms_) {
    for (const auto& [kb, mb] : b.terms_) {
      const Atom& atom = ka.atom.is_unit() ? kb.atom : ka.atom;
      bump(out.terms_, {atom, ka.twist + kb.twist, ka.shift + kb.shift}, checked::mul(ma, mb));
    }
  }
  return out;
}

TateExpr twist_shift(const TateExpr& a, int twist, int shift) {
  TateExpr out;
  for (const auto& [key, mult] : a.terms_) out.add_term({key.atom, key.twist + twist, key.shift + shift}, mult);
  return out;
}

TateExpr TateExpr::scaled(std::int64_t factor) const {
  if (factor < 0) throw Error(ErrorCode::kNegativeMultiplicity, "cannot scale a TateExpr by a negative factor");
  TateExpr out;
  if (factor == 0) return out;
  for (const auto& [key, mult] : terms_) out.terms_.emplace(key, checked::mul(mult, factor));
  return out;
}

std::string TateExpr::to_bigraded_string() const { return bigraded(terms_); }

std::string TateExpr::to_lefschetz_string() const {
  return UPoly(lefschetz_coeffs()).to_string("L");
}

std::string TateExpr::to_string() const {
  return is_pure_even() ? to_lefschetz_string() : to_bigraded_string();
}

TateExpr dual_smooth_proper(const TateExpr& a, int n) {
  if (!a.is_pure_even())
    throw Error(ErrorCode::kNotPureEven, "dual_smooth_proper needs a pure Tate even expression, got " + a.to_string());
  if (a.max_twist() > n)
    throw Error(ErrorCode::kTwistExceedsDimension,
                "twist " + std::to_string(a.max_twist()) + " exceeds dimension " + std::to_string(n));
  TateExpr out;
  for (const auto& [key, mult] : a.terms()) out = sum(out, TateExpr::tate(n - key.twist, 2 * (n - key.twist), mult));
  return out;
}

LefschetzValue lefschetz_specialize(const TateExpr& a, std::int64_t q) {
  if (!a.is_even())
    throw Error(ErrorCode::kNotPureEven, "L-specialization needs q = 2p on every term, got " + a.to_string());
  LefschetzValue value;
  for (const auto& [key, mult] : a.terms()) {
    std::int64_t contribution = checked::mul(mult, checked::pow(q, static_cast<unsigned>(key.twist)));
    if (key.atom.is_unit()) {
      value.constant = checked::add(value.constant, contribution);
    } else {
      auto& slot = value.symbolic[key.atom.name];
      slot = checked::add(slot, contribution);
      if (slot == 0) value.symbolic.erase(key.atom.name);
    }
  }
  return value;
}

TateLedger::TateLedger(const TateExpr& e) : terms_(e.terms()) {}

void TateLedger::add_term(const TateKey& key, std::int64_t mult) { bump(terms_, key, mult); }

bool TateLedger::is_effective() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

bool TateLedger::is_even() const noexcept { return all_even(terms_); }

std::int64_t TateLedger::multiplicity(const TateKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<TateExpr> TateLedger::to_effective() const {
  if (!is_effective()) return std::nullopt;
  TateExpr e;
  for (const auto& [key, mult] : terms_) e.add_term(key, mult);
  return e;
}

TateLedger& TateLedger::operator+=(const TateLedger& other) {
  for (const auto& [key, mult] : other.terms_) bump(terms_, key, mult);
  return *this;
}

TateLedger& TateLedger::operator-=(const TateLedger& other) {
  for (const auto& [key, mult] : other.terms_) bump(terms_, key, checked::sub(0, mult));
  return *this;
}

TateLedger TateLedger::scaled(std::int64_t factor) const {
  TateLedger out;
  if (factor == 0) return out;
  for (const auto& [key, mult] : terms_) out.terms_.emplace(key, checked::mul(mult, factor));
  return out;
}

std::string TateLedger::to_string() const {
  if (terms_.empty()) return "0";
  if (!is_even()) return bigraded(terms_);
  std::map<std::string, std::vector<std::int64_t>> by_atom;
  for (const auto& [key, mult] : terms_) {
    auto& c = by_atom[key.atom.name];
    if (c.size() <= static_cast<std::size_t>(key.twist)) c.resize(static_cast<std::size_t>(key.twist) + 1, 0);
    c[static_cast<std::size_t>(key.twist)] = mult;
  }
  std::vector<std::pair<std::string, UPoly>> groups;
  for (auto& [name, coeffs] : by_atom) groups.emplace_back(name, UPoly(std::move(coeffs)));
  return render_grouped(groups, "L");
}

TateLedger dual_ledger(const TateLedger& a, int n) {
  if (!a.is_even()) throw Error(ErrorCode::kNotPureEven, "duality needs q = 2p on every term, got " + a.to_string());
  if (atoms_of(a.terms()).size() > 1)
    throw Error(ErrorCode::kNotPureEven, "duality supports at most one shared opaque atom");
  TateLedger out;
  for (const auto& [key, mult] : a.terms()) {
    if (key.twist > n)
      throw Error(ErrorCode::kTwistExceedsDimension,
                  "twist " + std::to_string(key.twist) + " exceeds dimension " + std::to_string(n));
    out.add_term({key.atom, n - key.twist, 2 * (n - key.twist)}, mult);
  }
  return out;
}

}  // namespace motive_forge
