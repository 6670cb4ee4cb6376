#include "motive_forge/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "motive_forge/error.hpp"

namespace motive_forge {

ParabolicSubset ParabolicSubset::from_indices(std::span<const int> one_based, int rank) {
  std::uint32_t mask = 0;
  for (int idx : one_based) {
    if (idx < 1 || idx > rank)
      throw Error(ErrorCode::kInvalidSubset,
                  "simple-root index " + std::to_string(idx) + " outside 1.." + std::to_string(rank));
    mask |= 1u << (idx - 1);
  }
  return ParabolicSubset(mask);
}

std::vector<int> ParabolicSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i + 1);
  return out;
}

namespace {

void link(std::vector<int>& c, int n, int i, int j, int ij = -1, int ji = -1) {
  c[static_cast<std::size_t>(i * n + j)] = ij;
  c[static_cast<std::size_t>(j * n + i)] = ji;
}

bool rank_supported(char series, int n) {
  switch (series) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 3;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

SimpleType parse_component(std::string_view token, std::string_view label) {
  if (token.size() < 2 || !std::isupper(static_cast<unsigned char>(token[0])))
    throw Error(ErrorCode::kUnknownLabel, "cannot parse root-system label '" + std::string(label) + "'");
  char series = token[0];
  if (std::string_view("ABCDEFG").find(series) == std::string_view::npos)
    throw Error(ErrorCode::kUnknownLabel, "unknown series '" + std::string(1, series) + "'");
  int n = 0;
  auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), n);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw Error(ErrorCode::kUnknownLabel, "cannot parse rank in '" + std::string(token) + "'");
  if (!rank_supported(series, n))
    throw Error(ErrorCode::kRankOutOfRange,
                "rank " + std::to_string(n) + " not supported for series " + std::string(1, series));
  return {series, n};
}

std::vector<std::vector<int>> generate_positive_roots(int rank, const std::vector<int>& cartan) {
  std::vector<std::vector<int>> roots;
  std::set<std::vector<int>> seen;
  std::deque<std::size_t> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    roots.push_back(e);
    queue.push_back(roots.size() - 1);
  }
  while (!queue.empty()) {
    std::vector<int> beta = roots[queue.front()];
    queue.pop_front();
    for (int j = 0; j < rank; ++j) {
      int pairing = 0;
      for (int k = 0; k < rank; ++k) pairing += beta[static_cast<std::size_t>(k)] * cartan[static_cast<std::size_t>(k * rank + j)];
      if (pairing >= 0) continue;  // height does not increase
      std::vector<int> image = beta;
      image[static_cast<std::size_t>(j)] -= pairing;
      if (seen.insert(image).second) {
        roots.push_back(image);
        queue.push_back(roots.size() - 1);
      }
    }
  }
  std::stable_sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    return ha < hb;
  });
  return roots;
}

std::string matrix_key(const std::vector<std::int8_t>& action) {
  return std::string(reinterpret_cast<const char*>(action.data()), action.size());
}

bool column_positive(const WeylElement& w, int col) {
  for (int row = 0; row < w.rank; ++row) {
    std::int8_t x = w.entry(row, col);
    if (x != 0) return x > 0;
  }
  return false;
}

}  // namespace

std::vector<int> cartan_matrix(SimpleType type) {
  const int n = type.rank;
  std::vector<int> c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i * n + i)] = 2;
  switch (type.series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(c, n, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) link(c, n, i, i + 1);
      link(c, n, n - 2, n - 1, -2, -1);  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) link(c, n, i, i + 1);
      link(c, n, n - 2, n - 1, -1, -2);  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(c, n, i, i + 1);
      link(c, n, n - 3, n - 1);
      break;
    case 'E':
      link(c, n, 0, 2);
      link(c, n, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(c, n, i, i + 1);
      break;
    case 'F':
      link(c, n, 0, 1);
      link(c, n, 1, 2, -2, -1);
      link(c, n, 2, 3);
      break;
    case 'G':
      link(c, n, 0, 1, -1, -3);  // alpha_1 short
      break;
    default:
      throw Error(ErrorCode::kUnknownLabel, "unknown series");
  }
  return c;
}

std::vector<int> invariant_degrees(SimpleType type) {
  const int n = type.rank;
  std::vector<int> d;
  switch (type.series) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F': d = {2, 6, 8, 12}; break;
    case 'G': d = {2, 6}; break;
    default: throw Error(ErrorCode::kUnknownLabel, "unknown series");
  }
  return d;
}

RootSystem build_root_system(std::string_view label, std::uint64_t weyl_cap) {
  RootSystem rs;
  rs.label = std::string(label);
  if (label == "trivial") return rs;

  std::size_t start = 0;
  while (start <= label.size()) {
    std::size_t end = label.find('x', start);
    if (end == std::string_view::npos) end = label.size();
    rs.components.push_back(parse_component(label.substr(start, end - start), label));
    start = end + 1;
  }

  for (const SimpleType& t : rs.components) rs.rank += t.rank;
  if (rs.rank > kMaxRank)
    throw Error(ErrorCode::kRankOutOfRange, "total rank " + std::to_string(rs.rank) + " exceeds " + std::to_string(kMaxRank));

  rs.cartan.assign(static_cast<std::size_t>(rs.rank * rs.rank), 0);
  int offset = 0;
  for (const SimpleType& t : rs.components) {
    std::vector<int> block = cartan_matrix(t);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j)
        rs.cartan[static_cast<std::size_t>((offset + i) * rs.rank + offset + j)] = block[static_cast<std::size_t>(i * t.rank + j)];
    for (int d : invariant_degrees(t)) rs.degrees.push_back(d);
    offset += t.rank;
  }

  // Check the cap against the projected order before doing any real work.
  std::uint64_t order = 1;
  for (int d : rs.degrees) {
    if (order > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d) ||
        order * static_cast<std::uint64_t>(d) > weyl_cap) {
      throw Error(ErrorCode::kWeylCapExceeded,
                  "Weyl group of " + rs.label + " exceeds the enumeration cap of " + std::to_string(weyl_cap));
    }
    order *= static_cast<std::uint64_t>(d);
  }
  rs.weyl_order = order;
  rs.positives = generate_positive_roots(rs.rank, rs.cartan);
  return rs;
}

std::string WeylElement::word_string() const {
  if (word.empty()) return "e";
  std::string s;
  for (std::uint8_t letter : word) s += "s" + std::to_string(letter + 1);
  return s;
}

std::vector<int> WeylElement::word_indices() const {
  std::vector<int> out;
  out.reserve(word.size());
  for (std::uint8_t letter : word) out.push_back(letter + 1);
  return out;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  WeylElement s;
  s.rank = rs.rank;
  s.length = 1;
  s.word = {static_cast<std::uint8_t>(i)};
  s.action.assign(static_cast<std::size_t>(rs.rank * rs.rank), 0);
  for (int j = 0; j < rs.rank; ++j) {
    // column j: alpha_j - <alpha_j, alpha_i^vee> alpha_i
    s.action[static_cast<std::size_t>(j * rs.rank + j)] = 1;
    s.action[static_cast<std::size_t>(i * rs.rank + j)] -= static_cast<std::int8_t>(rs.cartan_entry(j, i));
  }
  return s;
}

std::vector<int> apply(const WeylElement& w, std::span<const int> coords) {
  std::vector<int> out(static_cast<std::size_t>(w.rank), 0);
  for (int row = 0; row < w.rank; ++row)
    for (int col = 0; col < w.rank; ++col) out[static_cast<std::size_t>(row)] += w.entry(row, col) * coords[static_cast<std::size_t>(col)];
  return out;
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const auto& beta : rs.positives) {
    std::vector<int> image = motive_forge::apply(w, std::span<const int>(beta));
    for (int x : image) {
      if (x != 0) {
        if (x < 0) ++count;
        break;
      }
    }
  }
  return count;
}

WeylGroup::WeylGroup(const RootSystem& rs, std::uint64_t weyl_cap) : rs_(rs), rank_(rs.rank) {
  if (rs.weyl_order > weyl_cap)
    throw Error(ErrorCode::kWeylCapExceeded,
                "Weyl group of " + rs.label + " exceeds the enumeration cap of " + std::to_string(weyl_cap));
  const auto r = static_cast<std::size_t>(rank_);
  std::vector<WeylElement> reflections;
  for (int i = 0; i < rank_; ++i) reflections.push_back(simple_reflection(rs, i));

  WeylElement identity;
  identity.rank = rank_;
  identity.action.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) identity.action[i * r + i] = 1;

  elements_.reserve(static_cast<std::size_t>(rs.weyl_order));
  index_.reserve(static_cast<std::size_t>(rs.weyl_order));
  elements_.push_back(identity);
  index_.emplace(matrix_key(identity.action), 0);
  right_.assign(static_cast<std::size_t>(rs.weyl_order) * r, 0);

  // Level-by-level: the first time an element is reached, it is reached from the
  // lexicographically least (prefix, letter), which makes its word ShortLex-minimal.
  std::size_t level_begin = 0;
  while (level_begin < elements_.size()) {
    const std::size_t level_end = elements_.size();
    for (std::size_t idx = level_begin; idx < level_end; ++idx) {
      for (int i = 0; i < rank_; ++i) {
        const WeylElement& u = elements_[idx];
        WeylElement w;
        w.rank = rank_;
        w.action = u.action;
        // (u s_i) column j = u(alpha_j) - <alpha_j, alpha_i^vee> u(alpha_i)
        for (std::size_t j = 0; j < r; ++j) {
          int c = rs.cartan_entry(static_cast<int>(j), i);
          if (c == 0 || j == static_cast<std::size_t>(i)) continue;
          for (std::size_t row = 0; row < r; ++row)
            w.action[row * r + j] = static_cast<std::int8_t>(w.action[row * r + j] - c * u.action[row * r + static_cast<std::size_t>(i)]);
        }
        for (std::size_t row = 0; row < r; ++row)
          w.action[row * r + static_cast<std::size_t>(i)] = static_cast<std::int8_t>(-u.action[row * r + static_cast<std::size_t>(i)]);

        std::string key = matrix_key(w.action);
        auto found = index_.find(key);
        if (found != index_.end()) {
          right_[idx * r + static_cast<std::size_t>(i)] = found->second;
          continue;
        }
        if (elements_.size() >= rs.weyl_order)
          throw Error(ErrorCode::kWeylCapExceeded, "enumeration of " + rs.label + " produced more elements than prod(d_i)");
        w.length = u.length + 1;
        w.word = u.word;
        w.word.push_back(static_cast<std::uint8_t>(i));
        auto new_index = static_cast<std::uint32_t>(elements_.size());
        index_.emplace(std::move(key), new_index);
        right_[idx * r + static_cast<std::size_t>(i)] = new_index;
        elements_.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  right_.resize(elements_.size() * r);
}

std::optional<std::size_t> WeylGroup::find(const WeylElement& w) const {
  auto it = index_.find(matrix_key(w.action));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  std::size_t idx = *find(a);
  for (std::uint8_t letter : b.word) idx = times_simple(idx, letter);
  return elements_[idx];
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::uint64_t weyl_cap) {
  WeylGroup group(rs, weyl_cap);
  return {group.elements().begin(), group.elements().end()};
}

WeylElement longest_element(const RootSystem& rs, std::uint64_t weyl_cap) {
  WeylGroup group(rs, weyl_cap);
  return group[group.longest_index()];
}

ParabolicSubset support(const WeylElement& w) {
  std::uint32_t mask = 0;
  for (std::uint8_t letter : w.word) mask |= 1u << letter;
  return ParabolicSubset(mask);
}

ParabolicSubset complement_support(const WeylElement& w) { return support(w).complement(w.rank); }

ParabolicSubset ascent_set(const WeylElement& w) {
  std::uint32_t mask = 0;
  for (int i = 0; i < w.rank; ++i)
    if (column_positive(w, i)) mask |= 1u << i;
  return ParabolicSubset(mask);
}

ParabolicSubset descent_set(const WeylElement& w) { return ascent_set(w).complement(w.rank); }

std::vector<WeylElement> minimal_coset_reps(const WeylGroup& group, ParabolicSubset subset) {
  const int rank = group.root_system().rank;
  if (!subset.is_subset_of(ParabolicSubset::all(rank)))
    throw Error(ErrorCode::kInvalidSubset, "parabolic subset is not contained in the simple roots");
  std::vector<WeylElement> reps;
  for (const WeylElement& w : group.elements())
    if (subset.is_subset_of(ascent_set(w))) reps.push_back(w);
  return reps;
}

std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs, ParabolicSubset subset, std::uint64_t weyl_cap) {
  return minimal_coset_reps(WeylGroup(rs, weyl_cap), subset);
}

std::vector<WeylElement> parabolic_subgroup(const WeylGroup& group, ParabolicSubset subset) {
  std::vector<WeylElement> out;
  for (const WeylElement& w : group.elements())
    if (support(w).is_subset_of(subset)) out.push_back(w);
  return out;
}

namespace {

UPoly length_polynomial(std::span<const WeylElement> elems) {
  std::vector<std::int64_t> c;
  for (const WeylElement& w : elems) {
    if (static_cast<std::size_t>(w.length) >= c.size()) c.resize(static_cast<std::size_t>(w.length) + 1, 0);
    ++c[static_cast<std::size_t>(w.length)];
  }
  return UPoly(std::move(c));
}

}  // namespace

UPoly weyl_poincare(const WeylGroup& group) { return length_polynomial(group.elements()); }

UPoly weyl_poincare(const RootSystem& rs, std::uint64_t weyl_cap) { return weyl_poincare(WeylGroup(rs, weyl_cap)); }

UPoly degree_poincare(const RootSystem& rs) {
  UPoly p{1};
  for (int d : rs.degrees) p = p * UPoly::geometric(static_cast<unsigned>(d));
  return p;
}

UPoly parabolic_poincare(const WeylGroup& group, ParabolicSubset subset) {
  return length_polynomial(parabolic_subgroup(group, subset));
}

UPoly coset_poincare(const WeylGroup& group, ParabolicSubset subset) {
  return length_polynomial(minimal_coset_reps(group, subset));
}

}  // namespace motive_forge
