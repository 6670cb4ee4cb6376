#include "motive_forge/config.hpp"

#include <algorithm>

#include "motive_forge/error.hpp"

namespace motive_forge {

const ConfigNode* Configuration::node(std::uint32_t subset) const {
  if (subset == 0) return nullptr;
  if (__builtin_popcount(subset) == 1) {
    auto idx = static_cast<std::size_t>(__builtin_ctz(subset));
    return idx < components.size() ? &components[idx] : nullptr;
  }
  auto it = intersections.find(subset);
  if (it == intersections.end() || !it->second) return nullptr;
  return &*it->second;
}

TateLedger inclusion_exclusion(int n, const std::function<std::optional<TateLedger>(std::uint32_t)>& member_class) {
  if (n < 0 || n > kMaxComponents)
    throw Error(ErrorCode::kInvalidSubset, "inclusion-exclusion supports at most " + std::to_string(kMaxComponents) + " members");
  const std::uint32_t full = n == 0 ? 0u : ((1u << n) - 1u);
  std::vector<bool> empty(static_cast<std::size_t>(full) + 1, false);
  TateLedger total;
  for (std::uint32_t subset = 1; subset <= full && full != 0; ++subset) {
    bool skip = false;
    for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
      std::uint32_t smaller = subset & ~(rest & (~rest + 1));
      if (smaller != 0 && empty[smaller]) {
        skip = true;
        break;
      }
    }
    if (skip) {
      empty[subset] = true;
      continue;
    }
    auto cls = member_class(subset);
    if (!cls) {
      empty[subset] = true;
      continue;
    }
    if (__builtin_popcount(subset) % 2 == 1) {
      total += *cls;
    } else {
      total -= *cls;
    }
    if (subset == full) break;
  }
  return total;
}

namespace {

std::string subset_label(std::uint32_t subset) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!((subset >> i) & 1u)) continue;
    s += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

void validate(const Configuration& c) {
  const int n = c.size();
  if (n == 0) throw Error(ErrorCode::kInconsistentIntersections, "configuration has no components");
  if (n > kMaxComponents)
    throw Error(ErrorCode::kInconsistentIntersections, "configuration has more than " + std::to_string(kMaxComponents) + " components");
  const std::uint32_t full = (1u << n) - 1u;
  for (const auto& [subset, node] : c.intersections) {
    if (subset & ~full)
      throw Error(ErrorCode::kInconsistentIntersections, "intersection " + subset_label(subset) + " names a missing component");
    if (__builtin_popcount(subset) < 2)
      throw Error(ErrorCode::kInconsistentIntersections, "intersection " + subset_label(subset) + " needs at least two components");
    if (!node) continue;
    for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
      std::uint32_t smaller = subset & ~(rest & (~rest + 1));
      const ConfigNode* parent = c.node(smaller);
      if (parent == nullptr)
        throw Error(ErrorCode::kInconsistentIntersections,
                    "D^" + subset_label(subset) + " is nonempty but D^" + subset_label(smaller) + " is empty");
      if (node->dim > parent->dim)
        throw Error(ErrorCode::kInconsistentIntersections,
                    "dim D^" + subset_label(subset) + " exceeds dim D^" + subset_label(smaller));
    }
  }
}

void require_tate(const ConfigNode& node, const std::string& where) {
  if (!node.cls.is_pure_even())
    throw Error(ErrorCode::kNonTateComponent, where + " '" + node.name + "' has a non-Tate class " + node.cls.to_string());
}

// D^a is contained in D^b (both irreducible): their intersection D^{a|b} is nonempty of dimension dim D^a.
bool contained_in(const Configuration& c, std::uint32_t a, std::uint32_t b) {
  const ConfigNode* meet = c.node(a | b);
  return meet != nullptr && meet->dim == c.node(a)->dim;
}

}  // namespace

MixedTateCertificate check_mixed_tate_config(const Configuration& c) {
  validate(c);
  MixedTateCertificate cert;
  for (const ConfigNode& comp : c.components) {
    require_tate(comp, "component");
    ++cert.checked_nodes;
  }
  for (const auto& [subset, node] : c.intersections) {
    if (!node) continue;
    require_tate(*node, "intersection D^" + subset_label(subset));
    ++cert.checked_nodes;
  }

  std::vector<std::uint32_t> level;
  for (int i = 0; i < c.size(); ++i) level.push_back(1u << i);
  while (!level.empty()) {
    cert.levels.push_back(level);
    std::vector<std::uint32_t> candidates;
    for (std::size_t a = 0; a < level.size(); ++a)
      for (std::size_t b = a + 1; b < level.size(); ++b) {
        std::uint32_t meet = level[a] | level[b];
        if (c.node(meet) != nullptr && std::find(candidates.begin(), candidates.end(), meet) == candidates.end())
          candidates.push_back(meet);
      }
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::uint32_t> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
        if (i == j || !contained_in(c, candidates[i], candidates[j])) continue;
        // Equal subvarieties keep the first listed; strictly smaller ones are not components.
        bool equal = contained_in(c, candidates[j], candidates[i]);
        dominated = !equal || j < i;
      }
      if (!dominated) next.push_back(candidates[i]);
    }
    level = std::move(next);
  }
  return cert;
}

UnionClass union_class(const Configuration& c) {
  check_mixed_tate_config(c);
  UnionClass out;
  out.ledger = inclusion_exclusion(c.size(), [&](std::uint32_t subset) -> std::optional<TateLedger> {
    const ConfigNode* node = c.node(subset);
    if (node == nullptr) return std::nullopt;
    return TateLedger(node->cls);
  });
  return out;
}

}  // namespace motive_forge
