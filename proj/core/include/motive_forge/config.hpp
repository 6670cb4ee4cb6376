#pragma once

// Configurations of mixed Tate varieties: components X_1..X_n together with the
// intersection data D^J, recursively certified and summed by inclusion-exclusion.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motive_forge/kvar.hpp"
#include "motive_forge/tateexpr.hpp"

namespace motive_forge {

inline constexpr int kMaxComponents = 20;

struct ConfigNode {
  std::string name;
  TateExpr cls;
  int dim = 0;
};

struct Configuration {
  std::vector<ConfigNode> components;
  /// Keyed by component bitmask with at least two bits; std::nullopt marks an empty
  /// intersection. Missing subsets are empty.
  std::map<std::uint32_t, std::optional<ConfigNode>> intersections;

  int size() const noexcept { return static_cast<int>(components.size()); }
  /// Singletons resolve to the component itself.
  const ConfigNode* node(std::uint32_t subset) const;
};

/// The pairwise-intersection cascade: level 0 lists the
/// components, level k+1 the distinct maximal intersections of two level-k members.
/// Members are subsets J of the original components, standing for D^J.
struct MixedTateCertificate {
  std::vector<std::vector<std::uint32_t>> levels;
  /// Number of D^J nodes whose class was checked.
  int checked_nodes = 0;
  int depth() const noexcept { return static_cast<int>(levels.size()) - 1; }
};

/// Throws NonTateComponent (a class is not pure Tate even) or
/// InconsistentIntersections (poset or dimension data violated).
MixedTateCertificate check_mixed_tate_config(const Configuration& c);

struct UnionClass {
  TateLedger ledger;
  bool effective() const noexcept { return ledger.is_effective(); }
  /// Requires effective().
  TateExpr as_tate() const { return *ledger.to_effective(); }
  K0Class k0() const { return to_k0(ledger); }
};

/// sum over nonempty J of (-1)^(|J|+1) [D^J]; certifies first.
UnionClass union_class(const Configuration& c);

/// Inclusion-exclusion over n members, with `member_class(J)` returning the class of
/// the intersection indexed by the bitmask J, or nullopt when it is empty. Supersets of
/// an empty intersection are skipped.
TateLedger inclusion_exclusion(int n, const std::function<std::optional<TateLedger>(std::uint32_t)>& member_class);

}  // namespace motive_forge
