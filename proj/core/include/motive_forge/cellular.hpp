#pragma once

// Cellular varieties and fibrations: flag varieties, the cellular splitting of
// the motive, Leray-Hirsch for cellular fibrations, and Gysin bookkeeping.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "motive_forge/error.hpp"
#include "motive_forge/rootsys.hpp"
#include "motive_forge/tateexpr.hpp"

namespace motive_forge {

/// Which functor the cell data certifies: M, M^c, or both (smooth and proper).
enum class FunctorFlag { kM, kMc, kBoth };

std::string_view functor_name(FunctorFlag flag) noexcept;
/// "M", "Mc" or "both"; throws ParseError otherwise.
FunctorFlag parse_functor(std::string_view text);
/// Agreement of two flags; both is neutral. Throws FunctorMismatch for M against Mc.
FunctorFlag combine(FunctorFlag a, FunctorFlag b);

struct CellularVariety {
  std::string name;
  CellMultiset cells;
  int dim = 0;
  bool proper = true;
  bool smooth = true;
  FunctorFlag functor = FunctorFlag::kBoth;

  /// Validates the invariants: dim is the top cell dimension, and a smooth proper
  /// variety has a palindromic cell polynomial. Without an explicit flag, smooth proper
  /// varieties certify both functors and anything else only M^c.
  static CellularVariety make(std::string name, CellMultiset cells, bool proper, bool smooth,
                              std::optional<FunctorFlag> functor = std::nullopt);
  static CellularVariety point();
  static CellularVariety affine_space(int n);
  static CellularVariety projective_space(int n);
};

struct FlaggedMotive {
  TateExpr motive;
  FunctorFlag functor = FunctorFlag::kBoth;
  /// Hypotheses the caller is responsible for, e.g. "irreducible base".
  std::vector<std::string> assumptions;
};

FlaggedMotive cellular_motive(const CellularVariety& x);

/// One stratum of a relatively cellular variety: an affine bundle of rank `dim` over a
/// smooth proper Y with known motive.
struct RelativeCell {
  TateExpr base;
  int dim = 0;
};

/// sum_i M(Y_i)(d_i)[2 d_i].
FlaggedMotive relative_cellular_motive(std::span<const RelativeCell> strata, FunctorFlag functor);

/// G/P_I: one cell of dimension l(w) per minimal coset representative.
CellularVariety flag_motive(const WeylGroup& group, ParabolicSubset subset);
CellularVariety flag_motive(const RootSystem& rs, ParabolicSubset subset, std::uint64_t weyl_cap = kDefaultWeylCap);

struct FibrationBase {
  TateExpr motive;
  bool smooth = true;
  bool cellular = false;
  FunctorFlag functor = FunctorFlag::kBoth;

  static FibrationBase point();
  /// M(NAME) as an opaque smooth base; not cellular.
  static FibrationBase opaque(const std::string& name);
  static FibrationBase from_variety(const CellularVariety& x);
};

enum class LocalTriviality { kZariski, kEtale };

struct FibrationSpec {
  FibrationBase base;
  CellularVariety fiber;
  LocalTriviality triviality = LocalTriviality::kZariski;
  /// Accept an etale-locally-trivial bundle because its restriction to the cells of a
  /// cellular base is trivial.
  bool etale_cellular_override = false;
};

/// M(total) = sum_p CH_p(F) (x) M(base)(p)[2p].
/// Throws NonProperFiber, NonSmoothBase, or EtaleWithoutOverride.
FlaggedMotive leray_hirsch(const FibrationSpec& f);

struct GysinRecord {
  /// total - boundary^*(n)[2n], signed.
  TateLedger ledger;
  TateExpr open_class;
  std::string label = "graded class of M(open part)";
};

/// Raised when the signed ledger has a negative entry; the ledger is kept for reporting.
class NegativeMultiplicityError : public Error {
 public:
  NegativeMultiplicityError(TateLedger ledger, const std::string& message)
      : Error(ErrorCode::kNegativeMultiplicity, message), ledger_(std::move(ledger)) {}
  const TateLedger& ledger() const noexcept { return ledger_; }

 private:
  TateLedger ledger_;
};

/// Split-level Gysin triangle M(U) -> M(X) -> M^c(X \ U)^*(n)[2n] for X smooth proper of dimension n.
GysinRecord gysin_open_class(const TateExpr& total, const TateExpr& boundary, int n);

}  // namespace motive_forge
