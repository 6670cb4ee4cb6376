#include "motive_forge/cellular.hpp"

#include <set>

namespace motive_forge {

std::string_view functor_name(FunctorFlag flag) noexcept {
  switch (flag) {
    case FunctorFlag::kM: return "M";
    case FunctorFlag::kMc: return "Mc";
    case FunctorFlag::kBoth: return "both";
  }
  return "both";
}

FunctorFlag parse_functor(std::string_view text) {
  if (text == "M") return FunctorFlag::kM;
  if (text == "Mc") return FunctorFlag::kMc;
  if (text == "both") return FunctorFlag::kBoth;
  throw Error(ErrorCode::kParseError, "functor must be M, Mc or both, got '" + std::string(text) + "'");
}

FunctorFlag combine(FunctorFlag a, FunctorFlag b) {
  if (a == FunctorFlag::kBoth) return b;
  if (b == FunctorFlag::kBoth || a == b) return a;
  throw Error(ErrorCode::kFunctorMismatch, "cannot combine an M-only class with an Mc-only class");
}

CellularVariety CellularVariety::make(std::string name, CellMultiset cells, bool proper, bool smooth,
                                      std::optional<FunctorFlag> functor) {
  CellularVariety x;
  x.name = std::move(name);
  x.dim = cells.top_dimension();
  x.cells = std::move(cells);
  x.proper = proper;
  x.smooth = smooth;
  x.functor = functor.value_or(proper && smooth ? FunctorFlag::kBoth : FunctorFlag::kMc);
  if (x.cells.empty()) throw Error(ErrorCode::kInvalidLattice, "cellular variety '" + x.name + "' has no cells");
  if (proper && smooth && !TateExpr::from_cells(x.cells).is_palindromic(x.dim))
    throw Error(ErrorCode::kNotPureEven,
                "smooth proper variety '" + x.name + "' must have a palindromic cell polynomial");
  if (x.functor == FunctorFlag::kBoth && !(proper && smooth))
    throw Error(ErrorCode::kFunctorMismatch, "only smooth proper varieties certify both M and Mc");
  return x;
}

CellularVariety CellularVariety::point() { return make("pt", CellMultiset{0}, true, true); }

CellularVariety CellularVariety::affine_space(int n) {
  return make("A^" + std::to_string(n), CellMultiset{n}, n == 0, true);
}

CellularVariety CellularVariety::projective_space(int n) {
  std::vector<int> dims;
  for (int d = 0; d <= n; ++d) dims.push_back(d);
  return make("P^" + std::to_string(n), CellMultiset(std::move(dims)), true, true);
}

FlaggedMotive cellular_motive(const CellularVariety& x) {
  return {TateExpr::from_cells(x.cells), x.functor, {}};
}

FlaggedMotive relative_cellular_motive(std::span<const RelativeCell> strata, FunctorFlag functor) {
  FlaggedMotive out;
  out.functor = functor;
  for (const RelativeCell& cell : strata) out.motive = sum(out.motive, twist_shift(cell.base, cell.dim, 2 * cell.dim));
  if (functor != FunctorFlag::kMc) out.assumptions.emplace_back("every filtration step smooth");
  return out;
}

CellularVariety flag_motive(const WeylGroup& group, ParabolicSubset subset) {
  std::vector<int> dims;
  for (const WeylElement& w : minimal_coset_reps(group, subset)) dims.push_back(w.length);
  const RootSystem& rs = group.root_system();
  std::string name = "G/P{";
  bool first = true;
  for (int idx : subset.indices()) {
    name += (first ? "" : ",") + std::to_string(idx);
    first = false;
  }
  name += "}(" + rs.label + ")";
  return CellularVariety::make(std::move(name), CellMultiset(std::move(dims)), true, true);
}

CellularVariety flag_motive(const RootSystem& rs, ParabolicSubset subset, std::uint64_t weyl_cap) {
  return flag_motive(WeylGroup(rs, weyl_cap), subset);
}

FibrationBase FibrationBase::point() { return {TateExpr::unit(), true, true, FunctorFlag::kBoth}; }

FibrationBase FibrationBase::opaque(const std::string& name) {
  return {TateExpr::opaque(name), true, false, FunctorFlag::kM};
}

FibrationBase FibrationBase::from_variety(const CellularVariety& x) {
  return {TateExpr::from_cells(x.cells), x.smooth, true, x.functor};
}

FlaggedMotive leray_hirsch(const FibrationSpec& f) {
  if (!f.fiber.proper) throw Error(ErrorCode::kNonProperFiber, "Leray-Hirsch needs a proper fiber, got '" + f.fiber.name + "'");
  if (!f.base.smooth) throw Error(ErrorCode::kNonSmoothBase, "Leray-Hirsch needs the motive of a smooth base");
  const bool base_is_point = f.base.motive == TateExpr::unit();
  if (f.triviality == LocalTriviality::kEtale && !base_is_point) {
    if (!f.base.cellular)
      throw Error(ErrorCode::kEtaleWithoutOverride, "etale-locally-trivial fibration over a non-cellular base is not supported");
    if (!f.etale_cellular_override)
      throw Error(ErrorCode::kEtaleWithoutOverride,
                  "etale-locally-trivial fibration over a cellular base needs the explicit override");
  }
  FlaggedMotive out;
  out.motive = tensor(f.base.motive, TateExpr::from_cells(f.fiber.cells));
  out.functor = combine(f.base.functor, f.fiber.functor);
  if (!base_is_point) out.assumptions.emplace_back("irreducible base");
  if (f.triviality == LocalTriviality::kEtale && !base_is_point)
    out.assumptions.emplace_back("trivial on the cells of the base");
  return out;
}

GysinRecord gysin_open_class(const TateExpr& total, const TateExpr& boundary, int n) {
  std::set<std::string> atoms;
  for (const auto& a : total.opaque_atoms()) atoms.insert(a);
  for (const auto& a : boundary.opaque_atoms()) atoms.insert(a);
  if (atoms.size() > 1) throw Error(ErrorCode::kNotPureEven, "Gysin bookkeeping allows at most one shared opaque atom");
  if (!total.is_even() || !boundary.is_even())
    throw Error(ErrorCode::kNotPureEven, "Gysin bookkeeping needs even expressions (q = 2p)");

  GysinRecord record;
  record.ledger = TateLedger(total) - dual_ledger(TateLedger(boundary), n);
  auto effective = record.ledger.to_effective();
  if (!effective)
    throw NegativeMultiplicityError(record.ledger, "split-level Gysin difference has a negative multiplicity: " +
                                                       record.ledger.to_string());
  record.open_class = *effective;
  return record;
}

}  // namespace motive_forge
