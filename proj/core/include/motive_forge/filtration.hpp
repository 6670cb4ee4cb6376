#pragma once

// Trees of distinguished triangles with split-level classes attached:
// the nested filtration over a face lattice, the slice filtration of a torus
// bundle, and the triangles for a G-bundle over a curve.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "motive_forge/cellular.hpp"
#include "motive_forge/kvar.hpp"
#include "motive_forge/rootsys.hpp"
#include "motive_forge/tateexpr.hpp"
#include "motive_forge/wonderful.hpp"

namespace motive_forge {

struct MotiveTerm {
  std::string label;
  TateLedger cls;
  FunctorFlag functor = FunctorFlag::kMc;
};

/// left -> middle -> right.
struct TriangleRecord {
  MotiveTerm left;
  MotiveTerm middle;
  MotiveTerm right;
  std::string provenance;
  /// left + right == middle, and all three have non-negative multiplicities.
  bool split_verified = false;
};

TriangleRecord make_triangle(MotiveTerm left, MotiveTerm middle, MotiveTerm right, std::string provenance);

struct FiltrationNode {
  std::uint32_t face = 0;
  int level = 0;
  /// M^c(union of boundary) -> M^c(D_F) -> M^c(D_F minus boundary).
  TriangleRecord triangle;
  std::vector<std::uint32_t> children;
};

struct FiltrationTree {
  FaceLattice lattice;
  /// One per face, ordered by (level, face).
  std::vector<FiltrationNode> nodes;
  /// Level r: M^c(union Q_{r+1}) -> M^c(union Q_r) -> sum over Q_r of the open parts.
  /// Level 0 is the root triangle M^c(boundary) -> M^c(compactification) -> M^c(open).
  std::vector<TriangleRecord> levels;
  TateLedger root_open_class;
  /// Faces whose open part has a negative graded piece.
  std::vector<std::uint32_t> negative_faces;

  const FiltrationNode& node(std::uint32_t face) const;
};

/// Levels wider than this take their union classes from the open strata instead of
/// inclusion-exclusion over the level.
inline constexpr std::size_t kMaxInclusionExclusion = 16;

/// Every D_F class is leray_hirsch(base, fiber of F). Negative graded pieces are
/// recorded in negative_faces; the tree is still returned.
FiltrationTree nested_filtration(const FaceLattice& lattice, const std::map<std::uint32_t, TateExpr>& face_motive,
                                 const FibrationBase& base);
FiltrationTree nested_filtration(const FaceModel& model, const FibrationBase& base);

/// Faces of the standard n-simplex (nonempty vertex subsets of n + 1 vertices);
/// a face with k + 1 vertices carries P^k.
FaceModel simplex_lattice(int n);

/// nu^{>=p+1} -> nu^{>=p} -> lambda_p for p = 0..r, with
/// lambda_p = base(p)[p] (x) Lambda^p(cocharacters), rank C(r, p).
std::vector<TriangleRecord> slice_filtration_torus(int rank, const TateExpr& base);

/// Graded class of the motive of a split semisimple group:
/// tensor over the invariant degrees of Z(0)[0] + Z(d)[2d - 1].
TateExpr split_group_motive(const RootSystem& rs);

struct CurveBundleReport {
  TateExpr group_motive;
  /// Tate twist of the Gysin term for the fiber over the removed point (its codimension).
  int gysin_twist = 1;
  /// Drinfeld-Simpson triangle first, then the slice triangles for the central torus.
  std::vector<TriangleRecord> triangles;
  /// [G^s]([C] - 1) + [G^s], times [Z] for the central torus.
  K0Class k0_shadow;
  std::vector<std::string> assumptions;
};

/// G-bundle over a smooth projective curve C with M(C) = M0 + M1 + M2,
/// M0 = Z(0)[0], M1 opaque, M2 = Z(1)[2].
CurveBundleReport curve_bundle_triangles(const RootSystem& rs, int central_rank, const std::string& curve = "C");

}  // namespace motive_forge
