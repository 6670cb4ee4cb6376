#pragma once

// Orbit combinatorics of the wonderful compactification of an adjoint group.
//
// G x G-orbits correspond to subsets I of the simple roots (faces of the Weyl
// chamber polytope modulo W); the closure D_I of the orbit for I contains the
// orbits for all J contained in I. D_I is paved by |W|^2 affine cells C_{I,(u,v)}
// of dimension l(w0) - l(u) + |I cap I_u| + l(v).

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "motive_forge/cellular.hpp"
#include "motive_forge/config.hpp"
#include "motive_forge/rootsys.hpp"
#include "motive_forge/tateexpr.hpp"
#include "motive_forge/upoly.hpp"

namespace motive_forge {

enum class CharMode { kZero, kPositive };

/// Choice of the index set I_u in the cell-dimension formula.
enum class CellIndexRule {
  /// I_u = {alpha : l(u s_alpha) > l(u)}. Gives the cell decomposition of D_I.
  kAscentSet,
  /// I_u = simple roots missing from a reduced word of u. Kept for comparison; its
  /// cell polynomials are not palindromic beyond rank one.
  kSupportComplement,
};

/// Faces indexed by subsets of a ground set (bitmasks), ordered by inclusion.
/// Codimension of a face F is ground - |F|; the top face is the whole ground set.
class FaceLattice {
 public:
  /// Throws InvalidLattice unless the full ground set is among the faces.
  FaceLattice(int ground, std::vector<std::uint32_t> faces);

  int ground() const noexcept { return ground_; }
  const std::vector<std::uint32_t>& faces() const noexcept { return faces_; }
  bool contains(std::uint32_t face) const;
  std::uint32_t top() const noexcept { return full_; }
  int codim(std::uint32_t face) const noexcept { return ground_ - __builtin_popcount(face); }
  int dim_of_face(std::uint32_t face) const noexcept { return __builtin_popcount(face); }
  int max_codim() const noexcept;
  /// Q_r: the faces of codimension r, ascending by mask.
  std::vector<std::uint32_t> level(int r) const;
  /// {F cap T : T in Q_1} minus F itself, restricted to faces of the lattice.
  std::vector<std::uint32_t> boundary(std::uint32_t face) const;
  /// F cap F' when that is a face, otherwise nullopt (empty intersection).
  std::optional<std::uint32_t> meet(std::uint32_t a, std::uint32_t b) const;

 private:
  int ground_ = 0;
  std::uint32_t full_ = 0;
  std::vector<std::uint32_t> faces_;
};

/// Boolean lattice on the simple roots.
FaceLattice face_lattice(const RootSystem& rs);

/// A lattice together with the fiber class of every face.
struct FaceModel {
  FaceLattice lattice;
  std::map<std::uint32_t, TateExpr> face_motives;
};

struct OrbitCell {
  std::uint32_t u = 0;  // index into the group's canonical order
  std::uint32_t v = 0;
  int dim = 0;
};

struct OrbitClosure {
  ParabolicSubset face;
  std::shared_ptr<const WeylGroup> group;
  /// (u, v) in canonical Weyl order, u major.
  std::vector<OrbitCell> cells;

  UPoly cell_polynomial() const;
  int top_dim() const;
};

OrbitClosure orbit_closure_cells(std::shared_ptr<const WeylGroup> group, ParabolicSubset face,
                                 CellIndexRule rule = CellIndexRule::kAscentSet);
OrbitClosure orbit_closure_cells(const RootSystem& rs, ParabolicSubset face, std::uint64_t weyl_cap = kDefaultWeylCap,
                                 CellIndexRule rule = CellIndexRule::kAscentSet);

/// Same cell polynomial as orbit_closure_cells, as a product of the u- and v-sums.
UPoly orbit_closure_polynomial(const WeylGroup& group, ParabolicSubset face,
                               CellIndexRule rule = CellIndexRule::kAscentSet);

/// from_cells of the D_I cells; flagged both in characteristic zero, Mc otherwise.
FlaggedMotive orbit_closure_motive(const WeylGroup& group, ParabolicSubset face, CharMode mode = CharMode::kZero);

/// Components D_{Delta minus {i}} of the boundary divisor with intersections
/// D^J = D_{Delta minus J}; each node carries its orbit-closure motive.
Configuration boundary_configuration(const WeylGroup& group, CharMode mode = CharMode::kZero);

/// Face lattice of the group with every D_I motive attached.
FaceModel wonderful_model(const WeylGroup& group, CharMode mode = CharMode::kZero);

/// "D{1,2}" style name of the orbit closure for a face.
std::string orbit_closure_name(ParabolicSubset face);

}  // namespace motive_forge
