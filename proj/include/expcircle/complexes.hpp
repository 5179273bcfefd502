#pragma once

#include <string>
#include <vector>

#include "expcircle/errors.hpp"
#include "expcircle/numeric.hpp"

namespace expcircle {

// Cells with ordered faces. faces[d][c][j] indexes the (d-1)-cell obtained by
// omitting vertex j of cell c; dimension-0 cells have empty face lists.
struct DeltaComplex {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::vector<std::vector<long>>> faces;

  long dimension() const { return static_cast<long>(cells.size()) - 1; }
  void validate() const;  // throws std::invalid_argument when malformed
};

// ranks[i] chain groups, boundaries[i] : C_i -> C_{i-1}. Every dimension is
// present: boundaries[0] is 0 x ranks[0], and a rank-0 dimension gets genuine
// 0-sized matrices rather than being skipped.
struct ChainComplex {
  std::vector<long> ranks;
  std::vector<IntMat> boundaries;

  long top_dimension() const { return static_cast<long>(ranks.size()) - 1; }
  void validate() const;  // shapes match ranks and boundary(i-1)*boundary(i) = 0
};

struct HomologyGroup {
  long rank = 0;
  std::vector<Int> torsion;  // each >= 2, each dividing the next

  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const HomologyGroup& a, const HomologyGroup& b) {
    return !(a == b);
  }
};

// U * A * V = S with U, V unimodular and S diagonal, nonnegative, each
// diagonal entry dividing the next.
struct SNFResult {
  IntMat U, S, V;
};

ChainComplex boundary_matrices(const DeltaComplex& X);

SNFResult smith_normal_form(const IntMat& A);

HomologyGroup homology_at(const ChainComplex& C, long i);
std::vector<HomologyGroup> homology_all(const ChainComplex& C);

long euler_characteristic(const ChainComplex& C);

// Explicit generators of H_i: columns of free_generators / torsion_generators
// are integer cycle vectors in the dimension-i cell basis. The remaining
// fields evaluate class coordinates of arbitrary cycles (see
// free_class_coordinates); free generator columns are normalised so their
// first nonzero entry is positive.
struct HomologyBasis {
  HomologyGroup group;
  IntMat free_generators;
  IntMat torsion_generators;

  IntMat cycle_check;   // rows annihilating exactly the cycles
  IntMat to_quotient;   // kernel-lattice coordinates of a cycle
  IntMat change;        // generator-basis change applied after to_quotient
  long inner_rank = 0;  // nonzero invariant factors of the boundary image
};

HomologyBasis homology_basis(const ChainComplex& C, long i);

// Coordinates of [z] on the free generators of basis; torsion coordinates are
// discarded. Throws std::invalid_argument when z is not a cycle.
IntVec free_class_coordinates(const HomologyBasis& basis, const IntVec& z);

// Matrix of H_i(f) : H_i(C) -> H_i(D) on the free parts of the computed
// generator bases. f[j] : C_j -> D_j must be given for every j up to the top
// dimension of C; commutation with the boundaries is checked and a failure
// reported as NotAChainMapError with the offending dimension.
IntMat induced_map_on_homology(const ChainComplex& C, const ChainComplex& D,
                               const std::vector<IntMat>& f, long i);

// Fraction-free (Bareiss) determinant; throws std::invalid_argument unless square.
Int determinant(const IntMat& A);

}  // namespace expcircle
