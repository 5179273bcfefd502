#pragma once

#include <vector>

#include "expcircle/complexes.hpp"
#include "expcircle/numeric.hpp"

namespace expcircle {

// Cell structure of exp_k of the circle: one vertex sigma_0, cells sigma_i
// and tau_i in each dimension 1 <= i <= k-1, a top cell sigma_k. Within a
// dimension the order is [sigma, tau].
DeltaComplex exp_cell_complex(long k);

// Subcomplex of subsets containing the basepoint: one cell tau_i per
// dimension 0 <= i <= k-1.
DeltaComplex expcupone_cell_complex(long k);

// Truncation of the infinite complex: sigma_i and tau_i both present in every
// dimension 1 <= i <= n_top.
DeltaComplex truncated_full_complex(long n_top);

// The closed form for the 2x2 boundary in dimension i, columns [sigma, tau].
IntMat closed_form_boundary(long i);

// H_*(exp_k) for k = 1..k_max; result[k-1][i] is H_i.
std::vector<std::vector<HomologyGroup>> exp_homology_table(long k_max);

// exp_k is a sphere of this dimension: 2*ceil(k/2) - 1.
long sphere_dimension(long k);

// H_*(S^dim) listed for dimensions 0..top (dim >= 1).
std::vector<HomologyGroup> sphere_homology(long dim, long top);

// Cell-name-preserving chain map exp_{k_from} -> exp_{k_to}, k_from < k_to.
std::vector<IntMat> inclusion_chain_map(long k_from, long k_to);

// Chain map exp_{k-1} -> expcupone_k induced by adjoining the basepoint;
// sigma_i and tau_i both map to tau_i.
std::vector<IntMat> union_basepoint_chain_map(long k);

// Nondecreasing x_1 <= ... <= x_k in [0, 1].
struct SimplexPoint {
  std::vector<Rat> x;
};

// The prism model: nondecreasing a_1 <= ... <= a_{k-1} in [0, 1] and a height
// t in [0, 1].
struct PrismPoint {
  std::vector<Rat> a;
  Rat t;
};

SimplexPoint prism_to_simplex(const PrismPoint& p);

// Inverse coordinate change; throws FakeFaceError where x_1 = 0 and x_k = 1.
PrismPoint simplex_to_prism(const SimplexPoint& s);

// The gluing map of the prism's top onto its bottom. Iterating k times gives
// the identity.
std::vector<Rat> monodromy_phi(const std::vector<Rat>& a);

// Sign of the determinant of the linear part of the monodromy: +1 exactly
// when k is odd.
int monodromy_orientation_sign(long k);

// Nonnegative weights summing to 1 over the vertices of a reference simplex.
struct BarycentricPoint {
  std::vector<Rat> weights;
};

// One stage of the edge retraction: scales the weight of vertex 0 by (1-t)
// and redistributes onto the rest. Throws std::domain_error when t > 0 and
// all weight sits on vertex 0.
BarycentricPoint edge_retraction_psi(const BarycentricPoint& w, const Rat& t);

// The composed retraction onto the last edge [beta_{n-1}, beta_n]: stages
// killing vertices 0, 1, ... run on uniform time subintervals. Input must be
// off the deleted face (some weight on the last two vertices).
BarycentricPoint composed_edge_retraction(const BarycentricPoint& w, const Rat& t);

// Retraction of the simplex minus its codimension->=2 skeleton onto the star
// graph B (segments from the barycentre to the facet barycentres): locate the
// barycentric-subdivision simplex containing w by sorting the weights, then
// run the composed edge retraction there. Commutes with all coordinate
// permutations and preserves open facets.
BarycentricPoint star_retraction(const BarycentricPoint& w, const Rat& t);

// Membership in B: all weights equal except that the single smallest may be
// strictly smaller (the barycentre and the facet barycentres both qualify).
bool on_star_graph(const BarycentricPoint& w);

}  // namespace expcircle
