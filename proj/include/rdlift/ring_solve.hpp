#pragma once

#include "rdlift/ring_matrix.hpp"

namespace rdlift {

// u * a * v = diag(p^pivot_vals[i]) padded with zeros; u, v invertible.
struct RingDiagonalization {
  RingMatrix u, v;
  std::vector<int> pivot_vals;  // ascending valuations of the nonzero divisors
  int rank() const { return static_cast<int>(pivot_vals.size()); }
};

RingDiagonalization ring_diagonalize(const RingMatrix& a);

// Solutions of a*x = b over GR(p^k, e).  The homogeneous module is reported
// as free generators plus cyclic p-power torsion generators.
struct LinearSolveResult {
  bool solvable = false;
  std::vector<GaloisRing::Elem> particular;          // length = cols(a)
  std::vector<std::vector<GaloisRing::Elem>> hom_free;
  std::vector<std::vector<GaloisRing::Elem>> hom_torsion;
  std::vector<int> hom_torsion_order_val;  // generator i has order p^v
  std::vector<int> divisor_vals;           // elementary divisor valuations of a
  int free_rank() const { return static_cast<int>(hom_free.size()); }
  bool homogeneous_module_free() const { return hom_torsion.empty(); }
};

// b must be a rows(a) x 1 column
LinearSolveResult linear_solve_mod(const RingMatrix& a, const RingMatrix& b);

// Solution module of a*x = 0
LinearSolveResult kernel_module(const RingMatrix& a);

// Coefficient matrix of the commutation system X*m = m*X for every m in ms,
// in the n^2 unknowns vec(X) (row-major).
RingMatrix commutation_system(const std::vector<RingMatrix>& ms);

// Basis (free generators) of {X : X m = m X for all m}, requiring the solution
// module to be free; throws std::domain_error when it is not.
std::vector<RingMatrix> centralizer_basis(const GaloisRing& ring, int n,
                                          const std::vector<RingMatrix>& ms);

// Row-space membership over the residue field: can target be written as a
// linear combination of the flattened basis?  All matrices over a k=1 ring.
bool in_span(const std::vector<RingMatrix>& basis, const RingMatrix& target);
bool same_span(const std::vector<RingMatrix>& a, const std::vector<RingMatrix>& b);

}  // namespace rdlift
