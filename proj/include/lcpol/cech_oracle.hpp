// Local cohomology of S/I from the degree-a strand of the Čech complex on
// x_1..x_n. Shares only core and exact_linalg with the Takayama path, so
// the two can check each other.

#ifndef LCPOL_CECH_ORACLE_HPP
#define LCPOL_CECH_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "lcpol/core.hpp"
#include "lcpol/exact_linalg.hpp"

namespace lcpol {

/// Variable subset as a bitmask, bit i for x_{i+1}.
using VarSubset = std::uint64_t;

/// Whether ((S/I)_{x^F})_a is nonzero: a_i >= 0 off F, and x^{a + N e_F}
/// lies outside I for large N.
bool cech_piece_nonzero(const MonomialIdeal& ideal, const MultiDegree& a, VarSubset subset);

struct CechStrand {
  std::size_t n = 0;
  /// basis[p]: subsets of size p with a nonzero piece, ascending.
  std::vector<std::vector<VarSubset>> basis;
  /// differential[p]: C^p -> C^{p+1}, rows indexed by basis[p + 1].
  std::vector<SparseMatrix> differential;
};

/// Builds the strand and checks that consecutive differentials compose to
/// zero (std::logic_error otherwise).
CechStrand cech_strand(const MonomialIdeal& ideal, const MultiDegree& a);

std::map<int, std::size_t> cech_cohomology_dims(const MonomialIdeal& ideal, const MultiDegree& a,
                                                const FieldSpec& field);

std::size_t cech_cohomology_dim(const MonomialIdeal& ideal, const MultiDegree& a, int i,
                                const FieldSpec& field);

}  // namespace lcpol

#endif  // LCPOL_CECH_ORACLE_HPP
