// Polarization of monomial ideals, the degree map into the polarized ring,
// and the two auxiliary constructions used to reduce to degree zero:
// restriction to a subset of variables and partial polarization.

#ifndef LCPOL_POLARIZATION_HPP
#define LCPOL_POLARIZATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lcpol/core.hpp"

namespace lcpol {

/// Square-free ideal I' in variables x_{i,j}, 1 <= j <= ρ_i, laid out in
/// blocks by original variable.
struct PolarizedIdeal {
  MonomialIdeal ideal;
  std::size_t origin_n = 0;
  std::vector<int> rho;

  /// Flat coordinate of x_{i,j}; i is 0-based, j is 1-based as in x_{i,j}.
  std::size_t flat_index(std::size_t i, int j) const;
};

/// Name of the j-th polarized copy of variable i (0-based i): "x_<i+1>_<j>".
std::string polarized_var_name(std::size_t i, int j);

/// m' = prod_i x_{i,1} ... x_{i,ν_i(m)}. Throws std::out_of_range if some
/// exponent exceeds ρ_i.
Monomial polarize_monomial(const Monomial& m, const std::vector<int>& rho);

PolarizedIdeal polarize_ideal(const MonomialIdeal& ideal);

/// Image α of a <= ρ - 1: block i is a_i + 1 zeros then ρ_i - a_i - 1
/// entries -1, or all -1 when a_i < 0. Throws std::domain_error if some
/// a_i >= ρ_i.
MultiDegree degree_map(const MultiDegree& a, const std::vector<int>& rho);

/// Set every variable outside `keep` to 1 and minimalize. `keep` holds
/// 0-based indices; the result's variables follow ascending index order.
MonomialIdeal restrict_to(const MonomialIdeal& ideal, const std::vector<std::size_t> & keep);

/// Polarize only the exponents of variable i above t + 1: x_i^e with
/// e >= t + 2 becomes x_i^{t+1} x_{i,t+2} ... x_{i,e}. The ρ_i - t - 1
/// new variables are appended after the original ones. Requires
/// 0 <= t < ρ_i - 1 (std::domain_error otherwise).
MonomialIdeal partial_polarize(const MonomialIdeal& ideal, std::size_t i, int t);

/// For each flat variable of polarize_ideal(partial_polarize(I, i, t)),
/// the flat variable of polarize_ideal(I) it corresponds to.
std::vector<std::size_t> partial_polarization_renaming(const MonomialIdeal& ideal, std::size_t i,
                                                       int t);

/// Substitute x_{i,j} -> x_{i,1} and minimalize.
MonomialIdeal depolarize(const PolarizedIdeal& polarized,
                         const std::vector<std::string>& original_names);

/// depolarize(P) == I, comparing generators and variable count.
bool depolarize_check(const PolarizedIdeal& polarized, const MonomialIdeal& ideal);

/// Apply a variable permutation: variable k of `ideal` becomes variable
/// renaming[k] of the result.
MonomialIdeal rename_variables(const MonomialIdeal& ideal, const std::vector<std::size_t>& renaming,
                               std::vector<std::string> new_names);

}  // namespace lcpol

#endif  // LCPOL_POLARIZATION_HPP
