// Graded local cohomology of S/I for monomial I via Takayama's complex.

#ifndef LCPOL_TAKAYAMA_HPP
#define LCPOL_TAKAYAMA_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "lcpol/core.hpp"
#include "lcpol/exact_linalg.hpp"
#include "lcpol/simplicial.hpp"

namespace lcpol {

/// Δ_a = { F \ supp_-(a) : supp_-(a) ⊆ F ⊆ [n], every generator m has some
/// i outside F with a_i < ν_i(m) }.
SimplicialComplex takayama_complex(const MonomialIdeal& ideal, const MultiDegree& a);

/// dim_k H^i_m(S/I)_a for every i with a nonzero value.
std::map<int, std::size_t> lc_dims(const MonomialIdeal& ideal, const MultiDegree& a,
                                   const FieldSpec& field);

/// dim_k H^i_m(S/I)_a = dim H̃^{i-|supp_-(a)|-1}(Δ_a; k).
std::size_t lc_dim(const MonomialIdeal& ideal, const MultiDegree& a, int i,
                   const FieldSpec& field);

/// All a with -1 <= a_i <= ρ_i - 1, in lexicographic order.
std::vector<MultiDegree> canonical_box(const MonomialIdeal& ideal);

/// Nonzero graded pieces over the canonical box, keyed by (degree, index).
struct LCTable {
  MonomialIdeal ideal;
  FieldSpec field = FieldSpec::rationals();
  std::map<std::pair<MultiDegree, int>, std::size_t> entries;

  friend bool operator==(const LCTable&, const LCTable&) = default;
};

using DegreeDimsFn =
    std::function<std::map<int, std::size_t>(const MonomialIdeal&, const MultiDegree&, const FieldSpec&)>;

/// Table of `dims` evaluated over the canonical box; indices outside [0, n]
/// are an internal error.
LCTable build_table(const MonomialIdeal& ideal, const FieldSpec& field, const DegreeDimsFn& dims);

LCTable lc_table(const MonomialIdeal& ideal, const FieldSpec& field);

struct DepthDim {
  std::size_t depth = 0;
  std::size_t dim = 0;
  bool cohen_macaulay() const noexcept { return depth == dim; }
};

/// Smallest and largest nonvanishing local cohomology index. Throws
/// std::domain_error for the unit ideal.
DepthDim depth_and_dim(const MonomialIdeal& ideal, const FieldSpec& field);
DepthDim depth_and_dim(const LCTable& table);

}  // namespace lcpol

#endif  // LCPOL_TAKAYAMA_HPP
