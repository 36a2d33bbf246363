#include "lcpol/cech_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace lcpol {

bool cech_piece_nonzero(const MonomialIdeal& ideal, const MultiDegree& a, VarSubset subset) {
  const std::size_t n = ideal.num_vars();
  if (a.size() != n) throw DimensionMismatch("cech_piece_nonzero: degree length mismatch");
  auto in_subset = [&](std::size_t i) { return ((subset >> i) & 1u) != 0; };

  // Inverting x_F only allows negative exponents on F.
  for (std::size_t i = 0; i < n; ++i)
    if (!in_subset(i) && a[i] < 0) return false;

  // An element of degree a is x^{a + N e_F} / x_F^N. It is zero in the
  // localization iff x^{a + N e_F} lies in I for N large; exponents on F
  // beyond every generator's are as good as infinite.
  int big = 0;
  for (const auto& m : ideal.gens()) big = std::max(big, m.degree());
  std::vector<int> exps(n);
  for (std::size_t i = 0; i < n; ++i) exps[i] = in_subset(i) ? big + std::abs(a[i]) : a[i];
  return !ideal.contains(Monomial(std::move(exps)));
}

CechStrand cech_strand(const MonomialIdeal& ideal, const MultiDegree& a) {
  const std::size_t n = ideal.num_vars();
  if (n >= 63) throw std::invalid_argument("too many variables for a Čech strand");
  CechStrand strand;
  strand.n = n;
  strand.basis.resize(n + 1);
  for (VarSubset f = 0; f < (VarSubset{1} << n); ++f)
    if (cech_piece_nonzero(ideal, a, f)) strand.basis[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  for (std::size_t p = 0; p < n; ++p) {
    const auto& src = strand.basis[p];
    const auto& dst = strand.basis[p + 1];
    std::unordered_map<VarSubset, std::size_t> row_of;
    for (std::size_t r = 0; r < dst.size(); ++r) row_of.emplace(dst[r], r);
    SparseMatrix d(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (std::size_t j = 0; j < n; ++j) {
        const VarSubset bit = VarSubset{1} << j;
        if (src[c] & bit) continue;
        const VarSubset target = src[c] | bit;
        auto it = row_of.find(target);
        if (it == row_of.end()) continue;  // the localization map lands in zero
        const int position = std::popcount(target & (bit - 1));
        d.set(it->second, c, position % 2 == 0 ? 1 : -1);
      }
    }
    strand.differential.push_back(std::move(d));
  }

  for (std::size_t p = 0; p + 1 < strand.differential.size(); ++p)
    if (!(strand.differential[p + 1] * strand.differential[p]).is_zero())
      throw std::logic_error("Čech strand differentials do not compose to zero at p = " +
                             std::to_string(p));
  return strand;
}

std::map<int, std::size_t> cech_cohomology_dims(const MonomialIdeal& ideal, const MultiDegree& a,
                                                const FieldSpec& field) {
  const CechStrand strand = cech_strand(ideal, a);
  std::vector<std::size_t> ranks;
  for (const auto& d : strand.differential) ranks.push_back(rank(d, field));
  std::map<int, std::size_t> dims;
  for (std::size_t p = 0; p <= strand.n; ++p) {
    const std::size_t out = p < ranks.size() ? ranks[p] : 0;
    const std::size_t in = p > 0 ? ranks[p - 1] : 0;
    const std::size_t h = strand.basis[p].size() - out - in;
    if (h) dims[static_cast<int>(p)] = h;
  }
  return dims;
}

std::size_t cech_cohomology_dim(const MonomialIdeal& ideal, const MultiDegree& a, int i,
                                const FieldSpec& field) {
  auto dims = cech_cohomology_dims(ideal, a, field);
  auto it = dims.find(i);
  return it == dims.end() ? 0 : it->second;
}

}  // namespace lcpol
