#include "lcpol/takayama.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace lcpol {

SimplicialComplex takayama_complex(const MonomialIdeal& ideal, const MultiDegree& a) {
  const std::size_t n = ideal.num_vars();
  if (a.size() != n)
    throw DimensionMismatch("degree has " + std::to_string(a.size()) + " entries, ring has " +
                            std::to_string(n) + " variables");
  if (n > kMaxVertices) throw std::invalid_argument("too many variables for Takayama complex");

  const FaceMask all = n == 0 ? 0 : (FaceMask{1} << n) - 1;
  FaceMask neg = 0;
  for (auto i : negative_support(a)) neg |= FaceMask{1} << i;

  // F ranges over supersets of supp_-(a); iterate the free part as subsets
  // of the complement.
  const FaceMask free = all & ~neg;
  std::vector<FaceMask> faces;
  FaceMask extra = 0;
  while (true) {
    const FaceMask outside = free & ~extra;
    bool admissible = true;
    for (const auto& m : ideal.gens()) {
      bool witness = false;
      for (FaceMask rest = outside; rest && !witness; rest &= rest - 1) {
        auto i = static_cast<std::size_t>(std::countr_zero(rest));
        witness = a[i] < m[i];
      }
      if (!witness) {
        admissible = false;
        break;
      }
    }
    if (admissible) faces.push_back(extra);
    if (extra == free) break;
    extra = (extra - free) & free;  // next subset of `free`
  }
  // Shrinking F only enlarges [n] \ F, so admissible sets are closed under
  // subsets.
  return SimplicialComplex::from_closed_faces(n, std::move(faces));
}

std::map<int, std::size_t> lc_dims(const MonomialIdeal& ideal, const MultiDegree& a,
                                   const FieldSpec& field) {
  const int shift = static_cast<int>(negative_support(a).size()) + 1;
  std::map<int, std::size_t> out;
  for (auto [d, h] : reduced_cohomology_dims(takayama_complex(ideal, a), field))
    out.emplace(d + shift, h);
  return out;
}

std::size_t lc_dim(const MonomialIdeal& ideal, const MultiDegree& a, int i,
                   const FieldSpec& field) {
  auto dims = lc_dims(ideal, a, field);
  auto it = dims.find(i);
  return it == dims.end() ? 0 : it->second;
}

std::vector<MultiDegree> canonical_box(const MonomialIdeal& ideal) {
  const auto r = rho(ideal);
  std::vector<MultiDegree> out;
  std::vector<int> cur(r.size(), -1);
  while (true) {
    out.emplace_back(cur);
    std::size_t k = r.size();
    while (k > 0) {
      --k;
      if (cur[k] < r[k] - 1) {
        ++cur[k];
        break;
      }
      cur[k] = -1;
      if (k == 0) return out;
    }
    if (r.empty()) return out;
  }
}

LCTable build_table(const MonomialIdeal& ideal, const FieldSpec& field, const DegreeDimsFn& dims) {
  const auto box = canonical_box(ideal);
  const int n = static_cast<int>(ideal.num_vars());

  std::vector<std::map<int, std::size_t>> results(box.size());
  detail::parallel_for(box.size(), [&](std::size_t k) { results[k] = dims(ideal, box[k], field); });

  LCTable table{ideal, field, {}};
  for (std::size_t k = 0; k < box.size(); ++k)
    for (auto [i, h] : results[k]) {
      if (i < 0 || i > n)
        throw std::logic_error("local cohomology index " + std::to_string(i) +
                               " outside [0, n] at degree " + format_degree(box[k]));
      table.entries.emplace(std::pair{box[k], i}, h);
    }
  return table;
}

LCTable lc_table(const MonomialIdeal& ideal, const FieldSpec& field) {
  return build_table(ideal, field, lc_dims);
}

DepthDim depth_and_dim(const LCTable& table) {
  if (table.ideal.is_unit()) throw std::domain_error("depth/dim undefined for the zero ring");
  if (table.entries.empty())
    throw std::logic_error("nonzero ring with vanishing local cohomology");
  DepthDim out{std::numeric_limits<std::size_t>::max(), 0};
  for (const auto& [key, h] : table.entries) {
    auto i = static_cast<std::size_t>(key.second);
    out.depth = std::min(out.depth, i);
    out.dim = std::max(out.dim, i);
  }
  return out;
}

DepthDim depth_and_dim(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_unit()) throw std::domain_error("depth/dim undefined for the zero ring");
  return depth_and_dim(lc_table(ideal, field));
}

}  // namespace lcpol
