#include "lcpol/polarization.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lcpol {

std::size_t PolarizedIdeal::flat_index(std::size_t i, int j) const {
  if (i >= rho.size() || j < 1 || j > rho[i]) throw std::out_of_range("no such polarized variable");
  return static_cast<std::size_t>(std::accumulate(rho.begin(), rho.begin() + static_cast<long>(i), 0) +
                                  (j - 1));
}

std::string polarized_var_name(std::size_t i, int j) {
  return "x_" + std::to_string(i + 1) + "_" + std::to_string(j);
}

Monomial polarize_monomial(const Monomial& m, const std::vector<int>& rho) {
  if (m.size() != rho.size()) throw DimensionMismatch("polarize_monomial: length mismatch");
  std::vector<int> exps;
  exps.reserve(static_cast<std::size_t>(std::accumulate(rho.begin(), rho.end(), 0)));
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (m[i] > rho[i])
      throw std::out_of_range("exponent " + std::to_string(m[i]) + " of variable " +
                              std::to_string(i + 1) + " exceeds rho " + std::to_string(rho[i]));
    for (int j = 1; j <= rho[i]; ++j) exps.push_back(j <= m[i] ? 1 : 0);
  }
  return Monomial(std::move(exps));
}

PolarizedIdeal polarize_ideal(const MonomialIdeal& ideal) {
  PolarizedIdeal out;
  out.origin_n = ideal.num_vars();
  out.rho = rho(ideal);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < out.rho.size(); ++i)
    for (int j = 1; j <= out.rho[i]; ++j) names.push_back(polarized_var_name(i, j));
  std::vector<Monomial> gens;
  for (const auto& m : ideal.gens()) gens.push_back(polarize_monomial(m, out.rho));
  out.ideal = MonomialIdeal(std::move(names), std::move(gens));
  if (out.ideal.gens().size() != ideal.gens().size())
    throw std::logic_error("polarization of a minimal generating set lost a generator");
  return out;
}

MultiDegree degree_map(const MultiDegree& a, const std::vector<int>& rho) {
  if (a.size() != rho.size()) throw DimensionMismatch("degree_map: length mismatch");
  std::vector<int> alpha;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (a[i] >= rho[i])
      throw std::domain_error("degree_map requires a <= rho - 1; entry " + std::to_string(i + 1) +
                              " is " + std::to_string(a[i]));
    const int zeros = a[i] < 0 ? 0 : a[i] + 1;
    for (int j = 0; j < rho[i]; ++j) alpha.push_back(j < zeros ? 0 : -1);
  }
  return MultiDegree(std::move(alpha));
}

MonomialIdeal restrict_to(const MonomialIdeal& ideal, const std::vector<std::size_t>& keep) {
  std::set<std::size_t> kept(keep.begin(), keep.end());
  if (kept.size() != keep.size()) throw std::invalid_argument("restrict_to: repeated index");
  for (auto k : kept)
    if (k >= ideal.num_vars()) throw std::out_of_range("restrict_to: index outside [n]");
  std::vector<std::string> names;
  for (auto k : kept) names.push_back(ideal.var_names()[k]);
  std::vector<Monomial> gens;
  for (const auto& m : ideal.gens()) {
    std::vector<int> e;
    for (auto k : kept) e.push_back(m[k]);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(names), std::move(gens));
}

namespace {

std::string fresh_name(std::string base, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base = "_" + base;
  return base;
}

void check_partial_range(const MonomialIdeal& ideal, std::size_t i, int t) {
  if (i >= ideal.num_vars()) throw std::out_of_range("partial_polarize: variable outside [n]");
  const int r = rho(ideal)[i];
  if (t < 0 || t >= r - 1)
    throw std::domain_error("partial_polarize needs 0 <= t < rho_i - 1 (t = " + std::to_string(t) +
                            ", rho_i = " + std::to_string(r) + ")");
}

}  // namespace

MonomialIdeal partial_polarize(const MonomialIdeal& ideal, std::size_t i, int t) {
  check_partial_range(ideal, i, t);
  const int r = rho(ideal)[i];
  const std::size_t n = ideal.num_vars();
  const std::size_t extra = static_cast<std::size_t>(r - t - 1);

  std::vector<std::string> names = ideal.var_names();
  for (int j = t + 2; j <= r; ++j) names.push_back(fresh_name(polarized_var_name(i, j), names));

  std::vector<Monomial> gens;
  for (const auto& m : ideal.gens()) {
    std::vector<int> e = m.exponents();
    e.resize(n + extra, 0);
    if (m[i] >= t + 2) {
      e[i] = t + 1;
      for (int j = t + 2; j <= m[i]; ++j) e[n + static_cast<std::size_t>(j - t - 2)] = 1;
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(names), std::move(gens));
}

std::vector<std::size_t> partial_polarization_renaming(const MonomialIdeal& ideal, std::size_t i,
                                                       int t) {
  check_partial_range(ideal, i, t);
  const auto full = rho(ideal);
  const std::size_t n = ideal.num_vars();

  // Blocks of the doubly polarized ring: original variables (variable i
  // now with t + 1 copies), then one copy per appended variable.
  auto offset = [&](std::size_t k) {
    return static_cast<std::size_t>(std::accumulate(full.begin(), full.begin() + static_cast<long>(k), 0));
  };
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) {
    const int copies = k == i ? t + 1 : full[k];
    for (int j = 1; j <= copies; ++j) out.push_back(offset(k) + static_cast<std::size_t>(j - 1));
  }
  for (int j = t + 2; j <= full[i]; ++j) out.push_back(offset(i) + static_cast<std::size_t>(j - 1));
  return out;
}

MonomialIdeal depolarize(const PolarizedIdeal& polarized,
                         const std::vector<std::string>& original_names) {
  if (original_names.size() != polarized.origin_n)
    throw DimensionMismatch("depolarize: name count differs from origin_n");
  std::vector<Monomial> gens;
  for (const auto& m : polarized.ideal.gens()) {
    std::vector<int> e(polarized.origin_n, 0);
    std::size_t flat = 0;
    for (std::size_t i = 0; i < polarized.origin_n; ++i)
      for (int j = 1; j <= polarized.rho[i]; ++j) e[i] += m[flat++];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(original_names, std::move(gens));
}

bool depolarize_check(const PolarizedIdeal& polarized, const MonomialIdeal& ideal) {
  if (polarized.origin_n != ideal.num_vars()) return false;
  return depolarize(polarized, ideal.var_names()).gens() == ideal.gens();
}

MonomialIdeal rename_variables(const MonomialIdeal& ideal, const std::vector<std::size_t>& renaming,
                               std::vector<std::string> new_names) {
  const std::size_t n = ideal.num_vars();
  if (renaming.size() != n || new_names.size() != n)
    throw DimensionMismatch("rename_variables: renaming has the wrong length");
  std::vector<bool> hit(n, false);
  for (auto k : renaming) {
    if (k >= n || hit[k]) throw std::invalid_argument("rename_variables: not a permutation");
    hit[k] = true;
  }
  std::vector<Monomial> gens;
  for (const auto& m : ideal.gens()) {
    std::vector<int> e(n, 0);
    for (std::size_t k = 0; k < n; ++k) e[renaming[k]] = m[k];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(new_names), std::move(gens));
}

}  // namespace lcpol
