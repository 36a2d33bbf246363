#include "lcpol/verifier.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "lcpol/cech_oracle.hpp"
#include "lcpol/polarization.hpp"
#include "lcpol/takayama.hpp"
#include "parallel.hpp"

namespace lcpol {

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::size_t VerificationReport::failure_count() const noexcept {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.failures.size();
  return total;
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks) {
    auto it = std::find_if(checks.begin(), checks.end(),
                           [&](const CheckResult& mine) { return mine.name == c.name; });
    if (it == checks.end()) {
      checks.push_back(c);
      continue;
    }
    it->degrees_checked += c.degrees_checked;
    it->indices_checked += c.indices_checked;
    it->failures.insert(it->failures.end(), c.failures.begin(), c.failures.end());
  }
}

namespace {

using Dims = std::map<int, std::size_t>;

std::size_t at(const Dims& dims, int i) {
  auto it = dims.find(i);
  return it == dims.end() ? 0 : it->second;
}

// Compares lhs(i) with rhs(i + shift) for i in [lo, hi].
void compare_range(CheckResult& check, const MultiDegree& degree, const Dims& lhs, const Dims& rhs,
                   int lo, int hi, int shift, const std::string& detail = {}) {
  for (int i = lo; i <= hi; ++i) {
    ++check.indices_checked;
    const std::size_t l = at(lhs, i);
    const std::size_t r = at(rhs, i + shift);
    if (l != r) check.failures.push_back({degree, i, l, r, detail});
  }
}

// Nonzero entries of dims outside [lo, hi].
void check_window(CheckResult& check, const MultiDegree& degree, const Dims& dims, int lo, int hi,
                  const std::string& side) {
  for (auto [i, h] : dims) {
    ++check.indices_checked;
    if (i < lo || i > hi) check.failures.push_back({degree, i, h, 0, side + " outside window"});
  }
}

void cross_check(CheckResult& check, const MonomialIdeal& ideal, const MultiDegree& degree,
                 const Dims& takayama, const FieldSpec& field, const std::string& side) {
  const Dims cech = cech_cohomology_dims(ideal, degree, field);
  ++check.degrees_checked;
  int hi = static_cast<int>(ideal.num_vars());
  for (int i = 0; i <= hi; ++i) {
    ++check.indices_checked;
    if (at(takayama, i) != at(cech, i))
      check.failures.push_back({degree, i, at(takayama, i), at(cech, i), side});
  }
}

bool is_vanishing(const Dims& dims) { return dims.empty(); }

// Faces of a complex on |keep| vertices, moved to vertex keep[v] of [n].
std::vector<FaceMask> relabel_faces(const SimplicialComplex& complex,
                                    const std::vector<std::size_t>& keep, std::size_t n) {
  std::vector<FaceMask> faces;
  for (FaceMask f : complex.faces()) {
    std::vector<std::size_t> vertices;
    for (auto v : face_vertices(f)) vertices.push_back(keep[v]);
    faces.push_back(face_from_vertices(vertices));
  }
  return SimplicialComplex::from_faces(n, faces).faces();
}

}  // namespace

VerificationReport verify_main_theorem(const MonomialIdeal& ideal, const FieldSpec& field,
                                       const VerifyOptions& options) {
  const PolarizedIdeal polarized = polarize_ideal(ideal);
  const int n = static_cast<int>(ideal.num_vars());
  const int rho_total = rho_sum(ideal);
  const int shift = rho_total - n;
  const auto box = canonical_box(ideal);

  // Per-degree reports, merged in box order.
  std::vector<VerificationReport> parts(box.size());
  detail::parallel_for(box.size(), [&](std::size_t k) {
    const MultiDegree& a = box[k];
    const MultiDegree alpha = degree_map(a, polarized.rho);
    const Dims lhs = lc_dims(ideal, a, field);
    const Dims rhs = lc_dims(polarized.ideal, alpha, field);

    CheckResult main{"main_theorem", 1, 0, {}};
    compare_range(main, a, lhs, rhs, 0, n, shift);
    CheckResult window{"vanishing_window", 1, 0, {}};
    check_window(window, a, lhs, 0, n, "lhs");
    check_window(window, alpha, rhs, shift, rho_total, "rhs");

    auto& part = parts[k];
    part.checks = {std::move(main), std::move(window)};
    if (options.oracle_cross_check) {
      CheckResult oracle{"oracle_cross_check", 0, 0, {}};
      cross_check(oracle, ideal, a, lhs, field, "original");
      cross_check(oracle, polarized.ideal, alpha, rhs, field, "polarized");
      part.checks.push_back(std::move(oracle));
    }
  }, 4);

  VerificationReport report{ideal, field, {}};
  report.checks.push_back({"main_theorem", 0, 0, {}});
  for (const auto& p : parts) report.merge(p);
  return report;
}

VerificationReport verify_reduction_chain(const MonomialIdeal& ideal, const MultiDegree& a,
                                          const FieldSpec& field, const VerifyOptions& options) {
  const std::size_t n = ideal.num_vars();
  if (a.size() != n) throw DimensionMismatch("verify_reduction_chain: degree length mismatch");
  const auto r = rho(ideal);
  for (std::size_t j = 0; j < n; ++j)
    if (a[j] >= r[j])
      throw std::domain_error("verify_reduction_chain requires a <= rho - 1, got " +
                              format_degree(a));

  VerificationReport report{ideal, field, {}};
  const Dims lhs = lc_dims(ideal, a, field);
  const int top = static_cast<int>(n);

  CheckResult oracle{"oracle_cross_check", 0, 0, {}};
  auto evaluate = [&](const MonomialIdeal& J, const MultiDegree& b, const std::string& side) {
    Dims d = lc_dims(J, b, field);
    if (options.oracle_cross_check) cross_check(oracle, J, b, d, field, side);
    return d;
  };
  if (options.oracle_cross_check) cross_check(oracle, ideal, a, lhs, field, "original");

  // Restriction: applies when every coordinate is ρ_j - 1 or negative.
  CheckResult restriction{"restriction", 0, 0, {}};
  bool restrict_applies = true;
  for (std::size_t j = 0; j < n; ++j) restrict_applies = restrict_applies && (a[j] < 0 || a[j] == r[j] - 1);
  if (restrict_applies) {
    std::vector<std::size_t> keep;
    std::vector<int> kept_degree;
    for (std::size_t j = 0; j < n; ++j)
      if (a[j] >= 0) {
        keep.push_back(j);
        kept_degree.push_back(a[j]);
      }
    const MonomialIdeal restricted = restrict_to(ideal, keep);
    const MultiDegree restricted_degree(kept_degree);
    const int negatives = static_cast<int>(n - keep.size());
    restriction.degrees_checked = 1;
    compare_range(restriction, a, lhs, evaluate(restricted, restricted_degree, "restricted"), 0, top,
                  -negatives);
    if (takayama_complex(ideal, a).faces() !=
        relabel_faces(takayama_complex(restricted, restricted_degree), keep, n))
      restriction.failures.push_back({a, -1, 0, 0, "Takayama complexes differ"});
  }

  // Partial polarization at each coordinate with 0 <= a_j < ρ_j - 1.
  CheckResult partial{"partial_polarization", 0, 0, {}};
  CheckResult compat{"polarization_compatibility", 0, 0, {}};
  const PolarizedIdeal full = polarize_ideal(ideal);
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] < 0 || a[j] >= r[j] - 1) continue;
    const MonomialIdeal pp = partial_polarize(ideal, j, a[j]);
    std::vector<int> ext = a.entries();
    ext.resize(pp.num_vars(), -1);
    const MultiDegree ext_degree(ext);
    const int shift = r[j] - (a[j] + 1);
    ++partial.degrees_checked;
    compare_range(partial, a, lhs, evaluate(pp, ext_degree, "partial"), 0, top, shift,
                  "variable " + std::to_string(j + 1));
    if (takayama_complex(ideal, a).faces() != takayama_complex(pp, ext_degree).faces())
      partial.failures.push_back({a, -1, 0, 0, "Takayama complexes differ at variable " + std::to_string(j + 1)});

    ++compat.degrees_checked;
    const PolarizedIdeal twice = polarize_ideal(pp);
    const MonomialIdeal renamed = rename_variables(
        twice.ideal, partial_polarization_renaming(ideal, j, a[j]), full.ideal.var_names());
    if (renamed != full.ideal)
      compat.failures.push_back({a, -1, 0, 0, "polarization differs at variable " + std::to_string(j + 1)});
  }

  // Full chain: partial polarizations until each coordinate is ρ_j - 1 or
  // negative, restriction, then degree 0 of the polarization.
  CheckResult chain{"chain_to_degree_zero", 1, 0, {}};
  MonomialIdeal cur = ideal;
  std::vector<int> cur_degree = a.entries();
  int shift = 0;
  for (bool changed = true; changed;) {
    changed = false;
    const auto cr = rho(cur);
    for (std::size_t j = 0; j < cur.num_vars(); ++j) {
      if (cur_degree[j] < 0 || cur_degree[j] >= cr[j] - 1) continue;
      shift += cr[j] - (cur_degree[j] + 1);
      const MonomialIdeal next = partial_polarize(cur, j, cur_degree[j]);
      cur_degree.resize(next.num_vars(), -1);
      cur = next;
      changed = true;
      break;
    }
  }
  std::vector<std::size_t> keep;
  std::vector<int> kept_degree;
  for (std::size_t j = 0; j < cur.num_vars(); ++j)
    if (cur_degree[j] >= 0) {
      keep.push_back(j);
      kept_degree.push_back(cur_degree[j]);
    }
  shift -= static_cast<int>(cur.num_vars() - keep.size());
  const MonomialIdeal base = restrict_to(cur, keep);
  const auto base_rho = rho(base);
  bool at_top = true;
  for (std::size_t j = 0; j < keep.size(); ++j) {
    if (kept_degree[j] < base_rho[j] - 1)
      chain.failures.push_back({a, -1, 0, 0, "chain stopped below rho - 1"});
    at_top = at_top && kept_degree[j] == base_rho[j] - 1;
  }
  if (chain.failures.empty()) {
    if (at_top) {
      const PolarizedIdeal pol = polarize_ideal(base);
      const MultiDegree zero(std::vector<int>(pol.ideal.num_vars(), 0));
      const int final_shift = shift + rho_sum(base) - static_cast<int>(base.num_vars());
      compare_range(chain, a, lhs, evaluate(pol.ideal, zero, "chain polarized"), 0, top, final_shift);
    } else {
      // Some coordinate sits at or above the restricted ideal's ρ: a cone,
      // so both ends vanish.
      const Dims end = evaluate(base, MultiDegree(kept_degree), "chain restricted");
      ++chain.indices_checked;
      if (!is_vanishing(lhs) || !is_vanishing(end))
        chain.failures.push_back({a, -1, lhs.size(), end.size(), "cone case does not vanish"});
    }
  }

  report.checks = {std::move(restriction), std::move(partial), std::move(compat), std::move(chain)};
  if (options.oracle_cross_check) report.checks.push_back(std::move(oracle));
  return report;
}

VerificationReport verify_reduction_chain_box(const MonomialIdeal& ideal, const FieldSpec& field,
                                              const VerifyOptions& options) {
  const auto box = canonical_box(ideal);
  std::vector<VerificationReport> parts(box.size());
  detail::parallel_for(box.size(), [&](std::size_t k) {
    parts[k] = verify_reduction_chain(ideal, box[k], field, options);
  }, 4);
  VerificationReport report{ideal, field, {}};
  for (const auto& p : parts) report.merge(p);
  return report;
}

VerificationReport verify_depth_shift(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_unit()) throw std::domain_error("verify_depth_shift: unit ideal");
  const PolarizedIdeal polarized = polarize_ideal(ideal);
  const int shift = rho_sum(ideal) - static_cast<int>(ideal.num_vars());
  const DepthDim original = depth_and_dim(ideal, field);
  const DepthDim pol = depth_and_dim(polarized.ideal, field);

  CheckResult depth{"depth_shift", 1, 1, {}};
  if (static_cast<int>(original.depth) + shift != static_cast<int>(pol.depth))
    depth.failures.push_back({MultiDegree{}, static_cast<int>(original.depth), original.depth,
                              pol.depth, "depth"});
  CheckResult dim{"dimension_shift", 1, 1, {}};
  if (static_cast<int>(original.dim) + shift != static_cast<int>(pol.dim))
    dim.failures.push_back({MultiDegree{}, static_cast<int>(original.dim), original.dim, pol.dim,
                            "dim"});
  return VerificationReport{ideal, field, {std::move(depth), std::move(dim)}};
}

MonomialIdeal random_ideal(std::size_t n, int max_exp, std::size_t max_gens, std::uint64_t seed) {
  if (n == 0 || max_exp < 1) throw std::invalid_argument("random_ideal needs n >= 1, max_exp >= 1");
  // mt19937_64's output sequence is fixed by the standard, unlike the
  // distributions, so reduce it by hand.
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(max_exp) + 1;
  std::vector<Monomial> gens;
  for (std::size_t g = 0; g < max_gens; ++g) {
    std::vector<int> e(n);
    for (auto& v : e) v = static_cast<int>(rng() % span);
    Monomial m(std::move(e));
    if (!m.is_one()) gens.push_back(std::move(m));
  }
  return MonomialIdeal::with_default_names(n, std::move(gens));
}

std::vector<MonomialIdeal> fuzz_corpus(std::size_t count, std::uint64_t seed,
                                       const FuzzLimits& limits) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 1 + rng() % limits.max_n;
    const int max_exp = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(limits.max_exp));
    const std::size_t gens = limits.max_gens == 0 ? 0 : 1 + rng() % limits.max_gens;
    out.push_back(random_ideal(n, max_exp, gens, rng()));
  }
  return out;
}

}  // namespace lcpol
