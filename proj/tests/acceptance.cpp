// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Every threshold is fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lcpol/cech_oracle.hpp"
#include "lcpol/polarization.hpp"
#include "lcpol/takayama.hpp"
#include "lcpol/verifier.hpp"
#include "oracles.hpp"

using namespace lcpol;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240611;
constexpr std::size_t kCorpusSize = 200;
constexpr std::size_t kChainIdeals = 50;
constexpr std::size_t kRemarkIdeals = 50;
constexpr std::size_t kRemarkDegrees = 20;
constexpr std::size_t kPropertyCases = 1000;
constexpr double kOracleBudgetSeconds = 300.0;
constexpr double kPropertyBudgetSeconds = 60.0;

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF2 = FieldSpec::prime_field(2);
const FieldSpec GF32003 = FieldSpec::prime_field(32003);

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (pass) detail << what;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

const std::vector<MonomialIdeal>& corpus() {
  static const auto c = fuzz_corpus(kCorpusSize, kCorpusSeed);
  return c;
}

std::string one_line(const MonomialIdeal& I) {
  std::string s = format_ideal(I);
  for (auto& ch : s)
    if (ch == '\n') ch = ';';
  return s;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t compared = 0;
  for (const auto& I : corpus())
    for (const auto& a : canonical_box(I))
      for (const FieldSpec& k : {Q, GF2}) {
        const auto takayama = lc_dims(I, a, k);
        const auto cech = cech_cohomology_dims(I, a, k);
        for (int i = 0; i <= static_cast<int>(I.num_vars()); ++i) {
          ++compared;
          auto t = takayama.count(i) ? takayama.at(i) : 0;
          auto c = cech.count(i) ? cech.at(i) : 0;
          if (t != c)
            o.fail(one_line(I) + " degree " + format_degree(a) + " i=" + std::to_string(i));
        }
        for (const auto& [i, h] : takayama)
          if (i < 0 || i > static_cast<int>(I.num_vars())) o.fail("index outside [0,n]");
      }
  const double elapsed = seconds_since(start);
  if (elapsed > kOracleBudgetSeconds) o.fail("runtime " + std::to_string(elapsed) + "s over budget");
  if (o.pass) o.detail << compared << " comparisons in " << elapsed << "s";
  return o;
}

Outcome main_theorem() {
  Outcome o;
  std::size_t indices = 0;
  for (const FieldSpec& k : {Q, GF2, GF32003})
    for (const auto& I : corpus()) {
      auto report = verify_main_theorem(I, k);
      for (const auto& c : report.checks)
        if (c.name == "main_theorem") indices += c.indices_checked;
      if (!report.passed()) o.fail(one_line(I) + " over " + k.to_string());
    }
  if (o.pass) o.detail << indices << " (degree, index) pairs over q, gf:2, gf:32003";
  return o;
}

Outcome golden_example() {
  Outcome o;
  const auto I = parse_ideal("vars x y\ngens x^2, x*y");
  const LCTable table = lc_table(I, Q);
  // Table as stated by the acceptance criterion.
  const decltype(table.entries) stated{{{MultiDegree({1, 0}), 0}, 1},
                                       {{MultiDegree({0, -1}), 1}, 1},
                                       {{MultiDegree({-1, -1}), 1}, 1}};
  if (table.entries != stated) {
    std::ostringstream got;
    for (const auto& [key, d] : table.entries)
      got << " (" << format_degree(key.first) << ",i=" << key.second << "):" << d;
    o.fail("table differs from the stated golden; computed" + got.str() +
           " (Čech oracle at (-1,-1): " +
           std::to_string(cech_cohomology_dims(I, MultiDegree({-1, -1}), Q).size()) +
           " nonzero indices)");
  }
  const auto dd = depth_and_dim(I, Q);
  if (dd.depth != 0 || dd.dim != 1) o.fail("depth/dim of S/I");
  const auto p = polarize_ideal(I);
  if (format_ideal(p.ideal) != "vars x_1_1 x_1_2 x_2_1\ngens x_1_1*x_1_2, x_1_1*x_2_1\n")
    o.fail("polarized ideal");
  const auto pd = depth_and_dim(p.ideal, Q);
  if (pd.depth != 1 || pd.dim != 2) o.fail("depth/dim of S'/I'");
  if (o.pass) o.detail << "table, depth 0 dim 1, polarized depth 1 dim 2";
  return o;
}

Outcome reduction_chain() {
  Outcome o;
  std::size_t degrees = 0, chained = 0;
  for (std::size_t k = 0; k < kChainIdeals; ++k) {
    const auto& I = corpus()[k];
    auto report = verify_reduction_chain_box(I, Q);
    for (const auto& c : report.checks) {
      if (c.name == "chain_to_degree_zero") chained += c.degrees_checked;
      if (c.name == "restriction" || c.name == "partial_polarization") degrees += c.degrees_checked;
    }
    if (!report.passed()) o.fail(one_line(I));
    if (chained == 0) o.fail("chain never ran");
  }
  if (o.pass) o.detail << degrees << " step checks, " << chained << " full chains";
  return o;
}

Outcome remark_conformance() {
  Outcome o;
  std::mt19937_64 rng(kCorpusSeed + 1);
  std::size_t checked = 0;
  for (std::size_t k = 0; k < kRemarkIdeals; ++k) {
    const auto& I = corpus()[k];
    const auto r = rho(I);
    for (std::size_t t = 0; t < kRemarkDegrees; ++t) {
      std::vector<int> a(I.num_vars());
      for (auto& v : a) v = static_cast<int>(rng() % 9) - 4;
      // Force at least one coordinate to reach ρ_i.
      const std::size_t hot = rng() % a.size();
      a[hot] = r[hot] + static_cast<int>(rng() % 3);
      const MultiDegree deg(a);
      const auto complex = takayama_complex(I, deg);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < r[i]) continue;
        // The void complex is a cone vacuously.
        if (!complex.is_void() && !is_cone(complex, i))
          o.fail(one_line(I) + " degree " + format_degree(deg) + " not a cone over " +
                 std::to_string(i + 1));
      }
      for (const FieldSpec& f : {Q, GF2})
        if (!lc_dims(I, deg, f).empty()) o.fail(one_line(I) + " degree " + format_degree(deg));
      ++checked;
    }
  }
  if (o.pass) o.detail << checked << " degrees";
  return o;
}

Outcome field_dependence() {
  Outcome o;
  std::vector<std::vector<std::size_t>> facets;
  for (const auto& f : oracle::rp2_facets()) {
    std::vector<std::size_t> face;
    for (int v : f) face.push_back(static_cast<std::size_t>(v - 1));
    facets.push_back(face);
  }
  const auto rp2 = SimplicialComplex::from_facets(6, facets);
  auto h1 = [](const std::map<int, std::size_t>& m) { return m.count(1) ? m.at(1) : 0; };
  const std::size_t q = h1(reduced_cohomology_dims(rp2, Q));
  const std::size_t two = h1(reduced_cohomology_dims(rp2, GF2));
  const std::size_t q_oracle = h1(oracle::reduced_cohomology(oracle::rp2_facets(), 0));
  const std::size_t two_oracle = h1(oracle::reduced_cohomology(oracle::rp2_facets(), 2));
  if (q != 0 || q_oracle != 0) o.fail("H^1 over q should be 0");
  if (two != 1 || two_oracle != 1) o.fail("H^1 over gf:2 should be 1");
  if (o.pass) o.detail << "H^1 = 0 over q, 1 over gf:2 (dense oracle agrees)";
  return o;
}

Outcome structural_invariants() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(kCorpusSeed + 2);
  for (std::size_t c = 0; c < kPropertyCases; ++c) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<Monomial> gens;
    const std::size_t count = rng() % 6;
    for (std::size_t g = 0; g < count; ++g) {
      std::vector<int> e(n);
      for (auto& v : e) v = static_cast<int>(rng() % 4);
      gens.emplace_back(std::move(e));
    }
    const auto mins = minimalize(gens);
    if (minimalize(mins) != mins) o.fail("minimalize not idempotent");
    const auto I = MonomialIdeal::with_default_names(n, gens);

    const auto p = polarize_ideal(I);
    if (!p.ideal.is_square_free()) o.fail("polarization not square-free: " + one_line(I));
    if (!depolarize_check(p, I)) o.fail("depolarization round trip: " + one_line(I));

    auto top = rho(I);
    for (auto& v : top) v -= 1;
    if (degree_map(MultiDegree(top), rho(I)) != MultiDegree(std::vector<int>(p.ideal.num_vars(), 0)))
      o.fail("degree_map(rho - 1) != 0");

    std::vector<int> a(n), deeper(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<int>(rng() % 8) - 4;
      deeper[i] = a[i] < 0 ? a[i] - static_cast<int>(rng() % 4) : a[i];
    }
    const auto complex = takayama_complex(I, MultiDegree(a));
    if (complex != takayama_complex(I, MultiDegree(deeper))) o.fail("truncation invariance");

    for (const FieldSpec& f : {Q, GF2}) {
      long alt = 0;
      for (auto [d, h] : reduced_cohomology_dims(complex, f))
        alt += (d % 2 == 0 ? 1 : -1) * static_cast<long>(h);
      if (alt != euler_characteristic_reduced(complex)) o.fail("Euler characteristic");
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed > kPropertyBudgetSeconds) o.fail("runtime over budget");
  if (o.pass) o.detail << kPropertyCases << " generated cases in " << elapsed << "s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 oracle equivalence (200 ideals, q and gf:2)", oracle_equivalence},
      {"2 main theorem (200 ideals, q, gf:2, gf:32003)", main_theorem},
      {"3 golden example I=(x^2, xy)", golden_example},
      {"4 reduction chain (50 ideals)", reduction_chain},
      {"5 cone vanishing beyond rho - 1 (50 ideals x 20 degrees)", remark_conformance},
      {"6 field dependence on RP^2", field_dependence},
      {"7 structural invariants (1000 cases)", structural_invariants},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Outcome o = run();
    std::printf("%s  criterion %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.str().c_str(), seconds_since(start));
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
