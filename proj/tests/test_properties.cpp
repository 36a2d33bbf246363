// Randomized structural invariants over generated ideals.
#include <random>

#include "doctest.h"
#include "lcpol/cech_oracle.hpp"
#include "lcpol/polarization.hpp"
#include "lcpol/takayama.hpp"
#include "lcpol/verifier.hpp"

using namespace lcpol;

namespace {

std::vector<Monomial> random_gens(std::mt19937_64& rng, std::size_t n, std::size_t count, int max_exp) {
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<int> e(n);
    for (auto& v : e) v = static_cast<int>(rng() % static_cast<std::uint64_t>(max_exp + 1));
    out.emplace_back(std::move(e));
  }
  return out;
}

}  // namespace

TEST_CASE("minimalize is idempotent and generates the same ideal") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    auto gens = random_gens(rng, n, rng() % 7, 4);
    auto mins = minimalize(gens);
    CHECK(minimalize(mins) == mins);
    for (const auto& g : gens)
      CHECK(std::any_of(mins.begin(), mins.end(), [&](const Monomial& m) { return divides(m, g); }));
    for (const auto& m : mins) CHECK(std::find(gens.begin(), gens.end(), m) != gens.end());
  }
}

TEST_CASE("text round trip and rho bounds") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    auto I = MonomialIdeal::with_default_names(n, random_gens(rng, n, rng() % 5, 3));
    CHECK(parse_ideal(format_ideal(I)) == I);
    auto r = rho(I);
    CHECK(std::all_of(r.begin(), r.end(), [](int v) { return v >= 1; }));
    CHECK(rho_sum(I) >= static_cast<int>(n));
  }
}

TEST_CASE("polarization invariants") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    auto I = MonomialIdeal::with_default_names(n, random_gens(rng, n, rng() % 5, 3));
    auto p = polarize_ideal(I);
    CHECK(p.ideal.is_square_free());
    CHECK(p.ideal.gens().size() == I.gens().size());
    CHECK(p.ideal.num_vars() == static_cast<std::size_t>(rho_sum(I)));
    CHECK(depolarize_check(p, I));
    auto again = polarize_ideal(p.ideal);
    CHECK(again.ideal.gens() == p.ideal.gens());
    CHECK(degree_map(MultiDegree([&] {
                       auto r = rho(I);
                       for (auto& v : r) v -= 1;
                       return r;
                     }()),
                     rho(I)) == MultiDegree(std::vector<int>(p.ideal.num_vars(), 0)));
  }
}

TEST_CASE("Takayama and Čech agree on random ideals and degrees") {
  std::mt19937_64 rng(4);
  const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime_field(2),
                              FieldSpec::prime_field(3)};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    auto I = MonomialIdeal::with_default_names(n, random_gens(rng, n, rng() % 5, 3));
    std::vector<int> a(n);
    for (auto& v : a) v = static_cast<int>(rng() % 7) - 3;
    const MultiDegree deg(a);
    const FieldSpec& k = fields[trial % 3];
    CHECK(lc_dims(I, deg, k) == cech_cohomology_dims(I, deg, k));
  }
}
