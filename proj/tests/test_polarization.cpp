#include <set>

#include "doctest.h"
#include "lcpol/polarization.hpp"
#include "lcpol/takayama.hpp"
#include "lcpol/verifier.hpp"

using namespace lcpol;

namespace {
Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }
}  // namespace

TEST_CASE("polarize_monomial") {
  CHECK(polarize_monomial(mono({2, 1}), {2, 1}) == mono({1, 1, 1}));
  CHECK(polarize_monomial(mono({1, 0}), {2, 1}) == mono({1, 0, 0}));
  CHECK(polarize_monomial(mono({0, 0}), {2, 1}) == mono({0, 0, 0}));
  CHECK(polarize_monomial(mono({3}), {3}) == mono({1, 1, 1}));
  CHECK_THROWS_AS(polarize_monomial(mono({3}), {2}), std::out_of_range);
}

TEST_CASE("polarize_ideal") {
  auto p = polarize_ideal(parse_ideal("vars x y\ngens x^2, x*y"));
  CHECK(p.ideal.var_names() == std::vector<std::string>{"x_1_1", "x_1_2", "x_2_1"});
  CHECK(p.ideal.gens() == std::vector<Monomial>{mono({1, 1, 0}), mono({1, 0, 1})});
  CHECK(p.rho == std::vector<int>{2, 1});
  CHECK(p.flat_index(1, 1) == 2);
  CHECK_THROWS(p.flat_index(1, 2));

  auto sf = parse_ideal("vars x y z\ngens x*y, y*z");
  auto psf = polarize_ideal(sf);
  CHECK(psf.ideal.gens() == sf.gens());

  auto zero = polarize_ideal(parse_ideal("vars x y\ngens"));
  CHECK(zero.ideal.is_zero());
  CHECK(zero.ideal.num_vars() == 2);
  CHECK(polarize_ideal(parse_ideal("vars x y\ngens 1")).ideal.is_unit());
}

TEST_CASE("degree_map") {
  CHECK(degree_map(MultiDegree({1, -2}), {3, 2}) == MultiDegree({0, 0, -1, -1, -1}));
  CHECK(degree_map(MultiDegree({2, 1}), {3, 2}) == MultiDegree({0, 0, 0, 0, 0}));
  CHECK(degree_map(MultiDegree({1, 0}), {2, 1}) == MultiDegree({0, 0, 0}));
  CHECK(degree_map(MultiDegree({-1, -1}), {2, 1}) == MultiDegree({-1, -1, -1}));
  CHECK_THROWS_AS(degree_map(MultiDegree({2, 0}), {2, 1}), std::domain_error);
}

TEST_CASE("degree_map block sums and negative support") {
  for (const auto& I : fuzz_corpus(40, 11)) {
    const auto r = rho(I);
    for (const auto& a : canonical_box(I)) {
      const auto alpha = degree_map(a, r);
      int sum = 0, expected = 0;
      for (int v : alpha.entries()) sum += v;
      std::set<std::size_t> neg_expected;
      std::size_t offset = 0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        expected += a[i] >= 0 ? a[i] + 1 - r[i] : -r[i];
        for (int j = 1; j <= r[i]; ++j)
          if (a[i] < 0 || j >= a[i] + 2) neg_expected.insert(offset + static_cast<std::size_t>(j - 1));
        offset += static_cast<std::size_t>(r[i]);
      }
      CHECK(sum == expected);
      auto neg = negative_support(alpha);
      CHECK(std::set<std::size_t>(neg.begin(), neg.end()) == neg_expected);
      bool top = true;
      for (std::size_t i = 0; i < r.size(); ++i) top = top && a[i] == r[i] - 1;
      CHECK((sum == 0) == top);
    }
  }
}

TEST_CASE("restrict_to") {
  auto I = parse_ideal("vars x y\ngens x^2, x*y");
  auto rx = restrict_to(I, {0});
  CHECK(rx.var_names() == std::vector<std::string>{"x"});
  CHECK(rx.gens() == std::vector<Monomial>{mono({1})});
  CHECK(restrict_to(I, {0, 1}) == I);
  CHECK(restrict_to(parse_ideal("vars x y\ngens x*y"), {1}).gens() == std::vector<Monomial>{mono({1})});
  CHECK(restrict_to(I, {}).is_unit());
  CHECK_THROWS_AS(restrict_to(I, {2}), std::out_of_range);
  CHECK_THROWS_AS(restrict_to(I, {0, 0}), std::invalid_argument);
}

TEST_CASE("partial_polarize") {
  auto cube = partial_polarize(parse_ideal("vars x\ngens x^3"), 0, 0);
  CHECK(cube.var_names() == std::vector<std::string>{"x", "x_1_2", "x_1_3"});
  CHECK(cube.gens() == std::vector<Monomial>{mono({1, 1, 1})});

  CHECK_THROWS_AS(partial_polarize(parse_ideal("vars x y\ngens x^2, x*y"), 1, 0), std::domain_error);

  auto capped = partial_polarize(parse_ideal("vars x y\ngens x^3, x*y"), 0, 1);
  CHECK(capped.num_vars() == 3);
  CHECK(capped.gens() == std::vector<Monomial>{mono({1, 1, 0}), mono({2, 0, 1})});

  // Generated names avoid existing ones.
  auto clash = partial_polarize(parse_ideal("vars x x_1_2\ngens x^2"), 0, 0);
  CHECK(clash.var_names() == std::vector<std::string>{"x", "x_1_2", "_x_1_2"});
  CHECK_THROWS_AS(partial_polarize(parse_ideal("vars x\ngens x^3"), 0, 2), std::domain_error);
  CHECK_THROWS_AS(partial_polarize(parse_ideal("vars x\ngens x^3"), 0, -1), std::domain_error);
}

TEST_CASE("depolarize_check") {
  auto I = parse_ideal("vars x y\ngens x^2, x*y");
  CHECK(depolarize_check(polarize_ideal(I), I));
  CHECK_FALSE(depolarize_check(polarize_ideal(parse_ideal("vars x\ngens x^2")),
                               parse_ideal("vars x\ngens x^3")));
  auto zero = parse_ideal("vars x\ngens");
  CHECK(depolarize_check(polarize_ideal(zero), zero));
}

TEST_CASE("polarizing a partial polarization gives the full polarization") {
  for (const auto& I : fuzz_corpus(80, 21)) {
    const auto r = rho(I);
    const auto full = polarize_ideal(I);
    for (std::size_t i = 0; i < I.num_vars(); ++i)
      for (int t = 0; t < r[i] - 1; ++t) {
        const auto twice = polarize_ideal(partial_polarize(I, i, t));
        const auto renamed = rename_variables(twice.ideal, partial_polarization_renaming(I, i, t),
                                              full.ideal.var_names());
        CHECK(renamed == full.ideal);
      }
  }
}
