#include "doctest.h"
#include "lcpol/polarization.hpp"
#include "lcpol/takayama.hpp"
#include "lcpol/verifier.hpp"

using namespace lcpol;

namespace {

const FieldSpec Q = FieldSpec::rationals();
MonomialIdeal golden() { return parse_ideal("vars x y\ngens x^2, x*y"); }

const CheckResult& check_named(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("main theorem on the running example") {
  auto report = verify_main_theorem(golden(), Q);
  CHECK(report.passed());
  CHECK(check_named(report, "main_theorem").degrees_checked == 6);
  CHECK(check_named(report, "main_theorem").indices_checked == 18);
  // The polarized side at degree 0 carries H^1.
  auto p = polarize_ideal(golden());
  CHECK(lc_dim(p.ideal, MultiDegree({0, 0, 0}), 1, Q) == 1);
}

TEST_CASE("main theorem edge cases") {
  CHECK(verify_main_theorem(parse_ideal("vars x y\ngens 1"), Q).passed());
  CHECK(verify_main_theorem(parse_ideal("vars x y\ngens"), Q).passed());
  CHECK(verify_main_theorem(parse_ideal("vars x y z\ngens x*y, y*z"), Q).passed());
  CHECK(verify_main_theorem(MonomialIdeal({}, {}), Q).passed());
}

TEST_CASE("reduction chain examples") {
  auto I = golden();
  auto r = verify_reduction_chain(I, MultiDegree({1, -1}), Q);
  CHECK(r.passed());
  CHECK(check_named(r, "restriction").degrees_checked == 1);
  CHECK(check_named(r, "partial_polarization").degrees_checked == 0);

  auto cube = parse_ideal("vars x\ngens x^3");
  auto rc = verify_reduction_chain(cube, MultiDegree({0}), Q);
  CHECK(rc.passed());
  CHECK(check_named(rc, "partial_polarization").degrees_checked == 1);
  auto pp = partial_polarize(cube, 0, 0);
  for (int i = 0; i <= 1; ++i)
    CHECK(lc_dim(cube, MultiDegree({0}), i, Q) == lc_dim(pp, MultiDegree({0, -1, -1}), i + 2, Q));

  auto top = verify_reduction_chain(I, MultiDegree({1, 0}), Q);
  CHECK(top.passed());
  CHECK(check_named(top, "restriction").degrees_checked == 1);

  CHECK_THROWS_AS(verify_reduction_chain(I, MultiDegree({2, 0}), Q), std::domain_error);
  CHECK(verify_reduction_chain_box(parse_ideal("vars x y z\ngens x^3*y, y^2*z^3, x*z^2"), Q).passed());
}

TEST_CASE("depth shift") {
  auto r = verify_depth_shift(golden(), Q);
  CHECK(r.passed());
  auto pol = depth_and_dim(polarize_ideal(golden()).ideal, Q);
  CHECK(pol.depth == 1);
  CHECK(pol.dim == 2);
  CHECK(verify_depth_shift(parse_ideal("vars x y\ngens x*y"), Q).passed());
  CHECK(verify_depth_shift(parse_ideal("vars x y\ngens"), Q).passed());
  CHECK_THROWS_AS(verify_depth_shift(parse_ideal("vars x\ngens 1"), Q), std::domain_error);
}

TEST_CASE("reports record failures rather than throwing") {
  VerificationReport a{golden(), Q, {{"c", 1, 1, {}}}};
  VerificationReport b{golden(), Q, {{"c", 2, 3, {{MultiDegree({0, 0}), 1, 1, 0, ""}}}, {"d", 1, 1, {}}}};
  a.merge(b);
  CHECK(a.checks.size() == 2);
  CHECK(a.checks[0].degrees_checked == 3);
  CHECK(a.failure_count() == 1);
  CHECK_FALSE(a.passed());
}

TEST_CASE("random_ideal") {
  CHECK(random_ideal(2, 2, 3, 1) == random_ideal(2, 2, 3, 1));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto I = random_ideal(1, 1, 1, seed);
    CHECK((I.is_zero() || I == parse_ideal("vars x1\ngens x1")));
    auto J = random_ideal(3, 3, 4, seed);
    CHECK(J.gens().size() <= 4);
    for (const auto& m : J.gens()) {
      CHECK_FALSE(m.is_one());
      for (const auto& other : J.gens())
        if (!(m == other)) CHECK_FALSE(divides(m, other));
    }
  }
  CHECK_THROWS(random_ideal(0, 1, 1, 0));
  CHECK(fuzz_corpus(10, 3) == fuzz_corpus(10, 3));
}

TEST_CASE("restriction compares complexes on the original vertex labels") {
  // Restricting to {x2, x3} renumbers vertices; the check must map them back.
  auto report = verify_reduction_chain(parse_ideal("vars x1 x2 x3\ngens x1*x2, x2*x3"),
                                       MultiDegree({-1, 0, 0}), Q);
  CHECK(report.passed());
  CHECK(verify_reduction_chain_box(parse_ideal("vars x y z\ngens x*y, y*z"), Q).passed());
}
