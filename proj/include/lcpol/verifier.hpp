// Executable checks of the polarization isomorphism
//   H^i_m(S/I)_a ≅ H^{i+ρ-n}_{m'}(S'/I')_α
// and of the reductions leading to it, plus random ideal generation for
// fuzzing. Mismatches are recorded in the report, never thrown.

#ifndef LCPOL_VERIFIER_HPP
#define LCPOL_VERIFIER_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lcpol/core.hpp"
#include "lcpol/exact_linalg.hpp"

namespace lcpol {

struct CheckFailure {
  MultiDegree degree;
  int index = 0;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::size_t degrees_checked = 0;
  std::size_t indices_checked = 0;
  std::vector<CheckFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct VerificationReport {
  MonomialIdeal ideal;
  FieldSpec field = FieldSpec::rationals();
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  /// Adds the other report's checks, summing counts of equally named ones.
  void merge(const VerificationReport& other);
  std::size_t failure_count() const noexcept;
};

struct VerifyOptions {
  /// Also compare every Takayama evaluation against the Čech oracle.
  bool oracle_cross_check = true;
};

/// Every a in the canonical box and i in [0, n]:
///   lc_dim(I, a, i) == lc_dim(I', degree_map(a, ρ), i + ρ - n).
/// Also records any nonzero piece outside the index windows [0, n] and
/// [ρ - n, ρ].
VerificationReport verify_main_theorem(const MonomialIdeal& ideal, const FieldSpec& field,
                                       const VerifyOptions& options = {});

/// Reduction identities at a single degree a <= ρ - 1 (std::domain_error
/// otherwise): restriction to the nonnegative coordinates, partial
/// polarization at each coordinate with 0 <= a_j < ρ_j - 1, and the full
/// chain of partial polarizations then restriction down to degree 0 of a
/// polarized ideal.
VerificationReport verify_reduction_chain(const MonomialIdeal& ideal, const MultiDegree& a,
                                          const FieldSpec& field,
                                          const VerifyOptions& options = {});

/// verify_reduction_chain over the whole canonical box, merged.
VerificationReport verify_reduction_chain_box(const MonomialIdeal& ideal, const FieldSpec& field,
                                              const VerifyOptions& options = {});

/// depth and dim both shift by ρ - n under polarization. Throws
/// std::domain_error for the unit ideal.
VerificationReport verify_depth_shift(const MonomialIdeal& ideal, const FieldSpec& field);

/// Deterministic in the seed: max_gens candidate monomials with exponents
/// uniform in [0, max_exp], all-zero candidates dropped, then minimalized.
MonomialIdeal random_ideal(std::size_t n, int max_exp, std::size_t max_gens, std::uint64_t seed);

struct FuzzLimits {
  std::size_t max_n = 3;
  int max_exp = 3;
  std::size_t max_gens = 4;
};

/// count ideals with n in [1, max_n], exponent bound in [1, max_exp] and
/// at least one candidate generator (at most max_gens), all uniform.
std::vector<MonomialIdeal> fuzz_corpus(std::size_t count, std::uint64_t seed,
                                       const FuzzLimits& limits = {});

}  // namespace lcpol

#endif  // LCPOL_VERIFIER_HPP
