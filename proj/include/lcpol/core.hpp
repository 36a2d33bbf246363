// Monomials, monomial ideals, multidegrees and the ideal text format.

#ifndef LCPOL_CORE_HPP
#define LCPOL_CORE_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcpol {

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by parse_ideal; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Exponent vector of a monomial; entry i is the exponent of x_i.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int degree() const noexcept;
  bool is_one() const noexcept { return degree() == 0; }
  bool is_square_free() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<int> exps_;
};

/// Graded lexicographic order: total degree first, then larger leading
/// exponent first. Used as the canonical generator order.
bool grlex_less(const Monomial& lhs, const Monomial& rhs);

bool divides(const Monomial& m1, const Monomial& m2);

/// Divisibility-minimal, deduplicated, grlex-sorted subset of gens.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Degree a in Z^n.
class MultiDegree {
public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

private:
  std::vector<int> entries_;
};

/// Indices (0-based) with a_i < 0, ascending.
std::vector<std::size_t> negative_support(const MultiDegree& a);

/// Replace every negative entry by -1.
MultiDegree truncate(const MultiDegree& a);

/// Ideal of k[x_1..x_n] given by its minimal monomial generators G(I).
/// The zero ideal has no generators; the unit ideal has the single
/// generator 1.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  MonomialIdeal(std::vector<std::string> var_names, std::vector<Monomial> gens);

  /// Variables named x1..xn.
  static MonomialIdeal with_default_names(std::size_t n, std::vector<Monomial> gens);

  std::size_t num_vars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& var_names() const noexcept { return vars_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_square_free() const noexcept;
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::vector<std::string> vars_;
  std::vector<Monomial> gens_;
};

/// rho_i = max(1, max over G(I) of nu_i(m)).
std::vector<int> rho(const MonomialIdeal& ideal);
int rho_sum(const MonomialIdeal& ideal);

MonomialIdeal parse_ideal(std::string_view text);

/// Canonical text form; parse_ideal(format_ideal(I)) == I.
std::string format_ideal(const MonomialIdeal& ideal);
std::string format_monomial(const Monomial& m, const std::vector<std::string>& var_names);

/// "(a_1,...,a_n)".
std::string format_degree(const MultiDegree& a);

/// Comma-separated integers, as accepted on the command line.
MultiDegree parse_degree(std::string_view text);

}  // namespace lcpol

#endif  // LCPOL_CORE_HPP
