// Exact coefficient fields and sparse rank.

#ifndef LCPOL_EXACT_LINALG_HPP
#define LCPOL_EXACT_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace lcpol {

/// Either the rationals or GF(p) for a prime p < 2^31.
class FieldSpec {
public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime_field(std::uint32_t p);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return prime_; }

  /// "q" or "gf:p".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  FieldSpec(Kind kind, std::uint32_t prime) : kind_(kind), prime_(prime) {}
  Kind kind_;
  std::uint32_t prime_;
};

/// Inverse of FieldSpec::to_string.
FieldSpec parse_field(std::string_view text);

bool is_prime(std::uint64_t p);

/// Integer matrix stored by coordinates; only nonzero entries are kept.
/// Entries are read in whatever field rank() is asked about.
class SparseMatrix {
public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  void set(std::size_t r, std::size_t c, std::int64_t value);
  std::int64_t get(std::size_t r, std::size_t c) const;

  const std::map<std::pair<std::size_t, std::size_t>, std::int64_t>& entries() const noexcept {
    return entries_;
  }

  SparseMatrix transpose() const;

  /// Integer product; dimension mismatch throws.
  friend SparseMatrix operator*(const SparseMatrix& lhs, const SparseMatrix& rhs);

  bool is_zero() const noexcept { return entries_.empty(); }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> entries_;
};

/// Exact rank over the given field (row elimination, no floating point).
std::size_t rank(const SparseMatrix& m, const FieldSpec& field);

}  // namespace lcpol

#endif  // LCPOL_EXACT_LINALG_HPP
