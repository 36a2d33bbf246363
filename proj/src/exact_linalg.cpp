#include "lcpol/exact_linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lcpol {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not a prime below 2^31");
  return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::to_string() const {
  return kind_ == Kind::Rationals ? "q" : "gf:" + std::to_string(prime_);
}

FieldSpec parse_field(std::string_view text) {
  if (text == "q" || text == "Q") return FieldSpec::rationals();
  if (text.substr(0, 3) == "gf:") {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
      throw std::invalid_argument("malformed field '" + std::string(text) + "'");
    if (p >= (1ull << 31) || !is_prime(p))
      throw std::invalid_argument("field characteristic " + std::string(digits) +
                                  " is not a prime below 2^31");
    return FieldSpec::prime_field(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q or gf:p)");
}

void SparseMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::set index out of range");
  if (value == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = value;
}

std::int64_t SparseMatrix::get(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? 0 : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
  return t;
}

SparseMatrix operator*(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rhs_rows(rhs.rows_);
  for (const auto& [rc, v] : rhs.entries_) rhs_rows[rc.first].emplace_back(rc.second, v);
  SparseMatrix out(lhs.rows_, rhs.cols_);
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> acc;
  for (const auto& [rc, v] : lhs.entries_)
    for (const auto& [c, w] : rhs_rows[rc.second]) acc[{rc.first, c}] += v * w;
  for (const auto& [rc, v] : acc)
    if (v != 0) out.entries_.emplace(rc, v);
  return out;
}

namespace {

struct RationalArith {
  using Elem = mpq_class;
  Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }
  bool is_zero(const Elem& x) const { return sgn(x) == 0; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem sub_mul(const Elem& a, const Elem& f, const Elem& b) const { return a - f * b; }
};

struct ModularArith {
  using Elem = std::uint64_t;
  std::uint64_t p;
  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<Elem>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  bool is_zero(Elem x) const { return x == 0; }
  Elem inverse(Elem a) const {
    // Fermat: a^(p-2).
    Elem result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }
  Elem div(Elem a, Elem b) const { return a * inverse(b) % p; }
  Elem sub_mul(Elem a, Elem f, Elem b) const { return (a + p - f * b % p) % p; }
};

// Rows are kept sorted by column. Each nonzero row is reduced against the
// pivot rows found so far until its leading column is new.
template <class Arith>
std::size_t eliminate(const SparseMatrix& m, const Arith& ar) {
  using Elem = typename Arith::Elem;
  using Row = std::vector<std::pair<std::size_t, Elem>>;

  std::vector<Row> rows(m.rows());
  for (const auto& [rc, v] : m.entries()) {
    Elem e = ar.from_int(v);
    if (!ar.is_zero(e)) rows[rc.first].emplace_back(rc.second, std::move(e));
  }

  std::unordered_map<std::size_t, Row> pivots;  // leading column -> row with leading entry 1
  Row scratch;
  for (Row& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const Row& piv = it->second;
      Elem factor = row.front().second;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          scratch.push_back(std::move(row[i++]));
        } else if (i == row.size() || piv[j].first < row[i].first) {
          scratch.emplace_back(piv[j].first, ar.sub_mul(ar.from_int(0), factor, piv[j].second));
          ++j;
        } else {
          Elem v = ar.sub_mul(row[i].second, factor, piv[j].second);
          if (!ar.is_zero(v)) scratch.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
    }
    if (row.empty()) continue;
    Elem lead = row.front().second;
    for (auto& [c, v] : row) v = ar.div(v, lead);
    std::size_t col = row.front().first;
    pivots.emplace(col, std::move(row));
  }
  return pivots.size();
}

// Fraction-free elimination over Z with rows kept primitive. Scaling a row
// by a nonzero integer does not change the rank over Q. Returns nullopt if
// an intermediate value overflows int64.
std::optional<std::size_t> eliminate_integer(const SparseMatrix& m) {
  using Row = std::vector<std::pair<std::size_t, std::int64_t>>;
  std::vector<Row> rows(m.rows());
  for (const auto& [rc, v] : m.entries()) rows[rc.first].emplace_back(rc.second, v);

  std::unordered_map<std::size_t, Row> pivots;
  Row scratch;
  for (Row& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const Row& piv = it->second;
      // row <- p * row - r * piv, with p, r the two leading entries over their gcd.
      const std::int64_t g = std::gcd(piv.front().second, row.front().second);
      const std::int64_t p = piv.front().second / g;
      const std::int64_t r = row.front().second / g;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        std::int64_t a = 0, b = 0;
        std::size_t col;
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          col = row[i].first;
          a = row[i++].second;
        } else if (i == row.size() || piv[j].first < row[i].first) {
          col = piv[j].first;
          b = piv[j++].second;
        } else {
          col = row[i].first;
          a = row[i++].second;
          b = piv[j++].second;
        }
        std::int64_t pa, rb, v;
        if (__builtin_mul_overflow(p, a, &pa) || __builtin_mul_overflow(r, b, &rb) ||
            __builtin_sub_overflow(pa, rb, &v) || v == std::numeric_limits<std::int64_t>::min())
          return std::nullopt;
        if (v != 0) scratch.emplace_back(col, v);
      }
      std::int64_t content = 0;
      for (const auto& e : scratch) content = std::gcd(content, e.second);
      if (content > 1)
        for (auto& e : scratch) e.second /= content;
      row.swap(scratch);
    }
    if (row.empty()) continue;
    std::size_t col = row.front().first;
    pivots.emplace(col, std::move(row));
  }
  return pivots.size();
}

}  // namespace

std::size_t rank(const SparseMatrix& m, const FieldSpec& field) {
  if (m.is_zero()) return 0;
  if (field.kind() == FieldSpec::Kind::Rationals) {
    // rank mod p never exceeds the rational rank, so a full modular rank
    // settles it without rational arithmetic.
    const std::size_t modular = eliminate(m, ModularArith{2147483647u});
    if (modular == std::min(m.rows(), m.cols())) return modular;
    if (auto r = eliminate_integer(m)) return *r;
    return eliminate(m, RationalArith{});
  }
  return eliminate(m, ModularArith{field.characteristic()});
}

}  // namespace lcpol
