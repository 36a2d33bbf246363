#include "lcpol/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace lcpol {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("monomial exponents must be non-negative");
}

int Monomial::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_square_free() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool grlex_less(const Monomial& lhs, const Monomial& rhs) {
  int dl = lhs.degree();
  int dr = rhs.degree();
  if (dl != dr) return dl < dr;
  return std::lexicographical_compare(rhs.exponents().begin(), rhs.exponents().end(),
                                      lhs.exponents().begin(), lhs.exponents().end());
}

bool divides(const Monomial& m1, const Monomial& m2) {
  if (m1.size() != m2.size())
    throw DimensionMismatch("divides: monomials have " + std::to_string(m1.size()) + " and " +
                            std::to_string(m2.size()) + " variables");
  for (std::size_t i = 0; i < m1.size(); ++i)
    if (m1[i] > m2[i]) return false;
  return true;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  if (gens.empty()) return gens;
  const std::size_t n = gens.front().size();
  for (const auto& m : gens)
    if (m.size() != n) throw DimensionMismatch("minimalize: generators have mixed lengths");

  // Sorted by degree, a monomial can only be divided by earlier ones.
  std::sort(gens.begin(), gens.end(), grlex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& m : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return divides(k, m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  return kept;
}

std::vector<std::size_t> negative_support(const MultiDegree& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0) out.push_back(i);
  return out;
}

MultiDegree truncate(const MultiDegree& a) {
  std::vector<int> e = a.entries();
  for (int& v : e)
    if (v < 0) v = -1;
  return MultiDegree(std::move(e));
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> var_names, std::vector<Monomial> gens)
    : vars_(std::move(var_names)) {
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size()) throw std::invalid_argument("duplicate variable name");
  for (const auto& m : gens)
    if (m.size() != vars_.size())
      throw DimensionMismatch("generator has " + std::to_string(m.size()) +
                              " exponents, ring has " + std::to_string(vars_.size()) +
                              " variables");
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::with_default_names(std::size_t n, std::vector<Monomial> gens) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return MonomialIdeal(std::move(names), std::move(gens));
}

bool MonomialIdeal::is_square_free() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& m) { return m.is_square_free(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

std::vector<int> rho(const MonomialIdeal& ideal) {
  std::vector<int> r(ideal.num_vars(), 1);
  for (const auto& m : ideal.gens())
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], m[i]);
  return r;
}

int rho_sum(const MonomialIdeal& ideal) {
  auto r = rho(ideal);
  return std::accumulate(r.begin(), r.end(), 0);
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Cursor over a single line of input.
class LineScanner {
public:
  LineScanner(std::string_view text, std::size_t line_no) : text_(text), line_(line_no) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  int exponent() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("malformed exponent");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) {
      pos_ = start;
      fail("exponent out of range");
    }
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_ + 1); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t column) const {
    throw ParseError(what, line_, column);
  }
  std::size_t column() {
    skip_space();
    return pos_ + 1;
  }

private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

Monomial parse_monomial(LineScanner& sc, const std::unordered_map<std::string, std::size_t>& index,
                        std::size_t n) {
  std::vector<int> exps(n, 0);
  if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
    std::size_t col = sc.column();
    if (sc.exponent() != 1) sc.fail_at("numeric monomial must be 1", col);
    return Monomial(std::move(exps));
  }
  do {
    std::size_t col = sc.column();
    std::string name = sc.identifier();
    auto it = index.find(name);
    if (it == index.end()) sc.fail_at("unknown variable '" + name + "'", col);
    int e = 1;
    if (sc.accept('^')) e = sc.exponent();
    exps[it->second] += e;
  } while (sc.accept('*'));
  return Monomial(std::move(exps));
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  std::vector<std::string> vars;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<Monomial> gens;
  bool have_vars = false;
  bool have_gens = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (blank(line)) continue;

    LineScanner sc(line, line_no);
    std::string keyword = sc.identifier();
    if (keyword == "vars") {
      if (have_vars) sc.fail("duplicate vars line");
      while (!sc.at_end()) {
        std::size_t col = sc.column();
        std::string name = sc.identifier();
        if (index.count(name)) sc.fail_at("duplicate variable '" + name + "'", col);
        index.emplace(name, vars.size());
        vars.push_back(std::move(name));
      }
      if (vars.empty()) sc.fail("empty vars line");
      have_vars = true;
    } else if (keyword == "gens") {
      if (!have_vars) throw ParseError("gens before vars", line_no, 1);
      if (have_gens) sc.fail("duplicate gens line");
      have_gens = true;
      if (sc.at_end()) continue;
      do {
        gens.push_back(parse_monomial(sc, index, vars.size()));
      } while (sc.accept(','));
      if (!sc.at_end()) sc.fail("expected ',' or end of line");
    } else {
      throw ParseError("expected 'vars' or 'gens', got '" + keyword + "'", line_no, 1);
    }
  }
  if (!have_vars) throw ParseError("missing vars line", line_no, 1);
  return MonomialIdeal(std::move(vars), std::move(gens));
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& var_names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_names.at(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::ostringstream os;
  os << "vars";
  for (const auto& v : ideal.var_names()) os << ' ' << v;
  os << "\ngens";
  const char* sep = " ";
  for (const auto& m : ideal.gens()) {
    os << sep << format_monomial(m, ideal.var_names());
    sep = ", ";
  }
  os << '\n';
  return os.str();
}

std::string format_degree(const MultiDegree& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out + ')';
}

MultiDegree parse_degree(std::string_view text) {
  std::vector<int> entries;
  if (blank(text)) return MultiDegree{};
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    std::string_view tok = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    int v = 0;
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed degree entry '" + std::string(tok) + "'");
    entries.push_back(v);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return MultiDegree(std::move(entries));
}

}  // namespace lcpol
