#include "edgering/binomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace edgering {

namespace {
void require_same_length(const ExponentVec& a, const ExponentVec& b) {
  if (a.size() != b.size()) throw InvalidInput("exponent vectors: length mismatch");
}
}  // namespace

bool divides(const ExponentVec& a, const ExponentVec& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprime(const ExponentVec& a, const ExponentVec& b) { return disjoint_supports(a, b); }

bool disjoint_supports(const ExponentVec& a, const ExponentVec& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

ExponentVec exp_lcm(const ExponentVec& a, const ExponentVec& b) {
  require_same_length(a, b);
  ExponentVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

ExponentVec exp_add(const ExponentVec& a, const ExponentVec& b) {
  require_same_length(a, b);
  ExponentVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

ExponentVec exp_sub(const ExponentVec& a, const ExponentVec& b) {
  require_same_length(a, b);
  ExponentVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) throw InvalidInput("exponent subtraction would go negative");
    r[i] = a[i] - b[i];
  }
  return r;
}

Int total_degree(const ExponentVec& a) {
  Int d = 0;
  for (Int e : a) d = checked_add(d, e);
  return d;
}

Binomial make_binomial(ExponentVec u, ExponentVec v, const MonomialOrder& order) {
  auto b = oriented_or_zero(std::move(u), std::move(v), order);
  if (!b) throw InvalidInput("binomial terms must be distinct");
  return *std::move(b);
}

std::optional<Binomial> oriented_or_zero(ExponentVec u, ExponentVec v, const MonomialOrder& order) {
  auto cmp = order.compare(u, v);
  if (cmp == std::strong_ordering::equal) return std::nullopt;
  if (cmp == std::strong_ordering::less) std::swap(u, v);
  return Binomial{std::move(u), std::move(v)};
}

std::string monomial_string(const ExponentVec& m) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << '*';
    out << 'x' << (i + 1);
    if (m[i] > 1) out << '^' << m[i];
    first = false;
  }
  if (first) out << '1';
  return out.str();
}

ExponentVec parse_monomial(std::string_view text, std::size_t nvars) {
  ExponentVec m(nvars, 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_int = [&]() -> Int {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw InvalidInput("monomial: expected a number in \"" + std::string(text) + "\"");
    return std::stoll(std::string(text.substr(start, pos - start)));
  };
  skip_ws();
  if (pos >= text.size()) throw InvalidInput("monomial: empty text");
  if (text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw InvalidInput("monomial: trailing characters after \"1\"");
    return m;
  }
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'x')
      throw InvalidInput("monomial: expected a variable in \"" + std::string(text) + "\"");
    ++pos;
    Int idx = parse_int();
    if (idx < 1 || static_cast<std::size_t>(idx) > nvars)
      throw InvalidInput("monomial: variable x" + std::to_string(idx) + " out of range 1.." +
                         std::to_string(nvars));
    Int exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = parse_int();
      if (exp < 1) throw InvalidInput("monomial: exponents must be positive");
    }
    m[static_cast<std::size_t>(idx - 1)] = checked_add(m[static_cast<std::size_t>(idx - 1)], exp);
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos != text.size()) throw InvalidInput("monomial: trailing characters in \"" + std::string(text) + "\"");
  return m;
}

std::string to_string(const Binomial& b) {
  return monomial_string(b.lead) + " - " + monomial_string(b.trail);
}

Binomial parse_binomial(std::string_view text, std::size_t nvars, const MonomialOrder& order) {
  // Split on the '-' that separates the two monomials ('-' cannot occur
  // inside a monomial token).
  std::size_t dash = text.find('-');
  if (dash == std::string_view::npos) throw InvalidInput("binomial: expected \"<monomial> - <monomial>\"");
  ExponentVec u = parse_monomial(text.substr(0, dash), nvars);
  ExponentVec v = parse_monomial(text.substr(dash + 1), nvars);
  return make_binomial(std::move(u), std::move(v), order);
}

}  // namespace edgering
