#include "alexnorm/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace alexnorm {

// ---------------------------------------------------------------- exponents

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  if (o.size() != size()) throw PreconditionError("exponent arity mismatch");
  ExponentVector r(*this);
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
  if (o.size() != size()) throw PreconditionError("exponent arity mismatch");
  ExponentVector r(*this);
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

ExponentVector ExponentVector::operator-() const { return scaled(-1); }

ExponentVector ExponentVector::scaled(value_type k) const {
  ExponentVector r(*this);
  for (auto& v : r.e_) v *= k;
  return r;
}

Point ExponentVector::to_point() const {
  Point p;
  p.reserve(size());
  for (auto v : e_) p.emplace_back(static_cast<long>(v));
  return p;
}

std::string to_string(const ExponentVector& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

ExponentVector to_exponent(const Point& p) {
  ExponentVector e(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].get_den() != 1 || !p[i].get_num().fits_slong_p())
      throw PreconditionError("point " + to_string(p) + " is not an integral exponent vector");
    e[i] = p[i].get_num().get_si();
  }
  return e;
}

// ---------------------------------------------------------------- polynomial

LaurentPoly::LaurentPoly(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw PreconditionError("Laurent polynomial arity must be positive");
}

LaurentPoly LaurentPoly::constant(std::size_t arity, const Integer& c) {
  LaurentPoly p(arity);
  p.add_term(ExponentVector(arity), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& e, const Integer& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t arity, std::size_t var) {
  if (var >= arity) throw PreconditionError("variable index out of range");
  ExponentVector e(arity);
  e[var] = 1;
  return monomial(e);
}

LaurentPoly LaurentPoly::from_terms(std::size_t arity,
                                   const std::vector<std::pair<ExponentVector, Integer>>& terms) {
  LaurentPoly p(arity);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const ExponentVector& e, const Integer& c) {
  if (e.size() != arity_) throw PreconditionError("term arity " + std::to_string(e.size()) +
                                                  " does not match polynomial arity " + std::to_string(arity_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

const std::pair<const ExponentVector, Integer>& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

ExponentVector LaurentPoly::min_exponents() const {
  if (terms_.empty()) throw PreconditionError("exponent range of the zero polynomial");
  ExponentVector lo = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < arity_; ++i) lo[i] = std::min(lo[i], e[i]);
  return lo;
}

ExponentVector LaurentPoly::max_exponents() const {
  if (terms_.empty()) throw PreconditionError("exponent range of the zero polynomial");
  ExponentVector hi = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < arity_; ++i) hi[i] = std::max(hi[i], e[i]);
  return hi;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& shift) const {
  if (shift.size() != arity_) throw PreconditionError("shift arity mismatch");
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

void LaurentPoly::check_arity(const LaurentPoly& o, const char* op) const {
  if (o.arity_ != arity_)
    throw PreconditionError(std::string(op) + ": arity mismatch (" + std::to_string(arity_) + " vs " +
                            std::to_string(o.arity_) + ")");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_arity(o, "add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_arity(o, "subtract");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_arity(b, "mul");
  LaurentPoly r(a.arity_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const Integer& c) {
  if (c == 0) return LaurentPoly(a.arity_);
  LaurentPoly r(a);
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly substitute_powers(const LaurentPoly& p, std::int64_t k) {
  if (k < 1) throw PreconditionError("substitute_powers: exponent must be positive");
  LaurentPoly r(p.arity());
  for (const auto& [e, c] : p.terms()) r.add_term(e.scaled(k), c);
  return r;
}

LaurentPoly mt_link_polynomial() {
  LaurentPoly p(4);
  p.add_term({0, 0, 0, 0}, -4);
  p.add_term({0, 0, 0, 1}, 1);
  p.add_term({0, 0, 0, -1}, 1);
  for (std::size_t i = 0; i < 3; ++i) {
    ExponentVector e(4);
    e[i] = 1;
    p.add_term(e, 1);
    p.add_term(-e, 1);
  }
  const ExponentVector pairs[] = {{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}};
  for (const auto& e : pairs) {
    p.add_term(e, -1);
    p.add_term(-e, -1);
  }
  p.add_term({1, 1, 1, 0}, 1);
  p.add_term({-1, -1, -1, 0}, 1);
  return p;
}

Rational evaluate(const LaurentPoly& p, const std::vector<Rational>& point) {
  if (point.size() != p.arity()) throw PreconditionError("evaluate: point length does not match arity");
  for (const auto& v : point)
    if (v == 0) throw PreconditionError("evaluate: zero coordinate (negative exponents undefined)");
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto k = e[i];
      Rational base = k >= 0 ? point[i] : Rational(1) / point[i];
      for (std::int64_t j = 0; j < (k >= 0 ? k : -k); ++j) term *= base;
    }
    sum += term;
  }
  return sum;
}

std::optional<Symmetry> is_symmetric(const LaurentPoly& p) {
  if (p.is_zero()) return Symmetry{1, ExponentVector(p.arity())};
  ExponentVector shift = -(p.min_exponents() + p.max_exponents());
  LaurentPoly inv = p.inverted();
  LaurentPoly moved = p.shifted(shift);
  if (inv == moved) return Symmetry{1, shift};
  if (inv == -moved) return Symmetry{-1, shift};
  return std::nullopt;
}

LaurentPoly normalize_units(const LaurentPoly& p) {
  if (p.is_zero()) throw PreconditionError("normalize_units: zero polynomial");
  const ExponentVector lo = p.min_exponents();
  const ExponentVector hi = p.max_exponents();
  ExponentVector shift = -lo;
  bool centered = is_symmetric(p).has_value();
  for (std::size_t i = 0; centered && i < p.arity(); ++i) centered = (lo[i] + hi[i]) % 2 == 0;
  if (centered)
    for (std::size_t i = 0; i < p.arity(); ++i) shift[i] = -(lo[i] + hi[i]) / 2;
  LaurentPoly r = p.shifted(shift);
  if (r.leading_term().second < 0) r = -r;
  return r;
}

bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.arity() != q.arity()) return false;
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return normalize_units(p) == normalize_units(q);
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw PreconditionError("divide_exact: zero divisor");
  if (p.arity() != q.arity()) throw PreconditionError("divide_exact: arity mismatch");
  LaurentPoly quotient(p.arity());
  if (p.is_zero()) return quotient;

  // Exponents of any exact quotient lie in this box.
  const ExponentVector lo = p.min_exponents() - q.min_exponents();
  const ExponentVector hi = p.max_exponents() - q.max_exponents();
  for (std::size_t i = 0; i < p.arity(); ++i)
    if (lo[i] > hi[i]) return std::nullopt;

  const auto& [q_lead_e, q_lead_c] = q.leading_term();
  LaurentPoly rest = p;
  while (!rest.is_zero()) {
    const auto [e, c] = rest.leading_term();
    ExponentVector m = e - q_lead_e;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] < lo[i] || m[i] > hi[i]) return std::nullopt;
    if (!mpz_divisible_p(c.get_mpz_t(), q_lead_c.get_mpz_t())) return std::nullopt;
    Integer k = c / q_lead_c;
    quotient.add_term(m, k);
    for (const auto& [eq, cq] : q.terms()) rest.add_term(eq + m, -k * cq);
  }
  return quotient;
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = try_divide(p, q);
  if (!r) throw PreconditionError("divide_exact: " + to_pretty(q) + " does not divide " + to_pretty(p));
  return *std::move(r);
}

// ---------------------------------------------------------------- gcd
//
// Recursive content / primitive-part gcd. Polynomials are first translated
// to nonnegative support; variable k is the main variable and coefficients
// live in Z[x_0, ..., x_{k-1}].

namespace {

std::int64_t degree_in(const LaurentPoly& p, std::size_t k) {
  std::int64_t d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[k]);
  return d;
}

/// Coefficients of p as a polynomial in x_k, keyed by degree.
std::map<std::int64_t, LaurentPoly> coefficients_in(const LaurentPoly& p, std::size_t k) {
  std::map<std::int64_t, LaurentPoly> out;
  for (const auto& [e, c] : p.terms()) {
    ExponentVector rest = e;
    rest[k] = 0;
    out.try_emplace(e[k], p.arity()).first->second.add_term(rest, c);
  }
  return out;
}

LaurentPoly gcd_rec(const LaurentPoly& p, const LaurentPoly& q, int k);

LaurentPoly content_in(const LaurentPoly& p, int k) {
  LaurentPoly g(p.arity());
  for (const auto& [d, coef] : coefficients_in(p, static_cast<std::size_t>(k))) {
    g = gcd_rec(g, coef, k - 1);
    if (g.size() == 1 && g.terms().begin()->first.is_zero() && abs(g.terms().begin()->second) == 1) break;
  }
  return g;
}

LaurentPoly primitive_part(const LaurentPoly& p, int k) {
  if (p.is_zero()) return p;
  LaurentPoly r = divide_exact(p, content_in(p, k));
  if (r.leading_term().second < 0) r = -r;
  return r;
}

LaurentPoly leading_coefficient_in(const LaurentPoly& p, std::size_t k) { return coefficients_in(p, k).rbegin()->second; }

LaurentPoly power(const LaurentPoly& p, std::int64_t n) {
  LaurentPoly r = LaurentPoly::constant(p.arity(), 1);
  for (std::int64_t i = 0; i < n; ++i) r = r * p;
  return r;
}

/// lc(b)^(deg a - deg b + 1) * a reduced modulo b, in the variable x_k.
LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b, std::size_t k) {
  const std::int64_t db = degree_in(b, k);
  const LaurentPoly lcb = leading_coefficient_in(b, k);
  std::int64_t steps = degree_in(a, k) - db + 1;
  LaurentPoly r = a;
  while (!r.is_zero()) {
    const std::int64_t dr = degree_in(r, k);
    if (dr < db) break;
    const LaurentPoly lcr = leading_coefficient_in(r, k);
    ExponentVector s(r.arity());
    s[k] = dr - db;
    r = lcb * r - lcr * b.shifted(s);
    --steps;
  }
  return r * power(lcb, steps);
}

// Subresultant remainder sequence; all divisions are exact.
LaurentPoly gcd_rec(const LaurentPoly& p, const LaurentPoly& q, int k) {
  if (p.is_zero()) return q.is_zero() || q.leading_term().second > 0 ? q : -q;
  if (q.is_zero()) return p.leading_term().second > 0 ? p : -p;
  if (k < 0) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.leading_term().second.get_mpz_t(), q.leading_term().second.get_mpz_t());
    return LaurentPoly::constant(p.arity(), g);
  }
  const auto kk = static_cast<std::size_t>(k);
  const LaurentPoly cp = content_in(p, k);
  const LaurentPoly cq = content_in(q, k);
  const LaurentPoly g_content = gcd_rec(cp, cq, k - 1);

  LaurentPoly a = divide_exact(p, cp);
  LaurentPoly b = divide_exact(q, cq);
  if (degree_in(a, kk) < degree_in(b, kk)) std::swap(a, b);
  LaurentPoly g = LaurentPoly::constant(p.arity(), 1);
  LaurentPoly h = g;
  while (true) {
    if (degree_in(b, kk) == 0) return g_content;
    const std::int64_t delta = degree_in(a, kk) - degree_in(b, kk);
    LaurentPoly r = pseudo_remainder(a, b, kk);
    if (r.is_zero()) break;
    a = std::move(b);
    b = divide_exact(r, g * power(h, delta));
    g = leading_coefficient_in(a, kk);
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = divide_exact(power(g, delta), power(h, delta - 1));
  }
  return g_content * primitive_part(b, k);
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.arity() != q.arity()) throw PreconditionError("gcd: arity mismatch");
  if (p.is_zero() && q.is_zero()) throw PreconditionError("gcd: both arguments are zero");
  if (p.is_zero()) return normalize_units(q);
  if (q.is_zero()) return normalize_units(p);
  const LaurentPoly a = p.shifted(-p.min_exponents());
  const LaurentPoly b = q.shifted(-q.min_exponents());
  return normalize_units(gcd_rec(a, b, static_cast<int>(p.arity()) - 1));
}

// ---------------------------------------------------------------- text I/O

std::string to_text(const LaurentPoly& p) {
  std::string out = "laurent " + std::to_string(p.arity()) + "\n";
  for (const auto& [e, c] : p.terms()) {
    out += c.get_str();
    for (auto v : e.entries()) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<LaurentPoly> p;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto where = [&] { return "laurent line " + std::to_string(lineno) + ": "; };
    if (!p) {
      if (tok.size() != 2 || tok[0] != "laurent") throw InputError(where() + "expected header 'laurent <arity>'");
      Integer a = parse_integer(tok[1]);
      if (a < 1 || a > 64) throw InputError(where() + "arity must be in 1..64");
      p.emplace(a.get_ui());
      continue;
    }
    if (tok.size() != p->arity() + 1) throw InputError(where() + "expected coefficient and " +
                                                       std::to_string(p->arity()) + " exponents");
    Integer c = parse_integer(tok[0]);
    if (c == 0) throw InputError(where() + "zero coefficient");
    ExponentVector e(p->arity());
    for (std::size_t i = 0; i < p->arity(); ++i) {
      Integer v = parse_integer(tok[i + 1]);
      if (!v.fits_slong_p()) throw InputError(where() + "exponent out of range");
      e[i] = v.get_si();
    }
    if (p->terms().count(e)) throw InputError(where() + "duplicate exponent " + to_string(e));
    p->add_term(e, c);
  }
  if (!p) throw InputError("laurent: missing header");
  return *std::move(p);
}

std::string to_pretty(const LaurentPoly& p) {
  static const char* const names4[] = {"x", "y", "z", "t"};
  auto name = [&](std::size_t i) -> std::string {
    if (p.arity() == 1) return "t";
    if (p.arity() <= 4) return names4[i];
    return "x" + std::to_string(i + 1);
  };
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace alexnorm
