#include "alexnorm/arith.hpp"

#include <cctype>
#include <sstream>

namespace alexnorm {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Point& p, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += sep;
    out += p[i].get_str();
  }
  return out;
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty integer literal");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw InputError("bad integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InputError("bad integer literal '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Point parse_point(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  Point p;
  std::string tok;
  while (in >> tok) p.push_back(parse_rational(tok));
  if (p.empty()) throw InputError("empty coordinate list");
  return p;
}

Rational dot(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw PreconditionError("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace alexnorm
