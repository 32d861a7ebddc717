#include "alexnorm/fox.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace alexnorm {

// ---------------------------------------------------------------- free words

FreeWord::FreeWord(std::initializer_list<Letter> letters) : FreeWord(std::vector<Letter>(letters)) {}

FreeWord::FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if (l.exp != 1 && l.exp != -1) throw PreconditionError("free word letters must have exponent +1 or -1");
}

FreeWord FreeWord::reduced() const {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return FreeWord(std::move(out));
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  return FreeWord(std::move(out));
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return FreeWord(std::move(out));
}

std::string to_string(const FreeWord& w) {
  std::string s;
  for (const auto& l : w.letters()) {
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(l.gen + 1);
    if (l.exp < 0) s += "^-1";
  }
  return s.empty() ? "1" : s;
}

FreeWord parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  for (std::string tok; in >> tok;) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 'x') throw InputError("bad word letter '" + tok + "'");
    const auto caret = tok.find('^');
    const Integer g = parse_integer(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    if (g < 1 || g > 1'000'000) throw InputError("generator index out of range in '" + tok + "'");
    Integer k = 1;
    if (caret != std::string::npos) k = parse_integer(tok.substr(caret + 1));
    if (k == 0 || abs(k) > 1'000'000) throw InputError("bad exponent in '" + tok + "'");
    const int sign = k > 0 ? 1 : -1;
    for (long i = 0, n = Integer(abs(k)).get_si(); i < n; ++i) letters.push_back({g.get_ui() - 1, sign});
  }
  return FreeWord(std::move(letters));
}

// ---------------------------------------------------------------- presentations

GroupPresentation::GroupPresentation(std::size_t generators, std::vector<FreeWord> relators,
                                     std::vector<ExponentVector> abelianization)
    : generators_(generators), relators_(std::move(relators)), ab_(std::move(abelianization)) {
  if (generators_ == 0) throw PreconditionError("presentation needs at least one generator");
  if (ab_.size() != generators_) throw PreconditionError("abelianization must list every generator");
  arity_ = ab_[0].size();
  if (arity_ == 0) throw PreconditionError("abelianization target must have positive rank");
  for (const auto& e : ab_)
    if (e.size() != arity_) throw PreconditionError("abelianization vectors have different lengths");
  for (const auto& r : relators_) {
    for (const auto& l : r.letters())
      if (l.gen >= generators_) throw PreconditionError("relator uses generator x" + std::to_string(l.gen + 1) +
                                                        " beyond the generator count");
    if (!abelianize(r).is_zero())
      throw PreconditionError("relator " + to_string(r) + " does not abelianize to zero");
  }
  IntMatrix m(arity_, generators_);
  for (std::size_t j = 0; j < generators_; ++j)
    for (std::size_t i = 0; i < arity_; ++i) m(i, j) = static_cast<long>(ab_[j][i]);
  if (!cokernel(m).is_trivial()) throw PreconditionError("abelianization is not onto Z^" + std::to_string(arity_));
}

ExponentVector GroupPresentation::abelianize(const FreeWord& w) const {
  ExponentVector e(arity_);
  for (const auto& l : w.letters()) e = l.exp > 0 ? e + ab_[l.gen] : e - ab_[l.gen];
  return e;
}

std::string to_text(const GroupPresentation& p) {
  std::string out = "gen " + std::to_string(p.generator_count()) + "\n";
  for (std::size_t g = 0; g < p.generator_count(); ++g) {
    out += "ab " + std::to_string(g + 1);
    for (auto v : p.abelianization()[g].entries()) out += " " + std::to_string(v);
    out += "\n";
  }
  for (const auto& r : p.relators()) out += "rel " + to_string(r) + "\n";
  return out;
}

GroupPresentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> gens;
  std::map<std::size_t, ExponentVector> ab;
  std::vector<FreeWord> rels;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    const std::string where = "presentation line " + std::to_string(lineno) + ": ";
    if (!gens) {
      std::string n;
      if (head != "gen" || !(ls >> n)) throw InputError(where + "expected header 'gen <n>'");
      const Integer v = parse_integer(n);
      if (v < 1 || v > 100000) throw InputError(where + "generator count out of range");
      gens = v.get_ui();
    } else if (head == "ab") {
      std::string g;
      if (!(ls >> g)) throw InputError(where + "expected 'ab <g> <vector>'");
      const Integer gi = parse_integer(g);
      if (gi < 1 || gi > static_cast<long>(*gens)) throw InputError(where + "generator index out of range");
      std::vector<std::int64_t> e;
      for (std::string t; ls >> t;) e.push_back(parse_integer(t).get_si());
      if (e.empty()) throw InputError(where + "empty abelianization vector");
      if (!ab.emplace(gi.get_ui() - 1, ExponentVector(e)).second) throw InputError(where + "duplicate ab line");
    } else if (head == "rel") {
      std::string rest;
      std::getline(ls, rest);
      rels.push_back(parse_word(rest));
    } else {
      throw InputError(where + "unknown record '" + head + "'");
    }
  }
  if (!gens) throw InputError("presentation: missing header");
  if (ab.size() != *gens) throw InputError("presentation: every generator needs an 'ab' line");
  std::vector<ExponentVector> abv;
  for (auto& [g, e] : ab) abv.push_back(e);
  try {
    return GroupPresentation(*gens, std::move(rels), std::move(abv));
  } catch (const PreconditionError& e) {
    throw InputError(std::string("presentation: ") + e.what());
  }
}

// ---------------------------------------------------------------- PD codes

std::size_t PDCode::component_of(int edge) const {
  for (std::size_t c = 0; c < components.size(); ++c)
    if (std::find(components[c].begin(), components[c].end(), edge) != components[c].end()) return c;
  throw PreconditionError("edge " + std::to_string(edge) + " belongs to no component");
}

PDCode parse_pd(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  PDCode pd;
  int lineno = 0;
  auto label = [](const std::string& t) {
    const Integer v = parse_integer(t);
    if (v < 1 || v > 1'000'000) throw InputError("edge label out of range: " + t);
    return static_cast<int>(v.get_si());
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "pd line " + std::to_string(lineno) + ": ";
    if (!header) {
      if (tok.size() != 3 || tok[0] != "pd") throw InputError(where + "expected header 'pd <crossings> <components>'");
      const Integer c = parse_integer(tok[1]), k = parse_integer(tok[2]);
      if (c < 1 || c > 100000 || k < 1 || k > 1000) throw InputError(where + "header counts out of range");
      header = {c.get_ui(), k.get_ui()};
    } else if (tok[0] == "X") {
      if (tok.size() != 6) throw InputError(where + "expected 'X a b c d <sign>'");
      PDCrossing x{{label(tok[1]), label(tok[2]), label(tok[3]), label(tok[4])}, 0};
      const Integer s = parse_integer(tok[5]);
      if (s != 1 && s != -1) throw InputError(where + "crossing sign must be +1 or -1");
      x.sign = static_cast<int>(s.get_si());
      pd.crossings.push_back(x);
    } else if (tok[0] == "comp") {
      if (tok.size() < 2) throw InputError(where + "empty component");
      std::vector<int> edges;
      for (std::size_t i = 1; i < tok.size(); ++i) edges.push_back(label(tok[i]));
      pd.components.push_back(std::move(edges));
    } else {
      throw InputError(where + "unknown record '" + tok[0] + "'");
    }
  }
  if (!header) throw InputError("pd: missing header");
  if (pd.crossings.size() != header->first)
    throw InputError("pd: header announces " + std::to_string(header->first) + " crossings, found " +
                     std::to_string(pd.crossings.size()));
  if (pd.components.size() != header->second)
    throw InputError("pd: header announces " + std::to_string(header->second) + " components, found " +
                     std::to_string(pd.components.size()));

  std::map<int, int> uses;
  for (const auto& x : pd.crossings)
    for (int e : x.edges) ++uses[e];
  for (const auto& [e, n] : uses)
    if (n != 2) throw InputError("pd: edge " + std::to_string(e) + " appears " + std::to_string(n) + " times (expected 2)");

  std::map<int, int> next;
  for (const auto& comp : pd.components)
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (!uses.count(comp[i])) throw InputError("pd: component lists unknown edge " + std::to_string(comp[i]));
      if (!next.emplace(comp[i], comp[(i + 1) % comp.size()]).second)
        throw InputError("pd: edge " + std::to_string(comp[i]) + " listed in more than one component position");
    }
  if (next.size() != uses.size()) throw InputError("pd: some edges belong to no component");

  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& [a, b, c, d] = pd.crossings[i].edges;
    const bool under_ok = next.at(a) == c;
    const bool over_ok = pd.crossings[i].sign > 0 ? next.at(d) == b : next.at(b) == d;
    if (!under_ok || !over_ok)
      throw InputError("pd: crossing " + std::to_string(i + 1) + " is inconsistent with the component orientation");
  }
  return pd;
}

std::string to_text(const PDCode& pd) {
  std::string out = "pd " + std::to_string(pd.crossings.size()) + " " + std::to_string(pd.components.size()) + "\n";
  for (const auto& x : pd.crossings) {
    out += "X";
    for (int e : x.edges) out += " " + std::to_string(e);
    out += x.sign > 0 ? " +1\n" : " -1\n";
  }
  for (const auto& comp : pd.components) {
    out += "comp";
    for (int e : comp) out += " " + std::to_string(e);
    out += "\n";
  }
  return out;
}

IntMatrix linking_numbers(const PDCode& pd) {
  const std::size_t n = pd.components.size();
  IntMatrix twice(n, n);
  for (const auto& x : pd.crossings) {
    const std::size_t under = pd.component_of(x.edges[0]);
    const std::size_t over = pd.component_of(x.edges[1]);
    if (under == over) continue;
    twice(under, over) += x.sign;
    twice(over, under) += x.sign;
  }
  IntMatrix lk(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!mpz_even_p(twice(i, j).get_mpz_t())) throw ConsistencyError("odd inter-component crossing count");
      lk(i, j) = twice(i, j) / 2;
    }
  return lk;
}

namespace {

struct DisjointSets {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.try_emplace(x, x).first;
    if (it->second == x) return x;
    return it->second = find(it->second);
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

GroupPresentation wirtinger_from_pd(const PDCode& pd) {
  DisjointSets arcs;
  for (const auto& x : pd.crossings) {
    for (int e : x.edges) arcs.find(e);
    arcs.unite(x.edges[1], x.edges[3]);
  }
  // Number arcs by their smallest edge label.
  std::map<int, std::size_t> arc_id;
  for (const auto& [e, p] : arcs.parent) {
    const int root = arcs.find(e);
    if (!arc_id.count(root)) arc_id.emplace(root, arc_id.size());
  }
  auto gen = [&](int edge) { return arc_id.at(arcs.find(edge)); };

  const std::size_t mu = pd.components.size();
  std::vector<ExponentVector> ab(arc_id.size(), ExponentVector(mu));
  for (const auto& [e, p] : arcs.parent) ab[gen(e)][pd.component_of(e)] = 1;

  std::vector<FreeWord> relators;
  for (const auto& x : pd.crossings) {
    const std::size_t o = gen(x.edges[1]), a = gen(x.edges[0]), c = gen(x.edges[2]);
    const int s = x.sign;
    relators.push_back(FreeWord{{o, s}, {a, 1}, {o, -s}, {c, -1}});
  }
  return GroupPresentation(arc_id.size(), std::move(relators), std::move(ab));
}

// ---------------------------------------------------------------- Fox calculus

LaurentPoly fox_derivative_abelianized(const FreeWord& w, std::size_t g, const std::vector<ExponentVector>& ab) {
  if (g >= ab.size()) throw PreconditionError("fox derivative: generator index out of range");
  const std::size_t mu = ab[0].size();
  LaurentPoly d(mu);
  ExponentVector prefix(mu);
  for (const auto& l : w.letters()) {
    if (l.gen >= ab.size()) throw PreconditionError("fox derivative: word uses an unknown generator");
    if (l.exp > 0) {
      if (l.gen == g) d.add_term(prefix, 1);
      prefix = prefix + ab[l.gen];
    } else {
      prefix = prefix - ab[l.gen];
      if (l.gen == g) d.add_term(prefix, -1);
    }
  }
  return d;
}

AlexanderMatrix alexander_matrix(const GroupPresentation& pres) {
  AlexanderMatrix m;
  for (const auto& r : pres.relators()) {
    std::vector<LaurentPoly> row;
    for (std::size_t j = 0; j < pres.generator_count(); ++j)
      row.push_back(fox_derivative_abelianized(r, j, pres.abelianization()));
    m.push_back(std::move(row));
  }
  return m;
}

AlexanderResult alexander_polynomial_details(const GroupPresentation& pres, const AlexanderOptions& opt) {
  const std::size_t n = pres.generator_count();
  const std::size_t r = pres.relators().size();
  const std::size_t mu = pres.arity();
  AlexanderMatrix m = alexander_matrix(pres);

  AlexanderResult out{LaurentPoly(mu), {}, {}, std::nullopt};
  if (r == n) {
    const std::size_t drop = opt.dropped_relator.value_or(r - 1);
    if (drop >= r) throw PreconditionError("dropped relator index out of range");
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(drop));
    out.dropped_relator = drop;
  } else if (r + 1 != n) {
    throw PreconditionError("presentation matrix is not square after deleting a relator and a column (" +
                            std::to_string(r) + " relators, " + std::to_string(n) + " generators)");
  }
  if (n == 1) {
    // No relators remain; the empty minor is 1.
    out.minors = {LaurentPoly::constant(mu, 1)};
  } else {
    out.minors = opt.parallel ? kernels::column_deleted_minors(m, mu) : kernels::column_deleted_minors_serial(m, mu);
  }

  for (std::size_t j = 0; j < n; ++j) {
    if (mu == 1) {
      out.quotients.push_back(out.minors[j]);
      continue;
    }
    const ExponentVector& e = pres.abelianization()[j];
    if (e.is_zero()) continue;
    const LaurentPoly denom = LaurentPoly::monomial(e) - LaurentPoly::constant(mu, 1);
    auto q = try_divide(out.minors[j], denom);
    if (!q)
      throw ConsistencyError("column " + std::to_string(j + 1) + " minor is not divisible by " + to_pretty(denom));
    out.quotients.push_back(std::move(*q));
  }

  const bool any_zero = std::any_of(out.quotients.begin(), out.quotients.end(), [](const auto& q) { return q.is_zero(); });
  const bool all_zero = std::all_of(out.quotients.begin(), out.quotients.end(), [](const auto& q) { return q.is_zero(); });
  if (all_zero) return out;
  if (any_zero) throw ConsistencyError("column quotients disagree: some vanish and some do not");
  const LaurentPoly first = normalize_units(out.quotients.front());
  for (std::size_t j = 1; j < out.quotients.size(); ++j)
    if (normalize_units(out.quotients[j]) != first)
      throw ConsistencyError("column quotients disagree up to units (column " + std::to_string(j + 1) + ")");

  LaurentPoly g = out.quotients.front();
  for (std::size_t j = 1; j < out.quotients.size(); ++j) g = gcd(g, out.quotients[j]);
  out.polynomial = normalize_units(g);
  return out;
}

LaurentPoly alexander_polynomial(const GroupPresentation& pres, const AlexanderOptions& opt) {
  return alexander_polynomial_details(pres, opt).polynomial;
}

}  // namespace alexnorm
