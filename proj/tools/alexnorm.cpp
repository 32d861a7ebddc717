#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alexnorm/fox.hpp"
#include "alexnorm/norm.hpp"
#include "alexnorm/report.hpp"
#include "alexnorm/surgery.hpp"
#include "alexnorm/sw.hpp"

#ifndef ALEXNORM_DATA_DIR
#define ALEXNORM_DATA_DIR "data"
#endif

using namespace alexnorm;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  bool json = false;
  std::string check;
  std::string data;
};

std::filesystem::path data_dir(const Globals& g) {
  if (!g.data.empty()) return g.data;
  if (const char* env = std::getenv("ALEXNORM_DATA"); env && *env) return env;
  return ALEXNORM_DATA_DIR;
}

std::string first_token(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok) return tok;
  }
  return {};
}

// Text rendering of a report object: one `key: value` line per field,
// nested objects and lists indented below their key.
void render(std::ostream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render(out, v, indent + 2);
    } else if (v.is_array()) {
      out << pad << it.key() << ":";
      if (v.empty()) out << " (none)";
      out << "\n";
      for (const auto& e : v) out << pad << "  " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
    } else if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if (s.find('\n') == std::string::npos) {
        out << pad << it.key() << ": " << s << "\n";
      } else {
        out << pad << it.key() << ":\n";
        std::istringstream lines(s);
        for (std::string l; std::getline(lines, l);) out << pad << "  " << l << "\n";
      }
    } else {
      out << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
}

void emit(const Globals& g, const json& j) {
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    render(std::cout, j, 0);
}

std::string point_string(const ExponentVector& e) { return "(" + to_string(e.to_point(), ",") + ")"; }

// phi = c * ref for some c > 0
bool on_same_ray(const CohomologyClass& phi, const CohomologyClass& ref) {
  std::optional<Rational> c;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (ref.components[i] == 0) {
      if (phi.components[i] != 0) return false;
      continue;
    }
    const Rational r = phi.components[i] / ref.components[i];
    if (c && r != *c) return false;
    c = r;
  }
  return c && *c > 0;
}

LaurentPoly load_poly(const std::string& path) { return parse_laurent(read_file(path)); }

// ---------------------------------------------------------------- verbs

int cmd_alex(const Globals& g, const std::string& path, bool serial) {
  const std::string text = read_file(path);
  const std::string kind = first_token(text);
  std::optional<GroupPresentation> pres;
  if (kind == "pd")
    pres = wirtinger_from_pd(parse_pd(text));
  else if (kind == "gen")
    pres = parse_presentation(text);
  else
    throw InputError(path + ": expected a PD code ('pd' header) or a presentation ('gen' header)");

  AlexanderOptions opt;
  opt.parallel = !serial;
  const AlexanderResult r = alexander_polynomial_details(*pres, opt);

  int code = 0;
  std::string verdict;
  if (!g.check.empty()) {
    if (g.check != "eq3") throw InputError("unknown check '" + g.check + "' (known: eq3)");
    const LaurentPoly want = normalize_units(load_poly((data_dir(g) / "eq3.poly").string()));
    verdict = r.polynomial == want ? "match" : "mismatch";
    if (r.polynomial != want) code = 1;
  }

  if (g.json) {
    json j;
    j["input"] = kind == "pd" ? "pd" : "presentation";
    j["generators"] = pres->generator_count();
    j["relators"] = pres->relators().size();
    j["polynomial"] = to_text(r.polynomial);
    j["pretty"] = to_pretty(r.polynomial);
    if (!g.check.empty()) j["check"] = {{"name", g.check}, {"result", verdict}};
    std::cout << j.dump(2) << "\n";
  } else {
    // Plain output stays a valid laurent file: extra facts go in comments.
    std::cout << to_text(r.polynomial);
    std::cout << "# " << to_pretty(r.polynomial) << "\n";
    std::cout << "# " << pres->generator_count() << " generators, " << pres->relators().size() << " relators\n";
    if (!g.check.empty()) std::cout << "# check " << g.check << ": " << verdict << "\n";
  }
  if (code) std::cerr << "check " << g.check << " failed\n";
  return code;
}

int cmd_norm(const Globals& g, const std::string& path, const std::string& cls) {
  const LaurentPoly p = load_poly(path);
  const CohomologyClass phi = parse_class(cls);
  const Rational n = poly_norm(p, phi);
  const DualVertexResult dv = dual_vertex(p, phi);

  json j;
  j["class"] = to_string(phi);
  j["norm"] = to_string(n);
  j["dual_vertex"] = to_string(dv);
  j["cone"] = dv.is_unique() ? "open cone over the face dual to " + point_string(dv.vertex())
                             : std::string("not in an open top-dimensional cone");
  const NormBall ball = unit_ball(p);
  j["ball_facets"] = ball.ball.facets().size();
  j["in_unit_ball"] = ball.contains(phi);
  for (const auto& a : fibered_annotations())
    if (a.cls.size() == phi.size() && on_same_ray(phi, a.cls)) j["fibered_annotation"] = a.note;
  emit(g, j);
  return 0;
}

int cmd_ball(const Globals& g, const std::string& path, bool product_check) {
  const LaurentPoly p = load_poly(path);
  const NormBall b = unit_ball(p);
  json j;
  j["arity"] = p.arity();
  j["vertices"] = b.ball.vertices().size();
  j["facets"] = b.ball.facets().size();
  j["degenerate"] = b.degenerate();
  if (b.degenerate()) {
    json nulls = json::array();
    for (const auto& n : b.null_directions) nulls.push_back("(" + to_string(n, ",") + ")");
    j["null_directions"] = nulls;
    std::cerr << "warning: the norm vanishes on " << b.null_directions.size()
              << " direction(s); the ball is unbounded along them\n";
  }
  if (p.arity() == 1 && !b.degenerate())
    j["interval"] = "[" + to_string(b.ball.vertices().front()[0]) + ", " + to_string(b.ball.vertices().back()[0]) + "]";
  if (product_check) {
    const auto r = subspace_restriction_check(p);
    j["product_structure"] = r.holds;
    j["product_note"] = r.note;
  }
  j["ball"] = to_text(b.ball);
  emit(g, j);
  return 0;
}

int cmd_sw(const Globals& g, const std::string& path, const std::string& v1s, const std::string& v2s) {
  const LaurentPoly delta = load_poly(path);
  const LaurentPoly sw = sw_polynomial(delta);
  const auto bc = basic_classes_unit_coeff(sw);

  json j;
  j["sw_terms"] = sw.size();
  j["sw_polynomial"] = to_pretty(sw);
  json classes = json::array(), excluded = json::array();
  for (const auto& [e, c] : bc.classes) classes.push_back(point_string(e) + (c > 0 ? " +1" : " -1"));
  for (const auto& [e, c] : bc.excluded) excluded.push_back(point_string(e) + " " + c.get_str());
  j["basic_class_count"] = bc.classes.size();
  j["basic_classes"] = classes;
  j["excluded"] = excluded;

  json canon = json::array();
  for (const auto& a : fibered_annotations()) {
    if (a.cls.size() != delta.arity()) continue;
    try {
      const auto r = canonical_class(delta, a.cls);
      canon.push_back(to_string(a.cls) + " -> dual vertex " + point_string(r.dual_vertex) + " -> canonical class " +
                      point_string(r.canonical_class) + ", valence " + std::to_string(r.valence));
    } catch (const PreconditionError& e) {
      canon.push_back(to_string(a.cls) + " -> undefined: " + e.what());
    }
  }
  j["canonical_class"] = canon;

  const ExponentVector v1 = to_exponent(parse_point(v1s)), v2 = to_exponent(parse_point(v2s));
  const Polytope newt = newton_polytope(sw);
  if (v1.size() == sw.arity() && v2.size() == sw.arity() && newt.vertex_index(v1.to_point()) &&
      newt.vertex_index(v2.to_point())) {
    const auto v = valence_distinct(sw, v1, v2);
    j["valences"] = {{point_string(v1), v.first}, {point_string(v2), v.second}};
    j["verdict"] = v.distinct ? "distinct" : "not distinct";
  } else {
    j["valences"] = json::object();
    j["verdict"] = "skipped: " + point_string(v1) + " and " + point_string(v2) + " are not both vertices";
  }
  emit(g, j);
  return 0;
}

int cmd_surgery(const Globals& g, const std::string& path) {
  const std::string text = read_file(path);
  LinkingData data;
  if (first_token(text) == "pd") {
    const IntMatrix lk = linking_numbers(parse_pd(text));
    data = LinkingData{lk, canonical_framings(lk)};
  } else {
    data = parse_link(text);
  }
  const IntMatrix m = surgery_presentation(data);
  const SmithForm s = smith_normal_form(m);
  json j;
  j["components"] = data.components();
  json fr = json::array();
  for (const auto& f : data.framings) fr.push_back(f.get_str());
  json canon = json::array();
  for (const auto& f : canonical_framings(data.lk)) canon.push_back(f.get_str());
  j["framings"] = fr;
  j["canonical_framings"] = canon;
  j["presentation"] = to_text(m);
  json inv = json::array();
  for (const auto& d : invariant_factors(m)) inv.push_back(d.get_str());
  j["invariant_factors"] = inv;
  j["smith_u"] = to_text(s.u);
  j["smith_v"] = to_text(s.v);
  j["h1"] = to_string(h1_of_surgery(data));
  json orders = json::array();
  for (std::size_t i = 0; i < data.components(); ++i)
    orders.push_back("m" + std::to_string(i + 1) + " " + to_string(meridian_order(data, i)));
  j["meridian_orders"] = orders;
  emit(g, j);
  return 0;
}

int cmd_chi(const Globals& g, const std::vector<std::string>& args) {
  std::vector<long long> eulers;
  for (std::string a : args) {
    for (char& c : a)
      if (c == ',' || c == '(' || c == ')') c = ' ';
    std::istringstream in(a);
    for (std::string t; in >> t;) eulers.push_back(parse_integer(t).get_si());
  }
  json j;
  j["eulers"] = eulers;
  j["complexity"] = chi_complexity(eulers);
  emit(g, j);
  return 0;
}

int cmd_report(const Globals& g) {
  const auto claims = run_claims(data_dir(g));
  bool all = true;
  json list = json::array();
  for (const auto& c : claims) {
    all = all && c.pass;
    if (g.json)
      list.push_back({{"index", c.index}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    else
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.index << " " << c.name << ": " << c.detail << "\n";
  }
  if (g.json) std::cout << json{{"claims", list}, {"all_pass", all}}.dump(2) << "\n";
  for (const auto& c : claims)
    if (!c.pass) std::cerr << "failed claim " << c.index << ": " << c.name << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Alexander polynomials, polytope norms, surgery homology and SW basic classes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--check", g.check, "Compare the result against a bundled reference (eq3)");
  app.add_option("--data", g.data, "Bundled data directory (default: $ALEXNORM_DATA or the install path)");

  std::string file, cls, v1 = "0,0,0,2", v2 = "2,2,2,0";
  bool serial = false, product = false;
  std::vector<std::string> eulers;

  auto* alex = app.add_subcommand("alex", "Alexander polynomial of a PD code or presentation");
  alex->add_option("file", file)->required();
  alex->add_flag("--serial", serial, "Use the serial minor kernel");

  auto* norm = app.add_subcommand("norm", "Polytope norm and dual vertex of a class");
  norm->add_option("poly", file)->required();
  norm->add_option("class", cls, "Comma separated rationals")->required();

  auto* ball = app.add_subcommand("ball", "Unit ball of the polytope norm");
  ball->add_option("poly", file)->required();
  ball->add_flag("--product-check", product, "Test the prism structure along the last variable");

  auto* sw = app.add_subcommand("sw", "SW polynomial, basic classes and valences");
  sw->add_option("poly", file)->required();
  sw->add_option("--v1", v1, "First vertex of the valence query");
  sw->add_option("--v2", v2, "Second vertex of the valence query");

  auto* surgery = app.add_subcommand("surgery", "H_1 of integral surgery on a link");
  surgery->add_option("link", file)->required();

  auto* chi = app.add_subcommand("chi", "Complexity from component Euler characteristics");
  chi->add_option("eulers", eulers)->required()->allow_extra_args();

  auto* report = app.add_subcommand("report", "Check every bundled claim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*alex) return cmd_alex(g, file, serial);
    if (*norm) return cmd_norm(g, file, cls);
    if (*ball) return cmd_ball(g, file, product);
    if (*sw) return cmd_sw(g, file, v1, v2);
    if (*surgery) return cmd_surgery(g, file);
    if (*chi) return cmd_chi(g, eulers);
    if (*report) return cmd_report(g);
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
