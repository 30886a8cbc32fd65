// kpeterson: command-line front end.
//
// Exit codes: 0 success, 1 a verify/conjecture mismatch, 2 usage or input
// error, 3 internal error.  Errors are written to stderr as JSON.

#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "kpeterson/verify.hpp"

using namespace kpeterson;
using json = nlohmann::json;

namespace {

struct Options {
  std::string type = "A1";
  std::string cartan;
  bool json_out = false;
  bool root_exponents = false;
  int max_length = -1;
  int threads = 0;
  std::string x, y;
  std::string route = "closed";
  std::string suite = "all";
  int max_translation = 1;
};

CartanDatum make_datum(const Options& o) {
  if (o.cartan.empty()) return build_root_system(o.type);
  json j;
  try {
    j = json::parse(o.cartan);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("--cartan is not valid JSON: ") + e.what(), e.byte);
  }
  return build_root_system(j.get<std::vector<std::vector<int>>>(), "custom");
}

int default_max_length(const CartanDatum& d) {
  if (d.rank == 1) return 8;
  if (d.rank == 2) return 6;
  return 5;
}

int thread_count(const Options& o) {
  if (o.threads > 0) return o.threads;
  if (const char* env = std::getenv("KPETERSON_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

class Session {
 public:
  explicit Session(const Options& o)
      : opt_(o), datum_(make_datum(o)), nh_(datum_),
        max_length_(o.max_length >= 0 ? o.max_length : default_max_length(datum_)) {}

  AffineWeylElement element(const std::string& text, const char* what) {
    if (text.empty()) throw ValidationError(std::string("missing --") + what);
    const auto x = parse_element(text, group());
    if (group().length(x) > max_length_)
      throw LengthGuard(std::string(what) + " has length " + std::to_string(group().length(x)) +
                        ", above --max-length " + std::to_string(max_length_));
    return x;
  }
  AffineWeylElement grassmannian(const std::string& text, const char* what) {
    const auto x = element(text, what);
    if (!group().is_grassmannian(x)) throw ValidationError(std::string(what) + " is not a Grassmannian element");
    return x;
  }

  const AffineWeylGroup& group() const { return nh_.group(); }
  NilHecke& nh() { return nh_; }
  const CartanDatum& datum() const { return datum_; }
  ExponentMode mode() const { return opt_.root_exponents ? ExponentMode::Roots : ExponentMode::Weights; }
  std::string str(const AffineWeylElement& x) const { return format_element(group(), x); }
  std::string str(const Laurent& f) const { return format_laurent(f, datum_, mode()); }
  std::string str(const RationalFunction& f) const { return format_rational(f, datum_, mode()); }

  json header(const char* command) const {
    return {{"schema_version", kSchemaVersion}, {"command", command}, {"type", datum_.type_label}};
  }

  json kelement_json(const KElement& a) const {
    json terms = json::object();
    for (const auto& [w, c] : a.terms()) terms[str(w)] = rational_to_json(c);
    return terms;
  }
  std::string kelement_text(const KElement& a, const char* symbol) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : a.terms()) {
      if (!out.empty()) out += "\n  + ";
      out += "(" + str(c) + ") " + symbol + "_{" + str(w) + "}";
    }
    return out;
  }

  const Options& opt() const { return opt_; }
  int max_length() const { return max_length_; }

 private:
  Options opt_;
  CartanDatum datum_;
  NilHecke nh_;
  int max_length_;
};

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json_out) std::cout << j.dump(2) << '\n';
  else std::cout << text << '\n';
}

std::string table_text(Session& s, const StructureConstantTable& t) {
  std::string out = "O_{" + s.str(t.x) + "} * O_{" + s.str(t.y) + "} =";
  if (t.entries.empty()) return out + " 0";
  bool first = true;
  for (const auto& [z, c] : t.entries) {
    out += first ? "\n    " : "\n  + ";
    out += "(" + s.str(c) + ") O_{" + s.str(z) + "}";
    first = false;
  }
  return out;
}

int cmd_roots(Session& s) {
  const CartanDatum& d = s.datum();
  json roots = json::array();
  std::string text = "type " + d.type_label + ", rank " + std::to_string(d.rank) + "\npositive roots:";
  for (std::size_t k = 0; k < d.positive_roots.size(); ++k) {
    const auto rc = d.root_coordinates(d.positive_roots[k]);
    roots.push_back({{"weight", d.positive_roots[k].coords()},
                     {"root", rc ? json(*rc) : json(nullptr)},
                     {"coroot", d.positive_coroots[k].coords()}});
    const std::string e = s.str(Laurent::monomial(d.positive_roots[k]));  // "e^{...}"
    text += "\n  " + e.substr(3, e.size() - 4);
  }
  json j = s.header("roots");
  j["cartan"] = d.cartan;
  j["positive_roots"] = roots;
  j["highest_root"] = d.highest_root.coords();
  j["highest_coroot"] = d.highest_coroot.coords();
  emit(s.opt(), j, text);
  return 0;
}

int cmd_element(Session& s) {
  const auto& g = s.group();
  const auto x = s.element(s.opt().x, "x");
  const auto word = g.reduced_word(x);
  json j = s.header("element");
  j["element"] = s.str(x);
  j["length"] = g.length(x);
  j["reduced_word"] = word;
  j["grassmannian"] = g.is_grassmannian(x);
  j["coset_min"] = s.str(g.coset_min(x));
  j["coset_translation"] = g.coset_translation(x).coords();
  std::string w;
  for (int i : word) w += (w.empty() ? "s" : "*s") + std::to_string(i);
  emit(s.opt(), j,
       s.str(x) + "\n  length " + std::to_string(g.length(x)) + "\n  reduced word " + (w.empty() ? "id" : w) +
           "\n  grassmannian " + (g.is_grassmannian(x) ? "yes" : "no") + "\n  coset minimum " + s.str(g.coset_min(x)));
  return 0;
}

template <class Row>
json row_json(Session& s, const Row& row) {
  json j = json::object();
  for (const auto& [u, c] : row) {
    if constexpr (std::is_same_v<std::decay_t<decltype(c)>, Laurent>) j[s.str(u)] = laurent_to_json(c);
    else j[s.str(u)] = rational_to_json(c);
  }
  return j;
}

template <class Row>
std::string row_text(Session& s, const Row& row) {
  std::string out;
  for (const auto& [u, c] : row) out += "  " + s.str(u) + ": " + s.str(c) + "\n";
  if (!out.empty()) out.pop_back();
  return out;
}

int cmd_bcoeff(Session& s) {
  const auto x = s.element(s.opt().x, "x");
  const auto& row = s.nh().b_row(x);
  json j = s.header("bcoeff");
  j["x"] = s.str(x);
  j["coefficients"] = row_json(s, row);
  emit(s.opt(), j, "b_{" + s.str(x) + ", u}:\n" + row_text(s, row));
  return 0;
}

int cmd_ecoeff(Session& s) {
  const auto x = s.element(s.opt().x, "x");
  const auto& row = s.nh().e_row(x);
  json j = s.header("ecoeff");
  j["x"] = s.str(x);
  j["coefficients"] = row_json(s, row);
  emit(s.opt(), j, "e_{" + s.str(x) + ", u}:\n" + row_text(s, row));
  return 0;
}

int cmd_class(Session& s, bool is_k) {
  const auto x = s.grassmannian(s.opt().x, "x");
  const KElement a = is_k ? s.nh().k_class(x) : s.nh().l_class(x);
  json j = s.header(is_k ? "kclass" : "lclass");
  j["x"] = s.str(x);
  j["basis"] = "T";
  j["terms"] = s.kelement_json(a);
  emit(s.opt(), j, std::string(is_k ? "k_{" : "l_{") + s.str(x) + "} =\n    " + s.kelement_text(a, "T"));
  return 0;
}

int cmd_product(Session& s) {
  const auto x = s.grassmannian(s.opt().x, "x");
  const auto y = s.grassmannian(s.opt().y, "y");
  NilHecke& nh = s.nh();
  const KElement lx = nh.convert(nh.l_class(x), Basis::Localization);
  const KElement ly = nh.convert(nh.l_class(y), Basis::Localization);
  const KElement prod = nh.convert(nh.k_mul(lx, ly), Basis::T);
  json j = s.header("product");
  j["x"] = s.str(x);
  j["y"] = s.str(y);
  j["basis"] = "T";
  j["terms"] = s.kelement_json(prod);
  emit(s.opt(), j, "l_{" + s.str(x) + "} l_{" + s.str(y) + "} =\n    " + s.kelement_text(prod, "T"));
  return 0;
}

int cmd_constant(Session& s) {
  const auto x = s.grassmannian(s.opt().x, "x");
  const auto y = s.grassmannian(s.opt().y, "y");
  StructureConstantTable t;
  if (s.opt().route == "closed") t = pontryagin_constants(s.nh(), x, y);
  else if (s.opt().route == "linear") t = pontryagin_constants_linear(s.nh(), x, y);
  else throw ValidationError("--route must be closed or linear");
  json j = table_to_json(s.group(), t);
  j["command"] = "constant";
  j["route"] = s.opt().route;
  emit(s.opt(), j, table_text(s, t));
  return 0;
}

int cmd_verify(const Options& o) {
  const VerificationReport r = verify_embedded_tables(parse_suite(o.suite), thread_count(o));
  json j = verification_to_json(r);
  j["command"] = "verify";
  j["suite"] = o.suite;
  std::string text;
  for (const auto& rec : r.records) {
    text += std::string(rec.pass ? "PASS " : "FAIL ") + rec.suite + " " + rec.kind + " " + rec.id + "\n";
    for (const auto& e : rec.errata) text += "     erratum applied at " + e + "\n";
  }
  text += std::to_string(r.records.size() - r.failures()) + "/" + std::to_string(r.records.size()) + " identities hold";
  emit(o, j, text);
  return r.all_pass() ? 0 : 1;
}

// Degree-zero data from the finite-type oracle, plus any tabulated quantum
// data for this type (which takes precedence on overlapping keys).
std::vector<QuantumDatum> quantum_data(Session& s) {
  std::vector<QuantumDatum> data = classical_quantum_data(s.nh());
  for (const char* name : {"sl2", "sl3"}) {
    const json fixture = json::parse(embedded_fixture(name));
    if (fixture.at("type").get<std::string>() != s.datum().type_label || !s.opt().cartan.empty()) continue;
    for (auto& q : fixture_quantum_data(fixture, s.group())) {
      std::erase_if(data, [&](const QuantumDatum& d) { return d.u == q.u && d.v == q.v && d.w == q.w && d.degree == q.degree; });
      data.push_back(std::move(q));
    }
  }
  return data;
}

int cmd_conjecture(Session& s) {
  const auto& g = s.group();
  std::vector<std::pair<AffineWeylElement, AffineWeylElement>> pairs;
  if (!s.opt().x.empty() || !s.opt().y.empty()) {
    pairs.emplace_back(s.grassmannian(s.opt().x, "x"), s.grassmannian(s.opt().y, "y"));
  } else {
    // Grassmannian u t_lambda with every coordinate of lambda in [-N, 0].
    const int n = s.opt().max_translation;
    if (n < 0) throw ValidationError("--max-translation must be non-negative");
    const int r = s.datum().rank;
    std::vector<AffineWeylElement> xs;
    std::vector<int> lambda(r, -n);
    for (;;) {
      for (std::uint32_t w = 0; w < g.finite_group().size(); ++w) {
        const AffineWeylElement x{{w}, Coroot::from(lambda)};
        if (g.is_grassmannian(x) && g.length(x) <= s.max_length()) xs.push_back(x);
      }
      int k = 0;
      while (k < r && lambda[k] == 0) lambda[k++] = -n;
      if (k == r) break;
      ++lambda[k];
    }
    std::sort(xs.begin(), xs.end(),
              [&g](const auto& a, const auto& b) { return std::pair(g.length(a), a) < std::pair(g.length(b), b); });
    for (std::size_t a = 0; a < xs.size(); ++a)
      for (std::size_t b = a; b < xs.size(); ++b) pairs.emplace_back(xs[a], xs[b]);
  }

  const std::vector<QuantumDatum> data = quantum_data(s);
  std::vector<std::function<ConjectureReport(NilHecke&)>> tasks;
  for (const auto& [x, y] : pairs)
    tasks.push_back([x = x, y = y, &data](NilHecke& nh) { return conjecture_check(nh, x, y, data); });
  const auto reports = run_parallel(s.datum(), tasks, thread_count(s.opt()));

  json arr = json::array();
  int matches = 0, mismatches = 0, no_data = 0;
  std::string text;
  for (const auto& r : reports) {
    arr.push_back(report_to_json(g, r));
    matches += r.matches();
    mismatches += r.mismatches();
    no_data += static_cast<int>(r.entries.size()) - r.matches() - r.mismatches();
    for (const auto& e : r.entries) {
      if (pairs.size() == 1) {
        text += std::string(verdict_name(e.verdict)) + "  O_{" + s.str(e.z) + "}: c = " + s.str(e.c_value);
        if (e.n_value) text += ", N = " + s.str(*e.n_value);
        if (e.degree) text += ", d = " + json(*e.degree).dump();
        text += "\n";
      } else if (e.verdict == Verdict::Mismatch) {
        text += "MISMATCH " + s.str(r.x) + " * " + s.str(r.y) + " -> " + s.str(e.z) + "\n";
      }
    }
  }
  json j = s.header("conjecture");
  j["pairs"] = pairs.size();
  j["matches"] = matches;
  j["mismatches"] = mismatches;
  j["no_data"] = no_data;
  j["reports"] = arr;
  text += std::to_string(pairs.size()) + " products, " + std::to_string(matches) + " matches, " +
          std::to_string(mismatches) + " mismatches, " + std::to_string(no_data) + " without quantum data";
  emit(s.opt(), j, text);
  return mismatches == 0 ? 0 : 1;
}

void report_error(const char* kind, const std::string& message, std::optional<std::size_t> position = {}) {
  json e{{"kind", kind}, {"message", message}};
  if (position) e["position"] = *position;
  std::cerr << json{{"schema_version", kSchemaVersion}, {"error", e}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Schubert structure constants for K-homology of the affine Grassmannian"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json_out, "Emit JSON");
  app.add_flag("--roots-exponents", o.root_exponents, "Print exponents in simple-root coordinates");
  app.add_option("--threads", o.threads, "Worker threads (default: $KPETERSON_THREADS or 1)");

  auto typed = [&](CLI::App* c) {
    c->add_option("--type", o.type, "Cartan type label, e.g. A1, A2")->capture_default_str();
    c->add_option("--cartan", o.cartan, "Cartan matrix as a JSON array of rows");
    c->add_option("--max-length", o.max_length, "Largest accepted input length (default 8/6/5 by rank)");
    c->add_flag("--json", o.json_out, "Emit JSON");
    c->add_flag("--roots-exponents", o.root_exponents, "Print exponents in simple-root coordinates");
    c->add_option("--threads", o.threads, "Worker threads");
    return c;
  };
  auto* roots = typed(app.add_subcommand("roots", "Root system data"));
  auto* element = typed(app.add_subcommand("element", "Canonical form and invariants of an element"));
  element->add_option("--x", o.x, "Element, e.g. \"s1 t[-1]\"")->required();
  auto* bcoeff = typed(app.add_subcommand("bcoeff", "b_{x,u}: y_x in the localization basis"));
  bcoeff->add_option("--x", o.x)->required();
  auto* ecoeff = typed(app.add_subcommand("ecoeff", "e_{x,u}: x in the y basis"));
  ecoeff->add_option("--x", o.x)->required();
  auto* kclass = typed(app.add_subcommand("kclass", "k_x in the T basis"));
  kclass->add_option("--x", o.x)->required();
  auto* lclass = typed(app.add_subcommand("lclass", "l_x in the T basis"));
  lclass->add_option("--x", o.x)->required();
  auto* product = typed(app.add_subcommand("product", "l_x l_y in the T basis"));
  product->add_option("--x", o.x)->required();
  product->add_option("--y", o.y)->required();
  auto* constant = typed(app.add_subcommand("constant", "Structure constants c_{x,y}^z"));
  constant->add_option("--x", o.x)->required();
  constant->add_option("--y", o.y)->required();
  constant->add_option("--route", o.route, "closed or linear")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "Recompute the embedded reference tables");
  verify->add_option("--suite", o.suite, "sl2, sl3 or all")->capture_default_str();
  verify->add_flag("--json", o.json_out, "Emit JSON");
  verify->add_option("--threads", o.threads, "Worker threads");
  auto* conjecture = typed(app.add_subcommand("conjecture", "Compare c_{x,y}^z with quantum K-theory data"));
  conjecture->add_option("--max-translation", o.max_translation,
                         "Enumerate u t_lambda with lambda coordinates in [-N, 0]")
      ->capture_default_str();
  conjecture->add_option("--x", o.x);
  conjecture->add_option("--y", o.y);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("UsageError", e.what());
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(o);
    Session s(o);
    if (roots->parsed()) return cmd_roots(s);
    if (element->parsed()) return cmd_element(s);
    if (bcoeff->parsed()) return cmd_bcoeff(s);
    if (ecoeff->parsed()) return cmd_ecoeff(s);
    if (kclass->parsed()) return cmd_class(s, true);
    if (lclass->parsed()) return cmd_class(s, false);
    if (product->parsed()) return cmd_product(s);
    if (constant->parsed()) return cmd_constant(s);
    if (conjecture->parsed()) return cmd_conjecture(s);
  } catch (const ParseError& e) {
    report_error(e.kind(), e.what(), e.position());
    return 2;
  } catch (const ValidationError& e) {
    report_error(e.kind(), e.what());
    return 2;
  } catch (const LengthGuard& e) {
    report_error(e.kind(), e.what());
    return 2;
  } catch (const UnsupportedType& e) {
    report_error(e.kind(), e.what());
    return 2;
  } catch (const InvalidCartanMatrix& e) {
    report_error(e.kind(), e.what());
    return 2;
  } catch (const nlohmann::json::exception& e) {
    report_error("ParseError", e.what());
    return 2;
  } catch (const Error& e) {
    report_error(e.kind(), e.what());
    return 3;
  }
  return 2;
}
