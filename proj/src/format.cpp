#include "kpeterson/format.hpp"

#include <algorithm>
#include <cctype>

namespace kpeterson {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ == s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  char peek_raw() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_ws();
    if (s_.substr(i_, word.size()) != word) return false;
    i_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  long long integer() {
    skip_ws();
    const std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    const std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) {
      i_ = start;
      fail("expected an integer");
    }
    if (i_ - digits > 9) {
      i_ = start;
      fail("integer out of range");
    }
    return std::stoll(std::string(s_.substr(start, i_ - start)));
  }
  BigInt big_integer() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == start) fail("expected an integer");
    return BigInt(std::string(s_.substr(start, i_ - start)));
  }
  std::size_t pos() const { return i_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, i_);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

// -- elements --

Coroot parse_translation(Cursor& c, int rank) {
  c.expect('[');
  std::vector<int> coords;
  do coords.push_back(static_cast<int>(c.integer()));
  while (c.accept(','));
  c.expect(']');
  if (static_cast<int>(coords.size()) != rank)
    throw ValidationError("translation has " + std::to_string(coords.size()) + " coordinates, rank is " +
                          std::to_string(rank));
  return Coroot::from(coords);
}

// -- ring values --

struct LaurentParser {
  Cursor c;
  const CartanDatum& d;

  Laurent expr() {
    Laurent acc;
    bool negate = false;
    if (c.accept('-')) negate = true;
    else c.accept('+');
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (c.accept('+')) acc += term();
      else if (c.accept('-')) acc -= term();
      else return acc;
    }
  }

  bool starts_factor() {
    const char p = c.peek();
    return std::isdigit(static_cast<unsigned char>(p)) || p == 'e' || p == '(';
  }

  Laurent term() {
    Laurent acc = factor();
    for (;;) {
      if (c.accept('*')) acc *= factor();
      else if (starts_factor()) acc *= factor();
      else return acc;
    }
  }

  Laurent factor() {
    if (c.at_digit()) return Laurent::constant(d.rank, c.big_integer());
    if (c.accept('(')) {
      Laurent inner = expr();
      c.expect(')');
      return inner;
    }
    if (c.accept('e')) {
      c.expect('^');
      return Laurent::monomial(exponent());
    }
    c.fail("expected a number, '(' or e^");
  }

  Weight exponent() {
    if (c.accept('{')) {
      Weight w = linear();
      c.expect('}');
      return w;
    }
    if (c.accept('(')) {
      Weight w = linear();
      c.expect(')');
      return w;
    }
    int sign = 1;
    if (c.accept('-')) sign = -1;
    return sign * atom();
  }

  bool starts_atom() {
    const char p = c.peek();
    return p == 'a' || p == 'w' || p == '\xCE' || p == '\xCF';
  }

  Weight linear() {
    Weight acc = d.zero_weight();
    int sign = 1;
    if (c.accept('-')) sign = -1;
    else c.accept('+');
    for (;;) {
      int k = 1;
      bool explicit_k = false;
      if (c.at_digit()) {
        k = static_cast<int>(c.integer());
        explicit_k = true;
      }
      if (starts_atom()) acc += (sign * k) * atom();
      else if (!explicit_k || k != 0) c.fail("expected a root or weight symbol");
      if (c.accept('+')) sign = 1;
      else if (c.accept('-')) sign = -1;
      else return acc;
    }
  }

  Weight atom() {
    bool root;
    if (c.accept('a') || c.accept("α")) root = true;
    else if (c.accept('w') || c.accept("ω")) root = false;
    else c.fail("expected a root (a<i>) or weight (w<i>) symbol");
    c.accept('_');
    const std::size_t at = c.pos();
    const long long i = c.integer();
    if (i < 1 || i > d.rank) throw ParseError("symbol index out of range", at);
    const int k = static_cast<int>(i) - 1;
    return root ? d.simple_roots[k] : d.fundamental_weight(k + 1);
  }
};

std::string format_exponent(const Weight& lambda, const CartanDatum& d, ExponentMode mode) {
  std::vector<int> coords = lambda.coords();
  const char* sym = "ω";
  if (mode == ExponentMode::Roots) {
    if (auto rc = d.root_coordinates(lambda)) {
      coords = *rc;
      sym = "α";
    }
  }
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const int k = coords[i];
    if (k == 0) continue;
    if (k < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (std::abs(k) != 1) out += std::to_string(std::abs(k));
    out += sym + std::to_string(i + 1);
  }
  return out;
}

}  // namespace

AffineWeylElement parse_element(std::string_view text, const AffineWeylGroup& g) {
  Cursor c(text);
  const int rank = g.rank();
  AffineWeylElement x = g.identity();
  bool have_finite = false;
  if (c.accept("id")) {
    have_finite = true;
    c.accept('*');
  } else if (c.peek() == 's') {
    ReducedWord word;
    do {
      c.expect('s');
      if (!std::isdigit(static_cast<unsigned char>(c.peek_raw()))) c.fail("expected a generator index");
      const long long i = c.integer();
      if (i > rank) throw ValidationError("generator s" + std::to_string(i) + " exceeds rank " + std::to_string(rank));
      word.push_back(static_cast<int>(i));
    } while (c.accept('*') && c.peek() == 's');
    x = g.evaluate(word);
    have_finite = true;
  }
  if (c.accept('t')) {
    x = g.multiply(x, g.translation(parse_translation(c, rank)));
  } else if (!have_finite) {
    c.fail("expected 'id', a generator s<i> or a translation t[...]");
  }
  if (!c.done()) c.fail("unexpected trailing input");
  return x;
}

std::string format_finite(const FiniteWeylGroup& g, FiniteWeylElement w) {
  const auto& word = g.reduced_word(w);
  if (word.empty()) return "id";
  std::string out;
  for (int i : word) {
    if (!out.empty()) out += '*';
    out += 's' + std::to_string(i);
  }
  return out;
}

std::string format_coroot(const Coroot& mu) {
  std::string out = "t[";
  for (int i = 0; i < mu.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(mu[i]);
  }
  return out + ']';
}

std::string format_element(const AffineWeylGroup& g, const AffineWeylElement& x) {
  const bool finite_id = x.finite == g.finite_group().identity();
  if (x.translation.is_zero()) return format_finite(g.finite_group(), x.finite);
  if (finite_id) return format_coroot(x.translation);
  return format_finite(g.finite_group(), x.finite) + ' ' + format_coroot(x.translation);
}

Laurent parse_laurent(std::string_view text, const CartanDatum& d) {
  LaurentParser p{Cursor(text), d};
  Laurent f = p.expr();
  if (!p.c.done()) p.c.fail("unexpected trailing input");
  return f;
}

std::string format_laurent(const Laurent& f, const CartanDatum& d, ExponentMode mode) {
  if (f.is_zero()) return "0";
  // Highest exponents first, measured in root coordinates when possible.
  std::vector<std::pair<std::vector<int>, const Laurent::Term*>> order;
  for (const auto& t : f.terms()) {
    std::vector<int> key = d.root_coordinates(t.first).value_or(t.first.coords());
    int height = 0;
    for (int k : key) height += k;
    key.insert(key.begin(), height);
    order.emplace_back(std::move(key), &t);
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::string out;
  for (const auto& [key, term] : order) {
    const auto& [lambda, coeff] = *term;
    const bool neg = coeff < 0;
    const BigInt mag = neg ? BigInt(-coeff) : coeff;
    std::string mono;
    if (lambda.is_zero()) {
      mono = mag.str();
    } else {
      if (mag != 1) mono = mag.str();
      mono += "e^{" + format_exponent(lambda, d, mode) + '}';
    }
    if (out.empty()) out = (neg ? "-" : "") + mono;
    else out += (neg ? " - " : " + ") + mono;
  }
  return out;
}

std::string format_rational(const RationalFunction& f, const CartanDatum& d, ExponentMode mode) {
  if (f.is_polynomial()) return format_laurent(f.numerator(), d, mode);
  std::string den;
  for (const auto& [beta, m] : f.denominator()) {
    den += "(1 - e^{" + format_exponent(beta, d, mode) + "})";
    if (m != 1) den += '^' + std::to_string(m);
  }
  return '(' + format_laurent(f.numerator(), d, mode) + ")/" + den;
}

nlohmann::json laurent_to_json(const Laurent& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [lambda, c] : f.terms()) arr.push_back({{"weight", lambda.coords()}, {"coeff", c.str()}});
  return arr;
}

Laurent laurent_from_json(const nlohmann::json& j, int rank) {
  if (!j.is_array()) throw ParseError("ring value must be a JSON array", 0);
  std::vector<Laurent::Term> terms;
  for (const auto& t : j) {
    const auto w = t.at("weight").get<std::vector<int>>();
    if (static_cast<int>(w.size()) != rank) throw ValidationError("weight has wrong length");
    terms.emplace_back(Weight::from(w), BigInt(t.at("coeff").get<std::string>()));
  }
  return Laurent::from_terms(std::move(terms));
}

nlohmann::json rational_to_json(const RationalFunction& f) {
  nlohmann::json den = nlohmann::json::array();
  for (const auto& [beta, m] : f.denominator()) den.push_back({{"root", beta.coords()}, {"mult", m}});
  return {{"num", laurent_to_json(f.numerator())}, {"den", den}};
}

nlohmann::json table_to_json(const AffineWeylGroup& g, const StructureConstantTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [z, c] : t.entries)
    entries.push_back({{"z", format_element(g, z)},
                       {"value", laurent_to_json(c)},
                       {"pretty", format_laurent(c, g.datum(), ExponentMode::Roots)}});
  return {{"schema_version", kSchemaVersion},
          {"type", g.datum().type_label},
          {"x", format_element(g, t.x)},
          {"y", format_element(g, t.y)},
          {"entries", entries}};
}

nlohmann::json report_to_json(const AffineWeylGroup& g, const ConjectureReport& r) {
  const auto& fg = g.finite_group();
  const CartanDatum& d = g.datum();
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json j{{"z", format_element(g, e.z)},
                     {"c", format_laurent(e.c_value, d, ExponentMode::Roots)},
                     {"u", format_finite(fg, e.u)},
                     {"v", format_finite(fg, e.v)},
                     {"w", format_finite(fg, e.w)},
                     {"eta", e.eta.coords()},
                     {"verdict", verdict_name(e.verdict)}};
    j["degree"] = e.degree ? nlohmann::json(*e.degree) : nlohmann::json(nullptr);
    j["n"] = e.n_value ? nlohmann::json(format_laurent(*e.n_value, d, ExponentMode::Roots))
                       : nlohmann::json("unavailable");
    entries.push_back(std::move(j));
  }
  return {{"schema_version", kSchemaVersion},
          {"type", d.type_label},
          {"x", format_element(g, r.x)},
          {"y", format_element(g, r.y)},
          {"matches", r.matches()},
          {"mismatches", r.mismatches()},
          {"entries", entries}};
}

}  // namespace kpeterson
