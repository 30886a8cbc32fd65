#include "kpeterson/ring.hpp"

#include <algorithm>
#include <map>

namespace kpeterson {

// ---------------------------------------------------------------------------
// Laurent

Laurent Laurent::constant(int rank, const BigInt& c) {
  Laurent r;
  if (c != 0) r.terms_.emplace_back(Weight(rank), c);
  return r;
}

Laurent Laurent::monomial(const Weight& lambda, const BigInt& c) {
  Laurent r;
  if (c != 0) r.terms_.emplace_back(lambda, c);
  return r;
}

Laurent Laurent::one_minus(const Weight& beta) {
  return from_terms({{Weight(beta.rank()), BigInt(1)}, {beta, BigInt(-1)}});
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
  Laurent r;
  r.terms_ = std::move(terms);
  r.canonicalize();
  return r;
}

void Laurent::canonicalize() {
  if (terms_.empty()) return;
  const int rank = terms_.front().first.rank();
  for (const auto& t : terms_)
    if (t.first.rank() != rank) throw RankMismatch("Laurent terms of different rank");
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    Term acc = std::move(terms_[i]);
    std::size_t j = i + 1;
    for (; j < terms_.size() && terms_[j].first == acc.first; ++j) acc.second += terms_[j].second;
    if (acc.second != 0) terms_[out++] = std::move(acc);
    i = j;
  }
  terms_.resize(out);
}

bool Laurent::is_unit_monomial() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

BigInt Laurent::coefficient(const Weight& lambda) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), lambda,
                                   [](const Term& t, const Weight& w) { return t.first < w; });
  return it != terms_.end() && it->first == lambda ? it->second : BigInt(0);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  if (rank() != o.rank()) throw RankMismatch("adding Laurent polynomials of different rank");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigInt c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator-(Laurent a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.rank() != b.rank()) throw RankMismatch("multiplying Laurent polynomials of different rank");
  std::vector<Laurent::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) prod.emplace_back(wa + wb, ca * cb);
  return Laurent::from_terms(std::move(prod));
}

Laurent Laurent::shifted(const Weight& lambda) const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.first += lambda;  // order preserved
  return r;
}

Laurent Laurent::scaled(const BigInt& c) const {
  if (c == 0) return {};
  Laurent r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

std::optional<Laurent> Laurent::divide_one_minus(const Weight& beta) const {
  if (beta.is_zero()) throw ValidationError("division by 1 - e^0");
  if (terms_.empty()) return Laurent{};
  beta.same_rank(terms_.front().first);
  // Split the support into lines lambda + Z beta. On each line f = (1 - x) g
  // holds iff the coefficients sum to zero, and then g_k = sum_{j <= k} f_j.
  int p = 0;
  while (beta[p] == 0) ++p;
  auto floor_div = [](int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };
  std::map<Weight, std::vector<std::pair<int, const BigInt*>>> lines;
  for (const auto& [w, c] : terms_) {
    const int k = floor_div(w[p], beta[p]);
    lines[w - k * beta].emplace_back(k, &c);
  }
  std::vector<Term> quotient;
  for (auto& [rep, pts] : lines) {
    std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    BigInt running = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      running += *pts[i].second;
      const int next_k = i + 1 < pts.size() ? pts[i + 1].first : pts[i].first;
      if (running == 0) continue;
      if (i + 1 == pts.size()) return std::nullopt;  // line sum is nonzero
      for (int k = pts[i].first; k < next_k; ++k) quotient.emplace_back(rep + k * beta, running);
    }
  }
  return Laurent::from_terms(std::move(quotient));
}

Laurent Laurent::dual() const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.first = -term.first;
  return from_terms(std::move(t));
}

BigInt augmentation(const Laurent& a) {
  BigInt s = 0;
  for (const auto& t : a.terms()) s += t.second;
  return s;
}

// ---------------------------------------------------------------------------
// RationalFunction

namespace {

using Factor = RationalFunction::Factor;

std::vector<Factor> normalize_factors(std::vector<Factor> f) {
  std::sort(f.begin(), f.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  std::vector<Factor> out;
  for (auto& x : f) {
    if (x.second == 0) continue;
    if (!out.empty() && out.back().first == x.first)
      out.back().second += x.second;
    else
      out.push_back(x);
  }
  return out;
}

Laurent power_one_minus(const Weight& beta, int m) {
  Laurent r = Laurent::constant(beta.rank(), 1);
  const Laurent f = Laurent::one_minus(beta);
  for (int i = 0; i < m; ++i) r *= f;
  return r;
}

}  // namespace

RationalFunction::RationalFunction(Laurent numerator) : num_(std::move(numerator)) {}

RationalFunction::RationalFunction(Laurent numerator, std::vector<Factor> denominator)
    : num_(std::move(numerator)), den_(normalize_factors(std::move(denominator))) {
  for (const auto& f : den_)
    if (f.second < 0) throw ValidationError("negative denominator multiplicity");
  *this = rf_reduce(std::move(*this));
}

RationalFunction RationalFunction::inverse_one_minus(const CartanDatum& d, const Weight& beta) {
  const int sign = d.root_sign(beta);
  if (sign == 0) throw ValidationError("denominator factor is not a root");
  if (sign > 0) return RationalFunction(Laurent::constant(d.rank, 1), {{beta, 1}});
  // 1 - e^{-g} = -e^{-g} (1 - e^{g}).
  return RationalFunction(Laurent::monomial(-beta, -1), {{-beta, 1}});
}

RationalFunction rf_reduce(RationalFunction a) {
  if (a.num_.is_zero()) {
    a.den_.clear();
    return a;
  }
  std::vector<Factor> kept;
  for (auto [beta, m] : a.den_) {
    while (m > 0) {
      auto q = a.num_.divide_one_minus(beta);
      if (!q) break;
      a.num_ = std::move(*q);
      --m;
    }
    if (m > 0) kept.emplace_back(beta, m);
  }
  a.den_ = std::move(kept);
  return a;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    *this = rf_reduce(std::move(*this));
    return *this;
  }
  // Least common multiset denominator.
  std::map<Weight, std::pair<int, int>> mult;
  for (const auto& [b, m] : den_) mult[b].first = m;
  for (const auto& [b, m] : o.den_) mult[b].second = m;
  Laurent lhs = num_, rhs = o.num_;
  std::vector<Factor> lcm;
  for (const auto& [b, m] : mult) {
    const int top = std::max(m.first, m.second);
    if (top > m.first) lhs *= power_one_minus(b, top - m.first);
    if (top > m.second) rhs *= power_one_minus(b, top - m.second);
    lcm.emplace_back(b, top);
  }
  num_ = lhs + rhs;
  den_ = std::move(lcm);
  *this = rf_reduce(std::move(*this));
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction operator-(RationalFunction a) {
  a.num_ = -a.num_;
  return a;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Factor> den = a.den_;
  den.insert(den.end(), b.den_.begin(), b.den_.end());
  RationalFunction r;
  r.num_ = a.num_ * b.num_;
  r.den_ = normalize_factors(std::move(den));
  return rf_reduce(std::move(r));
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  std::map<Weight, std::pair<int, int>> mult;
  for (const auto& [r, m] : a.den_) mult[r].first = m;
  for (const auto& [r, m] : b.den_) mult[r].second = m;
  Laurent lhs = a.num_, rhs = b.num_;
  for (const auto& [r, m] : mult) {
    const int common = std::min(m.first, m.second);
    if (m.second > common) lhs *= power_one_minus(r, m.second - common);
    if (m.first > common) rhs *= power_one_minus(r, m.first - common);
  }
  return lhs == rhs;
}

RationalFunction RationalFunction::inverse(const CartanDatum& d) const {
  if (is_zero()) throw NotInvertible("inverse of zero");
  Laurent rest = num_;
  std::vector<Factor> new_den;
  for (const auto& beta : d.positive_roots) {
    int m = 0;
    while (auto q = rest.divide_one_minus(beta)) {
      rest = std::move(*q);
      ++m;
    }
    if (m > 0) new_den.emplace_back(beta, m);
  }
  if (!rest.is_unit_monomial()) throw NotInvertible("numerator is not a unit times root factors");
  const auto& [lambda, c] = rest.terms().front();
  Laurent new_num = Laurent::monomial(-lambda, c);  // c = +-1 is its own inverse
  for (const auto& [beta, m] : den_) new_num *= power_one_minus(beta, m);
  return RationalFunction(std::move(new_num), std::move(new_den));
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) { return a + b; }
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) { return a * b; }

Laurent rf_to_polynomial(const RationalFunction& a) {
  const RationalFunction r = rf_reduce(a);
  if (!r.is_polynomial()) throw NonPolynomial("rational function has a surviving denominator factor");
  return r.numerator();
}

RationalFunction rf_divide(const CartanDatum& d, const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse(d);
}

Laurent weyl_act(const FiniteWeylGroup& g, FiniteWeylElement w, const Laurent& f) {
  if (w == g.identity() || f.is_zero()) return f;
  std::vector<Laurent::Term> t = f.terms();
  for (auto& term : t) term.first = g.act(w, term.first);
  return Laurent::from_terms(std::move(t));
}

RationalFunction weyl_act(const FiniteWeylGroup& g, FiniteWeylElement w, const RationalFunction& f) {
  if (w == g.identity() || f.is_zero()) return f;
  const auto& roots = g.datum().positive_roots;
  Laurent num = weyl_act(g, w, f.numerator());
  std::vector<Factor> den;
  for (const auto& [beta, m] : f.denominator()) {
    const auto [k, sign] = g.act_on_root(w, beta);
    const Weight& gamma = roots[k];
    if (sign < 0) num = num.shifted(m * gamma).scaled(m % 2 ? -1 : 1);
    den.emplace_back(gamma, m);
  }
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace kpeterson
