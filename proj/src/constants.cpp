#include "kpeterson/constants.hpp"

#include <algorithm>

namespace kpeterson {

namespace {

void require_grassmannian(const AffineWeylGroup& g, const AffineWeylElement& x, const char* what) {
  if (!g.is_grassmannian(x)) throw ValidationError(std::string(what) + " is not a Grassmannian element");
}

StructureConstantTable finish(const AffineWeylElement& x, const AffineWeylElement& y,
                              const std::map<AffineWeylElement, RationalFunction>& acc) {
  StructureConstantTable t{x, y, {}};
  for (const auto& [z, c] : acc) {
    Laurent p = rf_to_polynomial(c);
    if (!p.is_zero()) t.entries.emplace(z, std::move(p));
  }
  return t;
}

}  // namespace

StructureConstantTable pontryagin_constants(NilHecke& nh, const AffineWeylElement& x, const AffineWeylElement& y) {
  const AffineWeylGroup& g = nh.group();
  require_grassmannian(g, x, "x");
  require_grassmannian(g, y, "y");
  const auto bx = nh.coset_b(x);
  const auto by = nh.coset_b(y);
  std::map<AffineWeylElement, RationalFunction> acc;
  for (const auto& [t1, b1] : bx)
    for (const auto& [t2, b2] : by) {
      const RationalFunction bb = b1 * b2;
      for (const auto& [z, e] : nh.coset_e(g.translation(t1 + t2))) acc[z] += bb * RationalFunction(e);
    }
  return finish(x, y, acc);
}

RationalFunction bbe_summand(NilHecke& nh, const AffineWeylElement& x, const AffineWeylElement& y,
                             const Coroot& t1, const Coroot& t2, const AffineWeylElement& z) {
  const auto bx = nh.coset_b(x);
  const auto by = nh.coset_b(y);
  const auto ex = nh.coset_e(nh.group().translation(t1 + t2));
  const auto i1 = bx.find(t1);
  const auto i2 = by.find(t2);
  const auto i3 = ex.find(nh.group().coset_min(z));
  if (i1 == bx.end() || i2 == by.end() || i3 == ex.end()) return {};
  return i1->second * i2->second * RationalFunction(i3->second);
}

StructureConstantTable pontryagin_constants_linear(NilHecke& nh, const AffineWeylElement& x,
                                                   const AffineWeylElement& y) {
  const AffineWeylGroup& g = nh.group();
  require_grassmannian(g, x, "x");
  require_grassmannian(g, y, "y");
  // l_x l_y in the localization basis: the convolution of the coset b-sums.
  std::map<Coroot, RationalFunction> residual;
  for (const auto& [t1, b1] : nh.coset_b(x))
    for (const auto& [t2, b2] : nh.coset_b(y)) residual[t1 + t2] += b1 * b2;

  // Peel off l_z for the longest coset representative still present; the
  // matrix (b_{z,[t]}) is unitriangular up to the diagonal b_{z,z}.
  std::map<AffineWeylElement, RationalFunction> solved;
  constexpr int kMaxSteps = 100000;
  for (int step = 0;; ++step) {
    if (step == kMaxSteps) throw SingularSystem("triangular solve did not terminate");
    std::optional<AffineWeylElement> pivot_z;
    Coroot pivot_t;
    int best = -1;
    for (const auto& [t, r] : residual) {
      if (r.is_zero()) continue;
      const AffineWeylElement z = g.coset_min(g.translation(t));
      const int len = g.length(z);
      if (len > best) {
        best = len;
        pivot_z = z;
        pivot_t = t;
      }
    }
    if (!pivot_z) break;
    if (solved.count(*pivot_z)) throw SingularSystem("coefficient of a Schubert class solved twice");
    const auto bz = nh.coset_b(*pivot_z);
    const auto diag = bz.find(pivot_t);
    if (diag == bz.end() || diag->second.is_zero()) throw SingularSystem("zero pivot in triangular solve");
    const RationalFunction c = rf_divide(nh.datum(), residual[pivot_t], diag->second);
    for (const auto& [t, b] : bz) residual[t] -= c * b;
    for (auto it = residual.begin(); it != residual.end();) it = it->second.is_zero() ? residual.erase(it) : std::next(it);
    solved.emplace(*pivot_z, c);
  }
  return finish(x, y, solved);
}

TranslationCheck translation_product_check(NilHecke& nh, const AffineWeylElement& x, const Coroot& nu) {
  const AffineWeylGroup& g = nh.group();
  const AffineWeylElement t = g.translation(nu);
  require_grassmannian(g, t, "t_nu");
  TranslationCheck r;
  r.table = pontryagin_constants(nh, x, t);
  r.expected = g.multiply(x, t);
  r.holds = r.table.entries.size() == 1 && r.table.entries.begin()->first == r.expected &&
            r.table.entries.begin()->second == Laurent::constant(nh.datum().rank, 1);
  return r;
}

// ---------------------------------------------------------------------------
// Degree-zero oracle.
//
// With w = sum_v e_{w,v} y_v and y_v pairing to 1 against O^u for u <= v, the
// opposite Schubert class O^v localizes at the fixed point u to
// sum_{v <= w <= u} e_{u,w}; the character convention of the quantum side is
// the dual one (e^lambda -> e^{-lambda}).

namespace {

std::vector<FiniteWeylElement> finite_elements_by_length(const FiniteWeylGroup& fg) {
  std::vector<FiniteWeylElement> all;
  for (std::uint32_t k = 0; k < fg.size(); ++k) all.push_back({k});
  std::stable_sort(all.begin(), all.end(),
                   [&](FiniteWeylElement a, FiniteWeylElement b) { return fg.length(a) < fg.length(b); });
  return all;
}

// psi[v][u] = O^v restricted to u.
std::map<FiniteWeylElement, std::map<FiniteWeylElement, Laurent>> localize_opposite_classes(NilHecke& nh) {
  const AffineWeylGroup& g = nh.group();
  const FiniteWeylGroup& fg = nh.finite_group();
  std::map<FiniteWeylElement, std::map<FiniteWeylElement, Laurent>> psi;
  for (const FiniteWeylElement u : finite_elements_by_length(fg)) {
    const AffineWeylElement ua = g.from_finite(u);
    const auto& row = nh.e_row(ua);
    for (const auto& v : g.lower_interval(ua)) {
      Laurent sum;
      for (const auto& [w, e] : row)
        if (g.bruhat_leq(v, w)) sum += e;
      if (!sum.is_zero()) psi[v.finite][u] = sum.dual();
    }
  }
  return psi;
}

}  // namespace

std::map<FiniteWeylElement, Laurent> classical_k_constants(NilHecke& nh, FiniteWeylElement u, FiniteWeylElement v) {
  const FiniteWeylGroup& fg = nh.finite_group();
  const auto psi = localize_opposite_classes(nh);
  auto at = [&psi](FiniteWeylElement cls, FiniteWeylElement point) -> Laurent {
    const auto i = psi.find(cls);
    if (i == psi.end()) return {};
    const auto j = i->second.find(point);
    return j == i->second.end() ? Laurent{} : j->second;
  };
  std::map<FiniteWeylElement, Laurent> result;
  for (const FiniteWeylElement w : finite_elements_by_length(fg)) {
    Laurent residual = at(u, w) * at(v, w);
    for (const auto& [w2, n] : result) residual -= n * at(w2, w);
    if (residual.is_zero()) continue;
    const Laurent diag = at(w, w);
    if (diag.is_zero()) throw SingularSystem("vanishing diagonal localization");
    Laurent n = rf_to_polynomial(rf_divide(nh.datum(), residual, diag));
    result.emplace(w, std::move(n));
  }
  return result;
}

std::vector<QuantumDatum> classical_quantum_data(NilHecke& nh) {
  const FiniteWeylGroup& fg = nh.finite_group();
  std::vector<QuantumDatum> out;
  const std::vector<int> zero(nh.datum().rank, 0);
  for (std::uint32_t a = 0; a < fg.size(); ++a)
    for (std::uint32_t b = 0; b < fg.size(); ++b)
      for (auto& [w, n] : classical_k_constants(nh, {a}, {b})) out.push_back({{a}, {b}, w, zero, n});
  return out;
}

// ---------------------------------------------------------------------------

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::NoData: return "no-data";
  }
  return "?";
}

int ConjectureReport::matches() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [](const auto& e) { return e.verdict == Verdict::Match; }));
}

int ConjectureReport::mismatches() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [](const auto& e) { return e.verdict == Verdict::Mismatch; }));
}

void validate_quantum_data(const CartanDatum& d, const std::vector<QuantumDatum>& data) {
  for (const auto& q : data) {
    if (static_cast<int>(q.degree.size()) != d.rank) throw MalformedDatum("quantum degree has wrong length");
    for (int m : q.degree)
      if (m < 0) throw MalformedDatum("quantum degree has a negative entry");
  }
}

ConjectureReport conjecture_check(NilHecke& nh, const AffineWeylElement& x, const AffineWeylElement& y,
                                  const std::vector<QuantumDatum>& quantum_data) {
  validate_quantum_data(nh.datum(), quantum_data);
  const AffineWeylGroup& g = nh.group();
  const StructureConstantTable table = pontryagin_constants(nh, x, y);
  const Coroot nu = x.translation + y.translation;

  std::map<std::pair<FiniteWeylElement, std::vector<int>>, const QuantumDatum*> relevant;
  for (const auto& q : quantum_data)
    if (q.u == x.finite && q.v == y.finite) relevant[{q.w, q.degree}] = &q;

  ConjectureReport report{x, y, {}};
  std::set<std::pair<FiniteWeylElement, std::vector<int>>> used;
  for (const auto& [z, c] : table.entries) {
    ConjectureEntry e{z, c, x.finite, y.finite, z.finite, z.translation - nu, std::nullopt, std::nullopt,
                      Verdict::NoData};
    const std::vector<int> eta = e.eta.coords();
    if (std::all_of(eta.begin(), eta.end(), [](int m) { return m >= 0; })) {
      e.degree = eta;
      if (const auto it = relevant.find({z.finite, eta}); it != relevant.end()) {
        e.n_value = it->second->value;
        e.verdict = *e.n_value == c ? Verdict::Match : Verdict::Mismatch;
        used.insert(it->first);
      }
    }
    report.entries.push_back(std::move(e));
  }
  // Quantum terms whose affine counterpart has a zero coefficient.
  for (const auto& [key, q] : relevant) {
    if (used.count(key) || q->value.is_zero()) continue;
    const Coroot eta = Coroot::from(q->degree);
    const AffineWeylElement z{q->w, nu + eta};
    if (!g.is_grassmannian(z)) continue;
    report.entries.push_back({z, Laurent{}, x.finite, y.finite, q->w, eta, q->degree, q->value, Verdict::Mismatch});
  }
  return report;
}

}  // namespace kpeterson
