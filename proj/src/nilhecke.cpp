#include "kpeterson/nilhecke.hpp"

namespace kpeterson {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::Localization: return "localization";
    case Basis::T: return "T";
    case Basis::Y: return "y";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// KElement

KElement::KElement(Basis basis, CoefficientRow<RationalFunction> terms) : basis_(basis) {
  for (auto& [x, c] : terms)
    if (!c.is_zero()) terms_.emplace(x, std::move(c));
}

RationalFunction KElement::coefficient(const AffineWeylElement& x) const {
  const auto it = terms_.find(x);
  return it == terms_.end() ? RationalFunction{} : it->second;
}

void KElement::add(const AffineWeylElement& x, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void KElement::require_same_basis(const KElement& o) const {
  if (basis_ != o.basis_) throw BasisMismatch("K elements expressed in different bases");
}

KElement& KElement::operator+=(const KElement& o) {
  require_same_basis(o);
  for (const auto& [x, c] : o.terms_) add(x, c);
  return *this;
}

KElement& KElement::operator-=(const KElement& o) {
  require_same_basis(o);
  for (const auto& [x, c] : o.terms_) add(x, -c);
  return *this;
}

KElement operator*(const RationalFunction& q, const KElement& a) {
  KElement r(a.basis());
  if (q.is_zero()) return r;
  for (const auto& [x, c] : a.terms()) r.add(x, q * c);
  return r;
}

bool operator==(const KElement& a, const KElement& b) {
  if (a.basis_ != b.basis_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [x, c] : a.terms_) {
    if (!(it->first == x) || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

// ---------------------------------------------------------------------------
// NilHecke

NilHecke::NilHecke(const CartanDatum& datum) : NilHecke(std::make_shared<const FiniteWeylGroup>(datum)) {}

NilHecke::NilHecke(std::shared_ptr<const FiniteWeylGroup> finite) : group_(std::move(finite)) {
  const CartanDatum& d = datum();
  for (int i = 0; i <= d.rank; ++i) {
    const Weight alpha = level_zero_root(d, i);
    // y_i = (1 - e^{-alpha_i})^{-1} id + (1 - e^{alpha_i})^{-1} s_i.
    y_coeffs_.emplace_back(RationalFunction::inverse_one_minus(d, -alpha),
                           RationalFunction::inverse_one_minus(d, alpha));
    t_coeffs_.push_back(RationalFunction::inverse_one_minus(d, alpha));
  }
}

KElement NilHecke::k_mul(const KElement& a, const KElement& b) const {
  if (a.basis() != Basis::Localization || b.basis() != Basis::Localization)
    throw BasisMismatch("k_mul expects localization-basis operands");
  KElement r(Basis::Localization);
  const auto& g = finite_group();
  for (const auto& [u, p] : a.terms())
    for (const auto& [v, q] : b.terms()) r.add(group_.multiply(u, v), p * weyl_act(g, u, q));
  return r;
}

KElement NilHecke::scalar(const RationalFunction& q) const {
  KElement r(Basis::Localization);
  r.add(group_.identity(), q);
  return r;
}

KElement NilHecke::group_element(const AffineWeylElement& x) const {
  KElement r(Basis::Localization);
  r.add(x, RationalFunction::constant(datum().rank, 1));
  return r;
}

KElement NilHecke::t_element(int i) const {
  if (i < 0 || i > datum().rank) throw IndexOutOfRange("affine index out of range");
  KElement r(Basis::Localization);
  r.add(group_.identity(), -t_coeffs_[i]);
  r.add(group_.simple(i), t_coeffs_[i]);
  return r;
}

KElement NilHecke::y_element(int i) const {
  if (i < 0 || i > datum().rank) throw IndexOutOfRange("affine index out of range");
  KElement r(Basis::Localization);
  r.add(group_.identity(), y_coeffs_[i].first);
  r.add(group_.simple(i), y_coeffs_[i].second);
  return r;
}

int NilHecke::last_letter(const AffineWeylElement& x) const {
  for (int i = 0; i <= datum().rank; ++i)
    if (group_.is_descent(i, x, Side::Right)) return i;
  return -1;
}

int NilHecke::first_letter(const AffineWeylElement& x) const {
  for (int i = 0; i <= datum().rank; ++i)
    if (group_.is_descent(i, x, Side::Left)) return i;
  return -1;
}

const CoefficientRow<RationalFunction>& NilHecke::b_row(const AffineWeylElement& x) {
  if (const auto it = b_cache_.find(x); it != b_cache_.end()) return it->second;
  CoefficientRow<RationalFunction> row;
  const int i = last_letter(x);
  if (i < 0) {
    row.emplace(x, RationalFunction::constant(datum().rank, 1));
  } else {
    const AffineWeylElement prefix = group_.apply_simple(i, x, Side::Right);
    const auto& prev = b_row(prefix);
    const auto& [c_id, c_s] = y_coeffs_[i];
    const auto& g = finite_group();
    KElement acc(Basis::Localization);
    for (const auto& [u, b] : prev) {
      acc.add(u, b * weyl_act(g, u, c_id));
      acc.add(group_.apply_simple(i, u, Side::Right), b * weyl_act(g, u, c_s));
    }
    row = acc.terms();
  }
  return b_cache_.emplace(x, std::move(row)).first->second;
}

const CoefficientRow<RationalFunction>& NilHecke::t_row(const AffineWeylElement& x) {
  if (const auto it = t_cache_.find(x); it != t_cache_.end()) return it->second;
  CoefficientRow<RationalFunction> row;
  const int i = last_letter(x);
  if (i < 0) {
    row.emplace(x, RationalFunction::constant(datum().rank, 1));
  } else {
    const AffineWeylElement prefix = group_.apply_simple(i, x, Side::Right);
    const auto& prev = t_row(prefix);
    const RationalFunction& c = t_coeffs_[i];
    const auto& g = finite_group();
    KElement acc(Basis::Localization);
    for (const auto& [u, a] : prev) {
      const RationalFunction twisted = a * weyl_act(g, u, c);
      acc.add(u, -twisted);
      acc.add(group_.apply_simple(i, u, Side::Right), twisted);
    }
    row = acc.terms();
  }
  return t_cache_.emplace(x, std::move(row)).first->second;
}

const CoefficientRow<Laurent>& NilHecke::e_row(const AffineWeylElement& x) {
  if (const auto it = e_cache_.find(x); it != e_cache_.end()) return it->second;
  CoefficientRow<Laurent> row;
  const int i = first_letter(x);
  if (i < 0) {
    row.emplace(x, Laurent::constant(datum().rank, 1));
  } else {
    // x = s_i u with u < x:
    //   e_{x,v} = s_i(e_{u,v}) + (1 - e^{a_i}) s_i(e_{u,s_i v})   if s_i v < v,
    //   e_{x,v} = e^{a_i} s_i(e_{u,v})                            otherwise.
    const AffineWeylElement u = group_.apply_simple(i, x, Side::Left);
    const auto& prev = e_row(u);
    const auto& g = finite_group();
    const FiniteWeylElement si = group_.simple(i).finite;
    const Weight alpha = level_zero_root(datum(), i);
    const Laurent one_minus = Laurent::one_minus(alpha);
    auto lookup = [&prev](const AffineWeylElement& v) -> const Laurent* {
      const auto it = prev.find(v);
      return it == prev.end() ? nullptr : &it->second;
    };
    for (const auto& v : group_.lower_interval(x)) {
      const AffineWeylElement sv = group_.apply_simple(i, v, Side::Left);
      Laurent value;
      if (group_.length(sv) < group_.length(v)) {
        if (const Laurent* a = lookup(v)) value += weyl_act(g, si, *a);
        if (const Laurent* a = lookup(sv)) value += one_minus * weyl_act(g, si, *a);
      } else if (const Laurent* a = lookup(v)) {
        value = weyl_act(g, si, *a).shifted(alpha);
      }
      if (!value.is_zero()) row.emplace(v, std::move(value));
    }
  }
  return e_cache_.emplace(x, std::move(row)).first->second;
}

namespace {
constexpr std::size_t kSubwordLimit = 24;
}

CoefficientRow<RationalFunction> NilHecke::b_row_subword(const ReducedWord& word) const {
  if (word.size() > kSubwordLimit) throw LengthGuard("subword enumeration limited to 24 letters");
  const CartanDatum& d = datum();
  const auto& g = finite_group();
  std::vector<std::pair<RationalFunction, RationalFunction>> base;
  for (int i : word) {
    const Weight beta = level_zero_root(d, i);
    const RationalFunction inv = RationalFunction::inverse_one_minus(d, -beta);
    base.emplace_back(inv, Laurent::monomial(-beta, -1) * inv);
  }
  KElement acc(Basis::Localization);
  const std::uint64_t count = std::uint64_t{1} << word.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    AffineWeylElement prefix = group_.identity();
    RationalFunction coeff = RationalFunction::constant(d.rank, 1);
    for (std::size_t k = 0; k < word.size(); ++k) {
      const bool take = mask >> k & 1u;
      coeff *= weyl_act(g, prefix, take ? base[k].second : base[k].first);
      if (take) prefix = group_.apply_simple(word[k], prefix, Side::Right);
    }
    acc.add(prefix, coeff);
  }
  return acc.terms();
}

CoefficientRow<Laurent> NilHecke::e_row_subword(const ReducedWord& word) const {
  if (word.size() > kSubwordLimit) throw LengthGuard("subword enumeration limited to 24 letters");
  const std::vector<Weight> gammas = group_.reflection_roots(word);
  std::map<AffineWeylElement, Laurent> acc;
  const std::uint64_t count = std::uint64_t{1} << word.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Laurent coeff = Laurent::constant(datum().rank, 1);
    for (std::size_t k = 0; k < word.size(); ++k)
      coeff *= (mask >> k & 1u) ? Laurent::one_minus(gammas[k]) : Laurent::monomial(gammas[k]);
    acc[group_.demazure_product(word, mask)] += coeff;
  }
  CoefficientRow<Laurent> row;
  for (auto& [v, c] : acc)
    if (!c.is_zero()) row.emplace(v, std::move(c));
  return row;
}

std::map<Coroot, RationalFunction> NilHecke::coset_b(const AffineWeylElement& x) {
  std::map<Coroot, RationalFunction> out;
  for (const auto& [v, b] : b_row(x)) out[group_.coset_translation(v)] += b;
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<AffineWeylElement, Laurent> NilHecke::coset_e(const AffineWeylElement& x) {
  std::map<AffineWeylElement, Laurent> out;
  for (const auto& [v, e] : e_row(x)) out[group_.coset_min(v)] += e;
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

BECoefficientTable NilHecke::table(const AffineWeylElement& x) {
  BECoefficientTable t{x, b_row(x), e_row(x), coset_b(x), coset_e(x)};
  return t;
}

KElement NilHecke::to_localization(const KElement& a) {
  KElement r(Basis::Localization);
  switch (a.basis()) {
    case Basis::Localization: return a;
    case Basis::Y:
      for (const auto& [w, c] : a.terms())
        for (const auto& [u, b] : b_row(w)) r.add(u, c * b);
      return r;
    case Basis::T:
      for (const auto& [w, c] : a.terms())
        for (const auto& [u, t] : t_row(w)) r.add(u, c * t);
      return r;
  }
  return r;
}

KElement NilHecke::localization_to_y(const KElement& a) {
  KElement r(Basis::Y);
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, e] : e_row(u)) r.add(v, c * RationalFunction(e));
  return r;
}

KElement NilHecke::convert(const KElement& a, Basis target) {
  if (a.basis() == target) return a;
  if (target == Basis::Localization) return to_localization(a);

  KElement y(Basis::Y);
  if (a.basis() == Basis::Localization) {
    y = localization_to_y(a);
  } else if (a.basis() == Basis::T) {
    // Moebius inversion of y_w = sum_{v <= w} T_v.
    for (const auto& [w, c] : a.terms()) {
      const int lw = group_.length(w);
      for (const auto& v : group_.lower_interval(w)) y.add(v, (lw - group_.length(v)) % 2 ? -c : c);
    }
  } else {
    y = a;
  }
  if (target == Basis::Y) return y;

  KElement t(Basis::T);
  for (const auto& [w, c] : y.terms())
    for (const auto& v : group_.lower_interval(w)) t.add(v, c);
  return t;
}

KElement NilHecke::kappa(const KElement& a) {
  const KElement loc = convert(a, Basis::Localization);
  KElement r(Basis::Localization);
  for (const auto& [u, c] : loc.terms()) r.add(group_.translation(group_.coset_translation(u)), c);
  return r;
}

KElement NilHecke::k_class(const AffineWeylElement& w) {
  if (!group_.is_grassmannian(w)) throw ValidationError("k_class requires a Grassmannian element");
  KElement loc(Basis::Localization, t_row(w));
  const KElement k = convert(kappa(loc), Basis::T);
  if (!(k.coefficient(w) == RationalFunction::constant(datum().rank, 1)))
    throw ShapeViolation("leading coefficient of k_w is not 1");
  for (const auto& [x, c] : k.terms()) {
    if (!c.is_polynomial()) throw ShapeViolation("k_w has a non-polynomial coefficient");
    if (!(x == w) && group_.is_grassmannian(x)) throw ShapeViolation("k_w is supported on another Grassmannian element");
  }
  return k;
}

KElement NilHecke::l_class(const AffineWeylElement& w) {
  if (!group_.is_grassmannian(w)) throw ValidationError("l_class requires a Grassmannian element");
  KElement loc(Basis::Localization, b_row(w));
  return convert(kappa(loc), Basis::T);
}

void NilHecke::clear_caches() {
  b_cache_.clear();
  e_cache_.clear();
  t_cache_.clear();
  group_.clear_caches();
}

}  // namespace kpeterson
