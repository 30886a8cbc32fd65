#pragma once

// The small-torus affine K-nilHecke ring.
//
// Elements are finite sums over the affine Weyl group with coefficients in
// Q(T), expressed in one of three bases:
//   Localization: sum q_u u, product (p u)(q v) = p (u.q) uv;
//   T basis:      T_i = (1 - e^{alpha_i})^{-1} (s_i - 1);
//   Y basis:      y_i = 1 + T_i.
// The change-of-basis matrices are y_w = sum b_{w,u} u and w = sum e_{w,u} y_u.

#include <map>
#include <unordered_map>
#include <vector>

#include "kpeterson/ring.hpp"
#include "kpeterson/weyl.hpp"

namespace kpeterson {

enum class Basis { Localization, T, Y };
const char* basis_name(Basis b);

template <class Coeff>
using CoefficientRow = std::map<AffineWeylElement, Coeff>;

class KElement {
 public:
  explicit KElement(Basis basis = Basis::Localization) : basis_(basis) {}
  KElement(Basis basis, CoefficientRow<RationalFunction> terms);

  Basis basis() const { return basis_; }
  const CoefficientRow<RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coefficient(const AffineWeylElement& x) const;

  /// Adds c * (basis element x).
  void add(const AffineWeylElement& x, const RationalFunction& c);
  KElement& operator+=(const KElement& o);
  KElement& operator-=(const KElement& o);
  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  /// Left scalar multiplication.
  friend KElement operator*(const RationalFunction& q, const KElement& a);

  friend bool operator==(const KElement& a, const KElement& b);

 private:
  void require_same_basis(const KElement& o) const;
  Basis basis_;
  CoefficientRow<RationalFunction> terms_;
};

/// b and e rows of one element, plus their coset sums.
struct BECoefficientTable {
  AffineWeylElement element;
  CoefficientRow<RationalFunction> b_row;
  CoefficientRow<Laurent> e_row;
  /// b_{x,[t_mu]} keyed by mu.
  std::map<Coroot, RationalFunction> coset_b;
  /// e_{x,[z]} keyed by the Grassmannian coset representative z.
  std::map<AffineWeylElement, Laurent> coset_e;
};

/// Computation context: owns memoized b, e and T rows for one root system.
/// Not thread-safe; use one instance per worker.
class NilHecke {
 public:
  explicit NilHecke(const CartanDatum& datum);
  explicit NilHecke(std::shared_ptr<const FiniteWeylGroup> finite);

  const AffineWeylGroup& group() const { return group_; }
  const CartanDatum& datum() const { return group_.datum(); }
  const FiniteWeylGroup& finite_group() const { return group_.finite_group(); }

  // -- ring structure (Localization basis) --
  KElement k_mul(const KElement& a, const KElement& b) const;
  KElement scalar(const RationalFunction& q) const;
  KElement group_element(const AffineWeylElement& x) const;
  KElement t_element(int i) const;
  KElement y_element(int i) const;

  // -- change-of-basis coefficients --
  /// y_x in the localization basis, built as y_{x'} y_i.
  const CoefficientRow<RationalFunction>& b_row(const AffineWeylElement& x);
  /// Same row from the closed subword sum over {0,1}^m along `word`.
  CoefficientRow<RationalFunction> b_row_subword(const ReducedWord& word) const;
  /// e_{x,*} by peeling left descents.
  const CoefficientRow<Laurent>& e_row(const AffineWeylElement& x);
  /// Same row from the closed subword sum with the 0-Hecke condition.
  CoefficientRow<Laurent> e_row_subword(const ReducedWord& word) const;
  /// T_x in the localization basis, built as T_{x'} T_i.
  const CoefficientRow<RationalFunction>& t_row(const AffineWeylElement& x);

  std::map<Coroot, RationalFunction> coset_b(const AffineWeylElement& x);
  std::map<AffineWeylElement, Laurent> coset_e(const AffineWeylElement& x);
  BECoefficientTable table(const AffineWeylElement& x);

  // -- bases --
  KElement convert(const KElement& a, Basis target);
  /// Left Q(T)-linear map t_l w -> t_l on the localization basis.
  KElement kappa(const KElement& a);
  /// k_w in the T basis; checks the characteristic shape.
  KElement k_class(const AffineWeylElement& w);
  /// l_w = kappa(y_w) in the T basis.
  KElement l_class(const AffineWeylElement& w);

  void clear_caches();

 private:
  KElement to_localization(const KElement& a);
  KElement localization_to_y(const KElement& a);
  int last_letter(const AffineWeylElement& x) const;
  int first_letter(const AffineWeylElement& x) const;

  AffineWeylGroup group_;
  /// Localization coefficients of y_i at id and at s_i.
  std::vector<std::pair<RationalFunction, RationalFunction>> y_coeffs_;
  std::vector<RationalFunction> t_coeffs_;  // (1 - e^{alpha_i})^{-1}
  std::unordered_map<AffineWeylElement, CoefficientRow<RationalFunction>, AffineWeylElementHash> b_cache_;
  std::unordered_map<AffineWeylElement, CoefficientRow<Laurent>, AffineWeylElementHash> e_cache_;
  std::unordered_map<AffineWeylElement, CoefficientRow<RationalFunction>, AffineWeylElementHash> t_cache_;
};

}  // namespace kpeterson
