#pragma once

// Exact arithmetic in R(T) = Z[Lambda] and in the part of Q(T) whose
// denominators are products of (1 - e^beta) over positive roots beta.

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kpeterson/rootsys.hpp"
#include "kpeterson/weyl.hpp"

namespace kpeterson {

using BigInt = boost::multiprecision::cpp_int;

/// Element of the group algebra Z[Lambda]; finite sum of c * e^lambda.
/// Terms are sorted by weight and never carry a zero coefficient.
class Laurent {
 public:
  using Term = std::pair<Weight, BigInt>;

  Laurent() = default;
  static Laurent constant(int rank, const BigInt& c);
  static Laurent monomial(const Weight& lambda, const BigInt& c = 1);
  /// 1 - e^beta.
  static Laurent one_minus(const Weight& beta);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Laurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// 0 when the value is zero (rank unknown).
  int rank() const { return terms_.empty() ? 0 : terms_.front().first.rank(); }
  /// True for a single term +-e^lambda.
  bool is_unit_monomial() const;
  BigInt coefficient(const Weight& lambda) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  /// Multiplication by e^lambda.
  Laurent shifted(const Weight& lambda) const;
  Laurent scaled(const BigInt& c) const;

  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// Quotient by (1 - e^beta) when it divides exactly.
  std::optional<Laurent> divide_one_minus(const Weight& beta) const;
  /// e^lambda -> e^{-lambda}.
  Laurent dual() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

/// Sum of coefficients (specialization e^lambda -> 1).
BigInt augmentation(const Laurent& a);

/// numerator / prod (1 - e^beta)^m over positive roots beta.
/// Canonical form: no denominator factor divides the numerator; zero has an
/// empty denominator.
class RationalFunction {
 public:
  using Factor = std::pair<Weight, int>;  // positive root, multiplicity

  RationalFunction() = default;
  RationalFunction(Laurent numerator);  // NOLINT: implicit polynomial embedding
  RationalFunction(Laurent numerator, std::vector<Factor> denominator);

  static RationalFunction constant(int rank, const BigInt& c) { return Laurent::constant(rank, c); }
  /// 1 / (1 - e^beta) for any root beta, normalized to a positive-root factor.
  static RationalFunction inverse_one_minus(const CartanDatum& d, const Weight& beta);

  const Laurent& numerator() const { return num_; }
  const std::vector<Factor>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  int rank() const { return num_.rank(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator-(RationalFunction a);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  /// Equality of the represented functions (cross-multiplied).
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// Multiplicative inverse; the numerator must factor as
  /// +-e^lambda times a product of (1 - e^beta) over roots.
  RationalFunction inverse(const CartanDatum& d) const;

 private:
  friend RationalFunction rf_reduce(RationalFunction a);
  Laurent num_;
  std::vector<Factor> den_;
};

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
/// Cancels every denominator factor that divides the numerator.
RationalFunction rf_reduce(RationalFunction a);
/// Numerator of a reduced fraction with empty denominator; throws NonPolynomial otherwise.
Laurent rf_to_polynomial(const RationalFunction& a);
RationalFunction rf_divide(const CartanDatum& d, const RationalFunction& a, const RationalFunction& b);

/// Level-zero action of the finite part of x; translations act trivially.
Laurent weyl_act(const FiniteWeylGroup& g, FiniteWeylElement w, const Laurent& f);
RationalFunction weyl_act(const FiniteWeylGroup& g, FiniteWeylElement w, const RationalFunction& f);
inline RationalFunction weyl_act(const FiniteWeylGroup& g, const AffineWeylElement& x, const RationalFunction& f) {
  return weyl_act(g, x.finite, f);
}
inline Laurent weyl_act(const FiniteWeylGroup& g, const AffineWeylElement& x, const Laurent& f) {
  return weyl_act(g, x.finite, f);
}

}  // namespace kpeterson
