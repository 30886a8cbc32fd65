#pragma once

#include <random>

#include "doctest.h"
#include "kpeterson/format.hpp"

namespace kptest {

using namespace kpeterson;

inline Laurent L(const CartanDatum& d, const char* text) { return parse_laurent(text, d); }
inline AffineWeylElement E(const AffineWeylGroup& g, const char* text) { return parse_element(text, g); }

/// Small random element of Z[Lambda]; deterministic for a given engine state.
inline Laurent random_laurent(const CartanDatum& d, std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> n(0, max_terms), coord(-2, 2), coeff(-3, 3);
  std::vector<Laurent::Term> terms;
  for (int k = n(rng); k > 0; --k) {
    std::vector<int> w(d.rank);
    for (int& c : w) c = coord(rng);
    terms.emplace_back(Weight::from(w), BigInt(coeff(rng)));
  }
  return Laurent::from_terms(std::move(terms));
}

/// Random fraction with up to two (1 - e^beta) factors in the denominator.
inline RationalFunction random_rational(const CartanDatum& d, std::mt19937& rng) {
  std::uniform_int_distribution<int> n(0, 2);
  std::uniform_int_distribution<std::size_t> root(0, d.positive_roots.size() - 1);
  RationalFunction q = random_laurent(d, rng);
  for (int k = n(rng); k > 0; --k) q *= RationalFunction::inverse_one_minus(d, d.positive_roots[root(rng)]);
  return q;
}

}  // namespace kptest
