#pragma once

// Structure constants of the Pontryagin product on K-homology of the affine
// Grassmannian, in the basis of structure sheaves O_x, x Grassmannian:
//
//   c_{x,y}^z = sum_{t1,t2} b_{x,[t1]} b_{y,[t2]} e_{t1 t2,[z]}.
//
// A second route solves l_x l_y = sum_z c^z l_z directly in the localization
// basis, and a finite-type oracle gives the classical K_T(G/B) constants.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kpeterson/nilhecke.hpp"

namespace kpeterson {

struct StructureConstantTable {
  AffineWeylElement x;
  AffineWeylElement y;
  std::map<AffineWeylElement, Laurent> entries;

  friend bool operator==(const StructureConstantTable&, const StructureConstantTable&) = default;
};

StructureConstantTable pontryagin_constants(NilHecke& nh, const AffineWeylElement& x, const AffineWeylElement& y);
StructureConstantTable pontryagin_constants_linear(NilHecke& nh, const AffineWeylElement& x,
                                                   const AffineWeylElement& y);
/// One summand b_{x,[t1]} b_{y,[t2]} e_{t1 t2,[z]} of the closed formula.
RationalFunction bbe_summand(NilHecke& nh, const AffineWeylElement& x, const AffineWeylElement& y,
                             const Coroot& t1, const Coroot& t2, const AffineWeylElement& z);

struct TranslationCheck {
  bool holds = false;
  StructureConstantTable table;
  AffineWeylElement expected;
};
/// Whether O_x O_{t_nu} = O_{x t_nu}.
TranslationCheck translation_product_check(NilHecke& nh, const AffineWeylElement& x, const Coroot& nu);

/// N_{u,v}^{w,d} with d a vector of q-exponents.
struct QuantumDatum {
  FiniteWeylElement u, v, w;
  std::vector<int> degree;
  Laurent value;
};

/// Degree-zero constants of K_T(G/B) in the opposite Schubert basis {O^w}.
std::map<FiniteWeylElement, Laurent> classical_k_constants(NilHecke& nh, FiniteWeylElement u, FiniteWeylElement v);
/// Every degree-zero datum N_{u,v}^{w,0} for the finite Weyl group.
std::vector<QuantumDatum> classical_quantum_data(NilHecke& nh);

enum class Verdict { Match, Mismatch, NoData };
const char* verdict_name(Verdict v);

struct ConjectureEntry {
  AffineWeylElement z;
  Laurent c_value;
  FiniteWeylElement u, v, w;
  Coroot eta;
  std::optional<std::vector<int>> degree;  // empty when eta is not effective
  std::optional<Laurent> n_value;
  Verdict verdict = Verdict::NoData;
};

struct ConjectureReport {
  AffineWeylElement x, y;
  std::vector<ConjectureEntry> entries;
  int matches() const;
  int mismatches() const;
};

ConjectureReport conjecture_check(NilHecke& nh, const AffineWeylElement& x, const AffineWeylElement& y,
                                  const std::vector<QuantumDatum>& quantum_data);

/// Throws MalformedDatum on negative degrees or wrong degree length.
void validate_quantum_data(const CartanDatum& d, const std::vector<QuantumDatum>& data);

}  // namespace kpeterson
