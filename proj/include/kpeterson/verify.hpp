#pragma once

// Recomputation of the reference tables shipped with the library (data/*.json,
// also compiled into the binary).

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kpeterson/format.hpp"

namespace kpeterson {

struct VerificationRecord {
  std::string suite;
  std::string id;
  std::string kind;  // product, summand, translation, k_class, l_class, conjecture, classical
  bool pass = false;
  nlohmann::json expected;
  nlohmann::json computed;
  /// Non-empty when the record passes only after documented corrections to
  /// the reference values.
  std::vector<std::string> errata;
};

struct VerificationReport {
  std::vector<VerificationRecord> records;
  bool all_pass() const;
  int failures() const;
};

enum class Suite { SL2, SL3, All };
Suite parse_suite(std::string_view name);

/// Raw JSON text of an embedded fixture ("sl2" or "sl3").
std::string_view embedded_fixture(std::string_view name);

VerificationReport verify_fixture(const nlohmann::json& fixture, int threads = 1);
VerificationReport verify_embedded_tables(Suite suite, int threads = 1);
nlohmann::json verification_to_json(const VerificationReport& r);

/// Quantum data listed in a fixture, parsed against g.
std::vector<QuantumDatum> fixture_quantum_data(const nlohmann::json& fixture, const AffineWeylGroup& g);

/// Diagram automorphism i -> r + 1 - i of type A_r, on elements and on R(T).
AffineWeylElement diagram_flip(const AffineWeylGroup& g, const AffineWeylElement& x);
Laurent diagram_flip(const Laurent& f);

/// Runs tasks on `threads` workers, each with its own NilHecke over a shared
/// finite Weyl group; results come back in task order.
template <class R>
std::vector<R> run_parallel(const CartanDatum& d, const std::vector<std::function<R(NilHecke&)>>& tasks, int threads);

}  // namespace kpeterson

#include "kpeterson/detail/parallel.hpp"
