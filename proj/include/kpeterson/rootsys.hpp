#pragma once

// Finite root-system data: Cartan matrix, weight lattice, coroot lattice,
// positive roots and the level-zero images of the affine simple roots.
//
// Weights live in fundamental-weight coordinates and coroots in simple-coroot
// coordinates, so the canonical pairing is a plain dot product.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "kpeterson/error.hpp"

namespace kpeterson {

inline constexpr int kMaxRank = 8;

/// Integer vector of fixed small rank. Coordinates past `rank()` are always 0,
/// so comparison and hashing never look at the rank twice.
template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(int rank) : rank_(static_cast<std::uint8_t>(checked_rank(rank))) {}
  LatticeVector(int rank, std::initializer_list<int> coords) : LatticeVector(rank) {
    if (static_cast<int>(coords.size()) != rank) throw RankMismatch("coordinate count differs from rank");
    int i = 0;
    for (int c : coords) c_[i++] = c;
  }
  static LatticeVector from(const std::vector<int>& coords) {
    LatticeVector v(static_cast<int>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) v.c_[i] = coords[i];
    return v;
  }

  int rank() const { return rank_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  std::vector<int> coords() const { return {c_.begin(), c_.begin() + rank_}; }

  bool is_zero() const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    same_rank(o);
    for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    same_rank(o);
    for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a) {
    for (int i = 0; i < a.rank_; ++i) a.c_[i] = -a.c_[i];
    return a;
  }
  friend LatticeVector operator*(int k, LatticeVector a) {
    for (int i = 0; i < a.rank_; ++i) a.c_[i] *= k;
    return a;
  }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  // Lexicographic on coordinates; this is the printing order of monomials.
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) {
    if (auto r = a.rank_ <=> b.rank_; r != 0) return r;
    return a.c_ <=> b.c_;  // unused slots are zero
  }

  std::size_t hash() const {
    std::size_t h = rank_;
    for (int i = 0; i < rank_; ++i) h = h * 1000003u ^ static_cast<std::size_t>(static_cast<std::uint32_t>(c_[i]));
    return h;
  }

  void same_rank(const LatticeVector& o) const {
    if (rank_ != o.rank_) throw RankMismatch("lattice vectors of different rank");
  }

 private:
  static int checked_rank(int rank) {
    if (rank < 0 || rank > kMaxRank) throw RankMismatch("rank outside [0, " + std::to_string(kMaxRank) + "]");
    return rank;
  }

  std::uint8_t rank_ = 0;
  std::array<std::int32_t, kMaxRank> c_{};
};

struct WeightTag {};
struct CorootTag {};
/// Element of the weight lattice, fundamental-weight coordinates.
using Weight = LatticeVector<WeightTag>;
/// Element of the coroot lattice, simple-coroot coordinates.
using Coroot = LatticeVector<CorootTag>;

/// Canonical pairing <coroot, weight>.
int pair(const Coroot& coroot, const Weight& weight);

enum class LieType { A, B, C, D, G, F, E, Custom };

struct CartanDatum {
  std::string type_label;
  int rank = 0;
  /// cartan[i][j] = <alpha_i^vee, alpha_j>.
  std::vector<std::vector<int>> cartan;
  std::vector<Weight> simple_roots;
  std::vector<Coroot> simple_coroots;
  /// Ordered by height, then lexicographically on simple-root coordinates.
  std::vector<Weight> positive_roots;
  std::vector<Coroot> positive_coroots;
  /// Simple-root coordinates of each positive root.
  std::vector<std::vector<int>> positive_root_heights;
  Weight highest_root;
  Coroot highest_coroot;

  int index_of_positive_root(const Weight& beta) const;  // -1 when absent
  bool is_positive_root(const Weight& beta) const { return index_of_positive_root(beta) >= 0; }
  /// +1 / -1 for a positive / negative root, 0 for a non-root.
  int root_sign(const Weight& beta) const;

  Weight zero_weight() const { return Weight(rank); }
  Coroot zero_coroot() const { return Coroot(rank); }
  Weight fundamental_weight(int i) const;  // 1-based
  /// Sum of fundamental weights.
  Weight rho() const;

  /// Weight expressed in simple-root coordinates, when it lies in the root lattice.
  std::optional<std::vector<int>> root_coordinates(const Weight& w) const;
  Weight weight_from_root_coordinates(const std::vector<int>& coords) const;
  /// alpha_i paired against a coroot: <mu, alpha_i>.
  int coroot_pair_simple_root(const Coroot& mu, int i) const;
};

/// Built-in tables: "A1", "A2", "A3" (any type A_n up to kMaxRank is accepted).
CartanDatum build_root_system(const std::string& type_label);
/// Arbitrary finite-type Cartan matrix.
CartanDatum build_root_system(const std::vector<std::vector<int>>& cartan, std::string label = "custom");

/// s_i(lambda) = lambda - <alpha_i^vee, lambda> alpha_i, 1 <= i <= rank.
Weight simple_reflection_on_weight(const CartanDatum& d, int i, const Weight& lambda);
/// s_i(mu) = mu - <mu, alpha_i> alpha_i^vee on the coroot lattice.
Coroot simple_reflection_on_coroot(const CartanDatum& d, int i, const Coroot& mu);
/// alpha_i for i >= 1 and -theta for i = 0 (null root set to zero).
Weight level_zero_root(const CartanDatum& d, int i);

}  // namespace kpeterson

template <class Tag>
struct std::hash<kpeterson::LatticeVector<Tag>> {
  std::size_t operator()(const kpeterson::LatticeVector<Tag>& v) const noexcept { return v.hash(); }
};
