#pragma once

// Finite and affine Weyl groups.
//
// An affine element is stored as w * t_lambda with w in the finite Weyl group
// and lambda in the coroot lattice. The group law is
//   (w t_l)(v t_m) = wv t_{v^{-1} l + m},
// and the affine simple reflection is s_0 = s_theta t_{-theta^vee}.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "kpeterson/rootsys.hpp"

namespace kpeterson {

/// Handle to an element of the finite Weyl group; index into a FiniteWeylGroup.
struct FiniteWeylElement {
  std::uint32_t index = 0;
  friend bool operator==(FiniteWeylElement, FiniteWeylElement) = default;
  friend auto operator<=>(FiniteWeylElement, FiniteWeylElement) = default;
};

/// Sequence of simple-reflection indices; 0 denotes the affine reflection.
using ReducedWord = std::vector<int>;

/// The finite Weyl group, enumerated once. Each element keeps its action
/// matrices on weights and coroots, its length, its canonical reduced word
/// and the signed image of every positive root.
class FiniteWeylGroup {
 public:
  explicit FiniteWeylGroup(const CartanDatum& datum);

  const CartanDatum& datum() const { return *datum_; }
  std::size_t size() const { return elements_.size(); }
  int rank() const { return datum_->rank; }

  FiniteWeylElement identity() const { return {0}; }
  FiniteWeylElement simple(int i) const;  // 1-based
  /// Reflection in the highest root.
  FiniteWeylElement theta_reflection() const { return theta_reflection_; }
  FiniteWeylElement multiply(FiniteWeylElement a, FiniteWeylElement b) const;
  FiniteWeylElement inverse(FiniteWeylElement a) const { return {elements_[a.index].inverse}; }
  FiniteWeylElement from_word(const ReducedWord& word) const;

  Weight act(FiniteWeylElement w, const Weight& lambda) const;
  Coroot act(FiniteWeylElement w, const Coroot& mu) const;
  int length(FiniteWeylElement w) const { return elements_[w.index].length; }
  const ReducedWord& reduced_word(FiniteWeylElement w) const { return elements_[w.index].word; }
  /// Signed image of positive root k: +(j+1) if w beta_k = beta_j, -(j+1) if w beta_k = -beta_j.
  int root_image(FiniteWeylElement w, int k) const { return elements_[w.index].root_images[k]; }
  /// True when w maps positive root k to a negative root.
  bool inverts(FiniteWeylElement w, int k) const { return root_image(w, k) < 0; }
  /// Image of a root (positive or negative) as (positive-root index, sign).
  std::pair<int, int> act_on_root(FiniteWeylElement w, const Weight& beta) const;
  FiniteWeylElement longest() const { return longest_; }

 private:
  struct Entry {
    std::vector<int> weight_matrix;  // column j = image of fundamental weight j
    std::vector<int> coroot_matrix;  // column j = image of simple coroot j
    int length = 0;
    ReducedWord word;
    std::vector<int> root_images;
    std::uint32_t inverse = 0;
  };
  std::optional<FiniteWeylElement> lookup(const Weight& rho_image) const;

  std::shared_ptr<const CartanDatum> datum_;
  std::vector<Entry> elements_;
  std::unordered_map<Weight, std::uint32_t> by_rho_image_;
  std::vector<std::uint32_t> mult_table_;  // filled when the group is small
  FiniteWeylElement theta_reflection_;
  FiniteWeylElement longest_;
};

/// w * t_lambda.
struct AffineWeylElement {
  FiniteWeylElement finite;
  Coroot translation;

  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;
  friend auto operator<=>(const AffineWeylElement& a, const AffineWeylElement& b) {
    if (auto r = a.finite <=> b.finite; r != 0) return r;
    return a.translation <=> b.translation;
  }
};

struct AffineWeylElementHash {
  std::size_t operator()(const AffineWeylElement& x) const noexcept {
    return x.translation.hash() * 31u + x.finite.index;
  }
};

enum class Side { Left, Right };

/// Affine Weyl group of a finite root system, with memoized length,
/// Bruhat order and coset data. Caches are per instance and unsynchronized:
/// share the immutable FiniteWeylGroup, give each thread its own AffineWeylGroup.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(const CartanDatum& datum);
  explicit AffineWeylGroup(std::shared_ptr<const FiniteWeylGroup> finite);

  const CartanDatum& datum() const { return finite_->datum(); }
  const FiniteWeylGroup& finite_group() const { return *finite_; }
  std::shared_ptr<const FiniteWeylGroup> shared_finite_group() const { return finite_; }
  int rank() const { return datum().rank; }

  AffineWeylElement identity() const;
  AffineWeylElement simple(int i) const;  // i in {0, ..., rank}
  AffineWeylElement translation(const Coroot& lambda) const;
  AffineWeylElement from_finite(FiniteWeylElement w) const;
  AffineWeylElement multiply(const AffineWeylElement& x, const AffineWeylElement& y) const;
  AffineWeylElement inverse(const AffineWeylElement& x) const;
  AffineWeylElement apply_simple(int i, const AffineWeylElement& x, Side side) const;
  AffineWeylElement evaluate(const ReducedWord& word) const;

  /// Number of affine hyperplanes separating the fundamental alcove from its image.
  int length(const AffineWeylElement& x) const;
  bool is_descent(int i, const AffineWeylElement& x, Side side) const;
  /// Greedy left descents, smallest index first.
  ReducedWord reduced_word(const AffineWeylElement& x) const;

  bool bruhat_leq(const AffineWeylElement& u, const AffineWeylElement& v) const;
  bool is_grassmannian(const AffineWeylElement& x) const;
  /// Minimal-length element of the coset xW.
  AffineWeylElement coset_min(const AffineWeylElement& x) const;
  /// Translation t_mu with t_mu W = xW, i.e. mu = w(lambda) for x = w t_lambda.
  Coroot coset_translation(const AffineWeylElement& x) const;
  /// Every v <= x; sorted by (length, element).
  const std::vector<AffineWeylElement>& lower_interval(const AffineWeylElement& x) const;

  /// gamma_j = s_{b_1} ... s_{b_{j-1}} (b_j) through the level-zero action.
  std::vector<Weight> reflection_roots(const ReducedWord& word) const;
  /// 0-Hecke product of the letters of `word` selected by `mask`.
  AffineWeylElement demazure_product(const ReducedWord& word, std::uint64_t mask) const;
  /// Ordinary product of the letters selected by `mask`.
  AffineWeylElement subword_product(const ReducedWord& word, std::uint64_t mask) const;

  /// Elements of length <= max_length, breadth-first from the identity.
  std::vector<std::vector<AffineWeylElement>> enumerate_by_length(int max_length) const;
  /// Grassmannian elements of length <= max_length, sorted by length.
  std::vector<AffineWeylElement> grassmannian_elements(int max_length) const;

  /// Level-zero action on weights: translations act trivially.
  Weight act(const AffineWeylElement& x, const Weight& lambda) const { return finite_->act(x.finite, lambda); }

  void clear_caches() const;

 private:
  std::shared_ptr<const FiniteWeylGroup> finite_;
  mutable std::unordered_map<AffineWeylElement, int, AffineWeylElementHash> length_cache_;
  struct PairHash {
    std::size_t operator()(const std::pair<AffineWeylElement, AffineWeylElement>& p) const noexcept {
      AffineWeylElementHash h;
      return h(p.first) * 0x9e3779b97f4a7c15ull ^ h(p.second);
    }
  };
  mutable std::unordered_map<std::pair<AffineWeylElement, AffineWeylElement>, bool, PairHash> bruhat_cache_;
  mutable std::unordered_map<AffineWeylElement, AffineWeylElement, AffineWeylElementHash> coset_min_cache_;
  mutable std::unordered_map<AffineWeylElement, std::vector<AffineWeylElement>, AffineWeylElementHash> interval_cache_;
};

}  // namespace kpeterson
