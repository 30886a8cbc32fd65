#include "kpeterson/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace kpeterson {

namespace {

constexpr std::size_t kFiniteGroupLimit = 60000;
constexpr std::size_t kMultTableLimit = 2048;

std::vector<int> identity_matrix(int n) {
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

// Row-major n x n product.
std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b, int n) {
  std::vector<int> c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

template <class V>
V mat_apply(const std::vector<int>& m, const V& v, int n) {
  V r(n);
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += m[i * n + j] * v[j];
    r[i] = s;
  }
  return r;
}

}  // namespace

FiniteWeylGroup::FiniteWeylGroup(const CartanDatum& datum) : datum_(std::make_shared<CartanDatum>(datum)) {
  const int n = datum_->rank;
  const auto& a = datum_->cartan;

  std::vector<std::vector<int>> weight_gen(n), coroot_gen(n);
  for (int i = 0; i < n; ++i) {
    auto wm = identity_matrix(n);
    for (int r = 0; r < n; ++r) wm[r * n + i] -= datum_->simple_roots[i][r];
    weight_gen[i] = std::move(wm);
    auto cm = identity_matrix(n);
    for (int j = 0; j < n; ++j) cm[i * n + j] -= a[j][i];
    coroot_gen[i] = std::move(cm);
  }

  const Weight rho = datum_->rho();
  elements_.push_back({identity_matrix(n), identity_matrix(n), 0, {}, {}, 0});
  by_rho_image_.emplace(rho, 0);
  // Breadth-first by left multiplication; BFS depth equals length.
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      auto wm = mat_mul(weight_gen[i], elements_[head].weight_matrix, n);
      const Weight image = mat_apply(wm, rho, n);
      if (by_rho_image_.count(image)) continue;
      if (elements_.size() >= kFiniteGroupLimit) throw InvalidCartanMatrix("finite Weyl group too large to enumerate");
      Entry e;
      e.weight_matrix = std::move(wm);
      e.coroot_matrix = mat_mul(coroot_gen[i], elements_[head].coroot_matrix, n);
      e.length = elements_[head].length + 1;
      by_rho_image_.emplace(image, static_cast<std::uint32_t>(elements_.size()));
      elements_.push_back(std::move(e));
    }
  }

  const auto& roots = datum_->positive_roots;
  for (auto& e : elements_) {
    e.root_images.resize(roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const Weight img = mat_apply(e.weight_matrix, roots[k], n);
      const int pos = datum_->index_of_positive_root(img);
      e.root_images[k] = pos >= 0 ? pos + 1 : -(datum_->index_of_positive_root(-img) + 1);
    }
  }

  // Canonical words: smallest left descent first. s_i w < w iff w^{-1} alpha_i < 0,
  // equivalently alpha_i lies in the inversion set of w^{-1}; test via lengths instead.
  std::vector<std::size_t> order(elements_.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return elements_[x].length < elements_[y].length; });
  for (std::size_t idx : order) {
    Entry& e = elements_[idx];
    if (e.length == 0) continue;
    for (int i = 0; i < n; ++i) {
      auto wm = mat_mul(weight_gen[i], e.weight_matrix, n);
      const auto it = by_rho_image_.find(mat_apply(wm, rho, n));
      const Entry& shorter = elements_[it->second];
      if (shorter.length < e.length) {
        e.word.push_back(i + 1);
        e.word.insert(e.word.end(), shorter.word.begin(), shorter.word.end());
        break;
      }
    }
  }

  if (elements_.size() <= kMultTableLimit) {
    const std::size_t m = elements_.size();
    mult_table_.resize(m * m);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        const Weight img = mat_apply(elements_[x].weight_matrix, mat_apply(elements_[y].weight_matrix, rho, n), n);
        mult_table_[x * m + y] = by_rho_image_.at(img);
      }
  }
  for (auto& e : elements_) {
    ReducedWord rev(e.word.rbegin(), e.word.rend());
    e.inverse = from_word(rev).index;
  }

  {
    const Weight theta = datum_->highest_root;
    const Coroot theta_co = datum_->highest_coroot;
    // s_theta(rho) = rho - <theta^vee, rho> theta.
    Weight img = rho - pair(theta_co, rho) * theta;
    theta_reflection_ = {by_rho_image_.at(img)};
  }
  longest_ = {static_cast<std::uint32_t>(order.back())};
}

std::optional<FiniteWeylElement> FiniteWeylGroup::lookup(const Weight& rho_image) const {
  const auto it = by_rho_image_.find(rho_image);
  if (it == by_rho_image_.end()) return std::nullopt;
  return FiniteWeylElement{it->second};
}

FiniteWeylElement FiniteWeylGroup::simple(int i) const {
  if (i < 1 || i > rank()) throw IndexOutOfRange("finite simple reflection index out of range");
  Weight img = datum_->rho() - datum_->simple_roots[i - 1];
  return *lookup(img);
}

FiniteWeylElement FiniteWeylGroup::multiply(FiniteWeylElement a, FiniteWeylElement b) const {
  if (!mult_table_.empty()) return {mult_table_[a.index * elements_.size() + b.index]};
  const int n = rank();
  const Weight img = mat_apply(elements_[a.index].weight_matrix,
                               mat_apply(elements_[b.index].weight_matrix, datum_->rho(), n), n);
  return *lookup(img);
}

FiniteWeylElement FiniteWeylGroup::from_word(const ReducedWord& word) const {
  FiniteWeylElement w = identity();
  for (int i : word) w = multiply(w, simple(i));
  return w;
}

Weight FiniteWeylGroup::act(FiniteWeylElement w, const Weight& lambda) const {
  if (lambda.rank() != rank()) throw RankMismatch("weight rank differs from Weyl group rank");
  if (w.index == 0) return lambda;
  return mat_apply(elements_[w.index].weight_matrix, lambda, rank());
}

Coroot FiniteWeylGroup::act(FiniteWeylElement w, const Coroot& mu) const {
  if (mu.rank() != rank()) throw RankMismatch("coroot rank differs from Weyl group rank");
  if (w.index == 0) return mu;
  return mat_apply(elements_[w.index].coroot_matrix, mu, rank());
}

std::pair<int, int> FiniteWeylGroup::act_on_root(FiniteWeylElement w, const Weight& beta) const {
  int k = datum_->index_of_positive_root(beta);
  int sign = 1;
  if (k < 0) {
    k = datum_->index_of_positive_root(-beta);
    sign = -1;
    if (k < 0) throw ValidationError("weight is not a root");
  }
  const int img = root_image(w, k);
  return img > 0 ? std::pair{img - 1, sign} : std::pair{-img - 1, -sign};
}

// ---------------------------------------------------------------------------

AffineWeylGroup::AffineWeylGroup(const CartanDatum& datum)
    : finite_(std::make_shared<const FiniteWeylGroup>(datum)) {}

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const FiniteWeylGroup> finite) : finite_(std::move(finite)) {}

AffineWeylElement AffineWeylGroup::identity() const { return {finite_->identity(), datum().zero_coroot()}; }

AffineWeylElement AffineWeylGroup::simple(int i) const {
  if (i < 0 || i > rank()) throw IndexOutOfRange("affine simple reflection index out of range");
  if (i == 0) return {finite_->theta_reflection(), -datum().highest_coroot};
  return {finite_->simple(i), datum().zero_coroot()};
}

AffineWeylElement AffineWeylGroup::translation(const Coroot& lambda) const {
  if (lambda.rank() != rank()) throw RankMismatch("translation rank differs from group rank");
  return {finite_->identity(), lambda};
}

AffineWeylElement AffineWeylGroup::from_finite(FiniteWeylElement w) const { return {w, datum().zero_coroot()}; }

AffineWeylElement AffineWeylGroup::multiply(const AffineWeylElement& x, const AffineWeylElement& y) const {
  x.translation.same_rank(y.translation);
  const FiniteWeylElement vinv = finite_->inverse(y.finite);
  return {finite_->multiply(x.finite, y.finite), finite_->act(vinv, x.translation) + y.translation};
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& x) const {
  return {finite_->inverse(x.finite), -finite_->act(x.finite, x.translation)};
}

AffineWeylElement AffineWeylGroup::apply_simple(int i, const AffineWeylElement& x, Side side) const {
  const AffineWeylElement s = simple(i);
  return side == Side::Left ? multiply(s, x) : multiply(x, s);
}

AffineWeylElement AffineWeylGroup::evaluate(const ReducedWord& word) const {
  AffineWeylElement x = identity();
  for (int i : word) x = multiply(x, simple(i));
  return x;
}

int AffineWeylGroup::length(const AffineWeylElement& x) const {
  if (const auto it = length_cache_.find(x); it != length_cache_.end()) return it->second;
  // l(w t_l) = sum over beta > 0 of |<l, beta> + [w beta < 0]|.
  const auto& roots = datum().positive_roots;
  int total = 0;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const int v = pair(x.translation, roots[k]) + (finite_->inverts(x.finite, static_cast<int>(k)) ? 1 : 0);
    total += v < 0 ? -v : v;
  }
  length_cache_.emplace(x, total);
  return total;
}

bool AffineWeylGroup::is_descent(int i, const AffineWeylElement& x, Side side) const {
  return length(apply_simple(i, x, side)) < length(x);
}

ReducedWord AffineWeylGroup::reduced_word(const AffineWeylElement& x) const {
  ReducedWord word;
  AffineWeylElement cur = x;
  int len = length(cur);
  while (len > 0) {
    bool found = false;
    for (int i = 0; i <= rank(); ++i) {
      AffineWeylElement next = apply_simple(i, cur, Side::Left);
      if (length(next) < len) {
        word.push_back(i);
        cur = next;
        --len;
        found = true;
        break;
      }
    }
    if (!found) throw ValidationError("no descent found for element of positive length");
  }
  return word;
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElement& u, const AffineWeylElement& v) const {
  if (u == v) return true;
  const int lu = length(u), lv = length(v);
  if (lu >= lv) return false;
  if (lu == 0) return true;
  const auto key = std::pair{u, v};
  if (const auto it = bruhat_cache_.find(key); it != bruhat_cache_.end()) return it->second;
  // Lifting property with a left descent s of v.
  bool result = false;
  for (int i = 0; i <= rank(); ++i) {
    const AffineWeylElement sv = apply_simple(i, v, Side::Left);
    if (length(sv) >= lv) continue;
    const AffineWeylElement su = apply_simple(i, u, Side::Left);
    result = length(su) < lu ? bruhat_leq(su, sv) : bruhat_leq(u, sv);
    break;
  }
  bruhat_cache_.emplace(key, result);
  return result;
}

bool AffineWeylGroup::is_grassmannian(const AffineWeylElement& x) const {
  for (int i = 1; i <= rank(); ++i)
    if (is_descent(i, x, Side::Right)) return false;
  return true;
}

AffineWeylElement AffineWeylGroup::coset_min(const AffineWeylElement& x) const {
  if (const auto it = coset_min_cache_.find(x); it != coset_min_cache_.end()) return it->second;
  AffineWeylElement cur = x;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i <= rank(); ++i) {
      AffineWeylElement next = apply_simple(i, cur, Side::Right);
      if (length(next) < length(cur)) {
        cur = next;
        moved = true;
        break;
      }
    }
  }
  coset_min_cache_.emplace(x, cur);
  return cur;
}

Coroot AffineWeylGroup::coset_translation(const AffineWeylElement& x) const {
  return finite_->act(x.finite, x.translation);
}

const std::vector<AffineWeylElement>& AffineWeylGroup::lower_interval(const AffineWeylElement& x) const {
  if (const auto it = interval_cache_.find(x); it != interval_cache_.end()) return it->second;
  std::vector<AffineWeylElement> result;
  if (length(x) == 0) {
    result.push_back(x);
  } else {
    // x = x' s_i with l(x') < l(x): subwords of a reduced word of x.
    int last = -1;
    for (int i = 0; i <= rank(); ++i)
      if (is_descent(i, x, Side::Right)) {
        last = i;
        break;
      }
    const AffineWeylElement prefix = apply_simple(last, x, Side::Right);
    const std::vector<AffineWeylElement> below = lower_interval(prefix);  // copy: cache may rehash
    std::set<AffineWeylElement> all(below.begin(), below.end());
    for (const auto& v : below) all.insert(apply_simple(last, v, Side::Right));
    result.assign(all.begin(), all.end());
  }
  std::stable_sort(result.begin(), result.end(), [this](const auto& a, const auto& b) {
    const int la = length(a), lb = length(b);
    return la != lb ? la < lb : a < b;
  });
  return interval_cache_.emplace(x, std::move(result)).first->second;
}

std::vector<Weight> AffineWeylGroup::reflection_roots(const ReducedWord& word) const {
  std::vector<Weight> gammas;
  gammas.reserve(word.size());
  FiniteWeylElement prefix = finite_->identity();
  for (int i : word) {
    gammas.push_back(finite_->act(prefix, level_zero_root(datum(), i)));
    prefix = finite_->multiply(prefix, simple(i).finite);
  }
  return gammas;
}

AffineWeylElement AffineWeylGroup::demazure_product(const ReducedWord& word, std::uint64_t mask) const {
  AffineWeylElement v = identity();
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (!(mask >> k & 1u)) continue;
    AffineWeylElement next = apply_simple(word[k], v, Side::Right);
    if (length(next) > length(v)) v = next;
  }
  return v;
}

AffineWeylElement AffineWeylGroup::subword_product(const ReducedWord& word, std::uint64_t mask) const {
  AffineWeylElement v = identity();
  for (std::size_t k = 0; k < word.size(); ++k)
    if (mask >> k & 1u) v = apply_simple(word[k], v, Side::Right);
  return v;
}

std::vector<std::vector<AffineWeylElement>> AffineWeylGroup::enumerate_by_length(int max_length) const {
  std::vector<std::vector<AffineWeylElement>> layers;
  layers.push_back({identity()});
  for (int len = 1; len <= max_length; ++len) {
    std::set<AffineWeylElement> next;
    for (const auto& x : layers.back())
      for (int i = 0; i <= rank(); ++i) {
        AffineWeylElement y = apply_simple(i, x, Side::Left);
        if (length(y) == len) next.insert(y);
      }
    layers.emplace_back(next.begin(), next.end());
  }
  return layers;
}

std::vector<AffineWeylElement> AffineWeylGroup::grassmannian_elements(int max_length) const {
  std::vector<AffineWeylElement> out;
  for (const auto& layer : enumerate_by_length(max_length))
    for (const auto& x : layer)
      if (is_grassmannian(x)) out.push_back(x);
  return out;
}

void AffineWeylGroup::clear_caches() const {
  length_cache_.clear();
  bruhat_cache_.clear();
  coset_min_cache_.clear();
  interval_cache_.clear();
}

}  // namespace kpeterson
