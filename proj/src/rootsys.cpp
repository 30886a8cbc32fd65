#include "kpeterson/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>

namespace kpeterson {

int pair(const Coroot& coroot, const Weight& weight) {
  if (coroot.rank() != weight.rank()) throw RankMismatch("pairing coroot and weight of different rank");
  int s = 0;
  for (int i = 0; i < coroot.rank(); ++i) s += coroot[i] * weight[i];
  return s;
}

namespace {

// Exact determinant by fraction-free Gaussian elimination (Bareiss).
long long bareiss_det(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

void validate_cartan(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0 || n > kMaxRank) throw InvalidCartanMatrix("Cartan matrix rank must be in [1, " + std::to_string(kMaxRank) + "]");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw InvalidCartanMatrix("Cartan matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && a[i][j] != 2) throw InvalidCartanMatrix("Cartan matrix diagonal entry is not 2");
      if (i != j && a[i][j] > 0) throw InvalidCartanMatrix("Cartan matrix off-diagonal entry is positive");
      if (i != j && (a[i][j] == 0) != (a[j][i] == 0)) throw InvalidCartanMatrix("Cartan matrix zero pattern is not symmetric");
    }
  // Finite type iff every principal minor is positive.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    std::vector<std::vector<long long>> sub(idx.size(), std::vector<long long>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub[r][c] = a[idx[r]][idx[c]];
    if (bareiss_det(sub) <= 0) throw InvalidCartanMatrix("Cartan matrix is not of finite type");
  }
}

std::vector<std::vector<int>> type_a_cartan(int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i > 0) a[i][i - 1] = -1;
    if (i + 1 < n) a[i][i + 1] = -1;
  }
  return a;
}

}  // namespace

CartanDatum build_root_system(const std::string& type_label) {
  if (type_label.size() >= 2 && (type_label[0] == 'A' || type_label[0] == 'a') &&
      std::all_of(type_label.begin() + 1, type_label.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const int n = std::stoi(type_label.substr(1));
    if (n >= 1 && n <= kMaxRank) return build_root_system(type_a_cartan(n), "A" + std::to_string(n));
  }
  throw UnsupportedType("unsupported root system type '" + type_label + "'");
}

CartanDatum build_root_system(const std::vector<std::vector<int>>& cartan, std::string label) {
  validate_cartan(cartan);
  CartanDatum d;
  d.type_label = std::move(label);
  d.rank = static_cast<int>(cartan.size());
  d.cartan = cartan;
  const int n = d.rank;

  for (int j = 0; j < n; ++j) {
    Weight alpha(n);
    for (int i = 0; i < n; ++i) alpha[i] = cartan[i][j];
    d.simple_roots.push_back(alpha);
    Coroot co(n);
    co[j] = 1;
    d.simple_coroots.push_back(co);
  }

  // Breadth-first closure of the simple roots under simple reflections,
  // tracked simultaneously in simple-root coordinates and on coroots.
  struct Node {
    std::vector<int> height;
    Weight root;
    Coroot coroot;
  };
  std::map<std::vector<int>, std::size_t> seen;
  std::vector<Node> nodes;
  std::deque<std::size_t> queue;
  for (int j = 0; j < n; ++j) {
    std::vector<int> h(n, 0);
    h[j] = 1;
    seen.emplace(h, nodes.size());
    queue.push_back(nodes.size());
    nodes.push_back({h, d.simple_roots[j], d.simple_coroots[j]});
  }
  constexpr std::size_t kRootLimit = 4096;
  while (!queue.empty()) {
    const Node cur = nodes[queue.front()];
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      const int k = cur.root[i];  // <alpha_i^vee, beta>
      if (k == 0) continue;
      std::vector<int> h = cur.height;
      h[i] -= k;
      if (std::any_of(h.begin(), h.end(), [](int c) { return c < 0; })) continue;
      if (seen.count(h)) continue;
      if (nodes.size() >= kRootLimit) throw InvalidCartanMatrix("positive root enumeration did not terminate");
      Node next{h, simple_reflection_on_weight(d, i + 1, cur.root), Coroot(n)};
      // s_i on coroots uses the transpose pairing.
      next.coroot = cur.coroot;
      int c = 0;
      for (int j = 0; j < n; ++j) c += cur.coroot[j] * cartan[j][i];
      next.coroot[i] -= c;
      seen.emplace(h, nodes.size());
      queue.push_back(nodes.size());
      nodes.push_back(std::move(next));
    }
  }
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    const int ha = std::accumulate(a.height.begin(), a.height.end(), 0);
    const int hb = std::accumulate(b.height.begin(), b.height.end(), 0);
    if (ha != hb) return ha < hb;
    return a.height > b.height;
  });
  for (const auto& node : nodes) {
    d.positive_roots.push_back(node.root);
    d.positive_coroots.push_back(node.coroot);
    d.positive_root_heights.push_back(node.height);
  }
  d.highest_root = d.positive_roots.back();
  d.highest_coroot = d.positive_coroots.back();
  return d;
}

int CartanDatum::index_of_positive_root(const Weight& beta) const {
  for (std::size_t k = 0; k < positive_roots.size(); ++k)
    if (positive_roots[k] == beta) return static_cast<int>(k);
  return -1;
}

int CartanDatum::root_sign(const Weight& beta) const {
  if (index_of_positive_root(beta) >= 0) return 1;
  if (index_of_positive_root(-beta) >= 0) return -1;
  return 0;
}

Weight CartanDatum::fundamental_weight(int i) const {
  if (i < 1 || i > rank) throw IndexOutOfRange("fundamental weight index out of range");
  Weight w(rank);
  w[i - 1] = 1;
  return w;
}

Weight CartanDatum::rho() const {
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w[i] = 1;
  return w;
}

std::optional<std::vector<int>> CartanDatum::root_coordinates(const Weight& w) const {
  // Solve cartan * x = w over the rationals (Cramer via Bareiss), then test integrality.
  const int n = rank;
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = cartan[i][j];
  const long long det = bareiss_det(a);
  std::vector<int> x(n);
  for (int j = 0; j < n; ++j) {
    auto aj = a;
    for (int i = 0; i < n; ++i) aj[i][j] = w[i];
    const long long num = bareiss_det(aj);
    if (num % det != 0) return std::nullopt;
    x[j] = static_cast<int>(num / det);
  }
  return x;
}

Weight CartanDatum::weight_from_root_coordinates(const std::vector<int>& coords) const {
  if (static_cast<int>(coords.size()) != rank) throw RankMismatch("root coordinate count differs from rank");
  Weight w(rank);
  for (int j = 0; j < rank; ++j)
    if (coords[j] != 0) w += coords[j] * simple_roots[j];
  return w;
}

int CartanDatum::coroot_pair_simple_root(const Coroot& mu, int i) const {
  int s = 0;
  for (int j = 0; j < rank; ++j) s += mu[j] * cartan[j][i - 1];
  return s;
}

Weight simple_reflection_on_weight(const CartanDatum& d, int i, const Weight& lambda) {
  if (i < 1 || i > d.rank) throw IndexOutOfRange("simple reflection index out of range");
  if (lambda.rank() != d.rank) throw RankMismatch("weight rank differs from root system rank");
  const int k = lambda[i - 1];
  return k == 0 ? lambda : lambda - k * d.simple_roots[i - 1];
}

Coroot simple_reflection_on_coroot(const CartanDatum& d, int i, const Coroot& mu) {
  if (i < 1 || i > d.rank) throw IndexOutOfRange("simple reflection index out of range");
  if (mu.rank() != d.rank) throw RankMismatch("coroot rank differs from root system rank");
  Coroot r = mu;
  r[i - 1] -= d.coroot_pair_simple_root(mu, i);
  return r;
}

Weight level_zero_root(const CartanDatum& d, int i) {
  if (i < 0 || i > d.rank) throw IndexOutOfRange("affine simple root index out of range");
  return i == 0 ? -d.highest_root : d.simple_roots[i - 1];
}

}  // namespace kpeterson
