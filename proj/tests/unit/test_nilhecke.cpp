#include "helpers.hpp"

using namespace kptest;

namespace {

std::vector<AffineWeylElement> up_to(const AffineWeylGroup& g, int len) {
  std::vector<AffineWeylElement> out;
  for (const auto& level : g.enumerate_by_length(len)) out.insert(out.end(), level.begin(), level.end());
  return out;
}

KElement mul(const NilHecke& nh, std::initializer_list<KElement> xs) {
  KElement acc = nh.group_element(nh.group().identity());
  for (const auto& x : xs) acc = nh.k_mul(acc, x);
  return acc;
}

ReducedWord right_greedy_word(const AffineWeylGroup& g, AffineWeylElement x) {
  ReducedWord w;
  while (g.length(x) > 0)
    for (int i = g.rank(); i >= 0; --i)
      if (g.is_descent(i, x, Side::Right)) {
        w.insert(w.begin(), i);
        x = g.apply_simple(i, x, Side::Right);
        break;
      }
  return w;
}

}  // namespace

TEST_SUITE("nilhecke") {
  TEST_CASE("twisted product") {
    const auto d = build_root_system("A1");
    NilHecke nh(d);
    const auto s1 = nh.group().simple(1);
    const KElement lhs = nh.k_mul(nh.group_element(s1), nh.scalar(L(d, "e^{a1}")));
    KElement rhs(Basis::Localization);
    rhs.add(s1, L(d, "e^{-a1}"));
    CHECK(lhs == rhs);
    const auto& g = nh.group();
    const auto t1 = g.translation(Coroot::from({2})), t2 = g.translation(Coroot::from({-5}));
    CHECK(nh.k_mul(nh.group_element(t1), nh.group_element(t2)) == nh.group_element(g.translation(Coroot::from({-3}))));
    CHECK_THROWS_AS(nh.k_mul(KElement(Basis::T), nh.scalar(L(d, "1"))), BasisMismatch);
  }

  TEST_CASE("generators") {
    const auto d = build_root_system("A1");
    NilHecke nh(d);
    const Weight a = d.simple_roots[0];
    const KElement y0 = nh.y_element(0);
    CHECK(y0.coefficient(nh.group().identity()) == RationalFunction::inverse_one_minus(d, a));
    CHECK(y0.coefficient(nh.group().simple(0)) == RationalFunction::inverse_one_minus(d, -a));
    CHECK(nh.t_element(1).coefficient(nh.group().identity()) == -RationalFunction::inverse_one_minus(d, a));
    CHECK_THROWS_AS(nh.t_element(2), IndexOutOfRange);
  }

  TEST_CASE("quadratic and braid relations") {
    for (const char* type : {"A1", "A2", "A3"}) {
      const auto d = build_root_system(type);
      NilHecke nh(d);
      const int r = d.rank;
      for (int i = 0; i <= r; ++i) {
        const KElement t = nh.t_element(i), y = nh.y_element(i);
        CHECK(nh.k_mul(t, t) == -RationalFunction::constant(r, 1) * t);
        CHECK(nh.k_mul(y, y) == y);
        CHECK(nh.y_element(i) - nh.t_element(i) == nh.group_element(nh.group().identity()));
      }
      if (r < 2) continue;
      // affine A_r, r >= 2: nodes i, j adjacent iff j = i +- 1 mod r+1
      for (int i = 0; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
          const bool adjacent = (j - i == 1) || (i == 0 && j == r);
          for (bool use_y : {false, true}) {
            const KElement a = use_y ? nh.y_element(i) : nh.t_element(i);
            const KElement b = use_y ? nh.y_element(j) : nh.t_element(j);
            if (adjacent) CHECK(mul(nh, {a, b, a}) == mul(nh, {b, a, b}));
            else CHECK(mul(nh, {a, b}) == mul(nh, {b, a}));
          }
        }
    }
    // in affine A1 the two generators do not braid
    NilHecke nh(build_root_system("A1"));
    CHECK_FALSE(mul(nh, {nh.y_element(0), nh.y_element(1), nh.y_element(0)}) ==
                mul(nh, {nh.y_element(1), nh.y_element(0), nh.y_element(1)}));
  }

  TEST_CASE("b coefficients: examples") {
    const auto d = build_root_system("A1");
    NilHecke nh(d);
    const auto& g = nh.group();
    const Weight a = d.simple_roots[0];
    const auto& row = nh.b_row(g.simple(0));
    CHECK(row.size() == 2);
    CHECK(row.at(g.identity()) == RationalFunction::inverse_one_minus(d, a));
    CHECK(row.at(g.simple(0)) == RationalFunction::inverse_one_minus(d, -a));
    const auto cb = nh.coset_b(g.simple(0));
    CHECK(cb.at(Coroot::from({1})) == RationalFunction::inverse_one_minus(d, -a));
    CHECK(nh.b_row(g.identity()) == CoefficientRow<RationalFunction>{{g.identity(), RationalFunction::constant(1, 1)}});
  }

  TEST_CASE("e coefficients: examples") {
    const auto d = build_root_system("A1");
    NilHecke nh(d);
    const auto& g = nh.group();
    const auto& row = nh.e_row(g.simple(0));
    CHECK(row.at(g.identity()) == L(d, "e^{-a1}"));
    CHECK(row.at(g.simple(0)) == L(d, "1 - e^{-a1}"));
    CHECK(nh.e_row(g.identity()) == CoefficientRow<Laurent>{{g.identity(), Laurent::constant(1, 1)}});
    const auto ce = nh.coset_e(g.translation(Coroot::from({2})));
    CHECK(ce.at(g.evaluate({1, 0})) == L(d, "e^{-a1}(1 - e^{-a1})(1 - e^{-a1})"));
  }

  TEST_CASE("subword sums agree with the default routes") {
    for (const auto& [type, len] : {std::pair{"A1", 6}, std::pair{"A2", 5}}) {
      NilHecke nh(build_root_system(type));
      const auto& g = nh.group();
      for (const auto& x : up_to(g, len)) {
        const auto w1 = g.reduced_word(x), w2 = right_greedy_word(g, x);
        CHECK(nh.b_row_subword(w1) == nh.b_row(x));
        CHECK(nh.b_row_subword(w2) == nh.b_row(x));
        CHECK(nh.e_row_subword(w1) == nh.e_row(x));
        CHECK(nh.e_row_subword(w2) == nh.e_row(x));
        for (const auto& [v, c] : nh.b_row(x)) CHECK(g.bruhat_leq(v, x));
        for (const auto& [v, c] : nh.e_row(x)) CHECK(g.bruhat_leq(v, x));
      }
    }
  }

  TEST_CASE("b and e are inverse matrices") {
    for (const auto& [type, len] : {std::pair{"A1", 6}, std::pair{"A2", 5}}) {
      const auto d = build_root_system(type);
      NilHecke nh(d);
      const auto& g = nh.group();
      for (const auto& x : up_to(g, len)) {
        std::map<AffineWeylElement, RationalFunction> prod;
        for (const auto& [v, b] : nh.b_row(x))
          for (const auto& [z, e] : nh.e_row(v)) prod[z] += b * RationalFunction(e);
        for (const auto& z : g.lower_interval(x)) {
          const RationalFunction want = z == x ? RationalFunction::constant(d.rank, 1) : RationalFunction();
          CHECK(prod[z] == want);
        }
      }
    }
  }

  TEST_CASE("the group element x expands to y_x rows") {
    NilHecke nh(build_root_system("A2"));
    for (const auto& x : up_to(nh.group(), 3)) {
      const KElement y = nh.convert(nh.group_element(x), Basis::Y);
      CHECK(nh.convert(y, Basis::Localization) == nh.group_element(x));
    }
  }

  TEST_CASE("basis conversions") {
    const auto d = build_root_system("A1");
    NilHecke nh(d);
    const auto& g = nh.group();
    const RationalFunction one = RationalFunction::constant(1, 1);
    KElement ys0(Basis::Y);
    ys0.add(g.simple(0), one);
    KElement want(Basis::T);
    want.add(g.identity(), one);
    want.add(g.simple(0), one);
    CHECK(nh.convert(ys0, Basis::T) == want);

    const auto g2 = g.evaluate({1, 0});
    KElement tg2(Basis::T);
    tg2.add(g2, one);
    KElement ym(Basis::Y);
    ym.add(g2, one);
    ym.add(g.simple(0), -one);
    ym.add(g.simple(1), -one);
    ym.add(g.identity(), one);
    CHECK(nh.convert(tg2, Basis::Y) == ym);

    std::mt19937 rng(2);
    const auto xs = up_to(g, 4);
    for (int trial = 0; trial < 20; ++trial) {
      KElement a(Basis::T);
      for (const auto& x : xs)
        if (rng() % 3 == 0) a.add(x, random_rational(d, rng));
      for (Basis via : {Basis::Localization, Basis::Y}) CHECK(nh.convert(nh.convert(a, via), Basis::T) == a);
      CHECK(nh.convert(nh.convert(nh.convert(a, Basis::Y), Basis::Localization), Basis::T) == a);
    }
  }

  TEST_CASE("y_w and T_w products") {
    NilHecke nh(build_root_system("A2"));
    const auto& g = nh.group();
    for (const auto& x : up_to(g, 4)) {
      const auto w = g.reduced_word(x);
      KElement yp = nh.group_element(g.identity()), tp = yp;
      for (int i : w) {
        yp = nh.k_mul(yp, nh.y_element(i));
        tp = nh.k_mul(tp, nh.t_element(i));
      }
      CHECK(yp == KElement(Basis::Localization, nh.b_row(x)));
      CHECK(tp == KElement(Basis::Localization, nh.t_row(x)));
    }
  }

  TEST_CASE("kappa kills exactly the non-Grassmannian T_u") {
    for (const auto& [type, len] : {std::pair{"A1", 6}, std::pair{"A2", 4}}) {
      NilHecke nh(build_root_system(type));
      const auto& g = nh.group();
      for (const auto& u : up_to(g, len)) {
        const KElement k = nh.kappa(KElement(Basis::Localization, nh.t_row(u)));
        CHECK(k.is_zero() == !g.is_grassmannian(u));
        for (const auto& [t, c] : k.terms()) CHECK(t.finite == g.finite_group().identity());
      }
      const auto t = g.translation(Coroot::from(std::vector<int>(g.rank(), -1)));
      CHECK(nh.kappa(nh.group_element(t)) == nh.group_element(t));
    }
  }

  TEST_CASE("k and l classes") {
    for (const auto& [type, len] : {std::pair{"A1", 6}, std::pair{"A2", 4}}) {
      const auto d = build_root_system(type);
      NilHecke nh(d);
      const auto& g = nh.group();
      for (const auto& w : g.grassmannian_elements(len)) {
        const KElement k = nh.k_class(w);  // shape checks throw on failure
        CHECK(k.coefficient(w) == RationalFunction::constant(d.rank, 1));
        KElement sum(Basis::T);
        for (const auto& v : g.lower_interval(w))
          if (g.is_grassmannian(v)) sum += nh.k_class(v);
        CHECK(nh.l_class(w) == sum);
        CHECK(nh.kappa(KElement(Basis::Localization, nh.t_row(w))) == nh.convert(k, Basis::Localization));
      }
      CHECK_THROWS_AS(nh.k_class(g.simple(1)), ValidationError);
    }
  }

  TEST_CASE("k classes commute with R(T)") {
    for (const char* type : {"A1", "A2"}) {
      const auto d = build_root_system(type);
      NilHecke nh(d);
      for (const auto& w : nh.group().grassmannian_elements(4)) {
        const KElement k = nh.convert(nh.k_class(w), Basis::Localization);
        for (const auto& beta : d.simple_roots) {
          const KElement e = nh.scalar(Laurent::monomial(-beta));
          CHECK(nh.k_mul(k, e) == nh.k_mul(e, k));
        }
      }
    }
  }

  TEST_CASE("scalar commutation rule") {
    const auto d = build_root_system("A2");
    NilHecke nh(d);
    const auto& fg = nh.finite_group();
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial)
      for (int i = 0; i <= 2; ++i) {
        const RationalFunction q = random_rational(d, rng);
        const auto si = nh.group().simple(i);
        const RationalFunction sq = weyl_act(fg, si, q);
        const KElement lhs = nh.k_mul(nh.scalar(q), nh.y_element(i));
        const KElement rhs = nh.k_mul(nh.y_element(i), nh.scalar(sq)) +
                             nh.scalar((q - sq) * RationalFunction::inverse_one_minus(d, -level_zero_root(d, i)));
        CHECK(lhs == rhs);
      }
  }
}
