#include "helpers.hpp"

#include "kpeterson/verify.hpp"

using namespace kptest;

TEST_SUITE("format") {
  TEST_CASE("element strings") {
    const AffineWeylGroup g1(build_root_system("A1"));
    CHECK(E(g1, "s1 t[-1]") == g1.simple(0));
    CHECK(E(g1, "s1*t[-1]") == g1.simple(0));
    CHECK(E(g1, "id") == g1.identity());
    CHECK(E(g1, "t[0]") == g1.identity());
    CHECK(E(g1, "s0*s1") == g1.translation(Coroot::from({1})));
    CHECK(format_element(g1, g1.simple(0)) == "s1 t[-1]");
    CHECK(format_element(g1, g1.identity()) == "id");
    CHECK(format_element(g1, g1.translation(Coroot::from({-1}))) == "t[-1]");

    const AffineWeylGroup g2(build_root_system("A2"));
    const auto x = E(g2, "s1*s2 t[-1,-1]");
    CHECK(g2.is_grassmannian(x));
    CHECK(format_element(g2, x) == "s1*s2 t[-1,-1]");
  }

  TEST_CASE("element round trip") {
    const AffineWeylGroup g(build_root_system("A2"));
    for (const auto& level : g.enumerate_by_length(5))
      for (const auto& x : level) {
        const std::string s = format_element(g, x);
        CHECK(E(g, s.c_str()) == x);
        CHECK(format_element(g, E(g, s.c_str())) == s);
      }
  }

  TEST_CASE("element parse errors") {
    const AffineWeylGroup g(build_root_system("A2"));
    CHECK_THROWS_AS(E(g, "s3"), ValidationError);
    CHECK_THROWS_AS(E(g, "t[1]"), ValidationError);
    CHECK_THROWS_AS(E(g, ""), ParseError);
    CHECK_THROWS_AS(E(g, "s1**s2"), ParseError);
    CHECK_THROWS_AS(E(g, "q1"), ParseError);
    CHECK_THROWS_AS(E(g, "s1 t[-1,-1"), ParseError);
    try {
      E(g, "s1*x");
      FAIL("no throw");
    } catch (const ParseError& e) {
      CHECK(e.position() == 3);
    }
  }

  TEST_CASE("ring value strings") {
    const auto d = build_root_system("A2");
    CHECK(L(d, "e^{-a1}") == Laurent::monomial(-d.simple_roots[0]));
    CHECK(L(d, "e^{w1}") == Laurent::monomial(Weight::from({1, 0})));
    CHECK(L(d, "(1 - e^{-a1})(1 + e^{-a1})") == L(d, "1 - e^{-2a1}"));
    CHECK(L(d, "e^{-a1-a2}") == L(d, "e^{-a1} e^{-a2}"));
    CHECK(L(d, "2 - 2") == Laurent());
    CHECK_THROWS_AS(L(d, "e^{a3}"), ParseError);
    CHECK_THROWS_AS(L(d, "(1 - e^{a1}"), ParseError);
    CHECK(format_laurent(L(d, "1 - e^{-a1}"), d, ExponentMode::Roots) == "1 - e^{-α1}");

    std::mt19937 rng(5);
    for (int k = 0; k < 200; ++k) {
      const Laurent f = random_laurent(d, rng, 6);
      for (auto mode : {ExponentMode::Roots, ExponentMode::Weights})
        CHECK(L(d, format_laurent(f, d, mode).c_str()) == f);
      CHECK(laurent_from_json(laurent_to_json(f), d.rank) == f);
    }
  }

  TEST_CASE("json outputs carry a schema version") {
    NilHecke nh(build_root_system("A1"));
    const auto x = E(nh.group(), "s1 t[-1]");
    const auto t = pontryagin_constants(nh, x, x);
    const auto j = table_to_json(nh.group(), t);
    CHECK(j.at("schema_version") == kSchemaVersion);
    CHECK(report_to_json(nh.group(), conjecture_check(nh, x, x, {})).at("schema_version") == kSchemaVersion);
    CHECK(verification_to_json(verify_embedded_tables(Suite::SL2)).at("schema_version") == kSchemaVersion);
  }

  TEST_CASE("diagram flip") {
    const AffineWeylGroup g(build_root_system("A2"));
    const auto d = g.datum();
    CHECK(diagram_flip(g, E(g, "s1*s2 t[-1,-2]")) == E(g, "s2*s1 t[-2,-1]"));
    CHECK(diagram_flip(L(d, "e^{-2a1-a2}")) == L(d, "e^{-a1-2a2}"));
    for (const auto& level : g.enumerate_by_length(4))
      for (const auto& x : level) CHECK(diagram_flip(g, diagram_flip(g, x)) == x);
  }
}

TEST_SUITE("verify") {
  TEST_CASE("embedded fixtures equal the data directory") {
    CHECK_THROWS_AS(embedded_fixture("sl4"), ValidationError);
    CHECK(nlohmann::json::parse(embedded_fixture("sl2")).at("type") == "A1");
    CHECK(nlohmann::json::parse(embedded_fixture("sl3")).at("type") == "A2");
  }

  TEST_CASE("sl2 suite") {
    const auto r = verify_embedded_tables(Suite::SL2);
    CHECK(r.all_pass());
    for (const auto& rec : r.records) CHECK(rec.errata.empty());
  }

  TEST_CASE("sl3 suite: only the documented erratum differs from the table") {
    const auto r = verify_embedded_tables(Suite::SL3);
    CHECK(r.all_pass());
    std::set<std::string> with_errata;
    for (const auto& rec : r.records)
      if (!rec.errata.empty()) with_errata.insert(rec.id);
    CHECK(with_errata == std::set<std::string>{"sl3-9", "sl3-9-swap"});
  }

  TEST_CASE("a corrupted fixture fails") {
    auto f = nlohmann::json::parse(embedded_fixture("sl2"));
    f["products"][0]["entries"][0]["value"] = "1";
    const auto r = verify_fixture(f);
    CHECK_FALSE(r.all_pass());
    CHECK(r.failures() == 1);
  }

  TEST_CASE("result does not depend on the thread count") {
    const auto one = verification_to_json(verify_embedded_tables(Suite::All, 1)).dump();
    const auto four = verification_to_json(verify_embedded_tables(Suite::All, 4)).dump();
    CHECK(one == four);
  }

  TEST_CASE("suite names") {
    CHECK(parse_suite("all") == Suite::All);
    CHECK_THROWS_AS(parse_suite("sl5"), ValidationError);
  }
}
