#include "helpers.hpp"
#include "qmring/json_io.hpp"
#include "qmring/ops.hpp"

#include <doctest.h>

using namespace qtest;
using qmr::Json;

TEST_CASE("group round trips") {
    for (const auto& ctx : sample_contexts()) {
        Json j = qmr::group_to_json(*ctx.group());
        GroupDescription back = qmr::group_from_json(j);
        CHECK(back == *ctx.group());
        CHECK(qmr::group_to_json(back) == j);
    }
}

TEST_CASE("ring element encoding") {
    GroupPtr G = cyclic(2, -1);
    SUBCASE("input in any order, canonical output") {
        Json j = Json::array({Json::array({2, 1}), Json::array({3, 0}),
                              Json::array({-2, 1})});
        RingElement x = qmr::ring_from_json(j, G);
        CHECK(x == R(G, 3)); // the t terms cancel
        Json out = qmr::ring_to_json(x);
        REQUIRE(out.size() == 1);
        CHECK(out[0][0] == 3);
        CHECK(out[0][1] == 0);
    }
    SUBCASE("coefficients beyond 64 bits become decimal strings") {
        Int big = Int("123456789012345678901234567890");
        RingElement x = RingElement::integer(big, G);
        Json j = qmr::ring_to_json(x);
        CHECK(j[0][0].is_string());
        RingElement back = qmr::ring_from_json(j, G);
        CHECK(back == x);
    }
    SUBCASE("malformed coefficients are parse errors") {
        CHECK_THROWS_AS(qmr::ring_from_json(Json::array({Json::array({1.5, 0})}), G),
                        ParseError);
        CHECK_THROWS_AS(qmr::ring_from_json(Json::array({Json::array({"12x", 0})}), G),
                        ParseError);
        CHECK_THROWS_AS(qmr::ring_from_json(Json::parse("[[1]]"), G), ParseError);
    }
    SUBCASE("elements are validated against the group") {
        CHECK_THROWS_AS(qmr::ring_from_json(Json::array({Json::array({1, 9})}), G),
                        PreconditionError);
        GroupPtr D = dihedral_inf();
        CHECK_THROWS_AS(qmr::ring_from_json(Json::array({Json::array({1, "aab"})}), D),
                        PreconditionError);
    }
}

TEST_CASE("module and vector round trips") {
    for (const auto& ctx : sample_contexts()) {
        Sampler s(131);
        QuadraticModule M =
            orthogonal_sum(twisted_h1(ctx, s.ring_element(ctx.group(), 2, 2)),
                           QuadraticModule::hyperbolic(ctx, 1));
        Json j = qmr::module_to_json(M);
        QuadraticModule back = qmr::module_from_json(j);
        CHECK(back.rank() == M.rank());
        CHECK(back.gram() == M.gram());
        CHECK(back.mu_basis() == M.mu_basis());
        CHECK(back.certificate().has_value());
        CHECK(qmr::module_to_json(back) == j);

        ModuleVector x = s.vector(M, 3, 2);
        Json jv = qmr::vector_to_json(x);
        CHECK(qmr::vector_from_json(jv, M) == x);
    }
}

TEST_CASE("transvection and certificate round trips") {
    GroupPtr G = cyclic(2, -1);
    FormContext ctx = FormContext::minimal(G);
    Sampler s(137);
    FactorizationInput input = random_factorization_input(ctx, s, true, 1);
    Json ji = qmr::factorization_input_to_json(input);
    FactorizationInput back = qmr::factorization_input_from_json(ji);
    CHECK(qmr::factorization_input_to_json(back) == ji);

    FactorizationCertificate cert = factorize(input);
    Json jc = qmr::certificate_to_json(cert);
    FactorizationCertificate cback = qmr::certificate_from_json(jc, back);
    CHECK(verify_certificate(back, cback).pass);
    CHECK(qmr::certificate_to_json(cback) == jc);
}

TEST_CASE("validate artifact detection") {
    GroupPtr G = cyclic(2, -1);
    FormContext ctx = FormContext::minimal(G);
    SUBCASE("group") {
        Json r = qmr::ops::validate(qmr::group_to_json(*G).dump());
        CHECK(r["artifact"] == "group");
        CHECK(r["valid"] == true);
        CHECK(r["checks"] == "full");
    }
    SUBCASE("module") {
        QuadraticModule H = QuadraticModule::hyperbolic(ctx, 1);
        Json r = qmr::ops::validate(qmr::module_to_json(H).dump());
        CHECK(r["artifact"] == "module");
    }
    SUBCASE("vector is structural") {
        QuadraticModule H = QuadraticModule::hyperbolic(ctx, 1);
        Json r = qmr::ops::validate(qmr::vector_to_json(basis_vector(H, 0)).dump());
        CHECK(r["artifact"] == "vector");
        CHECK(r["checks"] == "structural");
    }
    SUBCASE("malformed JSON raises ParseError") {
        CHECK_THROWS_AS(qmr::ops::validate("{nope"), ParseError);
        CHECK_THROWS_AS(qmr::ops::validate("{\"mystery\": 1}"), ParseError);
    }
    SUBCASE("invariant violations surface as PreconditionError") {
        Json bad = qmr::group_to_json(*G);
        bad["omega"] = Json::array({1, 1, 1});
        CHECK_THROWS_AS(qmr::ops::validate(bad.dump()), PreconditionError);
    }
}

TEST_CASE("emitted artifacts re-validate") {
    GroupPtr G = dihedral_inf();
    FormContext ctx = FormContext::minimal(G);
    Sampler s(139);
    FactorizationInput input = random_factorization_input(ctx, s, false, 1, 2, 1);
    FactorizationCertificate cert = factorize(input);
    for (const std::string text :
         {qmr::module_to_json(input.ambient_module()).dump(),
          qmr::factorization_input_to_json(input).dump(),
          qmr::certificate_to_json(cert).dump(),
          qmr::vector_to_json(input.p).dump(),
          qmr::ring_to_json(input.a).dump()}) {
        Json r = qmr::ops::validate(text);
        CHECK(r["valid"] == true);
    }
}

TEST_CASE("malformed payloads fail cleanly") {
    GroupPtr G = cyclic(2, -1);
    const char* bad_modules[] = {
        R"({"rank": 1, "gram": [[[]]], "mu": [[]]})",                    // no context
        R"({"context": {"group": {"kind": "nope"}}, "rank": 0,
            "gram": [], "mu": []})",                                      // bad kind
        R"({"context": {"group": {"kind": "finite", "table": [[0]],
            "omega": [1]}}, "rank": 2, "gram": [[[]]], "mu": [[], []]})", // shape
        R"({"context": {"group": {"kind": "finite", "table": [[0]],
            "omega": [1]}}, "rank": 1, "gram": [[[]]], "mu": [[]],
            "certificate": {"inverse_gram": [[]]}})",                     // cert shape
        "[[1]]",
        "42",
    };
    for (const char* text : bad_modules)
        CHECK_THROWS_AS(qmr::module_from_json(qmr::parse_text(text)), qmr::Error);

    const char* bad_rings[] = {
        R"([["x", 0]])", R"([[1, true]])", R"([[1.25, 0]])", R"([[1]])", R"({"a": 1})",
    };
    for (const char* text : bad_rings)
        CHECK_THROWS_AS(qmr::ring_from_json(qmr::parse_text(text), G), qmr::Error);

    CHECK_THROWS_AS(qmr::parse_text("{truncated"), ParseError);
    CHECK_THROWS_AS(qmr::int_from_json(qmr::Json::parse("\"--3\"")), ParseError);
    CHECK(qmr::int_from_json(qmr::Json::parse("\"+7\"")) == Int(7));
    CHECK(qmr::int_from_json(qmr::Json::parse("\"-7\"")) == Int(-7));
}

TEST_CASE("generator words round trip and re-apply") {
    FormContext ctx = FormContext::minimal(trivial_group());
    Json problem;
    problem["context"] = qmr::context_to_json(ctx);
    problem["v"] = nullptr;
    problem["p_rank"] = 2;
    problem["modulus"] = 2;
    QuadraticModule M = qmr::PairModule{ctx, std::nullopt, 2, 2}.build();
    qmr::HyperbolicPair src{basis_vector(M, 0), basis_vector(M, 2)};
    qmr::HyperbolicPair tgt{basis_vector(M, 1), basis_vector(M, 3)};
    problem["source"] = qmr::pair_to_json(src);
    problem["target"] = qmr::pair_to_json(tgt);
    auto out = qmr::ops::transport_op(problem.dump(), 8, 1 << 16);
    REQUIRE(out.ok);
    auto word = qmr::word_from_json(out.report.at("word"), M);
    auto mp = std::make_shared<QuadraticModule>(M);
    qmr::HyperbolicPair cur = src;
    for (const auto& w : word) {
        Transvection t = Transvection::unchecked(mp, w.u, w.a, w.v);
        cur.p = qmr::detail::vector_mod(t.apply(cur.p), 2);
        cur.q = qmr::detail::vector_mod(t.apply(cur.q), 2);
    }
    CHECK(cur.p == tgt.p);
    CHECK(cur.q == tgt.q);
}

TEST_CASE("ops-level reports") {
    SUBCASE("stability bound report") {
        Json g = qmr::group_to_json(*dihedral_inf());
        Json r = qmr::ops::stability_bound_op(g.dump());
        CHECK(r["d"] == 2);
        CHECK(r["summands"] == 3);
    }
    SUBCASE("hyperbolic module through ops") {
        Json cj = qmr::context_to_json(FormContext::minimal(cyclic(2, -1)));
        QuadraticModule H = qmr::ops::hyperbolic_module(cj.dump(), 1);
        CHECK(H.rank() == 2);
        CHECK(H.gram(0, 1).is_one());
    }
    SUBCASE("byte-identical determinism") {
        Json cj = qmr::context_to_json(FormContext::minimal(cyclic(2, -1)));
        QuadraticModule H1 = qmr::ops::hyperbolic_module(cj.dump(), 2);
        QuadraticModule H2 = qmr::ops::hyperbolic_module(cj.dump(), 2);
        CHECK(qmr::module_to_json(H1).dump(2) == qmr::module_to_json(H2).dump(2));
    }
}
