#include "helpers.hpp"

#include <doctest.h>

using namespace qtest;

namespace {

// Direct evaluation oracle: the target transvection re-read on the ambient
// module (its u, a, v only touch the K perp H(P+) block, so the action on
// the H(P-) block is the identity by the defining formula).
IsometryMatrix stabilized_target_matrix(const FactorizationInput& input) {
    auto ambient = std::make_shared<QuadraticModule>(input.ambient_module());
    ModuleVector p_amb = zero_vector(*ambient);
    for (std::size_t i = 0; i < input.p.coords.size(); ++i)
        p_amb.coords[i] = input.p.coords[i];
    ModuleVector v_amb = zero_vector(*ambient);
    for (std::size_t i = 0; i < input.v.coords.size(); ++i)
        v_amb.coords[i] = input.v.coords[i];
    return matrix_of(Transvection::make(ambient, p_amb, input.a, v_amb));
}

IsometryMatrix composite_of(const FactorizationInput& input,
                            const FactorizationCertificate& cert) {
    auto ambient = std::make_shared<QuadraticModule>(input.ambient_module());
    std::vector<Transvection> ts;
    for (const auto& f : cert.factors)
        ts.push_back(Transvection::unchecked(ambient, f.u,
                                             RingElement::zero(input.ctx.group()), f.v));
    return compose(ts);
}

} // namespace

TEST_CASE("worked factorization: sigma_{p+, 2t, 0} over twisted C2, K = 0") {
    GroupPtr G = cyclic(2, -1);
    FormContext ctx = FormContext::minimal(G);
    RingElement zero = RingElement::zero(G), one = RingElement::one(G);
    RingElement twot = Rg(G, 2, finite_element(1));
    ModuleVector p;
    p.coords = {one, zero}; // p = p+ on K perp H(P+) with K = 0
    ModuleVector v;         // v = 0 in K = 0
    FactorizationInput input{ctx, QuadraticModule(ctx, {}, {}),
                             QuadraticModule(ctx, {}, {}), p, twot, v};

    FactorizationCertificate cert = factorize(input);
    CHECK(cert.factors.size() == 3);
    CHECK(cert.v_blocks == 3);
    CHECK(cert.p_factors_per_block == 1);

    // v0 = p- - 2t q-, v1 = -p-, v2 = 2t q-; ambient order [p+ q+ p- q-]
    CHECK(cert.factors[0].v.coords[2] == one);
    CHECK(cert.factors[0].v.coords[3] == -twot);
    CHECK(cert.factors[1].v.coords[2] == -one);
    CHECK(cert.factors[1].v.coords[3].is_zero());
    CHECK(cert.factors[2].v.coords[2].is_zero());
    CHECK(cert.factors[2].v.coords[3] == twot);
    for (const auto& f : cert.factors) {
        CHECK(f.u.coords[0] == one); // u = p0 = p+ (c - 1 = 0)
        CHECK(f.u.coords[1].is_zero());
    }

    CHECK(verify_certificate(input, cert).pass);

    // Independent check: apply composite and the stabilized transvection to
    // all four ambient basis vectors.
    auto ambient = std::make_shared<QuadraticModule>(input.ambient_module());
    IsometryMatrix lhs = composite_of(input, cert);
    IsometryMatrix rhs = stabilized_target_matrix(input);
    for (std::size_t i = 0; i < 4; ++i) {
        ModuleVector e = basis_vector(*ambient, i);
        CHECK(lhs.act(e) == rhs.act(e));
    }
}

TEST_CASE("factorization of the identity target collapses") {
    GroupPtr G = cyclic(2, -1);
    FormContext ctx = FormContext::minimal(G);
    RingElement zero = RingElement::zero(G), one = RingElement::one(G);
    ModuleVector p;
    p.coords = {one, zero};
    ModuleVector v;
    FactorizationInput input{ctx, QuadraticModule(ctx, {}, {}),
                             QuadraticModule(ctx, {}, {}), p, zero, v};
    FactorizationCertificate cert = factorize(input);
    CHECK(verify_certificate(input, cert).pass);
    auto ambient = std::make_shared<QuadraticModule>(input.ambient_module());
    CHECK(composite_of(input, cert) == identity_isometry(*ambient));
    // the v0 and v1 factors move vectors individually
    int nontrivial = 0;
    for (const auto& f : cert.factors) {
        Transvection t = Transvection::unchecked(ambient, f.u, zero, f.v);
        if (!(matrix_of(t) == identity_isometry(*ambient))) ++nontrivial;
    }
    CHECK(nontrivial >= 2);
}

TEST_CASE("coefficient expansion c - 1 = 1 + t gives three factors per block") {
    GroupPtr G = cyclic(2, -1);
    FormContext ctx = FormContext::minimal(G);
    RingElement zero = RingElement::zero(G), one = RingElement::one(G);
    RingElement c = R(G, 2) + Rg(G, 1, finite_element(1)); // c = 2 + t
    ModuleVector p;
    p.coords = {c, zero};
    ModuleVector v;
    RingElement twot = Rg(G, 2, finite_element(1)); // [2t] = 0 = mu(0)
    FactorizationInput input{ctx, QuadraticModule(ctx, {}, {}),
                             QuadraticModule(ctx, {}, {}), p, twot, v};
    FactorizationCertificate cert = factorize(input);
    CHECK(cert.p_factors_per_block == 3); // p0, 1*p+, t*p+
    CHECK(cert.factors.size() == 9);
    // within each block: u = p0 = 1 p+, then s1 = +1, s2 = +t in group order
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(cert.factors[3 * j + 0].u.coords[0] == one);
        CHECK(cert.factors[3 * j + 1].u.coords[0] == one);
        CHECK(cert.factors[3 * j + 2].u.coords[0] == Rg(G, 1, finite_element(1)));
    }
    CHECK(verify_certificate(input, cert).pass);
    CHECK(composite_of(input, cert) == stabilized_target_matrix(input));
}

TEST_CASE("unit decomposition order: elements ascending, |m| signed copies") {
    GroupPtr G = cyclic(2, -1);
    RingElement x = R(G, -2) + Rg(G, 3, finite_element(1));
    auto units = unit_decomposition(x);
    REQUIRE(units.size() == 5);
    CHECK(units[0] == R(G, -1));
    CHECK(units[1] == R(G, -1));
    CHECK(units[2] == Rg(G, 1, finite_element(1)));
    CHECK(units[3] == Rg(G, 1, finite_element(1)));
    CHECK(units[4] == Rg(G, 1, finite_element(1)));
}

TEST_CASE("three-factor identity holds before any p-splitting") {
    for (const auto& ctx : sample_contexts()) {
        Sampler s(103);
        for (int i = 0; i < 3; ++i) {
            FactorizationInput input =
                random_factorization_input(ctx, s, s.coin(), s.int_in(0, 2));
            std::vector<Transvection> vs = v_split_factors(input);
            REQUIRE(vs.size() == 3);
            CHECK(compose(vs) == stabilized_target_matrix(input));
        }
    }
}

TEST_CASE("factorize then verify on random inputs across the families") {
    for (const auto& ctx : sample_contexts()) {
        Sampler s(107);
        for (int i = 0; i < 4; ++i) {
            FactorizationInput input =
                random_factorization_input(ctx, s, s.coin(), s.int_in(0, 2));
            FactorizationCertificate cert = factorize(input);
            // factor-count formula: 3 (1 + n), n = sum |coeff(c - 1)|
            RingElement c_minus_1 =
                input.p.coords[input.dim_k()] - RingElement::one(ctx.group());
            Int n = 0;
            for (const auto& t : c_minus_1.terms()) n += abs(t.second);
            CHECK(Int(cert.factors.size()) == 3 * (1 + n));
            CHECK(Int(cert.p_factors_per_block) == 1 + n);
            auto report = verify_certificate(input, cert);
            CHECK(report.pass);
            CHECK(composite_of(input, cert) == stabilized_target_matrix(input));
        }
    }
}

TEST_CASE("certificate mutations") {
    GroupPtr G = dihedral_inf();
    FormContext ctx = FormContext::minimal(G);
    Sampler s(109);
    FactorizationInput input = random_factorization_input(ctx, s, true, 1, 2, 1);
    FactorizationCertificate cert = factorize(input);
    REQUIRE(verify_certificate(input, cert).pass);
    SUBCASE("deleting one factor fails") {
        FactorizationCertificate bad = cert;
        bad.factors.erase(bad.factors.begin() + 1);
        auto report = verify_certificate(input, bad);
        CHECK_FALSE(report.pass);
        CHECK_FALSE(report.first_discrepancy.empty());
    }
    SUBCASE("swapping commuting same-block factors passes") {
        // ensure at least two p-split factors in block 0
        FactorizationInput wide = input;
        wide.p.coords[wide.dim_k()] =
            wide.p.coords[wide.dim_k()] + R(G, 2); // grows c - 1
        FactorizationCertificate c2 = factorize(wide);
        REQUIRE(c2.p_factors_per_block >= 2);
        std::swap(c2.factors[0], c2.factors[1]);
        CHECK(verify_certificate(wide, c2).pass);
    }
    SUBCASE("corrupting a witness fails") {
        FactorizationCertificate bad = cert;
        bad.factors[0].witness = vec_scale(R(G, 2), bad.factors[0].witness);
        CHECK_FALSE(verify_certificate(input, bad).pass);
    }
    SUBCASE("replacing a factor by a valid no-op fails at the composite") {
        // sigma_{p0, 0, 0} is a perfectly valid transvection that does
        // nothing, so every per-factor check passes and only the composite
        // comparison can catch the substitution.
        FactorizationCertificate bad = cert;
        bad.factors[0].v = zero_vector(input.ambient_module());
        auto report = verify_certificate(input, bad);
        CHECK_FALSE(report.pass);
        CHECK(report.first_discrepancy.find("composite") != std::string::npos);
    }
}

TEST_CASE("input validation") {
    GroupPtr G = cyclic(2, -1);
    FormContext ctx = FormContext::minimal(G);
    Sampler s(113);
    SUBCASE("nonzero q+ coordinate is rejected") {
        FactorizationInput input = random_factorization_input(ctx, s, false, 0);
        input.p.coords[1] = RingElement::one(G);
        CHECK_THROWS_AS(factorize(input), PreconditionError);
    }
    SUBCASE("p leaking into V1 is rejected") {
        FactorizationInput input = random_factorization_input(ctx, s, false, 1);
        input.p.coords[0] = RingElement::one(G); // V1 coordinate when V0 = 0
        CHECK_THROWS_AS(factorize(input), PreconditionError);
    }
    SUBCASE("V0 without a certificate is rejected") {
        FactorizationInput input = random_factorization_input(ctx, s, true, 0);
        QuadraticModule v0_nocert(ctx, input.V0.gram(), input.V0.mu_basis());
        FactorizationInput bad{ctx, v0_nocert, input.V1, input.p, input.a, input.v};
        CHECK_THROWS_AS(factorize(bad), PreconditionError);
    }
    SUBCASE("a must represent mu(v)") {
        FactorizationInput input = random_factorization_input(ctx, s, false, 1);
        input.a = input.a + RingElement::one(G);
        CHECK_THROWS_AS(factorize(input), PreconditionError);
    }
}
