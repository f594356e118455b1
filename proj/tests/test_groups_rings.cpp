#include "helpers.hpp"

#include <doctest.h>

using namespace qtest;

TEST_CASE("group law in the three families") {
    SUBCASE("infinite dihedral cancellation") {
        GroupPtr G = dihedral_inf();
        GroupElement ab = G->mul(dihedral_element("a"), dihedral_element("b"));
        CHECK(ab.word == "ab");
        GroupElement ba = dihedral_element("ba");
        CHECK(G->mul(ab, ba) == G->identity()); // (ab)(ba) = a(bb)a = aa = e
        // (aba)(ab) = ab(aa)b = a(bb) = a
        CHECK(G->mul(dihedral_element("aba"), dihedral_element("ab")) ==
              dihedral_element("a"));
    }
    SUBCASE("free abelian is componentwise") {
        GroupPtr G = free_abelian(2, {1, 1});
        CHECK(G->mul(abelian_element({1, 2}), abelian_element({3, -2})) ==
              abelian_element({4, 0}));
    }
    SUBCASE("order two element in C2") {
        GroupPtr G = cyclic(2, -1);
        GroupElement t = finite_element(1);
        CHECK(G->mul(t, t) == G->identity());
        CHECK(G->omega(t) == -1);
        CHECK(G->inverse(t) == t);
    }
    SUBCASE("invalid elements are rejected") {
        GroupPtr G = dihedral_inf();
        CHECK_THROWS_AS(G->mul(dihedral_element("aa"), dihedral_element("b")),
                        PreconditionError);
        GroupPtr C = cyclic(3);
        CHECK_THROWS_AS(C->mul(finite_element(7), finite_element(0)), PreconditionError);
        GroupPtr Z2 = free_abelian(2, {1, 1});
        CHECK_THROWS_AS(Z2->mul(abelian_element({1}), abelian_element({0, 0})),
                        PreconditionError);
    }
}

TEST_CASE("group description validation") {
    SUBCASE("omega must be a homomorphism") {
        std::vector<std::vector<std::uint32_t>> table = {{0, 1}, {1, 0}};
        CHECK_THROWS_AS(GroupDescription::finite(table, {1, 1, 1}), PreconditionError);
        // C3 with a -1 sign cannot be a homomorphism
        std::vector<std::vector<std::uint32_t>> t3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
        CHECK_THROWS_AS(GroupDescription::finite(t3, {1, -1, 1}), PreconditionError);
    }
    SUBCASE("identity must sit at index 0") {
        std::vector<std::vector<std::uint32_t>> bad = {{1, 0}, {0, 1}};
        CHECK_THROWS_AS(GroupDescription::finite(bad, {1, 1}), PreconditionError);
    }
    SUBCASE("associativity is checked") {
        // A "random" non-associative Latin square on 5 points.
        std::vector<std::vector<std::uint32_t>> bad = {{0, 1, 2, 3, 4},
                                                       {1, 0, 3, 4, 2},
                                                       {2, 4, 0, 1, 3},
                                                       {3, 2, 4, 0, 1},
                                                       {4, 3, 1, 2, 0}};
        CHECK_THROWS_AS(GroupDescription::finite(bad, {1, 1, 1, 1, 1}), PreconditionError);
    }
}

TEST_CASE("dihedral words: normal form and infinite order") {
    GroupPtr G = dihedral_inf();
    GroupElement ab = dihedral_element("ab");
    GroupElement acc = G->identity();
    for (int k = 1; k <= 64; ++k) {
        acc = G->mul(acc, ab);
        CHECK(acc.word.size() == 2 * static_cast<std::size_t>(k)); // (ab)^k has length 2k
        CHECK_FALSE(acc == G->identity());
    }
}

TEST_CASE("ring arithmetic") {
    SUBCASE("(1 + t)(1 - t) = 0 over Z[C2]") {
        GroupPtr G = cyclic(2, 1);
        GroupElement t = finite_element(1);
        RingElement x = R(G, 1) + Rg(G, 1, t);
        RingElement y = R(G, 1) - Rg(G, 1, t);
        // Brute-force convolution oracle, independent of RingElement::operator*.
        // Terms: 1*1, 1*(-t), t*1, t*(-t) = 1 - t + t - t^2 = 1 - 1 = 0.
        std::vector<std::pair<GroupElement, Int>> raw;
        for (const auto& [g, c] : x.terms())
            for (const auto& [h, d] : y.terms()) raw.push_back({G->mul(g, h), c * d});
        Int coeff_e = 0, coeff_t = 0;
        for (const auto& [g, c] : raw) (g.index == 0 ? coeff_e : coeff_t) += c;
        CHECK(coeff_e == 0);
        CHECK(coeff_t == 0);
        CHECK((x * y).is_zero());
    }
    SUBCASE("multiplicative identity") {
        GroupPtr G = symmetric3();
        Sampler s(7);
        for (int i = 0; i < 20; ++i) {
            RingElement x = s.ring_element(G, 3, 3);
            CHECK(x * RingElement::one(G) == x);
            CHECK(RingElement::one(G) * x == x);
        }
    }
    SUBCASE("single terms multiply through the group") {
        GroupPtr G = dihedral_inf();
        RingElement a = Rg(G, 1, dihedral_element("a"));
        RingElement b = Rg(G, 1, dihedral_element("b"));
        CHECK(a * b == Rg(G, 1, dihedral_element("ab")));
    }
    SUBCASE("mixed group rings are rejected") {
        RingElement x = R(cyclic(2), 1);
        RingElement y = R(cyclic(3), 1);
        CHECK_THROWS_AS((void)(x * y), PreconditionError);
        CHECK_THROWS_AS((void)(x + y), PreconditionError);
    }
    SUBCASE("associativity and distributivity on random triples") {
        for (const auto& ctx : sample_contexts()) {
            Sampler s(11);
            for (int i = 0; i < 8; ++i) {
                RingElement x = s.ring_element(ctx.group(), 2, 2);
                RingElement y = s.ring_element(ctx.group(), 2, 2);
                RingElement z = s.ring_element(ctx.group(), 2, 2);
                CHECK((x * y) * z == x * (y * z));
                CHECK(x * (y + z) == x * y + x * z);
                CHECK((x + y) * z == x * z + y * z);
            }
        }
    }
}

TEST_CASE("involution") {
    SUBCASE("twisted C2: x + y t |-> x - y t") {
        GroupPtr G = cyclic(2, -1);
        RingElement e = R(G, 3) + Rg(G, 5, finite_element(1));
        RingElement expected = R(G, 3) - Rg(G, 5, finite_element(1));
        CHECK(e.involute() == expected);
    }
    SUBCASE("identity is fixed") {
        GroupPtr G = symmetric3();
        CHECK(RingElement::one(G).involute() == RingElement::one(G));
    }
    SUBCASE("untwisted Z sends u to u^{-1}") {
        GroupPtr G = free_abelian(1, {1});
        CHECK(Rg(G, 1, abelian_element({1})).involute() == Rg(G, 1, abelian_element({-1})));
    }
    SUBCASE("anti-multiplicative involution of order two") {
        for (const auto& ctx : sample_contexts()) {
            Sampler s(13);
            for (int i = 0; i < 10; ++i) {
                RingElement x = s.ring_element(ctx.group(), 3, 3);
                RingElement y = s.ring_element(ctx.group(), 3, 3);
                CHECK(x.involute().involute() == x);
                CHECK((x * y).involute() == y.involute() * x.involute());
                CHECK((x + y).involute() == x.involute() + y.involute());
            }
        }
    }
}

TEST_CASE("reduction mod the minimal form parameter") {
    SUBCASE("3 + 5t over twisted C2 reduces to 3 + t") {
        GroupPtr G = cyclic(2, -1);
        FormContext ctx = FormContext::minimal(G);
        RingElement x = R(G, 3) + Rg(G, 5, finite_element(1));
        RingElement expected = R(G, 3) + Rg(G, 1, finite_element(1));
        CHECK(reduce_mod_lambda(x, ctx) == expected);
    }
    SUBCASE("u - u^{-1} over Z reduces to zero") {
        GroupPtr G = free_abelian(1, {1});
        FormContext ctx = FormContext::minimal(G);
        RingElement x = Rg(G, 1, abelian_element({1})) - Rg(G, 1, abelian_element({-1}));
        CHECK(reduce_mod_lambda(x, ctx).is_zero());
    }
    SUBCASE("a - conj(a) reduces to zero; idempotence") {
        for (const auto& ctx : sample_contexts()) {
            Sampler s(17);
            for (int i = 0; i < 25; ++i) {
                RingElement a = s.ring_element(ctx.group(), 3, 3);
                CHECK(reduce_mod_lambda(a - a.involute(), ctx).is_zero());
                RingElement r = reduce_mod_lambda(a, ctx);
                CHECK(reduce_mod_lambda(r, ctx) == r);
                CHECK(reduce_mod_lambda(a + (a - a.involute()), ctx) == r);
                // a + conj(a) need not reduce to zero, but every spanning
                // vector is skew: Lambda_min inside Lambda_max.
                RingElement span = a - a.involute();
                CHECK(span.involute() == -span);
            }
        }
    }
    SUBCASE("reduction respects addition of spanning vectors") {
        GroupPtr G = symmetric3();
        FormContext ctx = FormContext::minimal(G);
        Sampler s(19);
        for (int i = 0; i < 20; ++i) {
            RingElement a = s.ring_element(G, 3, 3);
            GroupElement g = s.group_element(*G, 2);
            RingElement span =
                Rg(G, 1, g) - RingElement::term(Int(G->omega(g)), G->inverse(g), G);
            CHECK(reduce_mod_lambda(a + span, ctx) == reduce_mod_lambda(a, ctx));
        }
    }
    SUBCASE("closure r a conj(r) stays in Lambda_min") {
        for (const auto& ctx : sample_contexts()) {
            Sampler s(23);
            for (int i = 0; i < 15; ++i) {
                RingElement a = s.ring_element(ctx.group(), 2, 2);
                if (!in_lambda_min(a, ctx)) a = a - a.involute(); // force membership
                RingElement r = s.ring_element(ctx.group(), 2, 2);
                CHECK(in_lambda_min(r * a * r.involute(), ctx));
            }
        }
    }
}

TEST_CASE("form context validation") {
    GroupPtr G = cyclic(2, -1);
    SUBCASE("lambda = -1 is legal data, rejected by reduce") {
        FormContext ctx(G, R(G, -1));
        CHECK_FALSE(ctx.lambda_is_one());
        CHECK_THROWS_AS(reduce_mod_lambda(R(G, 1), ctx), PreconditionError);
    }
    SUBCASE("lambda with lambda*conj(lambda) != 1 is rejected") {
        CHECK_THROWS_AS(FormContext(G, R(G, 2)), PreconditionError);
        CHECK_THROWS_AS(FormContext(G, RingElement::zero(G)), PreconditionError);
    }
    SUBCASE("non-central lambda is rejected") {
        GroupPtr S = symmetric3();
        // A 3-cycle g has omega(g) = +1, so g * conj(g) = 1, but g is not
        // central in S3.
        RingElement lam = Rg(S, 1, finite_element(3));
        CHECK((lam * lam.involute()).is_one());
        CHECK_THROWS_AS(FormContext(S, lam), PreconditionError);
    }
}
