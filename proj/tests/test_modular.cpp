// The finite-coefficient wrapper: reduction mod m checked against a
// brute-force span enumeration, and enumerated generators checked to be
// mod-m isometries.
#include "helpers.hpp"
#include "qmring/pairs.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace qtest;

namespace {

// All Z/m combinations of the Lambda_min spanning vectors over the given
// support, as canonical coefficient tuples. Brute force, independent of the
// folding rule in the implementation.
std::set<std::vector<long>> lambda_span_mod(const GroupPtr& G,
                                            const std::vector<GroupElement>& support,
                                            long m) {
    std::vector<std::vector<long>> spans;
    for (const auto& g : support) {
        RingElement s = RingElement::term(1, g, G) -
                        RingElement::term(G->omega(g), G->inverse(g), G);
        std::vector<long> coeffs(support.size(), 0);
        for (const auto& [h, c] : s.terms())
            for (std::size_t i = 0; i < support.size(); ++i)
                if (support[i] == h)
                    coeffs[i] = static_cast<long>(mod_canonical(c, Int(m)).get_si());
        spans.push_back(std::move(coeffs));
    }
    std::set<std::vector<long>> out;
    std::vector<long> mult(spans.size(), 0);
    while (true) {
        std::vector<long> v(support.size(), 0);
        for (std::size_t i = 0; i < spans.size(); ++i)
            for (std::size_t j = 0; j < support.size(); ++j)
                v[j] = (v[j] + mult[i] * spans[i][j]) % m;
        out.insert(std::move(v));
        std::size_t i = 0;
        while (i < mult.size() && mult[i] == m - 1) {
            mult[i] = 0;
            ++i;
        }
        if (i == mult.size()) break;
        ++mult[i];
    }
    return out;
}

} // namespace

TEST_CASE("mod-m Lambda membership matches the brute-force span") {
    struct Case {
        GroupPtr G;
        std::vector<GroupElement> support;
    };
    // C2 twisted (self-inverse element, omega = -1) and C4 with omega(g) = -1
    // (a genuine two-element orbit {g, g^3} plus a fixed self-inverse g^2).
    std::vector<std::vector<std::uint32_t>> c4(4, std::vector<std::uint32_t>(4));
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) c4[i][j] = (i + j) % 4;
    auto C4 = std::make_shared<GroupDescription>(
        GroupDescription::finite(c4, {1, -1, 1, -1}));
    std::vector<Case> cases;
    cases.push_back({cyclic(2, -1), {finite_element(0), finite_element(1)}});
    cases.push_back({C4,
                     {finite_element(0), finite_element(1), finite_element(2),
                      finite_element(3)}});
    for (const auto& c : cases) {
        for (long m : {2L, 3L, 4L}) {
            auto span = lambda_span_mod(c.G, c.support, m);
            // every coefficient tuple over the support
            std::vector<long> coeffs(c.support.size(), 0);
            while (true) {
                std::vector<RingElement::Term> terms;
                for (std::size_t i = 0; i < c.support.size(); ++i)
                    if (coeffs[i] != 0) terms.push_back({c.support[i], Int(coeffs[i])});
                RingElement x = RingElement::from_terms(std::move(terms), c.G);
                bool expected = span.count(coeffs) > 0;
                CHECK(detail::in_lambda_min_mod(x, m) == expected);
                std::size_t i = 0;
                while (i < coeffs.size() && coeffs[i] == m - 1) {
                    coeffs[i] = 0;
                    ++i;
                }
                if (i == coeffs.size()) break;
                ++coeffs[i];
            }
        }
    }
}

TEST_CASE("enumerated generators are mod-m isometries for m up to 5") {
    GroupPtr G = cyclic(2, -1);
    FormContext ctx = FormContext::minimal(G);
    // V: rank one, mu = t, gram = [t + conj(t)] = [0]; exact diagonal.
    RingElement t = Rg(G, 1, finite_element(1));
    QuadraticModule V(ctx, {{t + t.involute()}}, {t});
    for (long m : {2L, 3L, 4L, 5L}) {
        PairModule pm{ctx, V, 1, m};
        QuadraticModule M = pm.build();
        auto mp = std::make_shared<QuadraticModule>(M);
        long total = 0;
        for (auto fam : {GeneratorFamily::EU_P, GeneratorFamily::EU_Pbar,
                         GeneratorFamily::H_E_P, GeneratorFamily::H_E_Pbar,
                         GeneratorFamily::EU_P_V, GeneratorFamily::EU_Pbar_V}) {
            for (const auto& g : enumerate_generators(pm, fam)) {
                ++total;
                Transvection tr = Transvection::unchecked(mp, g.u, g.a, g.v);
                std::vector<ModuleVector> images;
                for (std::size_t i = 0; i < M.rank(); ++i)
                    images.push_back(detail::vector_mod(tr.apply(basis_vector(M, i)), m));
                for (std::size_t i = 0; i < M.rank(); ++i) {
                    // mu classes preserved mod m
                    RingElement dmu = mu_representative(M, images[i]) -
                                      mu_representative(M, basis_vector(M, i));
                    CHECK(detail::in_lambda_min_mod(dmu, m));
                    for (std::size_t j = 0; j < M.rank(); ++j) {
                        RingElement d = inner(M, images[i], images[j]) - M.gram(i, j);
                        CHECK(detail::ring_mod(d, m).is_zero());
                    }
                }
            }
        }
        CHECK(total > 0);
    }
}
