#pragma once

#include "qmring/factorization.hpp"
#include "qmring/sampler.hpp"

#include <cstdlib>
#include <memory>
#include <vector>

namespace qtest {

using namespace qmr;

// Cyclic group C_n with table (i + j) mod n; omega(g) = sign^i must be a
// homomorphism, so sign = -1 needs n even.
inline GroupPtr cyclic(unsigned n, int sign = 1) {
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    std::vector<int> omega(n, 1);
    if (sign == -1)
        for (unsigned i = 0; i < n; ++i) omega[i] = (i % 2 == 0) ? 1 : -1;
    return std::make_shared<GroupDescription>(
        GroupDescription::finite(std::move(table), std::move(omega)));
}

inline GroupPtr trivial_group() { return cyclic(1); }

// S3 as permutations of {0,1,2} in lexicographic one-line order; identity
// first. omega = sign character.
inline GroupPtr symmetric3() {
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto compose = [&](int a, int b) { // (a after b)(x) = a[b[x]]
        int c[3];
        for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == c[0] && perms[i][1] == c[1] && perms[i][2] == c[2]) return i;
        std::abort();
    };
    std::vector<std::vector<std::uint32_t>> table(6, std::vector<std::uint32_t>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            table[i][j] = static_cast<std::uint32_t>(compose(i, j));
    std::vector<int> omega = {1, -1, -1, 1, 1, -1}; // parity of the permutation
    return std::make_shared<GroupDescription>(
        GroupDescription::finite(std::move(table), std::move(omega)));
}

inline GroupPtr free_abelian(std::size_t rank, std::vector<int> omega) {
    return std::make_shared<GroupDescription>(
        GroupDescription::free_abelian(rank, std::move(omega)));
}

inline GroupPtr dihedral_inf(int oa = -1, int ob = -1) {
    return std::make_shared<GroupDescription>(GroupDescription::infinite_dihedral(oa, ob));
}

inline RingElement R(const GroupPtr& G, long n) { return RingElement::integer(n, G); }

inline RingElement Rg(const GroupPtr& G, long c, const GroupElement& g) {
    return RingElement::term(Int(c), g, G);
}

// A sample of contexts covering the three group families.
inline std::vector<FormContext> sample_contexts() {
    std::vector<FormContext> out;
    out.push_back(FormContext::minimal(trivial_group()));
    out.push_back(FormContext::minimal(cyclic(2, -1)));
    out.push_back(FormContext::minimal(cyclic(2, 1)));
    out.push_back(FormContext::minimal(cyclic(3)));
    out.push_back(FormContext::minimal(cyclic(6, -1)));
    out.push_back(FormContext::minimal(symmetric3()));
    out.push_back(FormContext::minimal(free_abelian(1, {1})));
    out.push_back(FormContext::minimal(free_abelian(1, {-1})));
    out.push_back(FormContext::minimal(free_abelian(2, {1, -1})));
    out.push_back(FormContext::minimal(dihedral_inf(-1, -1)));
    return out;
}

// Nonsingular "diagonal twist" of H(1): basis change f1 = e1, f2 = s e1 + e2
// gives gram [[0, 1], [1, s + conj(s)]], mu = (0, s), with explicit inverse
// [[-(s + conj s), 1], [1, 0]].
inline QuadraticModule twisted_h1(const FormContext& ctx, const RingElement& s) {
    const GroupPtr& G = ctx.group();
    RingElement zero = RingElement::zero(G);
    RingElement one = RingElement::one(G);
    RingElement d = s + s.involute();
    std::vector<std::vector<RingElement>> gram = {{zero, one}, {one, d}};
    std::vector<RingElement> mu = {zero, reduce_mod_lambda(s, ctx)};
    NonsingularityCertificate cert{{{-d, one}, {one, zero}}};
    // The stored mu must be the reduced representative; the diagonal entry
    // must match mu + conj(mu) exactly, so rebuild d from the reduced value.
    RingElement m1 = mu[1];
    gram[1][1] = m1 + m1.involute();
    cert.inverse_gram[0][0] = -gram[1][1];
    return QuadraticModule(ctx, std::move(gram), std::move(mu), std::move(cert));
}

// Random quadratic module of the given rank: arbitrary hermitian gram with
// exact diagonal, no nonsingularity promise.
inline QuadraticModule random_module(const FormContext& ctx, Sampler& sampler,
                                     std::size_t rank, long height = 2, long terms = 2,
                                     long esize = 2) {
    const GroupPtr& G = ctx.group();
    std::vector<RingElement> mu;
    for (std::size_t i = 0; i < rank; ++i)
        mu.push_back(reduce_mod_lambda(sampler.ring_element(G, height, terms, esize), ctx));
    std::vector<std::vector<RingElement>> gram(
        rank, std::vector<RingElement>(rank, RingElement::zero(G)));
    for (std::size_t i = 0; i < rank; ++i) {
        gram[i][i] = mu[i] + mu[i].involute();
        for (std::size_t j = i + 1; j < rank; ++j) {
            gram[i][j] = sampler.ring_element(G, height, terms, esize);
            gram[j][i] = gram[i][j].involute();
        }
    }
    return QuadraticModule(ctx, std::move(gram), std::move(mu));
}

// Random valid factorization input. p = x f1 + c p+ and v = a1 f1 + (V1 part)
// are automatically isotropic / orthogonal to p because f1 and p+ lie in
// isotropic summands; a is a representative of mu(v), sometimes shifted by a
// Lambda element so non-canonical representatives get exercised too.
inline FactorizationInput random_factorization_input(const FormContext& ctx, Sampler& s,
                                                     bool with_v0, std::size_t v1_rank,
                                                     long height = 3, long esize = 2) {
    const GroupPtr& G = ctx.group();
    QuadraticModule V0 = with_v0 ? twisted_h1(ctx, s.ring_element(G, height, 2, esize))
                                 : QuadraticModule(ctx, {}, {});
    QuadraticModule V1 = random_module(ctx, s, v1_rank, height, 2, esize);
    const std::size_t k = V0.rank() + V1.rank();

    ModuleVector p;
    p.coords.assign(k + 2, RingElement::zero(G));
    if (with_v0) p.coords[0] = s.ring_element(G, height, 2, esize);
    p.coords[k] = s.ring_element(G, height, 2, esize);

    ModuleVector v;
    v.coords.assign(k, RingElement::zero(G));
    if (with_v0) v.coords[0] = s.ring_element(G, height, 2, esize);
    for (std::size_t i = V0.rank(); i < k; ++i)
        v.coords[i] = s.ring_element(G, height, 2, esize);

    QuadraticModule K = orthogonal_sum(V0, V1);
    QuadraticModule TM = orthogonal_sum(K, QuadraticModule::hyperbolic(ctx, 1));
    ModuleVector v_emb;
    v_emb.coords = v.coords;
    v_emb.coords.push_back(RingElement::zero(G));
    v_emb.coords.push_back(RingElement::zero(G));
    RingElement a = mu(TM, v_emb);
    if (s.coin()) {
        RingElement w = s.ring_element(G, 2, 1, esize);
        a = a + (w - w.involute());
    }
    return FactorizationInput{ctx, std::move(V0), std::move(V1), std::move(p),
                              std::move(a), std::move(v)};
}


} // namespace qtest
