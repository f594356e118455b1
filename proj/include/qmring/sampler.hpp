#pragma once

#include "qmring/forms.hpp"

#include <cstdint>
#include <random>

namespace qmr {

// Deterministic pseudo-random algebra values. mt19937_64 output is fully
// specified, and we avoid std distributions, so identical seeds give
// identical values on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        // hi - lo + 1 stays tiny here; modulo bias is irrelevant for tests.
        return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (eng_() & 1) != 0; }

    // Group element of bounded size: finite -> any index; free abelian ->
    // exponents in [-size_bound, size_bound]; dihedral -> word length <= size_bound.
    GroupElement group_element(const GroupDescription& G, long size_bound) {
        switch (G.kind()) {
        case GroupKind::Finite:
            return finite_element(static_cast<std::uint32_t>(
                eng_() % static_cast<std::uint64_t>(G.size())));
        case GroupKind::FreeAbelian: {
            std::vector<std::int64_t> e(G.rank());
            for (auto& x : e) x = int_in(-size_bound, size_bound);
            return abelian_element(std::move(e));
        }
        case GroupKind::InfiniteDihedral: {
            long len = int_in(0, size_bound);
            std::string w;
            char c = coin() ? 'a' : 'b';
            for (long i = 0; i < len; ++i) {
                w.push_back(c);
                c = (c == 'a') ? 'b' : 'a';
            }
            return dihedral_element(std::move(w));
        }
        }
        return {};
    }

    // Up to `max_terms` terms with coefficients of magnitude <= height.
    RingElement ring_element(const GroupPtr& G, long height, long max_terms,
                             long element_size = 2) {
        std::vector<RingElement::Term> terms;
        long n = int_in(0, max_terms);
        for (long i = 0; i < n; ++i) {
            Int c = Int(int_in(-height, height));
            if (c == 0) continue;
            terms.push_back({group_element(*G, element_size), c});
        }
        return RingElement::from_terms(std::move(terms), G);
    }

    ModuleVector vector(const QuadraticModule& M, long height, long max_terms,
                        long element_size = 2) {
        ModuleVector v;
        v.coords.reserve(M.rank());
        for (std::size_t i = 0; i < M.rank(); ++i)
            v.coords.push_back(ring_element(M.group(), height, max_terms, element_size));
        return v;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace qmr
