#pragma once

#include "qmring/transvection.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qmr {

// Input for factoring a stabilized transvection. Ambient basis order is
// fixed as [V0 | V1 | p+ q+ | p- q-]:
//   K            = V0 perp V1            (coordinates 0 .. dimK-1)
//   K perp H(P+) = target module         (adds p+ q+)
//   ambient      = K perp H(P+) perp H(P-).
// The target sigma_{p,a,v} lives on K perp H(P+) with p in V0 + P+ (zero on
// V1 and q+) and v in K. V0 must carry a nonsingularity certificate. The
// additive generator set is S = pi u -pi, which generates (A, +) for every
// group ring, so the hypothesis is always met here.
struct FactorizationInput {
    FormContext ctx;
    QuadraticModule V0;
    QuadraticModule V1;
    ModuleVector p; // length dim V0 + dim V1 + 2
    RingElement a;
    ModuleVector v; // length dim V0 + dim V1

    std::size_t dim_v0() const { return V0.rank(); }
    std::size_t dim_k() const { return V0.rank() + V1.rank(); }
    std::size_t ambient_rank() const { return dim_k() + 4; }

    // Throws PreconditionError on any violated support / certificate /
    // transvection condition.
    void validate() const;

    QuadraticModule target_module() const; // K perp H(P+)
    QuadraticModule ambient_module() const;
    Transvection target(const ModulePtr& target_mod) const;
};

struct FactorizationFactor {
    ModuleVector u;
    ModuleVector v;
    ModuleVector witness; // <u, witness> = 1, demonstrating unimodularity
};

// Ordered list of sigma_{u,0,v} on the ambient module; factors[0] is applied
// first (rightmost in composition notation). Factors come in three v-blocks
// (j = 0, 1, 2, emitted in that order); within a block the p-split factors
// commute.
struct FactorizationCertificate {
    std::vector<FactorizationFactor> factors;
    std::size_t v_blocks = 3;
    std::size_t p_factors_per_block = 1;

    std::size_t expected_total() const { return v_blocks * p_factors_per_block; }
};

// The constructive factorization:
//   v_0 = v + p_- - a q_-,   v_1 = -p_-,   v_2 = a q_-
// splits off the a-part, then p = p' + c p+ is split as p_0 = p' + p+ plus
// one signed-group-element factor per unit in c - 1 (elements enumerated in
// the group order, each integer coefficient m expanded into |m| copies of
// sign(m) g). Emits sigma_{p_i,0,v_j} for j = 0,1,2.
FactorizationCertificate factorize(const FactorizationInput& input);

// The three v-split transvections sigma_{p,0,v_j} on the ambient module,
// before any p-splitting. Their composite equals target + Id_{H(P-)}.
std::vector<Transvection> v_split_factors(const FactorizationInput& input);

struct CertificateReport {
    bool pass = true;
    std::string first_discrepancy; // empty when pass
    long failing_factor = -1;      // index into factors, when applicable
};

// Trust-nothing check: validates every factor (definition preconditions,
// support constraints, unimodularity witness, isotropy), recomputes the
// composite matrix and compares it exactly with target + Id_{H(P-)}.
CertificateReport verify_certificate(const FactorizationInput& input,
                                     const FactorizationCertificate& cert);

// Decomposition of a ring element into signed group elements, in the
// deterministic order used by factorize.
std::vector<RingElement> unit_decomposition(const RingElement& x);

} // namespace qmr
