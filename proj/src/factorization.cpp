#include "qmring/factorization.hpp"

#include <sstream>

namespace qmr {

namespace {

ModuleVector embed(const ModuleVector& x, std::size_t offset, std::size_t total,
                   const GroupPtr& G) {
    ModuleVector out;
    out.coords.assign(total, RingElement::zero(G));
    for (std::size_t i = 0; i < x.coords.size(); ++i) out.coords[offset + i] = x.coords[i];
    return out;
}

} // namespace

void FactorizationInput::validate() const {
    if (!(V0.context() == ctx) || !(V1.context() == ctx))
        throw PreconditionError("factorization.context",
                                "V0/V1 context differs from the input context");
    ctx.require_lambda_one("factorize");
    if (V0.rank() > 0 && !V0.certificate())
        throw PreconditionError("factorization.nonsingular",
                                "V0 must carry a nonsingularity certificate");
    const std::size_t k = dim_k();
    if (p.coords.size() != k + 2)
        throw PreconditionError("factorization.support",
                                "p must live on K perp H(P+)");
    if (v.coords.size() != k)
        throw PreconditionError("factorization.support", "v must live on K");
    for (std::size_t i = dim_v0(); i < k; ++i)
        if (!p.coords[i].is_zero())
            throw PreconditionError("factorization.support",
                                    "p must vanish on the V1 coordinates");
    if (!p.coords[k + 1].is_zero())
        throw PreconditionError("factorization.support",
                                "p must have zero q+ coordinate");
    // Target transvection preconditions (checked by construction).
    ModulePtr tm = std::make_shared<QuadraticModule>(target_module());
    (void)target(tm);
}

QuadraticModule FactorizationInput::target_module() const {
    QuadraticModule K = orthogonal_sum(V0, V1);
    return orthogonal_sum(K, QuadraticModule::hyperbolic(ctx, 1));
}

QuadraticModule FactorizationInput::ambient_module() const {
    return orthogonal_sum(target_module(), QuadraticModule::hyperbolic(ctx, 1));
}

Transvection FactorizationInput::target(const ModulePtr& target_mod) const {
    ModuleVector v_emb = embed(v, 0, dim_k() + 2, ctx.group());
    return Transvection::make(target_mod, p, a, v_emb);
}

std::vector<RingElement> unit_decomposition(const RingElement& x) {
    // Terms are already sorted in the group order; expand each coefficient
    // m*g into |m| copies of sign(m)*g.
    std::vector<RingElement> out;
    for (const auto& [g, c] : x.terms()) {
        Int n = abs(c);
        Int s = sign_of(c);
        for (Int i = 0; i < n; ++i) out.push_back(RingElement::term(s, g, x.group()));
    }
    return out;
}

namespace {

struct AmbientPieces {
    ModulePtr ambient;
    ModuleVector p_amb;
    std::vector<ModuleVector> v_split; // v0, v1, v2
};

AmbientPieces build_pieces(const FactorizationInput& input) {
    AmbientPieces out;
    out.ambient = std::make_shared<QuadraticModule>(input.ambient_module());
    const GroupPtr& G = input.ctx.group();
    const std::size_t k = input.dim_k();
    const std::size_t n = input.ambient_rank();

    out.p_amb = embed(input.p, 0, n, G);
    ModuleVector v_amb = embed(input.v, 0, n, G);
    ModuleVector p_minus = basis_vector(*out.ambient, k + 2);
    ModuleVector q_minus = basis_vector(*out.ambient, k + 3);

    ModuleVector v0 = vec_add(v_amb, vec_sub(p_minus, vec_scale(input.a, q_minus)));
    ModuleVector v1 = vec_neg(p_minus);
    ModuleVector v2 = vec_scale(input.a, q_minus);
    out.v_split = {std::move(v0), std::move(v1), std::move(v2)};
    return out;
}

} // namespace

std::vector<Transvection> v_split_factors(const FactorizationInput& input) {
    input.validate();
    AmbientPieces pieces = build_pieces(input);
    std::vector<Transvection> out;
    out.reserve(3);
    for (const auto& vj : pieces.v_split) {
        try {
            out.push_back(Transvection::make(pieces.ambient, pieces.p_amb,
                                             RingElement::zero(input.ctx.group()), vj));
        } catch (const PreconditionError& e) {
            throw InternalError(std::string("v-split factor is not a valid transvection: ") +
                                e.what());
        }
    }
    return out;
}

FactorizationCertificate factorize(const FactorizationInput& input) {
    input.validate();
    AmbientPieces pieces = build_pieces(input);
    const GroupPtr& G = input.ctx.group();
    const QuadraticModule& ambient = *pieces.ambient;
    const std::size_t k = input.dim_k();
    const RingElement one = RingElement::one(G);

    // p = p' + c p+; p_0 = p' + 1 p+, then c - 1 = sum of signed group elements.
    const RingElement c = input.p.coords[k];
    ModuleVector p0 = pieces.p_amb;
    p0.coords[k] = one;
    std::vector<RingElement> units = unit_decomposition(c - one);

    ModuleVector q_plus = basis_vector(ambient, k + 1);

    // (u, witness) pairs: p_0 pairs with q+ to 1; s p+ pairs with conj(s^{-1}) q+.
    std::vector<std::pair<ModuleVector, ModuleVector>> split;
    split.reserve(1 + units.size());
    split.push_back({p0, q_plus});
    for (const auto& s : units) {
        ModuleVector pi = zero_vector(ambient);
        pi.coords[k] = s;
        ModuleVector wit = vec_scale(s.trivial_unit_inverse().involute(), q_plus);
        split.push_back({std::move(pi), std::move(wit)});
    }

    FactorizationCertificate cert;
    cert.v_blocks = 3;
    cert.p_factors_per_block = split.size();
    const RingElement zero = RingElement::zero(G);
    for (const auto& vj : pieces.v_split) {
        for (const auto& [u, wit] : split) {
            try {
                (void)Transvection::make(pieces.ambient, u, zero, vj);
            } catch (const PreconditionError& e) {
                throw InternalError(std::string("emitted factor fails validation: ") +
                                    e.what());
            }
            cert.factors.push_back({u, vj, wit});
        }
    }
    return cert;
}

CertificateReport verify_certificate(const FactorizationInput& input,
                                     const FactorizationCertificate& cert) {
    input.validate();
    CertificateReport report;
    AmbientPieces pieces = build_pieces(input);
    const ModulePtr& ambient = pieces.ambient;
    const GroupPtr& G = input.ctx.group();
    const std::size_t k = input.dim_k();
    const std::size_t v0_rank = input.dim_v0();
    const RingElement zero = RingElement::zero(G);

    auto fail = [&](long idx, const std::string& why) {
        report.pass = false;
        report.failing_factor = idx;
        report.first_discrepancy = why;
        return report;
    };

    if (cert.factors.empty()) return fail(-1, "certificate has no factors");
    if (cert.factors.size() != cert.expected_total())
        return fail(-1, "factor count differs from the certificate metadata");

    std::vector<IsometryMatrix> mats;
    mats.reserve(cert.factors.size());
    for (std::size_t idx = 0; idx < cert.factors.size(); ++idx) {
        const auto& f = cert.factors[idx];
        if (f.u.coords.size() != ambient->rank() || f.v.coords.size() != ambient->rank())
            return fail(static_cast<long>(idx), "factor vectors have wrong dimension");
        // Support: u in V0 + P+, v in K + H(P-).
        for (std::size_t i = 0; i < ambient->rank(); ++i) {
            bool u_allowed = (i < v0_rank) || (i == k);
            if (!u_allowed && !f.u.coords[i].is_zero())
                return fail(static_cast<long>(idx), "factor u not supported on V0 + P+");
            bool v_allowed = (i < k) || (i >= k + 2);
            if (!v_allowed && !f.v.coords[i].is_zero())
                return fail(static_cast<long>(idx), "factor v not supported on K + H(P-)");
        }
        try {
            Transvection t = Transvection::make(ambient, f.u, zero, f.v);
            mats.push_back(matrix_of(t));
        } catch (const PreconditionError& e) {
            return fail(static_cast<long>(idx),
                        std::string("factor fails transvection preconditions: ") + e.what());
        }
        if (!mu(*ambient, f.v).is_zero())
            return fail(static_cast<long>(idx), "factor v is not isotropic");
        if (f.witness.coords.size() != ambient->rank())
            return fail(static_cast<long>(idx), "unimodularity witness has wrong dimension");
        auto uni = is_unimodular(*ambient, f.u, f.witness);
        if (uni.status != Unimodularity::Yes)
            return fail(static_cast<long>(idx), "unimodularity witness rejected");
    }

    IsometryMatrix composite = mats[0];
    for (std::size_t i = 1; i < mats.size(); ++i)
        composite = isometry_product(composite, mats[i]);

    // target + Id: the H(P-) block contributes a rank-2 identity.
    ModulePtr tm = std::make_shared<QuadraticModule>(input.target_module());
    IsometryMatrix expected = isometry_block_sum(
        matrix_of(input.target(tm)),
        IsometryMatrix{{{RingElement::one(G), zero}, {zero, RingElement::one(G)}}}, G);
    if (!(composite == expected)) {
        // Locate the first differing entry for the report.
        for (std::size_t i = 0; i < composite.rank(); ++i)
            for (std::size_t j = 0; j < composite.rank(); ++j)
                if (!(composite.rows[i][j] == expected.rows[i][j])) {
                    std::ostringstream os;
                    os << "composite differs from target + Id at entry (" << i << "," << j
                       << ")";
                    return fail(-1, os.str());
                }
        return fail(-1, "composite differs from target + Id");
    }
    return report;
}

} // namespace qmr
