#include "qmring/forms.hpp"

#include <algorithm>

namespace qmr {

ModuleVector zero_vector(const QuadraticModule& M) {
    ModuleVector v;
    v.coords.assign(M.rank(), RingElement::zero(M.group()));
    return v;
}

ModuleVector basis_vector(const QuadraticModule& M, std::size_t i) {
    ModuleVector v = zero_vector(M);
    v.coords.at(i) = RingElement::one(M.group());
    return v;
}

ModuleVector vec_add(const ModuleVector& x, const ModuleVector& y) {
    if (x.coords.size() != y.coords.size())
        throw PreconditionError("vector.dimension", "vector dimensions differ");
    ModuleVector out = x;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        out.coords[i] = out.coords[i] + y.coords[i];
    return out;
}

ModuleVector vec_neg(const ModuleVector& x) {
    ModuleVector out = x;
    for (auto& c : out.coords) c = -c;
    return out;
}

ModuleVector vec_sub(const ModuleVector& x, const ModuleVector& y) {
    return vec_add(x, vec_neg(y));
}

ModuleVector vec_scale(const RingElement& a, const ModuleVector& x) {
    ModuleVector out = x;
    for (auto& c : out.coords) c = a * c;
    return out;
}

namespace {

using Matrix = std::vector<std::vector<RingElement>>;

Matrix identity(const GroupPtr& G, std::size_t n) {
    Matrix m(n, std::vector<RingElement>(n, RingElement::zero(G)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = RingElement::one(G);
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b, const GroupPtr& G) {
    const std::size_t n = a.size();
    Matrix out(n, std::vector<RingElement>(n, RingElement::zero(G)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RingElement s = RingElement::zero(G);
            for (std::size_t k = 0; k < n; ++k) s = s + a[i][k] * b[k][j];
            out[i][j] = s;
        }
    return out;
}

} // namespace

QuadraticModule::QuadraticModule(FormContext ctx,
                                 std::vector<std::vector<RingElement>> gram,
                                 std::vector<RingElement> mu_basis,
                                 std::optional<NonsingularityCertificate> certificate)
    : ctx_(std::move(ctx)), gram_(std::move(gram)), mu_(std::move(mu_basis)),
      cert_(std::move(certificate)) {
    const std::size_t n = gram_.size();
    if (mu_.size() != n)
        throw PreconditionError("module.shape", "mu_basis length must equal rank");
    for (const auto& row : gram_)
        if (row.size() != n)
            throw PreconditionError("module.shape", "gram matrix must be square");
    const GroupPtr& G = ctx_.group();
    auto check_elem = [&](const RingElement& e) {
        if (!(*e.group() == *G))
            throw PreconditionError("module.group", "entry from a different group ring");
    };
    for (const auto& row : gram_)
        for (const auto& e : row) check_elem(e);
    for (const auto& e : mu_) check_elem(e);

    const RingElement& lam = ctx_.lambda();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (gram_[j][i] != lam * gram_[i][j].involute())
                throw PreconditionError("module.hermitian",
                                        "gram is not lambda-hermitian symmetric");
    for (std::size_t i = 0; i < n; ++i) {
        if (reduce_mod_lambda(mu_[i], ctx_) != mu_[i])
            throw PreconditionError("module.mu", "mu_basis entries must be reduced");
        RingElement diag = mu_[i] + lam * mu_[i].involute() - gram_[i][i];
        if (!in_lambda_min(diag, ctx_))
            throw PreconditionError("module.diagonal",
                                    "gram diagonal incompatible with mu_basis");
    }

    if (cert_) {
        const Matrix& inv = cert_->inverse_gram;
        if (inv.size() != n)
            throw PreconditionError("module.certificate", "inverse gram has wrong rank");
        for (const auto& row : inv) {
            if (row.size() != n)
                throw PreconditionError("module.certificate", "inverse gram not square");
            for (const auto& e : row) check_elem(e);
        }
        Matrix id = identity(G, n);
        if (matmul(gram_, inv, G) != id || matmul(inv, gram_, G) != id)
            throw PreconditionError("module.certificate",
                                    "gram * inverse_gram is not the identity");
    }
}

QuadraticModule QuadraticModule::hyperbolic(const FormContext& ctx, std::size_t k) {
    const GroupPtr& G = ctx.group();
    const std::size_t n = 2 * k;
    Matrix gram(n, std::vector<RingElement>(n, RingElement::zero(G)));
    Matrix inv(n, std::vector<RingElement>(n, RingElement::zero(G)));
    const RingElement one = RingElement::one(G);
    const RingElement lam = ctx.lambda();
    const RingElement lam_bar = lam.involute();
    for (std::size_t i = 0; i < k; ++i) {
        gram[i][k + i] = one;
        gram[k + i][i] = lam;
        inv[i][k + i] = lam_bar;
        inv[k + i][i] = one;
    }
    std::vector<RingElement> mu(n, RingElement::zero(G));
    return QuadraticModule(ctx, std::move(gram), std::move(mu),
                           NonsingularityCertificate{std::move(inv)});
}

void QuadraticModule::require_vector(const ModuleVector& x) const {
    if (x.coords.size() != rank())
        throw PreconditionError("vector.dimension", "vector length differs from rank");
    for (const auto& c : x.coords)
        if (!(*c.group() == *group()))
            throw PreconditionError("vector.group", "coordinate from a different group ring");
}

RingElement inner(const QuadraticModule& M, const ModuleVector& x, const ModuleVector& y) {
    M.require_vector(x);
    M.require_vector(y);
    RingElement s = RingElement::zero(M.group());
    for (std::size_t i = 0; i < M.rank(); ++i) {
        if (x.coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < M.rank(); ++j) {
            if (y.coords[j].is_zero() || M.gram(i, j).is_zero()) continue;
            s = s + x.coords[i] * M.gram(i, j) * y.coords[j].involute();
        }
    }
    return s;
}

RingElement mu_representative(const QuadraticModule& M, const ModuleVector& x) {
    M.require_vector(x);
    RingElement s = RingElement::zero(M.group());
    for (std::size_t i = 0; i < M.rank(); ++i) {
        if (x.coords[i].is_zero()) continue;
        s = s + x.coords[i] * M.mu_basis()[i] * x.coords[i].involute();
        for (std::size_t j = i + 1; j < M.rank(); ++j) {
            if (x.coords[j].is_zero() || M.gram(i, j).is_zero()) continue;
            s = s + x.coords[i] * M.gram(i, j) * x.coords[j].involute();
        }
    }
    return s;
}

RingElement mu(const QuadraticModule& M, const ModuleVector& x) {
    return reduce_mod_lambda(mu_representative(M, x), M.context());
}

QuadraticModule orthogonal_sum(const QuadraticModule& M1, const QuadraticModule& M2) {
    if (!(M1.context() == M2.context()))
        throw PreconditionError("module.context", "orthogonal sum requires equal contexts");
    const GroupPtr& G = M1.group();
    const std::size_t n1 = M1.rank(), n2 = M2.rank(), n = n1 + n2;
    Matrix gram(n, std::vector<RingElement>(n, RingElement::zero(G)));
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) gram[i][j] = M1.gram(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) gram[n1 + i][n1 + j] = M2.gram(i, j);
    std::vector<RingElement> mu;
    mu.reserve(n);
    mu.insert(mu.end(), M1.mu_basis().begin(), M1.mu_basis().end());
    mu.insert(mu.end(), M2.mu_basis().begin(), M2.mu_basis().end());
    std::optional<NonsingularityCertificate> cert;
    if (M1.certificate() && M2.certificate()) {
        Matrix inv(n, std::vector<RingElement>(n, RingElement::zero(G)));
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j)
                inv[i][j] = M1.certificate()->inverse_gram[i][j];
        for (std::size_t i = 0; i < n2; ++i)
            for (std::size_t j = 0; j < n2; ++j)
                inv[n1 + i][n1 + j] = M2.certificate()->inverse_gram[i][j];
        cert = NonsingularityCertificate{std::move(inv)};
    }
    return QuadraticModule(M1.context(), std::move(gram), std::move(mu), std::move(cert));
}

bool is_isotropic(const QuadraticModule& M, const ModuleVector& x) {
    return mu(M, x).is_zero();
}

namespace {

// Collect a deterministic pool of group elements for the bounded dual search:
// identity, everything in the supports of x and the Gram matrix, and their
// inverses, in canonical order.
std::vector<GroupElement> search_elements(const QuadraticModule& M, const ModuleVector& x) {
    const GroupPtr& G = M.group();
    std::vector<GroupElement> pool;
    auto push = [&](const GroupElement& g) {
        pool.push_back(g);
        pool.push_back(G->inverse(g));
    };
    push(G->identity());
    for (const auto& c : x.coords)
        for (const auto& t : c.terms()) push(t.first);
    for (const auto& row : M.gram())
        for (const auto& e : row)
            for (const auto& t : e.terms()) push(t.first);
    std::sort(pool.begin(), pool.end(), [&](const GroupElement& a, const GroupElement& b) {
        return G->compare(a, b) < 0;
    });
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    const std::size_t cap = 12;
    if (pool.size() > cap) pool.resize(cap);
    return pool;
}

} // namespace

UnimodularityResult is_unimodular(const QuadraticModule& M, const ModuleVector& x,
                                  const std::optional<ModuleVector>& witness,
                                  long coefficient_bound) {
    M.require_vector(x);
    const GroupPtr& G = M.group();
    const RingElement one = RingElement::one(G);

    auto accept = [&](const ModuleVector& y) -> std::optional<ModuleVector> {
        RingElement pairing = inner(M, x, y);
        if (pairing.is_one()) return y;
        if (pairing.is_trivial_unit()) {
            // <x, cy> = <x,y> conj(c); choosing c = conj(pairing^{-1})
            // normalizes the pairing to 1.
            RingElement c = pairing.trivial_unit_inverse().involute();
            ModuleVector scaled = vec_scale(c, y);
            if (inner(M, x, scaled).is_one()) return scaled;
        }
        return std::nullopt;
    };

    if (witness) {
        M.require_vector(*witness);
        if (auto y = accept(*witness)) return {Unimodularity::Yes, std::move(*y)};
        return {Unimodularity::No, std::nullopt};
    }

    if (!M.certificate())
        throw PreconditionError("module.certificate",
                                "unimodularity without witness needs a nonsingularity "
                                "certificate");

    // Explicit dual through the certificate: if coordinate i0 of x is a
    // trivial unit s, then y with conj(y_j) = N_{j,i0} s^{-1} satisfies
    // <x, y> = 1 exactly.
    const auto& inv = M.certificate()->inverse_gram;
    for (std::size_t i0 = 0; i0 < M.rank(); ++i0) {
        if (!x.coords[i0].is_trivial_unit()) continue;
        RingElement s_inv = x.coords[i0].trivial_unit_inverse();
        ModuleVector y = zero_vector(M);
        for (std::size_t j = 0; j < M.rank(); ++j)
            y.coords[j] = (inv[j][i0] * s_inv).involute();
        if (auto z = accept(y)) return {Unimodularity::Yes, std::move(*z)};
    }

    // Bounded search: vectors supported on at most two coordinates with
    // single-term coefficients c*g, 0 < |c| <= bound, g from a fixed pool.
    std::vector<GroupElement> pool = search_elements(M, x);
    std::vector<RingElement> scalars;
    for (long c = 1; c <= coefficient_bound; ++c)
        for (const auto& g : pool) {
            scalars.push_back(RingElement::term(Int(c), g, G));
            scalars.push_back(RingElement::term(Int(-c), g, G));
        }
    const std::size_t n = M.rank();
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& ci : scalars) {
            ModuleVector y = zero_vector(M);
            y.coords[i] = ci;
            if (auto z = accept(y)) return {Unimodularity::Yes, std::move(*z)};
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (const auto& ci : scalars)
                for (const auto& cj : scalars) {
                    ModuleVector y = zero_vector(M);
                    y.coords[i] = ci;
                    y.coords[j] = cj;
                    if (auto z = accept(y)) return {Unimodularity::Yes, std::move(*z)};
                }
    return {Unimodularity::Unknown, std::nullopt};
}

} // namespace qmr
