#include "qmring/transvection.hpp"

#include "qmring/sampler.hpp"

#include <sstream>

namespace qmr {

ModuleVector IsometryMatrix::act(const ModuleVector& x) const {
    const std::size_t n = rows.size();
    if (x.coords.size() != n)
        throw PreconditionError("vector.dimension", "vector length differs from matrix rank");
    if (n == 0) return x;
    const GroupPtr& G = rows[0][0].group();
    ModuleVector out;
    out.coords.assign(n, RingElement::zero(G));
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j].is_zero()) continue;
            out.coords[j] = out.coords[j] + x.coords[i] * rows[i][j];
        }
    }
    return out;
}

IsometryMatrix identity_isometry(const QuadraticModule& M) {
    const std::size_t n = M.rank();
    IsometryMatrix m;
    m.rows.assign(n, std::vector<RingElement>(n, RingElement::zero(M.group())));
    for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = RingElement::one(M.group());
    return m;
}

IsometryMatrix isometry_product(const IsometryMatrix& first_applied,
                                const IsometryMatrix& then_applied) {
    const std::size_t n = first_applied.rank();
    if (then_applied.rank() != n)
        throw PreconditionError("isometry.rank", "matrix ranks differ");
    IsometryMatrix out;
    out.rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ModuleVector row;
        row.coords = first_applied.rows[i];
        out.rows.push_back(then_applied.act(row).coords);
    }
    return out;
}

IsometryMatrix isometry_block_sum(const IsometryMatrix& a, const IsometryMatrix& b,
                                  const GroupPtr& G) {
    const std::size_t na = a.rank(), nb = b.rank(), n = na + nb;
    IsometryMatrix out;
    out.rows.assign(n, std::vector<RingElement>(n, RingElement::zero(G)));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) out.rows[i][j] = a.rows[i][j];
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) out.rows[na + i][na + j] = b.rows[i][j];
    return out;
}

Transvection Transvection::make(ModulePtr M, ModuleVector u, RingElement a, ModuleVector v) {
    M->require_vector(u);
    M->require_vector(v);
    if (!(*a.group() == *M->group()))
        throw PreconditionError("transvection.a", "a lives in a different group ring");
    if (!inner(*M, u, v).is_zero())
        throw PreconditionError("transvection.orthogonality", "<u,v> != 0");
    if (!mu(*M, u).is_zero())
        throw PreconditionError("transvection.isotropy", "mu(u) != 0");
    if (!reduce_mod_lambda(mu_representative(*M, v) - a, M->context()).is_zero())
        throw PreconditionError("transvection.refinement", "mu(v) != [a]");
    return Transvection(std::move(M), std::move(u), std::move(a), std::move(v));
}

Transvection Transvection::unchecked(ModulePtr M, ModuleVector u, RingElement a,
                                     ModuleVector v) {
    return Transvection(std::move(M), std::move(u), std::move(a), std::move(v));
}

ModuleVector Transvection::apply(const ModuleVector& x) const {
    const QuadraticModule& M = *M_;
    M.require_vector(x);
    RingElement xv = inner(M, x, v_);
    RingElement xu = inner(M, x, u_);
    RingElement lam_bar = M.context().lambda().involute();
    ModuleVector out = vec_add(x, vec_scale(xv, u_));
    out = vec_sub(out, vec_scale(lam_bar * xu, v_));
    out = vec_sub(out, vec_scale(lam_bar * xu * a_, u_));
    return out;
}

Transvection Transvection::inverse() const {
    return Transvection(M_, u_, a_.involute(), vec_neg(v_));
}

IsometryMatrix matrix_of(const Transvection& t) {
    const QuadraticModule& M = t.module();
    IsometryMatrix m;
    m.rows.reserve(M.rank());
    for (std::size_t i = 0; i < M.rank(); ++i)
        m.rows.push_back(t.apply(basis_vector(M, i)).coords);
    return m;
}

IsometryMatrix compose_matrices(const std::vector<IsometryMatrix>& ms) {
    if (ms.empty())
        throw PreconditionError("isometry.compose", "empty composite needs a module rank");
    IsometryMatrix acc = ms[0];
    for (std::size_t i = 1; i < ms.size(); ++i) acc = isometry_product(acc, ms[i]);
    return acc;
}

IsometryMatrix compose(const std::vector<Transvection>& ts) {
    if (ts.empty())
        throw PreconditionError("isometry.compose", "empty transvection list");
    const QuadraticModule& M = ts[0].module();
    for (const auto& t : ts)
        if (&t.module() != &M && !(t.module().context() == M.context() &&
                                   t.module().gram() == M.gram()))
            throw PreconditionError("isometry.module", "transvections on different modules");
    IsometryMatrix acc = matrix_of(ts[0]);
    for (std::size_t i = 1; i < ts.size(); ++i)
        acc = isometry_product(acc, matrix_of(ts[i]));
    return acc;
}

namespace {

std::string describe_pair(std::size_t i, std::size_t j, bool random) {
    std::ostringstream os;
    if (random)
        os << "random sample #" << i << "," << j;
    else
        os << "basis pair (e" << i << ", e" << j << ")";
    return os.str();
}

} // namespace

IsometryReport verify_isometry(const Transvection& t, int samples, std::uint64_t seed) {
    const QuadraticModule& M = t.module();
    IsometryReport report;
    const std::size_t n = M.rank();

    std::vector<ModuleVector> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) images.push_back(t.apply(basis_vector(M, i)));

    for (std::size_t i = 0; i < n; ++i) {
        RingElement m_before = mu(M, basis_vector(M, i));
        RingElement m_after = mu(M, images[i]);
        if (m_before != m_after) {
            report.pass = false;
            report.failure = "mu not preserved";
            report.counterexample = describe_pair(i, i, false);
            return report;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (inner(M, images[i], images[j]) != M.gram(i, j)) {
                report.pass = false;
                report.failure = "inner product not preserved";
                report.counterexample = describe_pair(i, j, false);
                return report;
            }
        }
    }

    Sampler sampler(seed == 0 ? 0x5eedULL : seed);
    for (int s = 0; s < samples; ++s) {
        ModuleVector x = sampler.vector(M, 3, 2);
        ModuleVector y = sampler.vector(M, 3, 2);
        ModuleVector tx = t.apply(x), ty = t.apply(y);
        if (inner(M, tx, ty) != inner(M, x, y)) {
            report.pass = false;
            report.failure = "inner product not preserved";
            report.counterexample = describe_pair(s, s, true);
            return report;
        }
        if (mu(M, tx) != mu(M, x)) {
            report.pass = false;
            report.failure = "mu not preserved";
            report.counterexample = describe_pair(s, s, true);
            return report;
        }
    }
    return report;
}

} // namespace qmr
