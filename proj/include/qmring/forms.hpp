#pragma once

#include "qmring/ring.hpp"

#include <optional>
#include <vector>

namespace qmr {

class QuadraticModule;

// Vector in a free module, x = sum_i a_i e_i with left coefficients a_i.
struct ModuleVector {
    std::vector<RingElement> coords;

    bool operator==(const ModuleVector&) const = default;
    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
};

ModuleVector zero_vector(const QuadraticModule& M);
ModuleVector basis_vector(const QuadraticModule& M, std::size_t i);
ModuleVector vec_add(const ModuleVector& x, const ModuleVector& y);
ModuleVector vec_sub(const ModuleVector& x, const ModuleVector& y);
ModuleVector vec_neg(const ModuleVector& x);
ModuleVector vec_scale(const RingElement& a, const ModuleVector& x); // a on the left

// Exact witness of nonsingularity: gram * inverse = inverse * gram = I.
struct NonsingularityCertificate {
    std::vector<std::vector<RingElement>> inverse_gram;
};

// Free quadratic module (M, <.,.>, mu) over (A, lambda, Lambda_min), given by
// its Gram matrix G_ij = <e_i, e_j> and the reduced refinement values
// mu_i = mu(e_i). Construction enforces:
//   - hermitian symmetry  G_ji = lambda * conj(G_ij),
//   - reduced mu entries,
//   - the diagonal class identity  mu_i + lambda conj(mu_i) == G_ii
//     (mod Lambda_min; over Z[pi^omega] the two sides are then equal exactly,
//     since the difference is both symmetric and skew).
class QuadraticModule {
public:
    QuadraticModule(FormContext ctx,
                    std::vector<std::vector<RingElement>> gram,
                    std::vector<RingElement> mu_basis,
                    std::optional<NonsingularityCertificate> certificate = std::nullopt);

    // H(A^k): basis p_1..p_k, q_1..q_k, <p_i,q_j> = delta_ij,
    // <q_i,p_j> = lambda delta_ij, mu = 0, bundled certificate.
    static QuadraticModule hyperbolic(const FormContext& ctx, std::size_t k);

    const FormContext& context() const { return ctx_; }
    const GroupPtr& group() const { return ctx_.group(); }
    std::size_t rank() const { return gram_.size(); }
    const std::vector<std::vector<RingElement>>& gram() const { return gram_; }
    const RingElement& gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }
    const std::vector<RingElement>& mu_basis() const { return mu_; }
    const std::optional<NonsingularityCertificate>& certificate() const { return cert_; }

    void require_vector(const ModuleVector& x) const;

private:
    FormContext ctx_;
    std::vector<std::vector<RingElement>> gram_;
    std::vector<RingElement> mu_;
    std::optional<NonsingularityCertificate> cert_;
};

// <x, y> = sum_ij a_i G_ij conj(b_j). Linear in x for left scalars,
// conjugate-linear in y: inner(ax, y) = a inner(x, y),
// inner(x, by) = inner(x, y) conj(b).
RingElement inner(const QuadraticModule& M, const ModuleVector& x, const ModuleVector& y);

// mu(sum a_i e_i) = sum_i a_i mu_i conj(a_i) + sum_{i<j} a_i G_ij conj(a_j),
// reduced mod Lambda_min. The unique extension of mu_basis; its correctness
// is pinned by the polarization property test.
RingElement mu(const QuadraticModule& M, const ModuleVector& x);

// Same computations without the final reduction / with a coefficient modulus;
// used by the finite-ring transport wrapper.
RingElement mu_representative(const QuadraticModule& M, const ModuleVector& x);

QuadraticModule orthogonal_sum(const QuadraticModule& M1, const QuadraticModule& M2);

bool is_isotropic(const QuadraticModule& M, const ModuleVector& x);

enum class Unimodularity { Yes, No, Unknown };

struct UnimodularityResult {
    Unimodularity status = Unimodularity::Unknown;
    std::optional<ModuleVector> witness; // pairs with x to exactly 1
};

// Three-valued: with a supplied witness this verifies it (normalizing a
// trivial-unit pairing to 1); without one it builds a dual through the
// nonsingularity certificate when some coordinate is +-g, then falls back to
// a bounded search (support <= 2 coordinates, single-term coefficients of
// magnitude <= bound) and reports Unknown when the search is exhausted.
UnimodularityResult is_unimodular(const QuadraticModule& M, const ModuleVector& x,
                                  const std::optional<ModuleVector>& witness = std::nullopt,
                                  long coefficient_bound = 2);

} // namespace qmr
