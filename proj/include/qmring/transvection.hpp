#pragma once

#include "qmring/forms.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qmr {

using ModulePtr = std::shared_ptr<const QuadraticModule>;

// Isometry of a free quadratic module as a matrix over A. Row i holds the
// coordinates of the image of basis vector e_i, so that for a left-coefficient
// vector x the action is (x * R)_j = sum_i x_i R_ij and composition in
// application order is the plain matrix product.
struct IsometryMatrix {
    std::vector<std::vector<RingElement>> rows;

    std::size_t rank() const { return rows.size(); }
    ModuleVector act(const ModuleVector& x) const;
    bool operator==(const IsometryMatrix&) const = default;
};

IsometryMatrix identity_isometry(const QuadraticModule& M);
IsometryMatrix isometry_product(const IsometryMatrix& first_applied,
                                const IsometryMatrix& then_applied);
// Block sum: the first block acts on the leading coordinates.
IsometryMatrix isometry_block_sum(const IsometryMatrix& a, const IsometryMatrix& b,
                                  const GroupPtr& G);

// The transvection sigma_{u,a,v}: x |-> x + <x,v>u - conj(lambda)<x,u>v
//                                        - conj(lambda)<x,u> a u,
// defined when <u,v> = 0, mu(u) = 0 and mu(v) = [a]. This is the
// left-module form of the classical formula: the arguments sit in the
// slot the form is linear in, which is what makes the map A-linear.
class Transvection {
public:
    // Validates the three defining conditions; throws PreconditionError
    // naming the failed one.
    static Transvection make(ModulePtr M, ModuleVector u, RingElement a, ModuleVector v);
    // No validation; for mutation tests and the finite-ring wrapper.
    static Transvection unchecked(ModulePtr M, ModuleVector u, RingElement a, ModuleVector v);

    const QuadraticModule& module() const { return *M_; }
    const ModulePtr& module_ptr() const { return M_; }
    const ModuleVector& u() const { return u_; }
    const RingElement& a() const { return a_; }
    const ModuleVector& v() const { return v_; }

    ModuleVector apply(const ModuleVector& x) const;

    // sigma_{u,a,v}^{-1} = sigma_{u, conj(a), -v}; derived from the
    // composition rule and pinned by the round-trip tests.
    Transvection inverse() const;

private:
    Transvection(ModulePtr M, ModuleVector u, RingElement a, ModuleVector v)
        : M_(std::move(M)), u_(std::move(u)), a_(std::move(a)), v_(std::move(v)) {}

    ModulePtr M_;
    ModuleVector u_;
    RingElement a_;
    ModuleVector v_;
};

IsometryMatrix matrix_of(const Transvection& t);

// Composite of transvections on a common module; ts[0] is applied first
// (i.e. stands rightmost in the usual sigma_k ... sigma_1 notation).
IsometryMatrix compose(const std::vector<Transvection>& ts);
IsometryMatrix compose_matrices(const std::vector<IsometryMatrix>& ms);

struct IsometryReport {
    bool pass = true;
    std::string failure;         // empty when pass
    std::string counterexample;  // serialized description of the first failure
};

// Checks form and mu preservation exactly on all basis pairs plus `samples`
// pseudo-random vectors drawn from `seed`.
IsometryReport verify_isometry(const Transvection& t, int samples = 32,
                               std::uint64_t seed = 0);

} // namespace qmr
