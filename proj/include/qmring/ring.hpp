#pragma once

#include "qmring/group.hpp"

#include <utility>
#include <vector>

namespace qmr {

// Element of the group ring A = Z[pi^omega]: a finite formal sum of group
// elements with nonzero integer coefficients, stored sorted by the group's
// total order. The involution is g |-> omega(g) g^{-1}, extended additively.
class RingElement {
public:
    using Term = std::pair<GroupElement, Int>;

    RingElement() = default;
    explicit RingElement(GroupPtr group) : group_(std::move(group)) {}

    static RingElement zero(GroupPtr group) { return RingElement(std::move(group)); }
    static RingElement one(const GroupPtr& group);
    static RingElement integer(const Int& n, const GroupPtr& group);
    static RingElement term(const Int& coeff, GroupElement g, const GroupPtr& group);
    // Accepts terms in any order, merges duplicates, drops zeros.
    static RingElement from_terms(std::vector<Term> terms, const GroupPtr& group);

    const GroupPtr& group() const { return group_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_one() const;
    // Nonzero integer multiple of the identity?
    bool is_integer() const;
    // +g or -g for a single group element; returns sign and element.
    bool is_trivial_unit(Int* sign = nullptr, GroupElement* g = nullptr) const;

    RingElement operator+(const RingElement& rhs) const;
    RingElement operator-(const RingElement& rhs) const;
    RingElement operator-() const;
    RingElement operator*(const RingElement& rhs) const;
    RingElement& operator+=(const RingElement& rhs) { return *this = *this + rhs; }
    RingElement& operator-=(const RingElement& rhs) { return *this = *this - rhs; }
    RingElement& operator*=(const RingElement& rhs) { return *this = *this * rhs; }

    bool operator==(const RingElement& rhs) const;
    bool operator!=(const RingElement& rhs) const { return !(*this == rhs); }

    // Sum of group elements reversed and sign-twisted by omega.
    RingElement involute() const;

    // Inverse of a trivial unit +-g. Anything else has no inverse here.
    RingElement trivial_unit_inverse() const;

    // Coefficient sum (augmentation).
    Int augmentation() const;

private:
    void check_same_group(const RingElement& rhs) const;

    GroupPtr group_;
    std::vector<Term> terms_;
};

RingElement ring_add(const RingElement& x, const RingElement& y);
RingElement ring_neg(const RingElement& x);
RingElement ring_mul(const RingElement& x, const RingElement& y);
RingElement involute(const RingElement& x);

// The unitary ring (A, lambda, Lambda_min) the quadratic machinery works
// over. Only the minimal parameter Lambda = {a - conj a} is implemented;
// lambda is carried as data and validated (central, lambda * conj lambda = 1)
// so the restriction to +1 is a checked precondition, not an assumption.
class FormContext {
public:
    FormContext(GroupPtr group, RingElement lambda);
    static FormContext minimal(GroupPtr group);

    const GroupPtr& group() const { return group_; }
    const RingElement& lambda() const { return lambda_; }
    bool lambda_is_one() const;
    void require_lambda_one(const char* where) const;

    bool operator==(const FormContext& rhs) const {
        return *group_ == *rhs.group_ && lambda_ == rhs.lambda_;
    }

private:
    GroupPtr group_;
    RingElement lambda_;
};

// Canonical representative of x + Lambda_min. For each orbit {g, g^{-1}} the
// coefficient of the larger element is folded into the smaller one; for
// self-inverse g with omega(g) = -1 the coefficient is reduced mod 2; for
// self-inverse g with omega(g) = +1 nothing reduces. Idempotent.
RingElement reduce_mod_lambda(const RingElement& x, const FormContext& ctx);

// Is x in Lambda_min (i.e. does it reduce to zero)?
bool in_lambda_min(const RingElement& x, const FormContext& ctx);

namespace detail {
// Shared implementation; modulus = 0 means coefficients in Z, modulus = m > 0
// reduces coefficients mod m after folding (used by the finite-ring wrapper
// in the transport search).
RingElement reduce_min_param(const RingElement& x, long modulus);
RingElement coefficients_mod(const RingElement& x, long modulus);
} // namespace detail

} // namespace qmr
