#include "qmring/ring.hpp"

#include <algorithm>
#include <numeric>

namespace qmr {

namespace {

// Sort by the group order, merge equal keys, drop zero coefficients.
std::vector<RingElement::Term> canonicalize(std::vector<RingElement::Term> terms,
                                            const GroupDescription& G) {
    std::sort(terms.begin(), terms.end(),
              [&G](const RingElement::Term& a, const RingElement::Term& b) {
                  return G.compare(a.first, b.first) < 0;
              });
    std::vector<RingElement::Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const RingElement::Term& t) { return t.second == 0; });
    return out;
}

} // namespace

RingElement RingElement::one(const GroupPtr& group) {
    return term(1, group->identity(), group);
}

RingElement RingElement::integer(const Int& n, const GroupPtr& group) {
    return term(n, group->identity(), group);
}

RingElement RingElement::term(const Int& coeff, GroupElement g, const GroupPtr& group) {
    group->require_valid(g);
    RingElement x(group);
    if (coeff != 0) x.terms_.push_back({std::move(g), coeff});
    return x;
}

RingElement RingElement::from_terms(std::vector<Term> terms, const GroupPtr& group) {
    for (const auto& t : terms) group->require_valid(t.first);
    RingElement x(group);
    x.terms_ = canonicalize(std::move(terms), *group);
    return x;
}

bool RingElement::is_one() const {
    return terms_.size() == 1 && terms_[0].second == 1 &&
           terms_[0].first == group_->identity();
}

bool RingElement::is_integer() const {
    return terms_.size() == 1 && terms_[0].first == group_->identity();
}

bool RingElement::is_trivial_unit(Int* sign, GroupElement* g) const {
    if (terms_.size() != 1) return false;
    const Int& c = terms_[0].second;
    if (c != 1 && c != -1) return false;
    if (sign) *sign = c;
    if (g) *g = terms_[0].first;
    return true;
}

void RingElement::check_same_group(const RingElement& rhs) const {
    if (!group_ || !rhs.group_ || !(*group_ == *rhs.group_))
        throw PreconditionError("ring.group", "operands belong to different group rings");
}

RingElement RingElement::operator+(const RingElement& rhs) const {
    check_same_group(rhs);
    std::vector<Term> terms = terms_;
    terms.insert(terms.end(), rhs.terms_.begin(), rhs.terms_.end());
    RingElement out(group_);
    out.terms_ = canonicalize(std::move(terms), *group_);
    return out;
}

RingElement RingElement::operator-() const {
    RingElement out(group_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

RingElement RingElement::operator-(const RingElement& rhs) const { return *this + (-rhs); }

RingElement RingElement::operator*(const RingElement& rhs) const {
    check_same_group(rhs);
    std::vector<Term> terms;
    terms.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& [g, c] : terms_)
        for (const auto& [h, d] : rhs.terms_)
            terms.push_back({group_->mul(g, h), c * d});
    RingElement out(group_);
    out.terms_ = canonicalize(std::move(terms), *group_);
    return out;
}

bool RingElement::operator==(const RingElement& rhs) const {
    check_same_group(rhs);
    return terms_ == rhs.terms_;
}

RingElement RingElement::involute() const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& [g, c] : terms_)
        terms.push_back({group_->inverse(g), c * group_->omega(g)});
    RingElement out(group_);
    out.terms_ = canonicalize(std::move(terms), *group_);
    return out;
}

RingElement RingElement::trivial_unit_inverse() const {
    Int sign;
    GroupElement g;
    if (!is_trivial_unit(&sign, &g))
        throw PreconditionError("ring.unit", "element is not a trivial unit +-g");
    return term(sign, group_->inverse(g), group_);
}

Int RingElement::augmentation() const {
    Int s = 0;
    for (const auto& t : terms_) s += t.second;
    return s;
}

RingElement ring_add(const RingElement& x, const RingElement& y) { return x + y; }
RingElement ring_neg(const RingElement& x) { return -x; }
RingElement ring_mul(const RingElement& x, const RingElement& y) { return x * y; }
RingElement involute(const RingElement& x) { return x.involute(); }

FormContext::FormContext(GroupPtr group, RingElement lambda)
    : group_(std::move(group)), lambda_(std::move(lambda)) {
    if (!(*lambda_.group() == *group_))
        throw PreconditionError("context.lambda", "lambda lives in a different group ring");
    if (!(lambda_ * lambda_.involute()).is_one())
        throw PreconditionError("context.lambda", "lambda * conj(lambda) != 1");
    // Centrality: it is enough to commute with every single group element
    // that can appear; check against the family's generators.
    auto commutes_with = [this](const GroupElement& g) {
        RingElement e = RingElement::term(1, g, group_);
        return lambda_ * e == e * lambda_;
    };
    switch (group_->kind()) {
    case GroupKind::Finite:
        for (std::uint32_t i = 0; i < group_->size(); ++i)
            if (!commutes_with(finite_element(i)))
                throw PreconditionError("context.lambda", "lambda is not central");
        break;
    case GroupKind::FreeAbelian:
        break; // commutative
    case GroupKind::InfiniteDihedral:
        if (!commutes_with(dihedral_element("a")) || !commutes_with(dihedral_element("b")))
            throw PreconditionError("context.lambda", "lambda is not central");
        break;
    }
}

FormContext FormContext::minimal(GroupPtr group) {
    RingElement one = RingElement::one(group);
    return FormContext(std::move(group), std::move(one));
}

bool FormContext::lambda_is_one() const { return lambda_.is_one(); }

void FormContext::require_lambda_one(const char* where) const {
    if (!lambda_is_one())
        throw PreconditionError("context.lambda",
                                std::string(where) + " requires lambda = +1");
}

namespace detail {

RingElement coefficients_mod(const RingElement& x, long modulus) {
    if (modulus <= 0) return x;
    const Int m = modulus;
    std::vector<RingElement::Term> terms;
    for (const auto& [g, c] : x.terms())
        terms.push_back({g, mod_canonical(c, m)});
    return RingElement::from_terms(std::move(terms), x.group());
}

RingElement reduce_min_param(const RingElement& x, long modulus) {
    const GroupPtr& G = x.group();
    std::vector<RingElement::Term> folded;
    for (const auto& [g, c] : x.terms()) {
        GroupElement inv = G->inverse(g);
        int cmp = G->compare(g, inv);
        if (cmp == 0) {
            // Self-inverse. Spanning vector g - omega(g) g^{-1} is 0 when
            // omega(g) = +1 and 2g when omega(g) = -1.
            if (G->omega(g) == -1) {
                long fold = (modulus > 0) ? std::gcd(2L, modulus) : 2L;
                folded.push_back({g, mod_canonical(c, Int(fold))});
            } else {
                folded.push_back({g, c});
            }
        } else if (cmp < 0) {
            folded.push_back({g, c});
        } else {
            // Fold the larger element of the orbit into the smaller one:
            // subtract c * (g - omega(g) g^{-1}).
            folded.push_back({inv, c * G->omega(g)});
        }
    }
    RingElement out = RingElement::from_terms(std::move(folded), G);
    return coefficients_mod(out, modulus);
}

} // namespace detail

RingElement reduce_mod_lambda(const RingElement& x, const FormContext& ctx) {
    if (!(*x.group() == *ctx.group()))
        throw PreconditionError("ring.group", "element and context groups differ");
    ctx.require_lambda_one("reduce_mod_lambda");
    return detail::reduce_min_param(x, 0);
}

bool in_lambda_min(const RingElement& x, const FormContext& ctx) {
    return reduce_mod_lambda(x, ctx).is_zero();
}

} // namespace qmr
