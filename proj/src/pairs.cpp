#include "qmring/pairs.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace qmr {

namespace detail {

RingElement ring_mod(const RingElement& x, long modulus) {
    return qmr::detail::coefficients_mod(x, modulus);
}

ModuleVector vector_mod(const ModuleVector& x, long modulus) {
    ModuleVector out = x;
    for (auto& c : out.coords) c = ring_mod(c, modulus);
    return out;
}

bool in_lambda_min_mod(const RingElement& x, long modulus) {
    return qmr::detail::reduce_min_param(x, modulus).is_zero();
}

} // namespace detail

HyperbolicPair complete_pair(const QuadraticModule& M, const ModuleVector& p,
                             const ModuleVector& witness) {
    M.require_vector(p);
    M.require_vector(witness);
    M.context().require_lambda_one("complete_pair");
    if (!mu(M, p).is_zero())
        throw PreconditionError("pair.isotropy", "mu(p) != 0");
    RingElement pairing = inner(M, p, witness);
    ModuleVector y = witness;
    if (!pairing.is_one()) {
        if (!pairing.is_trivial_unit())
            throw PreconditionError("pair.witness",
                                    "witness not unimodular-normalizable: <p,y> "
                                    "is not a trivial unit");
        // <p, c y> = <p, y> conj(c): scale by c = conj(<p,y>^{-1}).
        RingElement c = pairing.trivial_unit_inverse().involute();
        y = vec_scale(c, y);
        if (!inner(M, p, y).is_one())
            throw InternalError("witness normalization failed");
    }
    RingElement m = mu(M, y);
    HyperbolicPair pair{p, vec_sub(y, vec_scale(m, p))};
    if (!inner(M, pair.p, pair.q).is_one())
        throw InternalError("complete_pair: <p,q> != 1");
    if (!mu(M, pair.q).is_zero())
        throw InternalError("complete_pair: mu(q) != 0");
    return pair;
}

const char* family_name(GeneratorFamily f) {
    switch (f) {
    case GeneratorFamily::EU_P: return "EU_P";
    case GeneratorFamily::EU_Pbar: return "EU_Pbar";
    case GeneratorFamily::H_E_P: return "H_E_P";
    case GeneratorFamily::H_E_Pbar: return "H_E_Pbar";
    case GeneratorFamily::EU_P_V: return "EU_P_V";
    case GeneratorFamily::EU_Pbar_V: return "EU_Pbar_V";
    }
    return "?";
}

std::optional<GeneratorFamily> family_from_name(const std::string& name) {
    for (GeneratorFamily f :
         {GeneratorFamily::EU_P, GeneratorFamily::EU_Pbar, GeneratorFamily::H_E_P,
          GeneratorFamily::H_E_Pbar, GeneratorFamily::EU_P_V, GeneratorFamily::EU_Pbar_V})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

QuadraticModule PairModule::build() const {
    QuadraticModule H = QuadraticModule::hyperbolic(ctx, p_rank);
    if (!V) return H;
    if (!(V->context() == ctx))
        throw PreconditionError("pair.context", "V context differs");
    // Over rings with 2-torsion the diagonal identity must hold exactly,
    // not just mod Lambda, for validated transvections to be isometries.
    for (std::size_t i = 0; i < V->rank(); ++i) {
        RingElement diag = V->mu_basis()[i] + V->mu_basis()[i].involute() - V->gram(i, i);
        if (!detail::ring_mod(diag, modulus).is_zero())
            throw PreconditionError("pair.diagonal",
                                    "V diagonal must equal mu + conj(mu) exactly");
    }
    return orthogonal_sum(*V, H);
}

namespace {

std::string element_key(const GroupElement& g) {
    std::ostringstream os;
    os << g.index << '|';
    for (auto e : g.exponents) os << e << ',';
    os << '|' << g.word;
    return os.str();
}

std::string ring_key(const RingElement& x) {
    std::ostringstream os;
    for (const auto& [g, c] : x.terms()) os << element_key(g) << ':' << c.get_str() << ';';
    return os.str();
}

std::string vector_key(const ModuleVector& v) {
    std::string out;
    for (const auto& c : v.coords) {
        out += ring_key(c);
        out += '/';
    }
    return out;
}

std::string matrix_key(const IsometryMatrix& m) {
    std::string out;
    for (const auto& row : m.rows)
        for (const auto& e : row) {
            out += ring_key(e);
            out += '/';
        }
    return out;
}

std::string pair_key(const HyperbolicPair& pr) {
    return vector_key(pr.p) + "#" + vector_key(pr.q);
}

IsometryMatrix matrix_mod(const IsometryMatrix& m, long modulus) {
    IsometryMatrix out = m;
    for (auto& row : out.rows)
        for (auto& e : row) e = detail::ring_mod(e, modulus);
    return out;
}

// Group elements of bounded size, in canonical order.
std::vector<GroupElement> element_pool(const GroupDescription& G, long size_bound) {
    std::vector<GroupElement> out;
    switch (G.kind()) {
    case GroupKind::Finite:
        for (std::uint32_t i = 0; i < G.size(); ++i) out.push_back(finite_element(i));
        break;
    case GroupKind::FreeAbelian: {
        std::vector<std::int64_t> e(G.rank(), -size_bound);
        if (G.rank() == 0) {
            out.push_back(abelian_element({}));
            break;
        }
        while (true) {
            out.push_back(abelian_element(e));
            std::size_t i = 0;
            while (i < e.size() && e[i] == size_bound) {
                e[i] = -size_bound;
                ++i;
            }
            if (i == e.size()) break;
            ++e[i];
        }
        std::sort(out.begin(), out.end(), [&G](const GroupElement& a, const GroupElement& b) {
            return G.compare(a, b) < 0;
        });
        break;
    }
    case GroupKind::InfiniteDihedral: {
        out.push_back(dihedral_element(""));
        std::string wa = "a", wb = "b";
        for (long len = 1; len <= size_bound; ++len) {
            out.push_back(dihedral_element(wa));
            out.push_back(dihedral_element(wb));
            wa.push_back(len % 2 ? 'b' : 'a');
            wb.push_back(len % 2 ? 'a' : 'b');
        }
        std::sort(out.begin(), out.end(), [&G](const GroupElement& a, const GroupElement& b) {
            return G.compare(a, b) < 0;
        });
        break;
    }
    }
    return out;
}

// Single-term scalars c*g, coefficient order +1, -1, +2, -2, ... (or 1..m-1
// when a modulus is set), elements in the group order.
std::vector<RingElement> scalar_pool(const GroupPtr& G, long modulus,
                                     const EnumerationBounds& bounds) {
    std::vector<GroupElement> elems = element_pool(*G, bounds.element_size);
    std::vector<Int> coeffs;
    if (modulus > 0) {
        for (long c = 1; c < modulus; ++c) coeffs.push_back(Int(c));
    } else {
        for (long c = 1; c <= bounds.height; ++c) {
            coeffs.push_back(Int(c));
            coeffs.push_back(Int(-c));
        }
    }
    std::vector<RingElement> out;
    out.reserve(coeffs.size() * elems.size());
    for (const auto& c : coeffs)
        for (const auto& g : elems) out.push_back(RingElement::term(c, g, G));
    return out;
}

// All vectors supported on [lo, hi) with entries zero or from `scalars`,
// excluding the zero vector when `allow_zero` is false.
std::vector<ModuleVector> vector_pool(const QuadraticModule& M, std::size_t lo,
                                      std::size_t hi, const std::vector<RingElement>& scalars,
                                      bool allow_zero) {
    std::vector<ModuleVector> out;
    const std::size_t dim = hi - lo;
    if (dim == 0) {
        if (allow_zero) out.push_back(zero_vector(M));
        return out;
    }
    const std::size_t base = scalars.size() + 1;
    std::vector<std::size_t> odo(dim, 0);
    while (true) {
        bool all_zero = std::all_of(odo.begin(), odo.end(),
                                    [](std::size_t k) { return k == 0; });
        if (!all_zero || allow_zero) {
            ModuleVector v = zero_vector(M);
            for (std::size_t i = 0; i < dim; ++i)
                if (odo[i] > 0) v.coords[lo + i] = scalars[odo[i] - 1];
            out.push_back(std::move(v));
        }
        std::size_t i = 0;
        while (i < dim && odo[i] == base - 1) {
            odo[i] = 0;
            ++i;
        }
        if (i == dim) break;
        ++odo[i];
    }
    return out;
}

struct FamilySupport {
    std::size_t u_lo, u_hi, v_lo, v_hi;
    bool v_may_be_zero;
};

FamilySupport family_support(GeneratorFamily f, std::size_t v_rank, std::size_t p_rank) {
    const std::size_t p_lo = v_rank, p_hi = v_rank + p_rank;
    const std::size_t q_lo = p_hi, q_hi = p_hi + p_rank;
    switch (f) {
    case GeneratorFamily::EU_P: return {p_lo, p_hi, p_lo, p_hi, true};
    case GeneratorFamily::EU_Pbar: return {q_lo, q_hi, q_lo, q_hi, true};
    case GeneratorFamily::H_E_P: return {p_lo, p_hi, q_lo, q_hi, false};
    case GeneratorFamily::H_E_Pbar: return {q_lo, q_hi, p_lo, p_hi, false};
    case GeneratorFamily::EU_P_V: return {p_lo, p_hi, 0, v_rank, false};
    case GeneratorFamily::EU_Pbar_V: return {q_lo, q_hi, 0, v_rank, false};
    }
    return {0, 0, 0, 0, false};
}

// Candidate representatives for the a-slot: the canonical representative of
// mu(v) plus a bounded set of Lambda_min multiples.
std::vector<RingElement> a_candidates(const QuadraticModule& M, const ModuleVector& v,
                                      long modulus, const EnumerationBounds& bounds) {
    const GroupPtr& G = M.group();
    RingElement base = qmr::detail::reduce_min_param(mu_representative(M, v), modulus);
    std::vector<RingElement> out{base};
    if (bounds.lambda_terms > 0) {
        std::vector<GroupElement> elems = element_pool(*G, bounds.element_size);
        std::vector<Int> coeffs;
        if (modulus > 0)
            for (long c = 1; c < modulus; ++c) coeffs.push_back(Int(c));
        else
            for (long c = 1; c <= bounds.height; ++c) {
                coeffs.push_back(Int(c));
                coeffs.push_back(Int(-c));
            }
        for (const auto& g : elems) {
            RingElement span = RingElement::term(1, g, G) -
                               RingElement::term(G->omega(g), G->inverse(g), G);
            if (span.is_zero()) continue;
            for (const auto& c : coeffs) {
                RingElement cand =
                    detail::ring_mod(base + RingElement::integer(c, G) * span, modulus);
                out.push_back(cand);
            }
        }
    }
    // Dedup, preserving order.
    std::vector<RingElement> dedup;
    std::vector<std::string> seen;
    for (const auto& a : out) {
        std::string k = ring_key(a);
        if (std::find(seen.begin(), seen.end(), k) == seen.end()) {
            seen.push_back(k);
            dedup.push_back(a);
        }
    }
    return dedup;
}

} // namespace

std::vector<LabeledTransvection> enumerate_generators(const PairModule& pm,
                                                      GeneratorFamily family,
                                                      const EnumerationBounds& bounds) {
    ModulePtr M = std::make_shared<QuadraticModule>(pm.build());
    const long m = pm.modulus;
    FamilySupport sup = family_support(family, pm.v_rank(), pm.p_rank);
    std::vector<RingElement> scalars = scalar_pool(pm.ctx.group(), m, bounds);
    std::vector<ModuleVector> us = vector_pool(*M, sup.u_lo, sup.u_hi, scalars, false);
    std::vector<ModuleVector> vs =
        vector_pool(*M, sup.v_lo, sup.v_hi, scalars, sup.v_may_be_zero);

    std::vector<LabeledTransvection> out;
    std::unordered_map<std::string, bool> seen;
    IsometryMatrix id = matrix_mod(identity_isometry(*M), m);
    seen[matrix_key(id)] = true; // drop identity generators

    for (const auto& u : us) {
        if (!detail::in_lambda_min_mod(mu_representative(*M, u), m)) continue;
        for (const auto& v : vs) {
            if (!detail::ring_mod(inner(*M, u, v), m).is_zero()) continue;
            for (const auto& a : a_candidates(*M, v, m, bounds)) {
                Transvection t = Transvection::unchecked(M, u, a, v);
                IsometryMatrix mat = matrix_mod(matrix_of(t), m);
                std::string key = matrix_key(mat);
                if (seen.count(key)) continue;
                seen[key] = true;
                out.push_back({family, u, a, v});
            }
        }
    }
    return out;
}

bool is_hyperbolic_pair_mod(const QuadraticModule& M, long modulus,
                            const HyperbolicPair& pair) {
    if (pair.p.coords.size() != M.rank() || pair.q.coords.size() != M.rank()) return false;
    if (!detail::in_lambda_min_mod(mu_representative(M, pair.p), modulus)) return false;
    if (!detail::in_lambda_min_mod(mu_representative(M, pair.q), modulus)) return false;
    RingElement d = inner(M, pair.p, pair.q) - RingElement::one(M.group());
    return detail::ring_mod(d, modulus).is_zero();
}

TransportResult transport(const PairModule& pm, const HyperbolicPair& source,
                          const HyperbolicPair& target, long max_depth, long node_budget,
                          const EnumerationBounds& bounds) {
    if (pm.modulus < 2)
        throw PreconditionError("transport.modulus",
                                "transport requires a finite coefficient ring (modulus >= 2)");
    if (pm.p_rank < 1)
        throw PreconditionError("transport.rank", "transport requires rank(P) >= 1");
    ModulePtr M = std::make_shared<QuadraticModule>(pm.build());
    const long m = pm.modulus;

    TransportResult result;
    if (pm.p_rank < 2)
        result.warning = "rank(P) < 2: transitivity may genuinely fail at this rank";

    HyperbolicPair src{detail::vector_mod(source.p, m), detail::vector_mod(source.q, m)};
    HyperbolicPair tgt{detail::vector_mod(target.p, m), detail::vector_mod(target.q, m)};
    if (!is_hyperbolic_pair_mod(*M, m, src))
        throw PreconditionError("transport.pair", "source is not a hyperbolic pair");
    if (!is_hyperbolic_pair_mod(*M, m, tgt))
        throw PreconditionError("transport.pair", "target is not a hyperbolic pair");

    std::vector<LabeledTransvection> gens;
    for (GeneratorFamily f :
         {GeneratorFamily::EU_P, GeneratorFamily::EU_Pbar, GeneratorFamily::H_E_P,
          GeneratorFamily::H_E_Pbar, GeneratorFamily::EU_P_V, GeneratorFamily::EU_Pbar_V}) {
        auto list = enumerate_generators(pm, f, bounds);
        gens.insert(gens.end(), list.begin(), list.end());
    }
    std::vector<IsometryMatrix> mats;
    mats.reserve(gens.size());
    for (const auto& g : gens)
        mats.push_back(matrix_mod(matrix_of(Transvection::unchecked(M, g.u, g.a, g.v)), m));

    struct Node {
        HyperbolicPair state;
        long parent;
        std::size_t via;
        long depth;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, long> index;
    auto push = [&](HyperbolicPair st, long parent, std::size_t via, long depth) -> long {
        std::string key = pair_key(st);
        auto it = index.find(key);
        if (it != index.end()) return -1;
        nodes.push_back({std::move(st), parent, via, depth});
        long id = static_cast<long>(nodes.size()) - 1;
        index.emplace(std::move(key), id);
        return id;
    };

    push(src, -1, 0, 0);
    const std::string target_key = pair_key(tgt);
    long found = (pair_key(src) == target_key) ? 0 : -1;

    std::size_t head = 0;
    while (found < 0 && head < nodes.size()) {
        Node cur = nodes[head]; // copy: nodes may reallocate while expanding
        if (cur.depth >= max_depth) {
            ++head;
            continue;
        }
        for (std::size_t gi = 0; gi < mats.size() && found < 0; ++gi) {
            HyperbolicPair next{detail::vector_mod(mats[gi].act(cur.state.p), m),
                                detail::vector_mod(mats[gi].act(cur.state.q), m)};
            long id = push(std::move(next), static_cast<long>(head), gi, cur.depth + 1);
            if (id < 0) continue;
            if (static_cast<long>(nodes.size()) > node_budget) {
                result.outcome = TransportOutcome::BudgetExceeded;
                result.nodes_visited = static_cast<long>(nodes.size());
                result.depth = cur.depth + 1;
                return result;
            }
            if (pair_key(nodes[id].state) == target_key) found = id;
        }
        ++head;
    }

    result.nodes_visited = static_cast<long>(nodes.size());
    if (found < 0) {
        result.outcome = TransportOutcome::Exhausted;
        long max_d = 0;
        for (const auto& n : nodes) max_d = std::max(max_d, n.depth);
        result.depth = max_d;
        return result;
    }

    std::vector<std::size_t> via_reversed;
    for (long cur = found; nodes[cur].parent >= 0; cur = nodes[cur].parent)
        via_reversed.push_back(nodes[cur].via);
    std::reverse(via_reversed.begin(), via_reversed.end());
    for (std::size_t gi : via_reversed) result.word.push_back(gens[gi]);
    result.outcome = TransportOutcome::Found;
    result.depth = static_cast<long>(result.word.size());

    // Independent re-check: apply the word through the transvection formula.
    HyperbolicPair check = src;
    for (const auto& g : result.word) {
        Transvection t = Transvection::unchecked(M, g.u, g.a, g.v);
        check.p = detail::vector_mod(t.apply(check.p), m);
        check.q = detail::vector_mod(t.apply(check.q), m);
    }
    if (pair_key(check) != target_key)
        throw InternalError("transport: emitted word does not map source to target");
    return result;
}

std::vector<HyperbolicPair> enumerate_hyperbolic_pairs(const PairModule& pm) {
    if (pm.modulus < 2)
        throw PreconditionError("transport.modulus", "enumeration needs a finite ring");
    if (pm.ctx.group()->kind() != GroupKind::Finite)
        throw PreconditionError("transport.group", "enumeration needs a finite group");
    QuadraticModule M = pm.build();
    const std::size_t gsize = pm.ctx.group()->size();
    const std::size_t slots = M.rank() * gsize;
    double total = 1;
    for (std::size_t i = 0; i < slots; ++i) total *= static_cast<double>(pm.modulus);
    if (total > (1 << 20))
        throw PreconditionError("transport.statespace", "state space too large to enumerate");

    // All vectors: every coordinate is an arbitrary Z/m combination of the
    // group elements.
    std::vector<ModuleVector> all;
    std::vector<long> odo(slots, 0);
    const GroupPtr& G = pm.ctx.group();
    while (true) {
        ModuleVector v = zero_vector(M);
        for (std::size_t i = 0; i < M.rank(); ++i) {
            std::vector<RingElement::Term> terms;
            for (std::size_t j = 0; j < gsize; ++j) {
                long c = odo[i * gsize + j];
                if (c != 0)
                    terms.push_back({finite_element(static_cast<std::uint32_t>(j)), Int(c)});
            }
            v.coords[i] = RingElement::from_terms(std::move(terms), G);
        }
        all.push_back(std::move(v));
        std::size_t i = 0;
        while (i < slots && odo[i] == pm.modulus - 1) {
            odo[i] = 0;
            ++i;
        }
        if (i == slots) break;
        ++odo[i];
    }

    std::vector<HyperbolicPair> pairs;
    for (const auto& p : all)
        for (const auto& q : all) {
            HyperbolicPair cand{p, q};
            if (is_hyperbolic_pair_mod(M, pm.modulus, cand)) pairs.push_back(cand);
        }
    return pairs;
}

} // namespace qmr
