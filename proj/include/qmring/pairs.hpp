#pragma once

#include "qmring/transvection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmr {

// (p, q) with mu(p) = mu(q) = 0 and <p, q> = 1, all exact.
struct HyperbolicPair {
    ModuleVector p;
    ModuleVector q;
};

// Completes an isotropic p to a hyperbolic pair from a witness y whose
// pairing <p, y> is a trivial unit. The witness is scaled so <p, y'> = 1,
// then q = y' - m p with m the reduced representative of mu(y'). Validates
// the resulting pair exactly.
HyperbolicPair complete_pair(const QuadraticModule& M, const ModuleVector& p,
                             const ModuleVector& witness);

// Generator families for the transport subgroup acting on V perp H(P).
// P = span(p_1..p_r), Pbar = span(q_1..q_r), V = the leading summand.
enum class GeneratorFamily {
    EU_P,      // u, v in P
    EU_Pbar,   // u, v in Pbar
    H_E_P,     // u in P,    v in Pbar
    H_E_Pbar,  // u in Pbar, v in P
    EU_P_V,    // u in P,    v in V
    EU_Pbar_V, // u in Pbar, v in V
};

const char* family_name(GeneratorFamily f);
std::optional<GeneratorFamily> family_from_name(const std::string& name);

struct LabeledTransvection {
    GeneratorFamily family;
    ModuleVector u;
    RingElement a;
    ModuleVector v;
};

// Bounds for generator enumeration over the finite coefficient ring Z/m:
// coordinates run over single-term scalars c*g with c in Z/m (or |c| <=
// height over Z) and g of bounded size; `a` runs over the canonical
// representative plus bounded Lambda elements.
struct EnumerationBounds {
    long element_size = 1;  // group-element size bound (word length / exponent)
    long height = 1;        // coefficient magnitude when modulus == 0
    long lambda_terms = 1;  // extra Lambda_min multiples tried for the a-slot
};

// The module V perp H(P) with coefficients reduced mod `modulus`
// (modulus = 0 means Z). V may be absent (rank 0); its diagonal must satisfy
// the exact identity G_ii = mu_i + conj(mu_i) so that validated transvections
// are isometries even over rings with 2-torsion.
struct PairModule {
    FormContext ctx;
    std::optional<QuadraticModule> V;
    std::size_t p_rank = 1;
    long modulus = 0;

    QuadraticModule build() const; // V perp H(p_rank)
    std::size_t v_rank() const { return V ? V->rank() : 0; }
};

// All valid transvections of the family within the bounds, deduplicated by
// their matrix (identity dropped). Deterministic order.
std::vector<LabeledTransvection> enumerate_generators(const PairModule& pm,
                                                      GeneratorFamily family,
                                                      const EnumerationBounds& bounds = {});

// Everything the transport search needs about one candidate pair state.
bool is_hyperbolic_pair_mod(const QuadraticModule& M, long modulus,
                            const HyperbolicPair& pair);

enum class TransportOutcome { Found, Exhausted, BudgetExceeded };

struct TransportResult {
    TransportOutcome outcome = TransportOutcome::Exhausted;
    std::vector<LabeledTransvection> word; // word[0] applied first
    long depth = 0;                        // word length / depth reached
    long nodes_visited = 0;
    std::string warning; // set when rank(P) < 2, where transitivity may fail
};

// Breadth-first search over generator applications to the pair state.
// Deterministic: fixed generator order, shortest word, ties by enumeration
// order. The emitted word is re-verified by applying the transvections to
// the source independently of the search bookkeeping.
TransportResult transport(const PairModule& pm, const HyperbolicPair& source,
                          const HyperbolicPair& target, long max_depth,
                          long node_budget, const EnumerationBounds& bounds = {});

// Brute-force enumeration of all hyperbolic pairs of V perp H(P) over Z/m.
// Only usable when the group is finite or trivial and the state space is
// desk-sized; used by the transitivity checks.
std::vector<HyperbolicPair> enumerate_hyperbolic_pairs(const PairModule& pm);

namespace detail {
RingElement ring_mod(const RingElement& x, long modulus);
ModuleVector vector_mod(const ModuleVector& x, long modulus);
bool in_lambda_min_mod(const RingElement& x, long modulus);
} // namespace detail

} // namespace qmr
