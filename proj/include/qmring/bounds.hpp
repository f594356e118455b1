#pragma once

#include "qmring/ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace qmr {

// d = n + 1 and the stable bound n + 2, where the fundamental group has a
// finite-index free-abelian subgroup of rank n. Anchors: finite -> (1, 2),
// infinite dihedral -> (2, 3), free-abelian rank n -> (n+1, n+2).
struct StabilityBound {
    long n = 0;
    long d = 0;
    long summands = 0;
};

StabilityBound stability_bound_for_rank(long n);
StabilityBound stability_bound(const GroupDescription& g);

// A finitely generated virtually abelian group presented as an extension
// 1 -> Gamma -> pi -> G -> 1 with Gamma free-abelian of rank n and G finite
// acting on Gamma through integer matrices.
struct VirtuallyAbelianInput {
    std::size_t n = 0;
    GroupDescription G;
    // Per G-element n x n integer matrices; action[g] applied to exponent
    // columns. Must be a homomorphism with action[0] = I.
    std::vector<std::vector<std::vector<long>>> action;
    std::vector<int> omega_gamma; // sign per Gamma generator
    std::vector<int> omega_g;     // sign per G element (validated, optional use)

    void validate() const;
    GroupPtr gamma_ring_group() const; // A0 = Z[Gamma^omega]
};

// Generators of R = (A0)^G (orbit sums) or of the norm subring R0, with the
// enumeration bound embedded so the certificate cannot be mistaken for an
// unbounded statement.
struct GeneratorsCertificate {
    std::string ring; // "R" or "R0"
    GroupPtr group;   // the A0 group (free abelian rank n)
    std::vector<RingElement> generators;
    long degree_bound = 0;
    std::vector<std::string> trace; // per-generator provenance notes
};

// Orbit sums of all Laurent monomials of degree <= bound (degree = total
// absolute exponent), deduplicated by orbit; every output is verified
// G-fixed by applying the action directly.
GeneratorsCertificate invariant_generators(const VirtuallyAbelianInput& input,
                                           long degree_bound);

// Norms r * conj(r) of the R-generators, closed under products while the
// degree stays within the bound; every output is verified G-fixed.
GeneratorsCertificate norm_generators(const VirtuallyAbelianInput& input,
                                      const GeneratorsCertificate& cert_r,
                                      long degree_bound);

// Apply g in G to an element of A0 (monomial exponents through the matrix).
RingElement apply_group_action(const VirtuallyAbelianInput& input, std::size_t g_index,
                               const RingElement& x);

long ring_degree(const RingElement& x); // max total absolute exponent / word size

// Bounded finite-generation certificate: checks that every monomial of the
// group ring with degree <= bound is an integer combination of
// (product of ring generators) * candidate. A bounded certificate, not a
// proof for all degrees.
struct FgInput {
    GroupDescription group; // free abelian or finite
    std::vector<RingElement> ring_generators;
    std::vector<RingElement> candidates;
    long degree_bound = 0;
};

struct FgDegreeReport {
    long degree = 0;
    long checked = 0;
    std::vector<std::string> failures; // serialized monomials that failed
};

struct FgReport {
    bool pass = true;
    long degree_bound = 0;
    std::vector<FgDegreeReport> per_degree;
};

FgReport verify_fg_module(const FgInput& input);

// Exact membership in the Z-span of a set of integer vectors, by Hermite-
// style reduction with one pivot row per coordinate.
class ZLattice {
public:
    void insert(std::vector<Int> v);
    bool contains(std::vector<Int> v) const;

private:
    std::map<std::size_t, std::vector<Int>> rows_; // pivot index -> vector
};

} // namespace qmr
