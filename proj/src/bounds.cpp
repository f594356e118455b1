#include "qmring/bounds.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qmr {

StabilityBound stability_bound_for_rank(long n) {
    if (n < 0) throw PreconditionError("bound.rank", "rank must be nonnegative");
    return {n, n + 1, n + 2};
}

StabilityBound stability_bound(const GroupDescription& g) {
    switch (g.kind()) {
    case GroupKind::Finite:
        return stability_bound_for_rank(0);
    case GroupKind::FreeAbelian:
        return stability_bound_for_rank(static_cast<long>(g.rank()));
    case GroupKind::InfiniteDihedral:
        // C2 * C2 contains the infinite cyclic subgroup <ab> of index two.
        return stability_bound_for_rank(1);
    }
    throw PreconditionError("bound.group", "unsupported group kind");
}

void VirtuallyAbelianInput::validate() const {
    if (G.kind() != GroupKind::Finite)
        throw PreconditionError("va.group", "G must be a finite group");
    const std::size_t gsize = G.size();
    if (action.size() != gsize)
        throw PreconditionError("va.action", "one matrix per G element required");
    for (const auto& mat : action) {
        if (mat.size() != n)
            throw PreconditionError("va.action", "action matrices must be n x n");
        for (const auto& row : mat)
            if (row.size() != n)
                throw PreconditionError("va.action", "action matrices must be n x n");
    }
    if (omega_gamma.size() != n)
        throw PreconditionError("va.omega", "omega_gamma must assign a sign per generator");
    for (int s : omega_gamma)
        if (s != 1 && s != -1)
            throw PreconditionError("va.omega", "omega values must be +1 or -1");
    if (!omega_g.empty()) {
        if (omega_g.size() != gsize)
            throw PreconditionError("va.omega", "omega_g must assign a sign per G element");
        for (std::size_t i = 0; i < gsize; ++i)
            for (std::size_t j = 0; j < gsize; ++j)
                if (omega_g[G.table()[i][j]] != omega_g[i] * omega_g[j])
                    throw PreconditionError("va.omega", "omega_g is not a homomorphism");
    }

    auto matmul = [this](const std::vector<std::vector<long>>& a,
                         const std::vector<std::vector<long>>& b) {
        std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    // identity at index 0, homomorphism on the table
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (action[0][i][j] != (i == j ? 1 : 0))
                throw PreconditionError("va.action", "action of the identity must be I");
    for (std::size_t g = 0; g < gsize; ++g)
        for (std::size_t h = 0; h < gsize; ++h)
            if (matmul(action[g], action[h]) != action[G.table()[g][h]])
                throw PreconditionError("va.action", "action is not a homomorphism");
    // Determinant +-1 (implied by the homomorphism property; checked
    // explicitly for the certificate). Bareiss elimination, exact.
    for (const auto& mat : action) {
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = Int(mat[i][j]);
        Int det = 1;
        Int prev = 1;
        bool singular = false;
        for (std::size_t k = 0; k + 1 < n && !singular; ++k) {
            if (m[k][k] == 0) {
                std::size_t piv = k + 1;
                while (piv < n && m[piv][k] == 0) ++piv;
                if (piv == n) {
                    singular = true;
                    break;
                }
                std::swap(m[k], m[piv]);
                det = -det;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            prev = m[k][k];
        }
        if (n > 0) det = singular ? Int(0) : det * m[n - 1][n - 1];
        else det = 1;
        if (det != 1 && det != -1)
            throw PreconditionError("va.action", "action matrix has determinant != +-1");
    }
    // The action must preserve omega on Gamma: omega(g . e_i) = omega(e_i).
    for (std::size_t g = 0; g < gsize; ++g)
        for (std::size_t i = 0; i < n; ++i) {
            int s = 1;
            for (std::size_t j = 0; j < n; ++j)
                if (omega_gamma[j] == -1 && (action[g][j][i] % 2 != 0)) s = -s;
            if (s != omega_gamma[i])
                throw PreconditionError("va.omega",
                                        "G action does not preserve omega on Gamma");
        }
}

GroupPtr VirtuallyAbelianInput::gamma_ring_group() const {
    return std::make_shared<GroupDescription>(
        GroupDescription::free_abelian(n, omega_gamma));
}

long ring_degree(const RingElement& x) {
    long deg = 0;
    for (const auto& [g, c] : x.terms()) {
        long d = 0;
        switch (x.group()->kind()) {
        case GroupKind::FreeAbelian:
            for (auto e : g.exponents) d += std::abs(e);
            break;
        case GroupKind::Finite:
            d = (g.index == 0) ? 0 : 1;
            break;
        case GroupKind::InfiniteDihedral:
            d = static_cast<long>(g.word.size());
            break;
        }
        deg = std::max(deg, d);
    }
    return deg;
}

RingElement apply_group_action(const VirtuallyAbelianInput& input, std::size_t g_index,
                               const RingElement& x) {
    const auto& mat = input.action.at(g_index);
    std::vector<RingElement::Term> terms;
    for (const auto& [g, c] : x.terms()) {
        std::vector<std::int64_t> e(input.n, 0);
        for (std::size_t i = 0; i < input.n; ++i)
            for (std::size_t j = 0; j < input.n; ++j)
                e[i] += static_cast<std::int64_t>(mat[i][j]) * g.exponents[j];
        terms.push_back({abelian_element(std::move(e)), c});
    }
    return RingElement::from_terms(std::move(terms), x.group());
}

namespace {

std::string exps_key(const std::vector<std::int64_t>& e) {
    std::ostringstream os;
    for (auto x : e) os << x << ',';
    return os.str();
}

// All exponent vectors with total absolute degree <= bound, in a
// deterministic order (degree, then lexicographic).
std::vector<std::vector<std::int64_t>> monomials_up_to(std::size_t n, long bound) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> e(n, 0);
    if (n == 0) {
        out.push_back(e);
        return out;
    }
    for (auto& x : e) x = -bound;
    while (true) {
        long deg = 0;
        for (auto x : e) deg += std::llabs(x);
        if (deg <= bound) out.push_back(e);
        std::size_t i = 0;
        while (i < n && e[i] == bound) {
            e[i] = -bound;
            ++i;
        }
        if (i == n) break;
        ++e[i];
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
                  long da = 0, db = 0;
                  for (auto x : a) da += std::llabs(x);
                  for (auto x : b) db += std::llabs(x);
                  if (da != db) return da < db;
                  return a < b;
              });
    return out;
}

std::string ring_elem_key(const RingElement& x) {
    std::ostringstream os;
    for (const auto& [g, c] : x.terms()) {
        os << c.get_str() << '*';
        os << g.index << '(';
        for (auto e : g.exponents) os << e << ',';
        os << ')' << g.word << ';';
    }
    return os.str();
}

} // namespace

GeneratorsCertificate invariant_generators(const VirtuallyAbelianInput& input,
                                           long degree_bound) {
    input.validate();
    if (degree_bound < 1)
        throw PreconditionError("invariants.degree", "degree bound must be >= 1");
    GroupPtr A0 = input.gamma_ring_group();
    GeneratorsCertificate cert;
    cert.ring = "R";
    cert.group = A0;
    cert.degree_bound = degree_bound;

    std::set<std::string> seen_orbits;
    for (const auto& e : monomials_up_to(input.n, degree_bound)) {
        // Orbit of the monomial under G.
        std::set<std::vector<std::int64_t>> orbit;
        for (std::size_t g = 0; g < input.G.size(); ++g) {
            std::vector<std::int64_t> img(input.n, 0);
            for (std::size_t i = 0; i < input.n; ++i)
                for (std::size_t j = 0; j < input.n; ++j)
                    img[i] += static_cast<std::int64_t>(input.action[g][i][j]) * e[j];
            orbit.insert(std::move(img));
        }
        std::string rep = exps_key(*orbit.begin());
        if (seen_orbits.count(rep)) continue;
        seen_orbits.insert(rep);

        std::vector<RingElement::Term> terms;
        for (const auto& x : orbit) terms.push_back({abelian_element(x), Int(1)});
        RingElement sum = RingElement::from_terms(std::move(terms), A0);
        // Verify G-fixed by direct action.
        for (std::size_t g = 0; g < input.G.size(); ++g)
            if (apply_group_action(input, g, sum) != sum)
                throw InternalError("orbit sum is not G-fixed");
        cert.generators.push_back(std::move(sum));
        std::ostringstream note;
        note << "orbit_sum(" << exps_key(e) << ")";
        cert.trace.push_back(note.str());
    }
    return cert;
}

GeneratorsCertificate norm_generators(const VirtuallyAbelianInput& input,
                                      const GeneratorsCertificate& cert_r,
                                      long degree_bound) {
    input.validate();
    if (cert_r.ring != "R")
        throw PreconditionError("norms.input", "expected an R generators certificate");
    GeneratorsCertificate cert;
    cert.ring = "R0";
    cert.group = cert_r.group;
    cert.degree_bound = degree_bound;

    std::set<std::string> seen;
    std::vector<RingElement> basics;
    for (std::size_t i = 0; i < cert_r.generators.size(); ++i) {
        const RingElement& r = cert_r.generators[i];
        RingElement norm = r * r.involute();
        std::string key = ring_elem_key(norm);
        if (seen.count(key)) continue;
        seen.insert(key);
        basics.push_back(norm);
        cert.generators.push_back(norm);
        std::ostringstream note;
        note << "norm_of(generator " << i << ")";
        cert.trace.push_back(note.str());
    }
    // Close under products while the degree stays within the bound.
    std::vector<RingElement> frontier = cert.generators;
    while (!frontier.empty()) {
        std::vector<RingElement> next;
        for (const auto& x : frontier)
            for (const auto& b : basics) {
                RingElement prod = x * b;
                if (ring_degree(prod) > degree_bound) continue;
                std::string key = ring_elem_key(prod);
                if (seen.count(key)) continue;
                seen.insert(key);
                cert.generators.push_back(prod);
                cert.trace.push_back("product_of_norms");
                next.push_back(prod);
            }
        frontier = std::move(next);
    }
    for (const auto& gen : cert.generators)
        for (std::size_t g = 0; g < input.G.size(); ++g)
            if (apply_group_action(input, g, gen) != gen)
                throw InternalError("norm generator is not G-fixed");
    return cert;
}

void ZLattice::insert(std::vector<Int> v) {
    while (true) {
        std::size_t pivot = v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot == v.size()) return; // zero vector
        if (v[pivot] < 0)
            for (auto& x : v) x = -x;
        auto it = rows_.find(pivot);
        if (it == rows_.end()) {
            rows_.emplace(pivot, std::move(v));
            return;
        }
        std::vector<Int>& b = it->second;
        // Replace (v, b) by (combination with gcd pivot, reduced remainder).
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v[pivot].get_mpz_t(),
                   b[pivot].get_mpz_t());
        std::vector<Int> combo(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) combo[i] = s * v[i] + t * b[i];
        Int cv = v[pivot] / g, cb = b[pivot] / g;
        std::vector<Int> rem(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) rem[i] = cb * v[i] - cv * b[i];
        b = std::move(combo);
        v = std::move(rem); // pivot coordinate is now zero; continue below it
    }
}

bool ZLattice::contains(std::vector<Int> v) const {
    while (true) {
        std::size_t pivot = v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot == v.size()) return true;
        auto it = rows_.find(pivot);
        if (it == rows_.end()) return false;
        const std::vector<Int>& b = it->second;
        if (v[pivot] % b[pivot] != 0) return false;
        Int q = v[pivot] / b[pivot];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= q * b[i];
    }
}

namespace {

// All target monomials for the fg check, as ring elements.
std::vector<RingElement> target_monomials(const GroupDescription& G, const GroupPtr& Gp,
                                          long bound) {
    std::vector<RingElement> out;
    switch (G.kind()) {
    case GroupKind::FreeAbelian:
        for (const auto& e : monomials_up_to(G.rank(), bound))
            out.push_back(RingElement::term(1, abelian_element(e), Gp));
        break;
    case GroupKind::Finite:
        for (std::uint32_t i = 0; i < G.size(); ++i)
            out.push_back(RingElement::term(1, finite_element(i), Gp));
        break;
    default:
        throw PreconditionError("fg.group", "unsupported group for the fg check");
    }
    return out;
}

} // namespace

FgReport verify_fg_module(const FgInput& input) {
    GroupPtr Gp = std::make_shared<GroupDescription>(input.group);
    if (input.degree_bound < 0)
        throw PreconditionError("fg.degree", "degree bound must be >= 0");
    for (const auto& x : input.ring_generators)
        if (!(*x.group() == *Gp))
            throw PreconditionError("fg.context", "ring generator over a different group");
    for (const auto& x : input.candidates)
        if (!(*x.group() == *Gp))
            throw PreconditionError("fg.context", "candidate over a different group");

    // Products of ring generators, closed up to the degree bound and at most
    // degree_bound factors deep (so degree-zero generators terminate).
    std::vector<RingElement> products{RingElement::one(Gp)};
    std::set<std::string> seen{ring_elem_key(products[0])};
    std::vector<RingElement> frontier = products;
    for (long depth = 0; depth < input.degree_bound; ++depth) {
        std::vector<RingElement> next;
        for (const auto& x : frontier)
            for (const auto& g : input.ring_generators) {
                RingElement prod = x * g;
                if (ring_degree(prod) > input.degree_bound) continue;
                std::string key = ring_elem_key(prod);
                if (seen.count(key)) continue;
                seen.insert(key);
                products.push_back(prod);
                next.push_back(prod);
            }
        frontier = std::move(next);
    }

    // Column vectors P * candidate on a shared monomial coordinate basis.
    std::vector<RingElement> columns;
    for (const auto& p : products)
        for (const auto& c : input.candidates) columns.push_back(p * c);

    std::vector<RingElement> targets = target_monomials(input.group, Gp, input.degree_bound);

    std::map<std::string, std::size_t> coord_index;
    auto index_of = [&](const GroupElement& g) {
        std::string key = exps_key(g.exponents) + "#" + std::to_string(g.index) + g.word;
        auto it = coord_index.find(key);
        if (it != coord_index.end()) return it->second;
        std::size_t id = coord_index.size();
        coord_index.emplace(key, id);
        return id;
    };
    for (const auto& col : columns)
        for (const auto& t : col.terms()) index_of(t.first);
    for (const auto& tgt : targets)
        for (const auto& t : tgt.terms()) index_of(t.first);

    const std::size_t dim = coord_index.size();
    auto to_vec = [&](const RingElement& x) {
        std::vector<Int> v(dim, Int(0));
        for (const auto& [g, c] : x.terms()) v[index_of(g)] = c;
        return v;
    };

    ZLattice lattice;
    for (const auto& col : columns) lattice.insert(to_vec(col));

    FgReport report;
    report.degree_bound = input.degree_bound;
    std::map<long, FgDegreeReport> by_degree;
    for (const auto& tgt : targets) {
        long deg = ring_degree(tgt);
        auto& dr = by_degree[deg];
        dr.degree = deg;
        ++dr.checked;
        if (!lattice.contains(to_vec(tgt))) {
            report.pass = false;
            std::ostringstream os;
            const auto& g = tgt.terms()[0].first;
            if (input.group.kind() == GroupKind::FreeAbelian)
                os << "monomial(" << exps_key(g.exponents) << ")";
            else
                os << "element(" << g.index << ")";
            dr.failures.push_back(os.str());
        }
    }
    for (auto& [deg, dr] : by_degree) report.per_degree.push_back(std::move(dr));
    return report;
}

} // namespace qmr
