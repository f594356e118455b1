#include "qmring/group.hpp"

#include <algorithm>

namespace qmr {

GroupElement finite_element(std::uint32_t index) {
    GroupElement g;
    g.index = index;
    return g;
}

GroupElement abelian_element(std::vector<std::int64_t> exponents) {
    GroupElement g;
    g.exponents = std::move(exponents);
    return g;
}

GroupElement dihedral_element(std::string word) {
    GroupElement g;
    g.word = std::move(word);
    return g;
}

GroupDescription GroupDescription::finite(std::vector<std::vector<std::uint32_t>> table,
                                          std::vector<int> omega) {
    GroupDescription g;
    g.kind_ = GroupKind::Finite;
    g.table_ = std::move(table);
    g.omega_table_ = std::move(omega);
    g.validate();
    return g;
}

GroupDescription GroupDescription::free_abelian(std::size_t rank, std::vector<int> omega) {
    GroupDescription g;
    g.kind_ = GroupKind::FreeAbelian;
    g.rank_ = rank;
    g.omega_gens_ = std::move(omega);
    g.validate();
    return g;
}

GroupDescription GroupDescription::infinite_dihedral(int omega_a, int omega_b) {
    GroupDescription g;
    g.kind_ = GroupKind::InfiniteDihedral;
    g.omega_a_ = omega_a;
    g.omega_b_ = omega_b;
    g.validate();
    return g;
}

void GroupDescription::validate() const {
    switch (kind_) {
    case GroupKind::Finite: {
        const std::size_t n = table_.size();
        if (n == 0)
            throw PreconditionError("group.table", "finite group table is empty");
        for (const auto& row : table_) {
            if (row.size() != n)
                throw PreconditionError("group.table", "multiplication table is not square");
            for (auto e : row)
                if (e >= n)
                    throw PreconditionError("group.table", "table entry out of range");
        }
        // identity at index 0
        for (std::size_t i = 0; i < n; ++i)
            if (table_[0][i] != i || table_[i][0] != i)
                throw PreconditionError("group.identity", "index 0 is not an identity");
        // associativity, exhaustively (desk scale)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
                        throw PreconditionError("group.associativity",
                                                "multiplication table is not associative");
        // inverses
        auto& inv = const_cast<std::vector<std::uint32_t>&>(inverse_);
        inv.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            bool found = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (table_[i][j] == 0 && table_[j][i] == 0) {
                    inv[i] = static_cast<std::uint32_t>(j);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw PreconditionError("group.inverse", "element has no inverse");
        }
        if (omega_table_.size() != n)
            throw PreconditionError("group.omega", "omega must assign a sign per element");
        for (int s : omega_table_)
            if (s != 1 && s != -1)
                throw PreconditionError("group.omega", "omega values must be +1 or -1");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (omega_table_[table_[i][j]] != omega_table_[i] * omega_table_[j])
                    throw PreconditionError("group.omega",
                                            "omega is not a homomorphism to {+1,-1}");
        break;
    }
    case GroupKind::FreeAbelian: {
        if (omega_gens_.size() != rank_)
            throw PreconditionError("group.omega", "omega must assign a sign per generator");
        for (int s : omega_gens_)
            if (s != 1 && s != -1)
                throw PreconditionError("group.omega", "omega values must be +1 or -1");
        break;
    }
    case GroupKind::InfiniteDihedral: {
        if ((omega_a_ != 1 && omega_a_ != -1) || (omega_b_ != 1 && omega_b_ != -1))
            throw PreconditionError("group.omega", "omega values must be +1 or -1");
        break;
    }
    }
}

bool GroupDescription::is_valid_element(const GroupElement& g) const {
    switch (kind_) {
    case GroupKind::Finite:
        return g.index < table_.size() && g.exponents.empty() && g.word.empty();
    case GroupKind::FreeAbelian:
        return g.index == 0 && g.exponents.size() == rank_ && g.word.empty();
    case GroupKind::InfiniteDihedral: {
        if (g.index != 0 || !g.exponents.empty()) return false;
        for (std::size_t i = 0; i < g.word.size(); ++i) {
            char c = g.word[i];
            if (c != 'a' && c != 'b') return false;
            if (i > 0 && g.word[i - 1] == c) return false; // must alternate
        }
        return true;
    }
    }
    return false;
}

void GroupDescription::require_valid(const GroupElement& g) const {
    if (!is_valid_element(g))
        throw PreconditionError("group.element", "element invalid for this group");
}

GroupElement GroupDescription::identity() const {
    switch (kind_) {
    case GroupKind::Finite:
        return finite_element(0);
    case GroupKind::FreeAbelian:
        return abelian_element(std::vector<std::int64_t>(rank_, 0));
    case GroupKind::InfiniteDihedral:
        return dihedral_element("");
    }
    return {};
}

GroupElement GroupDescription::mul(const GroupElement& g, const GroupElement& h) const {
    require_valid(g);
    require_valid(h);
    switch (kind_) {
    case GroupKind::Finite:
        return finite_element(table_[g.index][h.index]);
    case GroupKind::FreeAbelian: {
        std::vector<std::int64_t> e(rank_);
        for (std::size_t i = 0; i < rank_; ++i)
            e[i] = g.exponents[i] + h.exponents[i];
        return abelian_element(std::move(e));
    }
    case GroupKind::InfiniteDihedral: {
        // Concatenate and cancel a^2 = b^2 = 1 at the seam. Both inputs
        // alternate, so the result is alternating once the seam is clean.
        std::string w = g.word;
        std::size_t pos = 0;
        const std::string& v = h.word;
        while (!w.empty() && pos < v.size() && w.back() == v[pos]) {
            w.pop_back();
            ++pos;
        }
        w.append(v, pos, std::string::npos);
        return dihedral_element(std::move(w));
    }
    }
    return {};
}

GroupElement GroupDescription::inverse(const GroupElement& g) const {
    require_valid(g);
    switch (kind_) {
    case GroupKind::Finite:
        return finite_element(inverse_[g.index]);
    case GroupKind::FreeAbelian: {
        std::vector<std::int64_t> e(rank_);
        for (std::size_t i = 0; i < rank_; ++i) e[i] = -g.exponents[i];
        return abelian_element(std::move(e));
    }
    case GroupKind::InfiniteDihedral: {
        // Each letter is an involution, so the inverse is the reversed word.
        std::string w(g.word.rbegin(), g.word.rend());
        return dihedral_element(std::move(w));
    }
    }
    return {};
}

int GroupDescription::omega(const GroupElement& g) const {
    require_valid(g);
    switch (kind_) {
    case GroupKind::Finite:
        return omega_table_[g.index];
    case GroupKind::FreeAbelian: {
        int s = 1;
        for (std::size_t i = 0; i < rank_; ++i)
            if (omega_gens_[i] == -1 && (g.exponents[i] % 2 != 0)) s = -s;
        return s;
    }
    case GroupKind::InfiniteDihedral: {
        int s = 1;
        for (char c : g.word)
            s *= (c == 'a') ? omega_a_ : omega_b_;
        return s;
    }
    }
    return 1;
}

int GroupDescription::compare(const GroupElement& g, const GroupElement& h) const {
    switch (kind_) {
    case GroupKind::Finite:
        return g.index < h.index ? -1 : (g.index > h.index ? 1 : 0);
    case GroupKind::FreeAbelian: {
        for (std::size_t i = 0; i < rank_; ++i) {
            if (g.exponents[i] < h.exponents[i]) return -1;
            if (g.exponents[i] > h.exponents[i]) return 1;
        }
        return 0;
    }
    case GroupKind::InfiniteDihedral: {
        if (g.word.size() != h.word.size())
            return g.word.size() < h.word.size() ? -1 : 1;
        if (g.word < h.word) return -1;
        if (g.word > h.word) return 1;
        return 0;
    }
    }
    return 0;
}

} // namespace qmr
