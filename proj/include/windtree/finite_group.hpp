#pragma once

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "windtree/errors.hpp"

namespace windtree {

// Finite group given by its multiplication table.  Subgroups are bitmasks, so
// the loader caps the order at 64 (fixtures stay at or below order 24).
//
// Table file format: first line the order n, then n lines of n indices, where
// line i column j holds the index of the product i*j.
struct FiniteGroupTable {
    int order = 0;
    std::vector<std::vector<int>> table;
    int identity = -1;
    std::vector<int> inverse;

    int mul(int x, int y) const { return table[x][y]; }

    static FiniteGroupTable parse(std::istream& in) {
        FiniteGroupTable g;
        if (!(in >> g.order)) throw ValidationError("group table: missing order");
        if (g.order < 1 || g.order > 64) throw ValidationError("group table: order out of range");
        g.table.assign(g.order, std::vector<int>(g.order));
        for (int i = 0; i < g.order; ++i)
            for (int j = 0; j < g.order; ++j) {
                if (!(in >> g.table[i][j]) || g.table[i][j] < 0 || g.table[i][j] >= g.order)
                    throw ValidationError("group table: bad entry");
            }
        g.validate();
        return g;
    }

    static FiniteGroupTable load(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw ValidationError("cannot open group table: " + path);
        return parse(f);
    }

    // Checks identity, inverses and full associativity.
    void validate() {
        identity = -1;
        for (int e = 0; e < order; ++e) {
            bool ok = true;
            for (int x = 0; x < order && ok; ++x)
                ok = table[e][x] == x && table[x][e] == x;
            if (ok) { identity = e; break; }
        }
        if (identity < 0) throw ValidationError("group table: no identity element");
        inverse.assign(order, -1);
        for (int x = 0; x < order; ++x) {
            for (int y = 0; y < order; ++y)
                if (table[x][y] == identity && table[y][x] == identity) { inverse[x] = y; break; }
            if (inverse[x] < 0) throw ValidationError("group table: missing inverse");
        }
        for (int x = 0; x < order; ++x)
            for (int y = 0; y < order; ++y)
                for (int z = 0; z < order; ++z)
                    if (table[table[x][y]][z] != table[x][table[y][z]])
                        throw ValidationError("group table: not associative");
    }
};

using SubgroupMask = uint64_t;

inline bool mask_has(SubgroupMask m, int x) { return (m >> x) & 1; }

inline bool is_subgroup(const FiniteGroupTable& g, SubgroupMask m) {
    if (!mask_has(m, g.identity)) return false;
    for (int x = 0; x < g.order; ++x) {
        if (!mask_has(m, x)) continue;
        if (!mask_has(m, g.inverse[x])) return false;
        for (int y = 0; y < g.order; ++y)
            if (mask_has(m, y) && !mask_has(m, g.mul(x, y))) return false;
    }
    return true;
}

// Exhaustive conjugation check.
inline bool is_normal_subgroup(const FiniteGroupTable& g, SubgroupMask m) {
    if (!is_subgroup(g, m)) return false;
    for (int x = 0; x < g.order; ++x)
        for (int a = 0; a < g.order; ++a)
            if (mask_has(m, a) && !mask_has(m, g.mul(g.mul(x, a), g.inverse[x])))
                return false;
    return true;
}

inline SubgroupMask closure(const FiniteGroupTable& g, SubgroupMask seed) {
    SubgroupMask m = seed | (SubgroupMask(1) << g.identity);
    for (;;) {
        SubgroupMask next = m;
        for (int x = 0; x < g.order; ++x) {
            if (!mask_has(m, x)) continue;
            next |= SubgroupMask(1) << g.inverse[x];
            for (int y = 0; y < g.order; ++y)
                if (mask_has(m, y)) next |= SubgroupMask(1) << g.mul(x, y);
        }
        if (next == m) return m;
        m = next;
    }
}

inline std::vector<SubgroupMask> all_subgroups(const FiniteGroupTable& g) {
    std::set<SubgroupMask> known;
    known.insert(closure(g, 0));
    for (;;) {
        std::set<SubgroupMask> next = known;
        for (SubgroupMask m : known)
            for (int x = 0; x < g.order; ++x)
                if (!mask_has(m, x)) next.insert(closure(g, m | (SubgroupMask(1) << x)));
        if (next.size() == known.size()) break;
        known.swap(next);
    }
    return {known.begin(), known.end()};
}

inline std::vector<SubgroupMask> normal_subgroups(const FiniteGroupTable& g) {
    std::vector<SubgroupMask> out;
    for (SubgroupMask m : all_subgroups(g))
        if (is_normal_subgroup(g, m)) out.push_back(m);
    return out;
}

// Brute-force check that [A,B] is contained in the intersection of two normal
// subgroups.  A false verdict signals a bug somewhere, never valid input.
inline bool oracle_commutator_containment(const FiniteGroupTable& g, SubgroupMask a_mask,
                                          SubgroupMask b_mask) {
    if (!is_normal_subgroup(g, a_mask)) throw NotNormal("first subgroup mask is not normal");
    if (!is_normal_subgroup(g, b_mask)) throw NotNormal("second subgroup mask is not normal");
    for (int a = 0; a < g.order; ++a) {
        if (!mask_has(a_mask, a)) continue;
        for (int b = 0; b < g.order; ++b) {
            if (!mask_has(b_mask, b)) continue;
            int c = g.mul(g.mul(a, b), g.mul(g.inverse[a], g.inverse[b]));
            if (!mask_has(a_mask & b_mask, c)) return false;
        }
    }
    return true;
}

}  // namespace windtree
