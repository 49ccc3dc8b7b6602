#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "windtree/errors.hpp"

namespace windtree {

// One syllable of a freely reduced word: generator index and nonzero exponent.
struct Letter {
    int gen;
    int64_t exp;
    bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};

// Freely reduced word in abstract generators.  The empty word is the identity.
// Free reduction is the only simplification ever applied; whether a word is
// trivial in the group it maps into is always decided by evaluating it.
struct GroupWord {
    std::vector<Letter> letters;

    GroupWord() = default;

    static GroupWord one() { return GroupWord(); }

    static GroupWord generator(int gen, int64_t exp = 1) {
        GroupWord w;
        if (exp != 0) w.letters.push_back({gen, exp});
        return w;
    }

    bool is_empty() const { return letters.empty(); }

    int64_t letter_length() const {
        int64_t n = 0;
        for (const Letter& l : letters) n += l.exp < 0 ? -l.exp : l.exp;
        return n;
    }

    void push(int gen, int64_t exp) {
        if (exp == 0) return;
        if (!letters.empty() && letters.back().gen == gen) {
            letters.back().exp += exp;
            if (letters.back().exp == 0) letters.pop_back();
            return;
        }
        letters.push_back({gen, exp});
    }

    GroupWord inverse() const {
        GroupWord w;
        w.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            w.letters.push_back({it->gen, -it->exp});
        return w;
    }

    bool operator==(const GroupWord& o) const { return letters == o.letters; }
    bool operator!=(const GroupWord& o) const { return !(*this == o); }

    std::string str() const {
        if (letters.empty()) return "1";
        std::string s;
        for (const Letter& l : letters) {
            if (!s.empty()) s += '.';
            s += 'g' + std::to_string(l.gen);
            if (l.exp != 1) s += '^' + std::to_string(l.exp);
        }
        return s;
    }
};

inline GroupWord concat(const GroupWord& x, const GroupWord& y) {
    GroupWord w = x;
    for (const Letter& l : y.letters) w.push(l.gen, l.exp);
    return w;
}

inline GroupWord operator*(const GroupWord& x, const GroupWord& y) { return concat(x, y); }

inline GroupWord conjugate(const GroupWord& g, const GroupWord& w) {
    return g * w * g.inverse();
}

inline GroupWord commutator(const GroupWord& x, const GroupWord& y) {
    return x * y * x.inverse() * y.inverse();
}

// Evaluates a word as a product of generator images.  M needs operator* and a
// multiplicative identity passed as `one`.
template <class M>
M evaluate_word(const GroupWord& w, const std::vector<M>& gens, const std::vector<M>& gen_invs,
                const M& one) {
    M r = one;
    for (const Letter& l : w.letters) {
        if (l.gen < 0 || l.gen >= (int)gens.size())
            throw InvalidParameter("word references generator " + std::to_string(l.gen));
        const M& g = l.exp > 0 ? gens[l.gen] : gen_invs[l.gen];
        int64_t n = l.exp < 0 ? -l.exp : l.exp;
        for (int64_t i = 0; i < n; ++i) r = r * g;
    }
    return r;
}

}  // namespace windtree
