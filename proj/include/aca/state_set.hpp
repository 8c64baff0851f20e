#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aca/state.hpp"

namespace aca {

/// Set of length-n states, stored as a membership bitset over all 2^n packed words.
class StateSet {
public:
    explicit StateSet(int n) : n_(n), words_((std::size_t{1} << n) / 64 + 1, 0) {
        check_vertex_count(n);
    }

    static StateSet all(int n) {
        StateSet s(n);
        for (std::uint32_t x = 0; x < s.universe(); ++x) s.insert(x);
        return s;
    }

    int n() const { return n_; }
    std::uint32_t universe() const { return std::uint32_t{1} << n_; }

    bool contains(std::uint32_t x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
    void insert(std::uint32_t x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
    void erase(std::uint32_t x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

    std::size_t size() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    /// Members in increasing packed-word order; this ordering indexes the set everywhere.
    std::vector<std::uint32_t> members() const {
        std::vector<std::uint32_t> out;
        out.reserve(size());
        for (std::uint32_t x = 0; x < universe(); ++x)
            if (contains(x)) out.push_back(x);
        return out;
    }

    bool is_subset_of(const StateSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    StateSet& operator|=(const StateSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    StateSet& operator&=(const StateSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    friend bool operator==(const StateSet& a, const StateSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

/// Binary words whose cyclic occurrences disqualify a state. The standard
/// single-letter abbreviations are A='11', B='000', C='111', D='010',
/// E='101' and F='1100'.
struct AvoidSpec {
    std::vector<std::string> words;

    static std::string_view word_for(char letter) {
        switch (letter) {
            case 'A': return "11";
            case 'B': return "000";
            case 'C': return "111";
            case 'D': return "010";
            case 'E': return "101";
            case 'F': return "1100";
            default: throw std::invalid_argument("unknown word abbreviation");
        }
    }

    static AvoidSpec named(std::string_view letters) {
        AvoidSpec spec;
        for (char c : letters) spec.words.emplace_back(word_for(c));
        return spec;
    }
};

/// True when word w occurs in y at some cyclic offset.
inline bool contains_cyclic_word(const State& y, std::string_view w) {
    const int n = y.n;
    const int m = static_cast<int>(w.size());
    for (int r = 0; r < n; ++r) {
        bool match = true;
        for (int q = 0; q < m && match; ++q)
            match = state_bit(y, (r + q) % n) == (w[static_cast<std::size_t>(q)] == '1');
        if (match) return true;
    }
    return false;
}

/// All states of length n containing no cyclic occurrence of any listed word.
inline StateSet avoid_set(int n, const AvoidSpec& spec) {
    check_vertex_count(n);
    for (const std::string& w : spec.words) {
        if (w.empty() || static_cast<int>(w.size()) > n)
            throw std::invalid_argument("avoided word length must be in [1, n]");
        for (char c : w)
            if (c != '0' && c != '1') throw std::invalid_argument("avoided words must be binary");
    }
    StateSet out(n);
    for (std::uint32_t x = 0; x < out.universe(); ++x) {
        const State y{x, n};
        bool ok = true;
        for (const std::string& w : spec.words)
            if (contains_cyclic_word(y, w)) {
                ok = false;
                break;
            }
        if (ok) out.insert(x);
    }
    return out;
}

inline StateSet avoid_set(int n, std::string_view letters) {
    return avoid_set(n, AvoidSpec::named(letters));
}

/// Neighbourhood triples (as 3-letter words l c r) whose centre the rule rewrites.
inline std::vector<std::string> altering_triples(Rule rule) {
    std::vector<std::string> out;
    for (int ctx = 0; ctx < 8; ++ctx) {
        const int centre = (ctx >> 1) & 1;
        if (rule.table_bit(ctx) != centre) {
            std::string w = {static_cast<char>('0' + ((ctx >> 2) & 1)),
                             static_cast<char>('0' + centre),
                             static_cast<char>('0' + (ctx & 1))};
            out.push_back(std::move(w));
        }
    }
    return out;
}

/// States unchanged by every local application of the rule. These are exactly
/// the states avoiding all altering triples.
inline StateSet fixed_states(Rule rule, int n) {
    return avoid_set(n, AvoidSpec{altering_triples(rule)});
}

}  // namespace aca
