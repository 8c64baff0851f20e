#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aca/rules.hpp"

namespace aca {

inline constexpr int min_vertices = 4;
/// Full-state-space operations are capped here; a 2^24 membership bitset is 2 MiB.
inline constexpr int max_enumeration_vertices = 24;

inline void check_vertex_count(int n) {
    if (n < min_vertices || n > max_enumeration_vertices)
        throw std::out_of_range("vertex count must be in [4, 24]");
}

/// Cyclic binary state on n vertices. Bit p holds the value of vertex p
/// (vertex 0 in the least significant bit); all indices wrap mod n.
struct State {
    std::uint32_t bits = 0;
    int n = 0;

    friend bool operator==(const State& a, const State& b) = default;
};

inline State make_state(std::uint32_t bits, int n) {
    check_vertex_count(n);
    if (n < 32 && (bits >> n) != 0) throw std::invalid_argument("state has bits above vertex n-1");
    return State{bits, n};
}

inline int state_bit(const State& y, int p) {
    const int q = ((p % y.n) + y.n) % y.n;
    return static_cast<int>((y.bits >> q) & 1u);
}

/// Rendered left to right as y_0 y_1 ... y_{n-1}.
inline std::string to_string(const State& y) {
    std::string s(static_cast<std::size_t>(y.n), '0');
    for (int p = 0; p < y.n; ++p)
        if (state_bit(y, p)) s[static_cast<std::size_t>(p)] = '1';
    return s;
}

inline State parse_state(std::string_view s) {
    const int n = static_cast<int>(s.size());
    check_vertex_count(n);
    std::uint32_t bits = 0;
    for (int p = 0; p < n; ++p) {
        const char c = s[static_cast<std::size_t>(p)];
        if (c == '1')
            bits |= 1u << p;
        else if (c != '0')
            throw std::invalid_argument("state string must be over {0,1}");
    }
    return State{bits, n};
}

inline State all_zeros(int n) {
    check_vertex_count(n);
    return State{0, n};
}

inline State all_ones(int n) {
    check_vertex_count(n);
    return State{(n == 32) ? ~0u : ((1u << n) - 1u), n};
}

inline State complement(const State& y) { return State{~y.bits & all_ones(y.n).bits, y.n}; }

/// Cyclic shift: vertex p of the result holds the value vertex p-r had.
inline State rotate(const State& y, int r) {
    const int n = y.n;
    const int s = ((r % n) + n) % n;
    if (s == 0) return y;
    const std::uint32_t mask = all_ones(n).bits;
    return State{((y.bits << s) | (y.bits >> (n - s))) & mask, n};
}

/// Update vertex i from the triple (y_{i-1}, y_i, y_{i+1}); all other bits are kept.
inline State apply_local(Rule rule, const State& y, int i) {
    const int n = y.n;
    if (i < 0 || i >= n) throw std::out_of_range("vertex index out of range");
    const int ctx =
        4 * state_bit(y, i - 1 + n) + 2 * state_bit(y, i) + state_bit(y, i + 1);
    const std::uint32_t bit = static_cast<std::uint32_t>(rule.table_bit(ctx));
    return State{(y.bits & ~(1u << i)) | (bit << i), y.n};
}

/// Same update on a raw packed word; the hot path for building full maps.
inline std::uint32_t apply_local_bits(Rule rule, std::uint32_t bits, int i, int n) {
    const int l = (i == 0) ? n - 1 : i - 1;
    const int r = (i == n - 1) ? 0 : i + 1;
    const int ctx = static_cast<int>(((bits >> l) & 1u) << 2 | ((bits >> i) & 1u) << 1 |
                                     ((bits >> r) & 1u));
    return (bits & ~(1u << i)) | (static_cast<std::uint32_t>(rule.table_bit(ctx)) << i);
}

/// Maximal constant run in a cyclic state.
struct Block {
    bool ones;   // run of 1s rather than 0s
    int start;   // first vertex of the run
    int length;  // >= 1
};

/// Runs of a non-uniform state in cyclic order, starting from the first run
/// boundary at or after vertex 0. The all-zeros and all-ones states have no
/// runs in this sense and are reported via `uniform`.
struct BlockDecomposition {
    bool uniform = false;
    int uniform_value = 0;
    std::vector<Block> blocks;

    int count(bool ones) const {
        int c = 0;
        for (const Block& b : blocks) c += (b.ones == ones) ? 1 : 0;
        return c;
    }
};

inline BlockDecomposition blocks(const State& y) {
    const int n = y.n;
    if (y == all_zeros(n)) return {true, 0, {}};
    if (y == all_ones(n)) return {true, 1, {}};
    BlockDecomposition d;
    int first = 0;
    while (state_bit(y, first) == state_bit(y, first - 1 + n)) ++first;
    int p = first;
    do {
        const int v = state_bit(y, p);
        int len = 1;
        while (state_bit(y, (p + len) % n) == v) ++len;
        d.blocks.push_back(Block{v == 1, p, len});
        p = (p + len) % n;
    } while (p != first);
    return d;
}

}  // namespace aca
