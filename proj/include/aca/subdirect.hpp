#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "aca/check.hpp"
#include "aca/classification.hpp"
#include "aca/groups.hpp"

namespace aca {

/// Action induced on the contents of one cyclic window of vertices, for orbits
/// that decompose independently across windows.
struct WindowProjection {
    std::vector<std::uint32_t> labels;  // distinct window contents, sorted
    std::vector<Permutation> gens;      // induced maps, aligned with the input generators
};

inline std::uint32_t window_bits(std::uint32_t state, int n, int start, int len) {
    std::uint32_t w = 0;
    for (int q = 0; q < len; ++q) w |= ((state >> ((start + q) % n)) & 1u) << q;
    return w;
}

/// Projects an orbit action onto a window. Returns nothing when a generator
/// does not induce a well-defined map on window contents, which falsifies the
/// claimed product structure.
inline std::optional<WindowProjection> project_window(const std::vector<std::uint32_t>& states,
                                                      const std::vector<Permutation>& gens,
                                                      int n, int start, int len) {
    WindowProjection proj;
    std::vector<std::uint32_t> content(states.size());
    for (std::size_t r = 0; r < states.size(); ++r) content[r] = window_bits(states[r], n, start, len);
    proj.labels = content;
    std::ranges::sort(proj.labels);
    proj.labels.erase(std::unique(proj.labels.begin(), proj.labels.end()), proj.labels.end());
    std::vector<Permutation::point> label_of(states.size());
    for (std::size_t r = 0; r < states.size(); ++r)
        label_of[r] = static_cast<Permutation::point>(
            std::ranges::lower_bound(proj.labels, content[r]) - proj.labels.begin());
    for (const Permutation& g : gens) {
        std::vector<int> image(proj.labels.size(), -1);
        for (std::size_t r = 0; r < states.size(); ++r) {
            const int from = label_of[r];
            const int to = label_of[g(static_cast<Permutation::point>(r))];
            if (image[static_cast<std::size_t>(from)] == -1)
                image[static_cast<std::size_t>(from)] = to;
            else if (image[static_cast<std::size_t>(from)] != to)
                return std::nullopt;
        }
        std::vector<Permutation::point> img(proj.labels.size());
        for (std::size_t l = 0; l < image.size(); ++l) {
            if (image[l] < 0) return std::nullopt;
            img[l] = static_cast<Permutation::point>(image[l]);
        }
        proj.gens.emplace_back(std::move(img));
    }
    return proj;
}

namespace detail {

/// Maximal runs "1^i 0^j" of a non-uniform state, as (start, length) pairs.
inline std::vector<std::pair<int, int>> one_zero_blocks(std::uint32_t bits, int n) {
    const BlockDecomposition d = blocks(State{bits, n});
    std::vector<std::pair<int, int>> out;
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        if (!d.blocks[b].ones) continue;
        const Block& zeros = d.blocks[(b + 1) % d.blocks.size()];
        out.emplace_back(d.blocks[b].start, d.blocks[b].length + zeros.length);
    }
    return out;
}

/// Zero-blocks of a non-uniform state, as (start, length) pairs.
inline std::vector<std::pair<int, int>> zero_blocks(std::uint32_t bits, int n) {
    const BlockDecomposition d = blocks(State{bits, n});
    std::vector<std::pair<int, int>> out;
    for (const Block& b : d.blocks)
        if (!b.ones) out.emplace_back(b.start, b.length);
    return out;
}

}  // namespace detail

/// Order of the factor attached to a zero-block of length m in the
/// isolated-one dynamics; blocks too short to move anything give 1.
inline BigInt fg_factor_order(int m, int n) {
    if (m <= 2) return 1;
    return fibonacci_group_order(m, 0, n);
}

struct SubdirectReport {
    CheckList checks;
    bool pass() const { return checks.all_pass(); }
};

/// Checks the subdirect-product description of the dynamics group for rules
/// 156, 201 and 73: (a) every orbit group factors as the product of its
/// predicted block factors, (b) the group order divides the product of the
/// retained factor orders, and (c) projections onto retained factors are
/// surjective, with repeated factors projecting identically where two
/// realisations exist.
inline SubdirectReport verify_subdirect_containment(Rule rule, int n) {
    const int code = rule.code();
    if (code != 156 && code != 201 && code != 73)
        throw std::invalid_argument("subdirect verification applies to rules 156, 201 and 73");
    if (n > 7) throw std::invalid_argument("subdirect verification is capped at n = 7");

    SubdirectReport rep;
    const DynamicsContext ctx = dynamics_context(rule, n);
    const OrbitPartition part = dynamics_orbits(ctx);
    const PermGroup group = dynamics_group(ctx);
    const std::uint32_t zeros = all_zeros(n).bits;
    const std::uint32_t ones = all_ones(n).bits;

    const BigInt lg = lucas_group_order(n);
    std::vector<BigInt> fg(static_cast<std::size_t>(n), 0);
    for (int m = 3; m <= n - 2; ++m) fg[static_cast<std::size_t>(m)] = fibonacci_group_order(m, 0, n);

    // (a) orbit groups factor through their block structure
    for (std::size_t oi = 0; oi < part.orbits.size(); ++oi) {
        std::vector<std::uint32_t> orbit_states;
        for (Permutation::point r : part.orbits[oi]) orbit_states.push_back(ctx.states[r]);
        std::optional<std::uint32_t> canonical;
        for (std::uint32_t s : orbit_states) {
            const bool is_rep = (code == 156)
                                    ? (s == ones || !contains_cyclic_word(State{s, n}, "11"))
                                    : !contains_cyclic_word(State{s, n}, "010");
            if (is_rep) {
                canonical = s;
                break;
            }
        }
        if (!canonical) {
            rep.checks.add("orbit " + std::to_string(oi) + " has a canonical state", false, "found",
                           "none");
            continue;
        }
        BigInt predicted = 1;
        if (*canonical == zeros)
            predicted = (code == 156) ? BigInt(1) : lg;
        else if (*canonical == ones)
            predicted = 1;
        else if (code == 156)
            for (auto [start, len] : detail::one_zero_blocks(*canonical, n))
                predicted *= big_factorial(static_cast<unsigned>(len - 1));
        else
            for (auto [start, len] : detail::zero_blocks(*canonical, n))
                predicted *= fg_factor_order(len, n);
        const std::vector<Permutation> restricted =
            restrict_to_orbit(ctx.local_perms, part.orbits[oi]);
        const BigInt actual = PermGroup(part.orbits[oi].size(), restricted).order();
        rep.checks.add("orbit of " + to_string(State{*canonical, n}) + " factors as predicted",
                       actual == predicted, predicted.str(), actual.str());
    }

    // (b) the group order divides the product of retained factor orders
    BigInt bound = 1;
    if (code == 156) {
        BigInt per_position = big_factorial(static_cast<unsigned>(n - 1));
        for (int m = 2; m <= n - 3; ++m) per_position *= big_factorial(static_cast<unsigned>(m));
        bound = big_pow(per_position, static_cast<unsigned>(n));
    } else if (code == 201) {
        BigInt per_position = 1;
        for (int m = 3; m <= n - 2; ++m) per_position *= fg[static_cast<std::size_t>(m)];
        bound = lg * big_pow(per_position, static_cast<unsigned>(n));
    } else {
        BigInt per_position = fg[static_cast<std::size_t>(n - 2)];
        for (int m = 3; m <= n - 5; ++m) per_position *= fg[static_cast<std::size_t>(m)];
        bound = lg * big_pow(per_position, static_cast<unsigned>(n));
    }
    const BigInt remainder = bound % group.order();
    rep.checks.add("group order divides the retained-factor product", remainder == 0, "0",
                   remainder.str());

    // (c) projections onto retained factors are surjective
    if (code == 156) {
        auto padded_state = [&](int m, bool single_pad_block) -> std::optional<std::uint32_t> {
            const int r = n - (m + 1);
            if (r == 1) return std::nullopt;
            std::uint32_t bits = 1u;  // block 1 0^m covering positions 0..m
            if (single_pad_block) {
                if (r >= 2) bits |= 1u << (m + 1);
            } else {
                int pos = m + 1, left = r;
                while (left > 0) {
                    const int len = (left % 2 == 1) ? 3 : 2;
                    bits |= 1u << pos;
                    pos += len;
                    left -= len;
                }
            }
            return bits;
        };
        for (int m = 2; m <= n - 1; ++m) {
            if (m == n - 2) continue;  // the complement would be a single cell
            const auto seed = padded_state(m, false);
            if (!seed) continue;
            const OrbitAction act = orbit_action(rule, n, *seed);
            const auto proj = project_window(act.states, act.gens, n, 0, m + 1);
            BigInt actual = 0;
            if (proj) actual = PermGroup(proj->labels.size(), proj->gens).order();
            const BigInt expected = big_factorial(static_cast<unsigned>(m));
            rep.checks.add(
                "projection onto the length-" + std::to_string(m + 1) + " block factor is full",
                proj.has_value() && actual == expected, expected.str(), actual.str());

            const auto seed2 = padded_state(m, true);
            if (seed2 && *seed2 != *seed) {
                const OrbitAction act2 = orbit_action(rule, n, *seed2);
                const auto proj2 = project_window(act2.states, act2.gens, n, 0, m + 1);
                const bool same = proj && proj2 && proj->gens == proj2->gens;
                rep.checks.add("repeated block factor of length " + std::to_string(m + 1) +
                                   " projects identically across orbits",
                               same, "equal generator tuples", same ? "equal" : "different");
            }
        }
    } else {
        {
            const std::uint32_t id = part.orbit_index[ctx.rank_of(zeros)];
            const std::vector<Permutation> restricted =
                restrict_to_orbit(ctx.local_perms, part.orbits[id]);
            const BigInt actual = PermGroup(part.orbits[id].size(), restricted).order();
            rep.checks.add("projection onto the all-zeros orbit factor is full", actual == lg,
                           lg.str(), actual.str());
        }
        std::vector<int> ms;
        if (code == 201)
            for (int m = 3; m <= n - 2; ++m) ms.push_back(m);
        else {
            if (n - 2 >= 3) ms.push_back(n - 2);
            for (int m = 3; m <= n - 5; ++m) ms.push_back(m);
        }
        for (int m : ms) {
            const bool via_window = (code == 73 && m <= n - 5);
            std::uint32_t seed_bits;
            if (via_window) {
                // zero-block of length m, a pair of ones, the complementary
                // zero-block, and a closing pair of ones
                seed_bits = ones;
                for (int q = 0; q < m; ++q) seed_bits &= ~(1u << q);
                for (int q = m + 2; q < n - 2; ++q) seed_bits &= ~(1u << q);
            } else {
                seed_bits = single_zero_block_state(m, 0, n);
            }
            const std::uint32_t id = part.orbit_index[ctx.rank_of(seed_bits)];
            std::vector<std::uint32_t> orbit_states;
            for (Permutation::point r : part.orbits[id]) orbit_states.push_back(ctx.states[r]);
            BigInt actual = 0;
            bool ok = true;
            if (via_window) {
                const auto proj = project_window(
                    orbit_states, restrict_to_orbit(ctx.local_perms, part.orbits[id], false), n, 0, m);
                ok = proj.has_value();
                if (ok) actual = PermGroup(proj->labels.size(), proj->gens).order();
            } else {
                const std::vector<Permutation> restricted =
                    restrict_to_orbit(ctx.local_perms, part.orbits[id]);
                actual = PermGroup(part.orbits[id].size(), restricted).order();
            }
            rep.checks.add(
                "projection onto the zero-block length-" + std::to_string(m) + " factor is full",
                ok && actual == fg[static_cast<std::size_t>(m)], fg[static_cast<std::size_t>(m)].str(),
                actual.str());
        }
        // the same factor realised at a rotated position has the same order
        if (n >= 5) {
            const BigInt rotated = fibonacci_group_order(3, 1, n);
            rep.checks.add("zero-block factor order is position-independent", rotated == fg[3],
                           fg[3].str(), rotated.str());
        }
    }
    return rep;
}

}  // namespace aca
