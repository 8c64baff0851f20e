#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "aca/bsgs.hpp"
#include "aca/enumeration.hpp"
#include "aca/orbits.hpp"
#include "aca/sds.hpp"

namespace aca {

/// Periodic states of an order-independent rule together with the restricted
/// local maps acting on them. Everything downstream (groups, orbits, Coxeter
/// data) is computed from this.
struct DynamicsContext {
    Rule rule;
    int n;
    std::vector<std::uint32_t> states;      // periodic states, increasing packed order
    std::vector<Permutation> local_perms;   // restriction of each vertex map, identity allowed

    std::size_t degree() const { return states.size(); }

    std::uint32_t rank_of(std::uint32_t state) const {
        const auto it = std::ranges::lower_bound(states, state);
        if (it == states.end() || *it != state)
            throw std::invalid_argument("state is not periodic for this rule");
        return static_cast<std::uint32_t>(it - states.begin());
    }
};

inline DynamicsContext dynamics_context(Rule rule, int n) {
    if (!is_omega_independent(rule))
        throw std::invalid_argument("dynamics groups exist only for omega-independent rules");
    if (n > 16) throw std::invalid_argument("group computations are capped at n = 16");
    DynamicsContext ctx{rule, n, {}, {}};
    const StateSet per = periodic_states(rule, n, UpdateOrder::identity(n));
    ctx.states = per.members();
    std::unordered_map<std::uint32_t, std::uint32_t> rank;
    rank.reserve(ctx.states.size() * 2);
    for (std::size_t r = 0; r < ctx.states.size(); ++r)
        rank.emplace(ctx.states[r], static_cast<std::uint32_t>(r));
    ctx.local_perms.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        ctx.local_perms.push_back(restricted_permutation(rule, n, i, ctx.states, rank));
    return ctx;
}

inline PermGroup dynamics_group(const DynamicsContext& ctx) {
    return PermGroup(ctx.degree(), ctx.local_perms);
}

inline PermGroup dynamics_group(Rule rule, int n) { return dynamics_group(dynamics_context(rule, n)); }

/// Group generated by the maps of all simple update orders (deduplicated).
inline PermGroup restricted_dynamics_group(const DynamicsContext& ctx) {
    if (ctx.n > 8)
        throw std::invalid_argument("restricted dynamics groups enumerate n! orders; capped at n = 8");
    std::set<Permutation> maps;
    for (const UpdateOrder& order : all_simple_orders(ctx.n)) {
        Permutation m = Permutation::identity(ctx.degree());
        for (int v : order.seq) m.assign_composition(m, ctx.local_perms[static_cast<std::size_t>(v)]);
        maps.insert(std::move(m));
    }
    return PermGroup(ctx.degree(), {maps.begin(), maps.end()});
}

inline PermGroup restricted_dynamics_group(Rule rule, int n) {
    return restricted_dynamics_group(dynamics_context(rule, n));
}

inline OrbitPartition dynamics_orbits(const DynamicsContext& ctx) {
    return orbits(ctx.degree(), ctx.local_perms);
}

inline std::size_t orbit_count(Rule rule, int n) {
    return dynamics_orbits(dynamics_context(rule, n)).count();
}

/// Pairwise orders of products of the restricted local maps. For these rules
/// the adjacent-pair order is a constant; that constant is the label.
struct CoxeterData {
    int label = 0;
    std::vector<std::vector<int>> matrix;  // order of F_i* then F_j*; 1 on the diagonal
};

inline CoxeterData coxeter_data(const DynamicsContext& ctx) {
    const int n = ctx.n;
    bool nontrivial = false;
    for (const Permutation& p : ctx.local_perms) nontrivial = nontrivial || !p.is_identity();
    if (!nontrivial)
        throw std::invalid_argument("coxeter_data requires a nontrivial dynamics group");
    CoxeterData d;
    d.matrix.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const BigInt ord =
                ctx.local_perms[static_cast<std::size_t>(i)].then(ctx.local_perms[static_cast<std::size_t>(j)]).order();
            d.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<int>(ord);
        }
    d.label = d.matrix[0][1];
    for (int i = 0; i < n; ++i)
        if (d.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % n)] != d.label)
            throw std::domain_error("adjacent-pair orders are not constant around the circle");
    return d;
}

inline CoxeterData coxeter_data(Rule rule, int n) { return coxeter_data(dynamics_context(rule, n)); }

struct GeneratorParity {
    std::size_t transpositions = 0;
    bool even = true;
};

inline GeneratorParity generator_parity(const DynamicsContext& ctx, int i) {
    const Permutation& p = ctx.local_perms.at(static_cast<std::size_t>(i));
    if (!p.is_involution()) throw std::domain_error("restricted local map is not an involution");
    const std::size_t t = p.transposition_count();
    return {t, t % 2 == 0};
}

inline GeneratorParity generator_parity(Rule rule, int n, int i) {
    return generator_parity(dynamics_context(rule, n), i);
}

/// Orbit of one state under the local maps of an invertible rule, with the
/// restricted generators re-indexed by rank inside the orbit. Built by direct
/// application, so it works without materialising the full state space.
struct OrbitAction {
    std::vector<std::uint32_t> states;  // sorted
    std::vector<Permutation> gens;      // per vertex, identity entries kept
};

inline OrbitAction orbit_action(Rule rule, int n, std::uint32_t seed_state) {
    if (!is_invertible(rule))
        throw std::invalid_argument("orbit_action requires an invertible rule");
    std::vector<std::uint32_t> frontier = {seed_state};
    std::set<std::uint32_t> seen = {seed_state};
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t s : frontier)
            for (int i = 0; i < n; ++i) {
                const std::uint32_t t = apply_local_bits(rule, s, i, n);
                if (seen.insert(t).second) next.push_back(t);
            }
        frontier = std::move(next);
    }
    OrbitAction act;
    act.states.assign(seen.begin(), seen.end());
    if (act.states.size() > Permutation::max_degree)
        throw std::invalid_argument("orbit too large for permutation domain");
    std::unordered_map<std::uint32_t, std::uint32_t> rank;
    rank.reserve(act.states.size() * 2);
    for (std::size_t r = 0; r < act.states.size(); ++r)
        rank.emplace(act.states[r], static_cast<std::uint32_t>(r));
    for (int i = 0; i < n; ++i) {
        std::vector<Permutation::point> images(act.states.size());
        for (std::size_t r = 0; r < act.states.size(); ++r)
            images[r] = static_cast<Permutation::point>(
                rank.at(apply_local_bits(rule, act.states[r], i, n)));
        act.gens.emplace_back(std::move(images));
    }
    return act;
}

/// Group induced on the orbit of the all-zeros state under the isolated-one
/// toggling rule (rule 201). The orbit is the set of states with no adjacent
/// ones, of size Luc_n.
inline PermGroup lucas_group(int n) {
    const OrbitAction act = orbit_action(Rule(201), n, 0);
    return PermGroup(act.states.size(), act.gens);
}

inline BigInt lucas_group_order(int n) { return lucas_group(n).order(); }

inline std::uint32_t single_zero_block_state(int m, int ell, int n) {
    if (m < 3 || m > n - 2)
        throw std::invalid_argument("zero-block length must be in [3, n-2]");
    std::uint32_t bits = all_ones(n).bits;
    for (int q = 0; q < m; ++q) bits &= ~(1u << ((ell + q) % n));
    return bits;
}

/// Group induced on the orbit of the state with a single zero-block of length
/// m starting at position ell (ones elsewhere), again under rule 201. The
/// orbit has size Fib_m, and its group does not depend on ell.
inline PermGroup fibonacci_group(int m, int ell, int n) {
    const OrbitAction act = orbit_action(Rule(201), n, single_zero_block_state(m, ell, n));
    return PermGroup(act.states.size(), act.gens);
}

inline BigInt fibonacci_group_order(int m, int ell, int n) { return fibonacci_group(m, ell, n).order(); }

}  // namespace aca
