#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "aca/parallel.hpp"
#include "aca/permutation.hpp"
#include "aca/rules.hpp"
#include "aca/state.hpp"
#include "aca/state_set.hpp"
#include "aca/update_order.hpp"

namespace aca {

/// Full successor table of the composed map F_{w_m} o ... o F_{w_1}
/// (the first vertex in the order fires first).
struct SdsMap {
    Rule rule;
    int n;
    UpdateOrder order;
    std::vector<std::uint32_t> image;  // indexed by packed state

    std::uint32_t apply(std::uint32_t state) const { return image[state]; }
};

inline SdsMap sds_map(Rule rule, int n, const UpdateOrder& order) {
    check_vertex_count(n);
    if (order.n != n || !order.is_fair())
        throw std::invalid_argument("sds_map requires a fair update order on n vertices");
    SdsMap m{rule, n, order, std::vector<std::uint32_t>(std::size_t{1} << n)};
    parallel_for(m.image.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) {
            std::uint32_t y = static_cast<std::uint32_t>(s);
            for (int v : order.seq) y = apply_local_bits(rule, y, v, n);
            m.image[s] = y;
        }
    });
    return m;
}

/// Recurrent states of the successor table: peel nodes of in-degree zero until
/// only the states lying on cycles remain.
inline StateSet periodic_states(const SdsMap& m) {
    const std::size_t u = m.image.size();
    std::vector<std::uint32_t> indeg(u, 0);
    for (std::size_t s = 0; s < u; ++s) ++indeg[m.image[s]];
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < u; ++s)
        if (indeg[s] == 0) stack.push_back(s);
    while (!stack.empty()) {
        const std::uint32_t s = stack.back();
        stack.pop_back();
        const std::uint32_t t = m.image[s];
        if (--indeg[t] == 0) stack.push_back(t);
    }
    StateSet per(m.n);
    for (std::uint32_t s = 0; s < u; ++s)
        if (indeg[s] > 0) per.insert(s);
    return per;
}

inline StateSet periodic_states(Rule rule, int n, const UpdateOrder& order) {
    return periodic_states(sds_map(rule, n, order));
}

/// Independent route to the same set: iterate the image of the full state
/// space until it stabilises.
inline StateSet periodic_states_by_image_iteration(const SdsMap& m) {
    StateSet current = StateSet::all(m.n);
    for (;;) {
        StateSet next(m.n);
        for (std::uint32_t s = 0; s < m.image.size(); ++s)
            if (current.contains(s)) next.insert(m.image[s]);
        if (next == current) return current;
        current = next;
    }
}

/// Fixed states, exposed alongside the periodic-set machinery: exactly the
/// states every local function leaves alone.
inline StateSet fix_set(Rule rule, int n) { return fixed_states(rule, n); }

struct IndependenceWitness {
    UpdateOrder first;
    UpdateOrder second;
    std::size_t first_count;
    std::size_t second_count;
};

struct IndependenceResult {
    bool independent = false;
    std::optional<IndependenceWitness> witness;
    std::size_t orders_checked = 0;
};

/// Compare periodic sets across every simple update order.
inline IndependenceResult check_pi_independence(Rule rule, int n) {
    if (n > 8) throw std::invalid_argument("exhaustive order enumeration is capped at n = 8");
    const auto orders = all_simple_orders(n);
    const StateSet base = periodic_states(rule, n, orders.front());
    IndependenceResult res;
    res.orders_checked = orders.size();
    for (std::size_t i = 1; i < orders.size(); ++i) {
        const StateSet per = periodic_states(rule, n, orders[i]);
        if (!(per == base)) {
            res.witness = IndependenceWitness{orders.front(), orders[i], base.size(), per.size()};
            return res;
        }
    }
    res.independent = true;
    return res;
}

struct SampledIndependenceResult {
    bool consistent = false;
    std::optional<IndependenceWitness> witness;
    std::size_t orders_checked = 0;
    std::uint64_t seed = 0;
};

/// Compare periodic sets across seeded random fair orders (plus all simple
/// orders when n is small enough to enumerate them).
inline SampledIndependenceResult check_omega_independence_sampled(Rule rule, int n, int samples,
                                                                  int max_len, std::uint64_t seed) {
    if (max_len < n) throw std::invalid_argument("max_len must be at least n");
    SampledIndependenceResult res;
    res.seed = seed;
    const UpdateOrder base_order = UpdateOrder::identity(n);
    const StateSet base = periodic_states(rule, n, base_order);

    auto compare = [&](const UpdateOrder& o) -> bool {
        const StateSet per = periodic_states(rule, n, o);
        ++res.orders_checked;
        if (per == base) return true;
        res.witness = IndependenceWitness{base_order, o, base.size(), per.size()};
        return false;
    };

    if (n <= 8) {
        for (const UpdateOrder& o : all_simple_orders(n))
            if (!compare(o)) return res;
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s)
        if (!compare(sample_fair_order(n, max_len, rng))) return res;
    res.consistent = true;
    return res;
}

/// Search for an order dependence over a range of circle sizes. Rules outside
/// the omega-independent list are expected to fail somewhere, but no bound on
/// the witness size is known, so exhausting the search is reported as
/// `unresolved` rather than as an error.
struct DependenceSearchResult {
    bool witness_found = false;
    int witness_n = 0;
    std::optional<IndependenceWitness> witness;
};

inline DependenceSearchResult find_dependence_witness(Rule rule, int n_min, int n_max,
                                                      int samples = 100,
                                                      std::uint64_t seed = 0x5eed) {
    DependenceSearchResult out;
    for (int n = n_min; n <= n_max; ++n) {
        if (n <= 8) {
            const IndependenceResult pi = check_pi_independence(rule, n);
            if (!pi.independent) {
                out.witness_found = true;
                out.witness_n = n;
                out.witness = pi.witness;
                return out;
            }
        }
        const SampledIndependenceResult om =
            check_omega_independence_sampled(rule, n, samples, 2 * n, seed);
        if (!om.consistent) {
            out.witness_found = true;
            out.witness_n = n;
            out.witness = om.witness;
            return out;
        }
    }
    return out;
}

/// Restriction of the local map at vertex i to an invariant state set,
/// indexed by the set's member order. Throws when the set is not invariant.
inline Permutation restricted_permutation(Rule rule, int n, int i,
                                          const std::vector<std::uint32_t>& members,
                                          const std::unordered_map<std::uint32_t, std::uint32_t>& rank) {
    std::vector<Permutation::point> images(members.size());
    std::vector<char> hit(members.size(), 0);
    for (std::size_t r = 0; r < members.size(); ++r) {
        const std::uint32_t y = apply_local_bits(rule, members[r], i, n);
        const auto it = rank.find(y);
        if (it == rank.end() || hit[it->second])
            throw std::invalid_argument("state set is not invariant under the local map");
        hit[it->second] = 1;
        images[r] = static_cast<Permutation::point>(it->second);
    }
    return Permutation(std::move(images));
}

inline Permutation restricted_permutation(Rule rule, int n, int i, const StateSet& set) {
    const std::vector<std::uint32_t> members = set.members();
    if (members.size() > Permutation::max_degree)
        throw std::invalid_argument("state set too large for permutation domain");
    std::unordered_map<std::uint32_t, std::uint32_t> rank;
    rank.reserve(members.size() * 2);
    for (std::size_t r = 0; r < members.size(); ++r)
        rank.emplace(members[r], static_cast<std::uint32_t>(r));
    return restricted_permutation(rule, n, i, members, rank);
}

}  // namespace aca
