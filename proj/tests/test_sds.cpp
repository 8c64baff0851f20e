#include <catch2/catch_amalgamated.hpp>

#include "aca/sds.hpp"

using namespace aca;

TEST_CASE("composed maps for degenerate rules") {
    const UpdateOrder id4 = UpdateOrder::identity(4);
    const SdsMap keep = sds_map(Rule(204), 4, id4);
    for (std::uint32_t s = 0; s < 16; ++s) CHECK(keep.apply(s) == s);

    // every vertex toggles exactly once under a simple order
    for (const UpdateOrder& order : all_simple_orders(4)) {
        const SdsMap flip = sds_map(Rule(51), 4, order);
        for (std::uint32_t s = 0; s < 16; ++s) CHECK(flip.apply(s) == (s ^ 0xFu));
    }
}

TEST_CASE("composed map agrees with a hand-applied sequence of parity updates") {
    // oracle: apply the four local updates one at a time, first vertex first
    State y = parse_state("1000");
    y = apply_local(Rule(150), y, 0);
    CHECK(to_string(y) == "1000");
    y = apply_local(Rule(150), y, 1);
    CHECK(to_string(y) == "1100");
    y = apply_local(Rule(150), y, 2);
    CHECK(to_string(y) == "1110");
    y = apply_local(Rule(150), y, 3);
    CHECK(to_string(y) == "1110");

    const SdsMap m = sds_map(Rule(150), 4, UpdateOrder::identity(4));
    CHECK(m.apply(parse_state("1000").bits) == y.bits);
    CHECK(to_string(State{m.apply(parse_state("1000").bits), 4}) == "1110");
}

TEST_CASE("unfair orders are rejected") {
    CHECK_THROWS_AS(sds_map(Rule(150), 4, UpdateOrder{{0, 1, 2}, 4}), std::invalid_argument);
    CHECK_THROWS_AS(sds_map(Rule(150), 4, UpdateOrder{{0, 1, 2, 5}, 4}), std::invalid_argument);
    CHECK_NOTHROW(sds_map(Rule(150), 4, UpdateOrder{{0, 1, 2, 3, 1}, 4}));
}

TEST_CASE("periodic states of known rules") {
    CHECK(periodic_states(Rule(204), 5, UpdateOrder::identity(5)) == StateSet::all(5));
    CHECK(periodic_states(Rule(1), 5, UpdateOrder::identity(5)) == avoid_set(5, "A"));
    CHECK(periodic_states(Rule(1), 5, UpdateOrder::identity(5)).size() == 11);
    CHECK(periodic_states(Rule(232), 4, UpdateOrder::identity(4)) == avoid_set(4, "DE"));

    StateSet uniform(5);
    uniform.insert(all_zeros(5).bits);
    uniform.insert(all_ones(5).bits);
    CHECK(periodic_states(Rule(128), 5, UpdateOrder::identity(5)) == uniform);
}

TEST_CASE("cycle detection agrees with image iteration") {
    std::mt19937_64 rng(0xACA);
    std::uniform_int_distribution<int> rule_dist(0, 255);
    for (int trial = 0; trial < 24; ++trial) {
        const Rule rule(rule_dist(rng));
        const int n = 4 + trial % 4;
        const UpdateOrder order =
            (trial % 2 == 0) ? UpdateOrder::identity(n) : sample_fair_order(n, 2 * n, rng);
        const SdsMap m = sds_map(rule, n, order);
        CHECK(periodic_states(m) == periodic_states_by_image_iteration(m));
    }
}

TEST_CASE("fixed states are periodic under any fair order") {
    std::mt19937_64 rng(7);
    for (int code : {5, 76, 150, 156, 201, 110, 30}) {
        const Rule rule(code);
        const StateSet fix = fix_set(rule, 5);
        const StateSet per = periodic_states(rule, 5, sample_fair_order(5, 10, rng));
        CHECK(fix.is_subset_of(per));
    }
}

TEST_CASE("simple-order independence checks") {
    CHECK(check_pi_independence(Rule(150), 5).independent);
    CHECK(check_pi_independence(Rule(51), 4).independent);
    CHECK(check_pi_independence(Rule(204), 4).independent);
}

TEST_CASE("sampled fair-order independence checks") {
    CHECK(check_omega_independence_sampled(Rule(156), 5, 200, 10, 0x5eed).consistent);
    CHECK(check_omega_independence_sampled(Rule(204), 5, 50, 10, 1).consistent);
}

TEST_CASE("a rule outside the independent list has an order dependence") {
    const DependenceSearchResult res = find_dependence_witness(Rule(30), 4, 8);
    CHECK(res.witness_found);
    if (res.witness_found) {
        // the two orders really produce different periodic sets
        const StateSet a = periodic_states(Rule(30), res.witness_n, res.witness->first);
        const StateSet b = periodic_states(Rule(30), res.witness_n, res.witness->second);
        CHECK_FALSE(a == b);
    }
}

TEST_CASE("sampled fair orders are fair, bounded and reproducible") {
    std::mt19937_64 rng_a(42), rng_b(42);
    for (int trial = 0; trial < 50; ++trial) {
        const UpdateOrder a = sample_fair_order(6, 12, rng_a);
        const UpdateOrder b = sample_fair_order(6, 12, rng_b);
        CHECK(a == b);
        CHECK(a.is_fair());
        CHECK(a.seq.size() >= 6);
        CHECK(a.seq.size() <= 12);
    }
}

TEST_CASE("restricted permutations on invariant sets") {
    const StateSet all4 = StateSet::all(4);
    CHECK(restricted_permutation(Rule(204), 4, 2, all4).is_identity());

    // always-flip restricted to everything is a fixed-point-free involution
    const Permutation flip = restricted_permutation(Rule(51), 4, 1, all4);
    CHECK(flip.is_involution());
    CHECK(flip.transposition_count() == 8);

    // an isolated-one toggle on the no-adjacent-ones set
    const Permutation t = restricted_permutation(Rule(201), 5, 0, avoid_set(5, "A"));
    CHECK(t.is_involution());
    CHECK(t.transposition_count() == 3);

    // a non-invariant set is rejected
    StateSet bad(4);
    bad.insert(parse_state("1000").bits);
    CHECK_THROWS_AS(restricted_permutation(Rule(51), 4, 0, bad), std::invalid_argument);
}
