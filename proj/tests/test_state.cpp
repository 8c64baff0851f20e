#include <catch2/catch_amalgamated.hpp>

#include "aca/state.hpp"
#include "aca/state_set.hpp"

using namespace aca;

TEST_CASE("state strings render vertex 0 first") {
    CHECK(to_string(make_state(0b0001, 4)) == "1000");
    CHECK(parse_state("1000").bits == 0b0001);
    CHECK(parse_state("01101").bits == 0b10110);
    CHECK(to_string(parse_state("01101")) == "01101");
}

TEST_CASE("complement and rotation") {
    const State y = parse_state("10010");
    CHECK(complement(all_zeros(5)) == all_ones(5));
    CHECK(complement(complement(y)) == y);
    CHECK(rotate(y, 5) == y);
    CHECK(rotate(y, 2) == parse_state("10100"));
    for (int r = 0; r < 5; ++r) CHECK(rotate(rotate(y, r), 5 - r) == y);
}

TEST_CASE("local application follows the rule truth table") {
    // the identity-like rule never changes anything
    for (std::uint32_t b = 0; b < 16; ++b)
        for (int i = 0; i < 4; ++i) CHECK(apply_local(Rule(204), State{b, 4}, i).bits == b);
    // the always-flip rule toggles exactly bit i
    for (std::uint32_t b = 0; b < 16; ++b)
        for (int i = 0; i < 4; ++i)
            CHECK(apply_local(Rule(51), State{b, 4}, i).bits == (b ^ (1u << i)));
    // the parity rule adds both neighbours
    CHECK(to_string(apply_local(Rule(150), parse_state("1000"), 1)) == "1100");
}

TEST_CASE("block decomposition") {
    const BlockDecomposition d = blocks(parse_state("1101001"));
    REQUIRE_FALSE(d.uniform);
    CHECK(d.count(true) == 2);
    CHECK(d.count(false) == 2);
    std::vector<int> one_lens, zero_lens;
    for (const Block& b : d.blocks) (b.ones ? one_lens : zero_lens).push_back(b.length);
    std::ranges::sort(one_lens);
    std::ranges::sort(zero_lens);
    CHECK(one_lens == std::vector<int>{1, 3});
    CHECK(zero_lens == std::vector<int>{1, 2});

    const BlockDecomposition alt = blocks(parse_state("101010"));
    CHECK(alt.blocks.size() == 6);
    for (const Block& b : alt.blocks) CHECK(b.length == 1);

    const BlockDecomposition pair = blocks(parse_state("1100"));
    CHECK(pair.blocks.size() == 2);
    CHECK(pair.blocks[0].length == 2);
    CHECK(pair.blocks[1].length == 2);

    CHECK(blocks(all_zeros(6)).uniform);
    CHECK(blocks(all_ones(6)).uniform_value == 1);
}

TEST_CASE("block counts balance for non-uniform states") {
    for (std::uint32_t b = 1; b < 63; ++b) {
        const BlockDecomposition d = blocks(State{b, 6});
        CHECK(d.count(true) == d.count(false));
    }
}

TEST_CASE("avoided-word sets at small sizes") {
    CHECK(avoid_set(4, "A").size() == 7);
    CHECK(avoid_set(5, "A").size() == 11);

    const StateSet ab4 = avoid_set(4, "AB");
    CHECK(ab4.size() == 2);
    CHECK(ab4.contains(parse_state("1010").bits));
    CHECK(ab4.contains(parse_state("0101").bits));

    CHECK_THROWS_AS(avoid_set(4, AvoidSpec{{"11001"}}), std::invalid_argument);
}

TEST_CASE("avoided-word sets are rotation invariant") {
    for (const char* letters : {"A", "AB", "AE", "BCF", "BC", "C", "CD", "D", "DE"}) {
        const StateSet s = avoid_set(6, letters);
        for (std::uint32_t b = 0; b < 64; ++b) {
            if (!s.contains(b)) continue;
            for (int r = 1; r < 6; ++r) CHECK(s.contains(rotate(State{b, 6}, r).bits));
        }
    }
}

TEST_CASE("avoided-word sets respect reflection when the spec is reversal-closed") {
    auto reflected = [](std::uint32_t b, int n) {
        std::uint32_t r = 0;
        for (int p = 0; p < n; ++p)
            if ((b >> p) & 1u) r |= 1u << ((n - p) % n);
        return r;
    };
    for (const char* letters : {"A", "AB", "C", "D", "DE"}) {
        const StateSet s = avoid_set(6, letters);
        for (std::uint32_t b = 0; b < 64; ++b)
            if (s.contains(b)) CHECK(s.contains(reflected(b, 6)));
    }
}

TEST_CASE("fixed states match the periodic sets of rules with frozen dynamics") {
    for (int n = 4; n <= 7; ++n) {
        CHECK(fixed_states(Rule(200), n) == avoid_set(n, "D"));
        CHECK(fixed_states(Rule(76), n) == avoid_set(n, "C"));
        StateSet zero_only(n);
        zero_only.insert(all_zeros(n).bits);
        CHECK(fixed_states(Rule(0), n) == zero_only);
    }
}

TEST_CASE("fixed states agree with a direct per-vertex scan") {
    for (int code : {5, 77, 128, 150, 232, 110}) {
        const Rule rule(code);
        const int n = 6;
        const StateSet fixed = fixed_states(rule, n);
        for (std::uint32_t b = 0; b < 64; ++b) {
            bool all_fixed = true;
            for (int i = 0; i < n && all_fixed; ++i)
                all_fixed = apply_local_bits(rule, b, i, n) == b;
            CHECK(fixed.contains(b) == all_fixed);
        }
    }
}
