#include <catch2/catch_amalgamated.hpp>

#include "aca/bsgs.hpp"
#include "aca/orbits.hpp"

using namespace aca;

namespace {

Permutation cycle(std::size_t degree, std::initializer_list<int> pts) {
    std::vector<Permutation::point> img(degree);
    std::iota(img.begin(), img.end(), Permutation::point{0});
    auto it = pts.begin();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        img[static_cast<std::size_t>(*(it + static_cast<long>(i)))] =
            static_cast<Permutation::point>(*(it + static_cast<long>(i) + 1));
    }
    if (pts.size() > 1) img[static_cast<std::size_t>(*(pts.end() - 1))] = static_cast<Permutation::point>(*pts.begin());
    return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("permutation basics") {
    const Permutation id = Permutation::identity(5);
    CHECK(id.is_identity());
    CHECK(id.is_involution());
    CHECK(id.order() == 1);

    const Permutation c = cycle(9, {0, 1});
    const Permutation d = cycle(9, {2, 3, 4});
    const Permutation e = cycle(9, {5, 6, 7, 8});
    const Permutation g = c.then(d).then(e);
    CHECK(g.order() == 12);
    CHECK_FALSE(g.is_even());  // one transposition plus one 4-cycle

    CHECK(g.then(g.inverse()).is_identity());
    CHECK(cycle(4, {0, 1}).transposition_count() == 1);
}

TEST_CASE("group orders for standard generator sets") {
    CHECK(PermGroup::trivial(6).order() == 1);
    CHECK(PermGroup(6, {Permutation::identity(6)}).order() == 1);

    // commuting disjoint transpositions generate an elementary abelian group
    std::vector<Permutation> swaps;
    for (int i = 0; i < 4; ++i) swaps.push_back(cycle(8, {2 * i, 2 * i + 1}));
    CHECK(PermGroup(8, swaps).order() == 16);

    // adjacent transpositions generate the full symmetric group
    for (std::size_t d : {3u, 5u, 7u}) {
        std::vector<Permutation> gens;
        for (std::size_t i = 0; i + 1 < d; ++i)
            gens.push_back(cycle(d, {static_cast<int>(i), static_cast<int>(i + 1)}));
        CHECK(PermGroup(d, gens).order() == big_factorial(static_cast<unsigned>(d)));
    }

    // 3-cycles generate the alternating group
    std::vector<Permutation> three;
    for (int i = 0; i + 2 < 6; ++i) three.push_back(cycle(6, {i, i + 1, i + 2}));
    CHECK(PermGroup(6, three).order() == big_factorial(6) / 2);

    // a single 12-cycle-structure element generates a cyclic group
    const Permutation g = cycle(9, {0, 1}).then(cycle(9, {2, 3, 4})).then(cycle(9, {5, 6, 7, 8}));
    CHECK(PermGroup(9, {g}).order() == 12);
}

TEST_CASE("stabilizer chains pass their own verification") {
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i + 1 < 6; ++i)
        gens.push_back(cycle(6, {static_cast<int>(i), static_cast<int>(i + 1)}));
    const PermGroup sym6(6, gens);
    CHECK(sym6.verify_strong_generation());
    CHECK(sym6.order() == 720);
    CHECK(sym6.base().size() == sym6.transversal_sizes().size());
}

TEST_CASE("membership via sifting") {
    std::vector<Permutation> gens = {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1})};
    const PermGroup sym5(5, gens);
    CHECK(sym5.order() == 120);
    CHECK(sym5.contains(cycle(5, {2, 4})));

    const PermGroup alt5(5, {cycle(5, {0, 1, 2}), cycle(5, {2, 3, 4})});
    CHECK(alt5.order() == 60);
    CHECK(alt5.contains(cycle(5, {0, 1, 2})));
    CHECK_FALSE(alt5.contains(cycle(5, {0, 1})));
    CHECK(alt5.is_subgroup_of(sym5));
    CHECK_FALSE(sym5.is_subgroup_of(alt5));
}

TEST_CASE("bsgs order equals naive closure order on moderate groups") {
    std::vector<std::vector<Permutation>> generator_sets;
    generator_sets.push_back({cycle(7, {0, 1}), cycle(7, {0, 1, 2, 3, 4, 5, 6})});  // Sym_7
    generator_sets.push_back({cycle(6, {0, 1, 2}), cycle(6, {3, 4, 5}), cycle(6, {0, 3})});
    generator_sets.push_back({cycle(8, {0, 1}).then(cycle(8, {2, 3})), cycle(8, {4, 5, 6, 7})});
    for (const auto& gens : generator_sets) {
        const std::size_t degree = gens.front().degree();
        const auto closure = naive_closure(degree, gens, 100000);
        REQUIRE(closure.has_value());
        CHECK(PermGroup(degree, gens).order() == closure->size());
    }
    // the cap is respected
    CHECK_FALSE(naive_closure(9, {cycle(9, {0, 1}), cycle(9, {0, 1, 2, 3, 4, 5, 6, 7, 8})}, 1000)
                    .has_value());
}

TEST_CASE("orbit partitions") {
    const Permutation g = cycle(9, {0, 1}).then(cycle(9, {2, 3, 4})).then(cycle(9, {5, 6, 7, 8}));
    const OrbitPartition part = orbits(9, {g});
    REQUIRE(part.count() == 3);
    CHECK(part.orbits[0] == std::vector<Permutation::point>{0, 1});
    CHECK(part.orbits[1] == std::vector<Permutation::point>{2, 3, 4});
    CHECK(part.orbits[2] == std::vector<Permutation::point>{5, 6, 7, 8});
    CHECK(part.orbit_index[3] == 1);

    const auto restricted = restrict_to_orbit({g}, part.orbits[2]);
    REQUIRE(restricted.size() == 1);
    CHECK(restricted[0].order() == 4);

    // the trivial group has singleton orbits only
    CHECK(orbits(5, {}).count() == 5);
}
