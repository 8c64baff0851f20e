#include <catch2/catch_amalgamated.hpp>

#include "aca/rules.hpp"

using namespace aca;

TEST_CASE("tags of known rules") {
    CHECK(tag_of(Rule(29)).str() == "0x-1");
    CHECK(tag_of(Rule(204)).str() == "----");
    CHECK(tag_of(Rule(150)).str() == "-xx-");
    CHECK(tag_of(Rule(156)).str() == "-x--");
    CHECK(tag_of(Rule(51)).str() == "xxxx");
    CHECK(tag_of(Rule(232)).str() == "1--0");
    CHECK(tag_of(Rule(0)).str() == "0000");
    CHECK(tag_of(Rule(164)).str() == "100-");
    CHECK(tag_of(Rule(73)).str() == "0--x");
    CHECK(tag_of(Rule(57)).str() == "xx-x");
    CHECK(tag_of(Rule(54)).str() == "xxx-");
}

TEST_CASE("tag round-trips through its bit-pair decomposition") {
    for (int c = 0; c < 256; ++c) {
        const Rule k(c);
        CHECK(rule_of_tag(tag_of(k)) == k);
        CHECK(Tag::parse(tag_of(k).str()) == tag_of(k));
    }
}

TEST_CASE("inversion and reflection on known rules") {
    CHECK(reflect(Rule(28)).code() == 70);
    CHECK(invert(Rule(28)).code() == 199);
    CHECK(invert_reflect(Rule(28)).code() == 157);
    CHECK(invert(Rule(60)).code() == 195);
    CHECK(reflect(Rule(60)).code() == 102);
    CHECK(invert(Rule(204)).code() == 204);
    CHECK(invert(Rule(29)).code() == 71);
    CHECK(reflect(Rule(29)).code() == 71);
    CHECK(invert_reflect(Rule(29)).code() == 29);
}

TEST_CASE("inversion and reflection are commuting involutions") {
    for (int c = 0; c < 256; ++c) {
        const Rule k(c);
        CHECK(invert(invert(k)) == k);
        CHECK(reflect(reflect(k)) == k);
        CHECK(invert(reflect(k)) == reflect(invert(k)));
    }
}

TEST_CASE("tag behaviour of reflection and inversion") {
    // reflection swaps the middle two symbols; inversion swaps 0 and 1 and
    // reverses the symbol order
    auto iota = [](char c) { return c == '0' ? '1' : c == '1' ? '0' : c; };
    for (int c = 0; c < 256; ++c) {
        const Rule k(c);
        const std::string t = tag_of(k).str();  // t3 t2 t1 t0
        const std::string refl = {t[0], t[2], t[1], t[3]};
        CHECK(tag_of(reflect(k)).str() == refl);
        const std::string inv = {iota(t[3]), iota(t[2]), iota(t[1]), iota(t[0])};
        CHECK(tag_of(invert(k)).str() == inv);
    }
}

TEST_CASE("equivalence classes partition the rule space into 88 classes") {
    const auto classes = equivalence_classes();
    CHECK(classes.size() == 88);
    std::size_t total = 0;
    for (const auto& cls : classes) total += cls.members.size();
    CHECK(total == 256);

    CHECK(equivalence_class_of(Rule(204)).members == std::vector<int>{204});

    int meeting_independent = 0;
    for (const auto& cls : classes)
        for (int m : cls.members)
            if (is_omega_independent(Rule(m))) {
                ++meeting_independent;
                break;
            }
    CHECK(meeting_independent == 41);
}

TEST_CASE("the order-independent list") {
    CHECK(omega_independent_rules.size() == 104);
    CHECK(is_omega_independent(Rule(110)));
    CHECK_FALSE(is_omega_independent(Rule(30)));
    int count = 0;
    for (int c = 0; c < 256; ++c) count += is_omega_independent(Rule(c)) ? 1 : 0;
    CHECK(count == 104);

    // closed under the equivalence maps
    for (int c : omega_independent_rules) {
        CHECK(is_omega_independent(invert(Rule(c))));
        CHECK(is_omega_independent(reflect(Rule(c))));
    }
}

TEST_CASE("each class of an order-independent rule holds exactly one representative") {
    for (int c : omega_independent_rules) {
        const auto cls = equivalence_class_of(Rule(c));
        int reps = 0;
        for (int m : cls.members) reps += is_representative(Rule(m)) ? 1 : 0;
        CHECK(reps == 1);
        CHECK(is_representative(representative_of(Rule(c))));
    }
    CHECK(representatives().size() == 41);
}

TEST_CASE("invertibility and invertibilization") {
    CHECK(is_invertible(Rule(51)));
    CHECK(is_invertible(Rule(156)));
    CHECK_FALSE(is_invertible(Rule(232)));

    CHECK(invertibilize(Rule(28)).code() == 156);
    CHECK(invertibilize(Rule(29)).code() == 156);
    CHECK(invertibilize(Rule(73)).code() == 201);
    CHECK(invertibilize(Rule(137)).code() == 201);
    CHECK(invertibilize(Rule(204)).code() == 204);

    for (int c = 0; c < 256; ++c) {
        const Rule k(c);
        CHECK(invertibilize(invertibilize(k)) == invertibilize(k));
        CHECK((invertibilize(k) == k) == is_invertible(k));
        CHECK(is_invertible(invertibilize(k)));
    }
}

TEST_CASE("rule code bounds are enforced") {
    CHECK_THROWS_AS(Rule(300), std::out_of_range);
    CHECK_THROWS_AS(Rule(-1), std::out_of_range);
}
