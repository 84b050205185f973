#include <doctest.h>

#include "oracles.hpp"
#include "shallowperm/error.hpp"
#include "shallowperm/pattern.hpp"

using namespace shallowperm;

namespace {
const PatternSpec kValue = PatternSpec::value_anchored_3412();
const PatternSpec kPosition = PatternSpec::position_anchored_3412();
const PatternSpec kPlain(Permutation{3, 4, 1, 2});
}  // namespace

TEST_CASE("pattern spec parsing and validation") {
    CHECK(parse_pattern_spec("132").is_classical());
    CHECK(parse_pattern_spec("3n12") == kValue);
    CHECK(parse_pattern_spec("u3412") == kPosition);
    CHECK(kValue.name() == "3n12");
    CHECK(kPosition.name() == "u3412");
    CHECK(parse_pattern_spec("231").name() == "231");
    CHECK_THROWS(parse_pattern_spec("12345"));
    CHECK_THROWS(parse_pattern_spec("1x2"));
    CHECK_THROWS(parse_pattern_spec("113"));
    // ValueMax must sit on the largest letter, PosFirst on the first one.
    CHECK_THROWS_AS(PatternSpec(Permutation{1, 2}, {static_cast<std::uint8_t>(Anchor::ValueMax), 0}),
                    InvalidPatternSpec);
    CHECK_THROWS_AS(PatternSpec(Permutation{1, 2}, {0, static_cast<std::uint8_t>(Anchor::PosFirst)}),
                    InvalidPatternSpec);
}

TEST_CASE("witness subsequences from the worked examples are occurrences") {
    const Permutation h1 = parse_permutation("642981537");
    const Permutation h2 = parse_permutation("672198435");
    // 4,9,1,3 in h1; 6,8,3,5 in h2; 6,8,1,5 in h1.
    CHECK(is_occurrence(h1.word(), kValue, Occurrence{{2, 4, 6, 8}}));
    CHECK(is_occurrence(h2.word(), kPosition, Occurrence{{1, 6, 8, 9}}));
    CHECK(is_occurrence(h1.word(), kPlain, Occurrence{{1, 5, 6, 7}}));
    CHECK_FALSE(is_occurrence(h1.word(), kValue, Occurrence{{1, 5, 6, 7}}));
}

TEST_CASE("find_occurrence returns the lexicographically least occurrence") {
    const Permutation h1 = parse_permutation("642981537");
    const Permutation h2 = parse_permutation("672198435");
    CHECK(find_occurrence(h1, kValue) == Occurrence{{1, 4, 6, 7}});
    CHECK(find_occurrence(h1, kPlain) == Occurrence{{1, 4, 6, 7}});
    CHECK(find_occurrence(h2, kPosition) == Occurrence{{1, 2, 3, 9}});
    CHECK_FALSE(find_occurrence(Permutation{1, 2, 3}, PatternSpec(Permutation{2, 1})).has_value());
}

TEST_CASE("avoidance examples") {
    CHECK(avoids(Permutation{3, 4, 1, 2}, PatternSpec(Permutation{1, 3, 2})));
    CHECK_FALSE(avoids(Permutation{3, 4, 1, 2}, kValue));
    CHECK_FALSE(avoids(Permutation{3, 4, 1, 2}, kPosition));
    CHECK(avoids(identity(7), PatternSpec(Permutation{3, 2, 1})));
    const std::vector<PatternSpec> none;
    CHECK(avoids(Permutation{2, 1}, none));
}

TEST_CASE("containment agrees with subset enumeration, n <= 7") {
    const std::vector<oracle::Word> pats{{1}, {2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 2, 1}, {1, 2, 3}, {3, 4, 1, 2}, {2, 4, 1, 3}};
    for (int n = 0; n <= 7; ++n) {
        for (const auto& w : oracle::all_perms(n)) {
            for (const auto& pat : pats) {
                const PatternSpec spec{Permutation(pat)};
                const auto occ = find_occurrence(std::span<const int>(w), spec);
                REQUIRE(occ.has_value() == oracle::contains(w, pat));
                if (occ) REQUIRE(is_occurrence(w, spec, *occ));
            }
            REQUIRE(contains(w, kValue) == oracle::contains(w, {3, 4, 1, 2}, oracle::Anchored::ValueMax4Min1));
            REQUIRE(contains(w, kPosition) == oracle::contains(w, {3, 4, 1, 2}, oracle::Anchored::First3Last2));
        }
    }
}

TEST_CASE("lexicographic minimality against exhaustive search") {
    for (const auto& w : oracle::all_perms(6)) {
        const auto occ = find_occurrence(std::span<const int>(w), kPlain);
        if (!occ) continue;
        // No lexicographically smaller index tuple is an occurrence.
        for (std::size_t a = 1; a <= 6; ++a)
            for (std::size_t b = a + 1; b <= 6; ++b)
                for (std::size_t c = b + 1; c <= 6; ++c)
                    for (std::size_t d = c + 1; d <= 6; ++d) {
                        const Occurrence o{{a, b, c, d}};
                        if (o.indices < occ->indices) REQUIRE_FALSE(is_occurrence(w, kPlain, o));
                    }
    }
}
