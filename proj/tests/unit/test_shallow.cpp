#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "shallowperm/error.hpp"
#include "shallowperm/shallow.hpp"

using namespace shallowperm;

namespace {
oracle::Word W(const Permutation& p) { return {p.word().begin(), p.word().end()}; }
}  // namespace

TEST_CASE("is_shallow on examples") {
    CHECK(is_shallow(Permutation{4, 2, 1, 6, 3, 5}));
    CHECK_FALSE(is_shallow(Permutation{3, 4, 1, 2}));
    for (std::size_t n = 0; n <= 12; ++n) CHECK(is_shallow(identity(n)));
}

TEST_CASE("is_shallow matches the defining identity on S_n, n <= 8") {
    for (int n = 0; n <= 8; ++n) {
        std::size_t count = 0;
        for (const auto& w : oracle::all_perms(n)) {
            const bool s = oracle::shallow(w);
            REQUIRE(is_shallow(std::span<const int>(w)) == s);
            count += s;
        }
        CHECK(count == count_shallow(n));
    }
}

TEST_CASE("achieves_upper_bound") {
    CHECK_FALSE(achieves_upper_bound(Permutation{3, 2, 1}));
    CHECK(achieves_upper_bound(identity(4)));
    for (const auto& w : oracle::all_perms(5)) {
        const bool upper = oracle::displacement(w) == 2 * oracle::inversions(w);
        REQUIRE(achieves_upper_bound(std::span<const int>(w)) == upper);
        if (!oracle::contains(w, {3, 2, 1})) REQUIRE(upper);
    }
}

TEST_CASE("right and left operators") {
    CHECK(r_operator(Permutation{4, 2, 1, 6, 3, 5}) == Permutation{4, 2, 1, 5, 3});
    CHECK(r_operator(Permutation{4, 2, 1, 5, 3}) == Permutation{4, 2, 1, 3});
    CHECK(r_operator(identity(4)) == identity(3));
    CHECK(l_operator(Permutation{4, 2, 1, 6, 3, 5}) == Permutation{1, 3, 5, 2, 4});
    CHECK(l_operator(identity(4)) == identity(3));
    CHECK(l_operator(Permutation{3, 1, 2}) == Permutation{2, 1});
    CHECK_THROWS_AS(r_operator(Permutation{1}), SizeTooSmall);
    CHECK_THROWS_AS(l_operator(Permutation{}), SizeTooSmall);
}

TEST_CASE("certificate of the worked example") {
    const ShallowCertificate c = certify_shallow(Permutation{4, 2, 1, 6, 3, 5});
    CHECK(c.verdict);
    REQUIRE(c.steps.size() == 5);
    CHECK(c.steps[0].position_of_max == 4);
    CHECK(c.steps[0].moved_value == 5);
    CHECK(c.steps[0].classification == StepKind::LeftToRightMax);
    CHECK(c.steps[1].classification == StepKind::RightToLeftMin);
    CHECK(c.steps[4].classification == StepKind::AppendedMax);
    CHECK_FALSE(c.steps[4].moved_value.has_value());
    CHECK(c.base == Permutation{1});
    CHECK(replay(c) == c.subject);
}

TEST_CASE("certificate of a non-shallow permutation") {
    const ShallowCertificate c = certify_shallow(Permutation{3, 4, 1, 2});
    CHECK_FALSE(c.verdict);
    CHECK(std::any_of(c.steps.begin(), c.steps.end(),
                      [](const ReductionStep& s) { return s.classification == StepKind::Violation; }));
    CHECK(replay(c) == c.subject);
}

TEST_CASE("certificate base cases") {
    const ShallowCertificate one = certify_shallow(Permutation{1});
    CHECK(one.verdict);
    CHECK(one.steps.empty());
    const ShallowCertificate none = certify_shallow(Permutation{});
    CHECK(none.verdict);
    CHECK(none.steps.empty());
}

TEST_CASE("certificate steps follow the step rule") {
    // The moved value is judged in the reduced word: a left-to-right maximum
    // or right-to-left minimum there, otherwise a violation.
    for (const auto& w : oracle::all_perms(6)) {
        const ShallowCertificate c = certify_shallow(Permutation(w));
        oracle::Word cur = w;
        for (const auto& s : c.steps) {
            const int n = static_cast<int>(cur.size());
            const std::size_t j = std::find(cur.begin(), cur.end(), n) - cur.begin();
            REQUIRE(s.position_of_max == j + 1);
            if (static_cast<int>(j) == n - 1) {
                REQUIRE(s.classification == StepKind::AppendedMax);
                cur.pop_back();
                continue;
            }
            cur[j] = cur.back();
            cur.pop_back();
            const bool lr = std::all_of(cur.begin(), cur.begin() + j, [&](int v) { return v < cur[j]; });
            const bool rl = std::all_of(cur.begin() + j + 1, cur.end(), [&](int v) { return v > cur[j]; });
            const StepKind expected =
                lr ? StepKind::LeftToRightMax : rl ? StepKind::RightToLeftMin : StepKind::Violation;
            REQUIRE(s.classification == expected);
        }
        REQUIRE(c.verdict == oracle::shallow(w));
    }
}

TEST_CASE("extend_right") {
    CHECK(extend_right(Permutation{4, 2, 1, 5, 3}, ExtensionSlot::at(4)) == Permutation{4, 2, 1, 6, 3, 5});
    CHECK(extend_right(Permutation{3, 2, 1}, ExtensionSlot::append()) == Permutation{3, 2, 1, 4});
    CHECK(extend_right(Permutation{1, 2}, ExtensionSlot::at(1)) == Permutation{3, 2, 1});
    // The 2 of 4231 is neither a left-to-right maximum nor a right-to-left minimum.
    CHECK_THROWS_AS(extend_right(Permutation{4, 2, 3, 1}, ExtensionSlot::at(2)), IllegalSlot);
    CHECK_THROWS_AS(extend_right(Permutation{1, 2}, ExtensionSlot::at(3)), IllegalSlot);
    const auto slots = legal_slots(Permutation{4, 2, 3, 1});
    REQUIRE(!slots.empty());
    CHECK(slots.front().is_append());
    CHECK(slots.size() == 3);  // append, position 1, position 4
}

TEST_CASE("generated sets match brute force") {
    for (int n = 0; n <= 8; ++n) {
        std::set<oracle::Word> expected;
        for (const auto& w : oracle::all_perms(n))
            if (oracle::shallow(w)) expected.insert(w);
        std::set<oracle::Word> got;
        std::size_t visits = 0;
        for_each_shallow(n, [&](std::span<const int> w) {
            got.emplace(w.begin(), w.end());
            ++visits;
        });
        REQUIRE(visits == got.size());
        REQUIRE(got == expected);
    }
    CHECK(generate_shallow(3).size() == 6);
    CHECK(generate_shallow(1) == std::vector<Permutation>{Permutation{1}});
    const auto t4 = generate_shallow(4);
    CHECK(t4.size() == 23);
    CHECK(std::find(t4.begin(), t4.end(), Permutation{3, 4, 1, 2}) == t4.end());
}

TEST_CASE("partitioned generation covers the stream exactly once") {
    for (std::size_t n : {3u, 7u, 8u}) {
        for (std::size_t parts : {1u, 3u, 16u}) {
            std::multiset<oracle::Word> got;
            for (std::size_t k = 0; k < parts; ++k)
                for_each_shallow_part(n, k, parts, [&](std::span<const int> w) { got.emplace(w.begin(), w.end()); });
            std::multiset<oracle::Word> all;
            for_each_shallow(n, [&](std::span<const int> w) { all.emplace(w.begin(), w.end()); });
            REQUIRE(got == all);
        }
    }
}

TEST_CASE("wrap_n1") {
    CHECK(wrap_n1(Permutation{1}) == Permutation{3, 2, 1});
    CHECK(wrap_n1(Permutation{1, 2}) == Permutation{4, 2, 3, 1});
    CHECK(is_shallow(Permutation{4, 2, 3, 1}));
    const Permutation w = wrap_n1(Permutation{3, 4, 1, 2});
    CHECK(w == Permutation{6, 4, 5, 2, 3, 1});
    CHECK_FALSE(is_shallow(w));
    CHECK(oracle::shallow(W(w)) == false);
}
