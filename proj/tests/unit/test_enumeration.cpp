#include <doctest.h>

#include "oracles.hpp"
#include "shallowperm/error.hpp"
#include "shallowperm/enumeration.hpp"
#include "shallowperm/shallow.hpp"

using namespace shallowperm;

namespace {

CountQuery query(std::size_t lo, std::size_t hi, std::vector<std::string> avoid = {}) {
    CountQuery q;
    q.sizes = {lo, hi};
    for (const auto& a : avoid) q.avoid.push_back(parse_pattern_spec(a));
    return q;
}

}  // namespace

TEST_CASE("count examples") {
    CHECK(count(query(4, 4, {"231"})).rows.at(0).count == 14);
    CHECK(count(query(4, 4)).rows.at(0).count == 23);
    auto q = query(5, 5, {"132"});
    q.symmetry = SymmetryClass::Involution;
    CHECK(count(q).rows.at(0).count == 8);
    auto c = query(5, 5, {"123"});
    c.symmetry = SymmetryClass::Centrosymmetric;
    CHECK(count(c).rows.at(0).count == 1);
}

TEST_CASE("the three methods agree with a naive filter, n <= 7") {
    const std::vector<std::vector<std::string>> avoid_sets{{}, {"132"}, {"231", "312"}, {"3n12"}, {"u3412", "123"}};
    for (const auto& avoid : avoid_sets) {
        for (auto method : {Method::BruteForce, Method::Constructive, Method::Both}) {
            auto q = query(0, 7, avoid);
            q.method = method;
            q.refine_by = Statistic::Cycles;
            const CountTable t = count(q);
            for (std::size_t n = 0; n <= 7; ++n) {
                std::vector<std::uint64_t> by_cyc(n + 1, 0);
                for (const auto& w : oracle::all_perms(static_cast<int>(n))) {
                    if (!oracle::shallow(w)) continue;
                    bool keep = true;
                    for (const auto& a : avoid) {
                        if (a == "3n12") keep &= !oracle::contains(w, {3, 4, 1, 2}, oracle::Anchored::ValueMax4Min1);
                        else if (a == "u3412") keep &= !oracle::contains(w, {3, 4, 1, 2}, oracle::Anchored::First3Last2);
                        else {
                            oracle::Word pat;
                            for (char ch : a) pat.push_back(ch - '0');
                            keep &= !oracle::contains(w, pat);
                        }
                    }
                    if (keep) ++by_cyc[oracle::cycles(w)];
                }
                for (const auto& row : t.rows) {
                    if (row.n != n) continue;
                    REQUIRE(row.k.has_value());
                    REQUIRE(row.count == by_cyc.at(*row.k));
                }
            }
        }
    }
}

TEST_CASE("statistic ranges and row layout") {
    CHECK(statistic_range(Statistic::Descents, 4) == std::pair<std::size_t, std::size_t>{0, 3});
    CHECK(statistic_range(Statistic::Cycles, 4) == std::pair<std::size_t, std::size_t>{1, 4});
    CHECK(statistic_range(Statistic::LrMaxima, 0) == std::pair<std::size_t, std::size_t>{0, 0});
    auto q = query(1, 4, {"321"});
    q.refine_by = Statistic::LrMaxima;
    const CountTable t = count(q);
    CHECK(t.rows.size() == 1 + 2 + 3 + 4);
    for (std::size_t n = 1; n <= 4; ++n) CHECK(t.total(n) == oracle::fib(2 * static_cast<int>(n) - 1));
}

TEST_CASE("size caps") {
    EnumerationLimits small{5, 6, 1};
    auto q = query(6, 6);
    q.method = Method::BruteForce;
    CHECK_THROWS_AS(count(q, small), SizeCapExceeded);
    q.method = Method::Constructive;
    CHECK_NOTHROW(count(q, small));
    q.sizes = {7, 7};
    CHECK_THROWS_AS(count(q, small), SizeCapExceeded);
    q.sizes = {5, 5};
    q.method = Method::Both;
    CHECK(count(q, small).rows.at(0).count == count_shallow(5));
}

TEST_CASE("thread count does not change results") {
    for (std::size_t threads : {1u, 2u, 7u}) {
        EnumerationLimits lim{10, 12, threads};
        auto q = query(9, 9, {"123"});
        q.refine_by = Statistic::Descents;
        const CountTable t = count(q, lim);
        EnumerationLimits one{10, 12, 1};
        CHECK(t.rows == count(q, one).rows);
        CHECK(t.total(9) == count(query(9, 9, {"123"}), lim).rows.at(0).count);
    }
}

TEST_CASE("descent tables") {
    const CountTable t = descent_table(6, parse_pattern_spec("132"));
    for (const auto& r : t.rows) {
        REQUIRE(r.k.has_value());
        CHECK(r.count == oracle::choose(2 * static_cast<int>(r.n) - 2 - static_cast<int>(*r.k), static_cast<int>(*r.k)));
        if (*r.k == 0) CHECK(r.count == 1);
        if (r.n == 4 && *r.k == 1) CHECK(r.count == 5);
    }
}

TEST_CASE("verify against oracles") {
    const CountTable fib = count(query(1, 8, {"132"}));
    const VerificationReport ok = verify(fib, ClosedForm::FibOdd);
    CHECK(ok.overall);
    CHECK(ok.entries.size() == 8);
    CHECK_FALSE(ok.first_mismatch.has_value());
    CHECK(verify(fib, GfName::FibOdd).overall);
    // Bivariate oracle on an unrefined table compares row sums.
    CHECK(verify(count(query(1, 8, {"321"})), GfName::A321xz).overall);

    CHECK(verify(descent_table(8, parse_pattern_spec("321")), GfName::A321xz).overall);
    CHECK(verify(descent_table(8, parse_pattern_spec("231")), GfName::T231xt).overall);

    CountTable bad = fib;
    bad.rows[4].count += 1;
    const VerificationReport r = verify(bad, ClosedForm::FibOdd);
    CHECK_FALSE(r.overall);
    REQUIRE(r.first_mismatch.has_value());
    CHECK(r.first_mismatch->n == 5);
    CHECK_FALSE(r.entries[4].match);
    CHECK(r.entries[3].match);

    CHECK_THROWS_AS(verify(count(query(1, 5, {"231"})), ClosedForm::StartNNm1_231), OracleDomainError);
    CHECK_THROWS_AS(verify(descent_table(4, parse_pattern_spec("132")), ClosedForm::FibOdd), OracleDomainError);
    CHECK_THROWS_AS(verify(descent_table(4, parse_pattern_spec("132")), GfName::T231), OracleDomainError);
}

TEST_CASE("profile") {
    const ProfileComparison one = profile(1);
    CHECK(one.equal);
    CHECK(one.left.multiset.size() == 1);
    CHECK(one.left.multiset.at({1, 1}) == 1);
    CHECK(one.right.multiset.at({1, 1}) == 1);
    const ProfileComparison three = profile(3);
    CHECK(three.left.total() == 5);
    CHECK(three.right.total() == 5);
    CHECK(profile(5).left.total() == 34);
    // Marginals are computed from the multisets.
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto pc = profile(n);
        CHECK(pc.first_marginals_equal == (pc.left.marginal(0) == pc.right.marginal(0)));
    }
}

TEST_CASE("mesh counterexample search") {
    CHECK_FALSE(search_mesh_counterexample(3).has_value());
    CHECK_FALSE(search_mesh_counterexample(4).has_value());
    const auto w = search_mesh_counterexample(6);
    REQUIRE(w.has_value());
    const oracle::Word word(w->word().begin(), w->word().end());
    CHECK_FALSE(oracle::shallow(word));
    CHECK_FALSE(oracle::contains(word, {3, 4, 1, 2}, oracle::Anchored::ValueMax4Min1));
    CHECK_FALSE(oracle::contains(word, {3, 4, 1, 2}, oracle::Anchored::First3Last2));
    // Nothing lexicographically earlier of the same size qualifies.
    for (const auto& p : oracle::all_perms(static_cast<int>(w->size()))) {
        if (p == word) break;
        REQUIRE((oracle::shallow(p) || oracle::contains(p, {3, 4, 1, 2}, oracle::Anchored::ValueMax4Min1) ||
                 oracle::contains(p, {3, 4, 1, 2}, oracle::Anchored::First3Last2)));
    }
    CHECK_THROWS_AS(search_mesh_counterexample(11), SizeCapExceeded);
}
