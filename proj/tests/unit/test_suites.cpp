#include <doctest.h>

#include "shallowperm/suites.hpp"

using namespace shallowperm;

TEST_CASE("suite names round-trip") {
    for (Suite s : {Suite::Table1, Suite::Descents, Suite::Symmetry, Suite::Structure, Suite::Closure,
                    Suite::Mesh, Suite::Series, Suite::Explore, Suite::All})
        CHECK(parse_suite(to_string(s)) == s);
    CHECK_FALSE(parse_suite("bogus").has_value());
}

TEST_CASE("every suite passes at small sizes") {
    SuiteConfig cfg;
    cfg.max_n = 6;
    const auto checks = run_suite(Suite::All, cfg);
    CHECK(checks.size() > 40);
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
    }
}

TEST_CASE("max_n bounds the sizes a check examines") {
    SuiteConfig cfg;
    cfg.max_n = 4;
    const auto checks = check_table1(cfg);
    REQUIRE(!checks.empty());
    CHECK(checks.front().detail == "1,2,5,13 = F_{2n-1}");
}

TEST_CASE("exploratory checks are flagged") {
    SuiteConfig cfg;
    cfg.max_n = 5;
    for (const auto& c : check_exploration(cfg)) CHECK(c.exploratory);
}
