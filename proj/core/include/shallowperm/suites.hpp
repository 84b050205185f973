#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shallowperm/enumeration.hpp"

namespace shallowperm {

/// One named verification outcome. Exploratory checks record a finding:
/// `passed` then only says the computation ran and self-verified.
struct Check {
    std::string suite;
    std::string name;
    bool passed = false;
    bool exploratory = false;
    std::string detail;
};

struct SuiteConfig {
    /// Upper bound on every size a check examines. Each check also has its
    /// own nominal range and uses the smaller of the two.
    std::size_t max_n = 8;
    EnumerationLimits limits;
};

enum class Suite { Table1, Descents, Symmetry, Structure, Closure, Mesh, Series, Explore, All };

std::string_view to_string(Suite s) noexcept;
std::optional<Suite> parse_suite(std::string_view text);

std::vector<Check> run_suite(Suite suite, const SuiteConfig& cfg);

bool all_passed(const std::vector<Check>& checks) noexcept;

// Individual check groups, also used directly by the acceptance binary.

/// is_shallow agrees with the certificate verdict and the certificate
/// replays to its subject, for every permutation of size <= 8.
std::vector<Check> check_deciders(const SuiteConfig& cfg);

/// Totals for 132, 213, 321 (F_{2n-1}), 231, 312 (T231) and 123 (T123),
/// n <= 10, constructive with a brute-force cross-check for n <= 9.
std::vector<Check> check_table1(const SuiteConfig& cfg);

/// Descent tables for 132, 321, 231 and 312 against their bivariate
/// series, n <= 9; the 123 table is recorded without an oracle.
std::vector<Check> check_descents(const SuiteConfig& cfg);

/// Shallow permutations with at most one descent, 2 <= n <= 10.
std::vector<Check> check_grassmannian(const SuiteConfig& cfg);

/// Involution / centrosymmetric / persymmetric counts for 132, 231, 123
/// and 321, n <= 10.
std::vector<Check> check_symmetry(const SuiteConfig& cfg);

/// Counts and shapes of structurally constrained subclasses.
std::vector<Check> check_structure(const SuiteConfig& cfg);

/// Closure properties of the shallow class and related exhaustive identities.
std::vector<Check> check_closure(const SuiteConfig& cfg);

/// Anchored 3412 avoidance by shallow permutations and its inverse duality.
std::vector<Check> check_mesh(const SuiteConfig& cfg);

/// Exact-series integrity of every catalog entry at order 12.
std::vector<Check> check_series(const SuiteConfig& cfg);

/// Profile comparison and counterexample search; findings, not claims.
std::vector<Check> check_exploration(const SuiteConfig& cfg);

}  // namespace shallowperm
