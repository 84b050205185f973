#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shallowperm/pattern.hpp"
#include "shallowperm/permutation.hpp"
#include "shallowperm/series.hpp"

namespace shallowperm {

enum class Method { BruteForce, Constructive, Both };
enum class Statistic { Descents, Cycles, LrMaxima };

std::string_view to_string(Method m) noexcept;
std::string_view to_string(Statistic s) noexcept;
std::uint64_t evaluate(Statistic s, std::span<const int> word);

struct EnumerationLimits {
    std::size_t brute_force_max = 10;
    std::size_t constructive_max = 12;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    std::size_t threads = 0;
};

struct SizeRange {
    std::size_t lo = 1;
    std::size_t hi = 1;
    friend bool operator==(const SizeRange&, const SizeRange&) = default;
};

/// Which shallow permutations to keep. `extra` is an optional predicate on
/// the one-line word for structural checks (position constraints etc.).
struct MemberFilter {
    std::vector<PatternSpec> avoid;
    std::optional<SymmetryClass> symmetry;
    std::function<bool(std::span<const int>)> extra;

    bool accepts(std::span<const int> word) const;
};

struct CountQuery {
    SizeRange sizes;
    std::vector<PatternSpec> avoid;
    std::optional<SymmetryClass> symmetry;
    std::optional<Statistic> refine_by;
    Method method = Method::Constructive;
};

struct CountRow {
    std::size_t n = 0;
    std::optional<std::size_t> k;
    BigInt count;
    std::chrono::nanoseconds elapsed{0};

    friend bool operator==(const CountRow& a, const CountRow& b) {
        return a.n == b.n && a.k == b.k && a.count == b.count;
    }
};

struct CountTable {
    CountQuery query;
    std::vector<CountRow> rows;
    Method provenance = Method::Constructive;

    /// Sum over k of the rows at size n (or the single row when unrefined).
    BigInt total(std::size_t n) const;
};

/// Range of statistic values reported for size n.
std::pair<std::size_t, std::size_t> statistic_range(Statistic s, std::size_t n) noexcept;

/// Shallow permutations of size n passing each filter, counted in one pass.
/// Result[f][v] is the number passing filter f whose `refine` statistic is v
/// (a single bucket when refine is empty). Method::Both runs both engines
/// and throws MethodDisagreement on any difference.
std::vector<std::vector<BigInt>> tally(std::size_t n, Method method,
                                       std::span<const MemberFilter> filters,
                                       std::optional<Statistic> refine = std::nullopt,
                                       const EnumerationLimits& limits = {});

BigInt count_members(std::size_t n, Method method, const MemberFilter& filter,
                     const EnumerationLimits& limits = {});

/// Throws SizeCapExceeded or MethodDisagreement.
CountTable count(const CountQuery& q, const EnumerationLimits& limits = {});

/// Rows (n, k, a_{n,k}) for 1 <= n <= n_max and 0 <= k < n, constructive.
CountTable descent_table(std::size_t n_max, const PatternSpec& avoid,
                         const EnumerationLimits& limits = {});

/// Calls `visit` for every permutation of size n in lexicographic order.
void for_each_permutation(std::size_t n, const std::function<void(std::span<const int>)>& visit);

using Oracle = std::variant<GfName, ClosedForm>;
std::string oracle_name(const Oracle& o);

struct VerificationEntry {
    CountRow row;
    BigInt oracle;
    bool match = false;
};

struct VerificationReport {
    std::string oracle;
    std::vector<VerificationEntry> entries;
    bool overall = true;
    std::optional<CountRow> first_mismatch;
};

/// Compares every row with the oracle. Refined tables need a bivariate
/// catalog entry; unrefined tables accept closed forms, univariate entries,
/// or bivariate entries (compared through their row sums). Throws
/// OracleDomainError when the oracle does not cover a row.
VerificationReport verify(const CountTable& table, const Oracle& oracle);

/// Multiset of statistic tuples over one class.
struct StatProfile {
    std::size_t n = 0;
    std::string class_descriptor;
    std::map<std::pair<std::uint64_t, std::uint64_t>, BigInt> multiset;

    BigInt total() const;
    /// Distribution of one coordinate (0 or 1) of the tuples.
    std::map<std::uint64_t, BigInt> marginal(int coordinate) const;
};

struct ProfileComparison {
    StatProfile left;   // (cyc, des + 1) over shallow 132-avoiders
    StatProfile right;  // (cyc, lrmax) over shallow 321-avoiders
    bool equal = false;
    bool first_marginals_equal = false;
    bool second_marginals_equal = false;
};

ProfileComparison profile(std::size_t n, const EnumerationLimits& limits = {});

/// First non-shallow permutation (by size, then lexicographically) avoiding
/// both anchored 3412 patterns, searching sizes up to n_max. A returned
/// witness has been re-checked against both conditions.
std::optional<Permutation> search_mesh_counterexample(std::size_t n_max,
                                                      const EnumerationLimits& limits = {});

}  // namespace shallowperm
