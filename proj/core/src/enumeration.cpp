#include "shallowperm/enumeration.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "shallowperm/error.hpp"
#include "shallowperm/shallow.hpp"

namespace shallowperm {

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::BruteForce: return "brute";
        case Method::Constructive: return "constructive";
        case Method::Both: return "both";
    }
    return "?";
}

std::string_view to_string(Statistic s) noexcept {
    switch (s) {
        case Statistic::Descents: return "descents";
        case Statistic::Cycles: return "cycles";
        case Statistic::LrMaxima: return "lrmax";
    }
    return "?";
}

std::uint64_t evaluate(Statistic s, std::span<const int> word) {
    switch (s) {
        case Statistic::Descents: return descents(word);
        case Statistic::Cycles: return cycles(word);
        case Statistic::LrMaxima: return lr_maxima(word);
    }
    return 0;
}

std::pair<std::size_t, std::size_t> statistic_range(Statistic s, std::size_t n) noexcept {
    if (n == 0) return {0, 0};
    switch (s) {
        case Statistic::Descents: return {0, n - 1};
        case Statistic::Cycles:
        case Statistic::LrMaxima: return {1, n};
    }
    return {0, n};
}

bool MemberFilter::accepts(std::span<const int> word) const {
    if (symmetry && !is_in_class(word, *symmetry)) return false;
    if (extra && !extra(word)) return false;
    return avoids(word, avoid);
}

void for_each_permutation(std::size_t n, const std::function<void(std::span<const int>)>& visit) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        visit(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

namespace {

using Histogram = std::vector<std::vector<std::uint64_t>>;

std::size_t worker_count(const EnumerationLimits& limits) {
    if (limits.threads) return limits.threads;
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Runs job(part) for part in [0, parts) on up to `workers` threads.
void run_parts(std::size_t parts, std::size_t workers, const std::function<void(std::size_t)>& job) {
    workers = std::min(workers, parts);
    if (workers <= 1) {
        for (std::size_t p = 0; p < parts; ++p) job(p);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t p = w; p < parts; p += workers) job(p);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

// Lexicographic sweep of the permutations of size n whose first entry is `first`.
void for_each_with_first(std::size_t n, int first, const WordVisitor& visit) {
    std::vector<int> w;
    w.reserve(n);
    w.push_back(first);
    for (int v = 1; v <= static_cast<int>(n); ++v)
        if (v != first) w.push_back(v);
    do {
        visit(w);
    } while (std::next_permutation(w.begin() + 1, w.end()));
}

Histogram tally_native(std::size_t n, Method method, std::span<const MemberFilter> filters,
                       std::optional<Statistic> refine, const EnumerationLimits& limits) {
    const std::size_t buckets = refine ? n + 1 : 1;
    auto fresh = [&] { return Histogram(filters.size(), std::vector<std::uint64_t>(buckets, 0)); };

    auto record = [&](Histogram& h, std::span<const int> word) {
        std::size_t bucket = 0;
        bool evaluated = false;
        for (std::size_t f = 0; f < filters.size(); ++f) {
            if (!filters[f].accepts(word)) continue;
            if (refine && !evaluated) {
                bucket = static_cast<std::size_t>(evaluate(*refine, word));
                evaluated = true;
            }
            ++h[f][bucket];
        }
    };

    if (n == 0) {
        Histogram h = fresh();
        record(h, std::span<const int>{});
        return h;
    }

    const std::size_t workers = worker_count(limits);
    const std::size_t parts = method == Method::BruteForce ? n : (n > 6 ? workers * 4 : 1);
    std::vector<Histogram> partial(parts, fresh());

    run_parts(parts, workers, [&](std::size_t part) {
        Histogram& h = partial[part];
        if (method == Method::BruteForce) {
            for_each_with_first(n, static_cast<int>(part) + 1, [&](std::span<const int> w) {
                if (is_shallow(w)) record(h, w);
            });
        } else {
            for_each_shallow_part(n, part, parts, [&](std::span<const int> w) { record(h, w); });
        }
    });

    Histogram total = fresh();
    for (const auto& h : partial)
        for (std::size_t f = 0; f < h.size(); ++f)
            for (std::size_t b = 0; b < buckets; ++b) total[f][b] += h[f][b];
    return total;
}

std::vector<std::vector<BigInt>> widen(const Histogram& h) {
    std::vector<std::vector<BigInt>> out;
    for (const auto& row : h) {
        std::vector<BigInt> r;
        for (auto c : row) r.emplace_back(c);
        out.push_back(std::move(r));
    }
    return out;
}

void check_caps(std::size_t n, Method method, const EnumerationLimits& limits) {
    if (method != Method::Constructive && n > limits.brute_force_max) {
        throw SizeCapExceeded("n=" + std::to_string(n) + " exceeds the brute-force cap " +
                              std::to_string(limits.brute_force_max));
    }
    if (method != Method::BruteForce && n > limits.constructive_max) {
        throw SizeCapExceeded("n=" + std::to_string(n) + " exceeds the constructive cap " +
                              std::to_string(limits.constructive_max));
    }
}

}  // namespace

std::vector<std::vector<BigInt>> tally(std::size_t n, Method method,
                                       std::span<const MemberFilter> filters,
                                       std::optional<Statistic> refine,
                                       const EnumerationLimits& limits) {
    check_caps(n, method, limits);
    if (method != Method::Both) return widen(tally_native(n, method, filters, refine, limits));

    const Histogram brute = tally_native(n, Method::BruteForce, filters, refine, limits);
    const Histogram built = tally_native(n, Method::Constructive, filters, refine, limits);
    for (std::size_t f = 0; f < brute.size(); ++f) {
        for (std::size_t b = 0; b < brute[f].size(); ++b) {
            if (brute[f][b] != built[f][b]) {
                throw MethodDisagreement(n, std::to_string(brute[f][b]), std::to_string(built[f][b]));
            }
        }
    }
    return widen(built);
}

BigInt count_members(std::size_t n, Method method, const MemberFilter& filter,
                     const EnumerationLimits& limits) {
    return tally(n, method, std::span<const MemberFilter>(&filter, 1), std::nullopt, limits)[0][0];
}

BigInt CountTable::total(std::size_t n) const {
    BigInt t = 0;
    for (const auto& r : rows)
        if (r.n == n) t += r.count;
    return t;
}

CountTable count(const CountQuery& q, const EnumerationLimits& limits) {
    if (q.sizes.lo > q.sizes.hi) throw std::invalid_argument("empty size range");
    check_caps(q.sizes.hi, q.method, limits);
    CountTable table{q, {}, q.method};
    const MemberFilter filter{q.avoid, q.symmetry, {}};
    for (std::size_t n = q.sizes.lo; n <= q.sizes.hi; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const auto counts =
            tally(n, q.method, std::span<const MemberFilter>(&filter, 1), q.refine_by, limits)[0];
        const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - start);
        if (!q.refine_by) {
            table.rows.push_back({n, std::nullopt, counts[0], elapsed});
            continue;
        }
        const auto [lo, hi] = statistic_range(*q.refine_by, n);
        for (std::size_t k = lo; k <= hi; ++k) table.rows.push_back({n, k, counts[k], elapsed});
    }
    return table;
}

CountTable descent_table(std::size_t n_max, const PatternSpec& avoid, const EnumerationLimits& limits) {
    CountQuery q;
    q.sizes = {1, n_max};
    q.avoid = {avoid};
    q.refine_by = Statistic::Descents;
    q.method = Method::Constructive;
    if (n_max < 1) throw std::invalid_argument("descent_table needs n_max >= 1");
    return count(q, limits);
}

std::string oracle_name(const Oracle& o) {
    return std::visit([](auto v) { return std::string(to_string(v)); }, o);
}

namespace {

std::size_t min_size_of(const CatalogEntry& e) {
    // A(x,z) has no constant term although the empty permutation is shallow.
    return e.name == GfName::A321xz ? 1 : e.min_size;
}

}  // namespace

VerificationReport verify(const CountTable& table, const Oracle& oracle) {
    VerificationReport report;
    report.oracle = oracle_name(oracle);
    std::size_t max_n = 0;
    for (const auto& r : table.rows) max_n = std::max(max_n, r.n);

    std::function<BigInt(const CountRow&)> lookup;
    std::optional<CatalogEntry> entry;

    if (const auto* family = std::get_if<ClosedForm>(&oracle)) {
        if (table.query.refine_by) {
            throw OracleDomainError("closed form " + report.oracle + " cannot check a refined table");
        }
        lookup = [family](const CountRow& r) {
            if (r.n < min_size(*family)) {
                throw OracleDomainError(std::string(to_string(*family)) + " does not cover n=" +
                                        std::to_string(r.n));
            }
            return closed_form(*family, r.n);
        };
    } else {
        entry = catalog(std::get<GfName>(oracle), max_n);
        const CatalogEntry& e = *entry;
        const bool refined = table.query.refine_by.has_value();
        if (refined && !e.bivariate()) {
            throw OracleDomainError(report.oracle + " is univariate; the table is refined");
        }
        if (refined && *table.query.refine_by != Statistic::Descents) {
            throw OracleDomainError(report.oracle + " refines by descents, the table by " +
                                    std::string(to_string(*table.query.refine_by)));
        }
        lookup = [&e, refined, name = report.oracle](const CountRow& r) -> BigInt {
            if (r.n < min_size_of(e)) {
                throw OracleDomainError(name + " does not cover n=" + std::to_string(r.n));
            }
            Rational c;
            if (!e.bivariate()) c = coefficient(std::get<RationalSeries>(e.series), r.n);
            else if (refined) c = std::get<BivariateSeries>(e.series).at(r.n, *r.k);
            else c = coefficient(std::get<BivariateSeries>(e.series).row_sums(), r.n);
            return boost::multiprecision::numerator(c);
        };
    }

    for (const auto& row : table.rows) {
        VerificationEntry v{row, lookup(row), false};
        v.match = v.oracle == row.count;
        if (!v.match && report.overall) {
            report.overall = false;
            report.first_mismatch = row;
        }
        report.entries.push_back(std::move(v));
    }
    return report;
}

BigInt StatProfile::total() const {
    BigInt t = 0;
    for (const auto& [key, mult] : multiset) t += mult;
    return t;
}

std::map<std::uint64_t, BigInt> StatProfile::marginal(int coordinate) const {
    std::map<std::uint64_t, BigInt> out;
    for (const auto& [key, mult] : multiset) out[coordinate == 0 ? key.first : key.second] += mult;
    return out;
}

ProfileComparison profile(std::size_t n, const EnumerationLimits& limits) {
    check_caps(n, Method::Constructive, limits);
    ProfileComparison out;
    out.left.n = out.right.n = n;
    out.left.class_descriptor = "T_n(132): (cyc, des+1)";
    out.right.class_descriptor = "T_n(321): (cyc, lrmax)";
    const PatternSpec p132(Permutation{1, 3, 2});
    const PatternSpec p321(Permutation{3, 2, 1});
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> left, right;
    for_each_shallow(n, [&](std::span<const int> w) {
        if (!contains(w, p132)) ++left[{cycles(w), descents(w) + 1}];
        if (!contains(w, p321)) ++right[{cycles(w), lr_maxima(w)}];
    });
    for (const auto& [k, v] : left) out.left.multiset[k] = v;
    for (const auto& [k, v] : right) out.right.multiset[k] = v;
    out.equal = out.left.multiset == out.right.multiset;
    out.first_marginals_equal = out.left.marginal(0) == out.right.marginal(0);
    out.second_marginals_equal = out.left.marginal(1) == out.right.marginal(1);
    return out;
}

std::optional<Permutation> search_mesh_counterexample(std::size_t n_max,
                                                      const EnumerationLimits& limits) {
    check_caps(n_max, Method::BruteForce, limits);
    const std::vector<PatternSpec> anchored{PatternSpec::value_anchored_3412(),
                                            PatternSpec::position_anchored_3412()};
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::optional<Permutation> found;
        // Sequential: the first hit in lexicographic order is the answer.
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        do {
            if (!is_shallow(w) && avoids(w, anchored)) {
                found = Permutation::from_valid_word(w);
                break;
            }
        } while (std::next_permutation(w.begin(), w.end()));
        if (found) {
            if (is_shallow(*found) || !avoids(*found, anchored)) {
                throw std::logic_error("mesh counterexample failed self-verification");
            }
            return found;
        }
    }
    return std::nullopt;
}

}  // namespace shallowperm
