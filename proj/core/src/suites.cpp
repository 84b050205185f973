#include "shallowperm/suites.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "shallowperm/error.hpp"
#include "shallowperm/shallow.hpp"

namespace shallowperm {

std::string_view to_string(Suite s) noexcept {
    switch (s) {
        case Suite::Table1: return "table1";
        case Suite::Descents: return "descents";
        case Suite::Symmetry: return "symmetry";
        case Suite::Structure: return "structure";
        case Suite::Closure: return "closure";
        case Suite::Mesh: return "mesh";
        case Suite::Series: return "series";
        case Suite::Explore: return "explore";
        case Suite::All: return "all";
    }
    return "?";
}

std::optional<Suite> parse_suite(std::string_view text) {
    for (Suite s : {Suite::Table1, Suite::Descents, Suite::Symmetry, Suite::Structure, Suite::Closure,
                    Suite::Mesh, Suite::Series, Suite::Explore, Suite::All}) {
        if (to_string(s) == text) return s;
    }
    return std::nullopt;
}

bool all_passed(const std::vector<Check>& checks) noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

PatternSpec pat(std::string_view s) { return parse_pattern_spec(s); }

std::string join(const std::vector<BigInt>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i].str();
    }
    return out;
}

// Accumulates one check: a running pass flag plus the first failure message.
class CheckBuilder {
public:
    CheckBuilder(std::string suite, std::string name) {
        check_.suite = std::move(suite);
        check_.name = std::move(name);
        check_.passed = true;
    }

    void expect(bool ok, const std::string& failure) {
        if (!ok && check_.passed) {
            check_.passed = false;
            failure_ = failure;
        }
    }
    void note(std::string detail) { detail_ = std::move(detail); }
    void exploratory() { check_.exploratory = true; }

    Check done() {
        check_.detail = check_.passed ? detail_ : failure_ + (detail_.empty() ? "" : "; " + detail_);
        return check_;
    }

private:
    Check check_;
    std::string detail_;
    std::string failure_;
};

std::size_t clamp(std::size_t nominal, const SuiteConfig& cfg) { return std::min(nominal, cfg.max_n); }

// Runs `body` and turns a library exception into a failed check.
Check guarded(const std::string& suite, const std::string& name, const std::function<Check()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return Check{suite, name, false, false, std::string("exception: ") + e.what()};
    }
}

BigInt series_count(const CatalogEntry& e, std::size_t n) {
    return boost::multiprecision::numerator(coefficient(std::get<RationalSeries>(e.series), n));
}

void for_each_perm_up_to(std::size_t n_max, const std::function<void(const Permutation&)>& fn) {
    for (std::size_t n = 0; n <= n_max; ++n) {
        for_each_permutation(n, [&](std::span<const int> w) {
            fn(Permutation::from_valid_word(std::vector<int>(w.begin(), w.end())));
        });
    }
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Check> check_deciders(const SuiteConfig& cfg) {
    const std::size_t n_max = clamp(8, cfg);
    return {guarded("closure", "decider equivalence", [&] {
        CheckBuilder c("closure", "decider equivalence (is_shallow vs certificate), n<=" +
                                      std::to_string(n_max));
        std::uint64_t checked = 0, shallow = 0;
        for_each_perm_up_to(n_max, [&](const Permutation& p) {
            const ShallowCertificate cert = certify_shallow(p);
            const bool direct = is_shallow(p);
            c.expect(direct == cert.verdict, "verdicts differ for " + p.to_string());
            c.expect(replay(cert) == p, "certificate does not replay for " + p.to_string());
            ++checked;
            shallow += direct;
        });
        c.note(std::to_string(checked) + " permutations, " + std::to_string(shallow) + " shallow");
        return c.done();
    })};
}

std::vector<Check> check_table1(const SuiteConfig& cfg) {
    const std::size_t n_max = clamp(10, cfg);
    const std::size_t brute_max = std::min({clamp(9, cfg), cfg.limits.brute_force_max});
    const std::vector<std::string> names{"132", "213", "321", "231", "312", "123"};
    std::vector<MemberFilter> filters;
    for (const auto& s : names) filters.push_back({{pat(s)}, std::nullopt, {}});

    std::vector<std::vector<BigInt>> counts(names.size());
    std::vector<Check> out;
    try {
        for (std::size_t n = 1; n <= n_max; ++n) {
            const Method m = n <= brute_max ? Method::Both : Method::Constructive;
            const auto t = tally(n, m, filters, std::nullopt, cfg.limits);
            for (std::size_t f = 0; f < names.size(); ++f) counts[f].push_back(t[f][0]);
        }
    } catch (const std::exception& e) {
        return {Check{"table1", "table 1 totals", false, false, std::string("exception: ") + e.what()}};
    }

    const CatalogEntry t231 = catalog(GfName::T231, n_max);
    const CatalogEntry t123 = catalog(GfName::T123, n_max);
    for (std::size_t f = 0; f < names.size(); ++f) {
        const std::string& s = names[f];
        std::string oracle;
        CheckBuilder c("table1", "t_n(" + s + "), 1<=n<=" + std::to_string(n_max) +
                                     " (brute-force cross-check n<=" + std::to_string(brute_max) + ")");
        for (std::size_t n = 1; n <= n_max; ++n) {
            BigInt expected;
            if (s == "132" || s == "213" || s == "321") {
                expected = closed_form(ClosedForm::FibOdd, n);
                oracle = "F_{2n-1}";
            } else if (s == "231" || s == "312") {
                expected = series_count(t231, n);
                oracle = "[x^n]T231";
            } else {
                expected = series_count(t123, n);
                oracle = "[x^n]T123";
            }
            c.expect(counts[f][n - 1] == expected, "n=" + std::to_string(n) + ": counted " +
                                                       counts[f][n - 1].str() + ", " + oracle +
                                                       " = " + expected.str());
        }
        c.note(join(counts[f]) + " = " + oracle);
        out.push_back(c.done());
    }
    CheckBuilder mirror("table1", "mirror classes: t_n(132)=t_n(213), t_n(231)=t_n(312)");
    mirror.expect(counts[0] == counts[1], "132 and 213 totals differ");
    mirror.expect(counts[3] == counts[4], "231 and 312 totals differ");
    out.push_back(mirror.done());
    return out;
}

std::vector<Check> check_descents(const SuiteConfig& cfg) {
    const std::size_t n_max = clamp(9, cfg);
    const std::vector<std::string> names{"132", "321", "231", "312", "123"};
    std::vector<MemberFilter> filters;
    for (const auto& s : names) filters.push_back({{pat(s)}, std::nullopt, {}});

    // tables[f][n][k]
    std::vector<std::vector<std::vector<BigInt>>> tables(names.size());
    try {
        for (std::size_t n = 0; n <= n_max; ++n) {
            const auto t = tally(n, Method::Constructive, filters, Statistic::Descents, cfg.limits);
            for (std::size_t f = 0; f < names.size(); ++f) tables[f].push_back(t[f]);
        }
    } catch (const std::exception& e) {
        return {Check{"descents", "descent tables", false, false, std::string("exception: ") + e.what()}};
    }

    std::vector<Check> out;
    const std::string range = "1<=n<=" + std::to_string(n_max);

    {
        CheckBuilder c("descents", "132 by descents = binom(2n-2-k,k), " + range);
        const CatalogEntry gf = catalog(GfName::DescBinom132, n_max);
        const auto& bi = std::get<BivariateSeries>(gf.series);
        for (std::size_t n = 1; n <= n_max; ++n) {
            for (std::size_t k = 0; k < n; ++k) {
                const BigInt formula = binomial(static_cast<long>(2 * n) - 2 - static_cast<long>(k),
                                                static_cast<long>(k));
                const BigInt& got = tables[0][n][k];
                c.expect(got == formula, "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) +
                                             "): " + got.str() + " vs binomial " + formula.str());
                c.expect(Rational(got) == bi.at(n, k), "DescBinom132 series disagrees at n=" +
                                                           std::to_string(n));
            }
        }
        c.note("row (4,1) = " + tables[0][std::min<std::size_t>(4, n_max)][std::min<std::size_t>(1, n_max)].str());
        out.push_back(c.done());
    }
    auto against = [&](std::size_t f, GfName name, const std::string& label) {
        CheckBuilder c("descents", label + ", " + range);
        const CatalogEntry gf = catalog(name, n_max);
        const auto& bi = std::get<BivariateSeries>(gf.series);
        for (std::size_t n = 1; n <= n_max; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                const BigInt got = k < tables[f][n].size() ? tables[f][n][k] : BigInt(0);
                c.expect(Rational(got) == bi.at(n, k),
                         "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + "): counted " +
                             got.str() + ", series " + to_string(bi.at(n, k)));
            }
        }
        out.push_back(c.done());
    };
    against(1, GfName::A321xz, "321 by descents = [x^k z^n]A(x,z)");
    against(2, GfName::T231xt, "231 by descents = [x^n t^k]T(x,t)");
    against(3, GfName::T231xt, "312 by descents = [x^n t^k]T(x,t)");

    {
        CheckBuilder c("descents", "123 by descents (no oracle; recorded)");
        c.exploratory();
        std::string rows;
        for (std::size_t n = 1; n <= n_max; ++n) {
            BigInt sum = 0;
            std::vector<BigInt> row;
            for (std::size_t k = 0; k < n; ++k) {
                row.push_back(tables[4][n][k]);
                sum += tables[4][n][k];
            }
            c.expect(sum == series_count(catalog(GfName::T123, n), n),
                     "123 descent row sums disagree with T123 at n=" + std::to_string(n));
            rows += (rows.empty() ? "" : " | ") + std::string("n=") + std::to_string(n) + ": " + join(row);
        }
        c.note(rows);
        out.push_back(c.done());
    }
    return out;
}

std::vector<Check> check_grassmannian(const SuiteConfig& cfg) {
    const std::size_t n_max = clamp(10, cfg);
    return {guarded("descents", "grassmannian", [&] {
        CheckBuilder c("descents", "shallow Grassmannian = binom(n+1,3)+1, 2<=n<=" + std::to_string(n_max));
        const std::vector<MemberFilter> filters{
            {{pat("321")}, std::nullopt, {}},
            {{}, std::nullopt, [](std::span<const int> w) { return descents(w) <= 1; }}};
        const CatalogEntry gf = catalog(GfName::Grassmannian, n_max);
        std::vector<BigInt> values;
        for (std::size_t n = 2; n <= n_max; ++n) {
            const auto t = tally(n, Method::Constructive, filters, Statistic::Descents, cfg.limits);
            const BigInt from_321 = t[0][0] + t[0][1];
            const BigInt direct = t[1][0] + t[1][1];
            const BigInt expected = closed_form(ClosedForm::Grassmannian, n);
            c.expect(from_321 == expected, "n=" + std::to_string(n) + ": 321 table k<=1 total " +
                                               from_321.str() + " vs " + expected.str());
            c.expect(direct == expected, "n=" + std::to_string(n) + ": direct count " + direct.str());
            c.expect(series_count(gf, n) == expected, "Grassmannian series disagrees at n=" +
                                                          std::to_string(n));
            values.push_back(direct);
        }
        c.note(join(values));
        return c.done();
    })};
}

std::vector<Check> check_symmetry(const SuiteConfig& cfg) {
    const std::size_t n_max = clamp(10, cfg);
    struct Target {
        std::string pattern;
        SymmetryClass cls;
        std::variant<ClosedForm, GfName> oracle;
    };
    const std::vector<Target> targets{
        {"132", SymmetryClass::Involution, ClosedForm::Involutions132},
        {"132", SymmetryClass::Centrosymmetric, ClosedForm::Centro132},
        {"132", SymmetryClass::Persymmetric, GfName::P132},
        {"231", SymmetryClass::Involution, ClosedForm::Involutions231},
        {"231", SymmetryClass::Centrosymmetric, ClosedForm::Centro231},
        {"231", SymmetryClass::Persymmetric, GfName::P231},
        {"123", SymmetryClass::Involution, ClosedForm::Involutions123},
        {"123", SymmetryClass::Centrosymmetric, ClosedForm::Centro123},
        {"123", SymmetryClass::Persymmetric, GfName::P123},
        {"321", SymmetryClass::Involution, ClosedForm::Involutions321},
        {"321", SymmetryClass::Centrosymmetric, ClosedForm::Centro321},
        {"321", SymmetryClass::Persymmetric, ClosedForm::Persym321},
    };
    std::vector<MemberFilter> filters;
    for (const auto& t : targets) filters.push_back({{pat(t.pattern)}, t.cls, {}});

    std::vector<std::vector<BigInt>> counts(targets.size());
    try {
        for (std::size_t n = 1; n <= n_max; ++n) {
            const auto t = tally(n, Method::Constructive, filters, std::nullopt, cfg.limits);
            for (std::size_t f = 0; f < targets.size(); ++f) counts[f].push_back(t[f][0]);
        }
    } catch (const std::exception& e) {
        return {Check{"symmetry", "symmetry classes", false, false, std::string("exception: ") + e.what()}};
    }

    std::vector<Check> out;
    for (std::size_t f = 0; f < targets.size(); ++f) {
        const auto& t = targets[f];
        const std::string oracle = std::visit([](auto v) { return std::string(to_string(v)); }, t.oracle);
        CheckBuilder c("symmetry", t.pattern + " " + std::string(to_string(t.cls)) + " = " + oracle +
                                       ", 1<=n<=" + std::to_string(n_max));
        for (std::size_t n = 1; n <= n_max; ++n) {
            BigInt expected;
            if (const auto* cf = std::get_if<ClosedForm>(&t.oracle)) expected = closed_form(*cf, n);
            else expected = series_count(catalog(std::get<GfName>(t.oracle), n), n);
            c.expect(counts[f][n - 1] == expected, "n=" + std::to_string(n) + ": counted " +
                                                       counts[f][n - 1].str() + ", expected " +
                                                       expected.str());
        }
        c.note(join(counts[f]));
        out.push_back(c.done());
    }

    const std::size_t brute_max = std::min({clamp(9, cfg), cfg.limits.brute_force_max});
    out.push_back(guarded("symmetry", "231 involutions", [&] {
        CheckBuilder c("symmetry", "all 231-avoiding involutions are shallow (count 2^{n-1}), 1<=n<=" +
                                       std::to_string(brute_max));
        const PatternSpec p231 = pat("231");
        for (std::size_t n = 1; n <= brute_max; ++n) {
            std::uint64_t all = 0, shallow = 0;
            for_each_permutation(n, [&](std::span<const int> w) {
                if (!is_in_class(w, SymmetryClass::Involution) || contains(w, p231)) return;
                ++all;
                shallow += is_shallow(w);
            });
            c.expect(BigInt(all) == closed_form(ClosedForm::Involutions231, n),
                     "n=" + std::to_string(n) + ": " + std::to_string(all) + " involutions");
            c.expect(all == shallow, "n=" + std::to_string(n) + ": a 231-avoiding involution is not shallow");
        }
        return c.done();
    }));
    return out;
}

std::vector<Check> check_structure(const SuiteConfig& cfg) {
    std::vector<Check> out;
    const PatternSpec p231 = pat("231"), p123 = pat("123"), p321 = pat("321");

    out.push_back(guarded("structure", "c_n", [&] {
        const std::size_t n_max = clamp(10, cfg);
        CheckBuilder c("structure", "T_n(231) starting n(n-1): c_n = 3n-11, 5<=n<=" + std::to_string(n_max));
        std::vector<BigInt> values;
        for (std::size_t n = 5; n <= n_max; ++n) {
            const MemberFilter f{{p231}, std::nullopt, [n](std::span<const int> w) {
                                     return w[0] == static_cast<int>(n) && w[1] == static_cast<int>(n) - 1;
                                 }};
            const BigInt got = count_members(n, Method::Constructive, f, cfg.limits);
            c.expect(got == closed_form(ClosedForm::StartNNm1_231, n),
                     "n=" + std::to_string(n) + ": counted " + got.str());
            values.push_back(got);
        }
        c.note(join(values));
        return c.done();
    }));

    out.push_back(guarded("structure", "interior 123", [&] {
        const std::size_t n_max = clamp(10, cfg);
        CheckBuilder c("structure", "T_n(123) with p_1!=n, p_n!=1: 2binom(n-1,3)+(n-1), 3<=n<=" +
                                        std::to_string(n_max));
        std::vector<BigInt> values;
        for (std::size_t n = 3; n <= n_max; ++n) {
            const MemberFilter f{{p123}, std::nullopt, [n](std::span<const int> w) {
                                     return w[0] != static_cast<int>(n) && w[n - 1] != 1;
                                 }};
            const BigInt got = count_members(n, Method::Constructive, f, cfg.limits);
            c.expect(got == closed_form(ClosedForm::Interior123, n),
                     "n=" + std::to_string(n) + ": counted " + got.str());
            values.push_back(got);
        }
        c.note(join(values));
        return c.done();
    }));

    out.push_back(guarded("structure", "321 tail", [&] {
        const std::size_t n_max = clamp(9, cfg);
        CheckBuilder c("structure", "T_n(321) with p_j=n, j<n-1 ends (n-1) and p_k=k-1 for k>=j+2, n<=" +
                                        std::to_string(n_max));
        std::uint64_t examined = 0;
        for (std::size_t n = 3; n <= n_max; ++n) {
            for_each_shallow(n, [&](std::span<const int> w) {
                if (contains(w, p321)) return;
                const std::size_t j = static_cast<std::size_t>(
                                          std::find(w.begin(), w.end(), static_cast<int>(n)) - w.begin()) + 1;
                if (j + 1 >= n) return;
                ++examined;
                const Permutation p = Permutation::from_valid_word(std::vector<int>(w.begin(), w.end()));
                c.expect(w[n - 1] == static_cast<int>(n) - 1, p.to_string() + " does not end with n-1");
                for (std::size_t k = j + 2; k <= n; ++k) {
                    c.expect(w[k - 1] == static_cast<int>(k) - 1,
                             p.to_string() + " violates p_k = k-1 at k=" + std::to_string(k));
                }
                const Permutation r = r_operator(p);
                c.expect(is_shallow(r) && !contains(r.word(), p321),
                         "R(" + p.to_string() + ") left the class");
            });
        }
        c.note(std::to_string(examined) + " permutations with n before position n-1");
        return c.done();
    }));
    return out;
}

std::vector<Check> check_closure(const SuiteConfig& cfg) {
    std::vector<Check> out;
    const auto sym_kinds = {SymmetryKind::Inverse, SymmetryKind::ReverseComplement,
                            SymmetryKind::ReverseComplementInverse};

    out.push_back(guarded("closure", "symmetry closure", [&] {
        const std::size_t n_max = clamp(7, cfg);
        CheckBuilder c("closure", "inverse, rc, rci preserve D, I, cyc and shallowness, n<=" +
                                      std::to_string(n_max));
        for_each_perm_up_to(n_max, [&](const Permutation& p) {
            const StatVector s = statistics(p);
            const bool shallow = is_shallow(p);
            for (SymmetryKind k : sym_kinds) {
                const Permutation q = apply_symmetry(p, k);
                const StatVector t = statistics(q);
                c.expect(s.displacement == t.displacement && s.inversions == t.inversions &&
                             s.cycles == t.cycles,
                         std::string(to_string(k)) + " changes statistics of " + p.to_string());
                c.expect(!shallow || is_shallow(q),
                         std::string(to_string(k)) + " of shallow " + p.to_string() + " is not shallow");
            }
        });
        return c.done();
    }));

    out.push_back(guarded("closure", "direct sums", [&] {
        const std::size_t total_max = clamp(8, cfg);
        CheckBuilder c("closure", "shallow p (+) shallow q is shallow, |p|+|q|<=" + std::to_string(total_max));
        std::vector<std::vector<Permutation>> shallow(total_max + 1);
        for (std::size_t n = 0; n <= total_max; ++n) shallow[n] = generate_shallow(n);
        std::uint64_t pairs = 0;
        for (std::size_t a = 0; a <= total_max; ++a) {
            for (std::size_t b = 0; a + b <= total_max; ++b) {
                for (const auto& p : shallow[a]) {
                    for (const auto& q : shallow[b]) {
                        const Permutation s = direct_sum(p, q);
                        ++pairs;
                        c.expect(is_shallow(s), p.to_string() + " (+) " + q.to_string() + " is not shallow");
                    }
                }
            }
        }
        c.note(std::to_string(pairs) + " pairs");
        return c.done();
    }));

    out.push_back(guarded("closure", "wrap", [&] {
        const std::size_t n_max = clamp(7, cfg);
        CheckBuilder c("closure", "p shallow <=> n,(p+1),1 shallow, |p|<=" + std::to_string(n_max));
        for_each_perm_up_to(n_max, [&](const Permutation& p) {
            c.expect(is_shallow(p) == is_shallow(wrap_n1(p)), "wrap equivalence fails for " + p.to_string());
        });
        return c.done();
    }));

    out.push_back(guarded("closure", "decreasing", [&] {
        const std::size_t n_max = clamp(12, cfg);
        CheckBuilder c("closure", "decreasing permutation is shallow, n<=" + std::to_string(n_max));
        for (std::size_t n = 0; n <= n_max; ++n)
            c.expect(is_shallow(decreasing(n)), "decreasing(" + std::to_string(n) + ") is not shallow");
        return c.done();
    }));

    out.push_back(guarded("closure", "decreasing families", [&] {
        CheckBuilder c("closure", "21-(dj+dk), di-(1+dk), di-(dj+1) are shallow, 0<=i,j,k<=5");
        const Permutation one{1}, two_one{2, 1};
        for (std::size_t i = 0; i <= 5; ++i) {
            for (std::size_t j = 0; j <= 5; ++j) {
                for (std::size_t k = 0; k <= 5; ++k) {
                    const Permutation a = skew_sum(two_one, direct_sum(decreasing(j), decreasing(k)));
                    const Permutation b = skew_sum(decreasing(i), direct_sum(one, decreasing(k)));
                    const Permutation d = skew_sum(decreasing(i), direct_sum(decreasing(j), one));
                    for (const auto* p : {&a, &b, &d})
                        c.expect(is_shallow(*p), p->to_string() + " is not shallow");
                }
            }
        }
        return c.done();
    }));

    out.push_back(guarded("closure", "boolean coincidence", [&] {
        const std::size_t n_max = clamp(8, cfg);
        CheckBuilder c("closure", "shallow&av(321) = av(321,3412) = shallow&D=2I, n<=" + std::to_string(n_max));
        const PatternSpec p321 = pat("321"), p3412 = pat("3412");
        std::uint64_t members = 0;
        for_each_perm_up_to(n_max, [&](const Permutation& p) {
            const bool shallow = is_shallow(p);
            const bool av321 = !contains(p.word(), p321);
            const bool a = shallow && av321;
            const bool b = av321 && !contains(p.word(), p3412);
            const bool d = shallow && achieves_upper_bound(p);
            c.expect(a == b && b == d, "characterizations disagree on " + p.to_string());
            members += a;
        });
        c.note(std::to_string(members) + " boolean permutations");
        return c.done();
    }));

    out.push_back(guarded("closure", "132 descents under inverse", [&] {
        const std::size_t n_max = clamp(7, cfg);
        CheckBuilder c("closure", "des(p) = des(p^-1) for 132-avoiding p, n<=" + std::to_string(n_max));
        const PatternSpec p132 = pat("132");
        for_each_perm_up_to(n_max, [&](const Permutation& p) {
            if (contains(p.word(), p132)) return;
            c.expect(descents(p.word()) == descents(inverse(p).word()),
                     "descent count changes under inverse for " + p.to_string());
        });
        return c.done();
    }));

    out.push_back(guarded("closure", "L/R conjugacy", [&] {
        const std::size_t n_max = clamp(7, cfg);
        CheckBuilder c("closure", "L(p) = rc(R(rc(p))), 2<=n<=" + std::to_string(n_max));
        for_each_perm_up_to(n_max, [&](const Permutation& p) {
            if (p.size() < 2) return;
            c.expect(l_operator(p) == reverse_complement(r_operator(reverse_complement(p))),
                     "conjugacy fails for " + p.to_string());
        });
        return c.done();
    }));

    out.push_back(guarded("closure", "generator", [&] {
        const std::size_t n_max = std::min({clamp(9, cfg), cfg.limits.brute_force_max});
        CheckBuilder c("closure", "generated shallow set = brute-force shallow set, n<=" + std::to_string(n_max));
        std::vector<BigInt> sizes;
        for (std::size_t n = 0; n <= n_max; ++n) {
            std::vector<Permutation> gen = generate_shallow(n);
            std::sort(gen.begin(), gen.end());
            c.expect(std::adjacent_find(gen.begin(), gen.end()) == gen.end(),
                     "generator repeats at n=" + std::to_string(n));
            std::vector<Permutation> brute;
            for_each_permutation(n, [&](std::span<const int> w) {
                if (is_shallow(w)) brute.push_back(Permutation::from_valid_word(std::vector<int>(w.begin(), w.end())));
            });
            c.expect(gen == brute, "generated set differs at n=" + std::to_string(n));
            sizes.emplace_back(gen.size());
        }
        c.note("|T_n| = " + join(sizes));
        return c.done();
    }));

    out.push_back(guarded("closure", "extension round trip", [&] {
        const std::size_t n_max = clamp(8, cfg);
        CheckBuilder c("closure", "R(extend_right(t, slot)) = t for t shallow, |t|<" + std::to_string(n_max));
        for (std::size_t n = 1; n < n_max; ++n) {
            for (const auto& t : generate_shallow(n)) {
                for (const auto& slot : legal_slots(t)) {
                    const Permutation child = extend_right(t, slot);
                    c.expect(r_operator(child) == t && is_shallow(child),
                             "round trip fails for " + t.to_string());
                }
            }
        }
        return c.done();
    }));
    return out;
}

std::vector<Check> check_mesh(const SuiteConfig& cfg) {
    std::vector<Check> out;
    const PatternSpec vmesh = PatternSpec::value_anchored_3412();
    const PatternSpec pmesh = PatternSpec::position_anchored_3412();
    const PatternSpec plain = pat("3412");

    out.push_back(guarded("mesh", "necessary condition", [&] {
        const std::size_t n_max = clamp(8, cfg);
        CheckBuilder c("mesh", "shallow permutations avoid 3n12 and u3412, n<=" + std::to_string(n_max));
        std::uint64_t shallow = 0;
        for (std::size_t n = 0; n <= n_max; ++n) {
            for_each_shallow(n, [&](std::span<const int> w) {
                ++shallow;
                if (contains(w, vmesh) || contains(w, pmesh)) {
                    c.expect(false, "shallow " + Permutation::from_valid_word({w.begin(), w.end()}).to_string() +
                                        " contains an anchored 3412");
                }
            });
        }
        c.note(std::to_string(shallow) + " shallow permutations checked");
        return c.done();
    }));

    out.push_back(guarded("mesh", "inverse duality", [&] {
        const std::size_t n_max = clamp(7, cfg);
        CheckBuilder c("mesh", "p contains 3n12 <=> p^-1 contains u3412; anchored => classical, n<=" +
                                   std::to_string(n_max));
        for_each_perm_up_to(n_max, [&](const Permutation& p) {
            const bool v = contains(p.word(), vmesh);
            const bool u = contains(p.word(), pmesh);
            c.expect(v == contains(inverse(p).word(), pmesh), "duality fails for " + p.to_string());
            c.expect(!(v || u) || contains(p.word(), plain),
                     p.to_string() + " contains an anchored but not a classical 3412");
        });
        return c.done();
    }));
    return out;
}

std::vector<Check> check_series(const SuiteConfig&) {
    constexpr std::size_t order = 12;
    std::vector<Check> out;
    for (GfName name : all_gf_names()) {
        out.push_back(guarded("series", std::string(to_string(name)), [&] {
            CheckBuilder c("series", std::string(to_string(name)) + ": exact expansion to order 12");
            const CatalogEntry e = catalog(name, order);
            c.expect(round_trips(e), "series * denominator != numerator");
            std::vector<BigInt> head;
            if (e.bivariate()) {
                const auto& s = std::get<BivariateSeries>(e.series);
                for (std::size_t n = 0; n <= order; ++n) {
                    for (std::size_t k = 0; k <= n; ++k) (void)s.at(n, k);  // throws on non-counts
                    head.push_back(boost::multiprecision::numerator(coefficient(s.row_sums(), n)));
                }
                c.note(std::string(e.form ? "rational form round-trips" : "composed; negative powers cancel") +
                       "; row sums " + join(head));
            } else {
                const auto& s = std::get<RationalSeries>(e.series);
                for (std::size_t n = 0; n <= order; ++n) head.push_back(integer_coefficient(s, n));
                (void)coefficient(s, order);
                for (std::size_t n = 0; n <= order; ++n) (void)coefficient(s, n);
                c.note(join(head));
            }
            return c.done();
        }));
    }

    out.push_back(guarded("series", "identities", [&] {
        CheckBuilder c("series", "FibOdd recurrence; A321 row sums and k=1 column; T231xt at t=1");
        const CatalogEntry fib = catalog(GfName::FibOdd, 20);
        std::vector<BigInt> a;
        for (std::size_t n = 0; n <= 20; ++n) a.push_back(series_count(fib, n));
        for (std::size_t n = 1; n <= 20; ++n)
            c.expect(a[n] == fibonacci(2 * static_cast<long>(n) - 1), "FibOdd coefficient " + std::to_string(n));
        for (std::size_t n = 4; n <= 20; ++n)
            c.expect(a[n] == 2 * a[n - 1] + 2 * a[n - 2] - a[n - 3], "FibOdd recurrence fails at n=" +
                                                                         std::to_string(n));
        const CatalogEntry A = catalog(GfName::A321xz, 10);
        const auto& bi = std::get<BivariateSeries>(A.series);
        const RationalSeries sums = bi.row_sums();
        for (std::size_t n = 1; n <= 10; ++n)
            c.expect(coefficient(sums, n) == Rational(fibonacci(2 * static_cast<long>(n) - 1)),
                     "A321xz row sum at n=" + std::to_string(n));
        for (std::size_t n = 2; n <= 10; ++n)
            c.expect(bi.at(n, 1) == Rational(binomial(static_cast<long>(n) + 1, 3)),
                     "A321xz k=1 column at n=" + std::to_string(n));
        const CatalogEntry T = catalog(GfName::T231xt, 10);
        const CatalogEntry T1 = catalog(GfName::T231, 10);
        const RationalSeries t_sums = std::get<BivariateSeries>(T.series).row_sums();
        for (std::size_t n = 0; n <= 10; ++n)
            c.expect(coefficient(t_sums, n) == coefficient(std::get<RationalSeries>(T1.series), n),
                     "T231xt at t=1 differs from T231 at n=" + std::to_string(n));
        return c.done();
    }));
    return out;
}

std::vector<Check> check_exploration(const SuiteConfig& cfg) {
    std::vector<Check> out;
    const std::size_t profile_max = std::min(clamp(8, cfg), cfg.limits.constructive_max);
    for (std::size_t n = 1; n <= profile_max; ++n) {
        out.push_back(guarded("explore", "profile", [&] {
            CheckBuilder c("explore", "profile (cyc, des+1) on T_n(132) vs (cyc, lrmax) on T_n(321), n=" +
                                          std::to_string(n));
            c.exploratory();
            const ProfileComparison pc = profile(n, cfg.limits);
            const BigInt expected = fibonacci(2 * static_cast<long>(n) - 1);
            c.expect(pc.left.total() == expected && pc.right.total() == expected,
                     "profile totals are not F_{2n-1}");
            c.note(std::string(pc.equal ? "consistent" : "inconsistent") + " at n=" + std::to_string(n) +
                   "; cyc marginals " + (pc.first_marginals_equal ? "agree" : "differ") +
                   ", des+1 vs lrmax marginals " + (pc.second_marginals_equal ? "agree" : "differ"));
            return c.done();
        }));
    }
    out.push_back(guarded("explore", "mesh counterexample", [&] {
        const std::size_t n_max = std::min(cfg.max_n, cfg.limits.brute_force_max);
        CheckBuilder c("explore", "non-shallow permutation avoiding 3n12 and u3412, n<=" + std::to_string(n_max));
        c.exploratory();
        const auto witness = search_mesh_counterexample(n_max, cfg.limits);
        if (witness) {
            c.expect(!is_shallow(*witness), "witness is shallow");
            c.expect(avoids(*witness, PatternSpec::value_anchored_3412()) &&
                         avoids(*witness, PatternSpec::position_anchored_3412()),
                     "witness contains an anchored pattern");
            c.note("first witness " + witness->to_string() + " (n=" + std::to_string(witness->size()) + ")");
        } else {
            c.note("none up to n=" + std::to_string(n_max));
        }
        return c.done();
    }));
    return out;
}

std::vector<Check> run_suite(Suite suite, const SuiteConfig& cfg) {
    std::vector<Check> out;
    auto add = [&](std::vector<Check> more) { out.insert(out.end(), more.begin(), more.end()); };
    switch (suite) {
        case Suite::Table1: add(check_table1(cfg)); break;
        case Suite::Descents:
            add(check_descents(cfg));
            add(check_grassmannian(cfg));
            break;
        case Suite::Symmetry: add(check_symmetry(cfg)); break;
        case Suite::Structure: add(check_structure(cfg)); break;
        case Suite::Closure:
            add(check_deciders(cfg));
            add(check_closure(cfg));
            break;
        case Suite::Mesh: add(check_mesh(cfg)); break;
        case Suite::Series: add(check_series(cfg)); break;
        case Suite::Explore: add(check_exploration(cfg)); break;
        case Suite::All:
            for (Suite s : {Suite::Table1, Suite::Descents, Suite::Symmetry, Suite::Structure,
                            Suite::Closure, Suite::Mesh, Suite::Series, Suite::Explore})
                add(run_suite(s, cfg));
            break;
    }
    return out;
}

}  // namespace shallowperm
