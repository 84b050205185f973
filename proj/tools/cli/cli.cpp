#include "cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "cli/document.hpp"
#include "shallowperm/error.hpp"
#include "shallowperm/shallow.hpp"
#include "shallowperm/suites.hpp"

namespace shallowperm::cli {

namespace {

// Thrown for flag values CLI11 accepts syntactically but we cannot use.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SizeRange parse_sizes(const std::string& text) {
    auto number = [&](const std::string& s) -> std::size_t {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) ||
            s.size() > 6)
            throw UsageError("--n expects an integer or a range a..b, got '" + text + "'");
        return std::stoul(s);
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const std::size_t n = number(text);
        return {n, n};
    }
    SizeRange r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
    if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
    return r;
}

SymmetryClass parse_symmetry(const std::string& s) {
    if (s == "inv") return SymmetryClass::Involution;
    if (s == "centro") return SymmetryClass::Centrosymmetric;
    if (s == "persym") return SymmetryClass::Persymmetric;
    throw UsageError("--symmetry expects inv|centro|persym");
}

Statistic parse_statistic(const std::string& s) {
    if (s == "descents") return Statistic::Descents;
    if (s == "cycles") return Statistic::Cycles;
    if (s == "lrmax") return Statistic::LrMaxima;
    throw UsageError("--by expects descents|cycles|lrmax");
}

Method parse_method(const std::string& s) {
    if (s == "brute") return Method::BruteForce;
    if (s == "constructive") return Method::Constructive;
    if (s == "both") return Method::Both;
    throw UsageError("--method expects brute|constructive|both");
}

json string_array(const std::vector<std::string>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s);
    return a;
}

// Flags shared by every command that enumerates.
struct CapFlags {
    std::size_t brute_cap = EnumerationLimits{}.brute_force_max;
    std::size_t constructive_cap = EnumerationLimits{}.constructive_max;
    std::size_t threads = 0;

    void attach(CLI::App* app) {
        app->add_option("--brute-cap", brute_cap, "largest n for brute-force enumeration")
            ->capture_default_str();
        app->add_option("--constructive-cap", constructive_cap, "largest n for constructive enumeration")
            ->capture_default_str();
        app->add_option("--threads", threads, "worker threads (0 = hardware concurrency)")
            ->capture_default_str();
    }
    EnumerationLimits limits() const { return {brute_cap, constructive_cap, threads}; }
    void record(json& p) const {
        p["brute_cap"] = std::to_string(brute_cap);
        p["constructive_cap"] = std::to_string(constructive_cap);
    }
};

// --- payloads --------------------------------------------------------------

json count_payload(const CountTable& t) {
    json p;
    p["kind"] = "count_table";
    p["method"] = std::string(to_string(t.provenance));
    if (t.query.refine_by) p["refined_by"] = std::string(to_string(*t.query.refine_by));
    p["columns"] = t.query.refine_by ? string_array({"n", "k", "count"}) : string_array({"n", "count"});
    p["rows"] = json::array();
    for (const auto& r : t.rows) {
        json row;
        row["n"] = std::to_string(r.n);
        if (r.k) row["k"] = std::to_string(*r.k);
        row["count"] = r.count.str();
        p["rows"].push_back(row);
    }
    return p;
}

json verify_payload(Suite suite, const std::vector<Check>& checks) {
    json p;
    p["kind"] = "verification_report";
    p["suite"] = std::string(to_string(suite));
    p["overall"] = all_passed(checks) ? "pass" : "fail";
    p["checks"] = std::to_string(checks.size());
    p["columns"] = string_array({"suite", "check", "status", "exploratory", "detail"});
    p["rows"] = json::array();
    for (const auto& c : checks) {
        json row;
        row["suite"] = c.suite;
        row["check"] = c.name;
        row["status"] = c.passed ? "pass" : "fail";
        row["exploratory"] = c.exploratory ? "yes" : "no";
        row["detail"] = c.detail;
        p["rows"].push_back(row);
    }
    return p;
}

json certificate_payload(const ShallowCertificate& cert) {
    json p;
    p["kind"] = "certificate";
    p["subject"] = cert.subject.to_string();
    p["verdict"] = cert.verdict ? "shallow" : "not shallow";
    p["steps"] = std::to_string(cert.steps.size());
    p["base"] = cert.base.to_string();
    p["columns"] = string_array({"step", "size", "position_of_max", "moved_value", "classification"});
    p["rows"] = json::array();
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& s = cert.steps[i];
        json row;
        row["step"] = std::to_string(i + 1);
        row["size"] = std::to_string(cert.subject.size() - i);
        row["position_of_max"] = std::to_string(s.position_of_max);
        row["moved_value"] = s.moved_value ? std::to_string(*s.moved_value) : "";
        row["classification"] = std::string(to_string(s.classification));
        p["rows"].push_back(row);
    }
    return p;
}

json series_payload(const CatalogEntry& e, std::size_t order) {
    json p;
    p["kind"] = e.bivariate() ? "bivariate_series" : "series";
    p["name"] = std::string(to_string(e.name));
    p["description"] = e.description;
    p["size_variable"] = e.roles.size_variable;
    if (e.bivariate()) {
        p["statistic_variable"] = e.roles.statistic_variable;
        p["statistic"] = e.roles.statistic;
    }
    p["order"] = std::to_string(order);
    p["rows"] = json::array();
    if (const auto* s = std::get_if<RationalSeries>(&e.series)) {
        p["columns"] = string_array({"n", "coefficient"});
        for (std::size_t n = 0; n <= order; ++n)
            p["rows"].push_back({{"n", std::to_string(n)}, {"coefficient", to_string(coefficient(*s, n))}});
    } else {
        const auto& b = std::get<BivariateSeries>(e.series);
        p["columns"] = string_array({"n", "k", "coefficient"});
        for (std::size_t n = 0; n <= order; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                p["rows"].push_back({{"n", std::to_string(n)},
                                     {"k", std::to_string(k)},
                                     {"coefficient", to_string(b.at(n, k))}});
            }
        }
    }
    return p;
}

json profile_payload(const ProfileComparison& pc) {
    json p;
    p["kind"] = "profile_pair";
    p["status"] = "exploratory evidence, not a theorem";
    p["n"] = std::to_string(pc.left.n);
    p["finding"] = std::string(pc.equal ? "consistent" : "inconsistent") + " at n=" + std::to_string(pc.left.n);
    p["left_class"] = pc.left.class_descriptor;
    p["right_class"] = pc.right.class_descriptor;
    p["left_total"] = pc.left.total().str();
    p["right_total"] = pc.right.total().str();
    p["first_marginals"] = pc.first_marginals_equal ? "agree" : "differ";
    p["second_marginals"] = pc.second_marginals_equal ? "agree" : "differ";
    p["columns"] = string_array({"side", "cyc", "second", "multiplicity"});
    p["rows"] = json::array();
    for (const auto* side : {&pc.left, &pc.right}) {
        for (const auto& [key, mult] : side->multiset) {
            p["rows"].push_back({{"side", side == &pc.left ? "left" : "right"},
                                 {"cyc", std::to_string(key.first)},
                                 {"second", std::to_string(key.second)},
                                 {"multiplicity", mult.str()}});
        }
    }
    return p;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shallow permutation enumeration and verification", "shallowperm"};
    app.require_subcommand(1);
    std::string format_text = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "json|csv|md")
            ->check(CLI::IsMember({"json", "csv", "md"}))
            ->capture_default_str();
    };

    OutputDocument doc;
    // Filled by the chosen subcommand; returns the exit code.
    std::function<int()> action;

    // count
    auto* count_cmd = app.add_subcommand("count", "count shallow permutations in a class");
    std::string n_text, symmetry_text, by_text, method_text = "constructive";
    std::vector<std::string> avoid_text;
    CapFlags count_caps;
    count_cmd->add_option("--n", n_text, "size or range a..b")->required();
    count_cmd->add_option("--avoid", avoid_text, "pattern to avoid (132, 3412, 3n12, u3412); repeatable")
        ->delimiter(',');
    count_cmd->add_option("--symmetry", symmetry_text, "inv|centro|persym");
    count_cmd->add_option("--by", by_text, "descents|cycles|lrmax");
    count_cmd->add_option("--method", method_text, "brute|constructive|both")->capture_default_str();
    count_caps.attach(count_cmd);
    add_format(count_cmd);
    count_cmd->callback([&] {
        CountQuery q;
        q.sizes = parse_sizes(n_text);
        for (const auto& a : avoid_text) {
            try {
                q.avoid.push_back(parse_pattern_spec(a));
            } catch (const error& e) {
                throw UsageError(std::string("--avoid: ") + e.what());
            }
        }
        if (!symmetry_text.empty()) q.symmetry = parse_symmetry(symmetry_text);
        if (!by_text.empty()) q.refine_by = parse_statistic(by_text);
        q.method = parse_method(method_text);
        doc.command = "count";
        doc.parameters["n"] = n_text;
        doc.parameters["avoid"] = string_array(avoid_text);
        if (q.symmetry) doc.parameters["symmetry"] = symmetry_text;
        if (q.refine_by) doc.parameters["by"] = by_text;
        doc.parameters["method"] = method_text;
        count_caps.record(doc.parameters);
        action = [&doc, q, limits = count_caps.limits()] {
            doc.payload = count_payload(count(q, limits));
            return kSuccess;
        };
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    std::string suite_text = "all";
    std::size_t max_n = SuiteConfig{}.max_n;
    CapFlags verify_caps;
    verify_cmd->add_option("--suite", suite_text,
                           "table1|descents|symmetry|structure|closure|mesh|series|explore|all")
        ->capture_default_str();
    verify_cmd->add_option("--max-n", max_n, "largest size any check examines")->capture_default_str();
    verify_caps.attach(verify_cmd);
    add_format(verify_cmd);
    verify_cmd->callback([&] {
        const auto suite = parse_suite(suite_text);
        if (!suite) throw UsageError("unknown suite '" + suite_text + "'");
        doc.command = "verify";
        doc.parameters["suite"] = suite_text;
        doc.parameters["max_n"] = std::to_string(max_n);
        verify_caps.record(doc.parameters);
        action = [&doc, s = *suite, cfg = SuiteConfig{max_n, verify_caps.limits()}] {
            const auto checks = run_suite(s, cfg);
            doc.payload = verify_payload(s, checks);
            return all_passed(checks) ? kSuccess : kDomainFailure;
        };
    });

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "print the reduction certificate of a permutation");
    std::string perm_text;
    certify_cmd->add_option("permutation", perm_text, "e.g. 4,2,1,6,3,5")->required();
    add_format(certify_cmd);
    certify_cmd->callback([&] {
        Permutation p;
        try {
            p = parse_permutation(perm_text);
        } catch (const error& e) {
            throw UsageError(e.what());
        }
        doc.command = "certify";
        doc.parameters["permutation"] = perm_text;
        action = [&doc, p] {
            const ShallowCertificate cert = certify_shallow(p);
            doc.payload = certificate_payload(cert);
            return cert.verdict ? kSuccess : kDomainFailure;
        };
    });

    // gf
    auto* gf_cmd = app.add_subcommand("gf", "expand a catalog generating function");
    std::string gf_name;
    std::size_t order = SeriesLimits{}.default_order;
    gf_cmd->add_option("--name", gf_name, "catalog name")->required();
    gf_cmd->add_option("--order", order, "highest size coefficient")
        ->check(CLI::Range(std::size_t{0}, SeriesLimits{}.max_order))
        ->capture_default_str();
    add_format(gf_cmd);
    gf_cmd->callback([&] {
        const auto name = parse_gf_name(gf_name);
        if (!name) {
            std::string known;
            for (GfName g : all_gf_names()) known += (known.empty() ? "" : ", ") + std::string(to_string(g));
            throw UsageError("unknown series '" + gf_name + "' (known: " + known + ")");
        }
        doc.command = "gf";
        doc.parameters["name"] = gf_name;
        doc.parameters["order"] = std::to_string(order);
        action = [&doc, g = *name, order] {
            doc.payload = series_payload(catalog(g, order), order);
            return kSuccess;
        };
    });

    // profile
    auto* profile_cmd = app.add_subcommand("profile", "compare statistic profiles of T_n(132) and T_n(321)");
    std::size_t profile_n = 0;
    CapFlags profile_caps;
    profile_cmd->add_option("--n", profile_n, "size")->required();
    profile_caps.attach(profile_cmd);
    add_format(profile_cmd);
    profile_cmd->callback([&] {
        doc.command = "profile";
        doc.parameters["n"] = std::to_string(profile_n);
        profile_caps.record(doc.parameters);
        action = [&doc, profile_n, limits = profile_caps.limits()] {
            doc.payload = profile_payload(profile(profile_n, limits));
            return kSuccess;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    const Format format = *parse_format(format_text);
    doc.parameters["format"] = format_text;
    const auto start = std::chrono::steady_clock::now();
    int code = kSuccess;
    try {
        code = action();
    } catch (const error& e) {
        err << "error: " << e.kind() << ": " << e.what() << "\n";
        return kDomainFailure;
    }
    doc.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    out << render(doc, format);
    return code;
}

}  // namespace shallowperm::cli
