#include <doctest.h>

#include <sstream>

#include "cli/cli.hpp"
#include "cli/document.hpp"

using namespace shallowperm::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

OutputDocument parse_doc(const std::string& text) { return from_json(json::parse(text)); }

std::vector<std::string> column(const OutputDocument& d, const std::string& key) {
    std::vector<std::string> out;
    for (const auto& r : d.payload.at("rows")) out.push_back(r.at(key).get<std::string>());
    return out;
}

// Rows of a markdown table, skipping header and separator.
std::vector<std::vector<std::string>> md_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    int seen = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] != '|') continue;
        if (seen++ < 2) continue;
        std::vector<std::string> cells;
        std::string cell;
        for (std::size_t i = 1; i < line.size(); ++i) {
            if (line[i] == '\\' && i + 1 < line.size() && line[i + 1] == '|') {
                cell += '|';
                ++i;
            } else if (line[i] == '|') {
                cells.push_back(cell.substr(1, cell.size() - 2));
                cell.clear();
            } else {
                cell += line[i];
            }
        }
        for (auto& c : cells)
            if (c == " ") c.clear();
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("count") {
    const Result r = run_cli({"count", "--n", "1..8", "--avoid", "132"});
    CHECK(r.code == 0);
    const OutputDocument d = parse_doc(r.out);
    CHECK(d.schema_version == "1");
    CHECK(d.command == "count");
    CHECK(column(d, "count") == std::vector<std::string>{"1", "2", "5", "13", "34", "89", "233", "610"});

    CHECK(column(parse_doc(run_cli({"count", "--n", "4", "--avoid", "231"}).out), "count") ==
          std::vector<std::string>{"14"});
    CHECK(column(parse_doc(run_cli({"count", "--n", "5", "--avoid", "123", "--symmetry", "centro"}).out),
                 "count") == std::vector<std::string>{"1"});
}

TEST_CASE("certify") {
    Result r = run_cli({"certify", "4,2,1,6,3,5"});
    CHECK(r.code == 0);
    OutputDocument d = parse_doc(r.out);
    CHECK(d.payload.at("verdict") == "shallow");
    CHECK(d.payload.at("rows").size() == 5);

    r = run_cli({"certify", "3,4,1,2"});
    CHECK(r.code == 1);
    d = parse_doc(r.out);
    CHECK(d.payload.at("verdict") == "not shallow");
    CHECK(column(d, "classification").front() == "violation");

    r = run_cli({"certify", "1"});
    CHECK(r.code == 0);
    CHECK(parse_doc(r.out).payload.at("rows").empty());

    CHECK(run_cli({"certify", "1,1"}).code == 2);
    CHECK(run_cli({"certify", "abc"}).code == 2);
}

TEST_CASE("gf") {
    Result r = run_cli({"gf", "--name", "T231", "--order", "5"});
    CHECK(r.code == 0);
    CHECK(column(parse_doc(r.out), "coefficient") ==
          std::vector<std::string>{"1", "1", "2", "5", "14", "41"});

    r = run_cli({"gf", "--name", "Grassmannian", "--order", "6"});
    CHECK(column(parse_doc(r.out), "coefficient") ==
          std::vector<std::string>{"1", "1", "2", "5", "11", "21", "36"});

    r = run_cli({"gf", "--name", "A321xz", "--order", "6"});
    const OutputDocument d = parse_doc(r.out);
    CHECK(d.payload.at("statistic") == "descents");
    CHECK(d.payload.at("size_variable") == "z");
    std::vector<long> sums(7, 0);
    for (const auto& row : d.payload.at("rows"))
        sums[std::stoul(row.at("n").get<std::string>())] += std::stol(row.at("coefficient").get<std::string>());
    CHECK(sums == std::vector<long>{0, 1, 2, 5, 13, 34, 89});

    CHECK(run_cli({"gf", "--name", "T999"}).code == 2);
    CHECK(run_cli({"gf", "--name", "T231", "--order", "1000"}).code == 2);
}

TEST_CASE("profile") {
    Result r = run_cli({"profile", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(parse_doc(r.out).payload.at("finding") == "consistent at n=1");
    r = run_cli({"profile", "--n", "5"});
    const OutputDocument d = parse_doc(r.out);
    CHECK(d.payload.at("left_total") == "34");
    CHECK(d.payload.at("right_total") == "34");
    CHECK(d.payload.at("status") == "exploratory evidence, not a theorem");
    CHECK(run_cli({"profile", "--n", "13"}).code == 1);
}

TEST_CASE("verify") {
    Result r = run_cli({"verify", "--suite", "table1", "--max-n", "8"});
    CHECK(r.code == 0);
    CHECK(parse_doc(r.out).payload.at("overall") == "pass");
    r = run_cli({"verify", "--suite", "mesh", "--max-n", "7"});
    CHECK(r.code == 0);
    r = run_cli({"verify", "--suite", "all", "--max-n", "5"});
    CHECK(r.code == 0);
    const OutputDocument d = parse_doc(r.out);
    for (const auto& row : d.payload.at("rows")) CHECK(row.at("status") == "pass");
    CHECK(run_cli({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("exit codes for usage and domain failures") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"count"}).code == 2);
    CHECK(run_cli({"count", "--n", "x"}).code == 2);
    CHECK(run_cli({"count", "--n", "5..3"}).code == 2);
    CHECK(run_cli({"count", "--n", "3", "--avoid", "12345"}).code == 2);
    CHECK(run_cli({"count", "--n", "3", "--by", "height"}).code == 2);
    CHECK(run_cli({"count", "--n", "3", "--format", "xml"}).code == 2);
    CHECK(run_cli({"count", "--n", "11", "--method", "brute"}).code == 1);
    CHECK(run_cli({"count", "--n", "8", "--method", "brute", "--brute-cap", "7"}).code == 1);
    CHECK(run_cli({"count", "--n", "13"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("json output round-trips for every command") {
    const std::vector<std::vector<std::string>> invocations{
        {"count", "--n", "1..5", "--avoid", "3n12", "--avoid", "u3412", "--by", "descents"},
        {"verify", "--suite", "series", "--max-n", "5"},
        {"certify", "3,4,1,2"},
        {"gf", "--name", "T231xt", "--order", "5"},
        {"profile", "--n", "4"},
    };
    for (const auto& args : invocations) {
        CAPTURE(args.front());
        const Result r = run_cli(args);
        const json j = json::parse(r.out);
        const OutputDocument d = from_json(j);
        CHECK(to_json(d) == j);
        CHECK(from_json(to_json(d)) == d);
        CHECK(j.at("elapsed_ms").is_string());
    }
    CHECK_THROWS_AS(from_json(json::parse(R"({"command":"count"})")), std::invalid_argument);
}

TEST_CASE("csv and markdown carry the json rows") {
    const std::vector<std::vector<std::string>> invocations{
        {"count", "--n", "1..6", "--avoid", "321", "--by", "lrmax"},
        {"certify", "4,2,1,6,3,5"},
        {"gf", "--name", "A321xz", "--order", "4"},
        {"profile", "--n", "4"},
        {"verify", "--suite", "mesh", "--max-n", "5"},
    };
    for (auto args : invocations) {
        CAPTURE(args.front());
        const Table expected = table_of(parse_doc(run_cli(args).out));
        CHECK(!expected.rows.empty());

        auto csv_args = args;
        csv_args.insert(csv_args.end(), {"--format", "csv"});
        const Table csv = parse_csv(run_cli(csv_args).out);
        CHECK(csv.columns == expected.columns);
        CHECK(csv.rows == expected.rows);

        auto md_args = args;
        md_args.insert(md_args.end(), {"--format", "md"});
        CHECK(md_rows(run_cli(md_args).out) == expected.rows);
    }
}
