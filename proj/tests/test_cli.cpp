#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using linespec::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

// key -> rest of line, for "key value..." text output
std::map<std::string, std::string> fields(const std::string& text)
{
    std::map<std::string, std::string> out;
    for (const auto& l : lines(text)) {
        auto sp = l.find(' ');
        out[l.substr(0, sp)] = sp == std::string::npos ? "" : l.substr(sp + 1);
    }
    return out;
}

class TempDir {
public:
    TempDir()
    {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("linespec_cli_" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string write(const std::string& name, const std::string& content) const
    {
        auto p = path_ / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string str() const { return path_.string(); }
    fs::path path() const { return path_; }

private:
    fs::path path_;
};

const char* k13 = "X 1\nY 3\n0 0\n0 1\n0 2\n";
const char* k22 = "X 2\nY 2\n0 0\n0 1\n1 0\n1 1\n";
const char* p4 = "X 2\nY 2\n0 0\n1 0\n1 1\n";

} // namespace

TEST_CASE("documented command examples")
{
    auto lr = invoke({"lr", "--alpha", "3", "--beta", "1,1,1", "--gamma", "4,1,1", "--count"});
    CHECK(lr.code == 0);
    CHECK(lr.out == "1\n");

    auto positive = invoke({"lr", "--alpha", "3", "--beta", "1,1,1", "--gamma", "6", "--positive"});
    CHECK(positive.code == 0);
    CHECK(positive.out == "false\n");

    auto p = invoke({"spectra", "enum-p", "--alpha", "3", "--beta", "1,1,1"});
    CHECK(p.code == 0);
    CHECK(p.out == "4,1,1\n");

    auto t = invoke({"horn", "triples", "--n", "2", "--r", "1"});
    CHECK(t.code == 0);
    CHECK(lines(t.out).size() == 3);
    CHECK(lines(t.out)[0] == "I={1} J={1} K={1}");
}

TEST_CASE("horn subcommands")
{
    auto good = invoke({"horn", "check", "--alpha", "3", "--beta", "1,1,1", "--gamma", "4,1,1"});
    CHECK(good.code == 0);
    CHECK(good.out == "compatible\n");

    auto bad = invoke({"horn", "check", "--alpha", "3", "--beta", "1,1,1", "--gamma", "6"});
    CHECK(bad.code == 0);
    CHECK(bad.out == "incompatible\nviolated I={1} J={1} K={1}\n");

    auto trace = invoke({"horn", "check", "--alpha", "1", "--beta", "1", "--gamma", "3"});
    CHECK(trace.out == "incompatible\nviolated trace\n");

    auto numeric = invoke({"horn", "check", "--alpha", "0.5,-0.5", "--beta", "1/2,-1/2", "--gamma", "1,-1"});
    CHECK(numeric.code == 0);
    CHECK(numeric.out == "compatible\n");

    auto weyl = invoke({"horn", "weyl", "--alpha", "5,2,-1", "--beta", "4,0,-3", "--k", "1"});
    CHECK(weyl.code == 0);
    CHECK(weyl.out == "lower 3\nupper 9\n");

    auto sample = invoke({"horn", "sample", "--n", "3", "--trials", "50"});
    CHECK(sample.code == 0);
    CHECK(sample.out.find("trace_violations 0 horn_violations 0 weyl_violations 0") != std::string::npos);
    CHECK(sample.out == invoke({"horn", "sample", "--n", "3", "--trials", "50", "--seed", "0"}).out);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"lr", "--alpha", "3"}).code == 2);
    CHECK(invoke({"lr", "--alpha", "3", "--beta", "1", "--gamma", "4", "--bogus"}).code == 2);
    CHECK(invoke({"lr", "--alpha", "3,x", "--beta", "1", "--gamma", "4"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"horn", "triples", "--n", "2", "--r", "5"}).code == 2);
    CHECK(invoke({"horn", "weyl", "--alpha", "1,0", "--beta", "1,0", "--k", "3"}).code == 2);
    CHECK(invoke({"spectra", "enum-p", "--alpha", "3", "--beta", "1"}).code == 2);
    auto err = invoke({"spectra", "enum-p", "--alpha", "3", "--beta", "1"});
    CHECK_FALSE(err.err.empty());
}

TEST_CASE("I/O and parse failures")
{
    auto missing = invoke({"spectra", "analyze", "--file", "/nonexistent/g.txt"});
    CHECK(missing.code == 3);
    CHECK(missing.err.find("/nonexistent/g.txt") != std::string::npos);
    CHECK(invoke({"corpus", "verify", "--dir", "/nonexistent/dir"}).code == 3);

    TempDir dir;
    auto bad = dir.write("bad.txt", "X 1\nY 1\n0 7\n");
    auto r = invoke({"graph", "spectrum", "--file", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("bad.txt") != std::string::npos);

    auto corpus = invoke({"corpus", "verify", "--dir", dir.str()});
    CHECK(corpus.code == 2);
    CHECK(corpus.err.find("bad.txt") != std::string::npos);
}

TEST_CASE("corpus verify")
{
    {
        TempDir dir;
        dir.write("k13.txt", k13);
        dir.write("k22.txt", k22);
        auto r = invoke({"corpus", "verify", "--dir", dir.str(), "--jobs", "2"});
        CHECK(r.code == 0);
        auto out = lines(r.out);
        REQUIRE(out.size() == 3);
        CHECK(out[0].starts_with("k13.txt integral gamma=4,1,1"));
        CHECK(out[1].starts_with("k22.txt integral gamma=4,2,2"));
        CHECK(out[2] == "graphs 2 integral 2 non_integral 0 skipped 0 violations 0");
    }
    {
        TempDir dir;
        auto r = invoke({"corpus", "verify", "--dir", dir.str()});
        CHECK(r.code == 0);
        CHECK(r.out == "graphs 0 integral 0 non_integral 0 skipped 0 violations 0\n");
    }
    {
        TempDir dir;
        dir.write("p4.txt", p4);
        dir.write("split.txt", "X 2\nY 2\n0 0\n1 1\n");
        auto r = invoke({"corpus", "verify", "--dir", dir.str()});
        CHECK(r.code == 0);
        CHECK(lines(r.out).back() == "graphs 2 integral 0 non_integral 1 skipped 1 violations 0");
    }
}

TEST_CASE("graph subcommands")
{
    TempDir dir;
    auto file = dir.write("k22.txt", k22);
    auto spectrum = invoke({"graph", "spectrum", "--file", file});
    CHECK(spectrum.code == 0);
    auto f = fields(spectrum.out);
    CHECK(f["char_poly"] == "x^4 - 4x^2");
    CHECK(f["spectrum"] == "2^1 0^2 -2^1");
    CHECK(f["numeric_spectrum"] == "2.0 0.0 0.0 -2.0");

    auto numeric = invoke({"graph", "spectrum", "--file", file, "--numeric", "--format", "json"});
    auto j = nlohmann::json::parse(numeric.out);
    CHECK_FALSE(j.contains("char_poly"));
    CHECK(j["numeric_spectrum"] == nlohmann::json::array({2, 0, 0, -2}));

    auto lg = invoke({"graph", "linegraph", "--file", file});
    auto lj = nlohmann::json::parse(lg.out);
    CHECK(lj["order"] == 4);
    CHECK(lj["edges"].size() == 4);

    auto out_path = (dir.path() / "comp.txt").string();
    CHECK(invoke({"graph", "complement", "--file", file, "--out", out_path}).code == 0);
    std::ifstream in(out_path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "X 2\nY 2\n");

    auto json_file = dir.write("k13.json", R"({"x_size": 1, "y_size": 3, "edges": [[0,0],[0,1],[0,2]]})");
    CHECK(fields(invoke({"graph", "spectrum", "--file", json_file}).out)["char_poly"] == "x^4 - 3x^2");
}

TEST_CASE("analyze output round-trips and text agrees with JSON")
{
    TempDir dir;
    for (const char* g : {k13, k22, p4}) {
        auto file = dir.write("g.txt", g);
        auto json_path = (dir.path() / "report.json").string();
        auto as_json = invoke({"spectra", "analyze", "--file", file, "--format", "json", "--json", json_path});
        REQUIRE(as_json.code == 0);
        auto j = nlohmann::json::parse(as_json.out);
        CHECK(j.dump(2) + "\n" == as_json.out);
        std::ifstream in(json_path);
        std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(written == as_json.out);

        auto text = fields(invoke({"spectra", "analyze", "--file", file}).out);
        CHECK(text["e"] == j["e"].dump());
        CHECK(text["nu"] == j["nu"].dump());
        CHECK(text["is_integral"] == j["is_integral"].dump());
        CHECK(text["minus_two_multiplicity"] == j["minus_two_multiplicity"].dump());
        CHECK(text["diameter"] == j["diameter"].dump());
        CHECK(text["clique_number"] == j["clique_number"].dump());
        CHECK(text["two_omega"] == j["two_omega"].dump());
        std::string numeric;
        for (const auto& v : j["numeric_spectrum"])
            numeric += (numeric.empty() ? "" : " ") + v.dump();
        CHECK(text["numeric_spectrum"] == numeric);
        if (j["is_integral"].get<bool>()) {
            std::string spec;
            for (const auto& pair : j["spectrum"])
                spec += (spec.empty() ? "" : " ") + pair[0].dump() + "^" + pair[1].dump();
            CHECK(text["spectrum"] == spec);
            CHECK(text["max_k_gamma"] == j["max_k_gamma"].dump());
        }
    }
}

TEST_CASE("ramanujan subcommand")
{
    TempDir dir;
    std::ostringstream k55;
    k55 << "X 5\nY 5\n";
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            k55 << x << ' ' << y << '\n';
    auto file = dir.write("k55.txt", k55.str());
    auto text = invoke({"spectra", "ramanujan", "--file", file});
    CHECK(text.code == 0);
    auto f = fields(text.out);
    CHECK(f["degree"] == "8");
    CHECK(f["lambda2"] == "3");
    CHECK(f["ramanujan_second_largest"] == "true");
    CHECK(f["case"] == "lambda0");

    auto j = nlohmann::json::parse(invoke({"spectra", "ramanujan", "--file", file, "--format", "json"}).out);
    CHECK(j["lambda2"] == 3);
    CHECK(j["case"] == "lambda0");
    CHECK(f["bound"] == j["bound"].dump());

    auto p = dir.write("p4.txt", p4);
    CHECK(invoke({"spectra", "ramanujan", "--file", p}).code == 2);
}
