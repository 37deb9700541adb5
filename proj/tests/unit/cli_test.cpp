#include <doctest.h>

#include "mahler/algnum/expression.hpp"
#include "mahler/cli/run.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <vector>

using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    args.insert(args.begin(), "mahler");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = mahler::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json record(const Outcome& o) {
    REQUIRE(o.out.find('\n') == o.out.size() - 1);
    return Json::parse(o.out);
}

double num(const Json& j) { return std::stod(j.get<std::string>()); }

} // namespace

TEST_CASE("Lehmer polynomial record") {
    const Outcome o = call({"poly", "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"});
    CHECK(o.code == 0);
    const Json j = record(o);
    CHECK(j["degree"] == 10);
    CHECK(num(j["mahler"]["lo"]) >= 1.17);
    CHECK(num(j["mahler"]["hi"]) <= 1.18);
    CHECK(j["mahler"]["exact"] == false);
}

TEST_CASE("ultrametric witness record") {
    const Outcome o = call({"minf", "12", "--emit-witness"});
    CHECK(o.code == 0);
    const Json j = record(o);
    CHECK(j["value"] == "3");
    CHECK(j["exact"] == true);
    CHECK(j["witness"]["text"] == "2*2*3");
    CHECK(j["certificate"]["location"] == true);
    CHECK(j["certificate"]["length_bound"] == 4);
    CHECK(o.out.rfind("{\"value\":", 0) == 0);
}

TEST_CASE("exit codes") {
    const Outcome bad = call({"height", "nonsense("});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());
    CHECK(call({"poly", "x^^2"}).code == 2);
    CHECK(call({"frobnicate", "2"}).code == 2);
    CHECK(call({"enumerate", "2", "--bound", "x"}).code == 2);
    CHECK(call({"m1", "2^(1/2)"}).code == 4);
    const Outcome cubic = call({"qof", "2^(1/3)"});
    CHECK(cubic.code == 3);
    CHECK(cubic.out.empty());
    CHECK(call({"enumerate", "2^(1/3)"}).code == 3);
    CHECK(call({"reduce", "6", "2", "2"}).code == 1);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("subcommand records") {
    const Json h = record(call({"height", "2^(1/3)", "--precision", "100"}));
    CHECK(h["height"]["value"] == "2^(1/3)");
    const Json m = record(call({"mahler", "root(x^3-x-1,0)"}));
    CHECK(m["agree"] == true);
    const Json r = record(call({"reduce", "2", "root(x^2-2*x+2,0)", "root(x^2-2*x+2,1)"}));
    CHECK(r["unity"] == "1");
    CHECK(r["factors"][0]["reduced"] == "root(x^2-2,1)");
    CHECK(r["factors"][0]["reduced_measure"] == "2");
    const Json e = record(call({"enumerate", "1", "--bound", "3"}));
    CHECK(e["count"] == 14);
    const Json q = record(call({"qof", "6"}));
    CHECK(q["q"]["value"] == "2");
    const Outcome human = call({"m1", "6", "--human"});
    CHECK(human.out.rfind("value: 6\n", 0) == 0);
}

TEST_CASE("precision from the environment") {
    const Json a = record(call({"height", "root(x^3-x-1,0)"}));
    setenv("MAHLER_PRECISION", "20", 1);
    const Json b = record(call({"height", "root(x^3-x-1,0)"}));
    unsetenv("MAHLER_PRECISION");
    const double wa = num(a["height"]["hi"]) - num(a["height"]["lo"]);
    const double wb = num(b["height"]["hi"]) - num(b["height"]["lo"]);
    CHECK(wa <= 1e-14);
    CHECK(wb > wa);
    CHECK(wb <= 1e-6);
}

TEST_CASE("deterministic output") {
    const std::vector<std::vector<std::string>> cmds{
        {"poly", "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"}, {"minf", "12", "--emit-witness"}, {"m1", "2/3", "--emit-witness"},
        {"height", "nonsense("}, {"enumerate", "zeta(4,1)", "--bound", "3/2"}, {"qof", "2^(1/2)"},
        {"reduce", "6", "3*2^(1/2)", "2^(1/2)"}, {"mahler", "root(x^4-x-1,2)"}};
    for (const auto& c : cmds) {
        const Outcome a = call(c), b = call(c);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("witness round trip") {
    for (const char* x : {"12", "-40/9", "2/3", "1", "zeta(4,1)*6", "-1*2^(1/2)", "3^(2/3)", "7^(1/2)*2^(-1/3)"})
        for (const char* cmd : {"m1", "minf"}) {
            const Json j = record(call({cmd, x, "--emit-witness"}));
            const std::string text = j["witness"]["text"];
            CHECK(mahler::parse_number(text).value() == mahler::parse_number(x).value());
        }
}
