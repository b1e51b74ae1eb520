#include "spinh/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <regex>
#include <sstream>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::string& line)
{
    std::vector<std::string> args;
    std::istringstream in(line);
    for (std::string a; in >> a;)
        args.push_back(a);
    std::ostringstream out, err;
    int code = spinh::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json load_schema(const std::string& name)
{
    std::ifstream f(std::string(SPINH_SCHEMA_DIR) + "/" + name + ".schema.json");
    REQUIRE(f.good());
    return json::parse(f);
}

// The subset of draft-07 the shipped schemas use.
bool validate(const json& v, const json& s, std::string& why)
{
    if (s.contains("oneOf")) {
        int hits = 0;
        std::string ignored;
        for (auto& alt : s["oneOf"])
            hits += validate(v, alt, ignored);
        if (hits != 1)
            why = "oneOf matched " + std::to_string(hits);
        return hits == 1;
    }
    if (s.contains("type")) {
        std::string t = s["type"];
        bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array())
            || (t == "string" && v.is_string()) || (t == "integer" && v.is_number_integer())
            || (t == "boolean" && v.is_boolean());
        if (!ok) {
            why = "expected " + t + " at " + v.dump();
            return false;
        }
    }
    if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end()) {
        why = v.dump() + " not in enum";
        return false;
    }
    if (s.contains("minimum") && v.get<long>() < s["minimum"].get<long>()) {
        why = v.dump() + " below minimum";
        return false;
    }
    if (s.contains("pattern") && !std::regex_match(v.get<std::string>(), std::regex(s["pattern"].get<std::string>()))) {
        why = v.dump() + " does not match pattern";
        return false;
    }
    if (v.is_object()) {
        for (auto& r : s.value("required", json::array()))
            if (!v.contains(r.get<std::string>())) {
                why = "missing " + r.get<std::string>();
                return false;
            }
        auto props = s.value("properties", json::object());
        for (auto& [k, x] : v.items()) {
            if (props.contains(k)) {
                if (!validate(x, props[k], why))
                    return false;
            } else if (s.value("additionalProperties", true) == false) {
                why = "unexpected key " + k;
                return false;
            }
        }
    }
    if (v.is_array() && s.contains("items"))
        for (auto& x : v)
            if (!validate(x, s["items"], why))
                return false;
    return true;
}

} // namespace

TEST_CASE("cli examples")
{
    auto a = run("classify --n 6 --variant Clh");
    CHECK(a.code == 0);
    CHECK(a.out == "H(8)\n");
    auto b = run("genus --sig 1 --euler 3 --orientation +");
    CHECK(b.code == 0);
    CHECK(b.out == "2\n");
    auto c = run("hp-table --max-i 2 --max-j 2");
    CHECK(c.code == 0);
    CHECK(c.out == "[[1,0,0],[2,1,0],[3,4,1]]\n");
    CHECK(run("hp-table --max-i 2 --max-j 2 --method residue").out == c.out);
    CHECK(run("hp-table --max-i 2 --max-j 2 --method chebyshev").out == c.out);
    CHECK(run("steenrod sq --k 1 --poly w2").out == "w3\n");
    CHECK(run("steenrod chi --k 7").out == "Sq4Sq2Sq1\n");
    CHECK(run("zk-index --n 8 --k 3 --integral 6 --eta 0").out == "0\n");
    CHECK(run("ngroup --n 5 --field H").out.find("Z2") != std::string::npos);
}

TEST_CASE("cli exit codes")
{
    CHECK(run("").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("classify --n x").code == 2);
    CHECK(run("classify --n 3 --variant Pin").code != 0);
    CHECK(run("--help").code == 0);
    auto e = run("zk-index --n 8 --k 5 --integral 7 --eta 0");
    CHECK(e.code == 1);
    CHECK(e.err.find("error[non_integral]") == 0);
    auto f = run("dims --n 0..2");
    CHECK(f.code == 1);
    CHECK(f.err.find("error[") == 0);
    CHECK(run("ngroup --r 1 --s 1 --field C").code == 1);
}

TEST_CASE("cli determinism")
{
    for (const char* cmd : {"--format json steenrod verify-bspinh --max-degree 12", "ktable --theory KO --coeff Z4 --range 0..16",
             "--format tsv dims --n 1..24", "--format json dual --torsion 4,6", "steenrod wu --max-degree 12"}) {
        auto a = run(cmd), b = run(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("json outputs validate against the shipped schemas")
{
    const std::pair<const char*, const char*> cases[] = {
        {"classify", "classify --n 6 --variant Clh"},
        {"classify", "classify --r 5 --s 1"},
        {"classify", "classify --r 4 --s 0 --quaternionic"},
        {"dims", "dims --n 1..16"},
        {"dims", "dims --n 3..5 --field C"},
        {"ngroup", "ngroup --n 0..16 --field H"},
        {"ngroup", "ngroup --r 5 --s 1 --field R"},
        {"genus", "genus --sig 1 --euler 3 --orientation -"},
        {"hp-table", "hp-table --max-i 4 --max-j 3 --method residue"},
        {"steenrod-sq", "steenrod sq --k 3 --poly w4*w2"},
        {"steenrod-wu", "steenrod wu --max-degree 10"},
        {"steenrod-adem", "steenrod adem --seq 2,7"},
        {"steenrod-chi", "steenrod chi --k 15"},
        {"steenrod-verify-bspinh", "steenrod verify-bspinh --max-degree 16"},
        {"ktable", "ktable --theory KSp --coeff Q/Z --range 0..16"},
        {"ktable", "ktable --theory KO --coeff Z2 --range 0..8"},
        {"ktable", "ktable --theory KU --coeff Q --range -4..4"},
        {"zk-index", "zk-index --n 4 --k 3 --integral 5 --eta 2"},
        {"dual", "dual --rank 1 --torsion 2,3"},
    };
    for (auto& [schema, cmd] : cases) {
        CAPTURE(cmd);
        auto r = run(std::string("--format json ") + cmd);
        REQUIRE(r.code == 0);
        json v = json::parse(r.out);
        std::string why;
        CHECK_MESSAGE(validate(v, load_schema(schema), why), why);
        auto again = run(std::string(cmd) + " --format json");
        CHECK(again.out == r.out);
    }
}

TEST_CASE("json content")
{
    auto v = json::parse(run("--format json classify --n 0 --variant CClh").out);
    CHECK(v == json{{"field", "C"}, {"size", 2}, {"simple", true}});
    auto t = json::parse(run("--format json ktable --theory KSp --coeff Q/Z --range 0..16").out);
    REQUIRE(t["table"].size() == 17);
    CHECK(t["table"][6]["group"] == "Z2");
    CHECK(t["table"][8]["group"] == "Q/Z");
    auto h = json::parse(run("--format json steenrod verify-bspinh --max-degree 20").out);
    CHECK(h["pass"] == true);
    auto d = json::parse(run("--format json dual --torsion 6").out);
    CHECK(d["candidate_maps"] == 36);
    CHECK(d["valid_maps"] == 6);
}
