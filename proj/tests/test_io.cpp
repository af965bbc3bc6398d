#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tlcp/analysis.hpp"
#include "tlcp/errors.hpp"
#include "tlcp/io.hpp"

#include "examples.hpp"

using namespace tlcp;
using namespace tlcp::examples;

namespace {

std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(FIXTURE_DIR) / name;
}

DenseTensor unit22(std::size_t flat) {
    DenseTensor t(cubical_shape(2, 2));
    t[flat] = 1;
    return t;
}

} // namespace

TEST_CASE("fixtures parse to the worked tensors") {
    CHECK(parse_tensor(fixture("ex_csk_not_cs.json")) == csk_not_cs());
    CHECK(parse_tensor(fixture("ex_cs_not_psd.json")) == cs_not_psd());
    CHECK(parse_tensor(fixture("ex_csk_not_cop.json")) == csk_not_cop());
    CHECK(parse_tensor(fixture("ex_cs_not_p.json")) == cs_not_p());
    CHECK(parse_tensor(fixture("ex_nd_not_p.json")) == nd_not_p());
    CHECK(parse_tensor(fixture("identity_2_2.json")) == block_identity(2, 2));
    CHECK(parse_tensor(fixture("q_zero_2_2.json")) == q22({0, 0, 0, 0}));
    CHECK(parse_tensor(fixture("q_ones_2_2.json")) == q22({1, 1, 1, 1}));
    CHECK(parse_tensor(fixture("q_mixed_2_2.json")) == q22({-1, 2, 3, -4}));
}

TEST_CASE("rational values are exact and canonical") {
    Json j = Json::parse(R"({
      "order": 1, "dims": [3],
      "entries": [
        {"idx": [1], "val": "1/3"},
        {"idx": [2], "val": "-6/8"},
        {"idx": [3], "val": "007"}
      ]
    })");
    DenseTensor t = tensor_from_json(j);
    CHECK(t[0] == Rational(1) / 3);
    CHECK(t[1] == Rational(-3) / 4);
    CHECK(t[2] == 7);
    Json out = tensor_to_json(t);
    CHECK(out["entries"][1]["val"] == "-3/4");
}

TEST_CASE("write and reparse round-trips") {
    const auto path = std::filesystem::temp_directory_path() / "tlcp_io_roundtrip.json";
    for (const DenseTensor& t : {csk_not_cs(), q22({-1, 2, 3, -4}), DenseTensor(Shape({2, 3}))}) {
        write_tensor(t, path);
        CHECK(parse_tensor(path) == t);
    }
    std::filesystem::remove(path);

    DenseTensor frac = q22({Rational(1) / 3, Rational(-5) / 7, 0, 12});
    std::istringstream in(tensor_to_json(frac).dump());
    CHECK(parse_tensor(in) == frac);
}

TEST_CASE("tensor serialization is deterministic") {
    Json j = tensor_to_json(cs_not_psd());
    CHECK(j["order"] == 4);
    CHECK(j["dims"] == Json::array({2, 2, 2, 2}));
    CHECK(j["entries"].size() == 3);
    CHECK(j["entries"][0]["idx"] == Json::array({1, 1, 2, 1}));
    CHECK(j["entries"][1]["idx"] == Json::array({2, 1, 1, 1}));
    CHECK(j["entries"][2]["idx"] == Json::array({2, 2, 2, 2}));
    CHECK(j["default"] == "0");

    const std::string expected =
        R"({"order":4,"dims":[2,2,2,2],)"
        R"("entries":[{"idx":[1,1,2,1],"val":"-2"},{"idx":[2,1,1,1],"val":"1"},)"
        R"({"idx":[2,2,2,2],"val":"1"}],"default":"0"})";
    CHECK(j.dump() == expected);
    CHECK(tensor_to_json(cs_not_psd()).dump() == expected);
}

TEST_CASE("schema violations are rejected with context") {
    CHECK_THROWS_WITH_AS(parse_tensor(fixture("bad_float_val.json")),
                         doctest::Contains("must be a rational string, not a number"),
                         SchemaViolationError);
    CHECK_THROWS_AS(parse_tensor(fixture("bad_syntax.json")), ParseError);
    CHECK_THROWS_WITH_AS(parse_tensor(fixture("no_such_file.json")),
                         doctest::Contains("cannot open"), ParseError);

    auto reject = [](const char* text, const char* needle) {
        CHECK_THROWS_WITH_AS(tensor_from_json(Json::parse(text)), doctest::Contains(needle),
                             SchemaViolationError);
    };
    reject(R"([1, 2])", "must be a JSON object");
    reject(R"({"order": 1, "dims": [2], "typo": 1})", "unknown field \"typo\"");
    reject(R"({"dims": [2]})", "missing field \"order\"");
    reject(R"({"order": 1})", "missing field \"dims\"");
    reject(R"({"order": 0, "dims": []})", "order must be at least 1");
    reject(R"({"order": "4", "dims": [2]})", "order must be an integer");
    reject(R"({"order": 2, "dims": [2]})", "dims must be an array of length equal to order");
    reject(R"({"order": 2, "dims": [2, 0]})", "dims[1] must be positive");
    reject(R"({"order": 1, "dims": [2], "entries": {}})", "entries must be an array");
    reject(R"({"order": 1, "dims": [2], "entries": [7]})", "entries[0] must be an object");
    reject(R"({"order": 1, "dims": [2], "entries": [{"idx": [1]}]})",
           "entries[0] needs \"idx\" and \"val\"");
    reject(R"({"order": 1, "dims": [2], "entries": [{"idx": [1], "val": "1", "x": 1}]})",
           "entries[0]: unknown field \"x\"");
    reject(R"({"order": 2, "dims": [2, 2], "entries": [{"idx": [1], "val": "1"}]})",
           ".idx must be an array of length equal to order");
    reject(R"({"order": 1, "dims": [2], "entries": [{"idx": [3], "val": "1"}]})",
           "out of range [1, 2]");
    reject(R"({"order": 1, "dims": [2],
               "entries": [{"idx": [1], "val": "1"}, {"idx": [1], "val": "2"}]})",
           "duplicates an earlier index");
    reject(R"({"order": 1, "dims": [2], "entries": [{"idx": [1], "val": true}]})",
           "must be a rational string");
    reject(R"({"order": 1, "dims": [2], "default": 3})",
           "default must be a rational string, not a number");

    // 2^25 entries exceeds the allocation guard.
    Json big = Json::object();
    big["order"] = 25;
    big["dims"] = std::vector<int>(25, 2);
    CHECK_THROWS_WITH_AS(tensor_from_json(big), doctest::Contains("tensor too large"),
                         SchemaViolationError);

    CHECK_THROWS_WITH_AS(
        tensor_from_json(Json::parse(R"({"order": 1, "dims": [2],
                                         "entries": [{"idx": [1], "val": "1/0"}]})")),
        doctest::Contains("entries[0].val"), ParseError);

    std::istringstream broken("{\"order\": 2");
    CHECK_THROWS_WITH_AS(parse_tensor(broken, "mem"), doctest::Contains("mem: "), ParseError);
}

TEST_CASE("digests") {
    CHECK(fnv1a_digest("") == "fnv1a:cbf29ce484222325");
    CHECK(fnv1a_digest("a") == "fnv1a:af63dc4c8601ec8c");

    const auto path = fixture("q_ones_2_2.json");
    std::ifstream in(path, std::ios::binary);
    std::ostringstream bytes;
    bytes << in.rdbuf();
    CHECK(file_digest(path) == fnv1a_digest(bytes.str()));
    CHECK_THROWS_AS(file_digest(fixture("no_such_file.json")), ParseError);
}

TEST_CASE("classification rendering") {
    Json j = classification_to_json(classify(cs_not_psd()));
    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{
                      "column_sufficient", "column_sufficient_on_nonneg", "p", "nondegenerate",
                      "semi_positive", "strictly_semi_positive", "copositive",
                      "strictly_copositive", "positive_semidefinite"});

    CHECK(j["column_sufficient"]["holds"] == true);
    CHECK(j["column_sufficient"]["witness"].is_null());
    CHECK(j["column_sufficient"]["violating"] == Json::array());
    CHECK(j["column_sufficient"]["witness_value"].is_null());

    const Json& psd = j["positive_semidefinite"];
    CHECK(psd["holds"] == false);
    CHECK(psd["witness"] == tensor_to_json(q22({1, 0, 1, 0})));
    CHECK(psd["violating"] == Json::array({Json::array({1, 1}), Json::array({2, 1})}));
    CHECK(psd["witness_value"] == "-1");
}

TEST_CASE("solver result rendering") {
    TLCPInstance inst(block_identity(2, 2), q22({-1, 2, 3, -4}));
    Json j = lemke_to_json(lemke_solve(inst));
    CHECK(j["kind"] == "solution");
    CHECK(j["pivots"] == 3);
    CHECK(j["solution"]["z"] == tensor_to_json(q22({1, 0, 0, 4})));
    CHECK(j["solution"]["w"] == tensor_to_json(q22({0, 2, 3, 0})));
    CHECK(j["ray_base"].is_null());
    CHECK(j["ray_direction"].is_null());

    DenseTensor neg(cubical_shape(2, 2));
    neg[0] = -1;
    neg[3] = -1;
    DenseTensor qneg(cubical_shape(1, 2), -1);
    Json ray = lemke_to_json(lemke_solve(TLCPInstance(neg, qneg)));
    CHECK(ray["kind"] == "ray");
    CHECK(ray["solution"].is_null());
    CHECK_FALSE(ray["ray_base"].is_null());
    CHECK_FALSE(ray["ray_direction"].is_null());

    Json sols = solution_set_to_json(enumerate_solution_set(TLCPInstance(csk_not_cs(), q22({0, 0, 0, 0}))));
    CHECK(sols["piece_count"] == 9);
    CHECK(sols["empty"] == false);
    CHECK(sols["bounded"] == false);
    CHECK(sols["pieces"].size() == 9);
    CHECK(sols["pieces"][0]["pattern"] == 0);
    CHECK(sols["pieces"][0]["status"] == "point");
    CHECK(sols["pieces"][0]["support"] == Json::array());
    CHECK(sols["pieces"][1]["pattern"] == 2);
    CHECK(sols["pieces"][1]["status"] == "polyhedron");
    CHECK(sols["pieces"][1]["support"] == Json::array({Json::array({1, 2})}));
    CHECK(sols["pieces"][1]["rays"] == Json::array({tensor_to_json(unit22(1))}));
    CHECK(sols["pieces"][1]["dim"] == 1);
}

TEST_CASE("analysis rendering") {
    TLCPInstance inst(csk_not_cs(), q22({0, 0, 0, 0}));
    Json conv = convexity_to_json(check_convexity(inst));
    CHECK(conv["verdict"] == "nonconvex");
    CHECK(conv["convex"] == false);
    CHECK(conv["piece_count"] == 9);
    CHECK(conv["vertex_generators"] == 1);
    CHECK(conv["ray_generators"] == 2);
    CHECK(conv["violating_pair"] ==
          Json::array({tensor_to_json(unit22(1)), tensor_to_json(unit22(2))}));
    CHECK(conv["cross_values"] == Json::array({"2", "1"}));

    Json single = convexity_to_json(check_convexity(TLCPInstance(cs_not_psd(), q22({1, 1, 1, 1}))));
    CHECK(single["verdict"] == "singleton");
    CHECK(single["convex"] == true);
    CHECK(single["violating_pair"].is_null());
    CHECK(single["cross_values"].is_null());

    Json w = witness_to_json(construct_nonconvex_witness(csk_not_cs()));
    CHECK(w["q"] == tensor_to_json(q22({0, 0, 0, 0})));
    CHECK(w["x1"] == tensor_to_json(unit22(1)));
    CHECK(w["x2"] == tensor_to_json(unit22(2)));
    CHECK(w["cross_values"] == Json::array({"2", "1"}));
    CHECK(w["strict_index"] == Json::array({1, 2}));

    Json uni = uniqueness_to_json(check_uniqueness_positive_q(cs_not_psd(), q22({1, 1, 1, 1})));
    CHECK(uni["kind"] == "unique");
    CHECK(uni["solution"] == tensor_to_json(q22({0, 0, 0, 0})));
    CHECK(uni["pair"].is_null());
}

TEST_CASE("reloaded witnesses still verify") {
    Json w = witness_to_json(construct_nonconvex_witness(csk_not_cs()));
    Json copy = Json::parse(w.dump());
    DenseTensor q = tensor_from_json(copy["q"]);
    DenseTensor x1 = tensor_from_json(copy["x1"]);
    DenseTensor x2 = tensor_from_json(copy["x2"]);
    TLCPInstance inst(csk_not_cs(), q);
    CHECK(verify_solution(inst, x1).ok);
    CHECK(verify_solution(inst, x2).ok);
    auto cross = cross_complementarity(inst, x1, x2);
    CHECK(to_string(cross.first) == copy["cross_values"][0].get<std::string>());
    CHECK(to_string(cross.second) == copy["cross_values"][1].get<std::string>());
}

TEST_CASE("harness rendering is deterministic") {
    HarnessOptions opt;
    opt.seed = 7;
    opt.count = 2;
    Json a = harness_to_json(theorem_harness(opt));
    Json b = harness_to_json(theorem_harness(opt));
    CHECK(a.dump(2) == b.dump(2));
    CHECK(a["seed"] == 7);
    CHECK(a["count"] == 2);
    CHECK(a["tensors"] == 2);
    CHECK(a["ok"] == true);
    CHECK(a["failures"] == Json::array());
}

TEST_CASE("report envelope") {
    Json env = report_envelope("classify", {fixture("ex_cs_not_psd.json")});
    CHECK(env["command"] == "classify");
    REQUIRE(env["inputs"].size() == 1);
    const std::string path = env["inputs"][0]["path"].get<std::string>();
    CHECK(path.ends_with("ex_cs_not_psd.json"));
    const std::string digest = env["inputs"][0]["digest"].get<std::string>();
    CHECK(digest.starts_with("fnv1a:"));
    CHECK(digest == file_digest(fixture("ex_cs_not_psd.json")));
}
