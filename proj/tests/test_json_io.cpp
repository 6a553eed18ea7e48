#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "hqc/json_io.hpp"

using namespace hqc;

TEST_CASE("field order and schema") {
    ChainComplex c = build_toric_2d(2);
    std::string text = complex_to_json(c, 1);
    auto j = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"dimension", "levels", "boundaries", "qubit_level",
                                           "meta"});
    CHECK(j["dimension"] == 2);
    CHECK(j["levels"] == nlohmann::ordered_json({4, 8, 4}));
    CHECK(j["qubit_level"] == 1);
    CHECK(j["meta"]["family"] == "toric2d");
    // Sparse entries sorted ascending.
    auto& d1 = j["boundaries"][0];
    for (std::size_t i = 1; i < d1.size(); ++i) {
        auto a = d1[i - 1], b = d1[i];
        CHECK((a[0] < b[0] || (a[0] == b[0] && a[1] < b[1])));
    }
}

TEST_CASE("byte-stable output") {
    ChainComplex c = build_toric_2d(3);
    CHECK(complex_to_json(c, 1) == complex_to_json(build_toric_2d(3), 1));
    CssCode code = CssCode::from_complex(c, 1);
    CHECK(code_to_json(code) == code_to_json(code));
}

TEST_CASE("complex round trip") {
    for (const ChainComplex& c : {build_toric_2d(3), build_toric_4d(2), build_tesseract(2)}) {
        ChainComplex back = complex_from_json(complex_to_json(c, 1));
        CHECK(back.dimension == c.dimension);
        CHECK(back.level_sizes == c.level_sizes);
        CHECK(back.family == c.family);
        for (int i = 1; i <= c.dimension; ++i) CHECK(back.boundary(i) == c.boundary(i));
    }
}

TEST_CASE("code round trip with logicals") {
    CssCode code = CssCode::from_complex(build_toric_2d(3), 1);
    LogicalBasis lb = code.logical_basis();
    std::string text = code_to_json(code, &lb);
    auto j = nlohmann::ordered_json::parse(text);
    CHECK(j.contains("h_x"));
    CHECK(j.contains("h_z"));
    CHECK(j["logicals"].contains("x"));
    CssCode back = code_from_json(text);
    CHECK(back.n() == code.n());
    CHECK(back.compute_k() == 2);
    CHECK(back.h_x() == code.h_x());
    CHECK(back.h_z() == code.h_z());
}

TEST_CASE("corrupt input rejected") {
    CHECK_THROWS(complex_from_json("not json"));
    CHECK_THROWS_AS(complex_from_json("{\"dimension\": 2, \"levels\": [4], \"boundaries\": []}"),
                    std::invalid_argument);
    // Mismatched h_x is refused.
    CssCode code = CssCode::from_complex(build_toric_2d(2), 1);
    std::string text = code_to_json(code);
    auto j = nlohmann::ordered_json::parse(text);
    j["h_x"] = nlohmann::ordered_json::array();
    CHECK_THROWS_AS(code_from_json(j.dump()), std::invalid_argument);
}

TEST_CASE("file io") {
    std::string path = "/tmp/hqc_test_artifact.json";
    write_file(path, "hello\n");
    CHECK(read_file(path) == "hello\n");
    CHECK_THROWS_AS(read_file("/tmp/does_not_exist_hqc"), std::runtime_error);
}
