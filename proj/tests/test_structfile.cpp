#include "hopfq/structfile.hpp"

#include "hopfq/errors.hpp"

#include <doctest.h>

#include <string>

using namespace hopfq;

namespace {
std::string data_path(const std::string& name) { return std::string(HOPFQ_DATA_DIR) + "/" + name; }
}

TEST_CASE("round trip: serialize(parse(file)) parses identically") {
    for (const char* name : {"kz2.struct", "pair_groupoid.struct", "octonion.struct",
                             "projection.struct", "weak_tensor.struct"}) {
        Document doc = load_document(data_path(name));
        Document again = parse_document(serialize(doc));
        CHECK(doc == again);
        CHECK(serialize(doc) == serialize(again));
    }
}

TEST_CASE("bundled documents resolve with roles") {
    Document doc = load_document(data_path("kz2.struct"));
    CHECK(doc.whq().dim == 2);
    CHECK(doc.comodule_magma().b.dim == 2);
    CHECK(doc.anchor().h == Mat::identity(2));
    CHECK(doc.module_entry().m.dim == 2);
    CHECK(doc.module_list().size() == 1);
}

TEST_CASE("builder entries expand to checked structures") {
    Document doc = load_document(data_path("weak_tensor.struct"));
    CHECK(doc.whq().dim == 64);
    CHECK(doc.comodule_magma().b.dim == 64);
    CHECK(doc.anchor().h == Mat::identity(64));
}

TEST_CASE("rationals are stored exactly and canonically") {
    const char* text = R"({
      "format": "hopfq.struct/v1",
      "objects": {
        "A": {"kind": "magma", "dim": 1, "eta": [["2/4"]], "mu": [["-6/-9"]]}
      }
    })";
    CHECK_THROWS_AS(parse_document(text), ParseError); // -6/-9 has a signed denominator
    const char* text2 = R"({
      "format": "hopfq.struct/v1",
      "objects": {
        "A": {"kind": "magma", "dim": 1, "eta": [["2/4"]], "mu": [["-6/9"]]}
      }
    })";
    Document doc = parse_document(text2);
    CHECK(doc.magmas.at("A").eta.at(0, 0) == Scalar(1, 2));
    CHECK(doc.magmas.at("A").mu.at(0, 0) == Scalar(-2, 3));
    CHECK(serialize(doc).find("1/2") != std::string::npos);
    CHECK(serialize(doc).find("2/4") == std::string::npos);
}

TEST_CASE("parse errors carry position information") {
    try {
        parse_document("{ not json");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("reference and dimension errors") {
    CHECK_THROWS_AS(parse_document(R"({"objects": {"B": {"kind": "comodule_magma",
        "whq": "missing", "dim": 1, "eta": [["1"]], "mu": [["1"]], "rho": [["1"]]}}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_document(R"({"objects": {"A": {"kind": "magma", "dim": 2,
        "eta": [["1"],["0"]], "mu": [["1"]]}}})"),
                    DimensionError);
    CHECK_THROWS_AS(parse_document(R"({"objects": {"A": {"kind": "nonsense"}}})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"objects": {}, "roles": {"whq": "H"}})"), ParseError);
    CHECK_THROWS_AS(load_document("/nonexistent/file.struct"), ParseError);
}

TEST_CASE("max-dim cap") {
    CHECK_THROWS_AS(load_document(data_path("octonion.struct"), 8), DimensionError);
    CHECK_NOTHROW(load_document(data_path("octonion.struct"), 256));
    CHECK_THROWS_AS(load_document(data_path("weak_tensor.struct"), 32), DimensionError);
}

TEST_CASE("smash entries produce the comodule magma and its anchor") {
    Document doc = load_document(data_path("quaternion_smash.struct"));
    CHECK(doc.whq().dim == 8);
    CHECK(doc.comodule_magma().b.dim == 32);
    CHECK(doc.anchor().h.rows() == 32);
    CHECK(doc.anchor().h.cols() == 8);

    // The same system expressed through the smash section itself.
    const char* text = R"({
      "format": "hopfq.struct/v1",
      "objects": {
        "G": {"kind": "builder", "builder": "elementary_abelian_2", "k": 1},
        "A": {"kind": "builder", "builder": "group_algebra", "of": "G"},
        "H": {"kind": "builder", "builder": "group_algebra", "of": "G"},
        "S": {"kind": "smash", "magma": "A", "whq": "H",
              "phi_a": [["1","0","1","0"],["0","1","0","1"]]}
      },
      "roles": {"comodule_magma": "S", "anchor": "S.h"}
    })";
    Document smash = parse_document(text);
    CHECK(smash.comodule_magma().b.dim == 4);
    CHECK(smash.anchors.count("S.h") == 1);
}

TEST_CASE("circular references are rejected") {
    const char* text = R"({
      "format": "hopfq.struct/v1",
      "objects": {
        "X": {"kind": "builder", "builder": "whq_tensor", "left": "Y", "right": "Y"},
        "Y": {"kind": "builder", "builder": "whq_tensor", "left": "X", "right": "X"}
      }
    })";
    CHECK_THROWS_AS(parse_document(text), ParseError);
}
