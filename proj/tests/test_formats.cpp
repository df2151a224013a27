#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockdeg/fixtures.hpp"
#include "blockdeg/json_io.hpp"

using namespace blockdeg;
using namespace blockdeg::json_io;

TEST_CASE("cyclotomic values round-trip through JSON") {
    for (auto v : {cyclo::cyc_int(-3), cyclo::cyc_root(12, 7), cyclo::cyc_root(30, 11)}) {
        auto j = cyc_to_json(v);
        CHECK(cyc_from_json(j) == v);
        CHECK(cyc_to_json(cyc_from_json(j)) == j);
    }
    json bad = {{"conductor", 12}, {"coeffs", {1, 2}}};
    CHECK_THROWS_AS(cyc_from_json(bad), std::invalid_argument);
}

TEST_CASE("table JSON round trip") {
    auto t = chartable::character_table(fixtures::alternating_group(5));
    auto j = table_to_json(t);
    CHECK(j.at("order") == 60);
    CHECK(j.at("degrees") == json::array({1, 3, 3, 4, 5}));
    auto doc = table_from_json(j);
    CHECK(table_doc_to_json(doc) == j);
    CHECK(table_doc_to_json(table_from_json(table_doc_to_json(doc))) == j);
    // the serialized text parses back to the identical document
    auto reparsed = json::parse(j.dump(2));
    CHECK(reparsed == j);
    CHECK(doc.class_sizes == std::vector<u64>{1, 20, 15, 12, 12});
}

TEST_CASE("block report JSON") {
    auto t = chartable::character_table(fixtures::alternating_group(5));
    auto bp = blocks::block_partition(t, 2);
    auto j = blocks_to_json(t, bp);
    CHECK(j.at("p") == 2);
    CHECK(j.at("principal") == 0);
    CHECK(j.at("cd_b0") == json::array({1, 3, 5}));
    unsigned total = 0;
    for (const auto& b : j.at("blocks")) total += b.size();
    CHECK(total == t.num_chars());
}

TEST_CASE("verdict JSON") {
    auto v = classifier::verify_pair(lietype::make_family(lietype::Family::SL2even, 2, 8), 3,
                                     classifier::Method::Both);
    auto j = verdict_to_json(v);
    CHECK(j.at("group") == "SL2(8)");
    CHECK(j.at("accepted") == true);
    CHECK(j.at("cd_b0") == json::array({1, 7, 8}));
    CHECK(j.at("case").is_null());
}
