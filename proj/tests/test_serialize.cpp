#include "doctest.h"

#include "park/errors.hpp"
#include "park/serialize.hpp"

using namespace park;

TEST_SUITE("serialize") {

TEST_CASE("prefs csv") {
    CHECK(parse_prefs_csv("3,2,1,3") == Prefs{3, 2, 1, 3});
    CHECK(parse_prefs_csv("7") == Prefs{7});
    CHECK_THROWS_AS(parse_prefs_csv("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_prefs_csv("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_prefs_csv(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_prefs_csv("1, 2"), std::invalid_argument);
}

TEST_CASE("partition json round trip") {
    auto p = SetPartition(5, {{1, 5}, {2, 4}, {3}});
    auto j = partition_to_json(p);
    CHECK(j == json{{"n", 5}, {"blocks", {{1, 5}, {2, 4}, {3}}}});
    CHECK(partition_from_json(j) == p);
    for (const auto& q : enumerate_noncrossing(5)) {
        REQUIRE(partition_from_json(partition_to_json(q)) == q);
    }
    CHECK_THROWS_AS(partition_from_json(json{{"n", 3}}), domain_error);
    CHECK_THROWS_AS(partition_from_json(json{{"n", 3}, {"blocks", {{1, 2}}}}), domain_error);
}

TEST_CASE("chain json round trip") {
    for (const auto& chain : enumerate_maximal_chains(4)) {
        auto j = chain_to_json(chain);
        REQUIRE(chain_from_json(j) == chain);
        REQUIRE(j.at("labels").get<std::vector<int>>() == chain.labels());
        REQUIRE(chain_from_json(j.at("partitions")) == chain);  // bare-array form
    }
    CHECK_THROWS_AS(chain_from_json(json{{"partitions", "nope"}}), domain_error);
}

TEST_CASE("labeled path json round trip") {
    auto ld = pf_to_labeled_dyck({1, 4, 1, 2, 2});
    auto j = labeled_path_to_json(ld);
    CHECK(j.at("word") == "NNENNEENEE");
    CHECK(labeled_path_from_json(j) == ld);
    CHECK_THROWS_AS(labeled_path_from_json(json{{"word", "NE"}}), domain_error);
}

TEST_CASE("block notation") {
    CHECK(block_notation(SetPartition(5, {{1, 5}, {2, 4}, {3}})) == "{1,5}{2,4}{3}");
    CHECK(block_notation(SetPartition::one_block(3)) == "{1,2,3}");
}

TEST_CASE("hasse dot output") {
    auto dot = hasse_to_dot(hasse_diagram(3));
    CHECK(dot.find("digraph hasse {") == 0);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("label=\"{1}{2}{3}\"") != std::string::npos);
    CHECK(dot.find("label=\"{1,3}{2}\"") != std::string::npos);
    CHECK(dot.find("n0 -> n1;") != std::string::npos);
    // one rank cluster per level
    size_t clusters = 0, pos = 0;
    while ((pos = dot.find("rank=same", pos)) != std::string::npos) {
        ++clusters;
        pos += 1;
    }
    CHECK(clusters == 3);
}

TEST_CASE("hasse json output") {
    auto j = hasse_to_json(hasse_diagram(3));
    CHECK(j.at("n") == 3);
    CHECK(j.at("nodes").size() == 5);
    CHECK(j.at("edges").size() == 6);
    CHECK(j.at("ranks") == json({0, 1, 1, 1, 2}));
}

TEST_CASE("permutahedron exports") {
    auto g = permutahedron_graph(3);
    auto dot = permutahedron_to_dot(g);
    CHECK(dot.find("graph permutahedron {") == 0);
    CHECK(dot.find("label=\"123\"") != std::string::npos);
    CHECK(dot.find(" -- ") != std::string::npos);
    auto j = permutahedron_to_json(g);
    CHECK(j.at("vertices").size() == 6);
    CHECK(j.at("edges").size() == 6);
}

TEST_CASE("points csv") {
    std::vector<LatticePoint> pts{{1, 1, 3}, {1, 3, 1}};
    CHECK(points_to_csv(pts, false) == "1,1,3\n1,3,1\n");
    CHECK(points_to_csv(pts, true) == "x1,x2,x3\n1,1,3\n1,3,1\n");
}

} // TEST_SUITE
