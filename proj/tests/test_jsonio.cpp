#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <permspectra/json_io.hpp>

using namespace permspectra;

TEST_CASE("permutations serialize as one-indexed arrays") {
    auto p = Permutation::from_cycles(4, "(1 2)(3 4)");
    Json j = to_json(p);
    CHECK(j.dump() == "[2,1,4,3]");
    CHECK(permutation_from_json(j) == p);
    CHECK_THROWS(permutation_from_json(Json("not an array")));
    CHECK_THROWS(permutation_from_json(Json::parse("[1,1,2]")));
}

TEST_CASE("partitions serialize as integer arrays with string map keys") {
    Partition p({3, 2, 2});
    Json j = to_json(p);
    CHECK(j.dump() == "[3,2,2]");
    CHECK(partition_from_json(j) == p);
    CHECK(partition_from_json(Json("[3,2,2]")) == p);
    CHECK_THROWS(partition_from_json(Json::parse("[2,3]")));
}

TEST_CASE("rationals serialize as p/q strings") {
    CHECK(to_json(Rat(-1, 3)).get<std::string>() == "-1/3");
    CHECK(to_json(Rat(6)).get<std::string>() == "6");
    CHECK(rat_from_string("-1/3") == Rat(-1, 3));
    CHECK(rat_from_string("6") == Rat(6));
    CHECK(rat_from_string("4/6") == Rat(2, 3));
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK_THROWS(rat_from_string("abc"));
}

TEST_CASE("spec round trip") {
    auto s = WeightedCayleySpec::uniform_derangements(5);
    Json j = to_json(s);
    auto back = spec_from_json(j);
    CHECK(back.n == s.n);
    CHECK(back.t == s.t);
    CHECK(back.weights == s.weights);
    // weight keys are partition strings
    CHECK(j["weights"].contains("[5]"));

    Json bad = j;
    bad["weights"]["[1,1,1,1,1]"] = "1";  // identity class is rejected
    CHECK_THROWS(spec_from_json(bad));
}

TEST_CASE("family round trip") {
    auto f = build_D(4, 1);
    Json j = to_json(f);
    CHECK(j.is_array());
    CHECK(j.size() == f.size());
    CHECK(family_from_json(j, 4) == f);
}

TEST_CASE("spectrum document shape") {
    auto sp = cayley_spectrum(WeightedCayleySpec::uniform_derangements(4));
    Json j = to_json(sp);
    CHECK(j["n"] == 4);
    CHECK(j["group"] == "sym");
    CHECK(j["order"] == "24");
    REQUIRE(j["entries"].size() == 5);
    CHECK(j["entries"][0]["partition"] == "[4]");
    CHECK(j["entries"][0]["eigenvalue"] == "1");
    CHECK(j["entries"][0]["multiplicity"] == "1");
    CHECK(j["entries"][1]["partition"] == "[3,1]");
    CHECK(j["entries"][1]["eigenvalue"] == "-1/3");
    CHECK(j["entries"][1]["multiplicity"] == "9");

    auto hb = hoffman_bound(sp, sp.group_order());
    Json hj = to_json(hb);
    CHECK(hj["bound"] == "6");
    CHECK(hj["lambda_min"] == "-1/3");
}

TEST_CASE("csv emission") {
    auto csv = spectrum_csv(cayley_spectrum(WeightedCayleySpec::uniform_derangements(4)));
    CHECK(csv.find("partition,eigenvalue,multiplicity") == 0);
    CHECK(csv.find("\"[3,1]\",-1/3,9") != std::string::npos);

    auto tcsv = character_table_csv(character_table(3));
    CHECK(tcsv.find("partition,dimension") == 0);
    CHECK(tcsv.find("\"[2,1]\",2") != std::string::npos);
}

TEST_CASE("ordered output is byte-stable") {
    auto sp = cayley_spectrum(WeightedCayleySpec::uniform_derangements(4));
    CHECK(to_json(sp).dump() == to_json(sp).dump());
    auto j = to_json(sp);
    auto keys = std::vector<std::string>{};
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"n", "group", "order", "entries"});
}
