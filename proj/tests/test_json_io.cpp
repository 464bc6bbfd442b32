#include <doctest.h>

#include "cantor/constructors.hpp"
#include "cantor/ifs.hpp"
#include "cantor/json_io.hpp"

using namespace cantor;

namespace {

TranslationVector tv(int cap, std::vector<std::vector<int>> entries) {
    std::vector<DigitString> list;
    for (auto& e : entries) list.emplace_back(std::move(e), cap);
    return TranslationVector(cap, std::move(list));
}

}  // namespace

TEST_CASE("vector JSON round-trips") {
    auto t = tv(2, {{}, {0, 1}, {1, 1}});
    auto j = to_json(t);
    CHECK(j.at("N") == 2);
    CHECK(j.at("entries").size() == 3);
    CHECK(vector_from_json(j) == t);

    auto parsed = vector_from_json(nlohmann::json::parse(
        R"({"N":1,"entries":[[],[1,1],[1,0,1],[1,0,0,1]]})"));
    CHECK(parsed.tau() == 4);
    CHECK(parsed.m() == 3);

    CHECK_THROWS(vector_from_json(nlohmann::json::parse(R"({"N":1,"entries":[[1]]})")));
}

TEST_CASE("verdict JSON carries the decision and both sides") {
    auto bad = decide_self_similar(tv(1, {{}, {1, 1}, {1, 0, 1}, {1, 0, 0, 1}}));
    auto j = to_json(bad);
    CHECK(j.at("decision") == "NotSelfSimilar");
    CHECK(j.at("admissible_side").is_null());
    CHECK(j.at("cycle").size() == 4);
    CHECK(j.at("t").at("admissible") == false);
    CHECK(j.at("conjugate").at("in_T") == false);

    auto good = decide_self_similar(tv(1, {{}, {1}}));
    auto k = to_json(good);
    CHECK(k.at("decision") == "SelfSimilar");
    CHECK(k.at("admissible_side") == "t");
    CHECK(k.at("covering_length").get<int>() >= 1);
}

TEST_CASE("system JSON lists every map") {
    auto t = tv(1, {{}, {1}});
    auto ifs = extract_ifs(t);
    auto j = to_json(ifs);
    REQUIRE(j.size() == ifs.size());
    for (const auto& entry : j) {
        CHECK((entry.at("sign") == "+" || entry.at("sign") == "-"));
        CHECK(entry.at("power") == 1);
        CHECK(entry.at("word").get<std::string>().size() == 1);
        CHECK(entry.at("offset_coeffs").is_object());
    }
}

TEST_CASE("verification report JSON") {
    auto t = tv(1, {{}, {1}});
    auto ifs = extract_ifs(t);
    auto report = verify_numeric(t, ifs, Rational(1, 4), 5, 6, 17);
    auto j = to_json(report);
    CHECK(j.at("ok") == true);
    CHECK(j.at("max_residual") == "0");
    CHECK(j.at("seed") == 17);
    CHECK_FALSE(j.contains("failure"));
}

TEST_CASE("CSV rows") {
    CHECK(std::string(kCsvHeader) == "m,N,tau,entries,admissible");
    auto t = tv(1, {{}, {1, 1}});
    CHECK(to_csv_row(t, false) == "1,1,2,\"0;1,1\",false");
    CHECK(to_csv_row(construct_admissible(1, 2), true) == "1,2,1,\"0;1\",true");
}
