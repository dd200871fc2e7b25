#include "doctest.h"

#include "fixtures.hpp"
#include "posetcoh/errors.hpp"
#include "posetcoh/io.hpp"
#include "posetcoh/rng.hpp"

using namespace posetcoh;

TEST_CASE("poset documents") {
    Poset c2 = parse_poset(parse_json_text(R"({"elements": ["p0","p1","p2","p3"],
        "relations": [["p2","p0"],["p2","p1"],["p3","p0"],["p3","p1"]]})"));
    CHECK(c2 == fixtures::crown());
    CHECK(parse_poset(parse_json_text(R"({"elements": ["a"], "relations": []})")).size() == 1);
    CHECK_THROWS_WITH_AS(parse_poset(parse_json_text(R"({"elements": ["a","b"], "relations": [["a","b"],["b","a"]]})")),
                         doctest::Contains("antisymmetry"), InputError);
    CHECK_THROWS_WITH_AS(parse_poset(parse_json_text(R"({"elements": ["a","a"]})")), doctest::Contains("'a'"), InputError);
    CHECK_THROWS_WITH_AS(parse_poset(parse_json_text(R"({"elements": ["a"], "relations": [["a","z"]]})")),
                         doctest::Contains("'z'"), InputError);
    CHECK_THROWS_AS(parse_poset(parse_json_text(R"({"elements": []})")), InputError);
    CHECK_THROWS_AS(parse_json_text("{"), InputError);
}

TEST_CASE("poset round trip") {
    Rng rng(1);
    for (int k = 0; k < 30; ++k) {
        Poset p = random_poset(1 + rng.below(9), 0.4, rng.next());
        CHECK(parse_poset(serialize_poset(p)) == p);
        CHECK(serialize_poset(p).dump() == serialize_poset(parse_poset(serialize_poset(p))).dump());
    }
}

TEST_CASE("group and matrix literals") {
    CHECK(parse_group(parse_json_text(R"({"rank": 2, "torsion": [2, 4]})"), "g").canonical() == CanonicalGroup{2, {2, 4}});
    CHECK(parse_group(parse_json_text(R"({"generators": 2, "relators": [[2, 6], [4, 8]]})"), "g").canonical() ==
          CanonicalGroup{0, {2, 4}});
    CHECK(parse_group(parse_json_text(R"({"rank": 1, "torsion": ["340282366920938463463374607431768211456"]})"), "g")
              .canonical()
              .torsion[0]
              .get_str() == "340282366920938463463374607431768211456");
    CHECK_THROWS_AS(parse_group(parse_json_text("null"), "g"), InputError);
    CHECK_THROWS_AS(parse_group(parse_json_text(R"({"generators": 2, "relators": [[1]]})"), "g"), InputError);
    CHECK_THROWS_AS(parse_group(parse_json_text(R"({"rank": -1})"), "g"), InputError);
    CHECK(parse_matrix(parse_json_text("[[1,2],[3,4]]"), 2, 2, "m") == IntMatrix{{1, 2}, {3, 4}});
    CHECK(parse_matrix(parse_json_text("[]"), 0, 3, "m") == IntMatrix(0, 3));
    CHECK(parse_matrix(parse_json_text("[[], []]"), 2, 0, "m") == IntMatrix(2, 0));
    CHECK_THROWS_AS(parse_matrix(parse_json_text("[[1,2]]"), 2, 2, "m"), InputError);
    CHECK(group_json(CanonicalGroup{1, {2}}).dump() == R"({"rank":1,"torsion":[2]})");
}

TEST_CASE("skeletons") {
    auto c2 = presheaf_skeleton(fixtures::crown());
    CHECK(c2["groups"].size() == 5);
    CHECK(c2["maps"].size() == 4);
    for (auto& [k, v] : c2["groups"].items()) CHECK(v.is_null());
    auto pt = presheaf_skeleton(fixtures::point());
    CHECK(pt["groups"].size() == 1);
    CHECK(pt["maps"].size() == 0);
    CHECK(presheaf_skeleton(fixtures::sphere())["groups"].size() == 8);
    // An unfilled skeleton is rejected with the slot named.
    CHECK_THROWS_WITH_AS(parse_presheaf(c2, fixtures::crown()), doctest::Contains("not filled in"), InputError);
}

TEST_CASE("presheaf documents") {
    Poset c2 = fixtures::crown();
    auto doc = presheaf_skeleton(c2);
    for (auto& [k, v] : doc["groups"].items()) v = Json{{"rank", 1}};
    for (auto& [k, v] : doc["maps"].items()) v = Json::array({Json::array({1})});
    Presheaf p = parse_presheaf(doc, c2);
    CHECK(compare_report(p).first_failure() == std::optional<std::size_t>(1));

    doc["maps"]["{p2,p3}->{p2}"] = Json::array({Json::array({2})});
    CHECK(parse_presheaf(doc, c2).diagram().map_matrix(2, 3) == IntMatrix{{2}});
    doc["maps"]["{p0,p2,p3}->{p2}"] = Json::array({Json::array({1})});
    CHECK_THROWS_WITH_AS(parse_presheaf(doc, c2), doctest::Contains("not a Hasse edge"), InputError);
    doc["maps"].erase("{p0,p2,p3}->{p2}");
    doc["base"] = serialize_poset(fixtures::n_poset());
    CHECK_THROWS_WITH_AS(parse_presheaf(doc, c2), doctest::Contains("differs"), InputError);

    // Round trip through the writer.
    for (std::uint64_t seed = 1; seed < 10; ++seed) {
        Presheaf r = random_presheaf(IntersectionPoset(c2), seed);
        Presheaf back = parse_presheaf(serialize_presheaf(r), c2);
        CHECK(back.diagram().values() == r.diagram().values());
        CHECK(back.diagram().edge_maps() == r.diagram().edge_maps());
    }
}

TEST_CASE("diagram documents and functoriality errors") {
    Poset s = fixtures::sphere();
    Json doc{{"mode", "diagram"}, {"groups", Json::object()}, {"maps", Json::object()}};
    for (const auto& n : s.names()) doc["groups"][n] = Json{{"rank", 1}};
    for (auto [lo, hi] : s.covers()) doc["maps"][s.name(hi) + "->" + s.name(lo)] = Json::array({Json::array({1})});
    Presheaf sh = parse_presheaf(doc, s);
    CHECK(topos_cohomology(sh, 2) == CanonicalGroup::free(1));
    doc["maps"]["0->2"] = Json::array({Json::array({-1})});
    CHECK_THROWS_WITH_AS(parse_presheaf(doc, s), doctest::Contains("diamond"), InputError);
}
