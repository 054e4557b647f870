#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "singtile/report.hpp"

using namespace singtile;

namespace {
QuadInt g(Int a, Int b) { return {a, b, Ring::gauss}; }
QuadInt e(Int a, Int b) { return {a, b, Ring::eisenstein}; }

json load_schema(const std::string& name) {
    std::ifstream in(std::string(SINGTILE_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}
}  // namespace

TEST_CASE("classification reports validate against schema v1") {
    const json schema = load_schema("report-v1.schema.json");
    for (auto [kind, alpha] : {std::pair{Tiling::square44, g(-5, 5)},
                               {Tiling::square44, g(4, 0)},
                               {Tiling::square44, g(4, 6)},
                               {Tiling::hex63, e(6, 0)},
                               {Tiling::hex63, e(10, 2)},
                               {Tiling::tri36, e(2, 10)},
                               {Tiling::tri36, e(-5, 5)}}) {
        const json report = build_report(check_admissible(kind, alpha));
        std::string why;
        INFO("alpha=" << to_string(alpha) << ": " << why);
        CHECK(matches_schema(report, schema, &why));
    }
}

TEST_CASE("verify reports validate against their schema") {
    const json schema = load_schema("verify-v1.schema.json");
    const json report =
        build_verify_report(check_admissible(Tiling::hex63, e(6, 0)), true);
    std::string why;
    INFO(why);
    CHECK(matches_schema(report, schema, &why));
    CHECK(report.at("agree").get<bool>());
}

TEST_CASE("schema checker rejects malformed documents") {
    const json schema = load_schema("report-v1.schema.json");
    json report = build_report(check_admissible(Tiling::square44, g(-5, 5)));
    SECTION("missing required field") {
        report.erase("max_colors");
        CHECK_FALSE(matches_schema(report, schema, nullptr));
    }
    SECTION("enum violation") {
        report["kind"] = "45";
        CHECK_FALSE(matches_schema(report, schema, nullptr));
    }
    SECTION("type violation") {
        report["L"] = "five";
        CHECK_FALSE(matches_schema(report, schema, nullptr));
    }
}

TEST_CASE("every printed element in a report re-parses") {
    const json report = build_report(check_admissible(Tiling::tri36, e(2, 10)));
    const Ring r = Ring::eisenstein;
    CHECK(parse_quadint(report.at("alpha").get<std::string>(), r) == e(2, 10));
    CHECK(parse_quadint(report.at("symmetry").at("f1").get<std::string>(), r) ==
          e(1, 5));
    for (const auto& c : report.at("ideals")) {
        const QuadInt gen = parse_quadint(c.at("generator").get<std::string>(), r);
        CHECK(to_string(gen) == c.at("generator").get<std::string>());
    }
    for (const auto& f : report.at("census"))
        CHECK_NOTHROW(parse_quadint(f.at("direction").get<std::string>(), r));
}

TEST_CASE("text and json reports carry the same facts") {
    const Admissible adm = check_admissible(Tiling::square44, g(-5, 5));
    const json report = build_report(adm);
    const std::string text = report_text(report);
    CHECK(text.find("-5+5i") != std::string::npos);
    CHECK(text.find("D5") != std::string::npos);
    CHECK(text.find("-1+i") != std::string::npos);
    CHECK(text.find("max 50") != std::string::npos);
    for (const auto& c : report.at("ideals"))
        CHECK(text.find("(" + c.at("generator").get<std::string>() + ")") !=
              std::string::npos);
}

TEST_CASE("check reports") {
    const Admissible adm = check_admissible(Tiling::square44, g(-5, 5));
    SECTION("compatible chiral ideal") {
        const json j = build_check_report(adm, g(2, 1));
        CHECK(j.at("compatible") == true);
        CHECK(j.at("colors") == 5);
        CHECK(j.at("perfect") == "chiral");
        CHECK(j.at("rotations_permute_colors") == true);
        CHECK(j.at("reflection_permutes_colors") == false);
    }
    SECTION("incompatible ideal") {
        const json j = build_check_report(adm, g(3, 0));
        CHECK(j.at("compatible") == false);
        CHECK_FALSE(j.contains("colors"));
    }
    SECTION("non-ideal sublattice") {
        const json j = build_check_report(adm, Sublattice(g(5, 5), g(0, 1)));
        CHECK(j.at("compatible") == true);  // alpha = -5+5i is in the span
        CHECK(j.at("ideal") == false);
        CHECK(j.at("note").get<std::string>().find("empirically") !=
              std::string::npos);
    }
}

TEST_CASE("verify report flags disagreements with witnesses on demand") {
    // restrict to an incompatible ideal: algebra and oracle must both say
    // "incompatible", so they agree and the report carries the witness
    const Admissible adm = check_admissible(Tiling::square44, g(-5, 5));
    const json report = build_verify_report(adm, false, g(3, 0));
    bool found = false;
    for (const auto& c : report.at("checks"))
        if (c.at("name") == "compatibility[3]") {
            found = true;
            CHECK(c.at("algebraic") == false);
            CHECK(c.at("oracle") == false);
            CHECK(c.at("agree") == true);
            CHECK(c.contains("witness"));
        }
    CHECK(found);
    CHECK(report.at("agree") == true);
}
