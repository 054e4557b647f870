#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "singtile/render.hpp"
#include "singtile/tiling.hpp"
#include "singtile/verify.hpp"

// Machine-readable reports (schema v1) and their text renderings. Field
// names are stable; consumers validate against schema/report-v1.schema.json.

namespace singtile {

using nlohmann::json;

inline json symmetry_json(const Admissible& adm) {
    const Symmetry sym = symmetry_group(adm);
    json j{{"type", sym.dihedral ? "D" : "C"}, {"n", sym.n}};
    j["f1"] = to_string(sym.f1_shift);
    if (sym.f2_unit) j["f2"] = to_string(*sym.f2_unit);
    return j;
}

inline json census_json(const Admissible& adm) {
    json arr = json::array();
    for (const CurveFamily& fam : curve_census(adm)) {
        json f{{"direction", to_string(fam.direction)},
               {"type", curve_type_name(fam.type)}};
        if (fam.type == CurveType::circle)
            f["count"] = nullptr;
        else
            f["count"] = fam.count;
        if (fam.type == CurveType::spiral) f["orientation"] = fam.orientation;
        arr.push_back(f);
    }
    return arr;
}

inline json ideals_json(const Admissible& adm) {
    json arr = json::array();
    for (const CosetColoring& c : compatible_ideal_report(adm).colorings)
        arr.push_back(json{{"generator", to_string(*c.generator())},
                           {"colors", c.color_count()},
                           {"perfect", perfectness_name(*c.perfectness())}});
    return arr;
}

/// The full v1 report for one admissible parameter.
inline json build_report(const Admissible& adm) {
    json j;
    j["alpha"] = to_string(adm.alpha);
    j["kind"] = tiling_name(adm.kind);
    j["L"] = adm.L;
    j["R"] = adm.R;
    j["n"] = adm.n;
    j["balanced"] = adm.balanced;
    j["class"] = static_cast<int>(adm.cls);
    j["symmetry"] = symmetry_json(adm);
    j["census"] = census_json(adm);
    j["ideals"] = ideals_json(adm);
    j["max_colors"] = adm.kind == Tiling::tri36 ? 2 * norm(adm.alpha) / 3
                                                : norm(adm.alpha);
    return j;
}

/// Verdict report for one candidate coloring against alpha.
inline json build_check_report(const Admissible& adm, const QuadInt& beta) {
    json j;
    j["alpha"] = to_string(adm.alpha);
    j["kind"] = tiling_name(adm.kind);
    j["ideal"] = to_string(beta);
    const bool comp = compatible(beta, adm);
    j["compatible"] = comp;
    if (comp) {
        const CosetColoring coloring = build_ideal_coloring(beta, adm.kind);
        j["colors"] = coloring.color_count();
        j["perfect"] = perfectness_name(*coloring.perfectness());
        j["rotations_permute_colors"] = true;
        if (adm.balanced)
            j["reflection_permutes_colors"] = is_balanced(beta);
    }
    return j;
}

inline json build_check_report(const Admissible& adm, const Sublattice& gamma) {
    json j;
    j["alpha"] = to_string(adm.alpha);
    j["kind"] = tiling_name(adm.kind);
    j["sublattice"] = json{{"v1", to_string(gamma.basis1())},
                           {"v2", to_string(gamma.basis2())},
                           {"index", gamma.index()}};
    j["compatible"] = compatible(gamma, adm);
    j["ideal"] = gamma.is_ideal();
    if (gamma.is_ideal())
        j["note"] = "ideal sublattice: rotations permute colors when compatible";
    else
        j["note"] = "not an ideal: verify color symmetries empirically";
    return j;
}

namespace detail {

inline std::string witness_string(const std::pair<QuadInt, QuadInt>& w) {
    return to_string(w.first) + " / " + to_string(w.second);
}

}  // namespace detail

/// Oracle conformance report: each check pairs the algebraic verdict with
/// the brute-force one and records agreement (plus a witness on conflicts).
inline json build_verify_report(const Admissible& adm, bool sweep_divisors,
                                const std::optional<QuadInt>& only_beta = std::nullopt) {
    const Patch patch = default_patch(adm);
    json checks = json::array();
    auto add_check = [&](const std::string& name, json algebraic, json oracle,
                         std::optional<std::string> witness = std::nullopt) {
        json c{{"name", name}, {"algebraic", algebraic}, {"oracle", oracle}};
        c["agree"] = algebraic == oracle;
        if (witness) c["witness"] = *witness;
        checks.push_back(c);
    };

    add_check("symmetry_order", adm.n, verify_symmetry_order(adm, patch));
    {
        const auto refl = verify_reflection(adm, patch);
        add_check("reflection", adm.balanced, refl.ok,
                  refl.witness ? std::optional(detail::witness_string(*refl.witness))
                               : std::nullopt);
    }
    {
        const auto census = curve_census(adm);
        for (int ci = 0; ci < static_cast<int>(census.size()); ++ci) {
            const auto measured = verify_census_count(adm, ci);
            json algebraic =
                census[ci].type == CurveType::circle ? json() : json(census[ci].count);
            json oracle = measured ? json(*measured) : json();
            add_check("census[" + to_string(census[ci].direction) + "]", algebraic,
                      oracle);
        }
    }

    std::vector<QuadInt> betas;
    if (only_beta) {
        betas.push_back(*only_beta);
    } else if (sweep_divisors) {
        betas = divisors_up_to_associates(adm.alpha);
    }
    const Symmetry sym = symmetry_group(adm);
    for (const QuadInt& beta : betas) {
        const std::string tag = "[" + to_string(beta) + "]";
        const bool comp_alg = compatible(beta, adm);
        const CosetColoring coloring = build_ideal_coloring(beta, adm.kind);
        const auto comp_oracle = verify_compatibility(coloring, adm.alpha, patch);
        add_check("compatibility" + tag, comp_alg, comp_oracle.ok,
                  comp_oracle.witness
                      ? std::optional(detail::witness_string(*comp_oracle.witness))
                      : std::nullopt);
        if (!comp_alg || !comp_oracle.ok) continue;
        const auto rot = verify_color_permutation(sym.f1(1), coloring, patch);
        add_check("rotation_permutes" + tag,
                  color_symmetry_transfer(false, 1, coloring, adm).is_color_symmetry,
                  rot.is_permutation,
                  rot.counterexample
                      ? std::optional(detail::witness_string(*rot.counterexample))
                      : std::nullopt);
        if (adm.balanced) {
            const auto refl = verify_color_permutation(sym.f2(), coloring, patch);
            add_check("reflection_permutes" + tag,
                      color_symmetry_transfer(true, 0, coloring, adm).is_color_symmetry,
                      refl.is_permutation,
                      refl.counterexample
                          ? std::optional(detail::witness_string(*refl.counterexample))
                          : std::nullopt);
        }
    }

    bool all = true;
    for (const auto& c : checks) all = all && c.at("agree").get<bool>();
    return json{{"alpha", to_string(adm.alpha)},
                {"kind", tiling_name(adm.kind)},
                {"checks", checks},
                {"agree", all}};
}

// ---------------------------------------------------------------------------
// Text rendering: same facts as the JSON, for terminals.

inline std::string report_text(const json& j) {
    std::ostringstream out;
    out << "alpha = " << j.at("alpha").get<std::string>() << "  on ("
        << j.at("kind").get<std::string>() << ")\n";
    out << "(L, R) = (" << j.at("L") << ", " << j.at("R") << ")   n = " << j.at("n")
        << "   balanced = " << (j.at("balanced").get<bool>() ? "yes" : "no")
        << "   class " << j.at("class") << "\n";
    const auto& sym = j.at("symmetry");
    out << "symmetry " << sym.at("type").get<std::string>() << sym.at("n").get<Int>()
        << "   f1(z) = z + (" << sym.at("f1").get<std::string>() << ")";
    if (sym.contains("f2"))
        out << "   f2(z) = (" << sym.at("f2").get<std::string>() << ") conj(z)";
    out << "\n";
    out << "boundary curves:\n";
    for (const auto& f : j.at("census")) {
        out << "  direction " << f.at("direction").get<std::string>() << ": ";
        const std::string type = f.at("type").get<std::string>();
        if (f.at("count").is_null())
            out << "circles (infinitely many)";
        else
            out << f.at("count") << " " << type
                << (f.at("count") == 1 ? "" : "s");
        if (f.contains("orientation"))
            out << (f.at("orientation").get<int>() > 0 ? " (positive)" : " (negative)");
        out << "\n";
    }
    out << "compatible ideal colorings (max " << j.at("max_colors") << " colors):\n";
    for (const auto& c : j.at("ideals"))
        out << "  (" << c.at("generator").get<std::string>() << "): "
            << c.at("colors") << (c.at("colors") == 1 ? " color, " : " colors, ")
            << (c.at("perfect") == "full" ? "fully perfect" : "chirally perfect")
            << "\n";
    return out.str();
}

inline std::string verify_text(const json& j) {
    std::ostringstream out;
    out << "oracle conformance for alpha = " << j.at("alpha").get<std::string>()
        << " on (" << j.at("kind").get<std::string>() << ")\n";
    for (const auto& c : j.at("checks")) {
        out << "  " << (c.at("agree").get<bool>() ? "agree " : "CONFLICT ")
            << c.at("name").get<std::string>() << ": algebraic=" << c.at("algebraic")
            << " oracle=" << c.at("oracle");
        if (c.contains("witness"))
            out << "  witness: " << c.at("witness").get<std::string>();
        out << "\n";
    }
    out << (j.at("agree").get<bool>() ? "all checks agree" : "DISAGREEMENT FOUND")
        << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Minimal JSON-Schema checker covering the subset used by the shipped
// schemas: type, enum, required, properties, items.

inline bool matches_schema(const json& value, const json& schema, std::string* why);

namespace detail {

inline bool type_matches(const json& value, const std::string& t) {
    if (t == "object") return value.is_object();
    if (t == "array") return value.is_array();
    if (t == "string") return value.is_string();
    if (t == "integer") return value.is_number_integer();
    if (t == "number") return value.is_number();
    if (t == "boolean") return value.is_boolean();
    if (t == "null") return value.is_null();
    return false;
}

}  // namespace detail

inline bool matches_schema(const json& value, const json& schema, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (schema.contains("type")) {
        const auto& t = schema.at("type");
        bool ok = false;
        if (t.is_array()) {
            for (const auto& alt : t)
                ok = ok || detail::type_matches(value, alt.get<std::string>());
        } else {
            ok = detail::type_matches(value, t.get<std::string>());
        }
        if (!ok) return fail("type mismatch at " + value.dump());
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema.at("enum")) ok = ok || (alt == value);
        if (!ok) return fail("enum mismatch at " + value.dump());
    }
    if (schema.contains("required"))
        for (const auto& key : schema.at("required"))
            if (!value.contains(key.get<std::string>()))
                return fail("missing required field " + key.get<std::string>());
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema.at("properties").items())
            if (value.contains(key) && !matches_schema(value.at(key), sub, why))
                return false;
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!matches_schema(item, schema.at("items"), why)) return false;
    return true;
}

}  // namespace singtile
