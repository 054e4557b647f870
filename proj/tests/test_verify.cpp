#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "prop.hpp"
#include "singtile/verify.hpp"

using namespace singtile;

namespace {
QuadInt g(Int a, Int b) { return {a, b, Ring::gauss}; }
QuadInt e(Int a, Int b) { return {a, b, Ring::eisenstein}; }
}  // namespace

TEST_CASE("canonical representatives modulo Z*alpha") {
    const QuadInt alpha = g(4, 0);
    CHECK(canonical_mod_alpha(alpha, alpha).rep == g(0, 0));
    CHECK(canonical_mod_alpha(alpha, alpha).multiple == 1);
    // 0,1,2,3 have distinct representatives; 4 collapses onto 0
    std::set<QuadInt> reps;
    for (Int a = 0; a < 4; ++a) reps.insert(canonical_mod_alpha(g(a, 0), alpha).rep);
    CHECK(reps.size() == 4);
    CHECK(canonical_mod_alpha(g(4, 0), alpha).rep == canonical_mod_alpha(g(0, 0), alpha).rep);
    CHECK_THROWS_AS(canonical_mod_alpha(g(1, 0), g(0, 0)), std::domain_error);
}

TEST_CASE("property: fiber soundness of canonical representatives") {
    auto fail = proptest::run(1500, [](proptest::Gen& gen) -> std::string {
        const Ring r = gen.ring();
        const QuadInt alpha = gen.nonzero(r, 10);
        const QuadInt z = gen.element(r, 40);
        const Int k = gen.range(-7, 7);
        const auto p1 = canonical_mod_alpha(z, alpha);
        // idempotence
        if (canonical_mod_alpha(p1.rep, alpha).rep != p1.rep) return "not idempotent";
        // shifting by k*alpha never changes the representative
        if (canonical_mod_alpha(z + k * alpha, alpha).rep != p1.rep)
            return "rep changed under a fiber shift";
        // and equal representatives imply an exact integer multiple
        const QuadInt w = gen.element(r, 40);
        const auto p2 = canonical_mod_alpha(w, alpha);
        if (p1.rep == p2.rep) {
            const auto q = divides(alpha, w - z);
            if (!q || q->b != 0)
                return "equal reps but difference is not in Z*alpha";
            if (!(w - z == q->a * alpha)) return "difference not an integer multiple";
        }
        return {};
    });
    INFO(fail.message);
    CHECK_FALSE(fail.failed);
}

TEST_CASE("compatibility oracle vs algebra") {
    auto a44 = check_admissible(Tiling::square44, g(-5, 5));
    const Patch patch = default_patch(a44);

    SECTION("compatible ideal passes") {
        auto coloring = build_ideal_coloring(g(2, 1), Tiling::square44);
        CHECK(verify_compatibility(coloring, a44.alpha, patch).ok);
    }
    SECTION("incompatible ideal fails with a concrete witness") {
        auto coloring = build_ideal_coloring(g(3, 0), Tiling::square44);
        auto verdict = verify_compatibility(coloring, a44.alpha, patch);
        REQUIRE_FALSE(verdict.ok);
        REQUIRE(verdict.witness.has_value());
        const auto [z1, z2] = *verdict.witness;
        CHECK(canonical_mod_alpha(z1, a44.alpha).rep ==
              canonical_mod_alpha(z2, a44.alpha).rep);
        CHECK(coloring.color_of(z1) != coloring.color_of(z2));
    }
    SECTION("the ideal (alpha) itself always passes") {
        auto coloring = build_ideal_coloring(a44.alpha, Tiling::square44);
        CHECK(verify_compatibility(coloring, a44.alpha, patch).ok);
    }
}

TEST_CASE("symmetry order oracle") {
    SECTION("alpha=-5+5i measures 5, reflection passes") {
        auto adm = check_admissible(Tiling::square44, g(-5, 5));
        const Patch patch = default_patch(adm);
        CHECK(verify_symmetry_order(adm, patch) == 5);
        CHECK(verify_reflection(adm, patch).ok);
    }
    SECTION("alpha=4+6i measures 2, reflection fails") {
        auto adm = check_admissible(Tiling::square44, g(4, 6));
        const Patch patch = default_patch(adm);
        CHECK(verify_symmetry_order(adm, patch) == 2);
        CHECK_FALSE(verify_reflection(adm, patch).ok);
    }
    SECTION("alpha=6 on hexagons measures 6, reflection passes") {
        auto adm = check_admissible(Tiling::hex63, e(6, 0));
        const Patch patch = default_patch(adm);
        CHECK(verify_symmetry_order(adm, patch) == 6);
        CHECK(verify_reflection(adm, patch).ok);
    }
    SECTION("alpha=2+10w on triangles measures 2") {
        auto adm = check_admissible(Tiling::tri36, e(2, 10));
        const Patch patch = default_patch(adm);
        CHECK(verify_symmetry_order(adm, patch) == 2);
        CHECK_FALSE(verify_reflection(adm, patch).ok);
    }
    SECTION("triangle coset structure defeats inflated orders") {
        // alpha = 3+3w = (2+w)^2 has gcd(L,R) = 1 even though the raw
        // coordinates share the factor 3
        auto adm = check_admissible(Tiling::tri36, e(3, 3));
        CHECK(adm.n == 1);
        CHECK(verify_symmetry_order(adm, default_patch(adm)) == 1);
    }
}

TEST_CASE("color permutation oracle") {
    auto adm = check_admissible(Tiling::square44, g(-5, 5));
    const Patch patch = default_patch(adm);
    const Symmetry sym = symmetry_group(adm);
    auto chiral = build_ideal_coloring(g(2, 1), Tiling::square44);

    SECTION("the translation f1 induces a 5-cycle on the 5 colors") {
        auto res = verify_color_permutation(sym.f1(1), chiral, patch);
        REQUIRE(res.is_permutation);
        REQUIRE(res.mapping.size() == 5);
        // one orbit of length 5: following the mapping returns after 5 steps
        int c = 0;
        std::set<int> orbit;
        for (int k = 0; k < 5; ++k) {
            orbit.insert(c);
            c = res.mapping[static_cast<size_t>(c)];
        }
        CHECK(orbit.size() == 5);
        CHECK(c == 0);
    }
    SECTION("the reflection f2 is not a color symmetry of (2+i)") {
        auto res = verify_color_permutation(sym.f2(), chiral, patch);
        CHECK_FALSE(res.is_permutation);
        REQUIRE(res.counterexample.has_value());
        const auto [z1, z2] = *res.counterexample;
        CHECK(chiral.color_of(z1) == chiral.color_of(z2));
        const FlatSymmetry f2 = sym.f2();
        CHECK(chiral.color_of(f2.apply(z1)) != chiral.color_of(f2.apply(z2)));
    }
    SECTION("the reflection f2 is a color symmetry of (5)") {
        auto full = build_ideal_coloring(g(5, 0), Tiling::square44);
        CHECK(verify_color_permutation(sym.f2(), full, patch).is_permutation);
    }
    SECTION("the identity acts as the identity permutation") {
        auto res = verify_color_permutation(sym.f1(0), chiral, patch);
        REQUIRE(res.is_permutation);
        for (size_t i = 0; i < res.mapping.size(); ++i)
            CHECK(res.mapping[i] == static_cast<int>(i));
    }
}

TEST_CASE("census oracle") {
    SECTION("(4^4) alpha=4+6i: horizontal family 6, vertical 4") {
        auto adm = check_admissible(Tiling::square44, g(4, 6));
        CHECK(verify_census_count(adm, 0) == 6);
        CHECK(verify_census_count(adm, 1) == 4);
    }
    SECTION("(4^4) alpha=4: vertical rays 4, horizontal circles") {
        auto adm = check_admissible(Tiling::square44, g(4, 0));
        CHECK_FALSE(verify_census_count(adm, 0).has_value());
        CHECK(verify_census_count(adm, 1) == 4);
    }
    SECTION("oracle counts equal the algebraic census everywhere") {
        for (auto [kind, alpha] :
             {std::pair{Tiling::square44, g(-5, 5)}, {Tiling::square44, g(4, 6)},
              {Tiling::hex63, e(6, 0)}, {Tiling::hex63, e(10, 2)},
              {Tiling::tri36, e(2, 10)}, {Tiling::tri36, e(-5, 5)},
              {Tiling::tri36, e(3, 0)}}) {
            auto adm = check_admissible(kind, alpha);
            auto census = curve_census(adm);
            for (int ci = 0; ci < static_cast<int>(census.size()); ++ci) {
                auto measured = verify_census_count(adm, ci);
                INFO("alpha=" << to_string(alpha) << " class " << ci);
                if (census[ci].type == CurveType::circle) {
                    CHECK_FALSE(measured.has_value());
                } else {
                    REQUIRE(measured.has_value());
                    CHECK(*measured == census[ci].count);
                }
            }
        }
    }
}

TEST_CASE("permutation group closure on a patch") {
    auto adm = check_admissible(Tiling::square44, g(-5, 5));
    const Patch patch = default_patch(adm);
    const Symmetry sym = symmetry_group(adm);
    auto coloring = build_ideal_coloring(g(-5, 5), Tiling::square44);

    std::set<std::vector<int>> perms;
    for (Int k = 0; k < sym.n; ++k) {
        auto res = verify_color_permutation(sym.f1(k), coloring, patch);
        REQUIRE(res.is_permutation);
        perms.insert(res.mapping);
        auto ref = verify_color_permutation(sym.f2(k), coloring, patch);
        REQUIRE(ref.is_permutation);
        perms.insert(ref.mapping);
    }
    CHECK(perms.size() == static_cast<size_t>(2 * sym.n));
    for (const auto& p : perms)
        for (const auto& q : perms) {
            std::vector<int> comp(p.size());
            for (size_t i = 0; i < p.size(); ++i)
                comp[i] = p[static_cast<size_t>(q[i])];
            CHECK(perms.count(comp) == 1);
        }
}

TEST_CASE("property: perfectness transfers between Z[w] and the triangle centers") {
    // the same sublattice, colored on the full lattice and restricted to P,
    // admits the 60-degree rotation (and the reflection) as a color symmetry
    // on one iff it does on the other
    const FlatSymmetry rot{{1, 1, Ring::eisenstein}, false, {0, 0, Ring::eisenstein}};
    const FlatSymmetry refl{{1, 0, Ring::eisenstein}, true, {0, 0, Ring::eisenstein}};
    auto fail = proptest::run(1000, [&](proptest::Gen& gen) -> std::string {
        const QuadInt v1 = gen.with_norm_at_most(Ring::eisenstein, 40);
        const QuadInt v2 = gen.with_norm_at_most(Ring::eisenstein, 40);
        if (v1.a * v2.b == v2.a * v1.b) return {};
        const Sublattice gamma(v1, v2);
        const CosetColoring full(gamma, Tiling::hex63);
        const CosetColoring restricted(gamma, Tiling::tri36);
        const Int r = 9 * gamma.index() * gamma.index() + 40;
        const Patch hex_patch = make_patch(Tiling::hex63, r);
        const Patch tri_patch = make_patch(Tiling::tri36, r);
        for (const auto& f : {rot, refl}) {
            const bool on_full =
                verify_color_permutation(f, full, hex_patch).is_permutation;
            const bool on_p =
                verify_color_permutation(f, restricted, tri_patch).is_permutation;
            if (on_full != on_p)
                return "transfer mismatch for v1=" + to_string(v1) +
                       " v2=" + to_string(v2);
        }
        return {};
    });
    INFO(fail.message);
    CHECK_FALSE(fail.failed);
}

TEST_CASE("property: oracle verdicts are stable under patch doubling") {
    auto fail = proptest::run(1000, [](proptest::Gen& gen) -> std::string {
        const Tiling kind = std::array{Tiling::square44, Tiling::hex63,
                                       Tiling::tri36}[gen.range(0, 2)];
        const Ring r = ring_of(kind);
        QuadInt alpha = gen.element(r, 4);
        if (kind == Tiling::tri36) alpha = alpha * tri_vertex_ideal_gen();
        Admissible adm;
        try {
            adm = check_admissible(kind, alpha);
        } catch (const InadmissibleAlpha&) {
            return {};
        }
        const Patch p1 = make_patch(kind, 9 * norm(alpha));
        const Patch p2 = make_patch(kind, 18 * norm(alpha));
        if (verify_symmetry_order(adm, p1) != verify_symmetry_order(adm, p2))
            return "symmetry order unstable for alpha=" + to_string(alpha);
        if (verify_reflection(adm, p1).ok != verify_reflection(adm, p2).ok)
            return "reflection verdict unstable";
        const QuadInt beta = gen.nonzero(r, 4);
        auto coloring = build_ideal_coloring(beta, kind);
        if (verify_compatibility(coloring, alpha, p1).ok !=
            verify_compatibility(coloring, alpha, p2).ok)
            return "compatibility verdict unstable";
        return {};
    });
    INFO(fail.message);
    CHECK_FALSE(fail.failed);
}
