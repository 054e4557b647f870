#pragma once

#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "singtile/lattice.hpp"
#include "singtile/ring.hpp"

// The singular tilings themselves: admissibility of the conformal parameter
// alpha, its determining integers (L, R), the three tile-boundary classes,
// the symmetry group C_n / D_n with its corresponding flat symmetries, and
// the colorings that survive the conformal map.
//
// Everything here is exact integer arithmetic; the geometry only enters
// through the signs and vanishing of bilinear forms on ring elements.

namespace singtile {

struct InadmissibleAlpha : std::domain_error {
    using std::domain_error::domain_error;
};

/// Squared upper bound for the diameter of a tile boundary, as an exact
/// fraction: 2, 4/3, 3 for squares, hexagons, triangles.
inline std::pair<Int, Int> diameter_sq_bound(Tiling t) {
    switch (t) {
        case Tiling::square44: return {2, 1};
        case Tiling::hex63: return {4, 3};
        default: return {3, 1};
    }
}

/// Generators of the symmetry group of the flat tiling: h1 rotation
/// (multiplication by a unit), h2 conjugation, h3/h4 translations.
struct FlatGroup {
    QuadInt rotation;      // h1: z -> rotation * z
    QuadInt translation1;  // h3: z -> z + translation1
    QuadInt translation2;  // h4: z -> z + translation2
};

inline FlatGroup flat_group(Tiling t) {
    switch (t) {
        case Tiling::square44:
            return {{0, 1, Ring::gauss}, {1, 0, Ring::gauss}, {0, 1, Ring::gauss}};
        case Tiling::hex63:
            return {{1, 1, Ring::eisenstein},
                    {1, 0, Ring::eisenstein},
                    {0, 1, Ring::eisenstein}};
        default:
            return {{1, 1, Ring::eisenstein},
                    {2, 1, Ring::eisenstein},
                    {1, -1, Ring::eisenstein}};
    }
}

/// Membership in Lambda, the translation orbit of the origin: the whole
/// ring for squares and hexagons, the vertex ideal (2+w) for triangles.
inline bool in_lambda(Tiling t, const QuadInt& alpha) {
    if (alpha.ring != ring_of(t)) return false;
    if (t == Tiling::tri36) return tri_coset(alpha) == 0;
    return true;
}

/// The unique integers (L, R) determining alpha: alpha = L+Ri, L+Rw, or
/// (L+Rw)(2+w) by tiling.
inline std::pair<Int, Int> determine_LR(Tiling t, const QuadInt& alpha) {
    if (alpha.ring != ring_of(t))
        throw RingMismatchError(std::string("alpha must lie in ") +
                                ring_name(ring_of(t)));
    if (t == Tiling::tri36) {
        const auto q = divides(tri_vertex_ideal_gen(), alpha);
        if (!q) throw InadmissibleAlpha("alpha is not in Lambda = (2+w)");
        return {q->a, q->b};
    }
    return {alpha.a, alpha.b};
}

enum class TilingClass { one = 1, two = 2, three = 3 };

/// Unit and positive integer with alpha = unit * scale (class 3) or
/// alpha = unit * scale * (1 - xi) (class 2).
struct CanonicalForm {
    QuadInt unit;
    Int scale;
};

struct Admissible {
    QuadInt alpha;
    Tiling kind = Tiling::square44;
    Int L = 0, R = 0;
    Int n = 1;  // gcd(|L|, |R|)
    bool balanced = false;
    TilingClass cls = TilingClass::one;
    std::optional<CanonicalForm> form;  // classes 2 and 3 only
};

namespace detail {

inline Int isqrt(Int n) {
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline CanonicalForm canonical_form(const QuadInt& alpha, TilingClass cls) {
    const Ring r = alpha.ring;
    const Int ram_norm = r == Ring::gauss ? 2 : 3;
    Int scale_sq = norm(alpha);
    QuadInt base = one(r);
    if (cls == TilingClass::two) {
        scale_sq /= ram_norm;
        base = QuadInt{1, -1, r};  // 1 - xi
    }
    const Int scale = isqrt(scale_sq);
    const auto unit = divides(scale * base, alpha);
    if (!unit || !is_unit(*unit))
        throw std::logic_error("canonical form does not divide alpha");
    return {*unit, scale};
}

}  // namespace detail

/// Class 1 <=> alpha not balanced. Among balanced alpha the parity of the
/// ramified-prime exponent decides: even <=> associate of a rational
/// integer (class 3), odd <=> class 2.
inline TilingClass classify_element(const QuadInt& alpha) {
    if (!is_balanced(alpha)) return TilingClass::one;
    const QuadInt ram = alpha.ring == Ring::gauss ? QuadInt{1, 1, alpha.ring}
                                                  : QuadInt{2, 1, alpha.ring};
    int ram_exp = 0;
    for (const auto& [p, e] : factorize(alpha).factors)
        if (p == ram) ram_exp = e;
    return ram_exp % 2 == 0 ? TilingClass::three : TilingClass::two;
}

/// Validates alpha for the tiling: Lambda membership and the strict norm
/// bound, then fills in every derived descriptor.
inline Admissible check_admissible(Tiling kind, const QuadInt& alpha) {
    if (alpha.ring != ring_of(kind))
        throw RingMismatchError(std::string("alpha for (") + tiling_name(kind) +
                                ") must lie in " + ring_name(ring_of(kind)));
    if (!in_lambda(kind, alpha))
        throw InadmissibleAlpha("inadmissible alpha: not in Lambda = (2+w)");
    const auto [num, den] = diameter_sq_bound(kind);
    if (norm(alpha) * den <= num)
        throw InadmissibleAlpha("inadmissible alpha: requires |alpha|^2 > " +
                                std::to_string(num) +
                                (den == 1 ? "" : "/" + std::to_string(den)) +
                                ", got |alpha|^2 = " + std::to_string(norm(alpha)));

    Admissible adm;
    adm.alpha = alpha;
    adm.kind = kind;
    std::tie(adm.L, adm.R) = determine_LR(kind, alpha);
    adm.n = static_cast<Int>(std::gcd(adm.L, adm.R));
    adm.balanced = is_balanced(alpha);
    adm.cls = classify_element(alpha);
    if (adm.cls != TilingClass::one)
        adm.form = detail::canonical_form(alpha, adm.cls);
    return adm;
}

// ---------------------------------------------------------------------------
// Symmetry group of the singular tiling.

/// Flat symmetry z -> mult * (z or conj z) + shift; corresponds to a
/// symmetry of the singular tiling through the conformal map.
struct FlatSymmetry {
    QuadInt mult;
    bool conjugate = false;
    QuadInt shift;

    QuadInt apply(const QuadInt& z) const {
        return mult * (conjugate ? conj(z) : z) + shift;
    }
};

/// C_n or D_n acting on the singular tiling. g1 is rotation by 2pi/n about
/// the origin and corresponds to the flat translation f1(z) = z + alpha/n;
/// when alpha is balanced the reflection g2(z) = conj(z) is a symmetry too
/// and corresponds to f2(z) = eps * conj(z) with eps = -alpha/conj(alpha).
struct Symmetry {
    Int n = 1;
    bool dihedral = false;
    QuadInt f1_shift;                 // alpha / n
    std::optional<QuadInt> f2_unit;   // eps, present iff dihedral

    FlatSymmetry f1(Int power = 1) const {
        const Int k = ((power % n) + n) % n;
        return {one(f1_shift.ring), false, k * f1_shift};
    }
    FlatSymmetry f2(Int rotation_power = 0) const {
        if (!f2_unit) throw std::domain_error("no reflection: alpha is not balanced");
        const Int k = ((rotation_power % n) + n) % n;
        return {*f2_unit, true, static_cast<Int>(k) * f1_shift};
    }
};

inline Symmetry symmetry_group(const Admissible& adm) {
    Symmetry sym;
    sym.n = adm.n;
    sym.dihedral = adm.balanced;
    const auto shift = divides(QuadInt{adm.n, 0, adm.alpha.ring}, adm.alpha);
    if (!shift) throw std::logic_error("n = gcd(L,R) must divide alpha");
    sym.f1_shift = *shift;
    if (adm.balanced) {
        // conj(alpha) = u * alpha for a unit u; eps = -alpha/conj(alpha)
        const auto u = divides(conj(adm.alpha), adm.alpha);
        if (!u || !is_unit(*u)) throw std::logic_error("balanced alpha without unit ratio");
        sym.f2_unit = -*u;
    }
    return sym;
}

// ---------------------------------------------------------------------------
// Curve census: what the tile-boundary lines become under the map.

enum class CurveType { spiral, circle, ray };

inline const char* curve_type_name(CurveType t) {
    switch (t) {
        case CurveType::spiral: return "spiral";
        case CurveType::circle: return "circle";
        default: return "ray";
    }
}

/// One equivalence class of parallel boundary lines and its image family:
/// finitely many spirals or rays, or infinitely many circles (count 0).
struct CurveFamily {
    QuadInt direction;   // direction of the flat lines
    CurveType type = CurveType::spiral;
    Int count = 0;       // 0 means countably infinite (circles)
    int orientation = 0; // sign(v/u) for spirals; 0 otherwise
};

using CurveCensus = std::vector<CurveFamily>;

namespace detail {

/// Per tiling: the parallel classes of boundary lines, as (direction d,
/// doubled transverse step 2*tau). tau is the offset between consecutive
/// lines of the class; it is a half lattice vector for the hexagon tiling,
/// so 2*tau is what stays in the ring.
inline std::vector<std::pair<QuadInt, QuadInt>> line_classes(Tiling t) {
    switch (t) {
        case Tiling::square44:
            return {{{1, 0, Ring::gauss}, {0, 2, Ring::gauss}},
                    {{0, 1, Ring::gauss}, {2, 0, Ring::gauss}}};
        case Tiling::hex63:
            // edge directions are the norm-3 rotations of sqrt(-3); lines
            // step by half a center spacing
            return {{{1, 2, Ring::eisenstein}, {1, 0, Ring::eisenstein}},
                    {{-2, -1, Ring::eisenstein}, {0, 1, Ring::eisenstein}},
                    {{1, -1, Ring::eisenstein}, {1, 1, Ring::eisenstein}}};
        default:
            // triangle edges lie on full lines through the vertex lattice
            return {{{2, 1, Ring::eisenstein}, {-2, 2, Ring::eisenstein}},
                    {{-1, 1, Ring::eisenstein}, {4, 2, Ring::eisenstein}},
                    {{-1, -2, Ring::eisenstein}, {4, 2, Ring::eisenstein}}};
    }
}

/// Imaginary coefficient of conj(d) * z (exact; the sqrt(3)/2 scale of the
/// Eisenstein case cancels in every ratio we take).
inline Int cross_coeff(const QuadInt& d, const QuadInt& z) {
    return im_coeff(conj(d) * z);
}

}  // namespace detail

/// Image type of one parallel line class under the map, from the exact
/// bilinear data: with e = conj(d)*alpha, the class maps to circles iff
/// Im(e) = 0, rays iff Re(e) = 0, else spirals winding with sign(Re*Im).
inline CurveFamily classify_line_family(const QuadInt& d, const QuadInt& alpha) {
    if (d.is_zero()) throw std::domain_error("zero direction");
    require_same_ring(d, alpha);
    const QuadInt e = conj(d) * alpha;
    const Int re2 = two_re(e);
    const Int im = im_coeff(e);
    CurveFamily fam;
    fam.direction = d;
    if (im == 0) {
        fam.type = CurveType::circle;
    } else if (re2 == 0) {
        fam.type = CurveType::ray;
    } else {
        fam.type = CurveType::spiral;
        fam.orientation = ((re2 > 0) == (im > 0)) ? 1 : -1;
    }
    return fam;
}

/// Exact census of boundary-curve families. The number of distinct image
/// curves in a class equals the transverse shift of alpha in units of the
/// line spacing; circles arise exactly when that shift vanishes.
inline CurveCensus curve_census(const Admissible& adm) {
    CurveCensus census;
    for (const auto& [d, two_tau] : detail::line_classes(adm.kind)) {
        CurveFamily fam = classify_line_family(d, adm.alpha);
        const Int num = 2 * detail::cross_coeff(d, adm.alpha);
        const Int den = detail::cross_coeff(d, two_tau);
        if (num % den != 0) throw std::logic_error("line shift is not integral");
        const Int shift = num / den;
        fam.count = shift < 0 ? -shift : shift;
        census.push_back(fam);
    }
    return census;
}

/// Associates induce identical singular tilings; all derived descriptors
/// must then agree, which this check enforces rather than assumes.
inline bool associate_invariance(const QuadInt& a1, const QuadInt& a2, Tiling kind) {
    if (!is_associate(a1, a2)) return false;
    const Admissible x = check_admissible(kind, a1);
    const Admissible y = check_admissible(kind, a2);
    auto counts = [](const Admissible& a) {
        std::vector<std::pair<CurveType, Int>> v;
        for (const auto& f : curve_census(a)) v.push_back({f.type, f.count});
        std::sort(v.begin(), v.end());
        return v;
    };
    if (x.cls != y.cls || x.n != y.n || x.balanced != y.balanced ||
        counts(x) != counts(y))
        throw std::logic_error("associate parameters disagree on descriptors");
    return true;
}

// ---------------------------------------------------------------------------
// Colorings pushed through the map.

/// A coloring of the centers survives the conformal identification iff its
/// sublattice contains alpha; for an ideal (beta) that is beta | alpha.
inline bool compatible(const QuadInt& beta, const Admissible& adm) {
    require_same_ring(beta, adm.alpha);
    if (beta.is_zero()) throw std::domain_error("zero ideal generator");
    return divides(beta, adm.alpha).has_value();
}

inline bool compatible(const Sublattice& gamma, const Admissible& adm) {
    return gamma.contains(adm.alpha);
}

/// Compatible ideal colorings are exactly those induced by divisors of
/// alpha; the color count is bounded by M = norm(alpha), resp.
/// (2/3)norm(alpha) on the triangle tiling.
struct IdealReport {
    std::vector<CosetColoring> colorings;  // one per divisor, by norm
    Int max_colors = 0;
};

inline IdealReport compatible_ideal_report(const Admissible& adm) {
    IdealReport report;
    for (const QuadInt& d : divisors_up_to_associates(adm.alpha))
        report.colorings.push_back(build_ideal_coloring(d, adm.kind));
    report.max_colors =
        adm.kind == Tiling::tri36 ? 2 * norm(adm.alpha) / 3 : norm(adm.alpha);
    return report;
}

/// Verdict for one symmetry of the singular tiling acting on the coloring
/// pushed through the map.
struct ColorSymmetryVerdict {
    bool is_color_symmetry = false;
    FlatSymmetry corresponding;  // the flat symmetry whose action realizes it
};

/// Rotations of the singular tiling permute the colors of every compatible
/// ideal coloring; the reflection (when present) does iff the generator is
/// balanced.
inline ColorSymmetryVerdict color_symmetry_transfer(bool reflected, Int rotation_power,
                                                    const CosetColoring& coloring,
                                                    const Admissible& adm) {
    if (!coloring.generator())
        throw std::domain_error("transfer verdicts require an ideal coloring");
    if (!compatible(*coloring.generator(), adm))
        throw std::domain_error("coloring is not compatible with alpha");
    const Symmetry sym = symmetry_group(adm);
    ColorSymmetryVerdict verdict;
    if (!reflected) {
        verdict.is_color_symmetry = true;
        verdict.corresponding = sym.f1(rotation_power);
    } else {
        if (!sym.dihedral)
            throw std::domain_error("no reflection: alpha is not balanced");
        verdict.is_color_symmetry = is_balanced(*coloring.generator());
        verdict.corresponding = sym.f2(rotation_power);
    }
    return verdict;
}

}  // namespace singtile
