#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "singtile/lattice.hpp"
#include "singtile/tiling.hpp"

// Brute-force oracles over finite patches of the center set. Every verdict
// the algebraic layer produces (compatibility, symmetry order, reflection,
// color permutations, curve counts) is re-derived here by exhaustive exact
// computation, with no floating point and no shared reasoning: two points
// have the same image under the map iff they differ by an integer multiple
// of alpha, and everything reduces to that.

namespace singtile {

/// Finite truncation of the center set P: all points with norm <= radius_sq.
struct Patch {
    Tiling kind = Tiling::square44;
    Int radius_sq = 0;
    std::vector<QuadInt> points;
};

inline Patch make_patch(Tiling kind, Int radius_sq) {
    Patch patch{kind, radius_sq, {}};
    const Ring r = ring_of(kind);
    Int bound = 0;
    // coefficient box: |a|,|b| <= sqrt(2*radius_sq) covers both norm forms
    while (bound * bound < 2 * radius_sq) ++bound;
    for (Int a = -bound; a <= bound; ++a)
        for (Int b = -bound; b <= bound; ++b) {
            const QuadInt z{a, b, r};
            if (norm(z) <= radius_sq && in_center_set(kind, z))
                patch.points.push_back(z);
        }
    return patch;
}

/// Default oracle patch: radius 3|alpha|, so every coset of every divisor
/// ideal is populated many times over.
inline Patch default_patch(const Admissible& adm) {
    return make_patch(adm.kind, 9 * norm(adm.alpha));
}

/// Canonical representative of z modulo the cyclic group Z*alpha: the
/// coordinate of z along alpha is c1 = Re(z conj(alpha))/norm(alpha), and
/// rep = z - floor(c1)*alpha has c1 in [0,1). Two points share a rep iff
/// they have the same image under the conformal map.
struct QPoint {
    QuadInt rep;
    Int multiple = 0;  // the subtracted k
};

inline QPoint canonical_mod_alpha(const QuadInt& z, const QuadInt& alpha) {
    require_same_ring(z, alpha);
    if (alpha.is_zero()) throw std::domain_error("alpha must be nonzero");
    const Int num2 = two_re(z * conj(alpha));   // 2*Re(z conj alpha)
    const Int den2 = 2 * norm(alpha);
    const Int k = detail::floordiv(num2, den2);
    return {z - k * alpha, k};
}

struct OracleVerdict {
    bool ok = true;
    std::optional<std::pair<QuadInt, QuadInt>> witness;  // first conflicting pair
};

/// Compatibility oracle: every pair of patch points with the same image
/// must receive the same color.
template <class ColorFn>
OracleVerdict verify_compatibility_fn(const ColorFn& color_of, const QuadInt& alpha,
                                      const Patch& patch) {
    std::map<QuadInt, std::pair<QuadInt, int>> first_seen;  // rep -> (point, color)
    for (const QuadInt& z : patch.points) {
        const auto c = color_of(z);
        if (!c) continue;
        const QuadInt rep = canonical_mod_alpha(z, alpha).rep;
        auto [it, fresh] = first_seen.emplace(rep, std::make_pair(z, *c));
        if (!fresh && it->second.second != *c)
            return {false, std::make_pair(it->second.first, z)};
    }
    return {};
}

inline OracleVerdict verify_compatibility(const CosetColoring& coloring,
                                          const QuadInt& alpha, const Patch& patch) {
    return verify_compatibility_fn(
        [&](const QuadInt& z) { return coloring.color_of(z); }, alpha, patch);
}

namespace detail {

/// Does translation by alpha/den map the patch points into image classes of
/// P? Exact: z + alpha/den must be a ring point (den | coordinates of
/// den*z + alpha) that stays in the center set.
inline bool translation_preserves_images(const Admissible& adm, const Patch& patch,
                                         Int den) {
    for (const QuadInt& z : patch.points) {
        const QuadInt w = den * z + adm.alpha;
        if (w.a % den != 0 || w.b % den != 0) return false;
        const QuadInt q{w.a / den, w.b / den, w.ring};
        if (!in_center_set(adm.kind, q)) return false;
    }
    return true;
}

}  // namespace detail

/// Largest order n' <= limit such that rotation by 2pi/n' maps image points
/// of P to image points of P; its pullback is translation by alpha/n'.
inline Int verify_symmetry_order(const Admissible& adm, const Patch& patch,
                                 Int limit = 0) {
    if (limit <= 0) limit = std::max<Int>(norm(adm.alpha), 2 * adm.n);
    Int best = 1;
    for (Int cand = 2; cand <= limit; ++cand)
        if (detail::translation_preserves_images(adm, patch, cand)) best = cand;
    return best;
}

/// Reflection oracle for g2(v) = conj(v) on the image: conj of the image of
/// z is itself an image of P iff conj(alpha) | conj(z)*alpha with quotient
/// congruent to a center point. Must pass iff alpha is balanced.
inline OracleVerdict verify_reflection(const Admissible& adm, const Patch& patch) {
    for (const QuadInt& z : patch.points) {
        const auto q = divides(conj(adm.alpha), -(conj(z) * adm.alpha));
        if (!q || !in_center_set(adm.kind, *q))
            return {false, std::make_pair(z, z)};
    }
    return {};
}

/// Result of pushing one flat symmetry through a coloring on a patch:
/// either the induced permutation of color ids or the first conflict.
struct PermutationResult {
    bool is_permutation = false;
    std::vector<int> mapping;  // color id -> color id, when is_permutation
    std::optional<std::pair<QuadInt, QuadInt>> counterexample;
};

inline PermutationResult verify_color_permutation(const FlatSymmetry& f,
                                                  const CosetColoring& coloring,
                                                  const Patch& patch) {
    std::map<int, int> action;
    std::map<int, QuadInt> first_point;
    for (const QuadInt& z : patch.points) {
        const auto from = coloring.color_of(z);
        if (!from) continue;
        const auto to = coloring.color_of(f.apply(z));
        if (!to) return {false, {}, std::make_pair(z, z)};
        auto [it, fresh] = action.emplace(*from, *to);
        if (fresh) {
            first_point[*from] = z;
        } else if (it->second != *to) {
            return {false, {}, std::make_pair(first_point[*from], z)};
        }
    }
    // single-valued; bijectivity on the seen color set
    std::set<int> image;
    for (auto [from, to] : action) image.insert(to);
    if (image.size() != action.size()) return {false, {}, std::nullopt};
    PermutationResult res;
    res.is_permutation = true;
    res.mapping.assign(coloring.color_count(), -1);
    for (auto [from, to] : action) res.mapping[from] = to;
    return res;
}

/// Number of distinct image curves of one parallel line class, measured by
/// union-find over a window of lines: lines j and j' have the same image
/// iff (j'-j) * cross(d, tau) = k * cross(d, alpha) for an integer k.
/// Returns nullopt when the class maps to circles (infinitely many).
inline std::optional<Int> verify_census_count(const Admissible& adm, int class_index) {
    const auto classes = detail::line_classes(adm.kind);
    const auto& [d, two_tau] = classes.at(static_cast<size_t>(class_index));
    const Int cr_alpha = 2 * detail::cross_coeff(d, adm.alpha);
    const Int cr_tau = detail::cross_coeff(d, two_tau);
    if (cr_alpha == 0) return std::nullopt;  // every line its own circle

    const Int window = 3 * (cr_alpha < 0 ? -cr_alpha : cr_alpha) / (cr_tau < 0 ? -cr_tau : cr_tau) + 3;
    std::vector<Int> parent(static_cast<size_t>(window));
    for (Int j = 0; j < window; ++j) parent[static_cast<size_t>(j)] = j;
    std::function<Int(Int)> find = [&](Int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    for (Int j = 0; j < window; ++j)
        for (Int j2 = j + 1; j2 < window; ++j2)
            if (((j2 - j) * cr_tau) % cr_alpha == 0)
                parent[static_cast<size_t>(find(j2))] = find(j);
    std::set<Int> roots;
    for (Int j = 0; j < window; ++j) roots.insert(find(j));
    return static_cast<Int>(roots.size());
}

}  // namespace singtile
