#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "singtile/ring.hpp"

// Sublattices of Z[i] / Z[w] in Hermite normal form, and the coset colorings
// they induce on the center set of each regular tiling. For the triangle
// tiling the centers are not a lattice: P = Z[w] \ P0 with P0 the ideal
// (2+w) of vertices, and colorings of Z[w] restrict to P.

namespace singtile {

enum class Tiling { square44, hex63, tri36 };

inline Ring ring_of(Tiling t) {
    return t == Tiling::square44 ? Ring::gauss : Ring::eisenstein;
}

inline const char* tiling_name(Tiling t) {
    switch (t) {
        case Tiling::square44: return "44";
        case Tiling::hex63: return "63";
        default: return "36";
    }
}

inline std::optional<Tiling> tiling_from_name(const std::string& s) {
    if (s == "44") return Tiling::square44;
    if (s == "63") return Tiling::hex63;
    if (s == "36") return Tiling::tri36;
    return std::nullopt;
}

/// Vertex element of the triangle tiling: P0 = (2+w).
inline QuadInt tri_vertex_ideal_gen() { return {2, 1, Ring::eisenstein}; }

/// Coset of z in Z[w]/(2+w) = F3, encoded 0,1,2: P0 (vertices), P2 = 1+(2+w),
/// P1 = -1+(2+w). The residue map is a+bw -> a+b (mod 3).
inline int tri_coset(const QuadInt& z) {
    const Int r = ((z.a + z.b) % 3 + 3) % 3;
    return static_cast<int>(r);
}

/// True when z belongs to the center set P of the tiling.
inline bool in_center_set(Tiling t, const QuadInt& z) {
    if (t == Tiling::tri36) return tri_coset(z) != 0;
    return true;
}

namespace detail {

inline Int floordiv(Int p, Int q) {  // q > 0
    return p >= 0 ? p / q : -((-p + q - 1) / q);
}

}  // namespace detail

/// Finite-index sublattice of Z[xi], stored in Hermite normal form: basis
/// {(A,0), (B,C)} in (a,b)-coordinates with A > 0, C > 0, 0 <= B < A.
/// The form is unique, so equal sublattices compare equal structurally.
class Sublattice {
public:
    Sublattice(const QuadInt& v1, const QuadInt& v2) : ring_(v1.ring) {
        require_same_ring(v1, v2);
        const Int det = v1.a * v2.b - v2.a * v1.b;
        if (det == 0) throw std::domain_error("sublattice basis is degenerate");
        // Euclid on the b-components yields the (B, C) generator; the
        // complementary combination has b = 0.
        Int b1 = v1.b, b2 = v2.b;
        QuadInt w1 = v1, w2 = v2;
        while (b2 != 0) {
            const Int q = b1 / b2;  // truncation is fine inside Euclid
            QuadInt t = w1 - q * w2;
            w1 = w2;
            w2 = t;
            const Int tb = b1 - q * b2;
            b1 = b2;
            b2 = tb;
        }
        // now w1.b = gcd of b-components (maybe negative), w2.b = 0
        if (w1.b < 0) w1 = -w1;
        a_ = w2.a < 0 ? -w2.a : w2.a;
        c_ = w1.b;
        if (c_ == 0) throw std::domain_error("sublattice basis is degenerate");
        b_ = ((w1.a % a_) + a_) % a_;
    }

    static Sublattice from_ideal(const QuadInt& gen) {
        if (gen.is_zero()) throw std::domain_error("zero ideal generator");
        return Sublattice(gen, xi(gen.ring) * gen);
    }

    Ring ring() const { return ring_; }
    Int index() const { return a_ * c_; }

    QuadInt basis1() const { return {a_, 0, ring_}; }
    QuadInt basis2() const { return {b_, c_, ring_}; }

    bool contains(const QuadInt& z) const {
        if (z.ring != ring_) throw RingMismatchError("sublattice membership across rings");
        if (z.b % c_ != 0) return false;
        const Int t = z.b / c_;
        return (z.a - t * b_) % a_ == 0;
    }

    /// Canonical representative of z's coset: the unique congruent point
    /// with coordinates in [0,A) x [0,C).
    QuadInt reduce(const QuadInt& z) const {
        if (z.ring != ring_) throw RingMismatchError("sublattice reduction across rings");
        const Int t = detail::floordiv(z.b, c_);
        Int ra = z.a - t * b_;
        const Int s = detail::floordiv(ra, a_);
        ra -= s * a_;
        return {ra, z.b - t * c_, ring_};
    }

    /// All canonical coset representatives, sorted by (norm, a, b).
    std::vector<QuadInt> coset_representatives() const {
        std::vector<QuadInt> reps;
        reps.reserve(static_cast<size_t>(index()));
        for (Int x = 0; x < a_; ++x)
            for (Int y = 0; y < c_; ++y) reps.push_back({x, y, ring_});
        sort_by_norm(reps);
        return reps;
    }

    /// Ideal test: closed under multiplication by xi.
    bool is_ideal() const {
        return contains(xi(ring_) * basis1()) && contains(xi(ring_) * basis2());
    }

    friend bool operator==(const Sublattice& x, const Sublattice& y) {
        return x.ring_ == y.ring_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

private:
    Ring ring_;
    Int a_ = 1, b_ = 0, c_ = 1;  // basis {(A,0),(B,C)}
};

inline bool is_chirally_perfect_sublattice(const Sublattice& gamma) {
    return gamma.is_ideal();
}

enum class Perfectness { chirally_perfect, fully_perfect };

inline const char* perfectness_name(Perfectness p) {
    return p == Perfectness::fully_perfect ? "full" : "chiral";
}

/// Coloring of a tiling's center set by the cosets of a sublattice.
/// Ideal colorings carry their generator and a perfectness level
/// (Perfectness of the flat coloring; balanced generator <=> fully perfect).
/// Plain sublattice colorings get no label: only ideals guarantee that
/// rotations permute colors, so anything else is for empirical checking.
class CosetColoring {
public:
    CosetColoring(Sublattice gamma, Tiling kind)
        : gamma_(std::move(gamma)), kind_(kind) {
        if (gamma_.ring() != ring_of(kind))
            throw RingMismatchError("sublattice ring does not match the tiling");
        build_reps();
    }

    CosetColoring(const QuadInt& generator, Tiling kind)
        : CosetColoring(Sublattice::from_ideal(generator), kind) {
        generator_ = generator;
        perfectness_ = is_balanced(generator) ? Perfectness::fully_perfect
                                              : Perfectness::chirally_perfect;
    }

    Tiling kind() const { return kind_; }
    const Sublattice& sublattice() const { return gamma_; }
    const std::optional<QuadInt>& generator() const { return generator_; }
    std::optional<Perfectness> perfectness() const { return perfectness_; }
    Int color_count() const { return static_cast<Int>(reps_.size()); }
    const std::vector<QuadInt>& representatives() const { return reps_; }

    /// Color id of a center point; nullopt when z is not colored (a vertex
    /// class of the triangle tiling).
    std::optional<int> color_of(const QuadInt& z) const {
        const QuadInt r = gamma_.reduce(z);
        auto it = ids_.find(r);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

private:
    void build_reps() {
        reps_ = gamma_.coset_representatives();
        if (kind_ == Tiling::tri36) {
            // Cosets contained in the vertex set P0 never meet P; they are
            // dropped exactly when Gamma itself lies inside P0.
            if (sub_of_p0()) {
                std::vector<QuadInt> kept;
                for (const auto& r : reps_)
                    if (tri_coset(r) != 0) kept.push_back(r);
                reps_ = std::move(kept);
            }
        }
        for (size_t i = 0; i < reps_.size(); ++i) ids_[reps_[i]] = static_cast<int>(i);
    }

    bool sub_of_p0() const {
        return tri_coset(gamma_.basis1()) == 0 && tri_coset(gamma_.basis2()) == 0;
    }

    Sublattice gamma_;
    Tiling kind_;
    std::optional<QuadInt> generator_;
    std::optional<Perfectness> perfectness_;
    std::vector<QuadInt> reps_;
    std::map<QuadInt, int> ids_;
};

/// Ideal coloring of the tiling's center set. Color count is norm(beta),
/// except on the triangle tiling where cosets inside the vertex ideal are
/// discarded: (2/3)norm(beta) when (2+w) | beta.
inline CosetColoring build_ideal_coloring(const QuadInt& beta, Tiling kind) {
    return CosetColoring(beta, kind);
}

/// The flat coloring of the triangle-center set P inherits exactly the
/// perfectness level of the Z[w] coloring induced by (beta); both reduce to
/// balancedness of the generator.
inline Perfectness perfectness_transfer_36(const QuadInt& beta) {
    if (beta.ring != Ring::eisenstein)
        throw RingMismatchError("triangle tilings live over Z[w]");
    return is_balanced(beta) ? Perfectness::fully_perfect : Perfectness::chirally_perfect;
}

}  // namespace singtile
