#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Exact arithmetic in the two quadratic integer rings behind the square and
// hexagonal lattices: Z[i] (xi = i, xi^2 = -1) and Z[w] (xi = w = e^{2pi i/3},
// xi^2 = -1 - w). Both are Euclidean domains, so gcd, exact division and
// unique factorization are available without any floating point.

namespace singtile {

using Int = long long;

enum class Ring { gauss, eisenstein };

inline const char* ring_name(Ring r) {
    return r == Ring::gauss ? "Z[i]" : "Z[w]";
}

struct RingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

/// Element a + b*xi of Z[i] or Z[w], tagged by its ring.
struct QuadInt {
    Int a = 0;
    Int b = 0;
    Ring ring = Ring::gauss;

    constexpr QuadInt() = default;
    constexpr QuadInt(Int a_, Int b_, Ring r) : a(a_), b(b_), ring(r) {}

    bool is_zero() const { return a == 0 && b == 0; }

    friend bool operator==(const QuadInt& z, const QuadInt& w) {
        return z.a == w.a && z.b == w.b && z.ring == w.ring;
    }
    friend bool operator!=(const QuadInt& z, const QuadInt& w) { return !(z == w); }

    // Container ordering only; no arithmetic meaning.
    friend bool operator<(const QuadInt& z, const QuadInt& w) {
        if (z.ring != w.ring) return z.ring < w.ring;
        if (z.a != w.a) return z.a < w.a;
        return z.b < w.b;
    }
};

inline void require_same_ring(const QuadInt& z, const QuadInt& w) {
    if (z.ring != w.ring)
        throw RingMismatchError(std::string("ring mismatch: ") + ring_name(z.ring) +
                                " vs " + ring_name(w.ring));
}

inline QuadInt operator+(const QuadInt& z, const QuadInt& w) {
    require_same_ring(z, w);
    return {z.a + w.a, z.b + w.b, z.ring};
}

inline QuadInt operator-(const QuadInt& z, const QuadInt& w) {
    require_same_ring(z, w);
    return {z.a - w.a, z.b - w.b, z.ring};
}

inline QuadInt operator-(const QuadInt& z) { return {-z.a, -z.b, z.ring}; }

inline QuadInt operator*(const QuadInt& z, const QuadInt& w) {
    require_same_ring(z, w);
    if (z.ring == Ring::gauss)   // (a+bi)(c+di), i^2 = -1
        return {z.a * w.a - z.b * w.b, z.a * w.b + z.b * w.a, z.ring};
    // (a+bw)(c+dw), w^2 = -1-w
    return {z.a * w.a - z.b * w.b, z.a * w.b + z.b * w.a - z.b * w.b, z.ring};
}

inline QuadInt operator*(Int k, const QuadInt& z) { return {k * z.a, k * z.b, z.ring}; }

/// Complex conjugate; stays in the ring (conj w = w^2 = -1-w).
inline QuadInt conj(const QuadInt& z) {
    if (z.ring == Ring::gauss) return {z.a, -z.b, z.ring};
    return {z.a - z.b, -z.b, z.ring};
}

/// z * conj(z) as a rational integer; nonnegative, zero iff z = 0.
inline Int norm(const QuadInt& z) {
    if (z.ring == Ring::gauss) return z.a * z.a + z.b * z.b;
    return z.a * z.a - z.a * z.b + z.b * z.b;
}

/// 2*Re(z): integer-valued even when Re itself is a half-integer
/// (Eisenstein case, where Re(a+bw) = a - b/2).
inline Int two_re(const QuadInt& z) {
    return z.ring == Ring::gauss ? 2 * z.a : 2 * z.a - z.b;
}

/// Coefficient of the imaginary part: Im(z) = im_coeff(z) * s where s = 1
/// for Z[i] and s = sqrt(3)/2 for Z[w]. Sign-faithful and exact.
inline Int im_coeff(const QuadInt& z) { return z.b; }

inline QuadInt one(Ring r) { return {1, 0, r}; }
inline QuadInt xi(Ring r) { return {0, 1, r}; }

/// The unit group: {1,-1,i,-i} or the six Eisenstein units.
inline std::vector<QuadInt> units(Ring r) {
    if (r == Ring::gauss)
        return {{1, 0, r}, {0, 1, r}, {-1, 0, r}, {0, -1, r}};
    return {{1, 0, r}, {1, 1, r}, {0, 1, r}, {-1, 0, r}, {-1, -1, r}, {0, -1, r}};
}

inline bool is_unit(const QuadInt& z) { return norm(z) == 1; }

/// Exact quotient z/d when d | z, nullopt otherwise.
inline std::optional<QuadInt> divides(const QuadInt& d, const QuadInt& z) {
    require_same_ring(d, z);
    if (d.is_zero()) throw std::domain_error("division by zero");
    const QuadInt p = z * conj(d);
    const Int n = norm(d);
    if (p.a % n != 0 || p.b % n != 0) return std::nullopt;
    return QuadInt{p.a / n, p.b / n, z.ring};
}

namespace detail {

// Round p/q to the nearest integer, ties to even; q > 0.
inline Int round_nearest(Int p, Int q) {
    Int f = p >= 0 ? p / q : -((-p + q - 1) / q);  // floor
    Int r2 = 2 * (p - f * q);                      // 2*remainder in [0, 2q)
    if (r2 > q) return f + 1;
    if (r2 < q) return f;
    return (f % 2 == 0) ? f : f + 1;  // exact half: to even
}

}  // namespace detail

/// Euclidean division: q = round(z/d) coordinate-wise, r = z - q*d with
/// norm(r) < norm(d) in both rings.
inline std::pair<QuadInt, QuadInt> divmod(const QuadInt& z, const QuadInt& d) {
    require_same_ring(z, d);
    if (d.is_zero()) throw std::domain_error("division by zero");
    const QuadInt p = z * conj(d);
    const Int n = norm(d);
    QuadInt q{detail::round_nearest(p.a, n), detail::round_nearest(p.b, n), z.ring};
    return {q, z - q * d};
}

/// True iff w = u*z for a unit u.
inline bool is_associate(const QuadInt& z, const QuadInt& w) {
    require_same_ring(z, w);
    for (const QuadInt& u : units(z.ring))
        if (u * z == w) return true;
    return false;
}

/// The unique associate with argument in [0, pi/2) for Z[i] and [0, pi/3)
/// for Z[w]; fixes 0.
inline QuadInt canonical_associate(const QuadInt& z) {
    if (z.is_zero()) return z;
    for (const QuadInt& u : units(z.ring)) {
        const QuadInt c = u * z;
        const bool in_sector = (z.ring == Ring::gauss) ? (c.a > 0 && c.b >= 0)
                                                       : (c.b >= 0 && c.b < c.a);
        if (in_sector) return c;
    }
    throw std::logic_error("no associate in the fundamental sector");
}

/// Greatest common divisor in canonical-associate form.
inline QuadInt gcd(QuadInt z, QuadInt w) {
    require_same_ring(z, w);
    if (z.is_zero() && w.is_zero()) throw std::domain_error("gcd(0,0) is undefined");
    while (!w.is_zero()) {
        QuadInt r = divmod(z, w).second;
        z = w;
        w = r;
    }
    return canonical_associate(z);
}

/// An element is balanced when it is an associate of its conjugate.
/// Balancedness of a generator decides full perfectness of its coset
/// coloring and, for the conformal parameter, reflection symmetry.
inline bool is_balanced(const QuadInt& z) {
    if (z.is_zero()) throw std::domain_error("is_balanced(0) is undefined");
    return is_associate(z, conj(z));
}

struct Factorization {
    QuadInt unit;
    std::vector<std::pair<QuadInt, int>> factors;  // canonical primes, exponents

    QuadInt value() const {
        QuadInt v = unit;
        for (const auto& [p, e] : factors)
            for (int k = 0; k < e; ++k) v = v * p;
        return v;
    }
};

namespace detail {

inline QuadInt ramified_prime(Ring r) {
    // canonical associate of 1+i (over 2) resp. 1-w (over 3, = unit*(2+w))
    return r == Ring::gauss ? QuadInt{1, 1, r} : QuadInt{2, 1, r};
}

// A prime element above the split rational prime p: gcd(p, x - xi) where x
// is a root of the minimal polynomial of xi mod p.
inline QuadInt split_prime_above(Int p, Ring r) {
    for (Int x = 0; x < p; ++x) {
        const bool root = (r == Ring::gauss) ? (x * x + 1) % p == 0
                                             : (x * x + x + 1) % p == 0;
        if (root) return gcd(QuadInt{p, 0, r}, QuadInt{x, -1, r});
    }
    throw std::logic_error("split prime has no residue root");
}

}  // namespace detail

/// Unique factorization into canonical primes. Each rational prime under
/// norm(z) splits, ramifies or stays inert according to its residue class
/// (mod 4 for Z[i], mod 3 for Z[w]); exponents are assigned by repeated
/// exact division, which also verifies the candidates.
inline Factorization factorize(QuadInt z) {
    if (z.is_zero()) throw std::domain_error("factorize(0) is undefined");
    const Ring r = z.ring;
    Factorization fac;
    Int n = norm(z);

    auto extract = [&](const QuadInt& prime) {
        int e = 0;
        while (auto q = divides(prime, z)) {
            z = *q;
            ++e;
        }
        if (e > 0) fac.factors.push_back({prime, e});
    };
    auto extract_above = [&](Int p) {
        const Int ram = (r == Ring::gauss) ? 2 : 3;
        const Int rem = (r == Ring::gauss) ? p % 4 : p % 3;
        if (p == ram) {
            extract(detail::ramified_prime(r));
        } else if (rem == 1) {
            const QuadInt pi = detail::split_prime_above(p, r);
            extract(canonical_associate(pi));
            extract(canonical_associate(conj(pi)));
        } else {
            extract(canonical_associate(QuadInt{p, 0, r}));
        }
    };

    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        extract_above(p);
    }
    if (n > 1) extract_above(n);

    if (!is_unit(z)) throw std::logic_error("factorize: non-unit cofactor left");
    fac.unit = z;

    std::sort(fac.factors.begin(), fac.factors.end(),
              [](const auto& x, const auto& y) {
                  if (norm(x.first) != norm(y.first)) return norm(x.first) < norm(y.first);
                  return x.first < y.first;
              });
    return fac;
}

inline void sort_by_norm(std::vector<QuadInt>& v) {
    std::sort(v.begin(), v.end(), [](const QuadInt& x, const QuadInt& y) {
        if (norm(x) != norm(y)) return norm(x) < norm(y);
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
}

/// All divisors of z up to associates, canonicalized, sorted by norm then
/// coordinates. Count is prod(e_i + 1) over the factorization.
inline std::vector<QuadInt> divisors_up_to_associates(const QuadInt& z) {
    const Factorization fac = factorize(z);
    std::vector<QuadInt> divs{one(z.ring)};
    for (const auto& [p, e] : fac.factors) {
        std::vector<QuadInt> next;
        next.reserve(divs.size() * (e + 1));
        for (const QuadInt& d : divs) {
            QuadInt cur = d;
            next.push_back(cur);
            for (int k = 1; k <= e; ++k) {
                cur = cur * p;
                next.push_back(cur);
            }
        }
        divs = std::move(next);
    }
    for (QuadInt& d : divs) d = canonical_associate(d);
    sort_by_norm(divs);
    return divs;
}

// ---------------------------------------------------------------------------
// Textual syntax: `a`, `a+bi`, `a-bi`, `a+bw`, `a-bw`, with optional spaces
// and bare `i`/`w` for unit coefficients. `w` denotes the Eisenstein unit.

inline std::string to_string(const QuadInt& z) {
    const char sym = z.ring == Ring::gauss ? 'i' : 'w';
    std::string s;
    auto imag = [&](Int b, bool lead) {
        if (b == 1) return lead ? std::string(1, sym) : "+" + std::string(1, sym);
        if (b == -1) return "-" + std::string(1, sym);
        if (b > 0) return (lead ? "" : std::string("+")) + std::to_string(b) + sym;
        return std::to_string(b) + sym;
    };
    if (z.b == 0) return std::to_string(z.a);
    if (z.a == 0) return imag(z.b, true);
    return std::to_string(z.a) + imag(z.b, false);
}

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && s[i] == ' ') ++i;
    }
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
};

inline Int parse_int(Cursor& c, bool* had_digits, Int* sign_out) {
    c.skip_ws();
    Int sign = 1;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        if (c.peek() == '-') sign = -1;
        ++c.i;
        c.skip_ws();
    }
    *sign_out = sign;
    *had_digits = false;
    Int v = 0;
    while (!c.done() && c.peek() >= '0' && c.peek() <= '9') {
        v = v * 10 + (c.peek() - '0');
        *had_digits = true;
        ++c.i;
    }
    return sign * v;
}

}  // namespace detail

/// Parse an element of the given ring; rejects the other ring's symbol.
inline QuadInt parse_quadint(const std::string& text, Ring ring) {
    const char sym = ring == Ring::gauss ? 'i' : 'w';
    const char other = ring == Ring::gauss ? 'w' : 'i';
    detail::Cursor c{text};
    Int re = 0, im = 0;
    bool seen_re = false, seen_im = false;

    for (int term = 0; term < 2; ++term) {
        c.skip_ws();
        if (c.done()) break;
        bool digits = false;
        Int sign = 1;
        Int v = detail::parse_int(c, &digits, &sign);
        c.skip_ws();
        if (!c.done() && c.peek() == other)
            throw ParseError(std::string("symbol '") + other + "' is not valid in " +
                                 ring_name(ring),
                             c.i);
        if (!c.done() && c.peek() == sym) {
            if (!digits) v = sign;  // bare 'i' / '-w'
            if (seen_im) throw ParseError("duplicate imaginary term", c.i);
            im = v;
            seen_im = true;
            ++c.i;
        } else {
            if (!digits) throw ParseError("expected a number", c.i);
            if (seen_re) throw ParseError("duplicate integer term", c.i);
            re = v;
            seen_re = true;
        }
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != '+' && c.peek() != '-')
            throw ParseError(std::string("unexpected character '") + c.peek() + "'", c.i);
    }
    c.skip_ws();
    if (!c.done()) throw ParseError("trailing input", c.i);
    if (!seen_re && !seen_im) throw ParseError("empty element", 0);
    return {re, im, ring};
}

/// Ring inferred from the symbol present; nullopt for bare integers.
inline std::optional<Ring> detect_ring(const std::string& text) {
    const bool has_i = text.find('i') != std::string::npos;
    const bool has_w = text.find('w') != std::string::npos;
    if (has_i && has_w) throw ParseError("mixed ring symbols 'i' and 'w'", 0);
    if (has_i) return Ring::gauss;
    if (has_w) return Ring::eisenstein;
    return std::nullopt;
}

}  // namespace singtile
