#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "singtile/tiling.hpp"

// Floating-point geometry stage: embeds ring elements in the complex plane,
// pushes tile boundaries through the exponential map and writes colored SVG
// for an annulus around the singular point. Everything upstream of the
// doubles here is exact.

namespace singtile {

inline std::complex<double> embed(const QuadInt& z) {
    if (z.ring == Ring::gauss)
        return {static_cast<double>(z.a), static_cast<double>(z.b)};
    return {z.a - 0.5 * z.b, 0.8660254037844386 * z.b};  // w = -1/2 + i sqrt(3)/2
}

/// The conformal map exp(2 pi i z / alpha), evaluated through the
/// numerically friendlier form exp(2 pi i conj(alpha) z / |alpha|^2).
inline std::complex<double> map_point(std::complex<double> z,
                                      std::complex<double> alpha) {
    const std::complex<double> i2pi(0.0, 6.283185307179586);
    return std::exp(i2pi * std::conj(alpha) * z / std::norm(alpha));
}

inline std::complex<double> map_point(std::complex<double> z, const QuadInt& alpha) {
    return map_point(z, embed(alpha));
}

/// Image type of the line through direction d (exact; alias of the census
/// classifier so renderer and verifier agree by construction).
inline CurveFamily classify_line_image(const QuadInt& d, const QuadInt& alpha) {
    return classify_line_family(d, alpha);
}

struct RgbColor {
    int r = 200, g = 200, b = 200;
    std::string css() const {
        char buf[8];
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
        return buf;
    }
};

inline RgbColor hsv_to_rgb(double h, double s, double v) {
    h = h - std::floor(h);
    const double c = v * s;
    const double x = c * (1 - std::fabs(std::fmod(h * 6.0, 2.0) - 1.0));
    const double m = v - c;
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(h * 6.0) % 6) {
        case 0: r = c; g = x; break;
        case 1: r = x; g = c; break;
        case 2: g = c; b = x; break;
        case 3: g = x; b = c; break;
        case 4: r = x; b = c; break;
        default: r = c; b = x; break;
    }
    auto q = [&](double t) { return static_cast<int>(std::lround((t + m) * 255.0)); };
    return {q(r), q(g), q(b)};
}

/// Maximally spaced hue wheel, phase-seeded from the generator so figures
/// are reproducible per coloring.
inline std::vector<RgbColor> default_palette(Int colors, const QuadInt& seed) {
    std::vector<RgbColor> pal;
    const double phase = 0.618033988749895 * static_cast<double>(norm(seed) % 89);
    for (Int k = 0; k < colors; ++k)
        pal.push_back(hsv_to_rgb(phase + static_cast<double>(k) / std::max<Int>(colors, 1),
                                 0.55, 0.93));
    return pal;
}

struct RenderPlan {
    Admissible alpha;
    std::optional<QuadInt> beta;  // ideal coloring generator
    double r_min = 0.2;
    double r_max = 4.0;
    int samples_per_edge = 24;
    std::vector<RgbColor> palette;  // empty: derive a default
    int canvas_px = 800;
};

struct MappedTile {
    QuadInt source;
    std::vector<std::complex<double>> polyline;  // closed: front() == back()
    int color = 0;
};

namespace detail {

/// Tile polygon corners around a center, in flat coordinates.
inline std::vector<std::complex<double>> tile_corners(Tiling kind, const QuadInt& z) {
    const std::complex<double> c = embed(z);
    std::vector<std::complex<double>> corners;
    switch (kind) {
        case Tiling::square44:
            corners = {c + std::complex<double>(0.5, 0.5),
                       c + std::complex<double>(-0.5, 0.5),
                       c + std::complex<double>(-0.5, -0.5),
                       c + std::complex<double>(0.5, -0.5)};
            break;
        case Tiling::hex63: {
            const double rad = 0.5773502691896258;  // 1/sqrt(3)
            for (int k = 0; k < 6; ++k) {
                const double ang = 0.5235987755982988 + k * 1.0471975511965976;
                corners.push_back(c + std::polar(rad, ang));
            }
            break;
        }
        default: {
            // triangle corners are the three surrounding vertices; their
            // offsets are units, mirrored between the two center cosets
            const Ring r = Ring::eisenstein;
            std::vector<QuadInt> offs = {{1, 1, r}, {-1, 0, r}, {0, -1, r}};
            if (tri_coset(z) == 2)
                for (auto& o : offs) o = -o;
            for (const auto& o : offs) corners.push_back(c + embed(o));
            break;
        }
    }
    return corners;
}

}  // namespace detail

/// Source centers whose image lands inside the margin-expanded annulus, one
/// per fiber of the map (canonical alpha-coordinate in [0,1), selected
/// exactly). The margin covers the largest possible radial wobble of a tile
/// boundary around its center.
inline std::vector<QuadInt> select_tiles(const RenderPlan& plan) {
    if (!(plan.r_min > 0.0) || !(plan.r_min < plan.r_max))
        throw std::domain_error("empty annulus: need 0 < r_min < r_max");
    const Admissible& adm = plan.alpha;
    const QuadInt alpha = adm.alpha;
    const double mod_alpha = std::sqrt(static_cast<double>(norm(alpha)));
    const auto [dnum, dden] = diameter_sq_bound(adm.kind);
    const double d_max = std::sqrt(static_cast<double>(dnum) / dden);
    // a tile meeting the annulus has its center within d_max/2 of it
    const double log_margin = 3.141592653589793 * d_max / mod_alpha;

    // log|phi(z)| = -2 pi Im(z conj alpha) / |alpha|^2 =: -2 pi c2
    const double c2_lo = -(std::log(plan.r_max) + log_margin) / 6.283185307179586;
    const double c2_hi = -(std::log(plan.r_min) - log_margin) / 6.283185307179586;
    const double c2_span = std::max(std::fabs(c2_lo), std::fabs(c2_hi));
    const double zbound = mod_alpha * std::sqrt(1.0 + c2_span * c2_span) + 1.0;
    const Int box = static_cast<Int>(std::ceil(1.16 * zbound)) + 2;

    const double imag_scale = adm.alpha.ring == Ring::gauss ? 1.0 : 0.8660254037844386;
    const Int n2 = 2 * norm(alpha);
    std::vector<QuadInt> picked;
    for (Int a = -box; a <= box; ++a)
        for (Int b = -box; b <= box; ++b) {
            const QuadInt z{a, b, alpha.ring};
            if (!in_center_set(adm.kind, z)) continue;
            const QuadInt zc = z * conj(alpha);
            const Int c1_num2 = two_re(zc);  // c1 = c1_num2 / (2 norm)
            if (c1_num2 < 0 || c1_num2 >= n2) continue;
            const double c2 = im_coeff(zc) * imag_scale / norm(alpha);
            if (c2 < c2_lo || c2 > c2_hi) continue;
            picked.push_back(z);
        }
    sort_by_norm(picked);
    return picked;
}

/// Maps one tile boundary; sampling density grows with the angular span of
/// each edge in the image so inner tiles stay smooth.
inline MappedTile map_tile(const RenderPlan& plan, const QuadInt& center, int color) {
    const QuadInt alpha = plan.alpha.alpha;
    const auto corners = detail::tile_corners(plan.alpha.kind, center);
    const std::complex<double> ea = embed(alpha);
    MappedTile tile{center, {}, color};
    for (size_t i = 0; i < corners.size(); ++i) {
        const std::complex<double> from = corners[i];
        const std::complex<double> to = corners[(i + 1) % corners.size()];
        const double span =
            std::abs(6.283185307179586 * std::conj(ea) * (to - from) / std::norm(ea));
        const int steps = std::max({plan.samples_per_edge, 2,
                                    static_cast<int>(std::ceil(span / 0.05))});
        for (int s = 0; s < steps; ++s) {
            const double t = static_cast<double>(s) / steps;
            tile.polyline.push_back(map_point(from + t * (to - from), alpha));
        }
    }
    tile.polyline.push_back(tile.polyline.front());
    return tile;
}

struct RenderResult {
    std::string svg;
    std::vector<MappedTile> tiles;
    std::vector<std::string> warnings;
};

inline RenderResult emit_svg(const RenderPlan& plan) {
    const Admissible& adm = plan.alpha;
    std::optional<CosetColoring> coloring;
    if (plan.beta) {
        if (!compatible(*plan.beta, adm))
            throw std::domain_error("ideal (" + to_string(*plan.beta) +
                                    ") is not compatible with alpha");
        coloring.emplace(build_ideal_coloring(*plan.beta, adm.kind));
    }
    const Int colors = coloring ? coloring->color_count() : 1;

    RenderResult out;
    std::vector<RgbColor> palette = plan.palette;
    if (palette.empty())
        palette = default_palette(colors, plan.beta ? *plan.beta : adm.alpha);
    if (static_cast<Int>(palette.size()) < colors)
        out.warnings.push_back("palette has " + std::to_string(palette.size()) +
                               " colors for " + std::to_string(colors) +
                               "; cycling");

    for (const QuadInt& z : select_tiles(plan)) {
        int color = 0;
        if (coloring) {
            const auto c = coloring->color_of(z);
            if (!c) continue;
            color = *c;
        }
        out.tiles.push_back(map_tile(plan, z, color));
    }

    std::ostringstream svg;
    const double view = plan.r_max * 1.05;
    svg.setf(std::ios::fixed);
    svg.precision(6);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plan.canvas_px
        << "\" height=\"" << plan.canvas_px << "\" viewBox=\"" << -view << " "
        << -view << " " << 2 * view << " " << 2 * view << "\">\n";
    svg << "<!-- singular tiling: alpha=" << to_string(adm.alpha) << " kind=("
        << tiling_name(adm.kind) << ")";
    if (plan.beta) svg << " beta=" << to_string(*plan.beta);
    svg << " class=" << static_cast<int>(adm.cls) << " symmetry="
        << (adm.balanced ? "D" : "C") << adm.n << " -->\n";
    for (const MappedTile& tile : out.tiles) {
        const RgbColor fill = palette[static_cast<size_t>(tile.color) % palette.size()];
        svg << "<path d=\"";
        for (size_t i = 0; i + 1 < tile.polyline.size(); ++i) {
            const auto& p = tile.polyline[i];
            svg << (i == 0 ? 'M' : 'L') << p.real() << ' ' << -p.imag() << ' ';
        }
        svg << "Z\" fill=\"" << fill.css() << "\" stroke=\"#000000\" stroke-width=\""
            << plan.r_max / 500.0 << "\"/>\n";
    }
    svg << "</svg>\n";
    out.svg = svg.str();
    return out;
}

}  // namespace singtile
