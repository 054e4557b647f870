// Command-line front end: classification, symmetry analysis, compatible
// ideal enumeration, oracle verification and SVG rendering of tilings with
// a singular point at the origin.
//
//   singtile classify --tiling 44 --alpha "-5+5i"
//   singtile ideals   --tiling 36 --alpha "2+10w" --format json
//   singtile verify   --tiling 63 --alpha 6 --matrix
//   singtile render   --tiling 44 --alpha 4 --ideal 2 --out tiles.svg

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "singtile/report.hpp"

namespace {

using namespace singtile;

struct CommonArgs {
    std::string tiling = "44";
    std::string alpha;
    std::string lr;  // "L,R" alternative for the triangle tiling
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool need_alpha = true) {
    cmd->add_option("--tiling", args.tiling, "tiling: 44, 63 or 36")
        ->check(CLI::IsMember({"44", "63", "36"}))
        ->required();
    auto* alpha = cmd->add_option("--alpha", args.alpha,
                                  "conformal parameter, e.g. \"-5+5i\" or \"2+10w\"");
    auto* lr = cmd->add_option("--LR", args.lr,
                               "determining integers L,R (triangle tiling only)");
    if (need_alpha) {
        alpha->excludes(lr);
        lr->excludes(alpha);
    }
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
}

Tiling parse_tiling(const CommonArgs& args) { return *tiling_from_name(args.tiling); }

QuadInt parse_alpha(const CommonArgs& args, Tiling kind) {
    if (!args.lr.empty()) {
        if (kind != Tiling::tri36)
            throw ParseError("--LR applies to the (36) tiling only", 0);
        const auto comma = args.lr.find(',');
        if (comma == std::string::npos)
            throw ParseError("--LR expects \"L,R\"", 0);
        const QuadInt lpart = parse_quadint(args.lr.substr(0, comma), Ring::eisenstein);
        const QuadInt rpart = parse_quadint(args.lr.substr(comma + 1), Ring::eisenstein);
        if (lpart.b != 0 || rpart.b != 0)
            throw ParseError("--LR expects two rational integers", 0);
        return QuadInt{lpart.a, rpart.a, Ring::eisenstein} * tri_vertex_ideal_gen();
    }
    if (args.alpha.empty()) throw ParseError("missing --alpha", 0);
    return parse_quadint(args.alpha, ring_of(kind));
}

void emit(const json& j, const CommonArgs& args, const std::string& text) {
    if (args.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::vector<RgbColor> parse_palette(const std::string& arg) {
    std::vector<RgbColor> pal;
    size_t pos = 0;
    while (pos < arg.size()) {
        size_t end = arg.find(',', pos);
        if (end == std::string::npos) end = arg.size();
        std::string tok = arg.substr(pos, end - pos);
        if (!tok.empty() && tok[0] == '#') tok = tok.substr(1);
        if (tok.size() != 6) throw ParseError("palette entries are #rrggbb", pos);
        const int v = static_cast<int>(std::stol(tok, nullptr, 16));
        pal.push_back({(v >> 16) & 255, (v >> 8) & 255, v & 255});
        pos = end + 1;
    }
    return pal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tilings of the punctured plane with a singular point"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string ideal_expr, sublattice_expr, out_path = "tiling.svg";
    std::string palette_spec;
    double r_min = 0.2, r_max = 4.0;
    int samples = 24;
    bool matrix = false;

    auto* classify = app.add_subcommand("classify", "admissibility, class and census");
    add_common(classify, args);
    auto* symmetry = app.add_subcommand("symmetry", "symmetry group and flat symmetries");
    add_common(symmetry, args);
    auto* ideals = app.add_subcommand("ideals", "compatible ideal colorings");
    add_common(ideals, args);

    auto* check = app.add_subcommand("check", "compatibility of one coloring");
    add_common(check, args);
    check->add_option("--ideal", ideal_expr, "ideal generator, e.g. \"2+i\"");
    check->add_option("--sublattice", sublattice_expr,
                      "sublattice basis, e.g. \"v1=2,v2=2i\"");

    auto* verify = app.add_subcommand("verify", "brute-force oracle conformance");
    add_common(verify, args);
    verify->add_option("--ideal", ideal_expr, "restrict to one ideal");
    verify->add_flag("--matrix", matrix, "sweep every divisor of alpha");

    auto* render = app.add_subcommand("render", "emit a colored SVG");
    add_common(render, args);
    render->add_option("--ideal", ideal_expr, "coloring ideal generator");
    render->add_option("--rmin", r_min, "inner annulus radius");
    render->add_option("--rmax", r_max, "outer annulus radius");
    render->add_option("--samples", samples, "samples per tile edge")
        ->check(CLI::Range(2, 4096));
    render->add_option("--palette", palette_spec, "comma-separated #rrggbb fills");
    render->add_option("--out", out_path, "output SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const Tiling kind = parse_tiling(args);
        const QuadInt alpha = parse_alpha(args, kind);
        const Admissible adm = check_admissible(kind, alpha);

        if (classify->parsed() || ideals->parsed() || symmetry->parsed()) {
            const json report = build_report(adm);
            if (symmetry->parsed()) {
                const json sym = report.at("symmetry");
                emit(sym, args,
                     "symmetry " + sym.at("type").get<std::string>() +
                         std::to_string(sym.at("n").get<Int>()) + "  f1(z) = z + (" +
                         sym.at("f1").get<std::string>() + ")" +
                         (sym.contains("f2") ? "  f2(z) = (" +
                                                   sym.at("f2").get<std::string>() +
                                                   ") conj(z)"
                                             : "") +
                         "\n");
            } else {
                emit(report, args, report_text(report));
            }
            return 0;
        }

        if (check->parsed()) {
            json report;
            bool ok = false;
            if (!sublattice_expr.empty()) {
                const std::string want = "v1=";
                const auto comma = sublattice_expr.find(",v2=");
                if (sublattice_expr.rfind(want, 0) != 0 || comma == std::string::npos)
                    throw ParseError("--sublattice expects \"v1=...,v2=...\"", 0);
                const QuadInt v1 = parse_quadint(
                    sublattice_expr.substr(3, comma - 3), ring_of(kind));
                const QuadInt v2 =
                    parse_quadint(sublattice_expr.substr(comma + 4), ring_of(kind));
                const Sublattice gamma(v1, v2);
                report = build_check_report(adm, gamma);
                ok = report.at("compatible").get<bool>();
            } else if (!ideal_expr.empty()) {
                const QuadInt beta = parse_quadint(ideal_expr, ring_of(kind));
                report = build_check_report(adm, beta);
                ok = report.at("compatible").get<bool>();
            } else {
                std::cerr << "check requires --ideal or --sublattice\n";
                return 1;
            }
            emit(report, args, report.dump(2) + "\n");
            return ok ? 0 : 2;
        }

        if (verify->parsed()) {
            std::optional<QuadInt> beta;
            if (!ideal_expr.empty())
                beta = parse_quadint(ideal_expr, ring_of(kind));
            const json report = build_verify_report(adm, matrix || !beta, beta);
            emit(report, args, verify_text(report));
            return report.at("agree").get<bool>() ? 0 : 2;
        }

        if (render->parsed()) {
            RenderPlan plan;
            plan.alpha = adm;
            plan.r_min = r_min;
            plan.r_max = r_max;
            plan.samples_per_edge = samples;
            if (!ideal_expr.empty())
                plan.beta = parse_quadint(ideal_expr, ring_of(kind));
            if (palette_spec.empty())
                if (const char* env = std::getenv("SINGTILE_PALETTE"))
                    palette_spec = env;
            if (!palette_spec.empty()) plan.palette = parse_palette(palette_spec);
            const RenderResult result = emit_svg(plan);
            for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
            std::ofstream file(out_path);
            if (!file) {
                std::cerr << "cannot open " << out_path << " for writing\n";
                return 2;
            }
            file << result.svg;
            std::cout << "wrote " << out_path << " (" << result.tiles.size()
                      << " tiles)\n";
            return 0;
        }
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const RingMismatchError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
