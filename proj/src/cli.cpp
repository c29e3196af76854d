#include "involute/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "involute/involute.hpp"
#include "involute/polygon.hpp"
#include "involute/render.hpp"
#include "involute/series.hpp"
#include "involute/symbolic.hpp"
#include "involute/verify.hpp"

namespace involute::cli {

namespace {

constexpr double kPi = std::numbers::pi;

/// Shortest round-trip decimal representation.
std::string fmt(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, p);
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + out_path);
}

nlohmann::json point_json(const Point2& p) {
    return nlohmann::json::array({p.x, p.y});
}

int run_tower(double theta, int depth, int samples, const std::string& format,
              const std::string& out_path) {
    if (format == "json") {
        nlohmann::json j;
        j["theta"] = theta;
        j["depth"] = depth;
        j["endpoints"] = nlohmann::json::array();
        j["segment_lengths"] = nlohmann::json::array();
        j["remainder_bounds"] = nlohmann::json::array();
        for (int k = 0; k <= depth; ++k) {
            j["endpoints"].push_back(point_json(series::tower_endpoint(k, theta)));
            j["remainder_bounds"].push_back(series::remainder_bound(k, theta));
        }
        for (int k = 1; k <= depth; ++k)
            j["segment_lengths"].push_back(series::segment_length(k, theta));
        write_output(j.dump(2) + "\n", out_path);
        return 0;
    }
    if (format == "csv") {
        const double phi = kPi / 2.0 - theta;
        std::ostringstream out;
        out << "level,t,x,y\r\n";
        for (int k = 0; k <= depth; ++k) {
            for (int i = 0; i < samples; ++i) {
                const double t = theta * i / (samples - 1);
                const Point2 p = (k == 0)
                    ? Point2{std::sin(phi + t), std::cos(phi + t)}
                    : series::closed_form_involute(k, phi).evaluate(t);
                out << k << "," << fmt(t) << "," << fmt(p.x) << "," << fmt(p.y)
                    << "\r\n";
            }
        }
        write_output(out.str(), out_path);
        return 0;
    }
    // svg
    FigureSpec spec;
    spec.kind = FigureKind::Tower;
    spec.theta = theta;
    spec.depth = depth;
    spec.samples = samples;
    write_output(render_figure(spec), out_path);
    return 0;
}

int run_involute(const std::string& curve_name, double theta, int samples,
                 const std::string& format, const std::string& out_path) {
    const ParametricCurve base = (curve_name == "circle")
        ? ParametricCurve(Interval(0.0, 2.0 * kPi),
              [](double t, int order) {
                  const Jet u = Jet::variable(t, order);
                  Jet s(order), c(order);
                  jet_sincos(u, s, c);
                  return JetVec2{c, s};
              })
        : unit_arc(theta);
    const InvoluteCurve inv = involute(base);
    if (format == "csv") {
        std::ostringstream out;
        out << "t,x,y,base_x,base_y,s\r\n";
        for (const auto& [t, p] : sample(inv.curve, samples)) {
            const Point2 bp = base.position(t);
            out << fmt(t) << "," << fmt(p.x) << "," << fmt(p.y) << ","
                << fmt(bp.x) << "," << fmt(bp.y) << "," << fmt((*inv.arc_table)(t))
                << "\r\n";
        }
        write_output(out.str(), out_path);
        return 0;
    }
    nlohmann::json j;
    j["curve"] = curve_name;
    if (curve_name == "arc") j["theta"] = theta;
    j["points"] = nlohmann::json::array();
    for (const auto& [t, p] : sample(inv.curve, samples))
        j["points"].push_back({{"t", t},
                               {"point", point_json(p)},
                               {"base", point_json(base.position(t))},
                               {"arc_length", (*inv.arc_table)(t)}});
    write_output(j.dump(2) + "\n", out_path);
    return 0;
}

int run_polygon(int n, double side, int turns, const std::string& format,
                const std::string& out_path) {
    const RegularPolygon poly(n, side);
    const PiecewiseArcCurve chain = polygon_involute(poly, turns);
    if (format == "csv") {
        std::ostringstream out;
        out << "arc,center_x,center_y,radius,start_angle,end_angle\r\n";
        for (std::size_t k = 0; k < chain.arcs.size(); ++k) {
            const CircularArc& a = chain.arcs[k];
            out << (k + 1) << "," << fmt(a.center.x) << "," << fmt(a.center.y)
                << "," << fmt(a.radius) << "," << fmt(a.start_angle) << ","
                << fmt(a.end_angle) << "\r\n";
        }
        write_output(out.str(), out_path);
        return 0;
    }
    nlohmann::json j;
    j["n"] = n;
    j["side"] = side;
    j["turns"] = turns;
    j["total_length"] = arc_chain_length(chain);
    j["arcs"] = nlohmann::json::array();
    for (const CircularArc& a : chain.arcs)
        j["arcs"].push_back({{"center", point_json(a.center)},
                             {"radius", a.radius},
                             {"start_angle", a.start_angle},
                             {"end_angle", a.end_angle}});
    j["junctions"] = nlohmann::json::array();
    for (const Point2& p : chain.junctions()) j["junctions"].push_back(point_json(p));
    write_output(j.dump(2) + "\n", out_path);
    return 0;
}

} // namespace

double parse_angle(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty angle");

    auto parse_int = [](const std::string& part) {
        int v = 0;
        auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || p != part.data() + part.size() || v == 0)
            throw std::invalid_argument("bad integer in angle expression");
        return v;
    };

    const std::size_t pi_pos = s.find("pi");
    if (pi_pos != std::string::npos) {
        double numer = 1.0;
        if (pi_pos > 0) {
            if (s[pi_pos - 1] != '*')
                throw std::invalid_argument("expected INT*pi in angle expression");
            numer = parse_int(s.substr(0, pi_pos - 1));
        }
        double denom = 1.0;
        const std::size_t rest = pi_pos + 2;
        if (rest < s.size()) {
            if (s[rest] != '/')
                throw std::invalid_argument("expected pi/INT in angle expression");
            denom = parse_int(s.substr(rest + 1));
        }
        return numer * kPi / denom;
    }

    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw std::invalid_argument("cannot parse angle: " + text);
    return v;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Involutes of plane curves, involute towers of a circular "
                 "arc, and their sine/cosine series-term geometry"};
    app.require_subcommand(1);

    std::string theta_text = "1.0";
    int depth = 4;
    int samples = 128;
    std::string format = "json";
    std::string out_path;
    std::string curve_name = "circle";
    int n = 5;
    double side = 1.0;
    int turns = 1;
    std::string kind = "tower";
    std::string zoom_text;
    int width = 800;
    int max_depth = 6;
    std::vector<std::string> theta_list;
    double tol = 1e-7;

    CLI::App* tower = app.add_subcommand(
        "tower", "Tower endpoints, series-term segment lengths, and remainder bounds");
    tower->add_option("--theta", theta_text, "arc angle in (0, pi/2]; accepts pi-fractions");
    tower->add_option("--depth", depth, "number of involute levels")
        ->check(CLI::Range(0, kMaxTowerDepth));
    tower->add_option("--samples", samples, "points per curve (csv)")
        ->check(CLI::Range(2, 1 << 20));
    tower->add_option("--format", format, "json, csv, or svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    tower->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* inv = app.add_subcommand("involute", "Sample the involute of a built-in curve");
    inv->add_option("--curve", curve_name, "base curve")
        ->check(CLI::IsMember({"circle", "arc"}));
    inv->add_option("--theta", theta_text, "arc angle (for --curve arc)");
    inv->add_option("--samples", samples, "sample count")->check(CLI::Range(2, 1 << 20));
    inv->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    inv->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* poly = app.add_subcommand("polygon", "Regular-polygon involute arc chain");
    poly->add_option("--n", n, "vertex count")->check(CLI::Range(3, 1000));
    poly->add_option("--side", side, "side length")->check(CLI::PositiveNumber);
    poly->add_option("--turns", turns, "trips around the polygon")
        ->check(CLI::Range(1, 100));
    poly->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    poly->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* render = app.add_subcommand("render", "Emit an SVG figure");
    render->add_option("--kind", kind, "figure kind")
        ->check(CLI::IsMember({"arc-string", "circle-involute", "tower", "polygon"}));
    render->add_option("--theta", theta_text, "arc angle");
    render->add_option("--depth", depth, "tower levels")->check(CLI::Range(0, kMaxTowerDepth));
    render->add_option("--n", n, "polygon vertex count")->check(CLI::Range(3, 1000));
    render->add_option("--side", side, "polygon side length")->check(CLI::PositiveNumber);
    render->add_option("--samples", samples, "polyline resolution")
        ->check(CLI::Range(2, 1 << 20));
    render->add_option("--zoom", zoom_text, "clip window x0,y0,x1,y1");
    render->add_option("--width", width, "pixel width")->check(CLI::Range(64, 8192));
    render->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand(
        "verify", "Cross-check symbolic, analytic, and numeric involute paths");
    verify->add_option("--max-depth", max_depth, "deepest tower level")
        ->check(CLI::Range(1, kMaxTowerDepth));
    verify->add_option("--thetas", theta_list, "arc angles to test");
    verify->add_option("--tol", tol, "numeric comparison tolerance")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tower->parsed() || render->parsed() || inv->parsed()) {
            const double theta = parse_angle(theta_text);
            const bool needs_arc = tower->parsed() ||
                (inv->parsed() && curve_name == "arc") ||
                (render->parsed() && kind != "polygon" && kind != "circle-involute");
            if (needs_arc && (!(theta > 0.0) || theta > kPi / 2.0 + 1e-15)) {
                std::cerr << "error: theta must lie in (0, pi/2]\n";
                return 2;
            }
            if (tower->parsed()) return run_tower(theta, depth, samples, format, out_path);
            if (inv->parsed())
                return run_involute(curve_name, theta, samples, format, out_path);
            FigureSpec spec;
            if (kind == "tower") spec.kind = FigureKind::Tower;
            else if (kind == "circle-involute") spec.kind = FigureKind::CircleInvolute;
            else if (kind == "arc-string") spec.kind = FigureKind::ArcString;
            else spec.kind = FigureKind::Polygon;
            spec.theta = theta;
            spec.depth = depth;
            spec.n = n;
            spec.side = side;
            spec.samples = samples;
            spec.pixel_width = width;
            if (!zoom_text.empty()) {
                ZoomWindow z;
                char comma;
                std::istringstream zs(zoom_text);
                if (!(zs >> z.x0 >> comma >> z.y0 >> comma >> z.x1 >> comma >> z.y1)) {
                    std::cerr << "error: --zoom expects x0,y0,x1,y1\n";
                    return 2;
                }
                spec.zoom = z;
            }
            write_output(render_figure(spec), out_path);
            return 0;
        }
        if (poly->parsed()) return run_polygon(n, side, turns, format, out_path);
        if (verify->parsed()) {
            VerifyOptions options;
            options.max_depth = max_depth;
            options.tol = tol;
            for (const std::string& t : theta_list)
                options.thetas.push_back(parse_angle(t));
            const VerificationReport report = run_verification(options);
            std::cout << report.to_json() << "\n";
            return report.pass() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace involute::cli
