// Batch driver: turns the library into reproducible experiments and
// plot-ready CSV/JSON files.

#include "willmore/acceptance.hpp"
#include "willmore/canonical_family.hpp"
#include "willmore/conformal_lab.hpp"
#include "willmore/curves.hpp"
#include "willmore/numerics.hpp"
#include "willmore/shapes.hpp"
#include "willmore/spectral.hpp"
#include "willmore/transform.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace willmore;
using nlohmann::json;

namespace {

// 12 significant digits, reparsed so the JSON/CSV emitters print a stable
// shortest form of the rounded value
double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open output file " + path);
    out << content;
}

void emit(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
}

json vec_json(const Vec4& v) {
    return json::array({round12(v[0]), round12(v[1]), round12(v[2]), round12(v[3])});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"willmore-lab: energies, conformal maps, canonical families and "
                 "spectra of surfaces in S^3 at desk scale"};
    app.require_subcommand(1);

    std::string shape_spec = "kind=clifford";
    int res = 128;
    std::uint64_t seed = 1;
    std::string out_path;
    std::string csv_path;

    auto add_common = [&](CLI::App* cmd, bool with_shape = true) {
        if (with_shape)
            cmd->add_option("--shape", shape_spec,
                            "shape spec, e.g. \"kind=tube R=1.4142 r=1\"");
        cmd->add_option("--res", res, "quadrature nodes per axis (>= 16)")
            ->check(CLI::Range(16, 4096));
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_option("--out", out_path, "JSON output path (default stdout)");
    };

    auto* energy = app.add_subcommand("energy", "area and Willmore energy of a shape");
    add_common(energy);
    energy->callback([&] {
        const ParametricSurface S = build_shape(shape_spec);
        const QuadratureGrid q(res);
        json j;
        j["shape"] = shape_spec;
        j["ambient"] = S.ambient() == Ambient::S3 ? "S3" : "R3";
        j["res"] = res;
        j["area"] = round12(area(S, q));
        j["willmore"] = round12(willmore_energy(S, q));
        emit(j, out_path);
    });

    auto* profile = app.add_subcommand("tube-profile", "r -> W(tube(R,r)) table");
    double R = std::sqrt(2.0), rmin = 0.1, rmax = 1.35;
    int steps = 1000;
    profile->add_option("--R", R, "ring radius");
    profile->add_option("--rmin", rmin);
    profile->add_option("--rmax", rmax);
    profile->add_option("--steps", steps, "number of grid steps");
    profile->add_option("--csv", csv_path, "CSV output path");
    add_common(profile, false);
    profile->callback([&] {
        if (!(rmin > 0.0 && rmax < R && rmin < rmax))
            throw InvalidInput("tube-profile: need 0 < rmin < rmax < R");
        std::vector<double> radii(steps + 1);
        for (int k = 0; k <= steps; ++k) radii[k] = rmin + (rmax - rmin) * k / steps;
        const auto prof = tube_energy_profile(R, radii, QuadratureGrid(std::max(res, 64), 16));
        std::string csv = "r,W\n";
        double best_r = 0.0, best_w = 1e300;
        for (const auto& [r, w] : prof) {
            csv += fmt12(r) + "," + fmt12(w) + "\n";
            if (w < best_w) {
                best_w = w;
                best_r = r;
            }
        }
        if (!csv_path.empty()) write_file(csv_path, csv);
        json j;
        j["R"] = round12(R);
        j["min_r"] = round12(best_r);
        j["min_W"] = round12(best_w);
        j["rows"] = static_cast<int>(prof.size());
        emit(j, out_path);
    });

    auto* inv = app.add_subcommand("invariance", "energy deviation under random conformal maps");
    int count = 20;
    double maxnorm = 0.8;
    inv->add_option("--count", count);
    inv->add_option("--maxnorm", maxnorm)->check(CLI::Range(0.0, 0.999));
    inv->add_option("--csv", csv_path, "CSV output path");
    add_common(inv);
    inv->callback([&] {
        const ParametricSurface S = build_shape(shape_spec);
        const QuadratureGrid q(res);
        Rng rng(seed);
        std::string csv = "v1,v2,v3,v4,deviation\n";
        double worst = 0.0;
        for (int k = 0; k < count; ++k) {
            const Vec4 v = rng.ball4(maxnorm);
            const double dev = check_invariance(S, ConformalParam(v), q);
            worst = std::max(worst, dev);
            csv += fmt12(v[0]) + "," + fmt12(v[1]) + "," + fmt12(v[2]) + "," + fmt12(v[3]) +
                   "," + fmt12(dev) + "\n";
        }
        if (!csv_path.empty()) write_file(csv_path, csv);
        json j;
        j["shape"] = shape_spec;
        j["count"] = count;
        j["max_deviation"] = round12(worst);
        j["willmore"] = round12(willmore_energy(S, q));
        emit(j, out_path);
    });

    auto* family = app.add_subcommand("family", "canonical-family area landscape");
    int vgrid = 9, tgrid = 33;
    bool refine = false;
    family->add_option("--vgrid", vgrid, "points per v axis");
    family->add_option("--tgrid", tgrid, "points on the t axis");
    family->add_flag("--refine", refine, "polish the best grid point");
    family->add_option("--csv", csv_path, "landscape CSV output path");
    add_common(family);
    family->callback([&] {
        const ParametricSurface S = build_shape(shape_spec);
        const QuadratureGrid q(res);
        const LandscapeResult land =
            sup_area_landscape(S, vgrid, tgrid, q, 0.9, refine, 400, !csv_path.empty());
        if (!csv_path.empty()) {
            std::string csv = "v1,v2,v3,v4,t,area\n";
            for (const auto& row : land.rows)
                csv += fmt12(row.v[0]) + "," + fmt12(row.v[1]) + "," + fmt12(row.v[2]) + "," +
                       fmt12(row.v[3]) + "," + fmt12(row.t) + "," + fmt12(row.area) + "\n";
            write_file(csv_path, csv);
        }
        json j;
        j["shape"] = shape_spec;
        j["sup"] = round12(land.sup);
        j["argmax"] = {{"v", vec_json(land.argmax.v.v())}, {"t", round12(land.argmax.t)}};
        j["willmore"] = round12(land.willmore);
        j["certified"] = land.certificate;
        emit(j, out_path);
    });

    auto* sweep = app.add_subcommand("sweep", "one-parameter sweepout slice areas");
    int sweep_steps = 101;
    sweep->add_option("--steps", sweep_steps);
    sweep->add_option("--csv", csv_path, "CSV output path");
    add_common(sweep, false);
    sweep->callback([&] {
        std::string csv = "t,area\n";
        double best_t = 0.0, best_a = -1.0;
        for (int k = 0; k < sweep_steps; ++k) {
            const double t = static_cast<double>(k) / (sweep_steps - 1);
            const double a = sweepout_phi1(t);
            csv += fmt12(t) + "," + fmt12(a) + "\n";
            if (a > best_a) {
                best_a = a;
                best_t = t;
            }
        }
        if (!csv_path.empty()) write_file(csv_path, csv);
        json j;
        j["steps"] = sweep_steps;
        j["max_t"] = round12(best_t);
        j["max_area"] = round12(best_a);
        emit(j, out_path);
    });

    auto* spectrum = app.add_subcommand("spectrum", "Jacobi spectrum and Morse index");
    int n_spec = 64;
    spectrum->add_option("--n", n_spec, "grid resolution per axis");
    add_common(spectrum);
    spectrum->callback([&] {
        const ParametricSurface S = build_shape(shape_spec);
        const JacobiSpectrum s = jacobi_spectrum(S, n_spec);
        json j;
        j["shape"] = shape_spec;
        j["n"] = n_spec;
        json evs = json::array();
        for (std::size_t k = 0; k < std::min<std::size_t>(20, s.eigenvalues.size()); ++k)
            evs.push_back(round12(s.eigenvalues[k]));
        j["eigenvalues"] = evs;
        j["index"] = s.index;
        j["nullity"] = s.nullity;
        emit(j, out_path);
    });

    auto* liyau = app.add_subcommand("liyau", "balancing and the eigenvalue-area chain");
    add_common(liyau);
    liyau->callback([&] {
        const ParametricSurface S = build_shape(shape_spec);
        const LiYauResult r = li_yau_chain(S, QuadratureGrid(res));
        json j;
        j["shape"] = shape_spec;
        j["v0"] = vec_json(r.v0.v());
        j["lambda1_area"] = round12(r.lambda1_area);
        j["two_W"] = round12(r.two_willmore);
        j["holds"] = r.holds;
        emit(j, out_path);
    });

    auto* curves_cmd = app.add_subcommand("curves", "curve energies from a harmonic file");
    std::string curve_file, builtin;
    curves_cmd->add_option("--curve-file", curve_file, "harmonic coefficient file");
    curves_cmd->add_option("--builtin", builtin,
                           "circle|ellipse|trefoil|equator|latitude:z|profile:h,r");
    add_common(curves_cmd, false);
    curves_cmd->callback([&] {
        std::optional<ClosedCurve> curve;
        if (!curve_file.empty()) curve = parse_curve_file(curve_file);
        else if (builtin == "circle") curve = circle_r3(1.0);
        else if (builtin == "ellipse") curve = ellipse_r3(2.0, 1.0);
        else if (builtin == "trefoil") curve = trefoil_r3();
        else if (builtin == "equator") curve = equator_s2();
        else if (builtin.rfind("latitude:", 0) == 0)
            curve = latitude_s2(std::stod(builtin.substr(9)));
        else if (builtin.rfind("profile:", 0) == 0) {
            const auto comma = builtin.find(',');
            curve = circle_h2(std::stod(builtin.substr(8)), std::stod(builtin.substr(comma + 1)));
        } else
            throw InvalidInput("curves: give --curve-file or a known --builtin");

        json j;
        j["length"] = round12(curve_length(*curve));
        switch (curve->ambient()) {
            case CurveAmbient::R3:
                j["ambient"] = "r3";
                j["total_curvature"] = round12(total_curvature(*curve));
                break;
            case CurveAmbient::S2:
                j["ambient"] = "s2";
                j["elastic_energy"] = round12(elastic_energy_s2(*curve));
                j["hopf_torus_willmore"] =
                    round12(willmore_energy(hopf_torus(*curve), QuadratureGrid(res)));
                break;
            case CurveAmbient::H2:
                j["ambient"] = "h2";
                j["hyperbolic_bending"] = round12(hyperbolic_bending(*curve));
                j["revolution_willmore"] =
                    round12(willmore_energy(revolution_torus(*curve), QuadratureGrid(res)));
                break;
        }
        emit(j, out_path);
    });

    auto* report = app.add_subcommand("report", "run the acceptance suite");
    report->add_option("--out", out_path, "JSON output path (default stdout)");
    report->callback([&] {
        const auto results = run_acceptance(&std::cerr);
        json arr = json::array();
        bool ok = true;
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name
                      << (r.detail.empty() ? "" : "  -- " + r.detail) << "\n";
            arr.push_back(
                {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            ok = ok && r.pass;
        }
        if (!out_path.empty()) emit(json{{"criteria", arr}, {"all_pass", ok}}, out_path);
        if (!ok) throw CLI::RuntimeError(1);
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NoConvergence& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
