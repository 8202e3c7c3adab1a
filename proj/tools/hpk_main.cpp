#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "hpk/errors.hpp"
#include "hpk/json_io.hpp"

namespace {

using hpk::Json;

// Inputs are either inline JSON or @path-to-file.
Json read_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) {
            throw hpk::InvalidInput("cannot read input file " + arg.substr(1));
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw hpk::InvalidInput(std::string("malformed JSON input: ") +
                                e.what());
    }
}

// Complex alpha must fail as a domain error, not a flag-parsing error, so
// the option is taken as a string and converted here.
hpk::Alpha parse_alpha(const std::string& text) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used == text.size()) return hpk::Alpha(value);
    } catch (const hpk::InvalidAlpha&) {
        throw;
    } catch (const std::exception&) {
    }
    throw hpk::InvalidAlpha("alpha must be a nonzero real");
}

void emit(const Json& j) {
    std::cout << j.dump(2) << "\n";
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw hpk::InvalidInput("cannot write file " + path);
    return out;
}

struct CommonArgs {
    std::string f_json;
    std::string F_json;
    std::string boundary_json;
    std::string alpha_text = "1";
    std::string csv_path;
    std::string grid_dump_path;
    std::string trace_dump_path;
    double tol = 1e-9;
    int nodes = 256;
    int samples = 256;
    int grid = 32;
    hpk::ExperimentConfig experiment;
};

void cmd_check_product(const CommonArgs& a) {
    const hpk::HarmonicFn f = hpk::harmonic_fn_from_json(read_json_arg(a.f_json));
    const hpk::HarmonicFn F = hpk::harmonic_fn_from_json(read_json_arg(a.F_json));
    emit(hpk::to_json(hpk::product_is_harmonic(f, F)));
}

void cmd_cofactor(const CommonArgs& a) {
    const hpk::HarmonicFn f = hpk::harmonic_fn_from_json(read_json_arg(a.f_json));
    const hpk::Alpha alpha = parse_alpha(a.alpha_text);
    emit(Json{{"F", hpk::to_json(hpk::cofactor(f, alpha))},
              {"fF", hpk::to_json(hpk::harmonic_product(f, alpha))}});
}

void cmd_dilatation(const CommonArgs& a) {
    const hpk::HarmonicFn f = hpk::harmonic_fn_from_json(read_json_arg(a.f_json));
    emit(hpk::to_json(hpk::dilatation(f)));
}

void cmd_square_check(const CommonArgs& a) {
    const hpk::HarmonicFn f = hpk::harmonic_fn_from_json(read_json_arg(a.f_json));
    emit(hpk::to_json(hpk::square_is_harmonic(f)));
}

void cmd_dirichlet(const CommonArgs& a) {
    const hpk::BoundaryData b =
        hpk::boundary_data_from_json(read_json_arg(a.boundary_json));
    const hpk::Alpha alpha = parse_alpha(a.alpha_text);

    const hpk::DirichletSolution s = hpk::solve_dirichlet(b);
    const hpk::ClaimAudit audit =
        hpk::audit_boundary_claims(b, alpha, a.samples);

    // Quadrature cross-check of the coefficient-space solution: the real
    // parts must agree wherever both are defined (the imaginary parts
    // differ by construction; that gap is the audit's subject).
    double poisson_dev = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double r = 0.1 + 0.1 * i;
        for (int j = 0; j < 16; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / 16;
            const hpk::Complex z = std::polar(r, theta);
            const double dev = std::abs(hpk::poisson_eval(b, z, a.nodes).real() -
                                        s.f.eval(z).real());
            poisson_dev = std::max(poisson_dev, dev);
        }
    }

    if (!a.grid_dump_path.empty()) {
        std::ofstream out = open_csv(a.grid_dump_path);
        out << "r,theta,re,im\n";
        for (int i = 0; i < a.grid; ++i) {
            const double r = static_cast<double>(i + 1) / (a.grid + 1);
            for (int j = 0; j < a.grid; ++j) {
                const double theta = 2.0 * std::numbers::pi * j / a.grid;
                const hpk::Complex v = s.f.eval(std::polar(r, theta));
                out << fmt(r) << "," << fmt(theta) << "," << fmt(v.real())
                    << "," << fmt(v.imag()) << "\n";
            }
        }
    }

    if (!a.trace_dump_path.empty()) {
        std::ofstream out = open_csv(a.trace_dump_path);
        out << "theta,re_actual,im_actual,re_claimed,im_claimed\n";
        const hpk::HarmonicFn F = hpk::cofactor(s.f, alpha);
        const hpk::BoundaryData claim = hpk::claimed_cofactor_trace(b, alpha);
        for (int j = 0; j < a.samples; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / a.samples;
            const hpk::Complex actual = F.eval(std::polar(1.0, theta));
            out << fmt(theta) << "," << fmt(actual.real()) << ","
                << fmt(actual.imag()) << "," << fmt(claim.phi1.eval(theta))
                << "," << fmt(claim.phi2.eval(theta)) << "\n";
        }
    }

    emit(Json{{"h", hpk::to_json(s.f.h)},
              {"g", hpk::to_json(s.f.g)},
              {"G1", hpk::to_json(s.G1)},
              {"G2", hpk::to_json(s.G2)},
              {"cofactor_report", hpk::to_json(audit.cofactor_report)},
              {"product_report", hpk::to_json(audit.product_report)},
              {"poisson_real_max_dev", poisson_dev}});
}

void write_zeros_csv(const std::string& path, const hpk::ZeroReport& report) {
    std::ofstream out = open_csv(path);
    out << "re,im,index,orientation,residual\n";
    for (const hpk::Zero& z : report.zeros) {
        out << fmt(z.location.real()) << "," << fmt(z.location.imag()) << ","
            << z.index << "," << hpk::orientation_name(z.orientation) << ","
            << fmt(z.residual) << "\n";
    }
}

void cmd_zeros(const CommonArgs& a) {
    const hpk::HarmonicFn f = hpk::harmonic_fn_from_json(read_json_arg(a.f_json));
    const hpk::ZeroReport report = hpk::find_zeros(f, a.tol);
    if (!a.csv_path.empty()) write_zeros_csv(a.csv_path, report);
    emit(hpk::to_json(report));
}

void cmd_product_zeros(const CommonArgs& a) {
    const hpk::HarmonicFn f = hpk::harmonic_fn_from_json(read_json_arg(a.f_json));
    const hpk::Alpha alpha = parse_alpha(a.alpha_text);
    emit(hpk::to_json(hpk::product_zeros(f, alpha, a.tol)));
}

void cmd_experiment(const CommonArgs& a) {
    const hpk::ExperimentSummary s = hpk::run_experiment(a.experiment);
    // Wall time goes to stderr only; stdout stays byte-identical across
    // reruns and thread counts.
    std::cerr << "experiment wall time: " << s.wall_time << " s\n";
    for (const std::string& reason : s.skip_reasons) {
        std::cerr << "skip: " << reason << "\n";
    }
    emit(hpk::to_json(s));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Products of planar harmonic polynomials: cofactor construction, "
        "harmonicity verdicts, Dirichlet-trace audits, and zero counting"};
    app.require_subcommand(1);

    CommonArgs args;

    auto add_f = [&](CLI::App* cmd) {
        cmd->add_option("--f", args.f_json,
                        "harmonic function as JSON {\"h\":...,\"g\":...} or @file")
            ->required();
    };
    auto add_alpha = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", args.alpha_text, "nonzero real scale")
            ->required();
    };

    CLI::App* check = app.add_subcommand(
        "check-product", "Is the pointwise product of two harmonic functions harmonic?");
    add_f(check);
    check->add_option("--F", args.F_json, "second factor as JSON or @file")
        ->required();
    check->callback([&] { cmd_check_product(args); });

    CLI::App* cof = app.add_subcommand(
        "cofactor", "Cofactor F and harmonic product fF for a given alpha");
    add_f(cof);
    add_alpha(cof);
    cof->callback([&] { cmd_cofactor(args); });

    CLI::App* dil = app.add_subcommand(
        "dilatation", "Second complex dilatation g'/h' as an unreduced quotient");
    add_f(dil);
    dil->callback([&] { cmd_dilatation(args); });

    CLI::App* sq = app.add_subcommand(
        "square-check", "Is f^2 harmonic? (iff h or g is constant)");
    add_f(sq);
    sq->callback([&] { cmd_square_check(args); });

    CLI::App* dir = app.add_subcommand(
        "dirichlet",
        "Solve the disk Dirichlet problem for trig-polynomial data and audit "
        "the claimed cofactor/product traces");
    dir->add_option("--boundary", args.boundary_json,
                    "boundary data {\"phi1\":{...},\"phi2\":{...}} or @file")
        ->required();
    add_alpha(dir);
    dir->add_option("--nodes", args.nodes, "Poisson quadrature nodes")
        ->check(CLI::Range(16, 1 << 20));
    dir->add_option("--samples", args.samples, "boundary audit samples")
        ->check(CLI::Range(64, 1 << 20));
    dir->add_option("--grid-dump", args.grid_dump_path,
                    "write the solution on a polar grid as CSV (r,theta,re,im)");
    dir->add_option("--grid", args.grid, "polar grid size for --grid-dump")
        ->check(CLI::Range(8, 4096));
    dir->add_option("--trace-dump", args.trace_dump_path,
                    "write actual vs claimed cofactor trace as CSV");
    dir->callback([&] { cmd_dirichlet(args); });

    CLI::App* zeros = app.add_subcommand(
        "zeros", "Locate all zeros of f = h + conj(g), deg h > deg g");
    add_f(zeros);
    zeros->add_option("--tol", args.tol, "refinement tolerance")
        ->check(CLI::PositiveNumber);
    zeros->add_option("--csv", args.csv_path, "also write zeros as CSV");
    zeros->callback([&] { cmd_zeros(args); });

    CLI::App* pz = app.add_subcommand(
        "product-zeros",
        "Zeros of f, cofactor F, and fF, with the union and 2n^2 bound checks");
    add_f(pz);
    add_alpha(pz);
    pz->add_option("--tol", args.tol, "refinement tolerance")
        ->check(CLI::PositiveNumber);
    pz->callback([&] { cmd_product_zeros(args); });

    CLI::App* exp = app.add_subcommand(
        "experiment",
        "Seeded random fuzz of the n^2 and 2n^2 zero bounds (HPK_THREADS caps "
        "parallelism)");
    exp->add_option("--seed", args.experiment.seed, "RNG seed")->required();
    exp->add_option("--trials", args.experiment.trials, "number of trials")
        ->required()
        ->check(CLI::Range(1, 1 << 30));
    exp->add_option("--deg-h", args.experiment.deg_h, "degree of h")
        ->required()
        ->check(CLI::Range(1, 64));
    exp->add_option("--deg-g", args.experiment.deg_g, "degree of g")
        ->required()
        ->check(CLI::Range(0, 64));
    exp->add_option("--coeff-box", args.experiment.coeff_box,
                    "coefficient box half-width")
        ->check(CLI::PositiveNumber);
    exp->add_option("--tol", args.experiment.tol, "refinement tolerance")
        ->check(CLI::PositiveNumber);
    exp->callback([&] { cmd_experiment(args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n"
                  << "run with --help for usage\n";
        return 2;
    } catch (const hpk::DomainError& e) {
        emit(Json{{"error",
                   Json{{"code", e.code()}, {"message", e.what()}}}});
        return 1;
    } catch (const std::exception& e) {
        emit(Json{{"error",
                   Json{{"code", "internal"}, {"message", e.what()}}}});
        return 1;
    }
    return 0;
}
