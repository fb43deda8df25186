#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "widthlab/widthlab.hpp"

// widthlab CLI. Every command is deterministic given its flags; repeated
// runs are byte-identical. Exit codes: 0 success, 1 verification failure,
// 2 usage or I/O error.

namespace {

using namespace widthlab;

AnyPolytope resolve_body(const std::string& body, const std::string& file) {
    if (body.empty() && file.empty())
        throw std::runtime_error("one of --body or --file is required");
    if (!body.empty()) return make_body(parse_body(body));
    return load_polytope(file);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

int cmd_verify() {
    const VerifyReport rep = run_verify();
    write_verify_table(std::cout, rep);
    return rep.all_pass() ? 0 : 1;
}

int cmd_moments(const std::string& body, const std::string& file, unsigned k,
                const std::string& method, std::size_t n_theta, std::size_t n_phi, std::uint64_t n,
                std::uint64_t seed) {
    const AnyPolytope poly = resolve_body(body, file);
    const MomentEstimate est = std::visit(
        [&](const auto& p) {
            if (method == "mc" || method == "monte-carlo") return moment_monte_carlo(p, k, n, seed);
            constexpr std::size_t N = std::decay_t<decltype(p)>::dimension;
            if constexpr (N == 2) {
                return moment_quadrature(p, k, circle_grid(n_theta ? n_theta : 65536));
            } else {
                return moment_quadrature(
                    p, k, sphere_grid(n_theta ? n_theta : 2048, n_phi ? n_phi : 1024));
            }
        },
        poly);
    std::cout << to_json(est) << "\n";
    return 0;
}

int cmd_density(const std::string& body, const std::string& file, std::uint64_t n,
                std::uint64_t seed, std::size_t bins, const std::string& out_prefix) {
    if (n == 0) throw std::runtime_error("empty sample: --n must be >= 1");
    const AnyPolytope poly = resolve_body(body, file);
    const WidthSampleSet samples = std::visit(
        [&](const auto& p) { return sample_widths(p, n, seed, body.empty() ? "file" : body); },
        poly);
    const HistogramDensity hist = histogram_density(samples, bins);
    const Ecdf cdf = ecdf(samples);

    auto hist_out = open_out(out_prefix + "_hist.csv");
    write_histogram_csv(hist_out, hist);
    auto ecdf_out = open_out(out_prefix + "_ecdf.csv");
    write_ecdf_csv(ecdf_out, cdf);
    std::cout << "wrote " << out_prefix << "_hist.csv and " << out_prefix << "_ecdf.csv\n";
    return 0;
}

int cmd_width(const std::string& body, const std::string& file, const std::vector<double>& dir) {
    const AnyPolytope poly = resolve_body(body, file);
    std::visit(
        [&](const auto& p) {
            constexpr std::size_t N = std::decay_t<decltype(p)>::dimension;
            if (dir.size() != N)
                throw std::runtime_error("--dir needs exactly " + std::to_string(N) +
                                         " components for this body");
            Vec<N> v;
            for (std::size_t d = 0; d < N; ++d) v[d] = dir[d];
            if (!(norm2(v) > 0.0)) throw std::runtime_error("--dir must be a non-zero vector");
            std::cout << to_json(width(p, normalized(v))) << "\n";
        },
        poly);
    return 0;
}

int cmd_extremes(const std::string& body, const std::string& file, std::size_t coarse,
                 std::size_t refine) {
    const AnyPolytope poly = resolve_body(body, file);
    std::visit([&](const auto& p) { std::cout << to_json(width_extremes(p, coarse, refine)) << "\n"; },
               poly);
    return 0;
}

int cmd_analytic_tetra() {
    std::cout << to_json(tetra::mean_square_width_analytic()) << "\n";
    return 0;
}

int cmd_region_map(std::size_t n_theta, std::size_t n_phi, const std::string& out_path) {
    const auto rows = tetra::region_map(n_theta, n_phi);
    if (out_path.empty()) {
        write_region_map_csv(std::cout, rows);
    } else {
        auto out = open_out(out_path);
        write_region_map_csv(out, rows);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"width functions, moments, and width distributions of convex polytopes"};
    app.require_subcommand(1);

    const std::vector<std::string> body_names{"triangle", "square", "tetra", "cube"};
    std::string body, file, method = "quad", out;
    unsigned k = 1;
    std::uint64_t n = 1000000, seed = 1;
    std::size_t n_theta = 0, n_phi = 0, bins = 64, coarse = 64, refine = 60;
    std::vector<double> dir;

    auto add_body_or_file = [&](CLI::App* cmd) {
        auto* ob = cmd->add_option("--body", body, "canonical body")->check(CLI::IsMember(body_names));
        auto* of = cmd->add_option("--file", file, "polytope JSON file");
        ob->excludes(of);
        of->excludes(ob);
    };

    auto* verify = app.add_subcommand("verify", "reproduce every reference constant");

    auto* moments = app.add_subcommand("moments", "width moment E[w^k]");
    add_body_or_file(moments);
    moments->add_option("--k", k, "moment order (default 1)");
    moments->add_option("--method", method, "quad or mc")
        ->check(CLI::IsMember({"quad", "quadrature", "mc", "monte-carlo"}));
    moments->add_option("--n-theta", n_theta, "quadrature azimuthal resolution");
    moments->add_option("--n-phi", n_phi, "quadrature polar resolution (3D)");
    moments->add_option("--n", n, "Monte Carlo sample count (default 1e6)");
    moments->add_option("--seed", seed, "Monte Carlo seed (default 1)");

    auto* density = app.add_subcommand("density", "empirical width histogram and ECDF");
    add_body_or_file(density);
    density->add_option("--n", n, "sample count (default 1e6)");
    density->add_option("--seed", seed, "seed (default 1)");
    density->add_option("--bins", bins, "histogram bins (default 64)");
    density->add_option("--out", out, "output prefix for <prefix>_hist.csv, <prefix>_ecdf.csv")
        ->required();

    auto* width_cmd = app.add_subcommand("width", "width in one direction");
    add_body_or_file(width_cmd);
    width_cmd->add_option("--dir", dir, "direction components, comma separated")
        ->delimiter(',')
        ->required();

    auto* extremes = app.add_subcommand("extremes", "minimum width and diameter");
    add_body_or_file(extremes);
    extremes->add_option("--coarse", coarse, "coarse grid resolution (default 64)");
    extremes->add_option("--refine", refine, "refinement iterations (default 60)");

    auto* analytic = app.add_subcommand("analytic-tetra", "sector pipeline for tetra E[w^2]");

    auto* region = app.add_subcommand("region-map", "surface/contour grid of sqrt(3g/8)");
    region->add_option("--n-theta", n_theta, "grid columns over [0,2pi] (default 64)");
    region->add_option("--n-phi", n_phi, "grid rows over [0,pi] (default 33)");
    region->add_option("--out", out, "output CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) return cmd_verify();
        if (*moments) return cmd_moments(body, file, k, method, n_theta, n_phi, n, seed);
        if (*density) return cmd_density(body, file, n, seed, bins, out);
        if (*width_cmd) return cmd_width(body, file, dir);
        if (*extremes) return cmd_extremes(body, file, coarse, refine);
        if (*analytic) return cmd_analytic_tetra();
        if (*region) return cmd_region_map(n_theta ? n_theta : 64, n_phi ? n_phi : 33, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
