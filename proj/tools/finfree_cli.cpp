// Command-line driver for finite free convolution experiments.
//
// Exit codes: 0 success, 2 input validation failure, 3 precision budget
// exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "finfree/experiments.hpp"
#include "finfree/serialize.hpp"

namespace {

using namespace finfree;

struct GlobalOptions {
    unsigned precision_bits = 0;
    std::string out;
    std::string format = "csv";
};

void emit_table(const GlobalOptions& g, const Table& table) {
    std::ostringstream buffer;
    if (g.format == "json")
        write_json_rows(buffer, table);
    else
        write_csv(buffer, table);
    if (g.out.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream file(g.out);
        if (!file) throw std::invalid_argument("cannot open output file: " + g.out);
        file << buffer.str();
    }
}

std::vector<unsigned long> parse_schedule(const std::string& csv) {
    std::vector<unsigned long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoul(item));
    }
    if (out.empty()) throw std::invalid_argument("empty schedule");
    return out;
}

std::vector<unsigned long> default_n_schedule() {
    return {2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite free multiplicative convolution toolkit"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--precision-bits", g.precision_bits, "working precision override (bits)");
    app.add_option("--out", g.out, "output file (default: stdout)");
    app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // convolve
    auto* convolve = app.add_subcommand("convolve", "finite free convolution of two polynomial files");
    std::string conv_p, conv_q, conv_mode = "mult";
    convolve->add_option("p", conv_p, "first polynomial (JSON)")->required();
    convolve->add_option("q", conv_q, "second polynomial (JSON)")->required();
    convolve->add_option("--mode", conv_mode, "mult or add")->check(CLI::IsMember({"mult", "add"}));

    // lln
    auto* lln = app.add_subcommand("lln", "limit roots of the n-fold power, exactly");
    std::string lln_input, lln_poly_out;
    lln->add_option("input", lln_input, "polynomial file (JSON)")->required();
    lln->add_option("--poly-out", lln_poly_out, "write the limit polynomial JSON here");

    // converge
    auto* converge = app.add_subcommand("converge", "empirical verification of the root LLN");
    std::string converge_input, converge_schedule;
    double converge_rel_tol = 1e-30;
    converge->add_option("input", converge_input, "seed polynomial file (JSON)")->required();
    converge->add_option("--n", converge_schedule, "comma-separated n schedule (default powers of two up to 1024)");
    converge->add_option("--rel-tol", converge_rel_tol, "root solver relative tolerance");

    // conjecture
    auto* conjecture = app.add_subcommand("conjecture", "degree sweep against the LLN limit law");
    std::string conj_family = "laguerre", conj_measure, conj_schedule = "10,20,50,100,200";
    conjecture->add_option("--family", conj_family, "laguerre, two-root, or discretize")
        ->check(CLI::IsMember({"laguerre", "two-root", "discretize"}));
    conjecture->add_option("--measure", conj_measure, "measure JSON file (discretize family)");
    conjecture->add_option("--d", conj_schedule, "comma-separated degree schedule");

    // rate-d2
    auto* rate = app.add_subcommand("rate-d2", "degree-2 rate study with the closed-form roots");
    unsigned long rate_n_max = 64;
    rate->add_option("--n-max", rate_n_max, "largest power (rows n = 1..n_max)");

    // phi
    auto* phi = app.add_subcommand("phi", "quantile table of the limit law of a measure");
    std::string phi_measure;
    unsigned phi_points = 100;
    phi->add_option("measure", phi_measure, "measure JSON file")->required();
    phi->add_option("--points", phi_points, "number of grid points");

    CLI11_PARSE(app, argc, argv);

    try {
        if (convolve->parsed()) {
            Json jp = load_json_file(conv_p);
            Json jq = load_json_file(conv_q);
            Json result;
            if (conv_mode == "mult") {
                SymmetricProfile pp = profile_from_json(jp);
                SymmetricProfile qq = profile_from_json(jq);
                result = profile_to_json(multiplicative_convolve(pp, qq));
            } else {
                BigPoly pp = poly_from_json(jp);
                BigPoly qq = poly_from_json(jq);
                result = poly_to_json(additive_convolve(pp, qq));
            }
            if (g.out.empty())
                std::cout << result.dump(2) << '\n';
            else
                save_json_file(g.out, result);
        } else if (lln->parsed()) {
            SymmetricProfile profile = profile_from_json(load_json_file(lln_input));
            LlnResult result = run_lln(profile);
            emit_table(g, lln_table(result));
            if (!lln_poly_out.empty()) save_json_file(lln_poly_out, poly_to_json(result.limit_polynomial));
        } else if (converge->parsed()) {
            SymmetricProfile seed = profile_from_json(load_json_file(converge_input));
            SolveOptions opts;
            opts.rel_tol = converge_rel_tol;
            opts.precision_bits = g.precision_bits;
            auto schedule = converge_schedule.empty() ? default_n_schedule()
                                                      : parse_schedule(converge_schedule);
            emit_table(g, converge_table(run_converge(seed, schedule, opts)));
        } else if (conjecture->parsed()) {
            ConjectureSeed family = ConjectureSeed::laguerre;
            if (conj_family == "two-root") family = ConjectureSeed::two_root;
            if (conj_family == "discretize") family = ConjectureSeed::discretize;
            std::optional<MeasureSpec> mu;
            if (!conj_measure.empty()) mu = measure_from_json(load_json_file(conj_measure));
            std::vector<unsigned> ds;
            for (unsigned long v : parse_schedule(conj_schedule)) ds.push_back(static_cast<unsigned>(v));
            emit_table(g, conjecture_table(run_conjecture(family, mu, ds)));
        } else if (rate->parsed()) {
            SolveOptions opts;
            opts.precision_bits = g.precision_bits;
            emit_table(g, rate_table(run_rate_d2(rate_n_max, opts)));
        } else if (phi->parsed()) {
            MeasureSpec mu = measure_from_json(load_json_file(phi_measure));
            emit_table(g, phi_table(run_phi_table(mu, phi_points)));
        }
    } catch (const precision_error& e) {
        std::cerr << "precision budget exceeded: " << e.what()
                  << " (achieved " << e.achieved_tolerance() << ")\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
