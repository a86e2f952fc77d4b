// spin4: intersection lattices, Dehn twist actions and 10/8-type obstructions.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "spin4/cli.hpp"

namespace {

int emit(const spin4::cli::CommandResult& r) {
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}

std::optional<spin4::NamedInvolution> parse_named(const std::string& name, std::size_t m, std::size_t n) {
    using spin4::NamedInvolutionKind;
    if (name.empty()) return std::nullopt;
    if (name == "f_S") return spin4::NamedInvolution{NamedInvolutionKind::f_S, 0, 0};
    if (name == "f_K") return spin4::NamedInvolution{NamedInvolutionKind::f_K, 1, 0};
    return spin4::NamedInvolution{NamedInvolutionKind::f_mn, m, n};
}

} // namespace

int main(int argc, char** argv) {
    namespace cli = spin4::cli;

    CLI::App app{"Exact intersection-lattice calculator and finite-order realization checks for spin 4-manifolds"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit a JSON report instead of text");

    std::string manifest;

    auto* info = app.add_subcommand("info", "Rank, signature, parity and unimodularity of a manifest");
    info->add_option("manifest", manifest, "Manifest JSON file")->required()->check(CLI::ExistingFile);

    auto* dehn = app.add_subcommand("dehn-twist", "Check the Dehn twist about a (+-2)-sphere class");
    std::string vector_text;
    int square = 0;
    dehn->add_option("manifest", manifest, "Manifest JSON file")->required()->check(CLI::ExistingFile);
    dehn->add_option("--vector,-v", vector_text, "Sphere class, comma separated, e.g. 1,-1,0,0")->required();
    dehn->add_option("--square,-s", square, "Declared self-intersection, 2 or -2")
        ->required()
        ->check(CLI::IsMember({2, -2}));

    auto* inv = app.add_subcommand("involution", "Check whether an involution of the lattice is realizable");
    std::string matrix_path, named;
    std::size_t m = 1, n = 0;
    bool reverse = false;
    inv->add_option("manifest", manifest, "Manifest JSON file")->required()->check(CLI::ExistingFile);
    auto* matrix_opt = inv->add_option("--matrix", matrix_path, "Matrix JSON file")->check(CLI::ExistingFile);
    auto* named_opt = inv->add_option("--named", named, "Named involution")->check(CLI::IsMember({"f_S", "f_K", "f_mn"}));
    matrix_opt->excludes(named_opt);
    inv->add_option("--m", m, "K3 summands for f_mn")->check(CLI::PositiveNumber);
    inv->add_option("--n", n, "S2xS2 summands for f_mn")->check(CLI::NonNegativeNumber);
    inv->add_flag("--reverse-orientation", reverse, "Reverse orientation when sigma > 0");

    auto* bu = app.add_subcommand("borsuk-ulam", "Degree constraints for Z/4-maps of representation spheres");
    spin4::BUParameters params;
    bu->add_option("m0", params.m0)->required()->check(CLI::NonNegativeNumber);
    bu->add_option("m1", params.m1)->required()->check(CLI::NonNegativeNumber);
    bu->add_option("n0", params.n0)->required()->check(CLI::NonNegativeNumber);
    bu->add_option("n1", params.n1)->required()->check(CLI::NonNegativeNumber);

    auto* sweep = app.add_subcommand("sweep", "Tabulate a parameter grid from a config file");
    std::string config, jsonl_path;
    bool jsonl_only = false;
    sweep->add_option("config", config, "Sweep config JSON file")->required()->check(CLI::ExistingFile);
    sweep->add_option("--jsonl", jsonl_path, "Also write rows as JSON Lines to this file");
    sweep->add_flag("--rows", jsonl_only, "Print JSON Lines rows instead of the table");

    auto* rep = app.add_subcommand("rep-ring", "Arithmetic in R(Z/4) = Z[t]/(t^4 - 1)");
    rep->require_subcommand(1);
    auto* eval = rep->add_subcommand("eval", "Character value of a polynomial in t at a group element");
    std::string polynomial, at;
    eval->add_option("polynomial", polynomial, "e.g. \"2 - t - t^3\"")->required();
    eval->add_option("--at", at, "Group element")->required()->check(CLI::IsMember({"1", "j", "-1", "-j"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitInputError;
    }

    const cli::OutputOptions opts{json};
    try {
        if (*info) return emit(cli::cmd_lattice_info(manifest, opts));
        if (*dehn) {
            return emit(cli::cmd_check_dehn_twist(manifest, cli::parse_vector(vector_text), square, opts));
        }
        if (*inv) {
            cli::InvolutionSource src;
            if (!matrix_path.empty()) src.matrix_path = matrix_path;
            src.named = parse_named(named, m, n);
            return emit(cli::cmd_check_involution(manifest, src, {reverse, std::nullopt}, opts));
        }
        if (*bu) return emit(cli::cmd_borsuk_ulam(params, opts));
        if (*sweep) {
            cli::SweepOptions so;
            if (!jsonl_path.empty()) so.jsonl_path = jsonl_path;
            so.jsonl_only = jsonl_only;
            return emit(cli::cmd_sweep(config, so));
        }
        if (*eval) return emit(cli::cmd_rep_ring_eval(polynomial, at, opts));
    } catch (const spin4::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitInputError;
    }
    return cli::kExitInputError;
}
