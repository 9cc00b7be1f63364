#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohomcheck/cli.hpp"
#include "cohomcheck/errors.hpp"

namespace {

// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 bad usage.
int emit(const cohomcheck::VerificationReport& rep, const std::string& format,
         const std::string& output) {
    std::string text = (format == "json") ? cohomcheck::to_json(rep)
                                          : cohomcheck::to_text(rep);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "cannot open output file: " << output << "\n";
            return 2;
        }
        out << text;
    }
    return rep.all_passed() ? 0 : 1;
}

void apply_config_file(cohomcheck::RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    nlohmann::json j;
    in >> j;
    if (j.contains("prime_powers")) {
        cfg.prime_powers.clear();
        for (const auto& pe : j.at("prime_powers"))
            cfg.prime_powers.emplace_back(pe.at(0).get<long>(),
                                          pe.at(1).get<long>());
    }
    if (j.contains("with_oracle")) cfg.with_oracle = j.at("with_oracle").get<bool>();
    if (j.contains("identity_k_max")) cfg.identity_k_max = j.at("identity_k_max").get<long>();
    if (j.contains("case_k_max")) cfg.case_k_max = j.at("case_k_max").get<long>();
    if (j.contains("lemma_k_max")) cfg.lemma_k_max = j.at("lemma_k_max").get<long>();
    if (j.contains("divisibility_q_max"))
        cfg.divisibility_q_max = j.at("divisibility_q_max").get<long>();
    if (j.contains("torsion_primes"))
        cfg.torsion_primes = j.at("torsion_primes").get<std::vector<long>>();
    if (j.contains("torsion_k_max")) cfg.torsion_k_max = j.at("torsion_k_max").get<long>();
    if (j.contains("oracle_p_max")) cfg.oracle_p_max = j.at("oracle_p_max").get<long>();
    if (j.contains("oracle_k_max")) cfg.oracle_k_max = j.at("oracle_k_max").get<long>();
    if (j.contains("force")) cfg.force = j.at("force").get<bool>();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench: binomial lemmas, an equational "
                 "identity, determinantal membership certificates, and a "
                 "p-torsion refutation oracle"};
    app.set_version_flag("--version", cohomcheck::kToolVersion);
    app.require_subcommand(1);

    cohomcheck::RunConfig cfg;
    std::string format = "text";
    std::string output;
    std::string config_path;
    long opt_p = 0;
    long opt_e = 1;

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->require_subcommand(1);

    CLI::App* hoch = verify->add_subcommand(
        "hochster", "determinantal membership certificates and their oracle");
    hoch->add_option("--p", opt_p, "prime (default: the built-in list)");
    hoch->add_option("--e", opt_e, "exponent, q = p^e (default 1)");
    bool no_oracle = false;
    hoch->add_flag("--no-oracle", no_oracle, "skip the linear-solver cross-check");

    CLI::App* ident = verify->add_subcommand(
        "identity", "expand the equational identity and replay its proof");
    ident->add_option("--k-max", cfg.identity_k_max, "expansion bound (default 12)");
    ident->add_option("--case-k-max", cfg.case_k_max,
                      "coefficient-case bound (default 8)");

    CLI::App* lem = verify->add_subcommand(
        "lemmas", "binomial lemmas, their certificates, the divisibility family");
    lem->add_option("--k-max", cfg.lemma_k_max, "sweep bound (default 8)");
    lem->add_option("--q-max", cfg.divisibility_q_max,
                    "divisibility family bound (default 128)");

    CLI::App* tor = verify->add_subcommand(
        "torsion", "hypersurface quotient: annihilation and non-membership");
    tor->add_option("--primes", cfg.torsion_primes,
                    "primes to check (default: first ten)");
    tor->add_option("--k-max", cfg.torsion_k_max,
                    "cofactor uniqueness bound (default 20)");
    tor->add_option("--oracle-p-max", cfg.oracle_p_max,
                    "refutation oracle prime bound (default 5)");
    tor->add_option("--oracle-k-max", cfg.oracle_k_max,
                    "refutation oracle k bound (default 3)");

    CLI::App* all = verify->add_subcommand("all", "every suite");
    all->add_option("--config", config_path, "JSON file overriding the defaults")
        ->check(CLI::ExistingFile);

    for (CLI::App* sub : {hoch, ident, lem, tor, all}) {
        sub->add_option("--format", format, "text or json (default text)")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", output, "write the report to a file");
        sub->add_flag("--force", cfg.force, "override the library size guards");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (hoch->parsed()) {
            cfg.command = "hochster";
            if (opt_p != 0) cfg.prime_powers = {{opt_p, opt_e}};
            if (no_oracle) cfg.with_oracle = false;
        } else if (ident->parsed()) {
            cfg.command = "identity";
        } else if (lem->parsed()) {
            cfg.command = "lemmas";
        } else if (tor->parsed()) {
            cfg.command = "torsion";
        } else {
            cfg.command = "all";
            if (!config_path.empty()) apply_config_file(cfg, config_path);
        }
        return emit(cohomcheck::run(cfg), format, output);
    } catch (const cohomcheck::SizeGuardError& err) {
        std::cerr << "refused: " << err.what() << "\n";
        return 2;
    } catch (const cohomcheck::OutOfRangeError& err) {
        std::cerr << "bad parameters: " << err.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& err) {
        std::cerr << "bad config file: " << err.what() << "\n";
        return 2;
    } catch (const cohomcheck::Error& err) {
        std::cerr << "verification error: " << err.what() << "\n";
        return 1;
    }
}
