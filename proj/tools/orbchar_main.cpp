#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "orbchar/euler_calculus.hpp"
#include "orbchar/geometry/scenarios.hpp"
#include "orbchar/groupoid.hpp"
#include "orbchar/json_io.hpp"
#include "orbchar/selftest.hpp"

namespace {

// Exit codes: 0 success, 1 semantic failure (invalid mathematical content,
// tolerance or property violation), 2 usage or input-format failure
// (missing file, malformed JSON, unknown scenario, bad flag value).
constexpr int kOk = 0;
constexpr int kSemantic = 1;
constexpr int kUsage = 2;

struct Options {
    std::string command;
    std::string path;
    std::string gamma = "Z";
    std::string scenario;
    std::string format = "text";
    std::string fault;
    int grid = 96;
    int iso_cap = 64;
    double tol = 0.02;
    std::uint64_t seed = 12345;
};

int run_chi(const Options& opt) {
    const orbchar::DefinableSpace space = orbchar::space_from_json(orbchar::load_json_file(opt.path));
    orbchar::validate_space(space);
    const std::int64_t chi = orbchar::euler_char(space);
    if (opt.format == "json")
        std::cout << nlohmann::json{{"chi", chi}}.dump(2) << "\n";
    else
        std::cout << "chi = " << chi << "\n";
    return kOk;
}

int run_invariants(const Options& opt) {
    const orbchar::GroupoidModel model = orbchar::model_from_json(orbchar::load_json_file(opt.path));
    const orbchar::GroupPresentation gamma = orbchar::parse_gamma(opt.gamma);

    const std::int64_t chi = orbchar::euler_char(orbchar::underlying_space(model));
    const orbchar::RingElement un = orbchar::chi_un(model, opt.iso_cap);
    const std::int64_t cg = orbchar::chi_gamma(model, gamma);
    const orbchar::Rational es = orbchar::chi_es(model);
    const orbchar::Rational ges = orbchar::chi_gamma_es(model, gamma);

    if (opt.format == "json") {
        nlohmann::json j{{"chi", chi},
                         {"chi_un", orbchar::ring_to_json(un)},
                         {"gamma", orbchar::gamma_to_string(gamma)},
                         {"chi_gamma", cg},
                         {"chi_es", es.to_string()},
                         {"chi_es_approx", es.to_double()},
                         {"chi_gamma_es", ges.to_string()},
                         {"chi_gamma_es_approx", ges.to_double()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "chi = " << chi << "\n"
                  << "chi_un = " << un.to_string() << "\n"
                  << "chi_gamma[" << orbchar::gamma_to_string(gamma) << "] = " << cg << "\n"
                  << "chi_es = " << es << "\n"
                  << "chi_gamma_es[" << orbchar::gamma_to_string(gamma) << "] = " << ges << "\n";
    }
    return kOk;
}

int run_gb(const Options& opt) {
    const orbchar::GbReport rep = orbchar::run_scenario(opt.scenario, opt.grid);
    const bool pass = rep.abs_error <= opt.tol;
    if (opt.format == "json") {
        nlohmann::json parts = nlohmann::json::object();
        for (const auto& [name, value] : rep.parts) parts[name] = value;
        nlohmann::json j{{"scenario", rep.scenario}, {"grid", rep.grid},
                         {"value", rep.value},       {"expected", rep.expected},
                         {"abs_error", rep.abs_error}, {"tol", opt.tol},
                         {"pass", pass},             {"parts", parts}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "scenario " << rep.scenario << " (grid " << rep.grid << ")\n";
        for (const auto& [name, value] : rep.parts)
            std::cout << "  " << name << " = " << value << "\n";
        std::cout << "value = " << rep.value << "\n"
                  << "expected = " << rep.expected << "\n"
                  << "abs_error = " << rep.abs_error << " (tol " << opt.tol << ")\n"
                  << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kOk : kSemantic;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Euler-characteristic invariants of orbit space groupoids"};
    app.require_subcommand(1);

    CLI::App* chi = app.add_subcommand("chi", "Euler characteristic of a definable space");
    chi->add_option("space", opt.path, "space JSON file")->required();
    chi->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* inv = app.add_subcommand("invariants", "all invariants of a groupoid model");
    inv->add_option("model", opt.path, "model JSON file")->required();
    inv->add_option("--gamma", opt.gamma, "source group: Z, Z^k, or Z/n (default Z)");
    inv->add_option("--iso-cap", opt.iso_cap, "isomorphism-merge order cap")->check(CLI::Range(1, 512));
    inv->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* gb = app.add_subcommand("gb", "numeric curvature-integral check of chi");
    gb->add_option("scenario", opt.scenario, "one of: point-in-r2, circle-in-r2, s2-in-r3, gb1-su2")
        ->required();
    gb->add_option("--grid", opt.grid, "angular samples per full circle (default 96)")
        ->check(CLI::Range(8, 4096));
    gb->add_option("--tol", opt.tol, "pass tolerance on |value - expected| (default 0.02)");
    gb->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* self = app.add_subcommand("selftest", "deterministic property suite");
    self->add_option("--seed", opt.seed, "random seed (default 12345)");
    self->add_option("--inject-fault", opt.fault, "inject a known defect (chi-sign)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (chi->parsed()) return run_chi(opt);
        if (inv->parsed()) return run_invariants(opt);
        if (gb->parsed()) return run_gb(opt);
        return orbchar::run_selftest(opt.seed, opt.fault, std::cout);
    } catch (const orbchar::JsonReadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const orbchar::UnknownScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const orbchar::PresentationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSemantic;
    }
}
