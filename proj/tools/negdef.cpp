// negdef: generate, check, complete and verify exceptional curve systems.
//
// Exit codes: 0 every checked property holds, 1 a property failed (the
// report carries a witness), 2 the input or the flags are invalid.

#include "negdef/io.hpp"
#include "negdef/stratified.hpp"
#include "negdef/sweep.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using negdef::io::json;
namespace toric = negdef::toric;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

struct Common {
    std::string input = "-";
    std::string output = "-";
    bool timing = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw negdef::InvalidInput("cannot open input file '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned int i = 0; i < length; ++i) {
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return "sha256:" + out.str();
}

struct Outcome {
    int code = kPass;
    json body;
};

void write_output(const Common& common, const json& body) {
    const std::string text = body.dump(2) + "\n";
    if (common.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(common.output, std::ios::binary);
    if (!out) {
        throw negdef::InvalidInput("cannot open output file '" + common.output + "'");
    }
    out << text;
}

json make_report(const std::string& command, const std::string& digest, bool pass) {
    return json{{"command", command}, {"input_digest", digest}, {"verdict", pass ? "pass" : "fail"}};
}

negdef::CompletionMode parse_mode(const std::string& mode) {
    return mode == "minimal" ? negdef::CompletionMode::minimal : negdef::CompletionMode::scaled;
}

std::string mode_name(negdef::CompletionMode mode) {
    return mode == negdef::CompletionMode::minimal ? "minimal" : "scaled";
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
    std::string kind;
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::string family;
    int rank = 0;
};

Outcome cmd_gen(const GenArgs& args) {
    json body;
    if (args.kind == "hj") {
        const auto fan = toric::build_fan(args.n, args.q);
        body = negdef::io::to_json(fan);
        const auto sys = toric::curve_matrix(fan);
        body["labels"] = sys.labels();
        body["matrix"] = negdef::io::to_json(sys.matrix());
        body["divisor"] = negdef::io::toric_divisor_to_json(toric::ToricDivisor::zero(fan));
    } else {
        toric::AdeFamily family;
        if (args.family == "A") {
            family = toric::AdeFamily::A;
        } else if (args.family == "D") {
            family = toric::AdeFamily::D;
        } else if (args.family == "E") {
            family = toric::AdeFamily::E;
        } else {
            throw negdef::InvalidInput("family must be A, D or E");
        }
        body = negdef::io::to_json(toric::ade_matrix(family, args.rank));
        body["family"] = args.family;
        body["rank"] = args.rank;
    }
    return {kPass, body};
}

// ---- check-negdef ------------------------------------------------------------

Outcome cmd_check_negdef(const Common& common, const std::string& command) {
    const std::string text = read_input(common.input);
    const json in = negdef::io::parse(text);
    const negdef::QMatrix m = negdef::io::matrix_from_json(in.is_array() ? in : in.at("matrix"));
    const auto cert = negdef::is_negative_definite(m);
    json report = make_report(command, sha256_hex(text), cert.negative_definite);
    report["order"] = m.order();
    report["certificate"] = negdef::io::to_json(cert);
    report["det"] = negdef::io::to_json(negdef::det(m));
    return {cert.negative_definite ? kPass : kFail, report};
}

// ---- complete ----------------------------------------------------------------

Outcome cmd_complete(const Common& common, const std::string& mode, const std::string& command) {
    const std::string text = read_input(common.input);
    const json in = negdef::io::parse(text);
    negdef::CurveSystem sys;
    negdef::PairingVector d;
    if (in.contains("n") && in.contains("q")) {
        const auto inst = negdef::io::toric_from_json(in);
        sys = toric::curve_matrix(inst.fan);
        d = toric::pairing(inst.fan, inst.divisor);
    } else {
        sys = negdef::io::curve_system_from_json(in);
        if (!in.contains("d")) {
            throw negdef::InvalidInput("missing field 'd' (pairings D.C_i)");
        }
        d = negdef::io::pairing_from_json(in.at("d"));
    }
    const auto result = negdef::exceptional_completion(sys, d, parse_mode(mode));
    json report = make_report(command, sha256_hex(text), true);
    report["mode"] = mode_name(result.mode);
    report["labels"] = sys.labels();
    report["d"] = negdef::io::to_json(d);
    report["e"] = negdef::io::to_json(result.e);
    report["residuals"] = negdef::io::to_json(result.residuals);
    if (result.mode == negdef::CompletionMode::scaled) {
        report["multiplier"] = result.multiplier.get_str();
    } else {
        report["active_set"] = result.active_set;
        report["iterations"] = result.iterations;
    }
    return {kPass, report};
}

// ---- stratify ------------------------------------------------------------------

Outcome cmd_stratify(const Common& common, const std::string& command) {
    const std::string text = read_input(common.input);
    const json in = negdef::io::parse(text);
    const auto ss = negdef::io::stratified_from_json(in);
    const auto comb = negdef::stratified_combination(ss);
    json strata = json::array();
    for (const auto& s : comb) {
        json integral = json::array();
        for (const auto& v : s.combination.integral) {
            integral.push_back(v.get_str());
        }
        strata.push_back(json{{"e", s.e},
                              {"combination", integral},
                              {"multiplier", s.multiplier.get_str()},
                              {"totals", negdef::io::to_json(s.totals)}});
    }
    json report = make_report(command, sha256_hex(text), true);
    report["strata"] = strata;
    if (in.contains("d")) {
        std::vector<negdef::PairingVector> d;
        std::vector<negdef::PairingVector> b;
        for (const auto& v : in.at("d")) {
            d.push_back(negdef::io::pairing_from_json(v));
        }
        if (in.contains("b")) {
            for (const auto& v : in.at("b")) {
                b.push_back(negdef::io::pairing_from_json(v));
            }
        } else {
            for (const auto& v : d) {
                b.emplace_back(v.size());
            }
        }
        const auto descent = negdef::effectivity_descent(ss, d, b);
        json coeffs = json::array();
        for (const auto& c : descent.coefficients) {
            coeffs.push_back(negdef::io::to_json(c));
        }
        report["descent"] = coeffs;
    }
    return {kPass, report};
}

// ---- verify --------------------------------------------------------------------

struct VerifyArgs {
    std::string kind;
    std::int64_t tmax = 5;
    std::int64_t window = 0;  // 0 = default radius
    std::string e;            // "" = from input or computed, "0" = forced zero, else JSON
    std::string mode = "scaled";
    std::vector<std::string> t;  // explicit samples instead of the breakpoint grid
};

Outcome cmd_verify(const VerifyArgs& args, const Common& common, const std::string& command) {
    const std::string text = read_input(common.input);
    const json in = negdef::io::parse(text);
    auto inst = negdef::io::toric_from_json(in);
    const auto& fan = inst.fan;
    json report = make_report(command, sha256_hex(text), true);
    report["fan"] = negdef::io::to_json(fan);
    report["divisor"] = negdef::io::toric_divisor_to_json(inst.divisor);
    report["pairing"] = negdef::io::to_json(toric::pairing(fan, inst.divisor));

    toric::Verdict verdict;
    if (args.kind == "nakayama") {
        toric::ToricDivisor e;
        std::string source;
        if (args.e == "0") {
            e = toric::ToricDivisor::zero(fan);
            source = "forced-zero";
        } else if (!args.e.empty()) {
            e = negdef::io::toric_divisor_from_json(fan, negdef::io::parse(args.e));
            source = "flag";
        } else if (inst.e) {
            e = *inst.e;
            source = "input";
        } else {
            const auto completion = negdef::exceptional_completion(
                toric::curve_matrix(fan), toric::pairing(fan, inst.divisor), parse_mode(args.mode));
            e = toric::ToricDivisor::from_exceptional(fan, completion.e);
            source = "completion-" + mode_name(completion.mode);
        }
        const std::int64_t radius = args.window > 0
                                        ? args.window
                                        : toric::default_window_radius(fan, inst.divisor, e, args.tmax);
        negdef::RatVector samples;
        for (const auto& t : args.t) {
            samples.push_back(negdef::parse_rat(t));
        }
        if (samples.empty()) {
            samples = toric::t_grid(inst.divisor, e, args.tmax);
        }
        verdict = toric::verify_nakayama(fan, inst.divisor, e, samples, toric::Window::square(radius));
        report["e"] = negdef::io::toric_divisor_to_json(e);
        report["e_source"] = source;
        report["tmax"] = args.tmax;
    } else {
        const std::int64_t radius =
            args.window > 0 ? args.window
                            : toric::default_window_radius(fan, inst.divisor, toric::ToricDivisor::zero(fan), 1);
        verdict = toric::verify_reflexive(fan, inst.divisor, toric::Window::square(radius));
    }
    report["verdict"] = verdict.pass ? "pass" : "fail";
    report["result"] = negdef::io::to_json(verdict);
    return {verdict.pass ? kPass : kFail, report};
}

// ---- sweep ---------------------------------------------------------------------

Outcome cmd_sweep(negdef::sweep::Options options, const std::string& mode,
              const std::string& command) {
    options.mode = parse_mode(mode);
    const auto result = negdef::sweep::run(options);
    json report = make_report(command, sha256_hex(command), result.ok());
    report.update(negdef::sweep::report(options, result));
    return {result.ok() ? kPass : kFail, report};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact negative-definite curve systems, exceptional completions and toric checks"};
    app.require_subcommand(1);
    Common common;

    auto add_io = [&](CLI::App* sub, bool with_input) {
        if (with_input) {
            sub->add_option("-i,--input", common.input, "input JSON file ('-' for stdin)");
        }
        sub->add_option("-o,--output", common.output, "report file ('-' for stdout)");
        sub->add_flag("--timing", common.timing, "append wall-clock timing to the report");
    };

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    gen->add_option("kind", gen_args.kind, "hj | ade")->required()->check(CLI::IsMember({"hj", "ade"}));
    gen->add_option("--n", gen_args.n, "cyclic quotient order n");
    gen->add_option("--q", gen_args.q, "cyclic quotient weight q");
    gen->add_option("--family", gen_args.family, "A | D | E");
    gen->add_option("--rank", gen_args.rank, "Dynkin rank");
    add_io(gen, false);

    auto* check = app.add_subcommand("check-negdef", "certify negative definiteness of a matrix");
    add_io(check, true);

    std::string mode = "scaled";
    auto* complete = app.add_subcommand("complete", "effective exceptional completion of a divisor");
    complete->add_option("--mode", mode, "scaled | minimal")->check(CLI::IsMember({"scaled", "minimal"}));
    add_io(complete, true);

    auto* stratify = app.add_subcommand("stratify", "stratified negative combination and descent");
    add_io(stratify, true);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check the pushforward equality on a toric instance");
    verify->add_option("kind", verify_args.kind, "nakayama | reflexive")
        ->required()
        ->check(CLI::IsMember({"nakayama", "reflexive"}));
    verify->add_option("--tmax", verify_args.tmax, "largest sampled t")->check(CLI::PositiveNumber);
    verify->add_option("--window", verify_args.window, "window radius (default: derived)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--e", verify_args.e, "'0' or a JSON object of exceptional coefficients");
    verify->add_option("--t", verify_args.t, "explicit t samples, e.g. --t 1 --t 3/2")
        ->delimiter(',');
    verify->add_option("--mode", verify_args.mode, "completion mode when E is computed")
        ->check(CLI::IsMember({"scaled", "minimal"}));
    add_io(verify, true);

    negdef::sweep::Options sweep_options;
    std::string sweep_mode = "scaled";
    auto* sweep = app.add_subcommand("sweep", "end-to-end check over all (n, q) up to n-max");
    sweep->add_option("--n-max", sweep_options.n_max, "largest n")->check(CLI::Range(2, 1000));
    sweep->add_option("--divisors", sweep_options.divisors, "random divisors per (n, q)");
    sweep->add_option("--seed", sweep_options.seed, "random seed");
    sweep->add_option("--tmax", sweep_options.tmax, "largest sampled t")->check(CLI::PositiveNumber);
    sweep->add_option("--jobs", sweep_options.jobs, "worker threads")->check(CLI::Range(1, 256));
    sweep->add_option("--mode", sweep_mode, "scaled | minimal")->check(CLI::IsMember({"scaled", "minimal"}));
    add_io(sweep, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInvalid;
    }

    std::string command;
    for (int i = 1; i < argc; ++i) {
        command += (i > 1 ? " " : "") + std::string(argv[i]);
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{kInvalid, nullptr};
    try {
        if (*gen) {
            outcome = cmd_gen(gen_args);
        } else if (*check) {
            outcome = cmd_check_negdef(common, command);
        } else if (*complete) {
            outcome = cmd_complete(common, mode, command);
        } else if (*stratify) {
            outcome = cmd_stratify(common, command);
        } else if (*verify) {
            outcome = cmd_verify(verify_args, common, command);
        } else if (*sweep) {
            outcome = cmd_sweep(sweep_options, sweep_mode, command);
        }
    } catch (const negdef::InvariantBroken& e) {
        std::cerr << "negdef: internal invariant broken: " << e.what() << "\n";
        return kFail;
    } catch (const negdef::Error& e) {
        std::cerr << "negdef: " << e.what() << "\n";
        return kInvalid;
    } catch (const json::exception& e) {
        std::cerr << "negdef: malformed input: " << e.what() << "\n";
        return kInvalid;
    }
    // Timing is opt-in so that default reports stay byte-identical.
    if (common.timing && !*gen) {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        outcome.body["timing"] = {{"seconds", elapsed.count()}};
    }
    try {
        write_output(common, outcome.body);
    } catch (const negdef::Error& e) {
        std::cerr << "negdef: " << e.what() << "\n";
        return kInvalid;
    }
    return outcome.code;
}
