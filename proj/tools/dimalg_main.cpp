// dimalg: exact dimension algebra for graded groups on the command line.
//
// Exit codes: 0 success; 1 domain, validation or internal failure;
// 2 malformed input (syntax, kinds, usage).

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dimalg/corpus.hpp"
#include "dimalg/expr.hpp"
#include "dimalg/json_io.hpp"
#include "dimalg/oracle.hpp"

namespace {

using namespace dimalg;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

cli::Value payload_value(Payload p) {
    return std::visit([](auto&& x) { return cli::Value{std::move(x)}; }, std::move(p));
}

void print_value(const cli::Value& v, const Options& opt) {
    if (opt.json())
        std::cout << cli::to_json_value(v).dump(2) << "\n";
    else
        std::cout << cli::to_text(v) << "\n";
}

int run_eval(const std::string& text, const std::vector<std::string>& binds,
             const Options& opt) {
    cli::Env env;
    for (const std::string& b : binds) {
        auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("--bind expects name=file.json, got '" + b + "'");
        std::string name = b.substr(0, eq);
        if (cli::is_reserved_word(name))
            throw ParseError("'" + name + "' is reserved and cannot be bound");
        auto first = cli::parse_expression(name);
        if (first->op != cli::Expr::Op::Ident)
            throw ParseError("'" + name + "' is not a bindable identifier");
        env[name] = payload_value(load_payload_file(b.substr(eq + 1)));
    }
    auto expr = cli::parse_expression(text);
    cli::Value result = cli::evaluate(*expr, env);
    print_value(result, opt);
    return kExitOk;
}

int run_validate(const std::string& path, const Options& opt) {
    try {
        Payload p = load_payload_file(path);
        if (opt.json()) {
            nlohmann::json j{{"valid", true}, {"value", nullptr}};
            std::visit([&j](const auto& x) { j["value"] = nlohmann::json(x); }, p);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "valid: " << cli::to_text(payload_value(std::move(p))) << "\n";
        }
        return kExitOk;
    } catch (const ValidationError& e) {
        if (opt.json()) {
            nlohmann::json j{{"valid", false},
                             {"error", e.what()},
                             {"violations", violations_json(e.violations)}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "invalid: " << e.what() << "\n";
        }
        return kExitDomain;
    }
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DIMALG_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("DIMALG_SEED is not a number: ") + env);
        }
    }
    return 0;
}

int run_verify(const std::string& mode, std::uint64_t seed, int cases,
               std::vector<std::int64_t> primes, const Options& opt) {
    Corpus corpus(seed);
    int passed = 0;
    nlohmann::json failures = nlohmann::json::array();
    auto record = [&](const VerifyReport& rep) {
        if (rep.pass)
            ++passed;
        else if (failures.size() < 10)
            failures.push_back(nlohmann::json(rep));
    };

    if (mode == "identity") {
        GenOptions opts;
        for (int i = 0; i < cases; ++i) {
            BocksteinFunction a = corpus.function(opts);
            BocksteinFunction b = corpus.function(opts);
            VerifyReport rep;
            rep.case_id = "identity #" + std::to_string(i);
            rep.path_a = "direct sum-product";
            rep.path_b = "dual of smash of duals";
            rep.pass = duality_identity_check(a, b);
            if (!rep.pass) {
                BocksteinFunction via = dual(smash(dual(a), dual(b)));
                rep.note = "sum_product gave " + to_string(sum_product(a, b)) +
                           ", duality route gave " + to_string(via);
            }
            record(rep);
        }
    } else {
        PrimeScope scope = make_scope(std::move(primes));
        GenOptions opts;
        opts.allow_infinities = false;
        opts.prime_pool = scope.primes;
        opts.max_exceptions = static_cast<int>(scope.primes.size());
        for (int i = 0; i < cases; ++i) {
            std::string id = mode + " #" + std::to_string(i);
            if (mode == "smash") {
                BocksteinFunction a = corpus.function(opts);
                BocksteinFunction b = corpus.function(opts);
                record(verify_smash(a, b, scope, {}, id));
            } else if (mode == "dual") {
                BocksteinFunction a = corpus.function(opts);
                std::vector<BocksteinFunction> probes{corpus.function(opts)};
                record(verify_dual(a, scope, probes, {}, id));
            } else {
                BocksteinFunction a = corpus.function(opts);
                record(verify_d_conversion(a, scope, {}, id));
            }
        }
    }

    if (opt.json()) {
        nlohmann::json j{{"mode", mode},     {"seed", seed},          {"cases", cases},
                         {"passed", passed}, {"failures", failures}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << passed << "/" << cases << " pass\n";
        for (const auto& f : failures) std::cout << "failure: " << f.dump() << "\n";
    }
    return passed == cases ? kExitOk : kExitDomain;
}

int run_testspace(const std::string& group_text, std::int64_t level, const Options& opt) {
    CompactumProfile t = test_space(parse_group(group_text), level);
    print_value(cli::Value{t}, opt);
    return kExitOk;
}

int run_sigma(const std::string& group_text, const Options& opt) {
    BocksteinBasisSet basis = bockstein_basis(parse_group(group_text));
    print_value(cli::Value{basis}, opt);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dimalg: dimension algebra for graded groups"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string expr_text;
    std::vector<std::string> binds;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
    eval_cmd->add_option("expression", expr_text, "Expression to evaluate")->required();
    eval_cmd->add_option("--bind", binds, "name=file.json value bindings");

    std::string validate_path;
    CLI::App* validate_cmd = app.add_subcommand("validate", "Validate a JSON data file");
    validate_cmd->add_option("file", validate_path, "JSON file")->required();

    std::string verify_mode;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int cases = 1000;
    std::vector<std::int64_t> scope_primes{2, 3, 5};
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Cross-check closed forms against direct computation");
    verify_cmd->add_option("mode", verify_mode, "smash | dual | dconv | identity")
        ->required()
        ->check(CLI::IsMember({"smash", "dual", "dconv", "identity"}));
    verify_cmd->add_option("--seed", seed, "Generator seed (default: DIMALG_SEED or 0)")
        ->each([&seed_given](const std::string&) { seed_given = true; });
    verify_cmd->add_option("--cases", cases, "Number of random cases")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--primes", scope_primes, "Scope primes")->delimiter(',');

    std::string ts_group;
    std::int64_t ts_level = 0;
    CLI::App* ts_cmd = app.add_subcommand("testspace", "Profile of a test space for (G, n)");
    ts_cmd->add_option("group", ts_group, "Coefficient group literal")->required();
    ts_cmd->add_option("level", ts_level, "Dimension level n (> 1)")->required();

    std::string sigma_group;
    CLI::App* sigma_cmd = app.add_subcommand("sigma", "Bockstein basis of a group");
    sigma_cmd->add_option("group", sigma_group, "Group literal")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*eval_cmd) return run_eval(expr_text, binds, opt);
        if (*validate_cmd) return run_validate(validate_path, opt);
        if (*verify_cmd)
            return run_verify(verify_mode, seed_given ? seed : default_seed(), cases,
                              scope_primes, opt);
        if (*ts_cmd) return run_testspace(ts_group, ts_level, opt);
        if (*sigma_cmd) return run_sigma(sigma_group, opt);
        std::cerr << "error: no subcommand\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const KindError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitDomain;
    }
}
