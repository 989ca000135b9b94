// Command-line front end: exact tail probabilities of weighted Bernoulli
// sums, optimality-region and bound-curve data, conjecture scans, and the
// classic repeated-dice tables. Exit codes: 0 success, 2 usage error,
// 3 regime error, 4 cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stakeopt/errors.hpp"
#include "stakeopt/io.hpp"

namespace {

using namespace stakeopt;
using nlohmann::json;

struct Options {
    std::uint64_t seed = 0;
    std::string out;
    std::string format;
    int decimals = 12;
    std::string save_config;

    std::string stakes, p, t;
    std::string method = "enum";
    std::uint64_t samples = 100000;
    bool normalize = false;

    int resolution = 0;
    int n_max = 0;
    bool force = false;
    int grid = 10;
    std::string counterexamples = "counterexamples.json";

    long a = 6;
    long k_max = 10;
};

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
    f << content;
    f.flush();
    if (!f) throw std::invalid_argument("failed while writing '" + out_path + "'");
}

std::string pick_format(const Options& opt, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
    std::string format = opt.format.empty() ? fallback : opt.format;
    for (const char* a : allowed)
        if (format == a) return format;
    throw std::invalid_argument("format '" + format + "' is not supported by this command");
}

Stakes parse_stakes(const Options& opt) {
    if (!opt.normalize) return Stakes::parse(opt.stakes);
    std::vector<Rational> raw;
    std::size_t start = 0;
    const std::string& csv = opt.stakes;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        raw.push_back(Rational::parse(
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Stakes::normalized(std::move(raw));
}

int cmd_tail(const Options& opt) {
    std::string format = pick_format(opt, "text", {"text", "json"});
    Stakes stakes = parse_stakes(opt);
    Params params(Rational::parse(opt.p), Rational::parse(opt.t));

    TailResult result{Rational(0), TailMethod::enumeration, std::nullopt};
    if (opt.method == "enum")
        result = tail_enum(stakes, params);
    else if (opt.method == "dp")
        result = tail_dp(stakes, params);
    else if (opt.method == "mc")
        result = tail_mc(stakes, params, opt.samples, opt.seed);
    else
        throw std::invalid_argument("unknown method '" + opt.method + "' (enum|dp|mc)");

    std::ostringstream oss;
    if (format == "text") {
        oss << result.value.to_string() << '\n'
            << result.value.to_decimal(opt.decimals) << '\n'
            << to_string(result.method) << '\n';
        if (result.stderr_estimate)
            oss << "stderr " << format_long_double(*result.stderr_estimate, opt.decimals) << '\n';
    } else {
        json j;
        j["stakes"] = json::array();
        for (const Rational& c : stakes) j["stakes"].push_back(c.to_string());
        j["p"] = params.p.to_string();
        j["t"] = params.t.to_string();
        j["method"] = std::string(to_string(result.method));
        j["value"] = result.value.to_string();
        j["decimal"] = result.value.to_decimal(opt.decimals);
        j["stderr"] = result.stderr_estimate ? json(*result.stderr_estimate) : json(nullptr);
        if (result.method == TailMethod::monte_carlo) {
            j["samples"] = opt.samples;
            j["seed"] = opt.seed;
        }
        oss << j.dump(2) << '\n';
    }
    emit(opt.out, oss.str());
    return 0;
}

int cmd_region(const Options& opt) {
    pick_format(opt, "csv", {"csv"});
    std::ostringstream oss;
    write_region_csv(oss, region_grid(opt.resolution == 0 ? 100 : opt.resolution), opt.decimals);
    emit(opt.out, oss.str());
    return 0;
}

int cmd_bounds(const Options& opt) {
    pick_format(opt, "csv", {"csv"});
    std::ostringstream oss;
    write_bounds_csv(oss, bounds_table(opt.resolution == 0 ? 1000 : opt.resolution), opt.decimals);
    emit(opt.out, oss.str());
    return 0;
}

ExhaustiveOptions exhaustive_options(const Options& opt) {
    ExhaustiveOptions ex;
    ex.allow_large = opt.force;
    if (opt.force) ex.cap = 6;  // n = 6 takes minutes; beyond that the up-set count explodes
    return ex;
}

int cmd_conjecture(const Options& opt) {
    pick_format(opt, "json", {"json"});
    int n_max = opt.n_max == 0 ? 4 : opt.n_max;
    Params params(Rational::parse(opt.p), Rational::parse(opt.t));
    ConjectureVerdict verdict = csoka_check(params, n_max, exhaustive_options(opt));
    emit(opt.out, verdict_to_json(params, verdict, opt.decimals).dump(2) + "\n");
    return 0;
}

int cmd_scan(const Options& opt) {
    pick_format(opt, "json", {"json"});
    int n_max = opt.n_max == 0 ? 3 : opt.n_max;
    if (opt.grid < 2) throw std::invalid_argument("grid must be >= 2");

    json points = json::array();
    json counterexamples = json::array();
    long confirmed = 0, refuted = 0;
    for (int i = 1; i <= opt.grid; ++i) {
        for (int j = i; j <= opt.grid; ++j) {
            Params params(Rational(i, opt.grid), Rational(j, opt.grid));
            ConjectureVerdict v = csoka_check(params, n_max, exhaustive_options(opt));
            json pt;
            pt["p"] = params.p.to_string();
            pt["t"] = params.t.to_string();
            pt["confirmed"] = v.confirmed;
            if (v.confirmed) {
                pt["optimal_k"] = v.optimal_k;
                pt["bold"] = v.bold;
            }
            pt["value"] = v.value.to_string();
            points.push_back(std::move(pt));
            if (v.confirmed) {
                ++confirmed;
            } else {
                ++refuted;
                counterexamples.push_back(verdict_to_json(params, v, opt.decimals));
            }
        }
    }
    json summary;
    summary["grid"] = opt.grid;
    summary["n_max"] = n_max;
    summary["class"] = "stake vectors with at most " + std::to_string(n_max) + " entries";
    summary["confirmed"] = confirmed;
    summary["counterexample_count"] = refuted;
    summary["points"] = std::move(points);
    emit(opt.out, summary.dump(2) + "\n");
    if (refuted > 0) {
        json ce;
        ce["counterexamples"] = std::move(counterexamples);
        emit(opt.counterexamples, ce.dump(2) + "\n");
        std::cerr << "wrote " << refuted << " counterexample(s) to " << opt.counterexamples
                  << '\n';
    }
    return 0;
}

int cmd_pepys(const Options& opt) {
    std::string format = pick_format(opt, "text", {"text", "csv"});
    Rational p = Rational::parse(opt.p);
    if (p > Rational(1, opt.a))
        std::cerr << "note: p > 1/a, the strict decrease is only established for p <= 1/a\n";
    std::vector<Rational> seq = pepys_sequence(opt.a, p, opt.k_max);
    bool decreasing = true;
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (!(seq[i] < seq[i - 1])) decreasing = false;

    std::ostringstream oss;
    if (format == "csv") {
        oss << "k,successes_needed,trials,probability,decimal\n";
        for (std::size_t i = 0; i < seq.size(); ++i) {
            long k = static_cast<long>(i) + 1;
            oss << k << ',' << k << ',' << k * opt.a << ',' << seq[i].to_string() << ','
                << seq[i].to_decimal(opt.decimals) << '\n';
        }
    } else {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            long k = static_cast<long>(i) + 1;
            oss << "P(Bin(" << k * opt.a << ", " << p.to_string() << ") >= " << k
                << ") = " << seq[i].to_string() << " = " << seq[i].to_decimal(opt.decimals)
                << '\n';
        }
        oss << "strictly decreasing: " << (decreasing ? "yes" : "no") << '\n';
    }
    emit(opt.out, oss.str());
    return 0;
}

std::vector<std::string> resolve_config(const std::vector<std::string>& args) {
    auto it = std::find(args.begin(), args.end(), "--config");
    if (it == args.end()) return args;
    if (args.size() != 2 || it != args.begin())
        throw std::invalid_argument("--config FILE replaces all other arguments");
    std::ifstream f(args[1]);
    if (!f) throw std::invalid_argument("cannot read config '" + args[1] + "'");
    json j = json::parse(f, nullptr, true);
    return j.at("argv").get<std::vector<std::string>>();
}

void save_config(const std::string& path, const std::vector<std::string>& args) {
    std::vector<std::string> cleaned;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--save-config") {
            ++i;  // skip its value too
            continue;
        }
        cleaned.push_back(args[i]);
    }
    json j;
    j["argv"] = cleaned;
    emit(path, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = resolve_config(args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    Options opt;
    std::string config_path_unused;  // --config is consumed before parsing
    CLI::App app{"Exact tail probabilities and optimal stake vectors for weighted Bernoulli bets"};
    app.require_subcommand(1);
    app.add_option("--seed", opt.seed, "RNG seed for sampling commands");
    app.add_option("--out", opt.out, "output file (default: stdout)");
    app.add_option("--format", opt.format, "output format (text|csv|json, command-dependent)");
    app.add_option("--decimals", opt.decimals, "digits for decimal rendering")
        ->check(CLI::Range(0, 60));
    app.add_option("--save-config", opt.save_config, "write a rerunnable config file");
    app.add_option("--config", config_path_unused,
                   "rerun from a config file (must be the only argument)");

    CLI::App* tail = app.add_subcommand("tail", "P(S >= t) for a stake vector");
    tail->add_option("--stakes", opt.stakes, "comma-separated rational stakes")->required();
    tail->add_option("--p", opt.p, "success probability")->required();
    tail->add_option("--t", opt.t, "threshold")->required();
    tail->add_option("--method", opt.method, "enum|dp|mc (default enum)");
    tail->add_option("--samples", opt.samples, "Monte Carlo sample count");
    tail->add_flag("--normalize", opt.normalize, "rescale stakes to sum 1 first");

    CLI::App* region = app.add_subcommand("region", "optimality-region grid as CSV");
    region->add_option("--resolution", opt.resolution, "grid resolution (default 100)");

    CLI::App* bounds = app.add_subcommand("bounds", "diagonal bound curves as CSV");
    bounds->add_option("--resolution", opt.resolution, "grid resolution (default 1000)");

    CLI::App* conjecture =
        app.add_subcommand("conjecture", "check that an average attains the class maximum");
    conjecture->add_option("--p", opt.p, "success probability")->required();
    conjecture->add_option("--t", opt.t, "threshold")->required();
    conjecture->add_option("--n-max", opt.n_max, "stake-vector width cap (default 4, hard cap 5)");
    conjecture->add_flag("--force", opt.force, "allow n-max beyond the default cap (slow)");

    CLI::App* scan = app.add_subcommand("scan", "conjecture check over a (p,t) grid");
    scan->add_option("--grid", opt.grid, "grid resolution (default 10)");
    scan->add_option("--n-max", opt.n_max, "stake-vector width cap (default 3, hard cap 5)");
    scan->add_flag("--force", opt.force, "allow n-max beyond the default cap (slow)");
    scan->add_option("--counterexamples", opt.counterexamples,
                     "file for counterexample stakes, written only if any are found");

    CLI::App* pepys = app.add_subcommand("pepys", "P(Bin(ka,p) >= k) table for k = 1..k-max");
    pepys->add_option("--a", opt.a, "trials per success demanded (a >= 2)")->required();
    pepys->add_option("--p", opt.p, "success probability")->required();
    pepys->add_option("--k-max", opt.k_max, "number of rows (default 10)");

    for (CLI::App* sub : {tail, region, bounds, conjecture, scan, pepys}) sub->fallthrough();

    try {
        std::vector<const char*> argv2;
        argv2.push_back("stakeopt");
        for (const std::string& a : args) argv2.push_back(a.c_str());
        app.parse(static_cast<int>(argv2.size()), argv2.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!opt.save_config.empty()) save_config(opt.save_config, args);
        if (app.got_subcommand(tail)) return cmd_tail(opt);
        if (app.got_subcommand(region)) return cmd_region(opt);
        if (app.got_subcommand(bounds)) return cmd_bounds(opt);
        if (app.got_subcommand(conjecture)) return cmd_conjecture(opt);
        if (app.got_subcommand(scan)) return cmd_scan(opt);
        if (app.got_subcommand(pepys)) return cmd_pepys(opt);
        std::cerr << "error: no command given\n";
        return 2;
    } catch (const regime_error& e) {
        std::cerr << "regime error: " << e.what() << '\n';
        return 3;
    } catch (const cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
