// rootcong: classify moduli d against the averaged roots-of-unity binomial
// congruence C_t, scan ranges, print valuation witnesses and check the
// averaging identity on random instances.
//
// Exit codes: 0 holds / pass, 1 fails, 2 undecided, 64 usage error,
// 73 output file cannot be created.

#include "rootcong/classifier.hpp"
#include "rootcong/congruence.hpp"
#include "rootcong/cyclotomic.hpp"
#include "rootcong/report.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 64;
constexpr int kExitCantCreate = 73;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(rootcong::Verdict verdict) {
    switch (verdict) {
        case rootcong::Verdict::holds: return kExitHolds;
        case rootcong::Verdict::fails: return kExitFails;
        case rootcong::Verdict::undecided: return kExitUndecided;
    }
    return kExitUndecided;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("CONGRUENCE_JOBS")) {
        try {
            const unsigned long jobs = std::stoul(env);
            if (jobs > 0) return static_cast<unsigned>(jobs);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring CONGRUENCE_JOBS=" << env << '\n';
    }
    return 1;
}

struct ClassifyArgs {
    std::uint64_t t = 0;
    std::uint64_t d = 0;
    std::int64_t n0 = -1;
    std::string format = "json";
    std::int64_t budget_ms = 30 * 60 * 1000;
};

struct ScanArgs {
    std::uint64_t t = 0;
    std::uint64_t dmin = 0;
    std::uint64_t dmax = 0;
    unsigned jobs = 1;
    std::string out;
    std::string format = "json";
    bool no_timing = false;
    std::int64_t budget_ms = 30 * 60 * 1000;
};

struct WitnessArgs {
    std::uint64_t t = 0;
    std::uint64_t d = 0;
    std::uint64_t c = 0;
    std::uint64_t prime = 0;
    std::int64_t n0 = -1;
};

struct VerifyArgs {
    std::uint64_t t = 0;
    std::uint64_t d = 0;
    std::uint64_t cmax = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::int64_t nrange = 100;
};

int run_classify(const ClassifyArgs& args) {
    if (args.t == 0 || args.d == 0) throw UsageError("--t and --d must be positive");
    rootcong::ClassifyOptions options;
    options.n0 = args.n0;
    options.budget = std::chrono::milliseconds(args.budget_ms);
    const rootcong::ClassificationResult result = rootcong::classify(args.t, args.d, options);
    const rootcong::ReportRecord record = rootcong::make_record(result);
    if (args.format == "text") {
        std::cout << rootcong::to_text(record) << '\n';
    } else {
        std::cout << rootcong::to_json(record).dump() << '\n';
    }
    return exit_code(result.verdict);
}

int run_scan(const ScanArgs& args) {
    if (args.t == 0 || args.dmin == 0 || args.dmin > args.dmax) {
        throw UsageError("need --t >= 1 and 1 <= --dmin <= --dmax");
    }
    std::ofstream file;
    if (!args.out.empty()) {
        file.open(args.out);
        if (!file) {
            std::cerr << "error: cannot create " << args.out << '\n';
            return kExitCantCreate;
        }
    }
    std::ostream& out = args.out.empty() ? std::cout : file;

    rootcong::ClassifyOptions options;
    options.budget = std::chrono::milliseconds(args.budget_ms);
    const auto results = rootcong::scan(args.t, args.dmin, args.dmax, args.jobs, options);
    if (args.format == "csv") out << rootcong::csv_header() << '\n';
    for (const auto& result : results) {
        rootcong::ReportRecord record = rootcong::make_record(result);
        if (args.no_timing) record.elapsed_ms = 0;
        if (args.format == "csv") {
            out << rootcong::to_csv_row(record) << '\n';
        } else {
            out << rootcong::to_json(record).dump() << '\n';
        }
    }
    out.flush();
    if (!out) {
        std::cerr << "error: write failed\n";
        return kExitCantCreate;
    }
    return 0;
}

int run_witness(const WitnessArgs& args) {
    if (args.t == 0 || args.d == 0) throw UsageError("--t and --d must be positive");
    if (args.c >= args.d) throw UsageError("--c must be smaller than --d");
    rootcong::PrimeFactorization factors = rootcong::factorize(args.d);
    if (args.prime != 0) {
        if (!rootcong::is_prime(args.prime) || args.d % args.prime != 0) {
            throw UsageError("--prime must be a prime divisor of --d");
        }
        factors = {{args.prime, rootcong::valuation(args.prime, args.d)}};
    }
    bool all_satisfied = true;
    for (const auto& [p, r] : factors) {
        const rootcong::ExtendedInt found = rootcong::sum_valuation(args.t, args.d, args.c, args.n0, p);
        const bool satisfied = found >= rootcong::ExtendedInt(r);
        all_satisfied = all_satisfied && satisfied;
        std::cout << "p=" << p << " found=" << found << " required=" << r
                  << (satisfied ? " satisfied" : " violated") << '\n';
    }
    return all_satisfied ? kExitHolds : kExitFails;
}

int run_verify(const VerifyArgs& args) {
    if (args.t == 0 || args.d == 0 || args.trials == 0) {
        throw UsageError("--t, --d and --trials must be positive");
    }
    std::mt19937_64 rng(args.seed);
    std::uniform_int_distribution<std::uint64_t> pick_c(0, args.cmax);
    std::uniform_int_distribution<std::int64_t> pick_n(-args.nrange, args.nrange);
    for (std::uint64_t trial = 0; trial < args.trials; ++trial) {
        const std::uint64_t c = pick_c(rng);
        const std::int64_t n = pick_n(rng);
        if (!rootcong::verify_lemma1(args.t, n, args.d, c)) {
            std::cout << "FAIL t=" << args.t << " d=" << args.d << " c=" << c << " n=" << n << '\n';
            return kExitFails;
        }
    }
    std::cout << "PASS " << args.trials << " instances (t=" << args.t << " d=" << args.d << " cmax=" << args.cmax
              << " seed=" << args.seed << ")\n";
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classify moduli d against the averaged roots-of-unity binomial congruence C_t."};
    app.require_subcommand(1);

    ClassifyArgs classify_args;
    auto* classify = app.add_subcommand("classify", "Classify a single modulus");
    classify->add_option("--t", classify_args.t, "Number of roots of unity")->required();
    classify->add_option("--d", classify_args.d, "Modulus")->required();
    classify->add_option("--n0", classify_args.n0, "Fixed n for the direct check");
    classify->add_option("--format", classify_args.format)->check(CLI::IsMember({"json", "text"}));
    classify->add_option("--budget-ms", classify_args.budget_ms, "Direct-check time budget");

    ScanArgs scan_args;
    scan_args.jobs = default_jobs();
    auto* scan = app.add_subcommand("scan", "Classify every d in a range");
    scan->add_option("--t", scan_args.t)->required();
    scan->add_option("--dmin", scan_args.dmin)->required();
    scan->add_option("--dmax", scan_args.dmax)->required();
    scan->add_option("--jobs", scan_args.jobs, "Worker threads (default $CONGRUENCE_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    scan->add_option("--out", scan_args.out, "Write records to FILE instead of stdout");
    scan->add_option("--format", scan_args.format)->check(CLI::IsMember({"json", "csv"}));
    scan->add_flag("--no-timing", scan_args.no_timing, "Report elapsed_ms as 0 for byte-stable output");
    scan->add_option("--budget-ms", scan_args.budget_ms, "Direct-check time budget per d");

    WitnessArgs witness_args;
    auto* witness = app.add_subcommand("witness", "Valuation of the congruence sum at one c");
    witness->add_option("--t", witness_args.t)->required();
    witness->add_option("--d", witness_args.d)->required();
    witness->add_option("--c", witness_args.c)->required();
    witness->add_option("--prime", witness_args.prime, "Only this prime divisor of d");
    witness->add_option("--n0", witness_args.n0);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify-lemma", "Check the root-of-unity averaging identity on random n, c");
    verify->add_option("--t", verify_args.t)->required();
    verify->add_option("--d", verify_args.d)->required();
    verify->add_option("--cmax", verify_args.cmax)->required();
    verify->add_option("--trials", verify_args.trials)->required();
    verify->add_option("--seed", verify_args.seed);
    verify->add_option("--nrange", verify_args.nrange, "n is drawn from [-nrange, nrange]")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify->parsed()) return run_classify(classify_args);
        if (scan->parsed()) return run_scan(scan_args);
        if (witness->parsed()) return run_witness(witness_args);
        if (verify->parsed()) return run_verify(verify_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
