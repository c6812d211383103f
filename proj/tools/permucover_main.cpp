#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "permucover/analysis.hpp"

using namespace permucover;

namespace {

struct CommonOpts {
    std::string input;
    std::string output;
    long long n = 0;
    std::string a_csv;
    double tol = kDefaultValueTol;
    std::uint64_t seed = kDefaultSeed;
    int threads = 0;
    bool progress = false;
    double timeout = 600;
    double radius_scale = 2.0;
    double step_div = 16.0;
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

std::vector<Rat> resolve_generators(const CommonOpts& o) {
    if (!o.input.empty()) return parse_generators(load_json(o.input));
    if (o.n > 0) {
        if (o.n < 2 || o.n > 64) throw InputError("--n out of range [2, 64]");
        return standard_generators(static_cast<int>(o.n));
    }
    if (!o.a_csv.empty()) {
        std::vector<Rat> a;
        std::stringstream ss(o.a_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) a.push_back(parse_rat(tok));
        if (a.size() < 2) throw InputError("--A needs at least 2 comma-separated rationals");
        return a;
    }
    throw InputError("provide one of --input FILE, --n K, or --A \"a1,a2,...\"");
}

AnalysisConfig make_config(const CommonOpts& o) {
    AnalysisConfig c;
    c.tol = o.tol;
    c.seed = o.seed;
    c.threads = o.threads;
    c.progress = o.progress;
    c.limits.timeout_secs = o.timeout;
    c.radius_scale = o.radius_scale;
    c.step_div = o.step_div;
    return c;
}

void write_output(const Json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
    if (with_input) {
        cmd->add_option("--input", o.input, "JSON input file {\"A\": [...]} or {\"n\": k}");
        cmd->add_option("--n", o.n, "use the standard generators {1..n}");
        cmd->add_option("--A", o.a_csv, "comma-separated rational generators");
    }
    cmd->add_option("--output", o.output, "write the JSON report here (default stdout)");
    cmd->add_option("--tol", o.tol, "numeric distinctness tolerance");
    cmd->add_option("--seed", o.seed, "random seed for the root finder");
    cmd->add_option("--threads", o.threads, "worker cap (also PERMUCOVER_THREADS)");
    cmd->add_flag("--progress", o.progress, "progress meter on stderr");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permucover: exact permutohedron vertex-cover analysis, the "
                 "distinct-critical-values criterion, and numerical monodromy verification"};
    app.require_subcommand(1);

    CommonOpts o;

    CLI::App* analyze = app.add_subcommand("analyze", "full pipeline with verdict");
    add_common(analyze, o);
    analyze->add_option("--timeout", o.timeout, "cover search timeout (seconds)");

    CLI::App* criterion = app.add_subcommand("criterion", "exact + numeric criterion for F_A");
    add_common(criterion, o);

    CLI::App* monodromy = app.add_subcommand("monodromy", "loop tracking and permutation report");
    add_common(monodromy, o);
    monodromy->add_option("--radius-scale", o.radius_scale, "base-point radius scale");
    monodromy->add_option("--step-div", o.step_div, "initial step = gap / step-div");

    CLI::App* incidence = app.add_subcommand("incidence", "max vertex/flat incidence + histogram");
    add_common(incidence, o);

    CLI::App* search = app.add_subcommand("search", "certified minimum vertex cover");
    add_common(search, o);
    bool exhaustive_flag = true;
    std::uint64_t samples = 200000;
    search->add_flag("--exhaustive,!--sampled", exhaustive_flag,
                     "exhaustive flat enumeration (default) or seeded sampling");
    search->add_option("--samples", samples, "sample count in sampled mode");
    search->add_option("--timeout", o.timeout, "branch-and-bound timeout (seconds)");

    CLI::App* verify = app.add_subcommand("verify-cover", "exact cover verification");
    std::string cover_path;
    verify->add_option("--cover", cover_path, "cover JSON file {A, planes}")->required();
    verify->add_option("--output", o.output, "write the JSON report here (default stdout)");

    CLI::App* golden = app.add_subcommand("golden", "self-check table");
    bool golden_full = false;
    golden->add_flag("--full", golden_full, "include the long n=5 exhaustive checks");
    golden->add_option("--threads", o.threads, "worker cap");
    golden->add_option("--seed", o.seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            AnalysisConfig c = make_config(o);
            c.generators = resolve_generators(o);
            FullReport rep = cmd_analyze(c);
            write_output(rep.to_json(), o.output);
            return rep.all_passed ? kExitOk : kExitVerifyFailed;
        }
        if (criterion->parsed()) {
            AnalysisConfig c = make_config(o);
            c.generators = resolve_generators(o);
            SymData sym = build_fa(c.generators);
            CriticalData cd = critical_data(sym, c.tol, c.seed);
            write_output(json_criterion(sym, cd), o.output);
            return kExitOk;
        }
        if (monodromy->parsed()) {
            AnalysisConfig c = make_config(o);
            c.generators = resolve_generators(o);
            SymData sym = build_fa(c.generators);
            CriticalData cd = critical_data(sym, c.tol, c.seed);
            MonodromyOptions mo;
            mo.radius_scale = c.radius_scale;
            mo.step_div = c.step_div;
            mo.seed = c.seed;
            MonodromyReport mr = verify_claims(sym, cd, mo);
            write_output(json_monodromy(mr), o.output);
            return mr.passes ? kExitOk : kExitVerifyFailed;
        }
        if (incidence->parsed()) {
            AnalysisConfig c = make_config(o);
            c.generators = resolve_generators(o);
            Permutohedron p = Permutohedron::build(c.generators);
            EnumOptions eo;
            eo.threads = c.threads;
            eo.progress = c.progress;
            eo.seed = c.seed;
            FlatEnumeration e = enumerate_flats(p, eo);
            auto [count, witness] = max_incidence(p, e);
            write_output(json_incidence_summary(e, count, witness), o.output);
            return kExitOk;
        }
        if (search->parsed()) {
            AnalysisConfig c = make_config(o);
            c.generators = resolve_generators(o);
            Permutohedron p = Permutohedron::build(c.generators);
            EnumOptions eo;
            eo.exhaustive = exhaustive_flag;
            eo.samples = samples;
            eo.threads = c.threads;
            eo.progress = c.progress;
            eo.seed = c.seed;
            FlatEnumeration e = enumerate_flats(p, eo);
            CoverCertificate cert = min_cover(p, e, SearchOptions{o.timeout});
            write_output(json_certificate(cert), o.output);
            if (exhaustive_flag && !cert.exhaustive) return kExitResourceLimit;
            return kExitOk;
        }
        if (verify->parsed()) {
            AnalysisConfig c = make_config(o);
            CoverFile file = parse_cover_file(load_json(cover_path));
            VerifyOutcome out = cmd_verify_cover(c, file);
            write_output(json_cover_report(out.report), o.output);
            return out.ok ? kExitOk : kExitVerifyFailed;
        }
        if (golden->parsed()) {
            AnalysisConfig c = make_config(o);
            std::vector<GoldenCheck> checks = run_golden(golden_full, c);
            bool all = true;
            for (const GoldenCheck& ck : checks) {
                std::printf("%-42s %s%s%s\n", ck.name.c_str(), ck.passed ? "PASS" : "FAIL",
                            ck.detail.empty() ? "" : "  ", ck.detail.c_str());
                all = all && ck.passed;
            }
            return all ? kExitOk : kExitVerifyFailed;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const LimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const NumericError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
