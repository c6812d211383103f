#include "permucover/analysis.hpp"

#include <cmath>

namespace permucover {

Json FullReport::to_json() const {
    return Json{{"covers", covers},
                {"criterion", criterion},
                {"monodromy", monodromy},
                {"sym", sym},
                {"verdict", verdict}};
}

namespace {

Json skipped(const std::string& reason) { return Json{{"skipped", reason}}; }

long long factorial(int n) {
    long long f = 1;
    for (int j = 2; j <= n; j++) f *= j;
    return f;
}

} // namespace

FullReport cmd_analyze(const AnalysisConfig& config) {
    FullReport rep;

    SymData sym = build_fa(config.generators);
    const int n = sym.n();
    CriticalData cd = critical_data(sym, config.tol, config.seed);
    rep.sym = json_sym(sym);
    rep.criterion = json_criterion(sym, cd);

    std::string verdict;
    bool ok = true;

    if (cd.criterion_exact)
        verdict = "criterion holds: " + std::to_string(n - 1) + " distinct critical values";
    else
        verdict = "criterion fails: repeated critical values (squarefree defect degree " +
                  std::to_string(cd.defect_degree) + ")";
    if (cd.criterion_exact != cd.criterion_numeric) {
        verdict += "; WARNING: exact and numeric criterion disagree";
        ok = false;
    }

    bool monodromy_passed = false;
    if (!cd.criterion_exact) {
        rep.monodromy = skipped("criterion fails: repeated critical values (puncture multiplicity)");
    } else if (n > 8) {
        rep.monodromy = skipped("n > 8 exceeds the permutation-group enumeration limit");
    } else {
        MonodromyOptions mo;
        mo.radius_scale = config.radius_scale;
        mo.step_div = config.step_div;
        mo.max_step_div = config.max_step_div;
        mo.seed = config.seed;
        MonodromyReport mr = verify_claims(sym, cd, mo);
        rep.monodromy = json_monodromy(mr);
        monodromy_passed = mr.passes;
        if (mr.passes)
            verdict += "; monodromy: " + std::to_string(n - 1) +
                       " transpositions, one " + std::to_string(n) +
                       "-cycle, full symmetric group of order " + std::to_string(mr.generated_order);
        else {
            verdict += "; monodromy verification FAILED";
            ok = false;
        }
    }

    if (n <= config.limits.max_n_exhaustive) {
        Permutohedron p = Permutohedron::build(config.generators, config.limits.max_n_vertices);
        EnumOptions eo;
        eo.exhaustive = true;
        eo.threads = config.threads;
        eo.progress = config.progress;
        eo.max_n_exhaustive = config.limits.max_n_exhaustive;
        eo.seed = config.seed;
        FlatEnumeration flats = enumerate_flats(p, eo);
        CoverCertificate cert = min_cover(p, flats, SearchOptions{config.limits.timeout_secs});

        bool achieved_ok = false;
        if (!cert.achieved_cover.empty())
            achieved_ok = verify_cover(p, cert.achieved_cover).covered;

        Json covers = json_certificate(cert);
        covers["achieved_cover_verified"] = achieved_ok;
        CoverReport trivial = verify_cover(p, trivial_cover(p));
        covers["trivial_cover_covered"] = trivial.covered;
        if (p.is_standard()) {
            CoverReport even = verify_cover(p, even_cover(n));
            covers["even_cover_covered"] = even.covered;
            covers["even_cover_uncovered_count"] = even.uncovered_vertices.size();
        }
        rep.covers = covers;

        if (cert.exhaustive && achieved_ok && trivial.covered &&
            cert.lower_bound <= cert.min_cover_size) {
            verdict += "; minimum vertex cover size " + std::to_string(cert.min_cover_size) +
                       " certified (incidence lower bound " + std::to_string(cert.lower_bound) +
                       ", max incidence " + std::to_string(cert.max_incidence) + ")";
            if (p.is_standard() && n % 2 == 0 &&
                rep.covers.value("even_cover_covered", false))
                verdict += "; even-n cover of size " + std::to_string(n - 1) + " verified";
            if (cd.criterion_exact && cert.max_incidence > factorial(n - 1)) {
                verdict += "; WARNING: incidence bound (n-1)! exceeded despite criterion";
                ok = false;
            }
        } else {
            verdict += "; cover search incomplete";
            ok = false;
        }
    } else {
        rep.covers = skipped("n > " + std::to_string(config.limits.max_n_exhaustive) +
                             ": exhaustive flat enumeration limit");
    }

    (void)monodromy_passed;
    rep.verdict = verdict;
    rep.all_passed = ok;
    return rep;
}

VerifyOutcome cmd_verify_cover(const AnalysisConfig& config, const CoverFile& file) {
    Permutohedron p = Permutohedron::build(file.generators, config.limits.max_n_vertices);
    VerifyOutcome out{verify_cover(p, file.planes), false};
    out.ok = out.report.covered;
    return out;
}

namespace {

using CheckFn = std::function<bool(std::string&)>;

GoldenCheck run_check(const std::string& name, const CheckFn& fn) {
    GoldenCheck c;
    c.name = name;
    try {
        c.passed = fn(c.detail);
    } catch (const std::exception& e) {
        c.passed = false;
        c.detail = std::string("exception: ") + e.what();
    }
    return c;
}

} // namespace

std::vector<GoldenCheck> run_golden(bool full, const AnalysisConfig& config) {
    std::vector<GoldenCheck> checks;

    checks.push_back(run_check("criterion parity n=3..9", [&](std::string& d) {
        for (int n = 3; n <= 9; n++) {
            SymData sym = build_fa(standard_generators(n));
            CriticalData cd = critical_data(sym, config.tol, config.seed);
            bool want = (n % 2 == 1);
            if (cd.criterion_exact != want || cd.criterion_numeric != want) {
                d = "n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    }));

    checks.push_back(run_check("closed-form critical data n=3", [&](std::string& d) {
        SymData sym = build_fa(standard_generators(3));
        CriticalData cd = critical_data(sym, config.tol, config.seed);
        const double s3 = std::sqrt(3.0);
        const double p1 = 2.0 - 1.0 / s3, p2 = 2.0 + 1.0 / s3;
        const double v1 = 6.0 + 2.0 / (3.0 * s3), v2 = 6.0 - 2.0 / (3.0 * s3);
        bool ok = std::abs(cd.points[0] - Complex(p1, 0)) < 1e-9 &&
                  std::abs(cd.points[1] - Complex(p2, 0)) < 1e-9 &&
                  std::abs(cd.values[0] - Complex(v1, 0)) < 1e-9 &&
                  std::abs(cd.values[1] - Complex(v2, 0)) < 1e-9;
        // R must be proportional to 27w^2 - 324w + 968.
        RatPoly expect{Rat(968), Rat(-324), Rat(27)};
        ok = ok && cd.resultant_w.degree() == 2 &&
             cd.resultant_w * expect.leading() == expect * cd.resultant_w.leading();
        if (!ok) d = "mismatch against closed form";
        return ok;
    }));

    checks.push_back(run_check("trivial cover n=2..6", [&](std::string& d) {
        for (int n = 2; n <= 6; n++) {
            Permutohedron p = Permutohedron::build(standard_generators(n));
            if (!verify_cover(p, trivial_cover(p)).covered) {
                d = "n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    }));

    checks.push_back(run_check("even cover n=4,6; odd gap n=3,5", [&](std::string& d) {
        for (int n : {4, 6}) {
            Permutohedron p = Permutohedron::build(standard_generators(n));
            if (!verify_cover(p, even_cover(n)).covered) {
                d = "even n = " + std::to_string(n);
                return false;
            }
        }
        for (int n : {3, 5}) {
            Permutohedron p = Permutohedron::build(standard_generators(n));
            CoverReport r = verify_cover(p, even_cover(n));
            if (r.covered || r.uncovered_vertices.size() != static_cast<std::size_t>(factorial(n - 1))) {
                d = "odd n = " + std::to_string(n);
                return false;
            }
            const Rat mid{(n + 1) / 2};
            for (const Point& v : r.uncovered_vertices)
                if (v[0] != mid) {
                    d = "odd n = " + std::to_string(n) + " wrong uncovered vertex";
                    return false;
                }
        }
        return true;
    }));

    checks.push_back(run_check("Q-slice spans n=4,5", [&](std::string& d) {
        for (int n : {4, 5}) {
            Permutohedron p = Permutohedron::build(standard_generators(n));
            for (int j = 1; j <= n; j++) {
                std::vector<Point> qj = slice_q(p, j);
                if (qj.size() != static_cast<std::size_t>(factorial(n - 1))) {
                    d = "slice size";
                    return false;
                }
                for (int k = j + 1; k <= n; k++) {
                    std::vector<Point> both = qj;
                    std::vector<Point> qk = slice_q(p, k);
                    both.insert(both.end(), qk.begin(), qk.end());
                    if (affine_dim(both) != n - 1) {
                        d = "union dim";
                        return false;
                    }
                }
            }
        }
        return true;
    }));

    checks.push_back(run_check(full ? "incidence max n=3,4,5" : "incidence max n=3,4",
                               [&](std::string& d) {
        std::vector<std::pair<int, int>> cases{{3, 2}, {4, 8}};
        if (full) cases.push_back({5, 24});
        for (auto [n, want] : cases) {
            Permutohedron p = Permutohedron::build(standard_generators(n));
            EnumOptions eo;
            eo.threads = config.threads;
            eo.progress = config.progress;
            FlatEnumeration e = enumerate_flats(p, eo);
            auto [count, witness] = max_incidence(p, e);
            if (count != want) {
                d = "n = " + std::to_string(n) + " got " + std::to_string(count);
                return false;
            }
        }
        return true;
    }));

    checks.push_back(run_check(full ? "min cover n=3,4,5" : "min cover n=3,4", [&](std::string& d) {
        std::vector<std::pair<int, int>> cases{{3, 3}, {4, 3}};
        if (full) cases.push_back({5, 5});
        for (auto [n, want] : cases) {
            Permutohedron p = Permutohedron::build(standard_generators(n));
            EnumOptions eo;
            eo.threads = config.threads;
            eo.progress = config.progress;
            FlatEnumeration e = enumerate_flats(p, eo);
            CoverCertificate cert = min_cover(p, e, SearchOptions{config.limits.timeout_secs});
            if (cert.min_cover_size != want || !cert.exhaustive ||
                !verify_cover(p, cert.achieved_cover).covered) {
                d = "n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    }));

    checks.push_back(run_check(full ? "monodromy n=3,5 and {0,1,-1}" : "monodromy n=3 and {0,1,-1}",
                               [&](std::string& d) {
        std::vector<std::vector<Rat>> cases{standard_generators(3), {Rat(0), Rat(1), Rat(-1)}};
        if (full) cases.push_back(standard_generators(5));
        for (const auto& a : cases) {
            SymData sym = build_fa(a);
            CriticalData cd = critical_data(sym, config.tol, config.seed);
            MonodromyOptions mo;
            mo.seed = config.seed;
            MonodromyReport mr = verify_claims(sym, cd, mo);
            if (!mr.passes || mr.product_convention != "forward") {
                d = "case failed";
                return false;
            }
        }
        return true;
    }));

    checks.push_back(run_check("odd-case symmetry and chain n=5,7,9", [&](std::string& d) {
        for (int n : {5, 7, 9}) {
            OddCaseReport r = oddcase_checks(n);
            if (!r.symmetry_ok || !r.chain_ok) {
                d = "n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    }));

    checks.push_back(run_check("product identity for G_n, n<=8", [&](std::string& d) {
        for (int n = 2; n <= 8; n++) {
            SymData sym = build_fa(standard_generators(n));
            if (!sym.G) {
                d = "missing G";
                return false;
            }
            std::vector<Rat> roots;
            for (int j = 1; j <= n; j++) roots.emplace_back(j);
            if (!(*sym.G == poly_from_roots(roots))) {
                d = "n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    }));

    return checks;
}

} // namespace permucover
