#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gapenergy {

// One plot-ready observation from a sweep trial.
struct TrialRow {
    uint64_t trial = 0;
    int64_t p = 0;
    uint64_t size = 0;
    std::string metric;
    double value = 0.0;
};

struct SuiteResult {
    std::string suite;
    uint64_t seed = 0;
    uint64_t trials = 0;
    std::map<std::string, double> max_ratios;
    std::vector<std::string> failures;
    int64_t elapsed_ms = 0;
    std::vector<TrialRow> rows;

    bool ok() const { return failures.empty(); }
    void absorb(const SuiteResult& other);

    std::string to_json() const;  // top-level keys: suite, seed, trials, max_ratios, failures, elapsed_ms
    std::string to_csv() const;   // suite,trial,p,size,metric,value
};

struct SweepConfig {
    uint64_t trials = 0;  // 0 = suite default
    uint64_t seed = 7;
    int workers = 1;
    int64_t p_min = 0;  // 0 = suite default prime range
    int64_t p_max = 0;
};

// Seeded verification sweeps. Each asserts the exact or pinned-ceiling
// properties of its area and reports empirical maxima.
SuiteResult run_energy_oracle_suite(SweepConfig cfg);  // counting vs quadruple brute force
SuiteResult run_rz_identity_suite(SweepConfig cfg);    // r(z) = |D ∩ Gamma_z| + Minkowski
SuiteResult run_bohr_suite(SweepConfig cfg);           // scan vs lattice + pigeonhole/trivial bounds
SuiteResult run_mahler_suite(SweepConfig cfg);         // 1 <= lambda_i lambda*_{n-i+1} <= (n!)^2
SuiteResult run_thm12_suite(SweepConfig cfg);          // energy ratio ceiling over random gaps
SuiteResult run_prop31_suite(SweepConfig cfg);         // Bohr upper ratio ceiling + sharpness family
SuiteResult run_lemma24_suite(SweepConfig cfg);        // lhs <= rhs over random instances
SuiteResult run_pv_suite();                            // Polya-Vinogradov ratio scan
SuiteResult run_burgess_suite(SweepConfig cfg);        // end-to-end pipeline runs

// CLI-facing dispatch: energy | bohr | lattice | lemma24 | all.
SuiteResult run_suite(const std::string& name, SweepConfig cfg);

}  // namespace gapenergy
