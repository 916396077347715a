#pragma once

#include "gapenergy/field.hpp"
#include "gapenergy/gap.hpp"
#include "gapenergy/numeric.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace gapenergy {

// nu(u) = #{(x,y) in A x B, y != 0 : x y^-1 = u}; dense table indexed by u.
// sum_u nu(u) = |A| * |B \ {0}|.
std::vector<uint32_t> nu_counts(std::span<const int64_t> A, std::span<const int64_t> B, int64_t p);

// sum_u nu(u) |sum_{t in J} chi(u + t)|
double lemma24_lhs(std::span<const int64_t> A, std::span<const int64_t> B, std::span<const int64_t> J,
                   const CharSpec& chi);

// (|A||B|)^(1-1/r) (E(A) E(B))^(1/4r) (|J|^2r * 2r sqrt(p) + (2r|J|)^r p)^(1/2r)
double lemma24_rhs(uint64_t size_a, uint64_t size_b, uint64_t energy_a, uint64_t energy_b, uint64_t size_j,
                   int r, int64_t p);
// Convenience overload computing the energies exactly.
double lemma24_rhs(std::span<const int64_t> A, std::span<const int64_t> B, uint64_t size_j, int r, int64_t p);

struct BurgessConfig {
    Gap gap;      // proper rank-2 one-sided gap (the set A)
    BigRat eps;   // > 0
    int r = 2;    // amplification exponent, >= 1
    int64_t k;    // character exponent, must be nonzero
    uint64_t seed = 1;
};

struct PipelineReport {
    int64_t p = 0;
    uint64_t size_a = 0, size_b = 0, size_j = 0;
    int64_t j_len_floor = 0;  // floor(p^eps) before the >= 2 clamp
    std::complex<double> main_sum;
    std::complex<double> shifted_average;
    uint64_t shift_error_bound = 0;  // max symmetric-difference bound over the sample
    uint64_t shift_samples = 0;
    uint64_t shift_violations = 0;   // must stay 0
    double lhs_lemma = 0.0;          // amplification inequality, left side
    double rhs_lemma = 0.0;          // right side with exact energies
    double rhs_lemma_thm12 = 0.0;    // right side with the energy-bound envelope instead
    double final_lhs = 0.0;          // |average of shifted sums|
    double final_rhs = 0.0;          // |A|^(1-1/r) |B|^(-1/r) (E E)^(1/4r) (sqrt(p) + |J|^-r p)^(1/2r)
    double normalized = 0.0;         // |main_sum| / |A|, <= 1
    bool size_hypothesis_ok = false; // |A| >= p^(1/4 + 10 eps)
    uint64_t nu_mass = 0;
    bool nu_mass_ok = false;
};

// The full pipeline: build B and J from the gap, average the character
// sum over multiplicative shifts, and evaluate both sides of the key lemma.
PipelineReport burgess_pipeline(const BurgessConfig& cfg);

struct PvScanResult {
    double max_ratio = 0.0;
    int64_t argmax_p = 0, argmax_k = 0, argmax_h = 0;
    uint64_t characters_scanned = 0;
};

// max over primes p <= p_max, nontrivial k, initial intervals [1, H] of
// |sum chi| / (sqrt(p) ln p). All k for p <= full_k_limit, a random sample above.
PvScanResult polya_vinogradov_scan(int64_t p_max, int64_t full_k_limit = 300, int sampled_k = 20,
                                   uint64_t seed = 1);

}  // namespace gapenergy
