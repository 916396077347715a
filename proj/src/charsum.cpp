#include "gapenergy/charsum.hpp"

#include "gapenergy/energy.hpp"
#include "gapenergy/limits.hpp"
#include "gapenergy/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gapenergy {

std::vector<uint32_t> nu_counts(std::span<const int64_t> A, std::span<const int64_t> B, int64_t p) {
    if (static_cast<uint64_t>(p) * sizeof(uint32_t) > limits::max_mem_bytes())
        throw std::runtime_error("nu_counts: table exceeds memory cap");
    std::vector<uint32_t> nu(static_cast<size_t>(p), 0);
    for (int64_t y : B) {
        if (y % p == 0) continue;  // y = 0 excluded: no inverse
        int64_t inv_y = mod_inv(y, p);
        for (int64_t x : A) {
            int64_t u = static_cast<int64_t>(static_cast<__int128>(x) * inv_y % p);
            ++nu[static_cast<size_t>(u)];
        }
    }
    return nu;
}

double lemma24_lhs(std::span<const int64_t> A, std::span<const int64_t> B, std::span<const int64_t> J,
                   const CharSpec& chi) {
    const int64_t p = chi.p();
    const auto nu = nu_counts(A, B, p);
    double total = 0.0;
    for (int64_t u = 0; u < p; ++u) {
        if (nu[static_cast<size_t>(u)] == 0) continue;
        std::complex<double> inner{0.0, 0.0};
        for (int64_t t : J) inner += chi.eval((u + t) % p);
        total += static_cast<double>(nu[static_cast<size_t>(u)]) * std::abs(inner);
    }
    return total;
}

double lemma24_rhs(uint64_t size_a, uint64_t size_b, uint64_t energy_a, uint64_t energy_b, uint64_t size_j,
                   int r, int64_t p) {
    if (r < 1) throw std::invalid_argument("lemma24_rhs: r must be >= 1");
    const double ab = static_cast<double>(size_a) * static_cast<double>(size_b);
    const double e_prod = static_cast<double>(energy_a) * static_cast<double>(energy_b);
    const double j = static_cast<double>(size_j);
    const double pd = static_cast<double>(p);
    const double bracket =
        std::pow(j, 2.0 * r) * 2.0 * r * std::sqrt(pd) + std::pow(2.0 * r * j, static_cast<double>(r)) * pd;
    return std::pow(ab, 1.0 - 1.0 / r) * std::pow(e_prod, 1.0 / (4.0 * r)) *
           std::pow(bracket, 1.0 / (2.0 * r));
}

double lemma24_rhs(std::span<const int64_t> A, std::span<const int64_t> B, uint64_t size_j, int r, int64_t p) {
    return lemma24_rhs(A.size(), B.size(), mult_energy(A, p), mult_energy(B, p), size_j, r, p);
}

namespace {

double thm12_bound(uint64_t size, int64_t p) {
    const double m = static_cast<double>(size);
    return (m * m + m * m * m * m / static_cast<double>(p)) * std::log(static_cast<double>(p));
}

}  // namespace

PipelineReport burgess_pipeline(const BurgessConfig& cfg) {
    const Gap& g = cfg.gap;
    if (g.shape != GapShape::OneSided || g.rank() != 2)
        throw std::invalid_argument("burgess_pipeline: gap must be one-sided of rank 2");
    if (!g.is_proper()) throw std::invalid_argument("burgess_pipeline: gap must be proper");
    if (cfg.eps <= 0) throw std::invalid_argument("burgess_pipeline: eps must be positive");
    if (cfg.r < 1) throw std::invalid_argument("burgess_pipeline: r must be >= 1");
    if (cfg.k == 0) throw std::invalid_argument("burgess_pipeline: character must be nontrivial (k != 0)");

    const int64_t p = g.p;
    const CharSpec chi(p, cfg.k);
    const double eps = rat_to_double(cfg.eps);
    const double pd = static_cast<double>(p);

    PipelineReport rep;
    rep.p = p;
    rep.j_len_floor = static_cast<int64_t>(std::floor(std::pow(pd, eps)));
    // J = [1, p^eps]; at desk-scale primes the floor degenerates to 1, so the
    // length is clamped to the 2 required of a usable shift set
    const int64_t j_len = std::max<int64_t>(2, rep.j_len_floor);
    if (j_len >= p) throw std::invalid_argument("burgess_pipeline: J too large for the modulus");

    const double shrink = std::pow(pd, -2.0 * eps);
    std::vector<int64_t> b_bounds(2);
    for (int i = 0; i < 2; ++i) {
        b_bounds[i] = static_cast<int64_t>(std::floor(static_cast<double>(g.bounds[i]) * shrink));
        if (b_bounds[i] < 1) throw std::invalid_argument("burgess_pipeline: B empty after shrinking (H_i p^-2eps < 1)");
    }
    const Gap b_gap(p, 0, g.coeffs, b_bounds, GapShape::OneSided);

    const auto A = g.element_set();
    const auto B = b_gap.element_set();
    std::vector<int64_t> J(static_cast<size_t>(j_len));
    for (int64_t t = 1; t <= j_len; ++t) J[static_cast<size_t>(t - 1)] = t % p;

    rep.size_a = A.size();
    rep.size_b = B.size();
    rep.size_j = J.size();
    rep.size_hypothesis_ok = static_cast<double>(A.size()) >= std::pow(pd, 0.25 + 10.0 * eps);

    rep.main_sum = char_sum(chi, A);
    rep.normalized = std::abs(rep.main_sum) / static_cast<double>(A.size());

    // nu mass conservation
    const auto nu = nu_counts(A, B, p);
    uint64_t mass = 0;
    for (uint32_t v : nu) mass += v;
    uint64_t b_nonzero = B.size() - static_cast<uint64_t>(std::binary_search(B.begin(), B.end(), int64_t{0}));
    rep.nu_mass = mass;
    rep.nu_mass_ok = mass == A.size() * b_nonzero;

    // both sides of the amplification inequality; it is a theorem, so lhs <= rhs must hold
    const uint64_t energy_a = mult_energy(A, p);
    const uint64_t energy_b = mult_energy(B, p);
    rep.lhs_lemma = lemma24_lhs(A, B, J, chi);
    rep.rhs_lemma = lemma24_rhs(A.size(), B.size(), energy_a, energy_b, J.size(), cfg.r, p);
    rep.rhs_lemma_thm12 =
        lemma24_rhs(A.size(), B.size(), static_cast<uint64_t>(thm12_bound(A.size(), p)),
                    static_cast<uint64_t>(thm12_bound(B.size(), p)), J.size(), cfg.r, p);

    // shift-averaged sum over B x J
    std::complex<double> total{0.0, 0.0};
    for (int64_t y : B)
        for (int64_t t : J) {
            int64_t yt = static_cast<int64_t>(static_cast<__int128>(y) * t % p);
            for (int64_t x : A) total += chi.eval((x + yt) % p);
        }
    rep.shifted_average = total / (static_cast<double>(B.size()) * static_cast<double>(J.size()));
    rep.final_lhs = std::abs(rep.shifted_average);
    {
        const double r = cfg.r;
        const double e_prod = static_cast<double>(energy_a) * static_cast<double>(energy_b);
        rep.final_rhs = std::pow(static_cast<double>(A.size()), 1.0 - 1.0 / r) *
                        std::pow(static_cast<double>(B.size()), -1.0 / r) *
                        std::pow(e_prod, 1.0 / (4.0 * r)) *
                        std::pow(std::sqrt(pd) + std::pow(static_cast<double>(J.size()), -r) * pd,
                                 1.0 / (2.0 * r));
    }

    // exact shift-identity check on sampled (y, t) pairs:
    // |sum chi(x) - sum chi(x + yt)| <= |A \ (A+yt)| + |(A+yt) \ A|
    Rng rng(cfg.seed);
    rep.shift_samples = 100;
    for (uint64_t s = 0; s < rep.shift_samples; ++s) {
        int64_t y = B[rng.below(B.size())];
        int64_t t = J[rng.below(J.size())];
        int64_t yt = static_cast<int64_t>(static_cast<__int128>(y) * t % p);
        std::vector<int64_t> shifted(A.size());
        for (size_t i = 0; i < A.size(); ++i) shifted[i] = (A[i] + yt) % p;
        std::sort(shifted.begin(), shifted.end());
        std::vector<int64_t> only_a, only_shifted;
        std::set_difference(A.begin(), A.end(), shifted.begin(), shifted.end(), std::back_inserter(only_a));
        std::set_difference(shifted.begin(), shifted.end(), A.begin(), A.end(), std::back_inserter(only_shifted));
        const uint64_t bound = only_a.size() + only_shifted.size();
        rep.shift_error_bound = std::max(rep.shift_error_bound, bound);
        const double diff = std::abs(rep.main_sum - char_sum(chi, shifted));
        if (diff > static_cast<double>(bound) + 1e-9 * static_cast<double>(A.size() + 1)) ++rep.shift_violations;
    }
    return rep;
}

PvScanResult polya_vinogradov_scan(int64_t p_max, int64_t full_k_limit, int sampled_k, uint64_t seed) {
    if (p_max > 2000) throw std::invalid_argument("polya_vinogradov_scan: p_max above 2000");
    PvScanResult res;
    for (int64_t p = 3; p <= p_max; ++p) {
        if (!is_prime(static_cast<uint64_t>(p))) continue;
        const CharSpec base(p, std::min<int64_t>(1, p - 2));
        std::vector<int64_t> ks;
        if (p <= full_k_limit || p - 2 <= sampled_k) {
            for (int64_t k = 1; k <= p - 2; ++k) ks.push_back(k);
        } else {
            Rng rng(seed ^ static_cast<uint64_t>(p) * 0x9E3779B97F4A7C15ull);
            std::vector<uint8_t> used(static_cast<size_t>(p - 1), 0);
            while (static_cast<int>(ks.size()) < sampled_k) {
                int64_t k = rng.range(1, p - 2);
                if (!used[static_cast<size_t>(k)]) {
                    used[static_cast<size_t>(k)] = 1;
                    ks.push_back(k);
                }
            }
        }
        const double denom = std::sqrt(static_cast<double>(p)) * std::log(static_cast<double>(p));
        for (int64_t k : ks) {
            const CharSpec chi = base.with_exponent(k);
            std::complex<double> run{0.0, 0.0};
            for (int64_t h = 1; h <= p - 1; ++h) {
                run += chi.eval(h);
                const double ratio = std::abs(run) / denom;
                if (ratio > res.max_ratio) {
                    res.max_ratio = ratio;
                    res.argmax_p = p;
                    res.argmax_k = k;
                    res.argmax_h = h;
                }
            }
            ++res.characters_scanned;
        }
    }
    return res;
}

}  // namespace gapenergy
