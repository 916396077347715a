#include "gapenergy/charsum.hpp"

#include "gapenergy/energy.hpp"
#include "gapenergy/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

using namespace gapenergy;

TEST_SUITE("charsum") {

TEST_CASE("nu_counts worked example") {
    // A = B = {1, 2}, p = 13; 2^-1 = 7
    std::vector<int64_t> a{1, 2}, b{1, 2};
    auto nu = nu_counts(a, b, 13);
    CHECK(nu[1] == 2);
    CHECK(nu[2] == 1);
    CHECK(nu[7] == 1);
    CHECK(std::accumulate(nu.begin(), nu.end(), uint64_t{0}) == 4);
}

TEST_CASE("nu mass conservation and the y = 0 exclusion") {
    Rng rng(9);
    const int64_t p = 211;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int64_t> a, b;
        for (int i = 0; i < 15; ++i) a.push_back(rng.range(0, p - 1));
        for (int i = 0; i < 12; ++i) b.push_back(rng.range(0, p - 1));
        b.push_back(0);  // force the excluded element
        auto nu = nu_counts(a, b, p);
        uint64_t zeros = std::count(b.begin(), b.end(), 0);
        uint64_t mass = std::accumulate(nu.begin(), nu.end(), uint64_t{0});
        CHECK(mass == a.size() * (b.size() - zeros));
    }
    // B = {1}: nu is the indicator of A
    std::vector<int64_t> a{3, 5, 9}, b{1};
    auto nu = nu_counts(a, b, 13);
    CHECK(nu[3] == 1);
    CHECK(nu[5] == 1);
    CHECK(nu[9] == 1);
    CHECK(std::accumulate(nu.begin(), nu.end(), uint64_t{0}) == 3);
}

TEST_CASE("lemma24_lhs small cases") {
    CharSpec chi(13, 6);  // quadratic character mod 13
    std::vector<int64_t> a{1, 2}, b{1, 2};

    CHECK(lemma24_lhs(a, b, std::vector<int64_t>{}, chi) == 0.0);  // empty J

    // |J| = 1: unit modulus except at u = -t0, so lhs = sum nu - nu(-t0)
    std::vector<int64_t> j1{4};
    auto nu = nu_counts(a, b, 13);
    double expected = 0;
    for (int64_t u = 0; u < 13; ++u)
        if (u != (13 - 4) % 13) expected += nu[static_cast<size_t>(u)];
    CHECK(lemma24_lhs(a, b, j1, chi) == doctest::Approx(expected).epsilon(1e-9));

    // J = {1, 2}: direct evaluation oracle, written out independently
    std::vector<int64_t> j2{1, 2};
    double direct = 0;
    for (int64_t u = 0; u < 13; ++u) {
        uint64_t count = 0;
        for (int64_t x : a)
            for (int64_t y : b)
                if (x * mod_inv(y, 13) % 13 == u) ++count;
        if (count == 0) continue;
        std::complex<double> inner{0, 0};
        for (int64_t t : j2) inner += chi.eval((u + t) % 13);
        direct += static_cast<double>(count) * std::abs(inner);
    }
    CHECK(lemma24_lhs(a, b, j2, chi) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("lemma24_rhs formula") {
    // r = 1, |J| = 1: (E(A) E(B))^(1/4) * (2 sqrt(p) + 2p)^(1/2)
    const int64_t p = 13;
    std::vector<int64_t> a{1, 2}, b{1, 2};
    const double ea = static_cast<double>(mult_energy(a, p));
    const double eb = static_cast<double>(mult_energy(b, p));
    const double expected =
        std::pow(ea * eb, 0.25) * std::sqrt(2.0 * std::sqrt(13.0) + 2.0 * 13.0);
    CHECK(lemma24_rhs(a, b, 1, 1, p) == doctest::Approx(expected).epsilon(1e-12));

    // independent re-derivation for r = 2, |J| = 3
    const double ab = 4.0;
    const double bracket = std::pow(3.0, 4) * 4.0 * std::sqrt(13.0) + std::pow(4.0 * 3.0, 2) * 13.0;
    const double expected2 = std::pow(ab, 0.5) * std::pow(ea * eb, 1.0 / 8) * std::pow(bracket, 0.25);
    CHECK(lemma24_rhs(a, b, 3, 2, p) == doctest::Approx(expected2).epsilon(1e-12));

    // monotone nondecreasing in |J|
    double prev = 0;
    for (uint64_t j = 1; j <= 8; ++j) {
        double v = lemma24_rhs(a, b, j, 2, p);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("amplification inequality on random instances") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const int64_t p = 211;
        std::vector<int64_t> a, b, j;
        const int na = 3 + static_cast<int>(rng.below(20));
        const int nb = 3 + static_cast<int>(rng.below(20));
        const int nj = 1 + static_cast<int>(rng.below(6));
        for (int i = 0; i < na; ++i) a.push_back(rng.range(0, p - 1));
        for (int i = 0; i < nb; ++i) b.push_back(rng.range(0, p - 1));
        for (int i = 0; i < nj; ++i) j.push_back(rng.range(0, p - 1));
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        const int r = 1 + static_cast<int>(rng.below(3));
        CharSpec chi(p, rng.range(1, p - 2));
        const double lhs = lemma24_lhs(a, b, j, chi);
        const double rhs = lemma24_rhs(a, b, j.size(), r, p);
        CHECK(lhs <= rhs + 1e-6 * static_cast<double>(a.size() * b.size() * j.size()));
    }
}

TEST_CASE("burgess pipeline end to end") {
    Gap g = random_proper_gap(10007, 2, 63, 99, GapShape::OneSided);
    BurgessConfig cfg{g, BigRat(1, 40), 2, 5, 7};
    PipelineReport rep = burgess_pipeline(cfg);

    CHECK(rep.p == 10007);
    CHECK(rep.size_a == g.element_set().size());
    CHECK(rep.size_j == 2);       // floor(p^eps) = 1 clamped to 2
    CHECK(rep.j_len_floor == 1);
    CHECK(rep.nu_mass_ok);
    CHECK(rep.normalized <= 1.0 + 1e-12);
    CHECK(rep.shift_violations == 0);
    CHECK(rep.shift_samples == 100);
    CHECK(rep.lhs_lemma <= rep.rhs_lemma + 1e-6 * static_cast<double>(rep.size_a * rep.size_b * rep.size_j));
    CHECK(std::abs(rep.main_sum) <= static_cast<double>(rep.size_a) + 1e-9);

    // trivial character rejected
    BurgessConfig trivial{g, BigRat(1, 40), 2, 0, 7};
    CHECK_THROWS_AS(burgess_pipeline(trivial), std::invalid_argument);

    // eps large enough to shrink B to nothing
    BurgessConfig crush{g, BigRat(1, 2), 2, 5, 7};
    CHECK_THROWS_AS(burgess_pipeline(crush), std::invalid_argument);

    // symmetric gaps are not pipeline inputs
    Gap sym(13, 0, {1, 5}, {1, 1}, GapShape::Symmetric);
    CHECK_THROWS_AS(burgess_pipeline(BurgessConfig{sym, BigRat(1, 40), 2, 5, 7}),
                    std::invalid_argument);
}

TEST_CASE("polya_vinogradov_scan") {
    // quadratic character p = 7, H = 3: |1 + 1 - 1| / (sqrt 7 ln 7) ~ 0.194
    const double expect = 1.0 / (std::sqrt(7.0) * std::log(7.0));
    CHECK(expect == doctest::Approx(0.194).epsilon(1e-2));
    PvScanResult seven = polya_vinogradov_scan(7);
    CHECK(seven.max_ratio >= expect - 1e-12);

    PvScanResult res = polya_vinogradov_scan(100);
    CHECK(res.max_ratio < 4.0);
    CHECK(res.max_ratio > 0.0);
    CHECK(res.characters_scanned > 0);
    CHECK_THROWS_AS(polya_vinogradov_scan(5000), std::invalid_argument);
}

}  // TEST_SUITE
