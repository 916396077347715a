#pragma once

#include "gapenergy/gap.hpp"
#include "gapenergy/lattice.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace gapenergy {

// Gamma_z = { (x, y) in Z^(2d) : z <a, x> = <a, y> (mod p) } and the box D
// with halfwidths (H_1..H_d, H_1..H_d); r(z) = |D ∩ Gamma_z| for symmetric
// proper gaps.
IntegerLattice rz_lattice(const Gap& g, int64_t z);
WeightedBox rz_box(const Gap& g);

// E_x(A) = #{(a1,a2,a3,a4) in A^4 : a1 a2 = a3 a4}, exact, O(|A|^2).
uint64_t mult_energy(std::span<const int64_t> A, int64_t p);

// Quadruple-loop oracle, |A| <= 80.
uint64_t mult_energy_bruteforce(std::span<const int64_t> A, int64_t p);

// r(z) = #{(x,y) in A^2 : y z = x (mod p)}.
uint64_t rz(std::span<const int64_t> A, int64_t z, int64_t p);

// r(z) = |D ∩ Gamma_z| for a symmetric proper gap of rank 2 (rank 3 behind the
// exploratory flag). Must agree with rz on the gap's element set.
uint64_t rz_via_lattice(const Gap& g, int64_t z, bool allow_rank3 = false);

// s = #{ i : lambda_i(D, Gamma_z) <= 1 }, via exact successive minima.
int classify_zs(const Gap& g, int64_t z, bool allow_rank3 = false);

struct EnergyReport {
    int64_t p = 0;
    uint64_t size = 0;
    uint64_t energy = 0;
    double bound = 0.0;  // (|A|^2 + |A|^4 / p) * ln p
    double ratio = 0.0;  // energy / bound
};

EnergyReport verify_thm12(const Gap& g);
EnergyReport verify_thm12_set(std::span<const int64_t> A, int64_t p);

// Full z-scan: r(z) histogram and the Z_s decomposition of sum r(z)^2.
// The zero bookkeeping makes the reconciled `energy` exactly equal E_x(A):
// with 0 in A,  E = sum_z r(z)^2 + (2|A|-1)^2 - 2(|A|-1)^2 - |A|^2 - (p-1);
// without,      E = sum_z r(z)^2.
struct RzProfile {
    int64_t p = 0;
    uint64_t size = 0;
    bool contains_zero = false;
    std::map<uint64_t, uint64_t> histogram;  // r value -> number of z
    std::vector<uint64_t> class_counts;      // |Z_s|, s = 0..2d
    std::vector<uint64_t> class_sums;        // sum_{z in Z_s} r(z)^2
    uint64_t sum_rz = 0;
    uint64_t sum_rz_sq = 0;
    int64_t zero_correction = 0;
    uint64_t energy = 0;   // sum_rz_sq + zero_correction, equals mult_energy
    double bound = 0.0;    // (|A|^2 + |A|^4/p) ln p, for per-class ratios
};

RzProfile energy_decomposition(const Gap& g, bool allow_rank3 = false);

}  // namespace gapenergy
