#pragma once

#include "gapenergy/limits.hpp"
#include "gapenergy/numeric.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace gapenergy {

using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<BigRat>;
using RatMat = std::vector<RatVec>;

// Canonical row-style Hermite normal form of the lattice generated by `rows`
// (generators in Z^n, at least n of them, rank n). Result is upper triangular
// with positive diagonal and entries above each pivot reduced into [0, pivot).
struct HnfResult {
    IntMat basis;  // n x n
    BigInt det;    // > 0
};
HnfResult hnf(const IntMat& rows, int n);

// Integer row echelon with unimodular transform: u * rows = h, zero rows of h
// at the bottom. Works for any rank.
struct EchelonResult {
    IntMat h;
    IntMat u;
    int rank = 0;
};
EchelonResult hnf_with_transform(const IntMat& rows, int n);

struct WeightedBox {
    std::vector<BigRat> halfwidths;  // h_i > 0

    explicit WeightedBox(std::vector<BigRat> h);
    static WeightedBox from_ints(const std::vector<int64_t>& h);

    int n() const { return static_cast<int>(halfwidths.size()); }
    BigRat volume() const;                 // prod 2 h_i
    BigRat gauge(const RatVec& x) const;   // max_i |x_i| / h_i
    bool contains(const RatVec& x) const;  // gauge <= 1
};

// Full-rank sublattice of R^n represented as (1/denom) * rowspace_Z(basis).
// Canonical form: basis in HNF, gcd of all basis entries and denom is 1.
struct IntegerLattice {
    int n = 0;
    IntMat basis;
    BigInt denom = 1;

    static IntegerLattice from_rows(IntMat rows, int n, BigInt denom);

    BigRat covolume() const;  // |det basis| / denom^n
    RatVec vector_at(const IntVec& coeffs) const;
    bool contains(const RatVec& x) const;
    bool operator==(const IntegerLattice&) const = default;
};

IntegerLattice standard_lattice(int n);

// { x in Z^n : <c, x> = 0 (mod p) }, covolume p. If c = 0 mod p the lattice
// degenerates to Z^n (allowed; signalled by covolume 1).
IntegerLattice lattice_from_congruence(const std::vector<int64_t>& c, int64_t p);

// L_Gamma = Z^d + Z * (a_1/p, ..., a_d/p), covolume 1/p.
IntegerLattice bohr_lattice(const std::vector<int64_t>& a, int64_t p);

IntegerLattice dual_lattice(const IntegerLattice& L);

// Exact L ∩ box via depth-first recursion on the HNF basis with rational
// interval bounds per level. Errors if the covolume estimate or the actual
// count exceeds `cap`.
void for_each_in_box(const IntegerLattice& L, const WeightedBox& box,
                     const std::function<void(const IntVec& numerators, const BigInt& denom)>& fn,
                     uint64_t cap = limits::kLatticeCountCap);
std::vector<RatVec> enumerate_in_box(const IntegerLattice& L, const WeightedBox& box,
                                     uint64_t cap = limits::kLatticeCountCap);
uint64_t count_in_box(const IntegerLattice& L, const WeightedBox& box,
                      uint64_t cap = limits::kLatticeCountCap);

struct MinimaResult {
    std::vector<BigRat> lambdas;    // nondecreasing
    std::vector<RatVec> witnesses;  // independent lattice vectors, gauge = lambda_i
};

// Exact successive minima under N(x) = max_i w_i |x_i| (linf = true) or
// N(x) = sum_i w_i |x_i| (linf = false). Computes the first `count` minima.
MinimaResult successive_minima_weighted(const IntegerLattice& L, const std::vector<BigRat>& weights,
                                        bool linf, int count);

// Box gauge N(x) = max_i |x_i| / h_i.
MinimaResult successive_minima(const IntegerLattice& L, const WeightedBox& box);

// Weighted l1 gauge (the polar body of the box with halfwidths = weights).
MinimaResult successive_minima_l1(const IntegerLattice& L, const std::vector<BigRat>& weights);
BigRat first_minimum_l1(const IntegerLattice& L, const std::vector<BigRat>& weights);

}  // namespace gapenergy
