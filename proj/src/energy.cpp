#include "gapenergy/energy.hpp"

#include "gapenergy/field.hpp"
#include "gapenergy/lattice.hpp"
#include "gapenergy/limits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gapenergy {

namespace {

std::vector<int64_t> as_sorted_set(std::span<const int64_t> A, int64_t p) {
    std::vector<int64_t> v(A.begin(), A.end());
    for (int64_t x : v)
        if (x < 0 || x >= p) throw std::invalid_argument("energy: residue outside [0, p-1]");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

IntegerLattice rz_lattice(const Gap& g, int64_t z) {
    const int d = g.rank();
    const int64_t p = g.p;
    std::vector<int64_t> c(2 * d);
    for (int i = 0; i < d; ++i) {
        c[i] = static_cast<int64_t>(static_cast<__int128>(z) * g.coeffs[i] % p);
        c[d + i] = (p - g.coeffs[i]) % p;
    }
    return lattice_from_congruence(c, p);
}

WeightedBox rz_box(const Gap& g) {
    const int d = g.rank();
    std::vector<int64_t> h(2 * d);
    for (int i = 0; i < d; ++i) h[i] = h[d + i] = g.bounds[i];
    return WeightedBox::from_ints(h);
}

namespace {

void require_symmetric_proper(const Gap& g, bool allow_rank3) {
    if (g.shape != GapShape::Symmetric) throw std::invalid_argument("rz_via_lattice: gap must be symmetric");
    if (g.rank() == 2) {
        // the proven case
    } else if (g.rank() == 3 && allow_rank3) {
        // exploratory mode: same construction, no bound is asserted downstream
    } else {
        throw std::invalid_argument("rz_via_lattice: rank must be 2 (or 3 with allow_rank3)");
    }
    if (!g.is_proper()) throw std::invalid_argument("rz_via_lattice: gap must be proper");
}

}  // namespace

uint64_t mult_energy(std::span<const int64_t> A, int64_t p) {
    const auto set = as_sorted_set(A, p);
    const uint64_t m = set.size();
    if (m * m > limits::kEnergyPairCap) throw std::runtime_error("mult_energy: |A|^2 exceeds cap");
    if (static_cast<uint64_t>(p) * sizeof(uint32_t) > limits::max_mem_bytes())
        throw std::runtime_error("mult_energy: product table exceeds memory cap");

    std::vector<uint32_t> mult(static_cast<size_t>(p), 0);
    uint64_t energy = 0;
    for (int64_t a : set)
        for (int64_t b : set) {
            int64_t c = static_cast<int64_t>(static_cast<__int128>(a) * b % p);
            uint32_t& k = mult[static_cast<size_t>(c)];
            energy += 2ull * k + 1;  // (k+1)^2 - k^2
            ++k;
        }
    return energy;
}

uint64_t mult_energy_bruteforce(std::span<const int64_t> A, int64_t p) {
    const auto set = as_sorted_set(A, p);
    const size_t m = set.size();
    if (m > 80) throw std::runtime_error("mult_energy_bruteforce: |A| > 80");
    std::vector<int64_t> prod(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            prod[i * m + j] = static_cast<int64_t>(static_cast<__int128>(set[i]) * set[j] % p);
    uint64_t count = 0;
    for (size_t i = 0; i < m * m; ++i)
        for (size_t j = 0; j < m * m; ++j)
            if (prod[i] == prod[j]) ++count;
    return count;
}

uint64_t rz(std::span<const int64_t> A, int64_t z, int64_t p) {
    const auto set = as_sorted_set(A, p);
    std::vector<uint8_t> member(static_cast<size_t>(p), 0);
    for (int64_t x : set) member[static_cast<size_t>(x)] = 1;
    uint64_t count = 0;
    for (int64_t y : set) {
        int64_t x = static_cast<int64_t>(static_cast<__int128>(y) * z % p);
        count += member[static_cast<size_t>(x)];
    }
    return count;
}

uint64_t rz_via_lattice(const Gap& g, int64_t z, bool allow_rank3) {
    require_symmetric_proper(g, allow_rank3);
    if (z < 0 || z >= g.p) throw std::invalid_argument("rz_via_lattice: z outside [0, p-1]");
    return count_in_box(rz_lattice(g, z), rz_box(g));
}

int classify_zs(const Gap& g, int64_t z, bool allow_rank3) {
    require_symmetric_proper(g, allow_rank3);
    if (z < 0 || z >= g.p) throw std::invalid_argument("classify_zs: z outside [0, p-1]");
    MinimaResult minima = successive_minima(rz_lattice(g, z), rz_box(g));
    int s = 0;
    for (const auto& l : minima.lambdas)
        if (l <= 1) ++s;
    return s;
}

EnergyReport verify_thm12_set(std::span<const int64_t> A, int64_t p) {
    EnergyReport rep;
    rep.p = p;
    rep.energy = mult_energy(A, p);
    rep.size = as_sorted_set(A, p).size();
    const double m = static_cast<double>(rep.size);
    rep.bound = (m * m + m * m * m * m / static_cast<double>(p)) * std::log(static_cast<double>(p));
    rep.ratio = static_cast<double>(rep.energy) / rep.bound;
    return rep;
}

EnergyReport verify_thm12(const Gap& g) {
    const auto set = g.element_set();
    return verify_thm12_set(set, g.p);
}

namespace {

// Incremental rank over Q of small integer vectors (the zero vector ignored).
class RankTracker {
public:
    explicit RankTracker(int dim) : dim_(dim) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    void add(const IntVec& v) {
        if (rank() == dim_) return;
        RatVec w(dim_);
        bool zero = true;
        for (int i = 0; i < dim_; ++i) {
            w[i] = BigRat(v[i]);
            if (v[i] != 0) zero = false;
        }
        if (zero) return;
        for (const auto& [pivot, row] : rows_) {
            if (w[pivot] == 0) continue;
            BigRat f = w[pivot];
            for (int i = 0; i < dim_; ++i) w[i] -= f * row[i];
        }
        for (int i = 0; i < dim_; ++i) {
            if (w[i] == 0) continue;
            BigRat lead = w[i];
            for (int j = 0; j < dim_; ++j) w[j] /= lead;
            rows_.emplace_back(i, std::move(w));
            return;
        }
    }

private:
    int dim_;
    std::vector<std::pair<int, RatVec>> rows_;  // (pivot index, normalized row)
};

}  // namespace

RzProfile energy_decomposition(const Gap& g, bool allow_rank3) {
    require_symmetric_proper(g, allow_rank3);
    if (g.p > limits::kFullZScanPrimeCap) throw std::runtime_error("energy_decomposition: p exceeds full-scan cap");

    const int two_d = 2 * g.rank();
    const WeightedBox box = rz_box(g);
    const auto set = g.element_set();

    RzProfile prof;
    prof.p = g.p;
    prof.size = set.size();
    prof.contains_zero = std::binary_search(set.begin(), set.end(), int64_t{0});
    prof.class_counts.assign(two_d + 1, 0);
    prof.class_sums.assign(two_d + 1, 0);

    for (int64_t z = 0; z < g.p; ++z) {
        uint64_t r = 0;
        RankTracker tracker(two_d);
        for_each_in_box(rz_lattice(g, z), box, [&](const IntVec& numer, const BigInt&) {
            ++r;
            tracker.add(numer);
        });
        const int s = tracker.rank();
        prof.histogram[r] += 1;
        prof.class_counts[s] += 1;
        prof.class_sums[s] += r * r;
        prof.sum_rz += r;
        prof.sum_rz_sq += r * r;
    }

    if (prof.contains_zero) {
        const int64_t m = static_cast<int64_t>(prof.size);
        prof.zero_correction = (2 * m - 1) * (2 * m - 1) - 2 * (m - 1) * (m - 1) - m * m - (g.p - 1);
    }
    prof.energy = static_cast<uint64_t>(static_cast<int64_t>(prof.sum_rz_sq) + prof.zero_correction);
    const double m = static_cast<double>(prof.size);
    prof.bound = (m * m + m * m * m * m / static_cast<double>(g.p)) * std::log(static_cast<double>(g.p));
    return prof;
}

}  // namespace gapenergy
