#include "gapenergy/gap.hpp"

#include "gapenergy/field.hpp"
#include "gapenergy/limits.hpp"
#include "gapenergy/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gapenergy {

Gap::Gap(int64_t p_, int64_t a0_, std::vector<int64_t> coeffs_, std::vector<int64_t> bounds_, GapShape shape_)
    : p(p_), a0(a0_), coeffs(std::move(coeffs_)), bounds(std::move(bounds_)), shape(shape_) {
    if (!is_prime(static_cast<uint64_t>(p)) || p < 3) throw std::invalid_argument("Gap: p must be a prime >= 3");
    if (coeffs.empty() || coeffs.size() != bounds.size())
        throw std::invalid_argument("Gap: need d = |coeffs| = |bounds| >= 1");
    if (a0 < 0 || a0 >= p) throw std::invalid_argument("Gap: a0 outside [0, p-1]");
    for (int64_t a : coeffs)
        if (a <= 0 || a >= p) throw std::invalid_argument("Gap: coefficients must be nonzero residues");
    for (int64_t h : bounds)
        if (h < 1) throw std::invalid_argument("Gap: bounds must be >= 1");
    if (shape == GapShape::Symmetric && a0 != 0)
        throw std::invalid_argument("Gap: symmetric gaps require a0 = 0");
}

uint64_t Gap::nominal_size() const {
    uint64_t n = 1;
    for (int64_t h : bounds) {
        uint64_t factor = shape == GapShape::OneSided ? static_cast<uint64_t>(h)
                                                      : static_cast<uint64_t>(2 * h + 1);
        if (n > limits::kGapEnumerationCap / factor + 1) return UINT64_MAX;  // saturate
        n *= factor;
    }
    return n;
}

std::vector<int64_t> Gap::enumerate() const {
    const uint64_t n = nominal_size();
    if (n > limits::kGapEnumerationCap)
        throw std::runtime_error("Gap::enumerate: nominal size exceeds enumeration cap");
    if (n * sizeof(int64_t) > limits::max_mem_bytes())
        throw std::runtime_error("Gap::enumerate: nominal size exceeds memory cap");

    const int d = rank();
    std::vector<int64_t> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        lo[i] = shape == GapShape::OneSided ? 1 : -bounds[i];
        hi[i] = bounds[i];
    }
    std::vector<int64_t> out;
    out.reserve(static_cast<size_t>(n));
    std::vector<int64_t> x(lo);
    while (true) {
        int64_t v = a0;
        for (int i = 0; i < d; ++i) v += coeffs[i] * x[i];  // |coeffs*x| <= p * cap, fits int64
        v %= p;
        if (v < 0) v += p;
        out.push_back(v);
        int i = d - 1;
        while (i >= 0 && x[i] == hi[i]) {
            x[i] = lo[i];
            --i;
        }
        if (i < 0) break;
        ++x[i];
    }
    return out;
}

std::vector<int64_t> Gap::element_set() const {
    auto values = enumerate();
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

bool Gap::is_proper() const {
    auto values = enumerate();
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
}

Gap Gap::difference_progression() const {
    if (shape != GapShape::OneSided)
        throw std::invalid_argument("difference_progression: input must be one-sided");
    std::vector<int64_t> diff_coeffs, diff_bounds;
    for (int i = 0; i < rank(); ++i) {
        if (bounds[i] >= 2) {
            diff_coeffs.push_back(coeffs[i]);
            diff_bounds.push_back(bounds[i] - 1);
        }
    }
    if (diff_coeffs.empty())
        throw std::invalid_argument("difference_progression: all axes degenerate (every H_i = 1)");
    return Gap(p, 0, std::move(diff_coeffs), std::move(diff_bounds), GapShape::Symmetric);
}

Gap random_proper_gap(int64_t p, int d, uint64_t size_target, uint64_t seed, GapShape shape) {
    if (d < 1) throw std::invalid_argument("random_proper_gap: rank must be >= 1");
    if (size_target < 1 || size_target > static_cast<uint64_t>(p))
        throw std::invalid_argument("random_proper_gap: size_target must lie in [1, p]");
    Rng rng(seed);
    const int kMaxRejections = 10000;
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        // balanced bounds with +-1 jitter, nominal size kept >= size_target
        double root = std::pow(static_cast<double>(size_target), 1.0 / d);
        std::vector<int64_t> bounds(d);
        for (int i = 0; i < d; ++i) {
            int64_t base;
            if (shape == GapShape::OneSided) {
                base = static_cast<int64_t>(std::ceil(root));
            } else {
                base = static_cast<int64_t>(std::ceil((root - 1.0) / 2.0));
            }
            base += rng.range(-1, 1);
            bounds[i] = std::max<int64_t>(1, base);
        }
        auto nominal = [&]() {
            uint64_t n = 1;
            for (int64_t h : bounds)
                n *= shape == GapShape::OneSided ? static_cast<uint64_t>(h) : static_cast<uint64_t>(2 * h + 1);
            return n;
        };
        while (nominal() < size_target) ++bounds[d - 1];

        std::vector<int64_t> coeffs(d);
        for (int i = 0; i < d; ++i) coeffs[i] = rng.range(1, p - 1);
        int64_t a0 = shape == GapShape::OneSided ? rng.range(0, p - 1) : 0;
        Gap g(p, a0, coeffs, bounds, shape);
        if (g.is_proper()) return g;
    }
    throw std::runtime_error("random_proper_gap: no proper instance after " + std::to_string(kMaxRejections) +
                             " rejections (parameters too dense)");
}

}  // namespace gapenergy
