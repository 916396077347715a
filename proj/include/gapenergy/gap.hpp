#pragma once

#include <cstdint>
#include <vector>

namespace gapenergy {

enum class GapShape { OneSided, Symmetric };

// Generalized arithmetic progression in F_p:
//   OneSided:   { a0 + sum_i coeffs[i]*x_i : 1 <= x_i <= bounds[i] }
//   Symmetric:  { sum_i coeffs[i]*x_i : |x_i| <= bounds[i] }, a0 = 0
struct Gap {
    int64_t p = 0;
    int64_t a0 = 0;
    std::vector<int64_t> coeffs;   // nonzero residues
    std::vector<int64_t> bounds;   // H_i >= 1
    GapShape shape = GapShape::OneSided;

    Gap(int64_t p, int64_t a0, std::vector<int64_t> coeffs, std::vector<int64_t> bounds, GapShape shape);

    int rank() const { return static_cast<int>(coeffs.size()); }
    uint64_t nominal_size() const;

    // One residue per index tuple, lexicographic tuple order (last index fastest).
    std::vector<int64_t> enumerate() const;
    // Sorted distinct residues.
    std::vector<int64_t> element_set() const;
    bool is_proper() const;

    // Index-box difference of a OneSided gap: Symmetric, a0 = 0, bounds H_i - 1,
    // degenerate axes (H_i = 1) dropped. Properness is not guaranteed.
    Gap difference_progression() const;
};

// Rejection-samples coefficients and balanced bounds until the gap is proper.
// Deterministic for a fixed seed. Throws after 10^4 rejections.
Gap random_proper_gap(int64_t p, int d, uint64_t size_target, uint64_t seed,
                      GapShape shape = GapShape::OneSided);

}  // namespace gapenergy
