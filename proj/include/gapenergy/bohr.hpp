#pragma once

#include "gapenergy/lattice.hpp"
#include "gapenergy/numeric.hpp"

#include <cstdint>
#include <vector>

namespace gapenergy {

// B(Gamma, eta) = { x in F_p : ||a_i x / p|| <= eta_i for each i }.
struct BohrSpec {
    int64_t p;
    std::vector<int64_t> a;   // nonzero residues
    std::vector<BigRat> eta;  // rationals in (0, 1/2), denominators <= 10^6

    BohrSpec(int64_t p, std::vector<int64_t> a, std::vector<BigRat> eta);
    int d() const { return static_cast<int>(a.size()); }
};

struct BohrReport {
    int64_t p = 0;
    std::vector<int64_t> a;
    std::vector<BigRat> eta;
    uint64_t size = 0;
    int t = 0;
    BigRat delta;
    BigRat upper_ratio;  // |B| / (delta^(t-d) * eta_1...eta_d * p)
    BigRat lower_ratio;  // |B| / (p / prod ceil(1/eta_i)), >= 1 by pigeonhole
};

// Direct scan over x in [0, p); membership tested with exact rational compares.
std::vector<int64_t> bohr_enumerate(const BohrSpec& spec);

// |R_eta ∩ L_Gamma| through the lattice machinery; equals the scan size.
uint64_t bohr_size_via_lattice(const BohrSpec& spec);

// Number of successive minima of R_eta w.r.t. L_Gamma that are <= 1.
int compute_t(const BohrSpec& spec);

// Exact min over nonzero u with sum a_i u_i = 0 (mod p) of max_i eta_i |u_i|.
BigRat compute_delta(const BohrSpec& spec);

BohrReport verify_prop31(const BohrSpec& spec);

// The near-sharp family: eta_i all equal, a_i = round((delta/eta)^(i-1)).
// B then contains the interval [1, p*eta/a_d].
struct SharpnessInstance {
    BohrSpec spec;
    uint64_t size = 0;        // |B| by scan
    uint64_t guaranteed = 0;  // floor(p * eta / a_d)
    bool ok = false;          // size >= guaranteed
};
SharpnessInstance sharpness_instance(int d, const BigRat& eta, const BigRat& delta_target, int64_t p);

}  // namespace gapenergy
