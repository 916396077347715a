#include "gapenergy/bohr.hpp"

#include "gapenergy/field.hpp"
#include "gapenergy/limits.hpp"

#include <stdexcept>

namespace gapenergy {

BohrSpec::BohrSpec(int64_t p_, std::vector<int64_t> a_, std::vector<BigRat> eta_)
    : p(p_), a(std::move(a_)), eta(std::move(eta_)) {
    if (!is_prime(static_cast<uint64_t>(p)) || p < 3) throw std::invalid_argument("BohrSpec: p must be a prime >= 3");
    if (a.empty() || a.size() != eta.size()) throw std::invalid_argument("BohrSpec: need d = |a| = |eta| >= 1");
    for (auto& ai : a) {
        ai = ((ai % p) + p) % p;
        if (ai == 0) throw std::invalid_argument("BohrSpec: frequencies must be nonzero mod p");
    }
    for (const auto& e : eta) {
        if (e <= 0 || e >= BigRat(1, 2)) throw std::invalid_argument("BohrSpec: eta must lie in (0, 1/2)");
        if (denominator(e) > 1000000) throw std::invalid_argument("BohrSpec: eta denominator above 10^6");
    }
}

std::vector<int64_t> bohr_enumerate(const BohrSpec& spec) {
    if (spec.p > limits::kBohrScanPrimeCap) throw std::runtime_error("bohr_enumerate: p exceeds scan cap");
    const int64_t p = spec.p;
    const int d = spec.d();
    // ||a x / p|| <= eta  <=>  min(r, p - r) * den <= num * p  with r = a x mod p
    std::vector<int64_t> num(d), den(d);
    for (int i = 0; i < d; ++i) {
        num[i] = numerator(spec.eta[i]).convert_to<int64_t>();
        den[i] = denominator(spec.eta[i]).convert_to<int64_t>();
    }
    std::vector<int64_t> out;
    for (int64_t x = 0; x < p; ++x) {
        bool in = true;
        for (int i = 0; i < d; ++i) {
            int64_t r = static_cast<int64_t>(static_cast<__int128>(spec.a[i]) * x % p);
            int64_t dist = std::min(r, p - r);
            if (static_cast<__int128>(dist) * den[i] > static_cast<__int128>(num[i]) * p) {
                in = false;
                break;
            }
        }
        if (in) out.push_back(x);
    }
    return out;
}

uint64_t bohr_size_via_lattice(const BohrSpec& spec) {
    return count_in_box(bohr_lattice(spec.a, spec.p), WeightedBox(spec.eta));
}

int compute_t(const BohrSpec& spec) {
    MinimaResult minima = successive_minima(bohr_lattice(spec.a, spec.p), WeightedBox(spec.eta));
    int t = 0;
    for (const auto& l : minima.lambdas)
        if (l <= 1) ++t;
    return t;
}

BigRat compute_delta(const BohrSpec& spec) {
    // shortest nonzero vector of the dual congruence lattice under max_i eta_i |u_i|
    IntegerLattice dual = lattice_from_congruence(spec.a, spec.p);
    return successive_minima_weighted(dual, spec.eta, /*linf=*/true, 1).lambdas[0];
}

BohrReport verify_prop31(const BohrSpec& spec) {
    BohrReport rep;
    rep.p = spec.p;
    rep.a = spec.a;
    rep.eta = spec.eta;
    rep.size = bohr_enumerate(spec).size();
    rep.t = compute_t(spec);
    rep.delta = compute_delta(spec);

    const int d = spec.d();
    BigRat eta_prod(1);
    for (const auto& e : spec.eta) eta_prod *= e;
    rep.upper_ratio = BigRat(rep.size) / (rat_pow(rep.delta, rep.t - d) * eta_prod * spec.p);

    BigInt cells(1);
    for (const auto& e : spec.eta) cells *= rat_ceil(BigRat(1) / e);
    rep.lower_ratio = BigRat(rep.size) * BigRat(cells) / spec.p;
    return rep;
}

SharpnessInstance sharpness_instance(int d, const BigRat& eta, const BigRat& delta_target, int64_t p) {
    if (d < 1) throw std::invalid_argument("sharpness_instance: d must be >= 1");
    if (delta_target < eta) throw std::invalid_argument("sharpness_instance: delta must be >= eta");
    const BigRat ratio = delta_target / eta;
    if (rat_pow(ratio, d - 1) >= BigRat(p) * eta)
        throw std::invalid_argument("sharpness_instance: requires (delta/eta)^(d-1) < p*eta");

    std::vector<int64_t> a(d);
    for (int i = 0; i < d; ++i) a[i] = rat_round(rat_pow(ratio, i)).convert_to<int64_t>();

    SharpnessInstance inst{BohrSpec(p, a, std::vector<BigRat>(d, eta)), 0, 0, false};
    inst.size = bohr_enumerate(inst.spec).size();
    inst.guaranteed = rat_floor(BigRat(p) * eta / a[d - 1]).convert_to<uint64_t>();
    inst.ok = inst.size >= inst.guaranteed;
    return inst;
}

}  // namespace gapenergy
