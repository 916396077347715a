#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace gapenergy {

// Deterministic Miller-Rabin, exact for all n < 2^64.
bool is_prime(uint64_t n);

int64_t mod_pow(int64_t base, uint64_t exp, int64_t p);

// Inverse of a mod p for prime p; rejects a ≡ 0.
int64_t mod_inv(int64_t a, int64_t p);

// Smallest primitive root mod p.
int64_t find_primitive_root(int64_t p);

struct PrimeField {
    int64_t p;
    explicit PrimeField(int64_t modulus);

    int64_t mul(int64_t a, int64_t b) const { return static_cast<int64_t>(static_cast<__int128>(a) * b % p); }
    int64_t add(int64_t a, int64_t b) const { int64_t s = a + b; return s >= p ? s - p : s; }
    int64_t sub(int64_t a, int64_t b) const { int64_t s = a - b; return s < 0 ? s + p : s; }
    int64_t neg(int64_t a) const { return a == 0 ? 0 : p - a; }
    int64_t inv(int64_t a) const { return mod_inv(a, p); }
};

// Dirichlet character mod p parametrized by exponent k against the smallest
// primitive root g:  chi(n) = e^(2*pi*i * k * dlog(n) / (p-1)), chi(0) = 0.
// The dlog table is dense and shared, so copies are cheap and thread-safe to
// read concurrently.
class CharSpec {
public:
    CharSpec(int64_t p, int64_t k);

    int64_t p() const { return p_; }
    int64_t g() const { return g_; }
    int64_t k() const { return k_; }
    bool trivial() const { return k_ == 0; }

    uint32_t dlog(int64_t n) const;                 // n in [1, p-1]
    std::complex<double> eval(int64_t n) const;     // n in [0, p-1]

    // Same table, different exponent.
    CharSpec with_exponent(int64_t k) const;

private:
    CharSpec(int64_t p, int64_t g, int64_t k, std::shared_ptr<const std::vector<uint32_t>> table);

    int64_t p_, g_, k_;
    std::shared_ptr<const std::vector<uint32_t>> dlog_;
};

std::complex<double> char_sum(const CharSpec& chi, std::span<const int64_t> values);

}  // namespace gapenergy
