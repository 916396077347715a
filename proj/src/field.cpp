#include "gapenergy/field.hpp"

#include "gapenergy/limits.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace gapenergy {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t acc = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // witness set valid for all n < 2^64
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int64_t mod_pow(int64_t base, uint64_t exp, int64_t p) {
    int64_t b = base % p;
    if (b < 0) b += p;
    return static_cast<int64_t>(powmod_u64(static_cast<uint64_t>(b), exp, static_cast<uint64_t>(p)));
}

int64_t mod_inv(int64_t a, int64_t p) {
    int64_t r = a % p;
    if (r < 0) r += p;
    if (r == 0) throw std::invalid_argument("mod_inv: zero has no inverse");
    // extended Euclid
    int64_t old_r = r, rr = p;
    int64_t old_s = 1, s = 0;
    while (rr != 0) {
        int64_t q = old_r / rr;
        int64_t t = old_r - q * rr;
        old_r = rr;
        rr = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    int64_t inv = old_s % p;
    if (inv < 0) inv += p;
    return inv;
}

namespace {

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

int64_t find_primitive_root(int64_t p) {
    if (!is_prime(static_cast<uint64_t>(p))) throw std::invalid_argument("find_primitive_root: p not prime");
    if (p == 2) return 1;
    const auto factors = prime_factors(p - 1);
    for (int64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (int64_t q : factors) {
            if (mod_pow(g, static_cast<uint64_t>((p - 1) / q), p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::logic_error("find_primitive_root: none found");
}

PrimeField::PrimeField(int64_t modulus) : p(modulus) {
    if (p < 3 || !is_prime(static_cast<uint64_t>(p)))
        throw std::invalid_argument("PrimeField: modulus must be a prime >= 3, got " + std::to_string(p));
}

CharSpec::CharSpec(int64_t p, int64_t k) : p_(p), k_(k) {
    PrimeField field(p);  // validates
    if (p > limits::kCharTablePrimeCap)
        throw std::invalid_argument("CharSpec: p exceeds dlog table cap");
    if (static_cast<uint64_t>(p) * sizeof(uint32_t) > limits::max_mem_bytes())
        throw std::invalid_argument("CharSpec: dlog table exceeds memory cap");
    if (k < 0 || k > p - 2) throw std::invalid_argument("CharSpec: exponent k must lie in [0, p-2]");
    g_ = find_primitive_root(p);
    auto table = std::make_shared<std::vector<uint32_t>>(static_cast<size_t>(p), 0u);
    int64_t cur = 1;
    for (int64_t j = 0; j <= p - 2; ++j) {
        (*table)[static_cast<size_t>(cur)] = static_cast<uint32_t>(j);
        cur = field.mul(cur, g_);
    }
    dlog_ = std::move(table);
}

CharSpec::CharSpec(int64_t p, int64_t g, int64_t k, std::shared_ptr<const std::vector<uint32_t>> table)
    : p_(p), g_(g), k_(k), dlog_(std::move(table)) {}

uint32_t CharSpec::dlog(int64_t n) const {
    if (n <= 0 || n >= p_) throw std::invalid_argument("CharSpec::dlog: argument outside [1, p-1]");
    return (*dlog_)[static_cast<size_t>(n)];
}

std::complex<double> CharSpec::eval(int64_t n) const {
    if (n < 0 || n >= p_) throw std::invalid_argument("CharSpec::eval: argument outside [0, p-1]");
    if (n == 0) return {0.0, 0.0};
    // reduce k*dlog mod (p-1) before going to floating point
    uint64_t r = static_cast<uint64_t>(k_) * (*dlog_)[static_cast<size_t>(n)] % static_cast<uint64_t>(p_ - 1);
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(p_ - 1);
    return std::polar(1.0, angle);
}

CharSpec CharSpec::with_exponent(int64_t k) const {
    if (k < 0 || k > p_ - 2) throw std::invalid_argument("CharSpec: exponent k must lie in [0, p-2]");
    return CharSpec(p_, g_, k, dlog_);
}

std::complex<double> char_sum(const CharSpec& chi, std::span<const int64_t> values) {
    std::complex<double> acc{0.0, 0.0};
    for (int64_t n : values) acc += chi.eval(n);
    return acc;
}

}  // namespace gapenergy
