#include "gapenergy/lattice.hpp"

#include "gapenergy/field.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gapenergy {

namespace {

constexpr uint64_t kNodeBudget = 1ull << 28;

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;  // truncates toward zero; b > 0 at call sites
    if (a < 0 && q * b != a) --q;
    return q;
}

IntMat int_identity(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
    const int rows = static_cast<int>(a.size());
    const int inner = static_cast<int>(b.size());
    const int cols = static_cast<int>(b[0].size());
    IntMat out(rows, IntVec(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    const int rows = static_cast<int>(a.size());
    const int inner = static_cast<int>(b.size());
    const int cols = static_cast<int>(b[0].size());
    RatMat out(rows, RatVec(cols, BigRat(0)));
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

BigRat rat_dot(const RatVec& a, const RatVec& b) {
    BigRat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec rat_vec_mat(const RatVec& v, const RatMat& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    RatVec out(cols, BigRat(0));
    for (int i = 0; i < rows; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < cols; ++j) out[j] += v[i] * m[i][j];
    }
    return out;
}

RatMat rat_gram(const RatMat& rows) {
    const int k = static_cast<int>(rows.size());
    RatMat g(k, RatVec(k, BigRat(0)));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            g[i][j] = rat_dot(rows[i], rows[j]);
            g[j][i] = g[i][j];
        }
    return g;
}

// Gauss-Jordan; throws on singular input.
RatMat rat_inverse(RatMat a) {
    const int n = static_cast<int>(a.size());
    RatMat inv(n, RatVec(n, BigRat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("rat_inverse: singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        BigRat d = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            BigRat f = a[i][col];
            for (int j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// I - W^T (W W^T)^-1 W : projects row vectors onto the orthogonal complement
// of rowspace(W).
RatMat perp_projector(const RatMat& w, int n) {
    RatMat gram_inv = rat_inverse(rat_gram(w));
    const int k = static_cast<int>(w.size());
    RatMat proj(n, RatVec(n, BigRat(0)));
    // W^T gram_inv W
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (gram_inv[a][b] == 0) continue;
            for (int i = 0; i < n; ++i) {
                if (w[a][i] == 0) continue;
                BigRat f = w[a][i] * gram_inv[a][b];
                for (int j = 0; j < n; ++j) proj[i][j] += f * w[b][j];
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) proj[i][j] = (i == j ? BigRat(1) : BigRat(0)) - proj[i][j];
    return proj;
}

IntMat clear_denominators(const RatMat& m) {
    BigInt l = 1;
    for (const auto& row : m)
        for (const auto& x : row) l = lcm(l, denominator(x));
    IntMat out(m.size(), IntVec(m[0].size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            out[i][j] = numerator(m[i][j]) * (l / denominator(m[i][j]));
    return out;
}

}  // namespace

EchelonResult hnf_with_transform(const IntMat& rows_in, int n) {
    IntMat rows = rows_in;
    const int m = static_cast<int>(rows.size());
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("hnf: ragged input");
    IntMat u = int_identity(m);
    std::vector<int> pivot_cols;
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        while (true) {
            int best = -1;
            for (int i = rank; i < m; ++i) {
                if (rows[i][col] == 0) continue;
                if (best < 0 || abs(rows[i][col]) < abs(rows[best][col])) best = i;
            }
            if (best < 0) break;
            std::swap(rows[rank], rows[best]);
            std::swap(u[rank], u[best]);
            bool leftover = false;
            for (int i = rank + 1; i < m; ++i) {
                if (rows[i][col] == 0) continue;
                BigInt q = rows[i][col] / rows[rank][col];
                if (q != 0) {
                    for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[rank][j];
                    for (int j = 0; j < m; ++j) u[i][j] -= q * u[rank][j];
                }
                if (rows[i][col] != 0) leftover = true;
            }
            if (!leftover) break;
        }
        if (rank < m && rows[rank][col] != 0) {
            if (rows[rank][col] < 0) {
                for (auto& x : rows[rank]) x = -x;
                for (auto& x : u[rank]) x = -x;
            }
            pivot_cols.push_back(col);
            ++rank;
        }
    }
    // reduce entries above each pivot into [0, pivot)
    for (int k = 0; k < rank; ++k) {
        int col = pivot_cols[k];
        for (int i = 0; i < k; ++i) {
            BigInt q = floor_div(rows[i][col], rows[k][col]);
            if (q != 0) {
                for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[k][j];
                for (int j = 0; j < m; ++j) u[i][j] -= q * u[k][j];
            }
        }
    }
    return {std::move(rows), std::move(u), rank};
}

HnfResult hnf(const IntMat& rows, int n) {
    if (static_cast<int>(rows.size()) < n) throw std::invalid_argument("hnf: fewer generators than dimension");
    EchelonResult e = hnf_with_transform(rows, n);
    if (e.rank != n) throw std::invalid_argument("hnf: input not of full rank");
    IntMat basis(e.h.begin(), e.h.begin() + n);
    BigInt det = 1;
    for (int i = 0; i < n; ++i) det *= basis[i][i];
    return {std::move(basis), std::move(det)};
}

WeightedBox::WeightedBox(std::vector<BigRat> h) : halfwidths(std::move(h)) {
    if (halfwidths.empty()) throw std::invalid_argument("WeightedBox: empty");
    for (const auto& x : halfwidths)
        if (x <= 0) throw std::invalid_argument("WeightedBox: halfwidths must be positive");
}

WeightedBox WeightedBox::from_ints(const std::vector<int64_t>& h) {
    std::vector<BigRat> hw;
    hw.reserve(h.size());
    for (int64_t x : h) hw.emplace_back(x);
    return WeightedBox(std::move(hw));
}

BigRat WeightedBox::volume() const {
    BigRat v(1);
    for (const auto& h : halfwidths) v *= 2 * h;
    return v;
}

BigRat WeightedBox::gauge(const RatVec& x) const {
    BigRat g(0);
    for (int i = 0; i < n(); ++i) {
        BigRat t = rat_abs(x[i]) / halfwidths[i];
        if (t > g) g = t;
    }
    return g;
}

bool WeightedBox::contains(const RatVec& x) const { return gauge(x) <= 1; }

IntegerLattice IntegerLattice::from_rows(IntMat rows, int n, BigInt denom) {
    if (denom <= 0) throw std::invalid_argument("IntegerLattice: denom must be positive");
    HnfResult h = hnf(rows, n);
    BigInt g = denom;
    for (const auto& row : h.basis)
        for (const auto& x : row)
            if (x != 0) g = gcd(g, abs(x));
    if (g > 1) {
        denom /= g;
        for (auto& row : h.basis)
            for (auto& x : row) x /= g;
    }
    IntegerLattice L;
    L.n = n;
    L.basis = std::move(h.basis);
    L.denom = std::move(denom);
    return L;
}

BigRat IntegerLattice::covolume() const {
    BigInt det = 1;
    for (int i = 0; i < n; ++i) det *= basis[i][i];
    return BigRat(det) / rat_pow(BigRat(denom), n);
}

RatVec IntegerLattice::vector_at(const IntVec& coeffs) const {
    RatVec out(n, BigRat(0));
    for (int i = 0; i < n; ++i) {
        if (coeffs[i] == 0) continue;
        for (int j = i; j < n; ++j) out[j] += BigRat(coeffs[i] * basis[i][j], denom);
    }
    return out;
}

bool IntegerLattice::contains(const RatVec& x) const {
    // solve z * basis = denom * x by forward substitution on the triangular basis
    RatVec rem(n);
    for (int j = 0; j < n; ++j) rem[j] = x[j] * BigRat(denom);
    for (int i = 0; i < n; ++i) {
        BigRat zi = rem[i] / BigRat(basis[i][i]);
        if (denominator(zi) != 1) return false;
        BigInt z = numerator(zi);
        for (int j = i; j < n; ++j) rem[j] -= BigRat(z * basis[i][j]);
    }
    return true;
}

IntegerLattice standard_lattice(int n) {
    IntegerLattice L;
    L.n = n;
    L.basis = int_identity(n);
    L.denom = 1;
    return L;
}

IntegerLattice lattice_from_congruence(const std::vector<int64_t>& c, int64_t p) {
    const int n = static_cast<int>(c.size());
    if (n == 0) throw std::invalid_argument("lattice_from_congruence: empty congruence");
    if (!is_prime(static_cast<uint64_t>(p))) throw std::invalid_argument("lattice_from_congruence: p not prime");
    std::vector<int64_t> cr(n);
    int pivot = -1;
    for (int i = 0; i < n; ++i) {
        cr[i] = ((c[i] % p) + p) % p;
        if (pivot < 0 && cr[i] != 0) pivot = i;
    }
    if (pivot < 0) return standard_lattice(n);  // c = 0: the condition is vacuous
    int64_t inv = mod_inv(cr[pivot], p);
    IntMat rows;
    IntVec pe(n, 0);
    pe[pivot] = p;
    rows.push_back(pe);
    for (int j = 0; j < n; ++j) {
        if (j == pivot) continue;
        IntVec v(n, 0);
        v[j] = 1;
        v[pivot] = -static_cast<int64_t>(static_cast<__int128>(cr[j]) * inv % p);
        rows.push_back(std::move(v));
    }
    return IntegerLattice::from_rows(std::move(rows), n, 1);
}

IntegerLattice bohr_lattice(const std::vector<int64_t>& a, int64_t p) {
    const int d = static_cast<int>(a.size());
    if (d == 0) throw std::invalid_argument("bohr_lattice: empty frequency tuple");
    if (!is_prime(static_cast<uint64_t>(p))) throw std::invalid_argument("bohr_lattice: p not prime");
    for (int64_t ai : a)
        if (ai % p == 0) throw std::invalid_argument("bohr_lattice: frequencies must be nonzero mod p");
    IntMat rows;
    for (int i = 0; i < d; ++i) {
        IntVec v(d, 0);
        v[i] = p;
        rows.push_back(std::move(v));
    }
    IntVec gen(d);
    for (int i = 0; i < d; ++i) gen[i] = ((a[i] % p) + p) % p;
    rows.push_back(std::move(gen));
    return IntegerLattice::from_rows(std::move(rows), d, p);
}

IntegerLattice dual_lattice(const IntegerLattice& L) {
    const int n = L.n;
    RatMat b(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = BigRat(L.basis[i][j]);
    RatMat inv = rat_inverse(b);
    // dual basis rows: denom * (basis^-1)^T
    RatMat dual(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dual[i][j] = BigRat(L.denom) * inv[j][i];
    BigInt common = 1;
    for (const auto& row : dual)
        for (const auto& x : row) common = lcm(common, denominator(x));
    IntMat rows(n, IntVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = numerator(dual[i][j]) * (common / denominator(dual[i][j]));
    return IntegerLattice::from_rows(std::move(rows), n, common);
}

void for_each_in_box(const IntegerLattice& L, const WeightedBox& box,
                     const std::function<void(const IntVec&, const BigInt&)>& fn, uint64_t cap) {
    const int n = L.n;
    if (box.n() != n) throw std::invalid_argument("for_each_in_box: dimension mismatch");
    if (box.volume() / L.covolume() > BigRat(cap))
        throw std::runtime_error("for_each_in_box: expected count (volume/covolume) exceeds cap");

    IntVec cur(n, 0);
    uint64_t emitted = 0, nodes = 0;
    const BigRat qden(L.denom);

    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            if (++emitted > cap) throw std::runtime_error("for_each_in_box: count cap exceeded");
            fn(cur, L.denom);
            return;
        }
        const BigRat hq = box.halfwidths[j] * qden;
        const BigRat cj(cur[j]);
        const BigRat bjj(L.basis[j][j]);
        BigInt lo = rat_ceil((-hq - cj) / bjj);
        BigInt hi = rat_floor((hq - cj) / bjj);
        if (lo > hi) return;
        for (int l = j; l < n; ++l) cur[l] += lo * L.basis[j][l];
        BigInt z = lo;
        while (true) {
            if (++nodes > kNodeBudget) throw std::runtime_error("for_each_in_box: node budget exceeded");
            rec(j + 1);
            if (z == hi) break;
            ++z;
            for (int l = j; l < n; ++l) cur[l] += L.basis[j][l];
        }
        for (int l = j; l < n; ++l) cur[l] -= hi * L.basis[j][l];
    };
    rec(0);
}

std::vector<RatVec> enumerate_in_box(const IntegerLattice& L, const WeightedBox& box, uint64_t cap) {
    std::vector<RatVec> out;
    for_each_in_box(
        L, box,
        [&](const IntVec& numer, const BigInt& den) {
            RatVec v(numer.size());
            for (size_t i = 0; i < numer.size(); ++i) v[i] = BigRat(numer[i], den);
            out.push_back(std::move(v));
        },
        cap);
    return out;
}

uint64_t count_in_box(const IntegerLattice& L, const WeightedBox& box, uint64_t cap) {
    uint64_t count = 0;
    for_each_in_box(L, box, [&](const IntVec&, const BigInt&) { ++count; }, cap);
    return count;
}

namespace {

// Diagonal-scaled gauge: N(x) = max_i w_i |x_i| (linf) or sum_i w_i |x_i| (l1).
struct DiagGauge {
    std::vector<BigRat> w;
    bool linf = true;

    int n() const { return static_cast<int>(w.size()); }

    BigRat eval_scaled(const RatVec& xs) const {
        BigRat acc(0);
        for (const auto& v : xs) {
            BigRat a = rat_abs(v);
            if (linf) {
                if (a > acc) acc = a;
            } else {
                acc += a;
            }
        }
        return acc;
    }

    BigRat body_volume() const {
        BigRat v(1);
        for (const auto& wi : w) v *= BigRat(2) / wi;
        if (!linf) {
            BigInt f = 1;
            for (int i = 2; i <= n(); ++i) f *= i;
            v /= BigRat(f);
        }
        return v;
    }

    // N(x) <= r implies || (w_i x_i)_i ||_2^2 <= factor * r^2
    BigRat l2_factor() const { return linf ? BigRat(n()) : BigRat(1); }
};

// Exact enumeration of { z in Z^m : (z + shift) G (z + shift)^T <= budget }
// for positive definite rational G, via LDL^T and a zig-zag scan per level.
// The budget is read live, so callers may shrink it as candidates come in;
// shrinking never loses points that satisfy the final budget.
class QuadEnumerator {
public:
    explicit QuadEnumerator(const RatMat& gram) : m_(static_cast<int>(gram.size())) {
        mu_ = RatMat(m_, RatVec(m_, BigRat(0)));
        d_ = RatVec(m_, BigRat(0));
        for (int i = 0; i < m_; ++i) {
            BigRat di = gram[i][i];
            for (int l = 0; l < i; ++l) di -= mu_[i][l] * mu_[i][l] * d_[l];
            if (di <= 0) throw std::logic_error("QuadEnumerator: form not positive definite");
            d_[i] = di;
            for (int j = i + 1; j < m_; ++j) {
                BigRat v = gram[j][i];
                for (int l = 0; l < i; ++l) v -= mu_[j][l] * mu_[i][l] * d_[l];
                mu_[j][i] = v / di;
            }
        }
    }

    void enumerate(const RatVec& shift, const BigRat& budget,
                   const std::function<void(const IntVec&)>& emit) const {
        if (budget < 0) return;
        IntVec z(m_, 0);
        uint64_t nodes = 0;
        descend(m_ - 1, BigRat(0), budget, shift, z, emit, nodes);
    }

private:
    // Q(v) = sum_j d_j (v_j + sum_{i>j} v_i mu[i][j])^2 with v = z + shift.
    void descend(int j, const BigRat& cost_above, const BigRat& budget, const RatVec& shift, IntVec& z,
                 const std::function<void(const IntVec&)>& emit, uint64_t& nodes) const {
        BigRat c = shift[j];
        for (int i = j + 1; i < m_; ++i) {
            if (mu_[i][j] == 0) continue;
            c += (BigRat(z[i]) + shift[i]) * mu_[i][j];
        }
        const BigInt z0 = rat_round(-c);
        for (int dir = 0; dir < 2; ++dir) {
            BigInt zi = dir == 0 ? z0 : z0 - 1;
            while (true) {
                if (++nodes > kNodeBudget) throw std::runtime_error("QuadEnumerator: node budget exceeded");
                BigRat e = BigRat(zi) + c;
                BigRat cost = cost_above + d_[j] * e * e;
                if (cost > budget) break;
                z[j] = zi;
                if (j == 0) {
                    emit(z);
                } else {
                    descend(j - 1, cost, budget, shift, z, emit, nodes);
                }
                if (dir == 0)
                    ++zi;
                else
                    --zi;
            }
        }
        z[j] = 0;
    }

    int m_;
    RatMat mu_;
    RatVec d_;
};

// LLL (delta = 3/4) driven by an explicit Gram matrix, exact rationals.
// Returns the unimodular transform U; U * rows is the reduced basis.
IntMat lll_gram(RatMat g) {
    const int m = static_cast<int>(g.size());
    IntMat u = int_identity(m);
    const BigRat delta(3, 4);
    RatMat mu(m, RatVec(m, BigRat(0)));
    RatVec gs(m, BigRat(0));

    auto recompute = [&] {
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < i; ++j) {
                BigRat v = g[i][j];
                for (int l = 0; l < j; ++l) v -= mu[i][l] * mu[j][l] * gs[l];
                mu[i][j] = v / gs[j];
            }
            BigRat b = g[i][i];
            for (int l = 0; l < i; ++l) b -= mu[i][l] * mu[i][l] * gs[l];
            if (b <= 0) throw std::logic_error("lll_gram: gram not positive definite");
            gs[i] = b;
        }
    };
    // b_k -= q b_j, mirrored on the Gram (rows then columns keeps it symmetric)
    auto axpy = [&](int k, int j, const BigInt& q) {
        const BigRat qr(q);
        for (int l = 0; l < m; ++l) g[k][l] -= qr * g[j][l];
        for (int l = 0; l < m; ++l) g[l][k] -= qr * g[l][j];
        for (int l = 0; l < m; ++l) u[k][l] -= q * u[j][l];
    };

    recompute();
    int k = 1;
    while (k < m) {
        for (int j = k - 1; j >= 0; --j) {
            BigInt q = rat_round(mu[k][j]);
            if (q != 0) {
                axpy(k, j, q);
                recompute();
            }
        }
        if (gs[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * gs[k - 1]) {
            std::swap(g[k], g[k - 1]);
            for (int l = 0; l < m; ++l) std::swap(g[l][k], g[l][k - 1]);
            std::swap(u[k], u[k - 1]);
            recompute();
            k = std::max(1, k - 1);
        } else {
            ++k;
        }
    }
    return u;
}

struct Candidate {
    BigRat value;
    RatVec vec;  // unscaled lattice vector
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.vec < b.vec;  // lexicographic tie-break for determinism
}

RatMat scale_rows(const IntMat& rows, const DiagGauge& gauge, const BigInt& denom) {
    RatMat out(rows.size(), RatVec(gauge.n()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < gauge.n(); ++j) out[i][j] = BigRat(rows[i][j], denom) * gauge.w[j];
    return out;
}

// Minimal-gauge lattice vector outside span(witnesses); witnesses may be empty.
// Searches radii r, 2r, ... capped by a Minkowski bound that guarantees success.
Candidate min_outside_span(const IntegerLattice& L, const DiagGauge& gauge, const RatMat& witness_scaled,
                           const BigRat& start_radius, const BigRat& radius_cap) {
    const int n = L.n;
    const int k = static_cast<int>(witness_scaled.size());
    const RatMat s = scale_rows(L.basis, gauge, L.denom);

    IntMat u_rows_int, w_rows_int;
    RatMat u_rows_s, w_rows_s, outer_rows;
    RatMat gw, gw_inv;
    if (k == 0) {
        IntMat red = int_mul(lll_gram(rat_gram(s)), L.basis);
        u_rows_int = std::move(red);
        u_rows_s = scale_rows(u_rows_int, gauge, L.denom);
        outer_rows = u_rows_s;
    } else {
        RatMat proj = perp_projector(witness_scaled, n);
        IntMat t = clear_denominators(rat_mul(s, proj));
        EchelonResult ech = hnf_with_transform(t, n);
        if (ech.rank != n - k) throw std::logic_error("min_outside_span: unexpected quotient rank");
        IntMat dc(ech.u.begin(), ech.u.begin() + ech.rank);
        IntMat cc(ech.u.begin() + ech.rank, ech.u.end());
        u_rows_int = int_mul(dc, L.basis);
        w_rows_int = int_mul(cc, L.basis);
        // LLL both blocks: the saturation under the scaled metric, the quotient
        // representatives under the projected metric
        w_rows_s = scale_rows(w_rows_int, gauge, L.denom);
        w_rows_int = int_mul(lll_gram(rat_gram(w_rows_s)), w_rows_int);
        w_rows_s = scale_rows(w_rows_int, gauge, L.denom);
        u_rows_s = scale_rows(u_rows_int, gauge, L.denom);
        u_rows_int = int_mul(lll_gram(rat_gram(rat_mul(u_rows_s, proj))), u_rows_int);
        u_rows_s = scale_rows(u_rows_int, gauge, L.denom);
        gw = rat_gram(w_rows_s);
        gw_inv = rat_inverse(gw);
        outer_rows = rat_mul(u_rows_s, proj);
    }
    QuadEnumerator outer(rat_gram(outer_rows));
    std::optional<QuadEnumerator> inner;
    if (k > 0) inner.emplace(gw);

    const BigRat c2 = gauge.l2_factor();
    const int m_outer = n - k;
    const RatVec zero_shift(m_outer, BigRat(0));

    std::optional<Candidate> best;
    BigRat r = start_radius;
    if (r > radius_cap) r = radius_cap;

    // live l2^2 budget, tightened to c2 * best^2 as candidates arrive
    BigRat budget;
    BigRat cur_tperp(0);
    BigRat* active_inner = nullptr;

    auto consider = [&](const IntVec& numer) {
        RatVec xs(n), x(n);
        for (int j = 0; j < n; ++j) {
            x[j] = BigRat(numer[j], L.denom);
            xs[j] = x[j] * gauge.w[j];
        }
        Candidate cand{gauge.eval_scaled(xs), std::move(x)};
        if (!best || better(cand, *best)) {
            best = std::move(cand);
            BigRat nb = c2 * best->value * best->value;
            if (nb < budget) {
                budget = nb;
                if (active_inner) {
                    BigRat ni = budget - cur_tperp;
                    if (ni < *active_inner) *active_inner = ni;
                }
            }
        }
    };

    while (true) {
        budget = c2 * r * r;
        if (best) {
            BigRat bb = c2 * best->value * best->value;
            if (bb < budget) budget = bb;
        }
        outer.enumerate(zero_shift, budget, [&](const IntVec& d) {
            bool zero = true;
            for (const auto& v : d)
                if (v != 0) {
                    zero = false;
                    break;
                }
            if (zero) return;
            if (k == 0) {
                IntVec numer(n, 0);
                for (int i = 0; i < m_outer; ++i) {
                    if (d[i] == 0) continue;
                    for (int j = 0; j < n; ++j) numer[j] += d[i] * u_rows_int[i][j];
                }
                consider(numer);
                return;
            }
            // coset offset in scaled coordinates
            RatVec t(n, BigRat(0));
            IntVec t_int(n, 0);
            for (int i = 0; i < m_outer; ++i) {
                if (d[i] == 0) continue;
                for (int j = 0; j < n; ++j) {
                    t[j] += BigRat(d[i]) * u_rows_s[i][j];
                    t_int[j] += d[i] * u_rows_int[i][j];
                }
            }
            // closest-point recentring: minimize ||t + c W||^2 over real c
            RatVec tw(k, BigRat(0));
            for (int a = 0; a < k; ++a) tw[a] = rat_dot(t, w_rows_s[a]);
            RatVec w0 = rat_vec_mat(tw, gw_inv);
            BigRat tperp_sq = rat_dot(t, t);
            for (int a = 0; a < k; ++a) tperp_sq -= w0[a] * tw[a];
            BigRat inner_budget = budget - tperp_sq;
            if (inner_budget < 0) return;
            cur_tperp = tperp_sq;
            active_inner = &inner_budget;
            inner->enumerate(w0, inner_budget, [&](const IntVec& cvec) {
                IntVec numer = t_int;
                for (int a = 0; a < k; ++a) {
                    if (cvec[a] == 0) continue;
                    for (int j = 0; j < n; ++j) numer[j] += cvec[a] * w_rows_int[a][j];
                }
                consider(numer);
            });
            active_inner = nullptr;
        });
        if (best && best->value <= r) return *best;
        if (r >= radius_cap) {
            if (best) return *best;
            throw std::logic_error("min_outside_span: no vector found within the Minkowski radius");
        }
        r = r * 2;
        if (r > radius_cap) r = radius_cap;
    }
}

}  // namespace

MinimaResult successive_minima_weighted(const IntegerLattice& L, const std::vector<BigRat>& weights,
                                        bool linf, int count) {
    const int n = L.n;
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("successive_minima: weight dimension mismatch");
    for (const auto& wi : weights)
        if (wi <= 0) throw std::invalid_argument("successive_minima: weights must be positive");
    if (count < 1) count = 1;
    if (count > n) count = n;

    DiagGauge gauge{weights, linf};
    const BigRat bound_prod = rat_pow(BigRat(2), n) * L.covolume() / gauge.body_volume();

    MinimaResult res;
    RatMat witness_scaled;
    for (int k = 0; k < count; ++k) {
        BigRat remaining = bound_prod;
        for (const auto& l : res.lambdas) remaining /= l;
        const BigRat cap = rat_root_upper(remaining, n - k);
        const BigRat start = k == 0 ? cap : res.lambdas.back();
        Candidate c = min_outside_span(L, gauge, witness_scaled, start, cap);
        res.lambdas.push_back(c.value);
        RatVec scaled(n);
        for (int j = 0; j < n; ++j) scaled[j] = c.vec[j] * weights[j];
        witness_scaled.push_back(std::move(scaled));
        res.witnesses.push_back(std::move(c.vec));
    }
    return res;
}

MinimaResult successive_minima(const IntegerLattice& L, const WeightedBox& box) {
    std::vector<BigRat> w(box.halfwidths.size());
    for (size_t i = 0; i < w.size(); ++i) w[i] = BigRat(1) / box.halfwidths[i];
    return successive_minima_weighted(L, w, /*linf=*/true, L.n);
}

MinimaResult successive_minima_l1(const IntegerLattice& L, const std::vector<BigRat>& weights) {
    return successive_minima_weighted(L, weights, /*linf=*/false, L.n);
}

BigRat first_minimum_l1(const IntegerLattice& L, const std::vector<BigRat>& weights) {
    return successive_minima_weighted(L, weights, /*linf=*/false, 1).lambdas[0];
}

}  // namespace gapenergy
