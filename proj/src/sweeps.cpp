#include "gapenergy/sweeps.hpp"

#include "gapenergy/bohr.hpp"
#include "gapenergy/charsum.hpp"
#include "gapenergy/energy.hpp"
#include "gapenergy/field.hpp"
#include "gapenergy/gap.hpp"
#include "gapenergy/lattice.hpp"
#include "gapenergy/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

namespace gapenergy {

namespace {

using Clock = std::chrono::steady_clock;

int64_t elapsed_ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

struct TrialOutcome {
    std::vector<std::string> failures;
    std::vector<TrialRow> rows;
    std::map<std::string, double> ratios;  // folded into the suite result with max
};

// Worker pool over trial indices. Outcomes land in indexed slots, so the
// merged result is identical for any worker count.
void run_trials(SuiteResult& res, uint64_t trials, int workers,
                const std::function<TrialOutcome(uint64_t)>& fn) {
    std::vector<TrialOutcome> out(trials);
    std::atomic<uint64_t> next{0};
    auto worker = [&] {
        while (true) {
            uint64_t i = next.fetch_add(1);
            if (i >= trials) break;
            try {
                out[i] = fn(i);
            } catch (const std::exception& e) {
                out[i].failures.push_back("trial " + std::to_string(i) + ": exception: " + e.what());
            }
        }
    };
    int w = std::max(1, workers);
    if (w == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(w);
        for (int i = 0; i < w; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (uint64_t i = 0; i < trials; ++i) {
        for (auto& f : out[i].failures) res.failures.push_back(std::move(f));
        for (auto& r : out[i].rows) res.rows.push_back(std::move(r));
        for (auto& [k, v] : out[i].ratios) {
            auto it = res.max_ratios.find(k);
            if (it == res.max_ratios.end())
                res.max_ratios[k] = v;
            else
                it->second = std::max(it->second, v);
        }
    }
}

int64_t random_prime(Rng& rng, int64_t lo, int64_t hi) {
    lo = std::max<int64_t>(lo, 3);
    if (hi < lo) hi = lo;
    while (true) {
        int64_t n = rng.range(lo, hi) | 1;
        while (n <= hi && !is_prime(static_cast<uint64_t>(n))) n += 2;
        if (n <= hi) return n;
    }
}

// suite default prime window unless the config overrides it
std::pair<int64_t, int64_t> prime_window(const SweepConfig& cfg, int64_t def_lo, int64_t def_hi) {
    int64_t lo = cfg.p_min > 0 ? cfg.p_min : def_lo;
    int64_t hi = cfg.p_max > 0 ? cfg.p_max : def_hi;
    if (hi < lo) hi = lo;
    return {lo, hi};
}

std::vector<int64_t> random_subset(Rng& rng, int64_t p, uint64_t m) {
    std::vector<int64_t> out;
    std::vector<uint8_t> used(static_cast<size_t>(p), 0);
    while (out.size() < m) {
        int64_t x = rng.range(0, p - 1);
        if (!used[static_cast<size_t>(x)]) {
            used[static_cast<size_t>(x)] = 1;
            out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Minkowski's second theorem, exact rationals:
//   2^n/n! <= prod(lambda_i) * Vol(B) / covol(L) <= 2^n.
double check_minkowski(const MinimaResult& minima, const BigRat& volume, const IntegerLattice& lat,
                       std::vector<std::string>& failures, const std::string& tag) {
    const int n = lat.n;
    BigRat prod(1);
    for (const auto& l : minima.lambdas) prod *= l;
    BigRat ratio = prod * volume / lat.covolume();
    BigRat upper = rat_pow(BigRat(2), n);
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    BigRat lower = upper / BigRat(fact);
    if (ratio < lower || ratio > upper)
        failures.push_back(tag + ": Minkowski ratio " + rat_str(ratio) + " outside [" + rat_str(lower) + ", " +
                           rat_str(upper) + "]");
    return rat_to_double(ratio);
}

constexpr double kLemma24SlackPerTerm = 1e-6;

// Dense targets occasionally have no proper instance within the rejection
// budget; halve the target and retry so the sweep keeps its size spread.
Gap robust_proper_gap(int64_t p, int d, uint64_t size_target, Rng& rng, GapShape shape) {
    uint64_t target = size_target;
    for (int attempt = 0;; ++attempt) {
        try {
            return random_proper_gap(p, d, target, rng.next(), shape);
        } catch (const std::runtime_error&) {
            if (attempt >= 8 || target <= 9) throw;
            target = std::max<uint64_t>(9, target / 2);
        }
    }
}

BigRat random_eta(Rng& rng) {
    int64_t den = rng.range(3, 997);
    int64_t num = rng.range(1, std::max<int64_t>(1, (den - 1) / 2));
    return BigRat(num, den);
}

}  // namespace

void SuiteResult::absorb(const SuiteResult& other) {
    trials += other.trials;
    elapsed_ms += other.elapsed_ms;
    for (const auto& f : other.failures) failures.push_back(other.suite + ": " + f);
    for (const auto& r : other.rows) rows.push_back(r);
    for (const auto& [k, v] : other.max_ratios) max_ratios[other.suite + "." + k] = v;
}

std::string SuiteResult::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["trials"] = trials;
    j["max_ratios"] = nlohmann::json::object();
    for (const auto& [k, v] : max_ratios) j["max_ratios"][k] = v;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures) j["failures"].push_back(f);
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

std::string SuiteResult::to_csv() const {
    std::ostringstream os;
    os << "suite,trial,p,size,metric,value\n";
    for (const auto& r : rows)
        os << suite << ',' << r.trial << ',' << r.p << ',' << r.size << ',' << r.metric << ',' << r.value << '\n';
    return os.str();
}

SuiteResult run_energy_oracle_suite(SweepConfig cfg) {
    const auto start = Clock::now();
    SuiteResult res;
    res.suite = "energy_oracle";
    res.seed = cfg.seed;
    res.trials = cfg.trials ? cfg.trials : 200;

    const auto win = prime_window(cfg, 5, 503);
    run_trials(res, res.trials, cfg.workers, [&](uint64_t i) {
        TrialOutcome out;
        Rng rng = derive_rng(cfg.seed, i);
        const int64_t p = random_prime(rng, win.first, win.second);
        const uint64_t m = 1 + rng.below(std::min<uint64_t>(50, static_cast<uint64_t>(p)));
        const auto a = random_subset(rng, p, m);
        const uint64_t fast = mult_energy(a, p);
        const uint64_t slow = mult_energy_bruteforce(a, p);
        if (fast != slow)
            out.failures.push_back("trial " + std::to_string(i) + ": mult_energy " + std::to_string(fast) +
                                   " != brute force " + std::to_string(slow) + " (p=" + std::to_string(p) + ")");
        if (fast < m * m || fast > 2 * m * m * m)
            out.failures.push_back("trial " + std::to_string(i) + ": energy outside [|A|^2, 2|A|^3]");
        const double diag = static_cast<double>(fast) / (static_cast<double>(m) * m);
        out.ratios["energy_over_size_sq_max"] = diag;
        out.rows.push_back({i, p, m, "energy_over_size_sq", diag});
        return out;
    });
    res.elapsed_ms = elapsed_ms_since(start);
    return res;
}

SuiteResult run_rz_identity_suite(SweepConfig cfg) {
    const auto start = Clock::now();
    SuiteResult res;
    res.suite = "rz_identity";
    res.seed = cfg.seed;
    res.trials = cfg.trials ? cfg.trials : 500;

    const auto win = prime_window(cfg, 17, 10000);
    run_trials(res, res.trials, cfg.workers, [&](uint64_t i) {
        TrialOutcome out;
        Rng rng = derive_rng(cfg.seed, i);
        const int64_t p = random_prime(rng, win.first, win.second);
        const uint64_t max_size = std::min<uint64_t>(static_cast<uint64_t>(p), 601);
        const uint64_t size_target = 9 + rng.below(max_size - 8);
        const Gap g = robust_proper_gap(p, 2, size_target, rng, GapShape::Symmetric);
        const int64_t z = rng.range(0, p - 1);

        const auto set = g.element_set();
        const uint64_t direct = rz(set, z, p);
        const uint64_t via_lattice = rz_via_lattice(g, z);
        if (direct != via_lattice)
            out.failures.push_back("trial " + std::to_string(i) + ": r(z) mismatch direct=" +
                                   std::to_string(direct) + " lattice=" + std::to_string(via_lattice) +
                                   " (p=" + std::to_string(p) + ", z=" + std::to_string(z) + ")");

        const IntegerLattice lat = rz_lattice(g, z);
        const WeightedBox box = rz_box(g);
        const MinimaResult minima = successive_minima(lat, box);
        out.ratios["minkowski_ratio_max"] =
            check_minkowski(minima, box.volume(), lat, out.failures, "trial " + std::to_string(i));

        int s = 0;
        for (const auto& l : minima.lambdas)
            if (l <= 1) ++s;
        if (s == 0 && direct != 1)
            out.failures.push_back("trial " + std::to_string(i) + ": s=0 but r(z)=" + std::to_string(direct));

        out.rows.push_back({i, p, set.size(), "rz", static_cast<double>(direct)});
        return out;
    });
    res.max_ratios["minkowski_checks"] = static_cast<double>(res.trials);
    res.elapsed_ms = elapsed_ms_since(start);
    return res;
}

SuiteResult run_bohr_suite(SweepConfig cfg) {
    const auto start = Clock::now();
    SuiteResult res;
    res.suite = "bohr_two_path";
    res.seed = cfg.seed;
    res.trials = cfg.trials ? cfg.trials : 200;

    const auto win = prime_window(cfg, 11, 10000);
    run_trials(res, res.trials, cfg.workers, [&](uint64_t i) {
        TrialOutcome out;
        Rng rng = derive_rng(cfg.seed, i);
        const int d = 1 + static_cast<int>(rng.below(2));
        const int64_t p = random_prime(rng, win.first, win.second);
        std::vector<int64_t> a(d);
        for (int j = 0; j < d; ++j) a[j] = rng.range(1, p - 1);
        std::vector<BigRat> eta(d);
        for (int j = 0; j < d; ++j) eta[j] = random_eta(rng);
        const BohrSpec spec(p, a, eta);

        const auto scan = bohr_enumerate(spec);
        const uint64_t via_lattice = bohr_size_via_lattice(spec);
        if (scan.size() != via_lattice)
            out.failures.push_back("trial " + std::to_string(i) + ": bohr size scan=" +
                                   std::to_string(scan.size()) + " lattice=" + std::to_string(via_lattice));

        BigInt cells(1);
        for (const auto& e : eta) cells *= rat_ceil(BigRat(1) / e);
        if (BigRat(scan.size()) * BigRat(cells) < BigRat(p))
            out.failures.push_back("trial " + std::to_string(i) + ": pigeonhole lower bound violated");
        BigRat eta_min = eta[0];
        for (const auto& e : eta) eta_min = std::min(eta_min, e);
        if (BigRat(scan.size()) > 2 * eta_min * p + 1)
            out.failures.push_back("trial " + std::to_string(i) + ": trivial upper bound violated");

        const IntegerLattice lat = bohr_lattice(a, p);
        const WeightedBox box{eta};
        const MinimaResult minima = successive_minima(lat, box);
        out.ratios["minkowski_ratio_max"] =
            check_minkowski(minima, box.volume(), lat, out.failures, "trial " + std::to_string(i));

        out.rows.push_back({i, p, scan.size(), "bohr_size", static_cast<double>(scan.size())});
        return out;
    });
    res.max_ratios["minkowski_checks"] = static_cast<double>(res.trials);
    res.elapsed_ms = elapsed_ms_since(start);
    return res;
}

SuiteResult run_mahler_suite(SweepConfig cfg) {
    const auto start = Clock::now();
    SuiteResult res;
    res.suite = "mahler_duality";
    res.seed = cfg.seed;
    res.trials = cfg.trials ? cfg.trials : 100;

    const auto win = prime_window(cfg, 5, 997);
    run_trials(res, res.trials, cfg.workers, [&](uint64_t i) {
        TrialOutcome out;
        Rng rng = derive_rng(cfg.seed, i);
        const int n = 2 + static_cast<int>(rng.below(3));
        const int64_t p = random_prime(rng, win.first, win.second);

        IntegerLattice lat;
        if (i % 3 == 0) {
            std::vector<int64_t> a(n);
            for (int j = 0; j < n; ++j) a[j] = rng.range(1, p - 1);
            lat = bohr_lattice(a, p);
        } else {
            std::vector<int64_t> c(n, 0);
            for (int j = 0; j < n; ++j) c[j] = rng.range(0, p - 1);
            if (std::all_of(c.begin(), c.end(), [](int64_t x) { return x == 0; })) c[0] = 1;
            lat = lattice_from_congruence(c, p);
        }
        std::vector<BigRat> h(n);
        for (int j = 0; j < n; ++j) h[j] = BigRat(rng.range(1, 256), rng.range(1, 4));
        const WeightedBox box{h};

        const MinimaResult primal = successive_minima(lat, box);
        const IntegerLattice dual = dual_lattice(lat);
        const MinimaResult polar = successive_minima_l1(dual, h);

        if (dual_lattice(dual) != lat)
            out.failures.push_back("trial " + std::to_string(i) + ": dual(dual(L)) != L");

        BigInt fact = 1;
        for (int j = 2; j <= n; ++j) fact *= j;
        const BigRat upper = BigRat(fact) * BigRat(fact);
        double max_pair = 0.0;
        for (int j = 0; j < n; ++j) {
            const BigRat pair = primal.lambdas[j] * polar.lambdas[n - 1 - j];
            max_pair = std::max(max_pair, rat_to_double(pair));
            if (pair < 1)
                out.failures.push_back("trial " + std::to_string(i) + ": lambda_" + std::to_string(j + 1) +
                                       " * lambda*_" + std::to_string(n - j) + " = " + rat_str(pair) + " < 1");
            if (pair > upper)
                out.failures.push_back("trial " + std::to_string(i) + ": lambda pair product " + rat_str(pair) +
                                       " above (n!)^2 = " + rat_str(upper));
        }
        out.ratios["mahler_pair_max"] = max_pair;
        out.ratios["minkowski_ratio_max"] =
            check_minkowski(primal, box.volume(), lat, out.failures, "trial " + std::to_string(i));
        out.rows.push_back({i, p, static_cast<uint64_t>(n), "mahler_pair_max", max_pair});
        return out;
    });
    res.elapsed_ms = elapsed_ms_since(start);
    return res;
}

SuiteResult run_thm12_suite(SweepConfig cfg) {
    const auto start = Clock::now();
    SuiteResult res;
    res.suite = "thm12_energy";
    res.seed = cfg.seed;
    res.trials = cfg.trials ? cfg.trials : 100;

    const auto win = prime_window(cfg, 10000, 1000000);
    run_trials(res, res.trials, cfg.workers, [&](uint64_t i) {
        TrialOutcome out;
        Rng rng = derive_rng(cfg.seed, i);
        const int64_t p = random_prime(rng, win.first, win.second);
        const double u = 0.3 + 0.2 * rng.unit();
        const uint64_t size_target =
            std::max<uint64_t>(4, static_cast<uint64_t>(std::pow(static_cast<double>(p), u)));
        const Gap g = random_proper_gap(p, 2, size_target, rng.next(), GapShape::OneSided);
        const EnergyReport rep = verify_thm12(g);
        if (rep.ratio > 64.0)
            out.failures.push_back("trial " + std::to_string(i) + ": thm12 ratio " + std::to_string(rep.ratio) +
                                   " above ceiling 64 (p=" + std::to_string(p) +
                                   ", |A|=" + std::to_string(rep.size) + ")");
        if (rep.energy < rep.size * rep.size)
            out.failures.push_back("trial " + std::to_string(i) + ": energy below diagonal |A|^2");
        out.ratios["thm12_ratio_max"] = rep.ratio;
        out.rows.push_back({i, p, rep.size, "thm12_ratio", rep.ratio});
        return out;
    });
    res.elapsed_ms = elapsed_ms_since(start);
    return res;
}

SuiteResult run_prop31_suite(SweepConfig cfg) {
    const auto start = Clock::now();
    SuiteResult res;
    res.suite = "prop31_bohr_bound";
    res.seed = cfg.seed;
    res.trials = cfg.trials ? cfg.trials : 200;

    const auto win = prime_window(cfg, 11, 10000);
    run_trials(res, res.trials, cfg.workers, [&](uint64_t i) {
        TrialOutcome out;
        Rng rng = derive_rng(cfg.seed, i);
        const int64_t p = random_prime(rng, win.first, win.second);
        std::vector<int64_t> a(2);
        for (int j = 0; j < 2; ++j) a[j] = rng.range(1, p - 1);
        std::vector<BigRat> eta{random_eta(rng), random_eta(rng)};
        const BohrSpec spec(p, a, eta);
        const BohrReport rep = verify_prop31(spec);

        if (rep.upper_ratio > 256)
            out.failures.push_back("trial " + std::to_string(i) + ": prop31 upper ratio " +
                                   rat_str(rep.upper_ratio) + " above ceiling 256");
        if (rep.lower_ratio < 1)
            out.failures.push_back("trial " + std::to_string(i) + ": pigeonhole lower ratio below 1");
        const BigRat eta_min = std::min(eta[0], eta[1]);
        const BigRat eta_max = std::max(eta[0], eta[1]);
        if (rep.delta < eta_min || rep.delta > eta_max * p)
            out.failures.push_back("trial " + std::to_string(i) + ": delta outside [min eta, p max eta]");

        out.ratios["prop31_upper_ratio_max"] = rat_to_double(rep.upper_ratio);
        if (rep.t < 2) out.ratios["delta_max_when_t_lt_d"] = rat_to_double(rep.delta);
        out.rows.push_back({i, p, rep.size, "prop31_upper_ratio", rat_to_double(rep.upper_ratio)});
        return out;
    });

    // sharpness family: |B| >= floor(p eta / a_d) holds exactly
    const uint64_t sharp_cases = 20;
    SuiteResult sharp;
    run_trials(sharp, sharp_cases, cfg.workers, [&](uint64_t i) {
        TrialOutcome out;
        Rng rng = derive_rng(cfg.seed ^ 0x5a17ull, i);
        const int64_t p = random_prime(rng, 1009, 99991);
        const int64_t den = rng.range(20, 200);
        const BigRat eta(1, den);
        const int64_t max_m = std::min<int64_t>(20, p / den - 1);
        if (max_m < 2) {
            out.failures.push_back("sharpness " + std::to_string(i) + ": degenerate parameters");
            return out;
        }
        const BigRat delta = BigRat(rng.range(2, max_m)) * eta;
        const SharpnessInstance inst = sharpness_instance(2, eta, delta, p);
        if (!inst.ok)
            out.failures.push_back("sharpness " + std::to_string(i) + ": |B| = " + std::to_string(inst.size) +
                                   " below guaranteed " + std::to_string(inst.guaranteed));
        out.rows.push_back({i, p, inst.size, "sharpness_guaranteed", static_cast<double>(inst.guaranteed)});
        return out;
    });
    for (auto& f : sharp.failures) res.failures.push_back(std::move(f));
    for (auto& r : sharp.rows) res.rows.push_back(std::move(r));
    res.max_ratios["sharpness_cases"] = static_cast<double>(sharp_cases);

    res.elapsed_ms = elapsed_ms_since(start);
    return res;
}

SuiteResult run_lemma24_suite(SweepConfig cfg) {
    const auto start = Clock::now();
    SuiteResult res;
    res.suite = "lemma24";
    res.seed = cfg.seed;
    res.trials = cfg.trials ? cfg.trials : 100;

    const auto win = prime_window(cfg, 17, 2003);
    run_trials(res, res.trials, cfg.workers, [&](uint64_t i) {
        TrialOutcome out;
        Rng rng = derive_rng(cfg.seed, i);
        const int64_t p = random_prime(rng, win.first, win.second);

        auto make_set = [&](uint64_t salt) {
            Rng local = derive_rng(rng.next() ^ salt, i);
            const uint64_t m = 5 + local.below(std::min<uint64_t>(56, static_cast<uint64_t>(p) - 5));
            if (local.below(2) == 0) return random_subset(local, p, m);
            const int d = 1 + static_cast<int>(local.below(2));
            return random_proper_gap(p, d, std::max<uint64_t>(4, m), local.next(), GapShape::OneSided)
                .element_set();
        };
        const auto a = make_set(0x11);
        const auto b = make_set(0x22);
        const uint64_t jn = 1 + rng.below(10);
        const auto j = random_subset(rng, p, jn);
        const int r = 1 + static_cast<int>(rng.below(3));
        const int64_t k = rng.range(1, p - 2);
        const CharSpec chi(p, k);

        const double lhs = lemma24_lhs(a, b, j, chi);
        const double rhs = lemma24_rhs(a, b, j.size(), r, p);
        const double slack =
            kLemma24SlackPerTerm * static_cast<double>(a.size()) * static_cast<double>(b.size()) *
            static_cast<double>(j.size());
        if (lhs > rhs + slack)
            out.failures.push_back("trial " + std::to_string(i) + ": amplification inequality violated: lhs=" +
                                   std::to_string(lhs) + " rhs=" + std::to_string(rhs) +
                                   " (p=" + std::to_string(p) + ", r=" + std::to_string(r) + ")");
        out.ratios["lemma24_lhs_over_rhs_max"] = rhs > 0 ? lhs / rhs : 0.0;
        out.rows.push_back({i, p, a.size(), "lemma24_lhs_over_rhs", rhs > 0 ? lhs / rhs : 0.0});
        return out;
    });
    res.elapsed_ms = elapsed_ms_since(start);
    return res;
}

SuiteResult run_pv_suite() {
    const auto start = Clock::now();
    SuiteResult res;
    res.suite = "polya_vinogradov";
    res.seed = 0;
    res.trials = 1;
    const PvScanResult scan = polya_vinogradov_scan(300, 300);
    res.max_ratios["pv_ratio_max"] = scan.max_ratio;
    res.max_ratios["pv_characters"] = static_cast<double>(scan.characters_scanned);
    if (scan.max_ratio >= 4.0)
        res.failures.push_back("pv scan: max ratio " + std::to_string(scan.max_ratio) +
                               " above the regression ceiling 4");
    res.rows.push_back({0, scan.argmax_p, static_cast<uint64_t>(scan.argmax_h), "pv_ratio_max", scan.max_ratio});
    res.elapsed_ms = elapsed_ms_since(start);
    return res;
}

SuiteResult run_burgess_suite(SweepConfig cfg) {
    const auto start = Clock::now();
    SuiteResult res;
    res.suite = "burgess_pipeline";
    res.seed = cfg.seed;
    const uint64_t chars_per_p = cfg.trials ? cfg.trials : 20;
    const std::vector<int64_t> primes{10007, 100003};
    res.trials = chars_per_p * primes.size();

    uint64_t trial = 0;
    for (int64_t p : primes) {
        Rng rng = derive_rng(cfg.seed, static_cast<uint64_t>(p));
        const uint64_t size_target = static_cast<uint64_t>(std::pow(static_cast<double>(p), 0.45));
        const Gap g = random_proper_gap(p, 2, size_target, rng.next(), GapShape::OneSided);

        std::vector<uint64_t> ks(chars_per_p);
        for (auto& k : ks) k = static_cast<uint64_t>(rng.range(1, p - 2));

        SuiteResult local;
        run_trials(local, chars_per_p, cfg.workers, [&](uint64_t i) {
            TrialOutcome out;
            BurgessConfig bc{g, BigRat(1, 40), 2, static_cast<int64_t>(ks[i]), cfg.seed ^ (i + 1)};
            const PipelineReport rep = burgess_pipeline(bc);
            const std::string tag = "p=" + std::to_string(p) + " k=" + std::to_string(ks[i]);
            if (!rep.nu_mass_ok) out.failures.push_back(tag + ": nu mass violated");
            if (rep.normalized > 1.0 + 1e-12) out.failures.push_back(tag + ": |main_sum| above |A|");
            if (rep.shift_violations != 0)
                out.failures.push_back(tag + ": " + std::to_string(rep.shift_violations) +
                                       " shift identity violations");
            const double slack = kLemma24SlackPerTerm * static_cast<double>(rep.size_a) *
                                 static_cast<double>(rep.size_b) * static_cast<double>(rep.size_j);
            if (rep.lhs_lemma > rep.rhs_lemma + slack)
                out.failures.push_back(tag + ": amplification inequality violated in pipeline");
            out.ratios["normalized_max"] = rep.normalized;
            if (rep.normalized >= 0.9) out.ratios["normalized_flagged"] = 1.0;
            out.rows.push_back({i, p, rep.size_a, "normalized", rep.normalized});
            return out;
        });
        for (auto& f : local.failures) res.failures.push_back(std::move(f));
        for (auto& r : local.rows) {
            r.trial += trial;
            res.rows.push_back(std::move(r));
        }
        for (const auto& [k, v] : local.max_ratios) {
            auto it = res.max_ratios.find(k);
            if (it == res.max_ratios.end())
                res.max_ratios[k] = v;
            else
                it->second = std::max(it->second, v);
        }
        trial += chars_per_p;
    }
    res.elapsed_ms = elapsed_ms_since(start);
    return res;
}

SuiteResult run_suite(const std::string& name, SweepConfig cfg) {
    SuiteResult res;
    res.suite = name;
    res.seed = cfg.seed;
    const auto start = Clock::now();
    if (name == "energy") {
        res.absorb(run_energy_oracle_suite(cfg));
        res.absorb(run_thm12_suite(cfg));
    } else if (name == "bohr") {
        res.absorb(run_bohr_suite(cfg));
        res.absorb(run_prop31_suite(cfg));
    } else if (name == "lattice") {
        res.absorb(run_rz_identity_suite(cfg));
        res.absorb(run_mahler_suite(cfg));
    } else if (name == "lemma24") {
        res.absorb(run_lemma24_suite(cfg));
    } else if (name == "all") {
        res.absorb(run_energy_oracle_suite(cfg));
        res.absorb(run_rz_identity_suite(cfg));
        res.absorb(run_bohr_suite(cfg));
        res.absorb(run_mahler_suite(cfg));
        res.absorb(run_thm12_suite(cfg));
        res.absorb(run_prop31_suite(cfg));
        res.absorb(run_lemma24_suite(cfg));
        res.absorb(run_pv_suite());
        res.absorb(run_burgess_suite(cfg));
    } else {
        throw std::invalid_argument("unknown suite '" + name + "' (energy|bohr|lattice|lemma24|all)");
    }
    res.elapsed_ms = elapsed_ms_since(start);
    return res;
}

}  // namespace gapenergy
