#include "gapenergy/bohr.hpp"
#include "gapenergy/charsum.hpp"
#include "gapenergy/energy.hpp"
#include "gapenergy/gap.hpp"
#include "gapenergy/serialize.hpp"
#include "gapenergy/sweeps.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace gapenergy;

int cmd_energy(int64_t p, int64_t a0, int64_t a1, int64_t a2, int64_t h1, int64_t h2, bool symmetric,
               const std::string& format) {
    Gap g(p, symmetric ? 0 : a0, {a1, a2}, {h1, h2}, symmetric ? GapShape::Symmetric : GapShape::OneSided);
    const bool proper = g.is_proper();
    if (!proper) std::cerr << "warning: gap is not proper; energy computed on its element set\n";
    const EnergyReport rep = verify_thm12(g);
    if (format == "csv") {
        std::cout << "size,p,E,bound,ratio\n"
                  << rep.size << ',' << rep.p << ',' << rep.energy << ',' << rep.bound << ',' << rep.ratio << '\n';
        return 0;
    }
    nlohmann::json j = to_json(rep);
    j["proper"] = proper;
    j["gap"] = to_json(g);
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_bohr(int64_t p, const std::vector<int64_t>& a, const std::vector<std::string>& eta_str,
             const std::string& format) {
    std::vector<BigRat> eta;
    eta.reserve(eta_str.size());
    for (const auto& s : eta_str) eta.push_back(parse_rational(s));
    BohrSpec spec(p, a, eta);
    const BohrReport rep = verify_prop31(spec);
    if (format == "csv") {
        std::cout << "p,size,t,delta,upper_ratio,lower_ratio\n"
                  << rep.p << ',' << rep.size << ',' << rep.t << ',' << rat_to_double(rep.delta) << ','
                  << rat_to_double(rep.upper_ratio) << ',' << rat_to_double(rep.lower_ratio) << '\n';
        return 0;
    }
    std::cout << to_json(rep).dump(2) << '\n';
    return 0;
}

int cmd_charsum(int64_t p, int64_t a0, int64_t a1, int64_t a2, int64_t h1, int64_t h2,
                const std::string& eps_str, int r, int64_t k, uint64_t seed, const std::string& format) {
    Gap g(p, a0, {a1, a2}, {h1, h2}, GapShape::OneSided);
    BurgessConfig cfg{g, parse_rational(eps_str), r, k, seed};
    const PipelineReport rep = burgess_pipeline(cfg);
    if (format == "csv") {
        std::cout << "p,size_a,size_b,size_j,normalized,lhs_lemma,rhs_lemma\n"
                  << rep.p << ',' << rep.size_a << ',' << rep.size_b << ',' << rep.size_j << ',' << rep.normalized
                  << ',' << rep.lhs_lemma << ',' << rep.rhs_lemma << '\n';
        return 0;
    }
    std::cout << to_json(rep).dump(2) << '\n';
    return 0;
}

int cmd_verify(const std::string& suite, uint64_t trials, uint64_t seed, int workers, int64_t p_min,
               int64_t p_max, const std::string& format) {
    const SuiteResult res = run_suite(suite, SweepConfig{trials, seed, workers, p_min, p_max});
    if (format == "csv")
        std::cout << res.to_csv();
    else
        std::cout << res.to_json() << '\n';
    if (!res.ok()) {
        for (const auto& f : res.failures) std::cerr << "FAIL: " << f << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplicative energies, Bohr sets, and Burgess character sums over rank-2 gaps in F_p"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

    auto* energy = app.add_subcommand("energy", "multiplicative energy of a rank-2 gap vs the (|A|^2 + |A|^4/p) log p bound");
    int64_t p = 0, a0 = 0, a1 = 0, a2 = 0, h1 = 0, h2 = 0;
    bool symmetric = false;
    energy->add_option("--p", p, "prime modulus")->required();
    energy->add_option("--a1", a1, "first coefficient")->required();
    energy->add_option("--a2", a2, "second coefficient")->required();
    energy->add_option("--h1", h1, "first bound")->required();
    energy->add_option("--h2", h2, "second bound")->required();
    energy->add_option("--a0", a0, "offset (one-sided gaps)");
    energy->add_flag("--symmetric", symmetric, "symmetric gap |x_i| <= H_i with a0 = 0");

    auto* bohr = app.add_subcommand("bohr", "Bohr set size, t, delta, and the size-bound ratios");
    int64_t bp = 0;
    std::vector<int64_t> ba;
    std::vector<std::string> beta;
    bohr->add_option("--p", bp, "prime modulus")->required();
    bohr->add_option("--a", ba, "frequencies (repeat per rank)")->required();
    bohr->add_option("--eta", beta, "widths as rationals, e.g. 1/5 (repeat per rank)")->required();

    auto* charsum = app.add_subcommand("charsum", "Burgess pipeline over a one-sided rank-2 gap");
    int64_t cp = 0, ca0 = 0, ca1 = 0, ca2 = 0, ch1 = 0, ch2 = 0, ck = 0;
    int cr = 2;
    uint64_t cseed = 1;
    std::string ceps = "1/40";
    charsum->add_option("--p", cp, "prime modulus")->required();
    charsum->add_option("--a1", ca1, "first coefficient")->required();
    charsum->add_option("--a2", ca2, "second coefficient")->required();
    charsum->add_option("--h1", ch1, "first bound")->required();
    charsum->add_option("--h2", ch2, "second bound")->required();
    charsum->add_option("--a0", ca0, "offset");
    charsum->add_option("--eps", ceps, "epsilon as a rational");
    charsum->add_option("--r", cr, "amplification exponent");
    charsum->add_option("--k", ck, "character exponent (nonzero)")->required();
    charsum->add_option("--seed", cseed, "seed for the sampled shift checks");

    auto* verify = app.add_subcommand("verify", "seeded verification sweeps");
    std::string suite = "all";
    uint64_t trials = 0, seed = 7;
    int workers = 1;
    int64_t p_min = 0, p_max = 0;
    verify->add_option("--suite", suite, "energy|bohr|lattice|lemma24|all")
        ->check(CLI::IsMember({"energy", "bohr", "lattice", "lemma24", "all"}));
    verify->add_option("--trials", trials, "trial count (0 = suite default)");
    verify->add_option("--seed", seed, "sweep seed");
    verify->add_option("--workers", workers, "worker threads");
    verify->add_option("--p-min", p_min, "lower end of the prime range (0 = suite default)");
    verify->add_option("--p-max", p_max, "upper end of the prime range (0 = suite default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*energy) return cmd_energy(p, a0, a1, a2, h1, h2, symmetric, format);
        if (*bohr) return cmd_bohr(bp, ba, beta, format);
        if (*charsum) return cmd_charsum(cp, ca0, ca1, ca2, ch1, ch2, ceps, cr, ck, cseed, format);
        if (*verify) return cmd_verify(suite, trials, seed, workers, p_min, p_max, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
