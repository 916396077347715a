#pragma once

#include "gapenergy/bohr.hpp"
#include "gapenergy/charsum.hpp"
#include "gapenergy/energy.hpp"
#include "gapenergy/gap.hpp"
#include "gapenergy/lattice.hpp"

#include <json.hpp>

#include <string>

namespace gapenergy {

// Counts serialize as decimal strings: they are exact and may exceed 2^53.
// Rationals serialize as "num/den".

inline nlohmann::json to_json(const Gap& g) {
    nlohmann::json j;
    j["p"] = g.p;
    j["a0"] = g.a0;
    j["coeffs"] = g.coeffs;
    j["bounds"] = g.bounds;
    j["shape"] = g.shape == GapShape::OneSided ? "one_sided" : "symmetric";
    return j;
}

inline nlohmann::json to_json(const MinimaResult& m) {
    nlohmann::json j;
    j["lambdas"] = nlohmann::json::array();
    for (const auto& l : m.lambdas) j["lambdas"].push_back(rat_str(l));
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : m.witnesses) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : w) row.push_back(rat_str(x));
        j["witnesses"].push_back(row);
    }
    return j;
}

inline nlohmann::json to_json(const BohrReport& r) {
    nlohmann::json j;
    j["p"] = r.p;
    j["a"] = r.a;
    j["eta"] = nlohmann::json::array();
    for (const auto& e : r.eta) j["eta"].push_back(rat_str(e));
    j["size"] = r.size;
    j["t"] = r.t;
    j["delta"] = rat_str(r.delta);
    j["upper_ratio"] = rat_str(r.upper_ratio);
    j["lower_ratio"] = rat_str(r.lower_ratio);
    return j;
}

inline nlohmann::json to_json(const EnergyReport& r) {
    nlohmann::json j;
    j["p"] = r.p;
    j["size"] = r.size;
    j["E"] = std::to_string(r.energy);
    j["bound"] = r.bound;
    j["ratio"] = r.ratio;
    return j;
}

inline nlohmann::json to_json(const RzProfile& r) {
    nlohmann::json j;
    j["p"] = r.p;
    j["size"] = r.size;
    j["contains_zero"] = r.contains_zero;
    j["histogram"] = nlohmann::json::object();
    for (const auto& [value, count] : r.histogram)
        j["histogram"][std::to_string(value)] = std::to_string(count);
    j["class_counts"] = nlohmann::json::array();
    for (uint64_t c : r.class_counts) j["class_counts"].push_back(std::to_string(c));
    j["class_sums"] = nlohmann::json::array();
    for (uint64_t s : r.class_sums) j["class_sums"].push_back(std::to_string(s));
    j["sum_rz"] = std::to_string(r.sum_rz);
    j["sum_rz_sq"] = std::to_string(r.sum_rz_sq);
    j["zero_correction"] = std::to_string(r.zero_correction);
    j["energy"] = std::to_string(r.energy);
    j["bound"] = r.bound;
    j["class_ratios"] = nlohmann::json::array();
    for (uint64_t s : r.class_sums) j["class_ratios"].push_back(static_cast<double>(s) / r.bound);
    return j;
}

inline nlohmann::json to_json(const PipelineReport& r) {
    auto complex_json = [](const std::complex<double>& z) {
        return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
    };
    nlohmann::json j;
    j["p"] = r.p;
    j["size_a"] = r.size_a;
    j["size_b"] = r.size_b;
    j["size_j"] = r.size_j;
    j["j_len_floor"] = r.j_len_floor;
    j["main_sum"] = complex_json(r.main_sum);
    j["shifted_average"] = complex_json(r.shifted_average);
    j["shift_error_bound"] = std::to_string(r.shift_error_bound);
    j["shift_samples"] = r.shift_samples;
    j["shift_violations"] = r.shift_violations;
    j["lhs_lemma"] = r.lhs_lemma;
    j["rhs_lemma"] = r.rhs_lemma;
    j["rhs_lemma_thm12"] = r.rhs_lemma_thm12;
    j["final_lhs"] = r.final_lhs;
    j["final_rhs"] = r.final_rhs;
    j["normalized"] = r.normalized;
    j["size_hypothesis_ok"] = r.size_hypothesis_ok;
    j["nu_mass"] = std::to_string(r.nu_mass);
    j["nu_mass_ok"] = r.nu_mass_ok;
    return j;
}

}  // namespace gapenergy
