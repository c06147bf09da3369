#include "adtm/energy.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace adtm {

double switching_fraction(Determinism d, double switching_fraction_d1) {
    if (switching_fraction_d1 < 0.0 || switching_fraction_d1 > 1.0)
        throw std::invalid_argument("switching fraction at d=1 must lie in [0, 1]");
    if (d.is_infinite()) return 0.0;
    return switching_fraction_d1 / static_cast<double>(d.period());
}

double estimate_power(const PowerProfile& profile, Determinism d) {
    if (!profile.calibrated())
        throw std::invalid_argument("power profile for '" + profile.dataset +
                                    "' is not calibrated");
    // P(d) = P_base + S/d through the two calibration points.
    const double switching_at_d1 =
        (profile.power_d1_mw - profile.power_d5000_mw) / (1.0 - 1.0 / 5000.0);
    const double base = profile.power_d1_mw - switching_at_d1;
    if (d.is_infinite()) return base - profile.leakage_fraction * profile.power_d1_mw;
    return base + switching_at_d1 / static_cast<double>(d.period());
}

std::map<std::string, PowerProfile> load_power_profiles(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open calibration file '" + path + "'");
    nlohmann::json doc;
    in >> doc;

    const double switching = doc.value("switching_fraction_d1", 0.07);
    const double leakage = doc.value("leakage_fraction", 0.32);

    std::map<std::string, PowerProfile> profiles;
    for (const auto& entry : doc.at("profiles")) {
        PowerProfile profile;
        profile.dataset = entry.at("dataset").get<std::string>();
        profile.power_d1_mw = entry.at("power_d1_mw").get<double>();
        profile.power_d5000_mw = entry.at("power_d5000_mw").get<double>();
        profile.switching_fraction_d1 = switching;
        profile.leakage_fraction = leakage;
        if (!profile.calibrated())
            throw std::runtime_error("calibration entry for '" + profile.dataset +
                                     "' is not usable");
        profiles[profile.dataset] = profile;
    }
    if (profiles.empty()) throw std::runtime_error("calibration file '" + path + "' has no profiles");
    return profiles;
}

namespace {

const std::vector<Determinism>& sweep_points() {
    static const std::vector<Determinism> points = {
        Determinism::finite(1),    Determinism::finite(10),  Determinism::finite(100),
        Determinism::finite(500),  Determinism::finite(1000), Determinism::finite(5000),
        Determinism::infinite()};
    return points;
}

} // namespace

EnergyReport make_energy_report(const RngAccounting& accounting, Determinism d,
                                const std::string& dataset, const PowerProfile* profile) {
    EnergyReport report;
    report.dataset = dataset;
    report.d = d;
    report.accounting = accounting;
    report.empirical_stochastic_fraction =
        accounting.transition_attempts == 0
            ? 0.0
            : static_cast<double>(accounting.ta_update_coins) /
                  static_cast<double>(accounting.transition_attempts);
    const double switching_d1 = profile != nullptr ? profile->switching_fraction_d1 : 0.07;
    report.switching_share = switching_fraction(d, switching_d1);
    if (profile != nullptr) {
        report.modeled_power_mw = estimate_power(*profile, d);
        for (const auto& point : sweep_points())
            report.sweep.emplace_back(point, estimate_power(*profile, point));
    }
    return report;
}

std::string energy_report_to_json(const EnergyReport& report) {
    nlohmann::ordered_json doc;
    doc["format"] = "adtm-energy-report";
    doc["power_model"] = "modeled from calibration points, not measured";
    doc["dataset"] = report.dataset;
    doc["d"] = report.d.to_string();
    doc["counters"]["ta_update_coins"] = report.accounting.ta_update_coins;
    doc["counters"]["clause_selection_draws"] = report.accounting.clause_selection_draws;
    doc["counters"]["transition_attempts"] = report.accounting.transition_attempts;
    doc["empirical_stochastic_fraction"] = report.empirical_stochastic_fraction;
    doc["switching_share_of_system_power"] = report.switching_share;
    if (report.modeled_power_mw >= 0.0) {
        doc["modeled_power_mw"] = report.modeled_power_mw;
        doc["sweep"] = nlohmann::ordered_json::array();
        for (const auto& [d, mw] : report.sweep) {
            nlohmann::ordered_json point;
            point["d"] = d.to_string();
            point["modeled_power_mw"] = mw;
            doc["sweep"].push_back(std::move(point));
        }
    }
    return doc.dump(2) + "\n";
}

std::string energy_report_to_text(const EnergyReport& report) {
    std::ostringstream out;
    out << "energy report for " << report.dataset << " (d=" << report.d.to_string() << ")\n";
    out << "  ta update coins:        " << report.accounting.ta_update_coins << "\n";
    out << "  clause selection draws: " << report.accounting.clause_selection_draws << "\n";
    out << "  transition attempts:    " << report.accounting.transition_attempts << "\n";
    out.setf(std::ios::fixed);
    out.precision(6);
    out << "  stochastic fraction:    " << report.empirical_stochastic_fraction << "\n";
    out << "  switching share:        " << report.switching_share << "\n";
    if (report.modeled_power_mw >= 0.0) {
        out.precision(4);
        out << "  modeled power:          " << report.modeled_power_mw
            << " mW (modeled from calibration points, not measured)\n";
        out << "  d sweep:\n";
        for (const auto& [d, mw] : report.sweep)
            out << "    d=" << d.to_string() << ": " << mw << " mW\n";
    }
    return out.str();
}

} // namespace adtm
