#ifndef ADTM_ENERGY_HPP
#define ADTM_ENERGY_HPP

#include <map>
#include <string>
#include <vector>

#include "adtm/automata.hpp"
#include "adtm/tm.hpp"

namespace adtm {

// Calibration of the power model for one dataset: measured training power
// per datapoint at d=1 and d=5000, plus the system-level PRNG shares. All
// model outputs are modeled values derived from these calibration points,
// not measurements.
struct PowerProfile {
    std::string dataset;
    double power_d1_mw = 0.0;
    double power_d5000_mw = 0.0;
    double switching_fraction_d1 = 0.07; // PRNG switching share of system power at d=1
    double leakage_fraction = 0.32;      // PRNG leakage share of system power

    bool calibrated() const {
        return power_d1_mw > 0.0 && power_d5000_mw > 0.0 && power_d5000_mw < power_d1_mw &&
               switching_fraction_d1 >= 0.0 && switching_fraction_d1 <= 1.0 &&
               leakage_fraction >= 0.0 && leakage_fraction <= 1.0;
    }
};

// PRNG switching share of system power at determinism d: the generators are
// active for a 1/d fraction of updates, so the d=1 share scales by 1/d.
// Infinite d needs no generated numbers at all.
double switching_fraction(Determinism d, double switching_fraction_d1 = 0.07);

// Modeled power at determinism d. The two calibration points fix
// P(d) = P_base + S/d; at infinite d the PRNGs can be omitted entirely,
// which also removes their leakage share (modeled as leakage_fraction of the
// d=1 power). Rejects uncalibrated profiles.
double estimate_power(const PowerProfile& profile, Determinism d);

std::map<std::string, PowerProfile> load_power_profiles(const std::string& path);

struct EnergyReport {
    std::string dataset;
    Determinism d = Determinism::finite(1);
    RngAccounting accounting;
    double empirical_stochastic_fraction = 0.0; // coins / attempts
    double switching_share = 0.0;
    double modeled_power_mw = -1.0; // -1 when no profile is available
    std::vector<std::pair<Determinism, double>> sweep;
};

// Assembles the report for a finished run; the profile pointer may be null
// (counters only, no modeled power).
EnergyReport make_energy_report(const RngAccounting& accounting, Determinism d,
                                const std::string& dataset, const PowerProfile* profile);

std::string energy_report_to_json(const EnergyReport& report);
std::string energy_report_to_text(const EnergyReport& report);

} // namespace adtm

#endif
