#ifndef ADTM_SERIALIZE_HPP
#define ADTM_SERIALIZE_HPP

#include <string>

#include "adtm/tm.hpp"

namespace adtm {

// Versioned flat model file, little-endian:
//   magic "ADTM", u32 version,
//   u32 o, m, T, s, N,
//   u8 regime, u8 positive polarity class, u8 d-is-infinite, u8 reserved,
//   u64 d (0 when infinite),
//   m*2o u32 automaton states, clause-major.
// Round trips losslessly; byte-identical for identical machines.
void save_model(const TsetlinMachine& machine, const std::string& path);
TsetlinMachine load_model(const std::string& path);

} // namespace adtm

#endif
