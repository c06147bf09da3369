#include "adtm/serialize.hpp"

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace adtm {

namespace {

constexpr char kMagic[4] = {'A', 'D', 'T', 'M'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::string& buffer, std::uint32_t value) {
    for (int i = 0; i < 4; ++i) buffer.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
}

void put_u64(std::string& buffer, std::uint64_t value) {
    for (int i = 0; i < 8; ++i) buffer.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
}

class Reader {
public:
    Reader(const std::string& data, const std::string& path) : data_(data), path_(path) {}

    std::uint8_t u8() { return static_cast<std::uint8_t>(byte()); }

    std::uint32_t u32() {
        std::uint32_t value = 0;
        for (int i = 0; i < 4; ++i) value |= static_cast<std::uint32_t>(byte()) << (8 * i);
        return value;
    }

    std::uint64_t u64() {
        std::uint64_t value = 0;
        for (int i = 0; i < 8; ++i) value |= static_cast<std::uint64_t>(byte()) << (8 * i);
        return value;
    }

    bool exhausted() const { return offset_ == data_.size(); }

private:
    unsigned char byte() {
        if (offset_ >= data_.size())
            throw std::runtime_error("'" + path_ + "' is truncated");
        return static_cast<unsigned char>(data_[offset_++]);
    }

    const std::string& data_;
    const std::string& path_;
    std::size_t offset_ = 0;
};

} // namespace

void save_model(const TsetlinMachine& machine, const std::string& path) {
    const TmConfig& config = machine.config();

    std::string buffer;
    buffer.append(kMagic, sizeof(kMagic));
    put_u32(buffer, kVersion);
    put_u32(buffer, static_cast<std::uint32_t>(config.feature_bits));
    put_u32(buffer, static_cast<std::uint32_t>(config.clause_count));
    put_u32(buffer, static_cast<std::uint32_t>(config.vote_target));
    put_u32(buffer, static_cast<std::uint32_t>(config.strong_step));
    put_u32(buffer, static_cast<std::uint32_t>(config.n_states));
    buffer.push_back(static_cast<char>(config.regime));
    buffer.push_back(static_cast<char>(config.positive_polarity_class));
    buffer.push_back(config.d.is_infinite() ? 1 : 0);
    buffer.push_back(0); // reserved
    put_u64(buffer, config.d.is_infinite() ? 0 : config.d.period());

    for (int clause = 0; clause < machine.clause_count(); ++clause)
        for (int literal = 0; literal < machine.literal_count(); ++literal)
            put_u32(buffer, static_cast<std::uint32_t>(machine.state(clause, literal)));

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

TsetlinMachine load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    if (data.size() < 4 || data.compare(0, 4, kMagic, 4) != 0)
        throw std::runtime_error("'" + path + "' is not an adtm model file");

    Reader reader(data, path);
    reader.u32(); // magic, already checked
    const std::uint32_t version = reader.u32();
    if (version != kVersion)
        throw std::runtime_error("'" + path + "' has unsupported model version " +
                                 std::to_string(version));

    TmConfig config;
    config.feature_bits = static_cast<int>(reader.u32());
    config.clause_count = static_cast<int>(reader.u32());
    config.vote_target = static_cast<int>(reader.u32());
    config.strong_step = static_cast<int>(reader.u32());
    config.n_states = static_cast<int>(reader.u32());
    config.regime = static_cast<Regime>(reader.u8());
    config.positive_polarity_class = static_cast<int>(reader.u8());
    const bool d_infinite = reader.u8() != 0;
    reader.u8(); // reserved
    const std::uint64_t d_value = reader.u64();
    config.d = d_infinite ? Determinism::infinite() : Determinism::finite(d_value);

    TsetlinMachine machine(config);
    for (int clause = 0; clause < config.clause_count; ++clause) {
        for (int literal = 0; literal < 2 * config.feature_bits; ++literal) {
            const std::uint32_t state = reader.u32();
            if (state < 1 || state > static_cast<std::uint32_t>(2 * config.n_states))
                throw std::runtime_error("'" + path + "' holds an out-of-range automaton state");
            machine.set_state(clause, literal, static_cast<std::int32_t>(state));
        }
    }
    if (!reader.exhausted())
        throw std::runtime_error("'" + path + "' has trailing bytes");
    return machine;
}

} // namespace adtm
