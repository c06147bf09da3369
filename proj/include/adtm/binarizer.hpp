#ifndef ADTM_BINARIZER_HPP
#define ADTM_BINARIZER_HPP

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace adtm {

// How a raw feature column turns into bits.
//   Thermometer: bit_i = (value <= threshold_i) over thresholds learned from
//                training data; used for numeric and ordered columns.
//   OneHot:      one bit per observed category.
//   BinaryFlag:  a column already holding {0, 1}; emitted as a single bit.
enum class FeatureKind : std::uint8_t { Thermometer = 0, OneHot = 1, BinaryFlag = 2 };

std::string to_string(FeatureKind kind);
FeatureKind feature_kind_from_string(const std::string& s);

// Sorted distinct values observed in a training column. Rejects empty input.
std::vector<double> fit_thresholds(const std::vector<double>& column_values);

// Full thermometer code of a single value: bit_i = value <= thresholds[i].
std::vector<std::uint8_t> thermometer_transform(double value, const std::vector<double>& thresholds);

// Per-feature entry of a fitted codebook.
struct FeatureCode {
    std::string name;
    FeatureKind kind = FeatureKind::Thermometer;
    // Thermometer: sorted distinct training values. OneHot: sorted category
    // ids. BinaryFlag: unused.
    std::vector<double> levels;
    int emit_bits = 0;
};

struct ThresholdCodebook {
    std::vector<FeatureCode> features;
    int total_bits = 0; // o

    bool operator==(const ThresholdCodebook&) const = default;
};

// One raw feature column plus its encoding kind. Ordered categoricals are
// mapped to rank values upstream, so every column is numeric here.
struct RawColumn {
    std::string name;
    FeatureKind kind = FeatureKind::Thermometer;
    std::vector<double> values;
};

// Typed table between dataset preparation and binarization.
struct PreparedTable {
    std::vector<RawColumn> columns;
    std::vector<std::uint8_t> labels; // one 0/1 label per row
    std::string provenance;

    std::size_t rows() const { return labels.size(); }
};

// Boolean feature matrix ready for the machine.
struct Dataset {
    std::vector<std::vector<std::uint8_t>> rows; // rows x feature_bits
    std::vector<std::uint8_t> labels;
    int feature_bits = 0; // o
    std::string provenance;

    std::size_t size() const { return labels.size(); }
    std::size_t positives() const;
};

// Learns the codebook from the given training rows only.
//
// Thermometer features emit one bit per threshold except the largest, which
// is constant 1 over the training data (value <= max always holds) and is
// dropped; a single-threshold feature keeps its one bit. With
// max_thermometer_bits > 0, wide features are reduced to that many
// evenly-spaced thresholds before encoding.
ThresholdCodebook fit_codebook(const PreparedTable& table,
                               const std::vector<std::size_t>& train_rows,
                               int max_thermometer_bits = 0);

// Encodes one row with a fitted codebook.
std::vector<std::uint8_t> encode_row(const PreparedTable& table, std::size_t row,
                                     const ThresholdCodebook& codebook);

// Encodes the selected rows (all rows when empty) into a Dataset. Rejects
// empty tables and schema mismatches.
Dataset encode_dataset(const PreparedTable& table, const ThresholdCodebook& codebook,
                       const std::vector<std::size_t>& row_indices = {});

std::string codebook_to_json(const ThresholdCodebook& codebook);
ThresholdCodebook codebook_from_json(const std::string& json_text);

} // namespace adtm

#endif
