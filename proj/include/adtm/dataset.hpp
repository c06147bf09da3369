#ifndef ADTM_DATASET_HPP
#define ADTM_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "adtm/binarizer.hpp"

namespace adtm {

// Raw delimited text table; every cell kept as a string.
struct RawTable {
    std::vector<std::vector<std::string>> rows;
    std::string source;
};

// Reads a delimited file. With expected_columns > 0, any row with a different
// cell count fails with its line number. delimiter ' ' treats runs of
// whitespace as one separator. Blank lines are skipped.
RawTable load_csv(const std::string& path, char delimiter = ',', int expected_columns = 0);

// The five benchmark preparations. Each checks the documented row/feature
// counts of its source and fails hard on mismatch, maps the label to {0,1}
// and assigns per-feature encoding kinds.

// Qualitative bankruptcy: 250 rows, six P/A/N categorical features, one-hot;
// label 1 = bankrupt.
PreparedTable prepare_bankruptcy(const RawTable& raw);

// Balance scale: the "balanced" class is removed leaving 576 rows; four
// five-level categorical features, one-hot; label 1 = tips right.
PreparedTable prepare_balance_scale(const RawTable& raw);

// Ljubljana breast cancer: 286 rows, rows with missing cells dropped, nine
// features (ordered ranges as thermometer, nominal as one-hot); label 1 =
// recurrence.
PreparedTable prepare_breast_cancer(const RawTable& raw);

// BUPA liver disorders: the selector column is discarded and the drinks
// column becomes the label (1 when drinks >= 3); the five blood-test
// features stay numeric.
PreparedTable prepare_liver(const RawTable& raw);

// Statlog heart disease: 270 rows, 13 features (6 numeric thermometer, 3
// binary, 3 nominal one-hot, 1 ordered thermometer); label 1 = presence.
PreparedTable prepare_heart(const RawTable& raw);

// Noise-free or label-noisy XOR over two boolean features; rows cycle
// through the four input combinations. n >= 4.
PreparedTable make_xor(std::size_t n, double noise, std::uint64_t seed);

struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

// Stratified train/test split, reproducible by seed; per class the train
// share is round(ratio * class size). Fails when a class would end up empty
// on either side.
SplitIndices stratified_split(const std::vector<std::uint8_t>& labels, double ratio,
                              std::uint64_t seed);

// A prepared table binarized for one split: codebook fitted on the training
// rows only.
struct SplitDataset {
    Dataset train;
    Dataset test;
    ThresholdCodebook codebook;
};

SplitDataset binarize_split(const PreparedTable& table, double ratio, std::uint64_t seed,
                            int max_thermometer_bits = 0);

// Named access to the benchmark datasets: loads <data_dir>/<canonical file>
// and runs the matching preparation. Known names: bankruptcy, balance-scale,
// breast-cancer, liver, heart.
PreparedTable load_named_dataset(const std::string& name, const std::string& data_dir);
const std::vector<std::string>& known_dataset_names();
std::string dataset_file_name(const std::string& name);

// Plain-text cache of a binarized dataset
// (header: rows, feature bits, label counts; then one "label bits" line per row).
void save_dataset_cache(const Dataset& dataset, const std::string& path);
Dataset load_dataset_cache(const std::string& path);

} // namespace adtm

#endif
