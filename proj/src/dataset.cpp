#include "adtm/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "adtm/rng.hpp"

namespace adtm {

namespace {

std::vector<std::string> split_line(const std::string& line, char delimiter) {
    std::vector<std::string> cells;
    if (delimiter == ' ') {
        std::istringstream ss(line);
        std::string token;
        while (ss >> token) cells.push_back(token);
        return cells;
    }
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, delimiter)) {
        // Trim surrounding whitespace and a possible trailing CR.
        const auto begin = cell.find_first_not_of(" \t\r");
        const auto end = cell.find_last_not_of(" \t\r");
        cells.push_back(begin == std::string::npos ? std::string()
                                                   : cell.substr(begin, end - begin + 1));
    }
    return cells;
}

[[noreturn]] void fail_row(const std::string& source, std::size_t line_number,
                           const std::string& what) {
    throw std::runtime_error(source + ":" + std::to_string(line_number) + ": " + what);
}

double parse_number(const std::string& cell, const std::string& source, std::size_t line) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(cell, &pos);
    } catch (const std::exception&) {
        fail_row(source, line, "expected a number, got '" + cell + "'");
    }
    if (pos != cell.size()) fail_row(source, line, "expected a number, got '" + cell + "'");
    return value;
}

// Maps a categorical cell to its index in a fixed vocabulary.
double category_rank(const std::string& cell, const std::vector<std::string>& vocabulary,
                     const std::string& column, const std::string& source, std::size_t line) {
    const auto it = std::find(vocabulary.begin(), vocabulary.end(), cell);
    if (it == vocabulary.end())
        fail_row(source, line, "unknown " + column + " value '" + cell + "'");
    return static_cast<double>(it - vocabulary.begin());
}

} // namespace

RawTable load_csv(const std::string& path, char delimiter, int expected_columns) {
    std::ifstream input(path);
    if (!input) throw std::runtime_error("cannot open '" + path + "'");

    RawTable table;
    table.source = path;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(input, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split_line(line, delimiter);
        if (expected_columns > 0 && static_cast<int>(cells.size()) != expected_columns)
            fail_row(path, line_number,
                     "expected " + std::to_string(expected_columns) + " columns, got " +
                         std::to_string(cells.size()));
        table.rows.push_back(std::move(cells));
    }
    if (table.rows.empty()) throw std::runtime_error("'" + path + "' holds no data rows");
    return table;
}

PreparedTable prepare_bankruptcy(const RawTable& raw) {
    if (raw.rows.size() != 250)
        throw std::runtime_error(raw.source + ": expected 250 bankruptcy records, got " +
                                 std::to_string(raw.rows.size()));

    static const std::vector<std::string> feature_names = {
        "industrial_risk", "management_risk", "financial_flexibility",
        "credibility",     "competitiveness", "operating_risk"};
    static const std::vector<std::string> levels = {"N", "A", "P"};

    PreparedTable table;
    table.columns.resize(feature_names.size());
    for (std::size_t f = 0; f < feature_names.size(); ++f) {
        table.columns[f].name = feature_names[f];
        table.columns[f].kind = FeatureKind::OneHot;
    }

    for (std::size_t r = 0; r < raw.rows.size(); ++r) {
        const auto& cells = raw.rows[r];
        if (cells.size() != 7) fail_row(raw.source, r + 1, "expected 7 columns");
        for (std::size_t f = 0; f < feature_names.size(); ++f)
            table.columns[f].values.push_back(
                category_rank(cells[f], levels, feature_names[f], raw.source, r + 1));
        if (cells[6] == "B")
            table.labels.push_back(1);
        else if (cells[6] == "NB")
            table.labels.push_back(0);
        else
            fail_row(raw.source, r + 1, "unknown class '" + cells[6] + "'");
    }

    std::size_t bankrupt = 0;
    for (auto y : table.labels) bankrupt += y;
    table.provenance = "bankruptcy: 250 records, " + std::to_string(bankrupt) + " bankrupt / " +
                       std::to_string(table.labels.size() - bankrupt) + " non-bankrupt";
    return table;
}

PreparedTable prepare_balance_scale(const RawTable& raw) {
    static const std::vector<std::string> feature_names = {
        "left_weight", "left_distance", "right_weight", "right_distance"};

    PreparedTable table;
    table.columns.resize(feature_names.size());
    for (std::size_t f = 0; f < feature_names.size(); ++f) {
        table.columns[f].name = feature_names[f];
        table.columns[f].kind = FeatureKind::OneHot;
    }

    std::size_t balanced_dropped = 0;
    for (std::size_t r = 0; r < raw.rows.size(); ++r) {
        const auto& cells = raw.rows[r];
        if (cells.size() != 5) fail_row(raw.source, r + 1, "expected 5 columns");
        if (cells[0] == "B") {
            ++balanced_dropped;
            continue;
        }
        if (cells[0] != "L" && cells[0] != "R")
            fail_row(raw.source, r + 1, "unknown class '" + cells[0] + "'");
        for (std::size_t f = 0; f < feature_names.size(); ++f) {
            const double v = parse_number(cells[f + 1], raw.source, r + 1);
            if (v < 1 || v > 5 || v != std::floor(v))
                fail_row(raw.source, r + 1, "level out of range 1..5");
            table.columns[f].values.push_back(v);
        }
        table.labels.push_back(cells[0] == "R" ? 1 : 0);
    }

    if (table.labels.empty())
        throw std::runtime_error(raw.source + ": no rows left after removing the balanced class");
    if (table.labels.size() != 576)
        throw std::runtime_error(raw.source + ": expected 576 rows after removing the balanced class, got " +
                                 std::to_string(table.labels.size()));
    table.provenance = "balance-scale: 576 rows after dropping " +
                       std::to_string(balanced_dropped) + " balanced rows";
    return table;
}

PreparedTable prepare_breast_cancer(const RawTable& raw) {
    if (raw.rows.size() != 286)
        throw std::runtime_error(raw.source + ": expected 286 breast cancer records, got " +
                                 std::to_string(raw.rows.size()));

    static const std::vector<std::string> ages = {"10-19", "20-29", "30-39", "40-49",
                                                  "50-59", "60-69", "70-79", "80-89", "90-99"};
    static const std::vector<std::string> menopause = {"lt40", "ge40", "premeno"};
    static const std::vector<std::string> tumor_sizes = {"0-4",   "5-9",   "10-14", "15-19",
                                                         "20-24", "25-29", "30-34", "35-39",
                                                         "40-44", "45-49", "50-54", "55-59"};
    static const std::vector<std::string> inv_nodes = {"0-2",   "3-5",   "6-8",   "9-11",
                                                       "12-14", "15-17", "18-20", "21-23",
                                                       "24-26", "27-29", "30-32", "33-35", "36-39"};
    static const std::vector<std::string> sides = {"left", "right"};
    static const std::vector<std::string> quadrants = {"left_up", "left_low", "right_up",
                                                       "right_low", "central"};

    PreparedTable table;
    auto add_column = [&table](const std::string& name, FeatureKind kind) {
        RawColumn column;
        column.name = name;
        column.kind = kind;
        table.columns.push_back(std::move(column));
    };
    add_column("age", FeatureKind::Thermometer);
    add_column("menopause", FeatureKind::OneHot);
    add_column("tumor_size", FeatureKind::Thermometer);
    add_column("inv_nodes", FeatureKind::Thermometer);
    add_column("node_caps", FeatureKind::BinaryFlag);
    add_column("deg_malig", FeatureKind::Thermometer);
    add_column("breast", FeatureKind::OneHot);
    add_column("breast_quad", FeatureKind::OneHot);
    add_column("irradiat", FeatureKind::BinaryFlag);

    std::size_t dropped = 0;
    for (std::size_t r = 0; r < raw.rows.size(); ++r) {
        const auto& cells = raw.rows[r];
        if (cells.size() != 10) fail_row(raw.source, r + 1, "expected 10 columns");
        if (std::find(cells.begin(), cells.end(), "?") != cells.end()) {
            ++dropped;
            continue;
        }
        const std::size_t line = r + 1;
        table.columns[0].values.push_back(category_rank(cells[1], ages, "age", raw.source, line));
        table.columns[1].values.push_back(
            category_rank(cells[2], menopause, "menopause", raw.source, line));
        table.columns[2].values.push_back(
            category_rank(cells[3], tumor_sizes, "tumor_size", raw.source, line));
        table.columns[3].values.push_back(
            category_rank(cells[4], inv_nodes, "inv_nodes", raw.source, line));
        table.columns[4].values.push_back(cells[5] == "yes" ? 1.0 : 0.0);
        table.columns[5].values.push_back(parse_number(cells[6], raw.source, line));
        table.columns[6].values.push_back(
            category_rank(cells[7], sides, "breast", raw.source, line));
        table.columns[7].values.push_back(
            category_rank(cells[8], quadrants, "breast_quad", raw.source, line));
        table.columns[8].values.push_back(cells[9] == "yes" ? 1.0 : 0.0);

        if (cells[0] == "recurrence-events")
            table.labels.push_back(1);
        else if (cells[0] == "no-recurrence-events")
            table.labels.push_back(0);
        else
            fail_row(raw.source, line, "unknown class '" + cells[0] + "'");
    }

    std::size_t recurrence = 0;
    for (auto y : table.labels) recurrence += y;
    table.provenance = "breast-cancer: " + std::to_string(table.labels.size()) +
                       " rows kept (" + std::to_string(dropped) + " with missing values dropped), " +
                       std::to_string(recurrence) + " recurrence / " +
                       std::to_string(table.labels.size() - recurrence) + " non-recurrence";
    return table;
}

PreparedTable prepare_liver(const RawTable& raw) {
    static const std::vector<std::string> feature_names = {"mcv", "alkphos", "sgpt", "sgot",
                                                           "gammagt"};
    PreparedTable table;
    table.columns.resize(feature_names.size());
    for (std::size_t f = 0; f < feature_names.size(); ++f) {
        table.columns[f].name = feature_names[f];
        table.columns[f].kind = FeatureKind::Thermometer;
    }

    for (std::size_t r = 0; r < raw.rows.size(); ++r) {
        const auto& cells = raw.rows[r];
        if (cells.size() != 7) fail_row(raw.source, r + 1, "expected 7 columns");
        for (std::size_t f = 0; f < feature_names.size(); ++f)
            table.columns[f].values.push_back(parse_number(cells[f], raw.source, r + 1));
        const double drinks = parse_number(cells[5], raw.source, r + 1);
        table.labels.push_back(drinks >= 3.0 ? 1 : 0);
        // cells[6] is the selector attribute; it carries no information and
        // is discarded.
    }

    std::size_t heavy = 0;
    for (auto y : table.labels) heavy += y;
    table.provenance = "liver: " + std::to_string(table.labels.size()) + " rows, label drinks>=3, " +
                       std::to_string(heavy) + " positive / " +
                       std::to_string(table.labels.size() - heavy) + " negative, selector discarded";
    return table;
}

PreparedTable prepare_heart(const RawTable& raw) {
    if (raw.rows.size() != 270)
        throw std::runtime_error(raw.source + ": expected 270 heart disease records, got " +
                                 std::to_string(raw.rows.size()));

    struct Spec {
        const char* name;
        FeatureKind kind;
    };
    static const Spec specs[13] = {
        {"age", FeatureKind::Thermometer},        {"sex", FeatureKind::BinaryFlag},
        {"chest_pain", FeatureKind::OneHot},      {"resting_bp", FeatureKind::Thermometer},
        {"cholesterol", FeatureKind::Thermometer},{"fasting_sugar", FeatureKind::BinaryFlag},
        {"rest_ecg", FeatureKind::OneHot},        {"max_heart_rate", FeatureKind::Thermometer},
        {"angina", FeatureKind::BinaryFlag},      {"oldpeak", FeatureKind::Thermometer},
        {"slope", FeatureKind::Thermometer},      {"major_vessels", FeatureKind::Thermometer},
        {"thal", FeatureKind::OneHot}};

    PreparedTable table;
    table.columns.resize(13);
    for (std::size_t f = 0; f < 13; ++f) {
        table.columns[f].name = specs[f].name;
        table.columns[f].kind = specs[f].kind;
    }

    for (std::size_t r = 0; r < raw.rows.size(); ++r) {
        const auto& cells = raw.rows[r];
        if (cells.size() != 14) fail_row(raw.source, r + 1, "expected 14 columns");
        for (std::size_t f = 0; f < 13; ++f)
            table.columns[f].values.push_back(parse_number(cells[f], raw.source, r + 1));
        const double label = parse_number(cells[13], raw.source, r + 1);
        if (label != 1.0 && label != 2.0) fail_row(raw.source, r + 1, "class must be 1 or 2");
        table.labels.push_back(label == 2.0 ? 1 : 0);
    }

    std::size_t present = 0;
    for (auto y : table.labels) present += y;
    table.provenance = "heart: 270 rows, 13 features, " + std::to_string(present) +
                       " presence / " + std::to_string(table.labels.size() - present) + " absence";
    return table;
}

PreparedTable make_xor(std::size_t n, double noise, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("xor dataset needs n >= 4");
    if (noise < 0.0 || noise > 1.0) throw std::invalid_argument("noise must lie in [0, 1]");

    PreparedTable table;
    table.columns.resize(2);
    table.columns[0].name = "x1";
    table.columns[0].kind = FeatureKind::BinaryFlag;
    table.columns[1].name = "x2";
    table.columns[1].kind = FeatureKind::BinaryFlag;

    Rng rng = Rng::derive(seed, stream::kSynthetic);
    for (std::size_t i = 0; i < n; ++i) {
        const int x1 = static_cast<int>((i % 4) >> 1);
        const int x2 = static_cast<int>(i % 2);
        int y = x1 ^ x2;
        if (noise > 0.0 && rng.uniform01() < noise) y ^= 1;
        table.columns[0].values.push_back(x1);
        table.columns[1].values.push_back(x2);
        table.labels.push_back(static_cast<std::uint8_t>(y));
    }
    table.provenance = "xor: " + std::to_string(n) + " rows, noise " + std::to_string(noise);
    return table;
}

SplitIndices stratified_split(const std::vector<std::uint8_t>& labels, double ratio,
                              std::uint64_t seed) {
    if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("split ratio must lie in (0, 1)");
    if (labels.empty()) throw std::invalid_argument("cannot split an empty dataset");

    SplitIndices split;
    for (int cls = 0; cls <= 1; ++cls) {
        std::vector<std::size_t> indices;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == cls) indices.push_back(i);
        if (indices.empty()) continue;

        const auto n_train =
            static_cast<std::size_t>(std::llround(ratio * static_cast<double>(indices.size())));
        if (n_train == 0 || n_train == indices.size())
            throw std::runtime_error("split ratio leaves class " + std::to_string(cls) +
                                     " empty on one side");

        Rng rng = Rng::derive(seed, stream::kSplit, static_cast<std::uint64_t>(cls));
        rng.shuffle(indices);
        split.train.insert(split.train.end(), indices.begin(), indices.begin() + n_train);
        split.test.insert(split.test.end(), indices.begin() + n_train, indices.end());
    }
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.test.begin(), split.test.end());
    return split;
}

SplitDataset binarize_split(const PreparedTable& table, double ratio, std::uint64_t seed,
                            int max_thermometer_bits) {
    const SplitIndices indices = stratified_split(table.labels, ratio, seed);
    SplitDataset out;
    out.codebook = fit_codebook(table, indices.train, max_thermometer_bits);
    out.train = encode_dataset(table, out.codebook, indices.train);
    out.test = encode_dataset(table, out.codebook, indices.test);
    return out;
}

const std::vector<std::string>& known_dataset_names() {
    static const std::vector<std::string> names = {"bankruptcy", "balance-scale", "breast-cancer",
                                                   "liver", "heart"};
    return names;
}

std::string dataset_file_name(const std::string& name) {
    if (name == "bankruptcy") return "Qualitative_Bankruptcy.data.txt";
    if (name == "balance-scale") return "balance-scale.data";
    if (name == "breast-cancer") return "breast-cancer.data";
    if (name == "liver") return "bupa.data";
    if (name == "heart") return "heart.dat";
    throw std::invalid_argument("unknown dataset '" + name + "'");
}

PreparedTable load_named_dataset(const std::string& name, const std::string& data_dir) {
    const std::string path = data_dir + "/" + dataset_file_name(name);
    if (name == "bankruptcy") return prepare_bankruptcy(load_csv(path, ',', 7));
    if (name == "balance-scale") return prepare_balance_scale(load_csv(path, ',', 5));
    if (name == "breast-cancer") return prepare_breast_cancer(load_csv(path, ',', 10));
    if (name == "liver") return prepare_liver(load_csv(path, ',', 7));
    if (name == "heart") return prepare_heart(load_csv(path, ' ', 14));
    throw std::invalid_argument("unknown dataset '" + name + "'");
}

void save_dataset_cache(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    const std::size_t positives = dataset.positives();
    out << "adtm-dataset v1\n";
    out << "rows=" << dataset.size() << " bits=" << dataset.feature_bits
        << " positives=" << positives << " negatives=" << dataset.size() - positives << "\n";
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        out << static_cast<int>(dataset.labels[i]) << ' ';
        for (auto bit : dataset.rows[i]) out << static_cast<int>(bit);
        out << '\n';
    }
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Dataset load_dataset_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string header;
    std::getline(in, header);
    if (header != "adtm-dataset v1")
        throw std::runtime_error("'" + path + "' is not an adtm dataset cache");

    std::string meta;
    std::getline(in, meta);
    std::size_t rows = 0, positives = 0, negatives = 0;
    int bits = 0;
    if (std::sscanf(meta.c_str(), "rows=%zu bits=%d positives=%zu negatives=%zu", &rows, &bits,
                    &positives, &negatives) != 4)
        throw std::runtime_error("'" + path + "' has a malformed header");

    Dataset dataset;
    dataset.feature_bits = bits;
    dataset.provenance = "cache: " + path;
    std::string line;
    std::size_t line_number = 2;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        std::istringstream ss(line);
        int label = 0;
        std::string bitstring;
        if (!(ss >> label >> bitstring) || (label != 0 && label != 1) ||
            bitstring.size() != static_cast<std::size_t>(bits))
            fail_row(path, line_number, "malformed cached row");
        std::vector<std::uint8_t> row(bitstring.size());
        for (std::size_t k = 0; k < bitstring.size(); ++k) {
            if (bitstring[k] != '0' && bitstring[k] != '1')
                fail_row(path, line_number, "malformed bit string");
            row[k] = bitstring[k] == '1' ? 1 : 0;
        }
        dataset.rows.push_back(std::move(row));
        dataset.labels.push_back(static_cast<std::uint8_t>(label));
    }
    if (dataset.size() != rows)
        throw std::runtime_error("'" + path + "' row count does not match its header");
    return dataset;
}

} // namespace adtm
