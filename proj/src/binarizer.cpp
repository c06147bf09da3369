#include "adtm/binarizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace adtm {

std::string to_string(FeatureKind kind) {
    switch (kind) {
    case FeatureKind::Thermometer: return "thermometer";
    case FeatureKind::OneHot: return "onehot";
    case FeatureKind::BinaryFlag: return "binary";
    }
    throw std::logic_error("unreachable feature kind");
}

FeatureKind feature_kind_from_string(const std::string& s) {
    if (s == "thermometer") return FeatureKind::Thermometer;
    if (s == "onehot") return FeatureKind::OneHot;
    if (s == "binary") return FeatureKind::BinaryFlag;
    throw std::invalid_argument("unknown feature kind '" + s + "'");
}

std::size_t Dataset::positives() const {
    std::size_t count = 0;
    for (auto label : labels) count += label;
    return count;
}

std::vector<double> fit_thresholds(const std::vector<double>& column_values) {
    if (column_values.empty()) throw std::invalid_argument("cannot fit thresholds on an empty column");
    std::vector<double> thresholds = column_values;
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    return thresholds;
}

std::vector<std::uint8_t> thermometer_transform(double value, const std::vector<double>& thresholds) {
    std::vector<std::uint8_t> bits(thresholds.size());
    for (std::size_t i = 0; i < thresholds.size(); ++i)
        bits[i] = value <= thresholds[i] ? 1 : 0;
    return bits;
}

namespace {

std::vector<double> subsample_thresholds(const std::vector<double>& thresholds, int cap) {
    if (cap <= 0 || thresholds.size() <= static_cast<std::size_t>(cap)) return thresholds;
    std::vector<double> picked;
    picked.reserve(static_cast<std::size_t>(cap));
    const double stride = static_cast<double>(thresholds.size() - 1) / static_cast<double>(cap - 1);
    for (int i = 0; i < cap; ++i) {
        const auto idx = static_cast<std::size_t>(std::llround(i * stride));
        picked.push_back(thresholds[idx]);
    }
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    return picked;
}

std::vector<double> gather(const std::vector<double>& values, const std::vector<std::size_t>& rows) {
    if (rows.empty()) return values;
    std::vector<double> out;
    out.reserve(rows.size());
    for (auto r : rows) {
        if (r >= values.size()) throw std::out_of_range("training row index out of range");
        out.push_back(values[r]);
    }
    return out;
}

} // namespace

ThresholdCodebook fit_codebook(const PreparedTable& table,
                               const std::vector<std::size_t>& train_rows,
                               int max_thermometer_bits) {
    if (table.columns.empty()) throw std::invalid_argument("cannot fit a codebook on a table without columns");
    if (table.rows() == 0) throw std::invalid_argument("cannot fit a codebook on an empty table");

    ThresholdCodebook codebook;
    for (const auto& column : table.columns) {
        if (column.values.size() != table.rows())
            throw std::invalid_argument("column '" + column.name + "' length does not match label count");

        FeatureCode code;
        code.name = column.name;
        code.kind = column.kind;
        switch (column.kind) {
        case FeatureKind::Thermometer: {
            auto thresholds = fit_thresholds(gather(column.values, train_rows));
            thresholds = subsample_thresholds(thresholds, max_thermometer_bits);
            code.levels = thresholds;
            // value <= max(levels) is constant over the training rows.
            code.emit_bits = thresholds.size() >= 2 ? static_cast<int>(thresholds.size()) - 1 : 1;
            break;
        }
        case FeatureKind::OneHot: {
            code.levels = fit_thresholds(gather(column.values, train_rows));
            code.emit_bits = static_cast<int>(code.levels.size());
            break;
        }
        case FeatureKind::BinaryFlag: {
            for (auto v : column.values)
                if (v != 0.0 && v != 1.0)
                    throw std::invalid_argument("binary column '" + column.name + "' holds a value other than 0/1");
            code.emit_bits = 1;
            break;
        }
        }
        codebook.total_bits += code.emit_bits;
        codebook.features.push_back(std::move(code));
    }
    return codebook;
}

std::vector<std::uint8_t> encode_row(const PreparedTable& table, std::size_t row,
                                     const ThresholdCodebook& codebook) {
    if (table.columns.size() != codebook.features.size())
        throw std::invalid_argument("codebook does not match table schema");
    if (row >= table.rows()) throw std::out_of_range("row index out of range");

    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(codebook.total_bits));
    for (std::size_t f = 0; f < table.columns.size(); ++f) {
        const double value = table.columns[f].values[row];
        const FeatureCode& code = codebook.features[f];
        switch (code.kind) {
        case FeatureKind::Thermometer:
            for (int i = 0; i < code.emit_bits; ++i)
                bits.push_back(value <= code.levels[static_cast<std::size_t>(i)] ? 1 : 0);
            break;
        case FeatureKind::OneHot:
            // Unseen categories encode as all-zero.
            for (const double level : code.levels)
                bits.push_back(value == level ? 1 : 0);
            break;
        case FeatureKind::BinaryFlag:
            bits.push_back(value != 0.0 ? 1 : 0);
            break;
        }
    }
    return bits;
}

Dataset encode_dataset(const PreparedTable& table, const ThresholdCodebook& codebook,
                       const std::vector<std::size_t>& row_indices) {
    if (table.rows() == 0) throw std::invalid_argument("cannot encode an empty table");

    std::vector<std::size_t> rows = row_indices;
    if (rows.empty()) {
        rows.resize(table.rows());
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    }

    Dataset dataset;
    dataset.feature_bits = codebook.total_bits;
    dataset.provenance = table.provenance;
    dataset.rows.reserve(rows.size());
    dataset.labels.reserve(rows.size());
    for (auto r : rows) {
        dataset.rows.push_back(encode_row(table, r, codebook));
        dataset.labels.push_back(table.labels[r]);
    }
    return dataset;
}

std::string codebook_to_json(const ThresholdCodebook& codebook) {
    nlohmann::ordered_json doc;
    doc["format"] = "adtm-codebook";
    doc["version"] = 1;
    doc["total_bits"] = codebook.total_bits;
    doc["features"] = nlohmann::ordered_json::array();
    for (const auto& code : codebook.features) {
        nlohmann::ordered_json f;
        f["name"] = code.name;
        f["kind"] = to_string(code.kind);
        f["levels"] = code.levels;
        f["emit_bits"] = code.emit_bits;
        doc["features"].push_back(std::move(f));
    }
    return doc.dump(2) + "\n";
}

ThresholdCodebook codebook_from_json(const std::string& json_text) {
    const auto doc = nlohmann::json::parse(json_text);
    if (doc.at("format") != "adtm-codebook")
        throw std::invalid_argument("not a codebook file");
    ThresholdCodebook codebook;
    codebook.total_bits = doc.at("total_bits").get<int>();
    for (const auto& f : doc.at("features")) {
        FeatureCode code;
        code.name = f.at("name").get<std::string>();
        code.kind = feature_kind_from_string(f.at("kind").get<std::string>());
        code.levels = f.at("levels").get<std::vector<double>>();
        code.emit_bits = f.at("emit_bits").get<int>();
        codebook.features.push_back(std::move(code));
    }
    return codebook;
}

} // namespace adtm
