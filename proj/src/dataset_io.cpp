#include "har/dataset_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "har/csv.hpp"
#include "har/text.hpp"

namespace har {
namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.emplace_back(trim(std::string_view(line).substr(start, i - start)));
            start = i + 1;
        }
    }
    return fields;
}

}  // namespace

FeatureDataset read_feature_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw CsvError(1, "missing header");
    auto header = split_line(line);

    FeatureDataset ds;
    bool labeled = false;
    if (!header.empty() && header.back() == "activity") {
        labeled = true;
        header.pop_back();
    }
    if (header.empty()) throw CsvError(1, "no feature columns");
    for (const std::string& name : header) {
        auto idx = feature_index(name);
        if (!idx) throw CsvError(1, "unknown feature column '" + name + "'");
        ds.feature_names.push_back(feature_names()[static_cast<std::size_t>(*idx)]);
    }

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_line(line);
        const std::size_t want = ds.feature_names.size() + (labeled ? 1 : 0);
        if (fields.size() != want)
            throw CsvError(line_no, "expected " + std::to_string(want) + " fields, got " +
                                        std::to_string(fields.size()));
        std::vector<double> row;
        row.reserve(ds.feature_names.size());
        for (std::size_t i = 0; i < ds.feature_names.size(); ++i) {
            auto v = parse_double(fields[i]);
            if (!v || !std::isfinite(*v))
                throw CsvError(line_no, "bad numeric value '" + fields[i] + "'");
            row.push_back(*v);
        }
        ds.rows.push_back(std::move(row));
        if (labeled) {
            auto code = parse_long(fields.back());
            if (!code) throw CsvError(line_no, "non-integer activity code '" + fields.back() + "'");
            auto act = activity_from_code(static_cast<int>(*code));
            if (!act) throw CsvError(line_no, "activity code out of range 0..6: " + std::to_string(*code));
            ds.labels.push_back(*act);
        }
    }
    return ds;
}

FeatureDataset read_feature_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_feature_csv(in);
}

void write_feature_csv(const FeatureDataset& ds, std::ostream& out) {
    ds.validate();
    for (std::size_t i = 0; i < ds.feature_names.size(); ++i) {
        if (i) out << ',';
        out << ds.feature_names[i];
    }
    if (ds.labeled()) out << ",activity";
    out << '\n';
    for (std::size_t r = 0; r < ds.rows.size(); ++r) {
        const auto& row = ds.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_double(row[i]);
        }
        if (ds.labeled()) out << ',' << activity_code(ds.labels[r]);
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed");
}

void write_feature_csv_file(const FeatureDataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_feature_csv(ds, out);
}

}  // namespace har
