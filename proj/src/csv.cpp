#include "har/csv.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "har/text.hpp"

namespace har {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return fields;
}

double parse_axis(std::string_view field, std::size_t line_no, const char* axis) {
    auto v = parse_double(field);
    if (!v)
        throw CsvError(line_no, std::string("non-numeric ") + axis + " value '" + std::string(field) + "'");
    if (!std::isfinite(*v))
        throw CsvError(line_no, std::string("non-finite ") + axis + " value");
    return *v;
}

}  // namespace

LabeledSeries parse_csv(std::istream& in, double sample_rate_hz) {
    if (!(sample_rate_hz > 0.0)) throw std::invalid_argument("sample_rate_hz must be positive");

    LabeledSeries series;
    series.sample_rate_hz = sample_rate_hz;

    std::string line;
    if (!std::getline(in, line)) throw CsvError(1, "missing header");
    auto header = split_fields(line);
    bool labeled;
    if (header.size() == 4 && header[3] == "activity")
        labeled = true;
    else if (header.size() == 3)
        labeled = false;
    else
        throw CsvError(1, "expected header accx,accy,accz[,activity]");
    if (header[0] != "accx" || header[1] != "accy" || header[2] != "accz")
        throw CsvError(1, "expected header accx,accy,accz[,activity]");

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_fields(line);
        const std::size_t want = labeled ? 4 : 3;
        if (fields.size() != want)
            throw CsvError(line_no, "expected " + std::to_string(want) + " fields, got " +
                                        std::to_string(fields.size()));
        Sample s;
        s.ax = parse_axis(fields[0], line_no, "accx");
        s.ay = parse_axis(fields[1], line_no, "accy");
        s.az = parse_axis(fields[2], line_no, "accz");
        series.samples.push_back(s);
        if (labeled) {
            auto code = parse_long(fields[3]);
            if (!code) throw CsvError(line_no, "non-integer activity code '" + std::string(fields[3]) + "'");
            auto act = activity_from_code(static_cast<int>(*code));
            if (!act) throw CsvError(line_no, "activity code out of range 0..6: " + std::to_string(*code));
            series.labels.push_back(*act);
        }
    }
    return series;
}

LabeledSeries parse_csv_file(const std::string& path, double sample_rate_hz) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_csv(in, sample_rate_hz);
}

void write_csv(const LabeledSeries& series, std::ostream& out) {
    series.validate();
    const bool labeled = series.labeled();
    out << (labeled ? "accx,accy,accz,activity\n" : "accx,accy,accz\n");
    for (std::size_t i = 0; i < series.samples.size(); ++i) {
        const Sample& s = series.samples[i];
        out << format_double(s.ax) << ',' << format_double(s.ay) << ',' << format_double(s.az);
        if (labeled) out << ',' << activity_code(series.labels[i]);
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed");
}

void write_csv_file(const LabeledSeries& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_csv(series, out);
}

}  // namespace har
