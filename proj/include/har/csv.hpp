#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "har/series.hpp"

namespace har {

// Malformed input; line is 1-based (header = line 1).
class CsvError : public std::runtime_error {
public:
    CsvError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Raw accelerometer CSV, header `accx,accy,accz` or `accx,accy,accz,activity`.
// The file carries no sample rate; the caller supplies it.
LabeledSeries parse_csv(std::istream& in, double sample_rate_hz = kDefaultSampleRateHz);
LabeledSeries parse_csv_file(const std::string& path, double sample_rate_hz = kDefaultSampleRateHz);

void write_csv(const LabeledSeries& series, std::ostream& out);
void write_csv_file(const LabeledSeries& series, const std::string& path);

}  // namespace har
