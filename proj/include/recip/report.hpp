#ifndef RECIP_REPORT_HPP
#define RECIP_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "recip/modmath.hpp"

namespace recip {

/// One sweep measurement.  Counts are carried as exact decimal strings so
/// CSV and JSON round-trip without loss.
struct ResultRecord {
    std::string theorem;
    u64 p = 0;
    u64 N = 0;
    int k = 0;
    int n = 0;
    std::string param_extra;
    std::string measured;
    std::string predicted_exponent;
    double measured_exponent = 0.0;
    std::string regime;  // "in" or "out"
    double seconds = 0.0;

    bool operator==(const ResultRecord&) const = default;
};

inline constexpr const char* kCsvHeader =
    "theorem,p,N,k,n,param_extra,measured,predicted_exponent,measured_exponent,regime,seconds";

// Shortest round-trip decimal for a double.
std::string format_double(double x);

std::string to_csv_line(const ResultRecord& r);
ResultRecord from_csv_line(const std::string& line);

std::string to_json_string(const ResultRecord& r);
ResultRecord from_json_string(const std::string& s);

// Full-file writers; the leading timestamp line/field is the only
// run-dependent content besides the seconds column.
void write_csv(std::ostream& os, const std::vector<ResultRecord>& records,
               const std::string& timestamp);
void write_json(std::ostream& os, const std::vector<ResultRecord>& records,
                const std::string& timestamp);

std::vector<ResultRecord> read_csv(std::istream& is);
std::vector<ResultRecord> read_json(std::istream& is);

}  // namespace recip

#endif
