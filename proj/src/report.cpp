#include "recip/report.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "recip/errors.hpp"

namespace recip {

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

double parse_double(const std::string& s) {
    if (s.empty()) return 0.0;
    return std::stod(s);
}

std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n') c = ';';
    return s;
}

}  // namespace

std::string to_csv_line(const ResultRecord& r) {
    std::ostringstream os;
    os << sanitize(r.theorem) << ',' << r.p << ',' << r.N << ',' << r.k << ',' << r.n << ','
       << sanitize(r.param_extra) << ',' << sanitize(r.measured) << ','
       << sanitize(r.predicted_exponent) << ',' << format_double(r.measured_exponent) << ','
       << sanitize(r.regime) << ',' << format_double(r.seconds);
    return os.str();
}

ResultRecord from_csv_line(const std::string& line) {
    std::vector<std::string> f;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            f.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    f.push_back(cur);
    if (f.size() != 11) throw ConfigError("CSV record must have 11 fields: " + line);
    ResultRecord r;
    r.theorem = f[0];
    r.p = std::stoull(f[1]);
    r.N = std::stoull(f[2]);
    r.k = std::stoi(f[3]);
    r.n = std::stoi(f[4]);
    r.param_extra = f[5];
    r.measured = f[6];
    r.predicted_exponent = f[7];
    r.measured_exponent = parse_double(f[8]);
    r.regime = f[9];
    r.seconds = parse_double(f[10]);
    return r;
}

namespace {

nlohmann::json record_json(const ResultRecord& r) {
    return nlohmann::json{{"theorem", r.theorem},
                          {"p", r.p},
                          {"N", r.N},
                          {"k", r.k},
                          {"n", r.n},
                          {"param_extra", r.param_extra},
                          {"measured", r.measured},
                          {"predicted_exponent", r.predicted_exponent},
                          {"measured_exponent", r.measured_exponent},
                          {"regime", r.regime},
                          {"seconds", r.seconds}};
}

ResultRecord record_from_json(const nlohmann::json& j) {
    ResultRecord r;
    r.theorem = j.at("theorem").get<std::string>();
    r.p = j.at("p").get<u64>();
    r.N = j.at("N").get<u64>();
    r.k = j.at("k").get<int>();
    r.n = j.at("n").get<int>();
    r.param_extra = j.at("param_extra").get<std::string>();
    r.measured = j.at("measured").get<std::string>();
    r.predicted_exponent = j.at("predicted_exponent").get<std::string>();
    r.measured_exponent = j.at("measured_exponent").get<double>();
    r.regime = j.at("regime").get<std::string>();
    r.seconds = j.at("seconds").get<double>();
    return r;
}

}  // namespace

std::string to_json_string(const ResultRecord& r) { return record_json(r).dump(); }

ResultRecord from_json_string(const std::string& s) {
    return record_from_json(nlohmann::json::parse(s));
}

void write_csv(std::ostream& os, const std::vector<ResultRecord>& records,
               const std::string& timestamp) {
    os << "# generated " << timestamp << "\n" << kCsvHeader << "\n";
    for (const auto& r : records) os << to_csv_line(r) << "\n";
}

void write_json(std::ostream& os, const std::vector<ResultRecord>& records,
                const std::string& timestamp) {
    nlohmann::json j;
    j["timestamp"] = timestamp;
    j["records"] = nlohmann::json::array();
    for (const auto& r : records) j["records"].push_back(record_json(r));
    os << j.dump(2) << "\n";
}

std::vector<ResultRecord> read_csv(std::istream& is) {
    std::vector<ResultRecord> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line == kCsvHeader) continue;
        out.push_back(from_csv_line(line));
    }
    return out;
}

std::vector<ResultRecord> read_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    std::vector<ResultRecord> out;
    for (const auto& rec : j.at("records")) out.push_back(record_from_json(rec));
    return out;
}

}  // namespace recip
