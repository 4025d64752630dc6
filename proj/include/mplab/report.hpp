#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace mplab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// %.17g rendering, shared by the CSV writer and anything hashing output
std::string format_double(double x);

void write_text_file(const std::string& path, const std::string& content);

// RFC 4180: CRLF terminators, quoting only where needed (numeric tables here)
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void write_json(const std::string& path, const Json& j);

// Experiment configuration: every CLI knob, serialized losslessly into each
// report. Unknown fields are rejected on parse.
struct ExperimentConfig {
    std::string command;
    std::string profile = "euclidean";
    std::string space = "interval";
    std::string mode = "linfty";
    std::string expect;  // "", "violated"
    double epsilon = 1.0;
    double lambda = 1.0;
    double horizon = 10.0;
    double tmax = 50.0;
    double tol = 1e-10;
    double k = 4.0;
    long points = 10000;
    std::uint64_t seed = 1;
    std::string out;

    Json to_json() const;
    static ExperimentConfig from_json(const Json& j);  // throws on unknown keys
};

}  // namespace mplab
