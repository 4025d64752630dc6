#include "mplab/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mplab {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
    std::string s;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) s += ',';
        s += header[i];
    }
    s += "\r\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ',';
            s += format_double(row[i]);
        }
        s += "\r\n";
    }
    return s;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    write_text_file(path, csv_table(header, rows));
}

void write_json(const std::string& path, const Json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

Json ExperimentConfig::to_json() const {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["profile"] = profile;
    j["space"] = space;
    j["mode"] = mode;
    j["expect"] = expect;
    j["epsilon"] = epsilon;
    j["lambda"] = lambda;
    j["horizon"] = horizon;
    j["tmax"] = tmax;
    j["tol"] = tol;
    j["k"] = k;
    j["points"] = points;
    j["seed"] = seed;
    j["out"] = out;
    return j;
}

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
    static const char* known[] = {"schema_version", "command", "profile", "space", "mode",
                                  "expect",         "epsilon", "lambda",  "horizon",
                                  "tmax",           "tol",     "k",       "points",
                                  "seed",           "out"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) throw std::invalid_argument("config: unknown field '" + it.key() + "'");
    }
    ExperimentConfig c;
    if (j.contains("schema_version") && j["schema_version"].get<int>() != kSchemaVersion)
        throw std::invalid_argument("config: unsupported schema_version");
    auto get = [&](const char* key, auto& slot) {
        if (j.contains(key)) slot = j[key].get<std::decay_t<decltype(slot)>>();
    };
    get("command", c.command);
    get("profile", c.profile);
    get("space", c.space);
    get("mode", c.mode);
    get("expect", c.expect);
    get("epsilon", c.epsilon);
    get("lambda", c.lambda);
    get("horizon", c.horizon);
    get("tmax", c.tmax);
    get("tol", c.tol);
    get("k", c.k);
    get("points", c.points);
    get("seed", c.seed);
    get("out", c.out);
    return c;
}

}  // namespace mplab
