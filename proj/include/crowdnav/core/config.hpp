#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace crowdnav {

// Flat key-value view over a TOML-style config file. Supports [section]
// and [section.sub] headers, `key = value` lines, strings, booleans,
// integers, floats, homogeneous arrays and '#' comments. Keys are
// addressed fully qualified, e.g. "bench.n_goals".
class Config {
public:
    Config() = default;

    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    std::string get_string(const std::string& key, const std::string& def) const;
    std::string require_string(const std::string& key) const;
    double get_double(const std::string& key, double def) const;
    long long get_int(const std::string& key, long long def) const;
    bool get_bool(const std::string& key, bool def) const;
    std::vector<double> get_double_array(const std::string& key, std::vector<double> def = {}) const;
    std::vector<std::string> get_string_array(const std::string& key,
                                              std::vector<std::string> def = {}) const;

    void set(const std::string& key, const std::string& raw_value) { values_[key] = raw_value; }

    // Reproducible dump of the effective configuration.
    std::string snapshot() const;

    const std::map<std::string, std::string>& raw() const { return values_; }

private:
    // Values kept as raw TOML fragments; typed accessors parse on demand.
    std::map<std::string, std::string> values_;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace crowdnav
