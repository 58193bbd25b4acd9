#include "crowdnav/core/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace crowdnav {
namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Removes a trailing comment, honoring quoted strings.
std::string strip_comment(const std::string& s) {
    bool in_str = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') in_str = !in_str;
        if (s[i] == '#' && !in_str) return s.substr(0, i);
    }
    return s;
}

std::string unquote(const std::string& s, const std::string& ctx) {
    if (s.size() < 2 || s.front() != '"' || s.back() != '"')
        throw ConfigError("expected quoted string for " + ctx + ", got: " + s);
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == '\\' && i + 2 < s.size()) {
            ++i;
            switch (s[i]) {
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                default: out += s[i];
            }
        } else {
            out += s[i];
        }
    }
    return out;
}

std::vector<std::string> split_array(const std::string& raw, const std::string& ctx) {
    std::string s = strip(raw);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ConfigError("expected array for " + ctx + ", got: " + s);
    s = s.substr(1, s.size() - 2);
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    bool in_str = false;
    for (char c : s) {
        if (c == '"') in_str = !in_str;
        if (!in_str) {
            if (c == '[') ++depth;
            if (c == ']') --depth;
            if (c == ',' && depth == 0) {
                std::string item = strip(cur);
                if (!item.empty()) out.push_back(item);
                cur.clear();
                continue;
            }
        }
        cur += c;
    }
    std::string item = strip(cur);
    if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip(strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
            section = strip(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = strip(line.substr(0, eq));
        std::string val = strip(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key or value");
        if (!section.empty()) key = section + "." + key;
        cfg.values_[key] = val;
    }
    return cfg;
}

std::string Config::get_string(const std::string& key, const std::string& def) const {
    auto it = values_.find(key);
    if (it == values_.end()) return def;
    return unquote(it->second, key);
}

std::string Config::require_string(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing required config key: " + key);
    return unquote(it->second, key);
}

double Config::get_double(const std::string& key, double def) const {
    auto it = values_.find(key);
    if (it == values_.end()) return def;
    char* end = nullptr;
    double v = std::strtod(it->second.c_str(), &end);
    if (end == it->second.c_str() || *end != '\0')
        throw ConfigError("expected number for " + key + ", got: " + it->second);
    return v;
}

long long Config::get_int(const std::string& key, long long def) const {
    auto it = values_.find(key);
    if (it == values_.end()) return def;
    char* end = nullptr;
    long long v = std::strtoll(it->second.c_str(), &end, 10);
    if (end == it->second.c_str() || *end != '\0')
        throw ConfigError("expected integer for " + key + ", got: " + it->second);
    return v;
}

bool Config::get_bool(const std::string& key, bool def) const {
    auto it = values_.find(key);
    if (it == values_.end()) return def;
    if (it->second == "true") return true;
    if (it->second == "false") return false;
    throw ConfigError("expected true/false for " + key + ", got: " + it->second);
}

std::vector<double> Config::get_double_array(const std::string& key, std::vector<double> def) const {
    auto it = values_.find(key);
    if (it == values_.end()) return def;
    std::vector<double> out;
    for (const auto& item : split_array(it->second, key)) {
        char* end = nullptr;
        double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0')
            throw ConfigError("expected number in array " + key + ", got: " + item);
        out.push_back(v);
    }
    return out;
}

std::vector<std::string> Config::get_string_array(const std::string& key,
                                                  std::vector<std::string> def) const {
    auto it = values_.find(key);
    if (it == values_.end()) return def;
    std::vector<std::string> out;
    for (const auto& item : split_array(it->second, key)) out.push_back(unquote(item, key));
    return out;
}

std::string Config::snapshot() const {
    std::ostringstream out;
    std::string section;
    for (const auto& [key, val] : values_) {
        auto dot = key.rfind('.');
        std::string sec = dot == std::string::npos ? "" : key.substr(0, dot);
        std::string name = dot == std::string::npos ? key : key.substr(dot + 1);
        if (sec != section) {
            if (!section.empty() || !out.str().empty()) out << "\n";
            if (!sec.empty()) out << "[" << sec << "]\n";
            section = sec;
        }
        out << name << " = " << val << "\n";
    }
    return out.str();
}

}  // namespace crowdnav
