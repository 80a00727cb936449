#include "niafs/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "niafs/errors.hpp"

namespace niafs {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, delim)) out.push_back(trim(item));
    if (!s.empty() && s.back() == delim) out.emplace_back();
    return out;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str());
}

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ValidationError("config line " + std::to_string(line_no) +
                                      ": malformed section header");
            section = trim(t.substr(1, t.size() - 2));
            cfg.sections_[section]; // section may stay empty
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(line_no) +
                                  ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw ValidationError("config line " + std::to_string(line_no) + ": empty key");
        auto& entries = cfg.sections_[section].entries;
        for (const auto& [k, v] : entries)
            if (k == key)
                throw ValidationError("config: duplicate key '" + key + "' in section [" +
                                      section + "]");
        entries.emplace_back(key, value);
    }
    return cfg;
}

bool Config::has_section(const std::string& section) const {
    return sections_.count(section) > 0;
}

bool Config::has(const std::string& section, const std::string& key) const {
    auto it = sections_.find(section);
    if (it == sections_.end()) return false;
    for (const auto& [k, v] : it->second.entries)
        if (k == key) return true;
    return false;
}

std::string Config::get(const std::string& section, const std::string& key) const {
    auto it = sections_.find(section);
    if (it != sections_.end())
        for (const auto& [k, v] : it->second.entries)
            if (k == key) return v;
    throw ValidationError("config: missing key '" + key + "' in section [" + section + "]");
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
    return has(section, key) ? get(section, key) : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
    const std::string v = get(section, key);
    char* end = nullptr;
    const double out = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ValidationError("config: key '" + key + "' expects a number, got '" + v + "'");
    return out;
}

double Config::get_double_or(const std::string& section, const std::string& key,
                             double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

std::int64_t Config::get_int(const std::string& section, const std::string& key) const {
    const std::string v = get(section, key);
    char* end = nullptr;
    const long long out = std::strtoll(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        throw ValidationError("config: key '" + key + "' expects an integer, got '" + v + "'");
    return out;
}

std::int64_t Config::get_int_or(const std::string& section, const std::string& key,
                                std::int64_t fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

std::uint64_t Config::get_uint64_or(const std::string& section, const std::string& key,
                                    std::uint64_t fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = get(section, key);
    char* end = nullptr;
    const unsigned long long out = std::strtoull(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        throw ValidationError("config: key '" + key + "' expects an unsigned integer, got '" + v +
                              "'");
    return out;
}

bool Config::get_bool_or(const std::string& section, const std::string& key, bool fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = get(section, key);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ValidationError("config: key '" + key + "' expects a boolean, got '" + v + "'");
}

std::vector<std::string> Config::keys(const std::string& section) const {
    std::vector<std::string> out;
    auto it = sections_.find(section);
    if (it != sections_.end())
        for (const auto& [k, v] : it->second.entries) out.push_back(k);
    return out;
}

std::vector<std::string> Config::section_names() const {
    std::vector<std::string> out;
    for (const auto& [name, s] : sections_) out.push_back(name);
    return out;
}

std::vector<std::string> Config::get_list(const std::string& section, const std::string& key) const {
    std::vector<std::string> items = split(get(section, key), ',');
    std::vector<std::string> out;
    for (auto& item : items)
        if (!item.empty()) out.push_back(std::move(item));
    return out;
}

} // namespace niafs
