#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace niafs {

// Flat key = value file with [section] headers; '#' and ';' comments.
// Duplicate keys within a section are rejected (typo protection).
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;

    std::string get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double_or(const std::string& section, const std::string& key,
                         double fallback) const;
    std::int64_t get_int(const std::string& section, const std::string& key) const;
    std::int64_t get_int_or(const std::string& section, const std::string& key,
                            std::int64_t fallback) const;
    std::uint64_t get_uint64_or(const std::string& section, const std::string& key,
                                std::uint64_t fallback) const;
    bool get_bool_or(const std::string& section, const std::string& key, bool fallback) const;

    // Keys in parse order (used for unknown-key rejection).
    std::vector<std::string> keys(const std::string& section) const;
    std::vector<std::string> section_names() const;

    // Comma-separated list value, items trimmed.
    std::vector<std::string> get_list(const std::string& section, const std::string& key) const;

private:
    struct Section {
        std::vector<std::pair<std::string, std::string>> entries;
    };
    std::map<std::string, Section> sections_;
};

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char delim);

} // namespace niafs
