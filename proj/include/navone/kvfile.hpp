#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "navone/error.hpp"

namespace navone {

// Plain-text "key = value" document with optional [section] headers and '#'
// comments. Insertion order is preserved so writes are diff-friendly.
class KvFile {
  public:
    struct Entry {
        std::string section;  // "" for the default section
        std::string key;
        std::string value;
    };

    static KvFile parse(const std::string& text);
    static KvFile parse_file(const std::filesystem::path& path);

    bool has(const std::string& section, const std::string& key) const;
    const std::string& get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key, std::string fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    long long get_int(const std::string& section, const std::string& key) const;
    std::vector<double> get_doubles(const std::string& section, const std::string& key) const;

    void set(const std::string& section, const std::string& key, const std::string& value);
    void set_double(const std::string& section, const std::string& key, double value);
    void set_int(const std::string& section, const std::string& key, long long value);

    const std::vector<Entry>& entries() const { return entries_; }

    std::string serialize() const;
    void write_file(const std::filesystem::path& path) const;

  private:
    const Entry* find(const std::string& section, const std::string& key) const;
    std::vector<Entry> entries_;
};

// Full-precision double formatting used by all text formats (round-trips exactly).
std::string format_double(double v);

}  // namespace navone
