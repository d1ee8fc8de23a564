#include "navone/kvfile.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace navone {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

KvFile KvFile::parse(const std::string& text) {
    KvFile kv;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw DataError("KvFile: malformed section header at line " + std::to_string(lineno));
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw DataError("KvFile: expected 'key = value' at line " + std::to_string(lineno));
        Entry e;
        e.section = section;
        e.key = trim(t.substr(0, eq));
        e.value = trim(t.substr(eq + 1));
        if (e.key.empty())
            throw DataError("KvFile: empty key at line " + std::to_string(lineno));
        kv.entries_.push_back(std::move(e));
    }
    return kv;
}

KvFile KvFile::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("KvFile: cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

const KvFile::Entry* KvFile::find(const std::string& section, const std::string& key) const {
    for (const auto& e : entries_)
        if (e.section == section && e.key == key) return &e;
    return nullptr;
}

bool KvFile::has(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
}

const std::string& KvFile::get(const std::string& section, const std::string& key) const {
    const Entry* e = find(section, key);
    if (!e) throw DataError("KvFile: missing key '" + key + "' in section '" + section + "'");
    return e->value;
}

std::string KvFile::get_or(const std::string& section, const std::string& key, std::string fallback) const {
    const Entry* e = find(section, key);
    return e ? e->value : std::move(fallback);
}

double KvFile::get_double(const std::string& section, const std::string& key) const {
    const std::string& v = get(section, key);
    try {
        size_t used = 0;
        double d = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw DataError("KvFile: key '" + key + "' is not a number: " + v);
    }
}

long long KvFile::get_int(const std::string& section, const std::string& key) const {
    const std::string& v = get(section, key);
    long long out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw DataError("KvFile: key '" + key + "' is not an integer: " + v);
    return out;
}

std::vector<double> KvFile::get_doubles(const std::string& section, const std::string& key) const {
    std::istringstream in(get(section, key));
    std::vector<double> out;
    double d;
    while (in >> d) out.push_back(d);
    if (!in.eof()) throw DataError("KvFile: key '" + key + "' is not a list of numbers");
    return out;
}

void KvFile::set(const std::string& section, const std::string& key, const std::string& value) {
    for (auto& e : entries_)
        if (e.section == section && e.key == key) {
            e.value = value;
            return;
        }
    entries_.push_back({section, key, value});
}

void KvFile::set_double(const std::string& section, const std::string& key, double value) {
    set(section, key, format_double(value));
}

void KvFile::set_int(const std::string& section, const std::string& key, long long value) {
    set(section, key, std::to_string(value));
}

std::string KvFile::serialize() const {
    std::ostringstream out;
    std::string section;
    bool first = true;
    for (const auto& e : entries_) {
        if (e.section != section || (first && !e.section.empty())) {
            if (!first) out << "\n";
            if (!e.section.empty()) out << "[" << e.section << "]\n";
            section = e.section;
        }
        out << e.key << " = " << e.value << "\n";
        first = false;
    }
    return out.str();
}

void KvFile::write_file(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw DataError("KvFile: cannot write " + path.string());
    out << serialize();
    if (!out) throw DataError("KvFile: write failed for " + path.string());
}

}  // namespace navone
