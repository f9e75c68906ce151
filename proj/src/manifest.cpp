#include "netcomp/manifest.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace netcomp {

void Manifest::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : entries_) {
        if (k == key) {
            v = value;
            return;
        }
    }
    entries_.emplace_back(key, value);
}

void Manifest::set(const std::string& key, double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    set(key, std::string(buf));
}

void Manifest::set(const std::string& key, std::uint64_t value) {
    set(key, std::to_string(value));
}

bool Manifest::has(const std::string& key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return true;
    return false;
}

const std::string& Manifest::get(const std::string& key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return v;
    throw std::invalid_argument("manifest key '" + key + "' missing");
}

void Manifest::write(std::ostream& out) const {
    for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
}

Manifest Manifest::read(std::istream& in) {
    Manifest m;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("manifest line " + std::to_string(lineno) +
                                        " is not key=value");
        m.set(line.substr(0, eq), line.substr(eq + 1));
    }
    return m;
}

} // namespace netcomp
