#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace netcomp {

/// Flat key=value document written next to every CLI output. Keys are emitted
/// in insertion order so identical configurations produce identical bytes.
/// The same format doubles as the CLI config-file syntax.
class Manifest {
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);
    void set(const std::string& key, std::uint64_t value);

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;   // throws if missing

    void write(std::ostream& out) const;
    static Manifest read(std::istream& in);                  // '#' starts a comment

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

} // namespace netcomp
