#ifndef K3ATLAS_POLYDATA_HPP
#define K3ATLAS_POLYDATA_HPP

#include <map>
#include <string>
#include <vector>

#include "k3atlas/exactpoly.hpp"

namespace k3atlas {

/// Named polynomial constants loaded from the plain-text data files.
///
/// File grammar: stanzas of the form
///   name: vars = a b c d
///   <expression in the canonical polynomial grammar, any number of lines>
/// separated by the next header; '#' starts a comment line.
class PolyTable {
public:
    static PolyTable load_file(const std::string& path);
    static PolyTable load_directory(const std::string& dir);

    bool contains(const std::string& name) const { return entries_.count(name) != 0; }
    const xp::MPoly& at(const std::string& name) const;
    std::vector<std::string> names() const;
    void merge(PolyTable other);

private:
    std::map<std::string, xp::MPoly> entries_;
};

/// Data directory resolution: $K3ATLAS_DATA when set, else the compiled-in
/// source-tree default.
std::string data_directory();

/// Process-wide table of every shipped constant (loaded once, lazily).
const PolyTable& data_table();

} // namespace k3atlas

#endif
