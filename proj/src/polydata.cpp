#include "k3atlas/polydata.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

namespace k3atlas {

namespace {

bool parse_header(const std::string& line, std::string& name, std::vector<std::string>& vars) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) return false;
    std::string head = line.substr(0, colon);
    std::string rest = line.substr(colon + 1);
    // trim
    auto trim = [](std::string& s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t\r");
        s = (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
    };
    trim(head);
    trim(rest);
    if (head.empty() || rest.rfind("vars", 0) != 0) return false;
    rest = rest.substr(4);
    trim(rest);
    if (rest.empty() || rest[0] != '=') return false;
    rest = rest.substr(1);
    std::istringstream is(rest);
    std::vector<std::string> vs;
    std::string v;
    while (is >> v) vs.push_back(v);
    if (vs.empty()) return false;
    name = head;
    vars = vs;
    return true;
}

} // namespace

PolyTable PolyTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open polynomial data file " + path);

    PolyTable table;
    std::string line;
    std::string cur_name;
    std::vector<std::string> cur_vars;
    std::string cur_body;

    auto flush = [&]() {
        if (cur_name.empty()) return;
        auto ctx = xp::make_context(cur_vars);
        try {
            auto [it, inserted] = table.entries_.emplace(cur_name, xp::parse_poly(cur_body, ctx));
            if (!inserted) throw InputError(path + ": duplicate constant " + cur_name);
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + cur_name + ": " + e.what(), e.line, e.column);
        }
        cur_name.clear();
        cur_body.clear();
    };

    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::string name;
        std::vector<std::string> vars;
        if (parse_header(line, name, vars)) {
            flush();
            cur_name = name;
            cur_vars = vars;
        } else if (!cur_name.empty()) {
            cur_body += line;
            cur_body += '\n';
        } else {
            // outside any stanza only blank lines are allowed
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw InputError(path + ": content outside stanza: " + line);
        }
    }
    flush();
    return table;
}

PolyTable PolyTable::load_directory(const std::string& dir) {
    namespace fs = std::filesystem;
    PolyTable table;
    if (!fs::is_directory(dir)) throw InputError("polynomial data directory missing: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".poly")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) table.merge(load_file(f.string()));
    return table;
}

const xp::MPoly& PolyTable::at(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw InputError("unknown polynomial constant " + name);
    return it->second;
}

std::vector<std::string> PolyTable::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

void PolyTable::merge(PolyTable other) {
    for (auto& [k, v] : other.entries_) {
        if (entries_.count(k)) throw InputError("duplicate polynomial constant " + k);
        entries_.emplace(k, std::move(v));
    }
}

std::string data_directory() {
    if (const char* env = std::getenv("K3ATLAS_DATA"); env && *env) return env;
#ifdef K3ATLAS_DEFAULT_DATA_DIR
    return K3ATLAS_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

const PolyTable& data_table() {
    static PolyTable table = PolyTable::load_directory(data_directory());
    return table;
}

} // namespace k3atlas
