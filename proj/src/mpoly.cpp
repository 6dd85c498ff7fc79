#include "qalg/mpoly.hpp"
#include "qalg/parse.hpp"

#include <fstream>

namespace qalg {

std::vector<MPoly<RatFunc>> load_poly_list(const std::string& path, const VarSetPtr& vars) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<MPoly<RatFunc>> out;
    std::string line;
    while (std::getline(in, line)) {
        size_t p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        out.push_back(parse_poly<RatFunc>(line, vars));
    }
    return out;
}

std::string mono_to_string(Mono m, const VarSet& vars) {
    std::string out;
    for (int v = 0; v < vars.count(); ++v) {
        unsigned e = m.exp(v);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += vars.names[static_cast<size_t>(v)];
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace qalg
