#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace specgraph {

// 15 significant digits: round-trips double through text for our value
// ranges while keeping output stable across runs
inline std::string csv_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

}  // namespace specgraph
