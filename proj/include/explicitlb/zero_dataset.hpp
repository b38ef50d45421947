#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "explicitlb/constants.hpp"
#include "explicitlb/errors.hpp"

namespace explicitlb {

enum class ZeroKind { zeta, dirichlet };

// Ascending positive ordinates of nontrivial zeros (zeta, or a supplied
// Dirichlet L-function). Conjugate zeros are handled by symmetrized
// summation, never stored.
struct ZeroDataset {
    std::vector<double> ordinates;
    double height = 0.0;  // all zeros with 0 < gamma <= height are present
    std::string source;
    ZeroKind kind = ZeroKind::zeta;
    std::uint64_t q = 0;          // dirichlet only
    std::string character_id;     // dirichlet only

    std::size_t count() const { return ordinates.size(); }
};

// Riemann-von Mangoldt smooth count N(T) = (T/2pi) log(T/(2 pi e)) + 7/8.
inline double smooth_zero_count(double T) {
    return T / kTwoPi * std::log(T / (kTwoPi * std::exp(1.0))) + 7.0 / 8.0;
}

// Parse a zero table: ASCII, one decimal ordinate per line, '#' comments,
// LF or CRLF. Rejects nonmonotone or nonpositive entries with the line
// number; for kind=zeta also cross-checks the count against N(height).
inline ZeroDataset load_zeros(const std::string& path,
                              ZeroKind kind = ZeroKind::zeta,
                              std::uint64_t q = 0,
                              const std::string& character_id = "") {
    FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw parse_error("cannot open zero table: " + path);
    ZeroDataset ds;
    ds.kind = kind;
    ds.q = q;
    ds.character_id = character_id;
    ds.source = path;
    std::string line;
    int ch, lineno = 0;
    line.reserve(64);
    bool eof = false;
    while (!eof) {
        line.clear();
        for (;;) {
            ch = std::fgetc(f);
            if (ch == EOF) { eof = true; break; }
            if (ch == '\n') break;
            line.push_back(static_cast<char>(ch));
        }
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t pos = line.find('#');
        if (pos != std::string::npos) line.resize(pos);
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t");
        std::string tok = line.substr(b, e - b + 1);
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0') {
            std::fclose(f);
            throw parse_error("zero table line " + std::to_string(lineno) +
                              ": not a decimal ordinate: '" + tok + "'");
        }
        if (!(v > 0.0)) {
            std::fclose(f);
            throw parse_error("zero table line " + std::to_string(lineno) +
                              ": ordinate must be positive");
        }
        if (!ds.ordinates.empty() && v <= ds.ordinates.back()) {
            std::fclose(f);
            throw parse_error("zero table line " + std::to_string(lineno) +
                              ": ordinates must be strictly increasing");
        }
        ds.ordinates.push_back(v);
    }
    std::fclose(f);
    if (!ds.ordinates.empty()) ds.height = ds.ordinates.back();
    if (kind == ZeroKind::zeta && !ds.ordinates.empty()) {
        double expected = smooth_zero_count(ds.height);
        if (std::fabs(expected - static_cast<double>(ds.count())) > 2.0)
            throw coverage_error(
                "zero table count inconsistent with N(height): have " +
                std::to_string(ds.count()) + ", expected about " +
                std::to_string(expected));
    }
    return ds;
}

}  // namespace explicitlb
