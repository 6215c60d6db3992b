// Check reports and their serialized forms: json-lines (byte-stable),
// summary text, and CSV for spectra.
#pragma once

#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "blob/matrix.hpp"
#include "blob/rng.hpp"

namespace blob {

struct CheckReport {
    std::string check_id;
    std::string params_digest;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double elapsed_ms = 0.0;
    std::string notes;
};

namespace detail {

inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

} // namespace detail

// One json object per line, keys in fixed order, reals at 17 significant
// digits.
inline std::string emit_json_lines(const std::vector<CheckReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        out += "{\"check_id\":\"" + detail::json_escape(r.check_id) + "\"";
        out += ",\"params_digest\":\"" + detail::json_escape(r.params_digest) + "\"";
        out += ",\"residual\":" + detail::format_real(r.residual);
        out += ",\"tolerance\":" + detail::format_real(r.tolerance);
        out += std::string(",\"passed\":") + (r.passed ? "true" : "false");
        out += ",\"elapsed_ms\":" + detail::format_real(r.elapsed_ms);
        out += ",\"notes\":\"" + detail::json_escape(r.notes) + "\"}\n";
    }
    return out;
}

inline std::string emit_summary_text(const std::vector<CheckReport>& reports) {
    std::map<std::string, std::tuple<int, int, double, std::string>> suites; // total, passed, worst, worst id
    for (const auto& r : reports) {
        const auto slash = r.check_id.find('/');
        const std::string suite = (slash == std::string::npos) ? r.check_id : r.check_id.substr(0, slash);
        auto& [total, passed, worst, worst_id] = suites[suite];
        ++total;
        if (r.passed) ++passed;
        if (r.notes.rfind("negative-control", 0) == 0 || r.notes.rfind("skipped", 0) == 0) continue;
        if (r.residual >= worst) {
            worst = r.residual;
            worst_id = r.check_id;
        }
    }
    std::ostringstream os;
    int total = 0, passed = 0;
    for (const auto& [suite, data] : suites) {
        const auto& [t, p, worst, worst_id] = data;
        total += t;
        passed += p;
        os << "suite " << suite << ": " << p << "/" << t << " passed, worst residual " << detail::format_real(worst);
        if (!worst_id.empty()) os << " (" << worst_id << ")";
        os << "\n";
    }
    os << "total: " << passed << "/" << total << " passed\n";
    os << (passed == total ? "status: PASS\n" : "status: FAIL\n");
    return os.str();
}

inline std::string emit_spectrum_csv(const std::vector<cplx>& sorted_eigs, double cluster_tol = 1e-8) {
    const std::size_t n = sorted_eigs.size();
    std::vector<int> mult(n, 1);
    std::size_t k = 0;
    while (k < n) {
        std::size_t j = k + 1;
        while (j < n && std::abs(sorted_eigs[j] - sorted_eigs[k]) <= cluster_tol) ++j;
        for (std::size_t i = k; i < j; ++i) mult[i] = static_cast<int>(j - k);
        k = j;
    }
    std::string out = "index,re,im,multiplicity\n";
    for (std::size_t idx = 0; idx < n; ++idx)
        out += std::to_string(idx) + "," + detail::format_real(sorted_eigs[idx].real()) + "," +
               detail::format_real(sorted_eigs[idx].imag()) + "," + std::to_string(mult[idx]) + "\n";
    return out;
}

// Minimal parser for the json-lines format above (round-trip testing and
// downstream tooling).
inline CheckReport parse_json_line(const std::string& line) {
    CheckReport r;
    auto find_string = [&](const std::string& key) {
        const std::string pat = "\"" + key + "\":\"";
        const auto pos = line.find(pat);
        if (pos == std::string::npos) throw std::runtime_error("parse_json_line: missing key " + key);
        std::string out;
        for (std::size_t i = pos + pat.size(); i < line.size(); ++i) {
            if (line[i] == '\\' && i + 1 < line.size()) {
                const char n = line[++i];
                if (n == 'n') out += '\n';
                else if (n == 't') out += '\t';
                else out += n;
                continue;
            }
            if (line[i] == '"') break;
            out += line[i];
        }
        return out;
    };
    auto find_raw = [&](const std::string& key) {
        const std::string pat = "\"" + key + "\":";
        const auto pos = line.find(pat);
        if (pos == std::string::npos) throw std::runtime_error("parse_json_line: missing key " + key);
        std::size_t i = pos + pat.size(), j = i;
        while (j < line.size() && line[j] != ',' && line[j] != '}') ++j;
        return line.substr(i, j - i);
    };
    r.check_id = find_string("check_id");
    r.params_digest = find_string("params_digest");
    r.residual = std::stod(find_raw("residual"));
    r.tolerance = std::stod(find_raw("tolerance"));
    r.passed = find_raw("passed") == "true";
    r.elapsed_ms = std::stod(find_raw("elapsed_ms"));
    r.notes = find_string("notes");
    return r;
}

} // namespace blob
