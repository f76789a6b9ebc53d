#include "cantornet/io.hpp"

#include <cctype>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cantornet/errors.hpp"

namespace cantornet {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void JsonWriter::maybe_comma() {
    if (need_comma_) out_ += ',';
    need_comma_ = false;
}

JsonWriter& JsonWriter::begin() {
    maybe_comma();
    out_ += '{';
    return *this;
}

JsonWriter& JsonWriter::end() {
    out_ += '}';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    maybe_comma();
    out_ += '"';
    out_ += json_escape(k);
    out_ += "\":";
    need_comma_ = false;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    maybe_comma();
    if (std::isnan(v))
        out_ += "null";
    else
        out_ += fmt17(v);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    maybe_comma();
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%" PRIu64, v);
    out_ += buf;
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    maybe_comma();
    out_ += std::to_string(v);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    maybe_comma();
    out_ += v ? "true" : "false";
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
    maybe_comma();
    out_ += '"';
    out_ += json_escape(s);
    out_ += '"';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::null_value() {
    maybe_comma();
    out_ += "null";
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::raw(const std::string& fragment) {
    maybe_comma();
    out_ += fragment;
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    maybe_comma();
    out_ += '[';
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    need_comma_ = true;
    return *this;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
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

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

std::string iso_timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open file for writing: " + path);
    out << content;
    if (!out) throw io_error("write failed: " + path);
}

std::string matrix_to_csv(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) {
            if (j) out += ',';
            out += fmt17(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

Matrix matrix_from_csv(const std::string& text) {
    Matrix m;
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            try {
                std::size_t pos = 0;
                row.push_back(std::stod(cell, &pos));
            } catch (const std::exception&) {
                throw io_error("matrix CSV: cannot parse entry '" + cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw io_error("matrix CSV: no rows");
    m.n = rows.size();
    for (const auto& r : rows)
        if (r.size() != m.n) throw io_error("matrix CSV: not square");
    m.a.reserve(m.n * m.n);
    for (const auto& r : rows) m.a.insert(m.a.end(), r.begin(), r.end());
    return m;
}

std::string matrix_to_json(const Matrix& m) {
    JsonWriter w;
    w.begin();
    w.key("n").value(static_cast<std::uint64_t>(m.n));
    w.key("mode").value(std::string(m.mode == SumMode::row ? "row" : "column"));
    w.key("entries").begin_array();
    for (std::size_t i = 0; i < m.n; ++i) {
        w.begin_array();
        for (std::size_t j = 0; j < m.n; ++j) w.value(m.at(i, j));
        w.end_array();
    }
    w.end_array();
    w.end();
    return w.str();
}

Matrix matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw io_error(std::string("matrix JSON: parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw io_error("matrix JSON: expected object with fields n, mode, entries");
    Matrix m;
    m.n = j["n"].get<std::size_t>();
    if (j.contains("mode")) {
        const std::string mode = j["mode"].get<std::string>();
        if (mode == "row")
            m.mode = SumMode::row;
        else if (mode == "column")
            m.mode = SumMode::column;
        else
            throw io_error("matrix JSON: mode must be 'row' or 'column'");
    }
    const auto& entries = j["entries"];
    if (!entries.is_array()) throw io_error("matrix JSON: entries must be an array");
    m.a.reserve(m.n * m.n);
    const bool nested = !entries.empty() && entries.front().is_array();
    if (nested) {
        if (entries.size() != m.n) throw io_error("matrix JSON: expected n rows");
        for (const auto& row : entries) {
            if (!row.is_array() || row.size() != m.n)
                throw io_error("matrix JSON: each row must hold n numbers");
            for (const auto& x : row) {
                if (!x.is_number()) throw io_error("matrix JSON: non-numeric entry");
                m.a.push_back(x.get<double>());
            }
        }
    } else {
        // Flat row-major list accepted as a convenience.
        if (entries.size() != m.n * m.n)
            throw io_error("matrix JSON: entries must hold n*n numbers");
        for (const auto& x : entries) {
            if (!x.is_number()) throw io_error("matrix JSON: non-numeric entry");
            m.a.push_back(x.get<double>());
        }
    }
    return m;
}

Matrix matrix_from_file(const std::string& path) {
    const std::string text = read_text_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return matrix_from_json(text);
    return matrix_from_csv(text);
}

std::string matrix_fingerprint(const Matrix& m) {
    std::string bytes = matrix_to_csv(m);
    bytes += m.mode == SumMode::row ? "mode=row" : "mode=column";
    return fnv1a_hex(bytes);
}

std::string orbit_to_csv(const Orbit& o, std::size_t n) {
    std::string out = "k";
    for (std::size_t i = 1; i <= n; ++i) {
        out += ",x_";
        out += std::to_string(i);
    }
    out += '\n';
    for (std::size_t r = 0; r < o.ks.size(); ++r) {
        out += std::to_string(o.ks[r]);
        for (std::size_t i = 0; i < n; ++i) {
            out += ',';
            out += fmt17(o.states[r * n + i]);
        }
        out += '\n';
    }
    return out;
}

std::string scalar_orbit_to_csv(const ScalarOrbit& o) {
    std::string out = "k,t,branch\n";
    for (std::size_t k = 0; k < o.values.size(); ++k) {
        out += std::to_string(k);
        out += ',';
        out += fmt17(o.values[k]);
        out += ',';
        out += o.branches[k] ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string itinerary_string(const ScalarOrbit& o) {
    std::string s;
    s.reserve(o.branches.size());
    for (std::uint8_t b : o.branches) s += b ? '1' : '0';
    return s;
}

std::string attractor_to_text(const AttractorApprox& a) {
    std::string out;
    for (double p : a.points) {
        out += fmt17(p);
        out += '\n';
    }
    return out;
}

std::string delta_to_json(const DeltaParams& dp) {
    JsonWriter w;
    w.begin();
    w.key("K").value(static_cast<std::uint64_t>(dp.K));
    w.key("delta").value(dp.delta);
    w.key("theta").value(dp.theta);
    w.key("tail_bound").value(dp.tail_bound);
    w.end();
    return w.str();
}

std::string sensitivity_report_to_json(const SensitivityReport& r) {
    JsonWriter w;
    w.begin();
    w.key("t0").value(r.t0);
    w.key("epsilon").value(r.epsilon);
    w.key("k_capture").value(static_cast<std::uint64_t>(r.k_capture));
    w.key("witness_s0").value(r.witness_s0);
    w.key("separation").value(r.separation);
    w.key("eta_network").value(r.eta_network); // null when no network context
    w.end();
    return w.str();
}

std::string omega_report_to_json(const OmegaReport& r) {
    JsonWriter w;
    w.begin();
    w.key("t0").value(r.t0);
    w.key("tail_start").value(r.tail_start);
    w.key("tail_len").value(r.tail_len);
    w.key("tol").value(r.tol);
    w.key("tail_to_set").value(r.tail_to_set);
    w.key("set_to_tail").value(r.set_to_tail);
    w.key("pass").value(r.pass);
    w.end();
    return w.str();
}

} // namespace cantornet
