#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cantornet/chaos.hpp"
#include "cantornet/line_map.hpp"
#include "cantornet/network.hpp"
#include "cantornet/spectral.hpp"

namespace cantornet {

inline constexpr const char* kVersion = "1.0.0";

// Shortest exact decimal round-trip for a double (17 significant digits).
std::string fmt17(double x);

// Minimal deterministic JSON writer: fields appear exactly in insertion
// order, doubles printed with fmt17, so identical inputs give identical bytes.
class JsonWriter {
public:
    JsonWriter& begin();
    JsonWriter& end();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(int v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& s);
    JsonWriter& null_value();
    JsonWriter& raw(const std::string& fragment); // pre-serialized value
    JsonWriter& begin_array();
    JsonWriter& end_array();
    std::string str() const { return out_; }

private:
    void maybe_comma();
    std::string out_;
    bool need_comma_ = false;
};

std::string json_escape(const std::string& s);

// FNV-1a 64-bit over a byte string, hex-encoded.
std::string fnv1a_hex(const std::string& bytes);

std::string iso_timestamp_utc();

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Matrix CSV: one row per line, entries with fmt17, comma-separated.
std::string matrix_to_csv(const Matrix& m);
Matrix matrix_from_csv(const std::string& text);

// Matrix JSON: {"n": ..., "mode": "row"|"column", "entries": [[...],...]}
// with one inner array per row (flat row-major lists accepted on input).
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

// Dispatch on extension: .json uses the JSON format, anything else CSV.
Matrix matrix_from_file(const std::string& path);

// Canonical fingerprint of a matrix (over its CSV serialization plus mode).
std::string matrix_fingerprint(const Matrix& m);

// Network orbit CSV: header "k,x_1,...,x_n", one recorded state per line.
std::string orbit_to_csv(const Orbit& o, std::size_t n);

// Scalar orbit CSV: header "k,t,branch" (branch 0 = left, 1 = right).
std::string scalar_orbit_to_csv(const ScalarOrbit& o);

// Branch itinerary as a 0/1 string.
std::string itinerary_string(const ScalarOrbit& o);

// Attractor points, one fmt17 value per line.
std::string attractor_to_text(const AttractorApprox& a);

std::string delta_to_json(const DeltaParams& dp);
std::string sensitivity_report_to_json(const SensitivityReport& r);
std::string omega_report_to_json(const OmegaReport& r);

} // namespace cantornet
