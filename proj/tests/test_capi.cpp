#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "cantornet.h"

namespace {

std::string take(char* p) {
    std::string s = p ? p : "";
    cn_string_free(p);
    return s;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    REQUIRE(f.good());
    f << content;
}

} // namespace

TEST_CASE("version and error plumbing") {
    CHECK(std::strcmp(cn_version(), "1.0.0") == 0);

    cn_delta* d = nullptr;
    CHECK(cn_delta_create(64, nullptr) == CN_ERR_INVALID_ARGUMENT);
    CHECK(cn_delta_create(0, &d) == CN_ERR_DOMAIN);
    CHECK(d == nullptr);
    CHECK(std::strlen(cn_last_error()) > 0);

    // Releases are null-safe.
    cn_delta_release(nullptr);
    cn_matrix_release(nullptr);
    cn_network_release(nullptr);
    cn_attractor_release(nullptr);
    cn_string_free(nullptr);
}

TEST_CASE("threshold parameter handle") {
    cn_delta* d = nullptr;
    REQUIRE(cn_delta_create(64, &d) == CN_OK);
    CHECK(cn_delta_K(d) == 64);
    CHECK(cn_delta_value(d) == doctest::Approx(0.6450982785693543).epsilon(1e-15));
    CHECK(cn_delta_theta(d) == 2.0 * (1.0 - cn_delta_value(d)));
    CHECK(cn_delta_tail_bound(d) == std::ldexp(1.0, -65));

    char* json = nullptr;
    REQUIRE(cn_delta_to_json(d, &json) == CN_OK);
    const std::string s = take(json);
    CHECK(s.find("\"delta\":0.645098278569354") != std::string::npos);
    CHECK(s.find("\"theta\":") != std::string::npos);
    CHECK(s.find("\"K\":64") != std::string::npos);
    cn_delta_release(d);

    std::uint32_t bit = 9;
    REQUIRE(cn_fib_digit(0, &bit) == CN_OK);
    CHECK(bit == 0);
    REQUIRE(cn_fib_digit(1, &bit) == CN_OK);
    CHECK(bit == 1);
    CHECK(cn_fib_digit(2, nullptr) == CN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("matrix lifecycle, validation, and serialization round-trip") {
    cn_matrix* m = nullptr;
    REQUIRE(cn_matrix_generate(4, 1, 0.875, 0, &m) == CN_OK);
    CHECK(cn_matrix_n(m) == 4);
    CHECK(cn_matrix_column_mode(m) == 0);

    std::vector<double> entries(16);
    REQUIRE(cn_matrix_entries(m, entries.data(), entries.size()) == CN_OK);
    for (double e : entries) CHECK(e > 0.0);
    CHECK(cn_matrix_entries(m, entries.data(), 3) == CN_ERR_INVALID_ARGUMENT);

    int ok = 0;
    char* report = nullptr;
    REQUIRE(cn_matrix_validate(m, &ok, &report) == CN_OK);
    CHECK(ok == 1);
    CHECK(take(report).find("\"pass\":true") != std::string::npos);

    char* csv = nullptr;
    REQUIRE(cn_matrix_to_csv(m, &csv) == CN_OK);
    const std::string csv_text = take(csv);
    write_file("capi_roundtrip.csv", csv_text);

    cn_matrix* m2 = nullptr;
    REQUIRE(cn_matrix_from_file("capi_roundtrip.csv", &m2) == CN_OK);
    char *fp1 = nullptr, *fp2 = nullptr;
    REQUIRE(cn_matrix_fingerprint(m, &fp1) == CN_OK);
    REQUIRE(cn_matrix_fingerprint(m2, &fp2) == CN_OK);
    CHECK(take(fp1) == take(fp2));
    cn_matrix_release(m2);

    char* json = nullptr;
    REQUIRE(cn_matrix_to_json(m, &json) == CN_OK);
    const std::string json_text = take(json);
    CHECK(json_text.find("\"mode\":\"row\"") != std::string::npos);
    write_file("capi_roundtrip.json", json_text);
    cn_matrix* m3 = nullptr;
    REQUIRE(cn_matrix_from_file("capi_roundtrip.json", &m3) == CN_OK);
    std::vector<double> entries3(16);
    REQUIRE(cn_matrix_entries(m3, entries3.data(), entries3.size()) == CN_OK);
    CHECK(entries3 == entries);
    cn_matrix_release(m3);

    cn_matrix_release(m);
}

TEST_CASE("matrix generation is byte-stable and rejects bad parameters") {
    cn_matrix *a = nullptr, *b = nullptr;
    REQUIRE(cn_matrix_generate(8, 5, 0.99, 0, &a) == CN_OK);
    REQUIRE(cn_matrix_generate(8, 5, 0.99, 0, &b) == CN_OK);
    char *ca = nullptr, *cb = nullptr;
    REQUIRE(cn_matrix_to_csv(a, &ca) == CN_OK);
    REQUIRE(cn_matrix_to_csv(b, &cb) == CN_OK);
    CHECK(take(ca) == take(cb));
    cn_matrix_release(a);
    cn_matrix_release(b);

    cn_matrix* bad = nullptr;
    CHECK(cn_matrix_generate(4, 1, 0.5, 0, &bad) == CN_ERR_DOMAIN);
    CHECK(bad == nullptr);
    CHECK(cn_matrix_from_file("does_not_exist_anywhere.csv", &bad) == CN_ERR_IO);
}

TEST_CASE("network handle exposes the eigenpair and steps states") {
    cn_delta* d = nullptr;
    cn_matrix* m = nullptr;
    cn_network* p = nullptr;
    REQUIRE(cn_delta_create(64, &d) == CN_OK);
    REQUIRE(cn_matrix_generate(8, 1, 0.875, 0, &m) == CN_OK);
    REQUIRE(cn_network_create(m, d, &p) == CN_OK);

    CHECK(cn_network_n(p) == 8);
    CHECK(cn_network_rho(p) == doctest::Approx(0.875).epsilon(1e-12));
    CHECK(cn_network_pi_residual(p) <= 1e-12);
    CHECK(cn_network_v_norm2(p) > 0.0);

    std::vector<double> v(8);
    REQUIRE(cn_network_eigenvector(p, v.data(), v.size()) == CN_OK);
    double sum = 0.0;
    for (double vi : v) sum += vi;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));

    std::vector<double> x(8);
    REQUIRE(cn_embed(p, 1.0, x.data(), x.size()) == CN_OK);
    CHECK(x == v);

    std::vector<double> y(8);
    REQUIRE(cn_network_step(p, x.data(), y.data()) == CN_OK);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(y[i] >= 0.0);
        CHECK(y[i] <= v[i]);
    }

    double t = 0.0, res = 0.0;
    REQUIRE(cn_project(p, y.data(), &t, &res) == CN_OK);
    CHECK(res <= 1e-12);
    CHECK(t == doctest::Approx(cn_delta_value(d) - 0.5).epsilon(1e-10));

    // Knock a coordinate off the ray: typed error code.
    std::vector<double> off = x;
    off[0] += 1e-3;
    CHECK(cn_project(p, off.data(), &t, &res) == CN_ERR_NOT_ON_LINE);

    double dr = 0.0;
    REQUIRE(cn_diagram_residual(p, 0.37, &dr) == CN_OK);
    CHECK(dr <= 1e-12);

    double gt = 0.0;
    REQUIRE(cn_g_tilde(d, cn_delta_theta(d), &gt) == CN_OK);
    CHECK(gt == 0.0);
    REQUIRE(cn_g(d, 1.0, &gt) == CN_OK);
    CHECK(gt == cn_delta_value(d) - 0.5);
    CHECK(cn_g(d, 1.5, &gt) == CN_ERR_DOMAIN);

    REQUIRE(cn_simulate_to_file(p, x.data(), 10, 1, "capi_orbit.csv") == CN_OK);
    std::ifstream f("capi_orbit.csv");
    std::string header;
    std::getline(f, header);
    CHECK(header == "k,x_1,x_2,x_3,x_4,x_5,x_6,x_7,x_8");

    cn_network_release(p);
    cn_matrix_release(m);
    cn_delta_release(d);
}

TEST_CASE("scalar orbit, attractor, and probe entry points") {
    cn_delta* d = nullptr;
    REQUIRE(cn_delta_create(64, &d) == CN_OK);

    REQUIRE(cn_scalar_orbit_to_file(d, 1.0, 50, 1, "capi_scalar.csv") == CN_OK);
    std::ifstream f("capi_scalar.csv");
    std::string header;
    std::getline(f, header);
    CHECK(header == "k,t,branch");

    char* itin = nullptr;
    REQUIRE(cn_scalar_itinerary(d, 1.0, 10, 1, &itin) == CN_OK);
    const std::string word = take(itin);
    CHECK(word.size() == 11);
    CHECK(word.find_first_not_of("01") == std::string::npos);

    double alpha = 0.0, rt = 0.0;
    REQUIRE(cn_rotation_alpha(&alpha) == CN_OK);
    CHECK(alpha == doctest::Approx(0.3819660112501051).epsilon(1e-15));
    REQUIRE(cn_rotation_step(0.0, &rt) == CN_OK);
    CHECK(rt == alpha);

    double freq = 0.0;
    REQUIRE(cn_branch_frequency(d, 1.0, 100000, &freq) == CN_OK);
    CHECK(std::fabs(freq - alpha) <= 1e-3);

    cn_attractor* a = nullptr;
    REQUIRE(cn_attractor_estimate(d, 0.0, 10000, 100000, 1e-14, &a) == CN_OK);
    const std::size_t size = cn_attractor_size(a);
    CHECK(size > 10);
    std::vector<double> pts(size);
    REQUIRE(cn_attractor_points(a, pts.data(), pts.size()) == CN_OK);
    REQUIRE(cn_attractor_to_file(a, "capi_attractor.txt") == CN_OK);

    cn_attractor* b = nullptr;
    REQUIRE(cn_attractor_estimate(d, 0.5, 10000, 100000, 1e-14, &b) == CN_OK);
    double h = 1.0;
    REQUIRE(cn_attractor_hausdorff(a, b, &h) == CN_OK);
    CHECK(h <= 1e-12);
    std::uint64_t boxes = 0;
    REQUIRE(cn_attractor_box_count(a, 0.015625, &boxes) == CN_OK);
    CHECK(boxes > 0);

    int pass = 0;
    char* omega = nullptr;
    REQUIRE(cn_omega_check_json(d, a, pts[0], 10000, 50000, 1e-3, &pass, &omega) == CN_OK);
    CHECK(pass == 1);
    CHECK(take(omega).find("\"pass\":true") != std::string::npos);

    char* probe = nullptr;
    REQUIRE(cn_sensitivity_probe_json(d, 0.7098034428, 1e-6, 1000, std::nan(""), &probe) ==
            CN_OK);
    const std::string pj = take(probe);
    CHECK(pj.find("\"separation\":") != std::string::npos);
    CHECK(pj.find("\"eta_network\":null") != std::string::npos);

    CHECK(cn_sensitivity_probe_json(d, 1.0, 1e-6, 1000, std::nan(""), &probe) ==
          CN_ERR_DOMAIN);
    CHECK(cn_sensitivity_probe_json(d, 0.1, 1e-6, 0, std::nan(""), &probe) ==
          CN_ERR_CAPTURE);

    cn_attractor_release(b);
    cn_attractor_release(a);
    cn_delta_release(d);
}

TEST_CASE("aggregate check reports pass for generated instances") {
    cn_delta* d = nullptr;
    cn_matrix* m = nullptr;
    REQUIRE(cn_delta_create(64, &d) == CN_OK);
    REQUIRE(cn_matrix_generate(16, 2, 0.76, 0, &m) == CN_OK);

    int pass = 0;
    char* json = nullptr;
    REQUIRE(cn_check_json(m, d, 2000, 2000, 2000, 1, &pass, &json) == CN_OK);
    CHECK(pass == 1);
    const std::string s = take(json);
    CHECK(s.find("\"validation\":") != std::string::npos);
    CHECK(s.find("\"spectral_bounds\":") != std::string::npos);
    CHECK(s.find("\"box_invariance\":") != std::string::npos);
    CHECK(s.find("\"line_invariance\":") != std::string::npos);
    CHECK(s.find("\"conjugacy\":") != std::string::npos);
    cn_matrix_release(m);

    // An invalid matrix yields a failing report, not an error.
    write_file("capi_bad.csv", "0.5,0.4\n0.3,0.9\n");
    cn_matrix* bad = nullptr;
    REQUIRE(cn_matrix_from_file("capi_bad.csv", &bad) == CN_OK);
    REQUIRE(cn_check_json(bad, d, 100, 100, 100, 1, &pass, &json) == CN_OK);
    CHECK(pass == 0);
    CHECK(take(json).find("\"pass\":false") != std::string::npos);
    cn_matrix_release(bad);
    cn_delta_release(d);
}
