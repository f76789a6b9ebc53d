#include "cantornet.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "cantornet/chaos.hpp"
#include "cantornet/checks.hpp"
#include "cantornet/engine.hpp"
#include "cantornet/errors.hpp"
#include "cantornet/fibonacci.hpp"
#include "cantornet/io.hpp"
#include "cantornet/line_map.hpp"
#include "cantornet/network.hpp"
#include "cantornet/spectral.hpp"

using namespace cantornet;

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Maps C++ exceptions onto status codes; every API body runs inside this.
template <typename F>
cn_status guarded(F&& f) {
    try {
        return f();
    } catch (const domain_error& e) {
        set_error(e.what());
        return CN_ERR_DOMAIN;
    } catch (const validation_error& e) {
        set_error(e.what());
        return CN_ERR_VALIDATION;
    } catch (const not_on_line_error& e) {
        set_error(e.what());
        return CN_ERR_NOT_ON_LINE;
    } catch (const capture_error& e) {
        set_error(e.what());
        return CN_ERR_CAPTURE;
    } catch (const io_error& e) {
        set_error(e.what());
        return CN_ERR_IO;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return CN_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return CN_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return CN_ERR_INTERNAL;
    }
}

struct DeltaHandle { DeltaParams dp; };
struct MatrixHandle { Matrix m; };
struct NetworkHandle { NetworkParams p; };
struct AttractorHandle { AttractorApprox a; };

DeltaHandle* unwrap(cn_delta* h) { return reinterpret_cast<DeltaHandle*>(h); }
const DeltaHandle* unwrap(const cn_delta* h) { return reinterpret_cast<const DeltaHandle*>(h); }
MatrixHandle* unwrap(cn_matrix* h) { return reinterpret_cast<MatrixHandle*>(h); }
const MatrixHandle* unwrap(const cn_matrix* h) { return reinterpret_cast<const MatrixHandle*>(h); }
NetworkHandle* unwrap(cn_network* h) { return reinterpret_cast<NetworkHandle*>(h); }
const NetworkHandle* unwrap(const cn_network* h) { return reinterpret_cast<const NetworkHandle*>(h); }
AttractorHandle* unwrap(cn_attractor* h) { return reinterpret_cast<AttractorHandle*>(h); }
const AttractorHandle* unwrap(const cn_attractor* h) { return reinterpret_cast<const AttractorHandle*>(h); }

cn_status require(bool cond, const char* msg) {
    if (cond) return CN_OK;
    set_error(msg);
    return CN_ERR_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char* cn_version(void) { return kVersion; }

const char* cn_last_error(void) { return g_last_error.c_str(); }

void cn_string_free(char* s) { std::free(s); }

/* ---------------- delta ---------------- */

cn_status cn_delta_create(unsigned K, cn_delta** out) {
    if (cn_status st = require(out != nullptr, "cn_delta_create: out is null"); st != CN_OK) return st;
    *out = nullptr;
    return guarded([&] {
        auto* h = new DeltaHandle{compute_delta(K)};
        *out = reinterpret_cast<cn_delta*>(h);
        return CN_OK;
    });
}

void cn_delta_release(cn_delta* d) { delete unwrap(d); }

unsigned cn_delta_K(const cn_delta* d) { return d ? unwrap(d)->dp.K : 0; }
double cn_delta_value(const cn_delta* d) { return d ? unwrap(d)->dp.delta : 0.0; }
double cn_delta_theta(const cn_delta* d) { return d ? unwrap(d)->dp.theta : 0.0; }
double cn_delta_tail_bound(const cn_delta* d) { return d ? unwrap(d)->dp.tail_bound : 0.0; }

cn_status cn_delta_to_json(const cn_delta* d, char** out) {
    if (cn_status st = require(d && out, "cn_delta_to_json: null argument"); st != CN_OK) return st;
    return guarded([&] {
        *out = dup_string(delta_to_json(unwrap(d)->dp));
        return *out ? CN_OK : CN_ERR_INTERNAL;
    });
}

cn_status cn_fib_digit(uint64_t i, uint32_t* out) {
    if (cn_status st = require(out != nullptr, "cn_fib_digit: out is null"); st != CN_OK) return st;
    return guarded([&] {
        *out = fib_digit(i);
        return CN_OK;
    });
}

/* ---------------- matrix ---------------- */

cn_status cn_matrix_generate(size_t n, uint64_t seed, double sum_target,
                             int column_mode, cn_matrix** out) {
    if (cn_status st = require(out != nullptr, "cn_matrix_generate: out is null"); st != CN_OK) return st;
    *out = nullptr;
    return guarded([&] {
        auto* h = new MatrixHandle{
            generate_matrix(n, seed, sum_target, column_mode ? SumMode::column : SumMode::row)};
        *out = reinterpret_cast<cn_matrix*>(h);
        return CN_OK;
    });
}

cn_status cn_matrix_from_file(const char* path, cn_matrix** out) {
    if (cn_status st = require(path && out, "cn_matrix_from_file: null argument"); st != CN_OK) return st;
    *out = nullptr;
    return guarded([&] {
        auto* h = new MatrixHandle{matrix_from_file(path)};
        *out = reinterpret_cast<cn_matrix*>(h);
        return CN_OK;
    });
}

void cn_matrix_release(cn_matrix* m) { delete unwrap(m); }

size_t cn_matrix_n(const cn_matrix* m) { return m ? unwrap(m)->m.n : 0; }

int cn_matrix_column_mode(const cn_matrix* m) {
    return m && unwrap(m)->m.mode == SumMode::column ? 1 : 0;
}

cn_status cn_matrix_entries(const cn_matrix* m, double* buf, size_t buflen) {
    if (cn_status st = require(m && buf, "cn_matrix_entries: null argument"); st != CN_OK) return st;
    const Matrix& mm = unwrap(m)->m;
    if (cn_status st = require(buflen >= mm.a.size(), "cn_matrix_entries: buffer too small"); st != CN_OK)
        return st;
    std::memcpy(buf, mm.a.data(), mm.a.size() * sizeof(double));
    return CN_OK;
}

cn_status cn_matrix_validate(const cn_matrix* m, int* ok, char** report_json) {
    if (cn_status st = require(m && ok, "cn_matrix_validate: null argument"); st != CN_OK) return st;
    return guarded([&] {
        const ValidationReport r = validate(unwrap(m)->m);
        *ok = r.ok() ? 1 : 0;
        if (report_json) {
            JsonWriter w;
            w.begin();
            w.key("positive").value(r.positive);
            w.key("sums_in_range").value(r.sums_in_range);
            w.key("min_entry").value(r.min_entry);
            w.key("min_sum").value(r.min_sum);
            w.key("max_sum").value(r.max_sum);
            w.key("pass").value(r.ok());
            w.end();
            *report_json = dup_string(w.str());
            if (!*report_json) return CN_ERR_INTERNAL;
        }
        return CN_OK;
    });
}

cn_status cn_matrix_to_csv(const cn_matrix* m, char** out) {
    if (cn_status st = require(m && out, "cn_matrix_to_csv: null argument"); st != CN_OK) return st;
    return guarded([&] {
        *out = dup_string(matrix_to_csv(unwrap(m)->m));
        return *out ? CN_OK : CN_ERR_INTERNAL;
    });
}

cn_status cn_matrix_to_json(const cn_matrix* m, char** out) {
    if (cn_status st = require(m && out, "cn_matrix_to_json: null argument"); st != CN_OK) return st;
    return guarded([&] {
        *out = dup_string(matrix_to_json(unwrap(m)->m));
        return *out ? CN_OK : CN_ERR_INTERNAL;
    });
}

cn_status cn_matrix_fingerprint(const cn_matrix* m, char** out) {
    if (cn_status st = require(m && out, "cn_matrix_fingerprint: null argument"); st != CN_OK) return st;
    return guarded([&] {
        *out = dup_string(matrix_fingerprint(unwrap(m)->m));
        return *out ? CN_OK : CN_ERR_INTERNAL;
    });
}

/* ---------------- network ---------------- */

cn_status cn_network_create(const cn_matrix* m, const cn_delta* d, cn_network** out) {
    if (cn_status st = require(m && d && out, "cn_network_create: null argument"); st != CN_OK) return st;
    *out = nullptr;
    return guarded([&] {
        auto* h = new NetworkHandle{make_network(unwrap(m)->m, unwrap(d)->dp)};
        *out = reinterpret_cast<cn_network*>(h);
        return CN_OK;
    });
}

void cn_network_release(cn_network* p) { delete unwrap(p); }

size_t cn_network_n(const cn_network* p) { return p ? unwrap(p)->p.n() : 0; }
double cn_network_rho(const cn_network* p) { return p ? unwrap(p)->p.rho : 0.0; }
double cn_network_pi_residual(const cn_network* p) { return p ? unwrap(p)->p.pi_residual : 0.0; }
double cn_network_v_norm2(const cn_network* p) { return p ? unwrap(p)->p.v_norm2 : 0.0; }

cn_status cn_network_eigenvector(const cn_network* p, double* buf, size_t buflen) {
    if (cn_status st = require(p && buf, "cn_network_eigenvector: null argument"); st != CN_OK) return st;
    const NetworkParams& np = unwrap(p)->p;
    if (cn_status st = require(buflen >= np.v.size(), "cn_network_eigenvector: buffer too small");
        st != CN_OK)
        return st;
    std::memcpy(buf, np.v.data(), np.v.size() * sizeof(double));
    return CN_OK;
}

cn_status cn_network_step(const cn_network* p, const double* x, double* y) {
    if (cn_status st = require(p && x && y, "cn_network_step: null argument"); st != CN_OK) return st;
    return guarded([&] {
        const NetworkParams& np = unwrap(p)->p;
        std::vector<double> xin(x, x + np.n());
        const std::vector<double> out = step(np, xin);
        std::memcpy(y, out.data(), out.size() * sizeof(double));
        return CN_OK;
    });
}

cn_status cn_simulate_to_file(const cn_network* p, const double* x0, uint64_t N,
                              uint64_t record_every, const char* path) {
    if (cn_status st = require(p && x0 && path, "cn_simulate_to_file: null argument"); st != CN_OK)
        return st;
    return guarded([&] {
        const NetworkParams& np = unwrap(p)->p;
        std::vector<double> start(x0, x0 + np.n());
        const Orbit o = simulate(np, start, N, record_every);
        write_text_file(path, orbit_to_csv(o, np.n()));
        return CN_OK;
    });
}

/* ---------------- invariant-ray reduction ---------------- */

cn_status cn_g_tilde(const cn_delta* d, double t, double* out) {
    if (cn_status st = require(d && out, "cn_g_tilde: null argument"); st != CN_OK) return st;
    return guarded([&] {
        *out = g_tilde(t, unwrap(d)->dp);
        return CN_OK;
    });
}

cn_status cn_g(const cn_delta* d, double t, double* out) {
    if (cn_status st = require(d && out, "cn_g: null argument"); st != CN_OK) return st;
    return guarded([&] {
        *out = g(t, unwrap(d)->dp);
        return CN_OK;
    });
}

cn_status cn_embed(const cn_network* p, double t, double* buf, size_t buflen) {
    if (cn_status st = require(p && buf, "cn_embed: null argument"); st != CN_OK) return st;
    const NetworkParams& np = unwrap(p)->p;
    if (cn_status st = require(buflen >= np.n(), "cn_embed: buffer too small"); st != CN_OK) return st;
    return guarded([&] {
        const std::vector<double> x = embed(t, np);
        std::memcpy(buf, x.data(), x.size() * sizeof(double));
        return CN_OK;
    });
}

cn_status cn_project(const cn_network* p, const double* x, double* t, double* residual) {
    if (cn_status st = require(p && x && t, "cn_project: null argument"); st != CN_OK) return st;
    return guarded([&] {
        const NetworkParams& np = unwrap(p)->p;
        std::vector<double> xin(x, x + np.n());
        const ProjectResult r = project(xin, np);
        *t = r.t;
        if (residual) *residual = r.off_ray_residual;
        return CN_OK;
    });
}

cn_status cn_diagram_residual(const cn_network* p, double t, double* out) {
    if (cn_status st = require(p && out, "cn_diagram_residual: null argument"); st != CN_OK) return st;
    return guarded([&] {
        *out = diagram_residual(t, unwrap(p)->p);
        return CN_OK;
    });
}

cn_status cn_scalar_orbit_to_file(const cn_delta* d, double t0, uint64_t N,
                                  int extended, const char* path) {
    if (cn_status st = require(d && path, "cn_scalar_orbit_to_file: null argument"); st != CN_OK)
        return st;
    return guarded([&] {
        const ScalarOrbit o = extended ? true_orbit(t0, N, unwrap(d)->dp)
                                       : g_orbit(t0, N, unwrap(d)->dp);
        write_text_file(path, scalar_orbit_to_csv(o));
        return CN_OK;
    });
}

cn_status cn_scalar_itinerary(const cn_delta* d, double t0, uint64_t N,
                              int extended, char** out) {
    if (cn_status st = require(d && out, "cn_scalar_itinerary: null argument"); st != CN_OK)
        return st;
    return guarded([&] {
        const ScalarOrbit o = extended ? true_orbit(t0, N, unwrap(d)->dp)
                                       : g_orbit(t0, N, unwrap(d)->dp);
        *out = dup_string(itinerary_string(o));
        return *out ? CN_OK : CN_ERR_INTERNAL;
    });
}

/* ---------------- chaos diagnostics ---------------- */

cn_status cn_attractor_estimate(const cn_delta* d, double t0, uint64_t burn_in,
                                uint64_t samples, double resolution, cn_attractor** out) {
    if (cn_status st = require(d && out, "cn_attractor_estimate: null argument"); st != CN_OK) return st;
    *out = nullptr;
    return guarded([&] {
        auto* h = new AttractorHandle{
            attractor_estimate(t0, burn_in, samples, unwrap(d)->dp, resolution)};
        *out = reinterpret_cast<cn_attractor*>(h);
        return CN_OK;
    });
}

void cn_attractor_release(cn_attractor* a) { delete unwrap(a); }

size_t cn_attractor_size(const cn_attractor* a) { return a ? unwrap(a)->a.points.size() : 0; }

cn_status cn_attractor_points(const cn_attractor* a, double* buf, size_t buflen) {
    if (cn_status st = require(a && buf, "cn_attractor_points: null argument"); st != CN_OK) return st;
    const auto& pts = unwrap(a)->a.points;
    if (cn_status st = require(buflen >= pts.size(), "cn_attractor_points: buffer too small");
        st != CN_OK)
        return st;
    std::memcpy(buf, pts.data(), pts.size() * sizeof(double));
    return CN_OK;
}

cn_status cn_attractor_to_file(const cn_attractor* a, const char* path) {
    if (cn_status st = require(a && path, "cn_attractor_to_file: null argument"); st != CN_OK) return st;
    return guarded([&] {
        write_text_file(path, attractor_to_text(unwrap(a)->a));
        return CN_OK;
    });
}

cn_status cn_attractor_hausdorff(const cn_attractor* a, const cn_attractor* b, double* out) {
    if (cn_status st = require(a && b && out, "cn_attractor_hausdorff: null argument"); st != CN_OK)
        return st;
    return guarded([&] {
        *out = hausdorff_distance(unwrap(a)->a.points, unwrap(b)->a.points);
        return CN_OK;
    });
}

cn_status cn_attractor_box_count(const cn_attractor* a, double scale, uint64_t* out) {
    if (cn_status st = require(a && out, "cn_attractor_box_count: null argument"); st != CN_OK) return st;
    return guarded([&] {
        *out = box_count(unwrap(a)->a, scale);
        return CN_OK;
    });
}

cn_status cn_rotation_alpha(double* out) {
    if (cn_status st = require(out != nullptr, "cn_rotation_alpha: out is null"); st != CN_OK) return st;
    *out = make_rotation().alpha;
    return CN_OK;
}

cn_status cn_rotation_step(double t, double* out) {
    if (cn_status st = require(out != nullptr, "cn_rotation_step: out is null"); st != CN_OK) return st;
    return guarded([&] {
        *out = rotation_step(t, make_rotation());
        return CN_OK;
    });
}

cn_status cn_branch_frequency(const cn_delta* d, double t0, uint64_t N, double* out) {
    if (cn_status st = require(d && out, "cn_branch_frequency: null argument"); st != CN_OK) return st;
    return guarded([&] {
        ExactScalarIterator it(t0, unwrap(d)->dp);
        uint64_t right = 0;
        for (uint64_t k = 0; k < N; ++k) {
            if (it.right()) ++right;
            it.advance();
        }
        *out = N ? static_cast<double>(right) / static_cast<double>(N) : 0.0;
        return CN_OK;
    });
}

cn_status cn_omega_check_json(const cn_delta* d, const cn_attractor* a, double t0,
                              uint64_t tail_start, uint64_t tail_len, double tol,
                              int* pass, char** json) {
    if (cn_status st = require(d && a, "cn_omega_check_json: null argument"); st != CN_OK) return st;
    return guarded([&] {
        const OmegaReport r =
            omega_limit_check(t0, unwrap(a)->a, tail_start, tail_len, tol, unwrap(d)->dp);
        if (pass) *pass = r.pass ? 1 : 0;
        if (json) {
            *json = dup_string(omega_report_to_json(r));
            if (!*json) return CN_ERR_INTERNAL;
        }
        return CN_OK;
    });
}

cn_status cn_sensitivity_probe_json(const cn_delta* d, double t0, double epsilon,
                                    uint64_t max_k, double v_norm2, char** json) {
    if (cn_status st = require(d && json, "cn_sensitivity_probe_json: null argument"); st != CN_OK)
        return st;
    return guarded([&] {
        const SensitivityReport r = sensitivity_probe(t0, epsilon, max_k, unwrap(d)->dp, v_norm2);
        *json = dup_string(sensitivity_report_to_json(r));
        return *json ? CN_OK : CN_ERR_INTERNAL;
    });
}

/* ---------------- aggregate verification ---------------- */

cn_status cn_check_json(const cn_matrix* m, const cn_delta* d,
                        uint64_t box_samples, uint64_t orbit_steps,
                        uint64_t sweep_count, uint64_t rng_seed,
                        int* pass, char** json) {
    if (cn_status st = require(m && d, "cn_check_json: null argument"); st != CN_OK) return st;
    return guarded([&] {
        CheckOptions opt;
        opt.box_samples = box_samples;
        opt.orbit_steps = orbit_steps;
        opt.sweep_count = sweep_count;
        opt.rng_seed = rng_seed;
        const CheckReport r = run_checks(unwrap(m)->m, unwrap(d)->dp, opt);
        if (pass) *pass = r.all_pass() ? 1 : 0;
        if (json) {
            *json = dup_string(check_report_to_json(r));
            if (!*json) return CN_ERR_INTERNAL;
        }
        return CN_OK;
    });
}

} // extern "C"
