// cantornet CLI: generation, verification, simulation, and chaos
// diagnostics for a piecewise-affine recurrent network with an invariant
// ray. Talks to the core exclusively through the C API in cantornet.h.
//
// Every run prints a single JSON document {"meta": ..., "result": ...} to
// stdout; commands that produce data files also write the same document to
// a .meta.json sidecar. Timestamps live only in meta and are suppressed by
// --no-timestamp, so reruns with identical flags are byte-identical.
//
// Exit codes: 0 success, 1 a verification or probe reported failure,
// 2 usage/input error.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <memory>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cantornet.h"

namespace {

struct CliError {
    int code; // 1 = check failure, 2 = usage/input error
    std::string message;
};

int exit_code_for(cn_status st) {
    switch (st) {
        case CN_OK:
            return 0;
        case CN_ERR_INVALID_ARGUMENT:
        case CN_ERR_DOMAIN:
        case CN_ERR_IO:
            return 2;
        default:
            return 1;
    }
}

void require_ok(cn_status st, const std::string& context) {
    if (st == CN_OK) return;
    throw CliError{exit_code_for(st), context + ": " + cn_last_error()};
}

// Owns a char* returned by the C API.
struct ApiString {
    char* p = nullptr;
    ~ApiString() { cn_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

template <typename T, void (*Release)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    explicit Handle(T* q) : p(q) {}
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    Handle(Handle&& o) noexcept : p(o.p) { o.p = nullptr; }
    Handle& operator=(Handle&& o) noexcept {
        if (this != &o) {
            Release(p);
            p = o.p;
            o.p = nullptr;
        }
        return *this;
    }
    ~Handle() { Release(p); }
    T* get() const { return p; }
    T** out() { return &p; }
};

using DeltaHandle = Handle<cn_delta, cn_delta_release>;
using MatrixHandle = Handle<cn_matrix, cn_matrix_release>;
using NetworkHandle = Handle<cn_network, cn_network_release>;
using AttractorHandle = Handle<cn_attractor, cn_attractor_release>;

/* ---------------- JSON document assembly (presentation only) ---------- */

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string jesc(const std::string& s) {
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

std::string js(const std::string& s) { return "\"" + jesc(s) + "\""; }
std::string jd(double x) { return std::isnan(x) ? "null" : fmt17(x); }
std::string ju(std::uint64_t u) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%" PRIu64, u);
    return buf;
}
std::string jb(bool b) { return b ? "true" : "false"; }

// Ordered key -> pre-serialized JSON value.
using Fields = std::vector<std::pair<std::string, std::string>>;

std::string jobject(const Fields& fields) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : fields) {
        if (!first) out += ',';
        first = false;
        out += js(k) + ":" + v;
    }
    out += '}';
    return out;
}

std::string jarray(const std::vector<std::string>& values) {
    std::string out = "[";
    bool first = true;
    for (const auto& v : values) {
        if (!first) out += ',';
        first = false;
        out += v;
    }
    out += ']';
    return out;
}

std::string iso_timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct GlobalOptions {
    bool no_timestamp = false;
    unsigned jobs = 1;
};

std::string make_document(const GlobalOptions& g, const std::string& command,
                          const Fields& parameters, const std::string& fingerprint,
                          const std::string& result_raw) {
    Fields meta;
    meta.emplace_back("version", js(cn_version()));
    meta.emplace_back("command", js(command));
    meta.emplace_back("parameters", jobject(parameters));
    if (!fingerprint.empty()) meta.emplace_back("fingerprint", js(fingerprint));
    if (!g.no_timestamp) meta.emplace_back("timestamp", js(iso_timestamp_utc()));
    Fields doc;
    doc.emplace_back("meta", jobject(meta));
    doc.emplace_back("result", result_raw);
    return jobject(doc);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CliError{2, "cannot open '" + path + "' for writing"};
    f << content;
    if (!f) throw CliError{2, "failed while writing '" + path + "'"};
}

void emit(const GlobalOptions& g, const std::string& command, const Fields& parameters,
          const std::string& fingerprint, const std::string& result_raw,
          const std::string& doc_path) {
    const std::string doc = make_document(g, command, parameters, fingerprint, result_raw);
    if (!doc_path.empty()) write_file(doc_path, doc + "\n");
    std::fputs((doc + "\n").c_str(), stdout);
}

/* ---------------- shared option bundles ---------------- */

struct GenOptions {
    std::size_t n = 0;
    std::uint64_t seed = 1;
    double sum = 0.875;
    std::string mode = "row";
};

struct MatrixSource {
    std::string weights; // path, or empty to generate
    GenOptions gen;
};

MatrixHandle load_matrix(const MatrixSource& src) {
    MatrixHandle m;
    if (!src.weights.empty()) {
        require_ok(cn_matrix_from_file(src.weights.c_str(), m.out()), "reading weights");
    } else {
        if (src.gen.n == 0)
            throw CliError{2, "either --weights or --n is required"};
        require_ok(cn_matrix_generate(src.gen.n, src.gen.seed, src.gen.sum,
                                      src.gen.mode == "column" ? 1 : 0, m.out()),
                   "generating matrix");
    }
    return m;
}

std::string fingerprint_of(const MatrixHandle& m) {
    ApiString fp;
    require_ok(cn_matrix_fingerprint(m.get(), &fp.p), "fingerprinting matrix");
    return fp.str();
}

void add_matrix_source(CLI::App* cmd, MatrixSource& src, bool weights_only) {
    cmd->add_option("--weights", src.weights, "Weight-matrix file (.csv or .json)");
    if (!weights_only) {
        cmd->add_option("--n", src.gen.n, "Matrix size for inline generation");
        cmd->add_option("--seed", src.gen.seed, "Generation seed")->capture_default_str();
        cmd->add_option("--sum", src.gen.sum, "Row/column sum target, in (3/4, 1)")
            ->capture_default_str();
        cmd->add_option("--mode", src.gen.mode, "Sum constraint: row or column")
            ->check(CLI::IsMember({"row", "column"}))
            ->capture_default_str();
    }
}

void matrix_source_params(const MatrixSource& src, Fields& p) {
    if (!src.weights.empty()) {
        p.emplace_back("weights", js(src.weights));
    } else {
        p.emplace_back("n", ju(src.gen.n));
        p.emplace_back("seed", ju(src.gen.seed));
        p.emplace_back("sum", jd(src.gen.sum));
        p.emplace_back("mode", js(src.gen.mode));
    }
}

/* ---------------- subcommands ---------------- */

int cmd_gen(const GlobalOptions& g, const GenOptions& opt, const std::string& out_prefix) {
    MatrixHandle m;
    require_ok(cn_matrix_generate(opt.n, opt.seed, opt.sum, opt.mode == "column" ? 1 : 0,
                                  m.out()),
               "generating matrix");
    ApiString csv, json;
    require_ok(cn_matrix_to_csv(m.get(), &csv.p), "serializing matrix");
    require_ok(cn_matrix_to_json(m.get(), &json.p), "serializing matrix");
    const std::string csv_path = out_prefix + ".csv";
    const std::string json_path = out_prefix + ".json";
    write_file(csv_path, csv.str());
    write_file(json_path, json.str());

    Fields params;
    params.emplace_back("n", ju(opt.n));
    params.emplace_back("seed", ju(opt.seed));
    params.emplace_back("sum", jd(opt.sum));
    params.emplace_back("mode", js(opt.mode));
    params.emplace_back("out", js(out_prefix));
    const std::string fp = fingerprint_of(m);
    Fields result;
    result.emplace_back("files", jarray({js(csv_path), js(json_path)}));
    result.emplace_back("fingerprint", js(fp));
    emit(g, "gen", params, fp, jobject(result), out_prefix + ".meta.json");
    return 0;
}

int cmd_check(const GlobalOptions& g, const MatrixSource& src, unsigned K,
              std::uint64_t box_samples, std::uint64_t orbit_steps,
              std::uint64_t sweeps, std::uint64_t rng_seed, const std::string& out) {
    MatrixHandle m = load_matrix(src);
    DeltaHandle d;
    require_ok(cn_delta_create(K, d.out()), "computing threshold parameters");
    int pass = 0;
    ApiString report;
    require_ok(cn_check_json(m.get(), d.get(), box_samples, orbit_steps, sweeps, rng_seed,
                             &pass, &report.p),
               "running checks");

    Fields params;
    matrix_source_params(src, params);
    params.emplace_back("K", ju(K));
    params.emplace_back("box_samples", ju(box_samples));
    params.emplace_back("orbit_steps", ju(orbit_steps));
    params.emplace_back("sweeps", ju(sweeps));
    params.emplace_back("rng_seed", ju(rng_seed));
    emit(g, "check", params, fingerprint_of(m), report.str(), out);
    return pass ? 0 : 1;
}

int cmd_delta(const GlobalOptions& g, unsigned K, std::uint64_t digits,
              const std::string& out) {
    DeltaHandle d;
    require_ok(cn_delta_create(K, d.out()), "computing threshold parameters");

    Fields params;
    params.emplace_back("K", ju(K));
    if (digits > 0) params.emplace_back("digits", ju(digits));
    Fields result;
    result.emplace_back("K", ju(cn_delta_K(d.get())));
    result.emplace_back("delta", jd(cn_delta_value(d.get())));
    result.emplace_back("theta", jd(cn_delta_theta(d.get())));
    result.emplace_back("tail_bound", jd(cn_delta_tail_bound(d.get())));
    if (digits > 0) {
        std::string word;
        word.reserve(digits);
        for (std::uint64_t i = 0; i < digits; ++i) {
            std::uint32_t bit = 0;
            require_ok(cn_fib_digit(i, &bit), "computing digits");
            word += bit ? '1' : '0';
        }
        result.emplace_back("word_prefix", js(word));
    }
    emit(g, "delta", params, "", jobject(result), out);
    return 0;
}

int cmd_simulate(const GlobalOptions& g, const MatrixSource& src, unsigned K, double t0,
                 std::uint64_t steps, std::uint64_t record_every, const std::string& out) {
    MatrixHandle m = load_matrix(src);
    DeltaHandle d;
    require_ok(cn_delta_create(K, d.out()), "computing threshold parameters");
    NetworkHandle net;
    require_ok(cn_network_create(m.get(), d.get(), net.out()), "building network");
    const std::size_t n = cn_network_n(net.get());
    std::vector<double> x0(n);
    require_ok(cn_embed(net.get(), t0, x0.data(), x0.size()), "embedding start state");
    require_ok(cn_simulate_to_file(net.get(), x0.data(), steps, record_every, out.c_str()),
               "simulating");

    Fields params;
    matrix_source_params(src, params);
    params.emplace_back("K", ju(K));
    params.emplace_back("t0", jd(t0));
    params.emplace_back("steps", ju(steps));
    params.emplace_back("record_every", ju(record_every));
    params.emplace_back("out", js(out));
    Fields result;
    result.emplace_back("file", js(out));
    result.emplace_back("n", ju(n));
    result.emplace_back("rho", jd(cn_network_rho(net.get())));
    result.emplace_back("v_norm2", jd(cn_network_v_norm2(net.get())));
    result.emplace_back("fingerprint", js(fingerprint_of(m)));
    emit(g, "simulate", params, fingerprint_of(m), jobject(result), out + ".meta.json");
    return 0;
}

int cmd_line_orbit(const GlobalOptions& g, unsigned K, double t0, std::uint64_t steps,
                   bool extended, const std::string& out, const std::string& itinerary) {
    DeltaHandle d;
    require_ok(cn_delta_create(K, d.out()), "computing threshold parameters");
    require_ok(cn_scalar_orbit_to_file(d.get(), t0, steps, extended ? 1 : 0, out.c_str()),
               "iterating scalar orbit");
    if (!itinerary.empty()) {
        ApiString word;
        require_ok(cn_scalar_itinerary(d.get(), t0, steps, extended ? 1 : 0, &word.p),
                   "extracting itinerary");
        write_file(itinerary, word.str() + "\n");
    }

    Fields params;
    params.emplace_back("K", ju(K));
    params.emplace_back("t0", jd(t0));
    params.emplace_back("steps", ju(steps));
    params.emplace_back("extended", jb(extended));
    params.emplace_back("out", js(out));
    if (!itinerary.empty()) params.emplace_back("itinerary", js(itinerary));
    Fields result;
    result.emplace_back("file", js(out));
    if (!itinerary.empty()) result.emplace_back("itinerary_file", js(itinerary));
    emit(g, "line-orbit", params, "", jobject(result), out + ".meta.json");
    return 0;
}

int cmd_attractor(const GlobalOptions& g, unsigned K, double t0, std::uint64_t burn,
                  std::uint64_t samples, double resolution, const std::string& out) {
    DeltaHandle d;
    require_ok(cn_delta_create(K, d.out()), "computing threshold parameters");
    AttractorHandle a;
    require_ok(cn_attractor_estimate(d.get(), t0, burn, samples, resolution, a.out()),
               "estimating attractor");
    require_ok(cn_attractor_to_file(a.get(), out.c_str()), "writing attractor");
    const std::size_t size = cn_attractor_size(a.get());
    std::vector<double> pts(size);
    if (size > 0)
        require_ok(cn_attractor_points(a.get(), pts.data(), pts.size()), "reading points");

    Fields params;
    params.emplace_back("K", ju(K));
    params.emplace_back("t0", jd(t0));
    params.emplace_back("burn_in", ju(burn));
    params.emplace_back("samples", ju(samples));
    params.emplace_back("resolution", jd(resolution));
    params.emplace_back("out", js(out));
    Fields result;
    result.emplace_back("file", js(out));
    result.emplace_back("size", ju(size));
    if (size > 0) {
        result.emplace_back("min", jd(pts.front()));
        result.emplace_back("max", jd(pts.back()));
    }
    emit(g, "attractor", params, "", jobject(result), out + ".meta.json");
    return 0;
}

struct ProbeSlot {
    cn_status status = CN_OK;
    std::string payload; // report JSON on success, error message otherwise
};

void run_probe_batch(const std::vector<double>& t0s, const cn_delta* d, double eps,
                     std::uint64_t max_k, double v_norm2, unsigned jobs,
                     std::vector<ProbeSlot>& slots) {
    slots.assign(t0s.size(), ProbeSlot{});
    auto worker = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            ApiString json;
            const cn_status st =
                cn_sensitivity_probe_json(d, t0s[i], eps, max_k, v_norm2, &json.p);
            slots[i].status = st;
            slots[i].payload = st == CN_OK ? json.str() : cn_last_error();
        }
    };
    const std::size_t count = t0s.size();
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, count));
    if (threads == 1) {
        worker(0, count);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = std::min<std::size_t>(t * chunk, count);
        const std::size_t hi = std::min<std::size_t>(lo + chunk, count);
        if (lo < hi) pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
}

int cmd_sensitivity(const GlobalOptions& g, unsigned K, double eps, std::uint64_t max_k,
                    bool have_t0, double t0, std::uint64_t from_attractor,
                    double seed_t, std::uint64_t burn, std::uint64_t samples,
                    double resolution, const std::string& weights, const std::string& out) {
    DeltaHandle d;
    require_ok(cn_delta_create(K, d.out()), "computing threshold parameters");

    double v_norm2 = std::nan("");
    MatrixHandle m;
    std::string fingerprint;
    if (!weights.empty()) {
        require_ok(cn_matrix_from_file(weights.c_str(), m.out()), "reading weights");
        NetworkHandle net;
        require_ok(cn_network_create(m.get(), d.get(), net.out()), "building network");
        v_norm2 = cn_network_v_norm2(net.get());
        fingerprint = fingerprint_of(m);
    }

    std::vector<std::string> reports;
    std::uint64_t skipped_domain = 0, failed_capture = 0;
    std::uint64_t requested = 0;

    if (have_t0) {
        requested = 1;
        ApiString json;
        require_ok(cn_sensitivity_probe_json(d.get(), t0, eps, max_k, v_norm2, &json.p),
                   "running probe");
        reports.push_back(json.str());
    } else {
        requested = from_attractor;
        AttractorHandle a;
        require_ok(cn_attractor_estimate(d.get(), seed_t, burn, samples, resolution, a.out()),
                   "estimating attractor");
        const std::size_t asize = cn_attractor_size(a.get());
        if (asize == 0) throw CliError{2, "attractor estimate is empty"};
        std::vector<double> pts(asize);
        require_ok(cn_attractor_points(a.get(), pts.data(), pts.size()), "reading points");

        // Probe points in attractor order, cycling with repetition; points
        // whose probe interval leaves [0,1] are skipped deterministically.
        std::size_t next = 0;
        while (reports.size() < requested) {
            const std::size_t want = requested - reports.size();
            std::vector<double> batch;
            batch.reserve(want);
            for (std::size_t i = 0; i < want; ++i) batch.push_back(pts[(next + i) % asize]);
            next = (next + want) % asize;

            std::vector<ProbeSlot> slots;
            run_probe_batch(batch, d.get(), eps, max_k, v_norm2, g.jobs, slots);

            bool any_success = false;
            for (const auto& slot : slots) {
                if (reports.size() >= requested) break;
                if (slot.status == CN_OK) {
                    reports.push_back(slot.payload);
                    any_success = true;
                } else if (slot.status == CN_ERR_DOMAIN) {
                    ++skipped_domain;
                } else if (slot.status == CN_ERR_CAPTURE) {
                    ++failed_capture;
                } else {
                    throw CliError{exit_code_for(slot.status), "probe failed: " + slot.payload};
                }
            }
            if (!any_success) {
                if (failed_capture > 0) break;
                throw CliError{2, "no usable attractor points for probing"};
            }
        }
    }

    Fields params;
    params.emplace_back("K", ju(K));
    params.emplace_back("eps", jd(eps));
    params.emplace_back("max_k", ju(max_k));
    if (have_t0) {
        params.emplace_back("t0", jd(t0));
    } else {
        params.emplace_back("from_attractor", ju(from_attractor));
        params.emplace_back("seed_t", jd(seed_t));
        params.emplace_back("burn_in", ju(burn));
        params.emplace_back("samples", ju(samples));
        params.emplace_back("resolution", jd(resolution));
    }
    if (!weights.empty()) params.emplace_back("weights", js(weights));
    Fields result;
    result.emplace_back("requested", ju(requested));
    result.emplace_back("completed", ju(reports.size()));
    result.emplace_back("skipped_domain", ju(skipped_domain));
    result.emplace_back("failed_capture", ju(failed_capture));
    result.emplace_back("v_norm2", jd(v_norm2));
    result.emplace_back("reports", jarray(reports));
    emit(g, "sensitivity", params, fingerprint, jobject(result), out);
    return failed_capture > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Piecewise-affine recurrent network laboratory: weight generation, "
                 "invariance verification, orbit simulation, and chaos diagnostics."};
    app.set_version_flag("--version", cn_version());
    app.set_config("--config", "", "Config file with key=value defaults (flags override)")
        ->envname("CANTORNET_CONFIG");
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_flag("--no-timestamp", g.no_timestamp,
                 "Omit timestamps from metadata (byte-identical reruns)");
    app.add_option("--jobs", g.jobs, "Worker threads for independent probes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a weight matrix (CSV + JSON)");
    gen->fallthrough();
    GenOptions gen_opt;
    std::string gen_out = "weights";
    gen->add_option("--n", gen_opt.n, "Matrix size")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_opt.seed, "Generation seed")->capture_default_str();
    gen->add_option("--sum", gen_opt.sum, "Row/column sum target, in (3/4, 1)")
        ->capture_default_str();
    gen->add_option("--mode", gen_opt.mode, "Sum constraint: row or column")
        ->check(CLI::IsMember({"row", "column"}))
        ->capture_default_str();
    gen->add_option("--out", gen_out, "Output path prefix")->capture_default_str();

    // check
    auto* chk = app.add_subcommand("check", "Verify structural and dynamical invariants");
    chk->fallthrough();
    MatrixSource chk_src;
    unsigned chk_K = 64;
    std::uint64_t chk_box = 10000, chk_orbit = 10000, chk_sweeps = 10000, chk_seed = 12345;
    std::string chk_out;
    add_matrix_source(chk, chk_src, false);
    chk->add_option("--K", chk_K, "Threshold truncation depth")->capture_default_str();
    chk->add_option("--box-samples", chk_box, "Random states for the codomain check")
        ->capture_default_str();
    chk->add_option("--orbit-steps", chk_orbit, "Orbit length for the invariance check")
        ->capture_default_str();
    chk->add_option("--sweeps", chk_sweeps, "Random draws for ray/conjugacy sweeps")
        ->capture_default_str();
    chk->add_option("--rng-seed", chk_seed, "Seed for the check sampler")
        ->capture_default_str();
    chk->add_option("--out", chk_out, "Also write the report document to this file");

    // delta
    auto* dlt = app.add_subcommand("delta", "Threshold parameters from the digit sequence");
    dlt->fallthrough();
    unsigned dlt_K = 64;
    std::uint64_t dlt_digits = 0;
    std::string dlt_out;
    dlt->add_option("--K", dlt_K, "Truncation depth, 1..64")->capture_default_str();
    dlt->add_option("--digits", dlt_digits, "Include this many digits of the word");
    dlt->add_option("--out", dlt_out, "Also write the document to this file");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Iterate the network map, write orbit CSV");
    sim->fallthrough();
    MatrixSource sim_src;
    unsigned sim_K = 64;
    double sim_t0 = 1.0;
    std::uint64_t sim_steps = 1000, sim_every = 1;
    std::string sim_out = "orbit.csv";
    add_matrix_source(sim, sim_src, false);
    sim->add_option("--K", sim_K, "Threshold truncation depth")->capture_default_str();
    sim->add_option("--t0", sim_t0, "Start state t0*v on the invariant ray")
        ->capture_default_str();
    sim->add_option("--steps", sim_steps, "Number of iterations")->capture_default_str();
    sim->add_option("--record-every", sim_every, "Record every this many steps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim->add_option("--out", sim_out, "Orbit CSV path")->capture_default_str();

    // line-orbit
    auto* lin = app.add_subcommand("line-orbit", "Iterate the scalar interval map");
    lin->fallthrough();
    unsigned lin_K = 64;
    double lin_t0 = 1.0;
    std::uint64_t lin_steps = 1000;
    bool lin_ext = false;
    std::string lin_out = "line_orbit.csv", lin_itin;
    lin->add_option("--K", lin_K, "Threshold truncation depth")->capture_default_str();
    lin->add_option("--t0", lin_t0, "Start point in [0,1]")->capture_default_str();
    lin->add_option("--steps", lin_steps, "Number of iterations")->capture_default_str();
    lin->add_flag("--extended", lin_ext,
                  "Iterate at 120 fractional bits with exact branch decisions");
    lin->add_option("--out", lin_out, "Orbit CSV path")->capture_default_str();
    lin->add_option("--itinerary", lin_itin, "Also write the 0/1 itinerary to this file");

    // attractor
    auto* att = app.add_subcommand("attractor", "Estimate the scalar attractor point set");
    att->fallthrough();
    unsigned att_K = 64;
    double att_t0 = 0.0, att_res = 1e-14;
    std::uint64_t att_burn = 10000, att_samples = 100000;
    std::string att_out = "attractor.txt";
    att->add_option("--K", att_K, "Threshold truncation depth")->capture_default_str();
    att->add_option("--t0", att_t0, "Seed point in [0,1]")->capture_default_str();
    att->add_option("--burn", att_burn, "Burn-in iterations")->capture_default_str();
    att->add_option("--samples", att_samples, "Samples collected after burn-in")
        ->capture_default_str();
    att->add_option("--resolution", att_res, "Merge points closer than this")
        ->capture_default_str();
    att->add_option("--out", att_out, "Attractor point file")->capture_default_str();

    // sensitivity
    auto* sen = app.add_subcommand("sensitivity", "Sensitive-dependence witness probes");
    sen->fallthrough();
    unsigned sen_K = 64;
    double sen_eps = 1e-6, sen_t0 = 0.0, sen_seed_t = 0.0, sen_res = 1e-14;
    std::uint64_t sen_max_k = 1000000, sen_count = 0, sen_burn = 10000, sen_samples = 100000;
    std::string sen_weights, sen_out;
    sen->add_option("--K", sen_K, "Threshold truncation depth")->capture_default_str();
    sen->add_option("--eps", sen_eps, "Perturbation radius")->capture_default_str();
    sen->add_option("--max-k", sen_max_k, "Capture-step budget")->capture_default_str();
    auto* sen_t0_opt = sen->add_option("--t0", sen_t0, "Probe this single start point");
    auto* sen_from = sen->add_option("--from-attractor", sen_count,
                                     "Probe this many attractor points (cycled in order)")
                         ->check(CLI::PositiveNumber);
    sen_t0_opt->excludes(sen_from);
    sen->add_option("--seed-t", sen_seed_t, "Attractor seed point")->capture_default_str();
    sen->add_option("--burn", sen_burn, "Attractor burn-in")->capture_default_str();
    sen->add_option("--samples", sen_samples, "Attractor samples")->capture_default_str();
    sen->add_option("--resolution", sen_res, "Attractor merge resolution")
        ->capture_default_str();
    sen->add_option("--weights", sen_weights,
                    "Weight file; supplies the ray norm for network-units separation");
    sen->add_option("--out", sen_out, "Also write the document to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*gen) return cmd_gen(g, gen_opt, gen_out);
        if (*chk)
            return cmd_check(g, chk_src, chk_K, chk_box, chk_orbit, chk_sweeps, chk_seed,
                             chk_out);
        if (*dlt) return cmd_delta(g, dlt_K, dlt_digits, dlt_out);
        if (*sim)
            return cmd_simulate(g, sim_src, sim_K, sim_t0, sim_steps, sim_every, sim_out);
        if (*lin) return cmd_line_orbit(g, lin_K, lin_t0, lin_steps, lin_ext, lin_out, lin_itin);
        if (*att)
            return cmd_attractor(g, att_K, att_t0, att_burn, att_samples, att_res, att_out);
        if (*sen) {
            if (sen_t0_opt->count() == 0 && sen_count == 0)
                throw CliError{2, "sensitivity requires --t0 or --from-attractor"};
            return cmd_sensitivity(g, sen_K, sen_eps, sen_max_k, sen_t0_opt->count() > 0,
                                   sen_t0, sen_count, sen_seed_t, sen_burn, sen_samples,
                                   sen_res, sen_weights, sen_out);
        }
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.code;
    }
    return 2;
}
