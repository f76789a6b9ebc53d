#include "cantornet/spectral.hpp"

#include <cmath>

#include "cantornet/errors.hpp"
#include "cantornet/rng.hpp"

namespace cantornet {

namespace {

double neumaier_sum(const double* x, std::size_t n) {
    double s = 0.0, c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = s + x[i];
        if (std::fabs(s) >= std::fabs(x[i]))
            c += (s - t) + x[i];
        else
            c += (x[i] - t) + s;
        s = t;
    }
    return s + c;
}

double neumaier_weighted(const double* w, const double* x, std::size_t n) {
    double s = 0.0, c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = w[i] * x[i];
        const double t = s + p;
        if (std::fabs(s) >= std::fabs(p))
            c += (s - t) + p;
        else
            c += (p - t) + s;
        s = t;
    }
    return s + c;
}

constexpr std::size_t kPlainSumLimit = 64;

} // namespace

double stable_sum(const double* x, std::size_t n) {
    if (n > kPlainSumLimit) return neumaier_sum(x, n);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

double weighted_sum(const double* w, const double* x, std::size_t n) {
    if (n > kPlainSumLimit) return neumaier_weighted(w, x, n);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * x[i];
    return s;
}

Matrix generate_matrix(std::size_t n, std::uint64_t seed, double sum_target, SumMode mode) {
    if (n == 0) throw domain_error("generate_matrix: n must be positive");
    if (!(sum_target > 0.75) || !(sum_target < 1.0))
        throw domain_error("generate_matrix: sum_target must lie strictly inside (3/4, 1)");

    Rng rng(seed);
    std::vector<double> u(n * n);
    for (double& x : u) x = rng.u01();

    Matrix m;
    m.n = n;
    m.mode = mode;
    m.a.assign(n * n, 0.0);
    if (mode == SumMode::row) {
        for (std::size_t i = 0; i < n; ++i) {
            const double tot = stable_sum(&u[i * n], n);
            for (std::size_t j = 0; j < n; ++j)
                m.a[i * n + j] = sum_target * (u[i * n + j] / tot);
        }
    } else {
        std::vector<double> col(n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) col[i] = u[i * n + j];
            const double tot = stable_sum(col.data(), n);
            for (std::size_t i = 0; i < n; ++i)
                m.a[i * n + j] = sum_target * (col[i] / tot);
        }
    }
    return m;
}

ValidationReport validate(const Matrix& m) {
    ValidationReport r;
    if (m.n == 0 || m.a.size() != m.n * m.n) return r;

    double min_entry = m.a[0];
    bool positive = true;
    for (double x : m.a) {
        if (!(x > 0.0) || !std::isfinite(x)) positive = false;
        if (x < min_entry) min_entry = x;
    }
    r.positive = positive;
    r.min_entry = min_entry;

    const std::size_t n = m.n;
    std::vector<double> line(n);
    bool in_range = true;
    double min_sum = 0.0, max_sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (m.mode == SumMode::row) {
            for (std::size_t j = 0; j < n; ++j) line[j] = m.at(k, j);
        } else {
            for (std::size_t i = 0; i < n; ++i) line[i] = m.at(i, k);
        }
        const double s = stable_sum(line.data(), n);
        if (k == 0) min_sum = max_sum = s;
        min_sum = std::fmin(min_sum, s);
        max_sum = std::fmax(max_sum, s);
        if (!(s > 0.75) || !(s < 1.0)) in_range = false;
    }
    r.sums_in_range = in_range;
    r.min_sum = min_sum;
    r.max_sum = max_sum;
    return r;
}

Eigenpair power_iteration(const Matrix& m, double tol, unsigned max_iter) {
    const ValidationReport vr = validate(m);
    if (!vr.ok()) throw validation_error("power_iteration: matrix fails validation");

    const std::size_t n = m.n;
    Eigenpair e;
    e.v.assign(n, 1.0 / static_cast<double>(n));
    std::vector<double> z(n);
    for (unsigned it = 1; it <= max_iter; ++it) {
        for (std::size_t i = 0; i < n; ++i)
            z[i] = weighted_sum(&m.a[i * n], e.v.data(), n);
        const double rho = stable_sum(z.data(), n); // sum of v stays 1, so sum of Wv estimates rho
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            res = std::fmax(res, std::fabs(z[i] - rho * e.v[i]));
        e.rho = rho;
        e.residual = res;
        e.iterations = it;
        if (res <= tol) break;
        for (std::size_t i = 0; i < n; ++i) e.v[i] = z[i] / rho;
    }
    return e;
}

} // namespace cantornet
