#pragma once

#include <cstdint>
#include <vector>

namespace cantornet {

enum class SumMode { row, column };

struct Matrix {
    std::size_t n = 0;
    std::vector<double> a; // row-major, n*n entries
    SumMode mode = SumMode::row;

    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

struct ValidationReport {
    bool positive = false;      // every entry strictly > 0
    bool sums_in_range = false; // every row (or column) sum strictly inside (3/4, 1)
    double min_entry = 0.0;
    double min_sum = 0.0;
    double max_sum = 0.0;
    bool ok() const { return positive && sums_in_range; }
};

struct Eigenpair {
    double rho = 0.0;          // dominant eigenvalue estimate
    std::vector<double> v;     // eigenvector, normalized to sum 1 (all entries > 0)
    double residual = 0.0;     // max_i |(W v)_i - rho v_i|
    unsigned iterations = 0;
};

// Left-to-right summation for n <= 64; Neumaier-compensated beyond that, so
// threshold comparisons do not flip from accumulated summation error.
double stable_sum(const double* x, std::size_t n);
double weighted_sum(const double* w, const double* x, std::size_t n);

// Random strictly positive matrix whose row (column) sums all equal
// sum_target up to final rounding: entries are sum_target * (u_j / sum u).
// Requires sum_target strictly inside (3/4, 1). Deterministic in seed.
Matrix generate_matrix(std::size_t n, std::uint64_t seed, double sum_target, SumMode mode);

ValidationReport validate(const Matrix& m);

// Power iteration with sum normalization; start vector uniform.
// Throws validation_error if the matrix fails validate().
Eigenpair power_iteration(const Matrix& m, double tol = 1e-12, unsigned max_iter = 100000);

} // namespace cantornet
