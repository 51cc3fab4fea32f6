#ifndef BOROK_KERNELS_HPP
#define BOROK_KERNELS_HPP

#include <cstddef>

// Vector and panel primitives used by the hot paths of the integrators.
//
// Every kernel has a plain serial reference version (suffix _serial) and a
// default version that parallelizes with OpenMP when built with it.  The
// parallel variants are written so that each output element is produced by
// exactly the same sequence of floating-point operations as in the serial
// version; reductions accumulate fixed-size chunks that are combined in index
// order.  Results are therefore bitwise identical between the serial and
// parallel paths and independent of the number of threads.

namespace borok::kernels {

// chunk length for ordered reductions
inline constexpr std::size_t kReduceChunk = 1024;

double dot_serial(const double* x, const double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);

double nrm2_serial(const double* x, std::size_t n);
double nrm2(const double* x, std::size_t n);

// y += a*x
void axpy_serial(double a, const double* x, double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);

// z = x + a*y
void add_scaled_serial(const double* x, double a, const double* y, double* z, std::size_t n);
void add_scaled(const double* x, double a, const double* y, double* z, std::size_t n);

void scal_serial(double a, double* x, std::size_t n);
void scal(double a, double* x, std::size_t n);

bool all_finite(const double* x, std::size_t n);

// Column-major n x m panel ops (columns contiguous, leading dimension n).
// out[j] = column_j . x, for j < m
void panel_project_serial(const double* panel, std::size_t n, std::size_t m,
                          const double* x, double* out);
void panel_project(const double* panel, std::size_t n, std::size_t m,
                   const double* x, double* out);

// out = panel * coef  (length n)
void panel_combine_serial(const double* panel, std::size_t n, std::size_t m,
                          const double* coef, double* out);
void panel_combine(const double* panel, std::size_t n, std::size_t m,
                   const double* coef, double* out);

int max_threads();

}  // namespace borok::kernels

#endif
