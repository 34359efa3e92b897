#pragma once

#include <cstdint>

namespace rafcn::kernels {

/// Which kernel implementation the dispatch functions use. Both produce
/// bit-identical results: the OpenMP variants parallelize only across
/// output elements, each of which is reduced in the same serial order.
enum class Backend { serial, openmp };

Backend active_backend();
void set_backend(Backend b);
bool openmp_compiled();
int max_threads();

/// Row-major GEMM: C[m×n] = op(A)·op(B), optionally accumulating into C.
/// op(A) is a transposed view when trans_a (A stored k×m), likewise B.
void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
          const double* a, const double* b, double* c, bool accumulate);

/// 3×3 cross-correlation with zero padding 1. x: c_in×h×w, weight:
/// c_out×c_in×3×3, y: c_out×h_out×w_out with h_out = ceil(h/stride).
void conv3x3_forward(const double* x, const double* weight, const double* bias,
                     double* y, int64_t c_in, int64_t h, int64_t w,
                     int64_t c_out, int64_t stride);
void conv3x3_backward_input(const double* dy, const double* weight, double* dx,
                            int64_t c_in, int64_t h, int64_t w,
                            int64_t c_out, int64_t stride);
void conv3x3_backward_weight(const double* dy, const double* x, double* dw,
                             int64_t c_in, int64_t h, int64_t w,
                             int64_t c_out, int64_t stride);

int64_t conv_out_extent(int64_t extent, int64_t stride);

namespace serial {
void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
          const double* a, const double* b, double* c, bool accumulate);
void conv3x3_forward(const double* x, const double* weight, const double* bias,
                     double* y, int64_t c_in, int64_t h, int64_t w,
                     int64_t c_out, int64_t stride);
void conv3x3_backward_input(const double* dy, const double* weight, double* dx,
                            int64_t c_in, int64_t h, int64_t w,
                            int64_t c_out, int64_t stride);
void conv3x3_backward_weight(const double* dy, const double* x, double* dw,
                             int64_t c_in, int64_t h, int64_t w,
                             int64_t c_out, int64_t stride);
}  // namespace serial

namespace omp {
void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
          const double* a, const double* b, double* c, bool accumulate);
void conv3x3_forward(const double* x, const double* weight, const double* bias,
                     double* y, int64_t c_in, int64_t h, int64_t w,
                     int64_t c_out, int64_t stride);
void conv3x3_backward_input(const double* dy, const double* weight, double* dx,
                            int64_t c_in, int64_t h, int64_t w,
                            int64_t c_out, int64_t stride);
void conv3x3_backward_weight(const double* dy, const double* x, double* dw,
                             int64_t c_in, int64_t h, int64_t w,
                             int64_t c_out, int64_t stride);
}  // namespace omp

}  // namespace rafcn::kernels
