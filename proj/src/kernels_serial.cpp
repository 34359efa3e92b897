#include "rafcn/kernels.hpp"

#include "kernels_body.hpp"

namespace rafcn::kernels::serial {

void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
          const double* a, const double* b, double* c, bool accumulate) {
    for (int64_t i = 0; i < m; ++i) {
        body::gemm_row(i, trans_a, trans_b, m, n, k, a, b, c, accumulate);
    }
}

void conv3x3_forward(const double* x, const double* weight, const double* bias,
                     double* y, int64_t c_in, int64_t h, int64_t w,
                     int64_t c_out, int64_t stride) {
    const int64_t h_out = conv_out_extent(h, stride);
    const int64_t w_out = conv_out_extent(w, stride);
    for (int64_t r = 0; r < c_out * h_out; ++r) {
        body::conv3x3_forward_row(r / h_out, r % h_out, x, weight, bias, y,
                                  c_in, h, w, stride, w_out);
    }
}

void conv3x3_backward_input(const double* dy, const double* weight, double* dx,
                            int64_t c_in, int64_t h, int64_t w,
                            int64_t c_out, int64_t stride) {
    const int64_t h_out = conv_out_extent(h, stride);
    const int64_t w_out = conv_out_extent(w, stride);
    for (int64_t r = 0; r < c_in * h; ++r) {
        body::conv3x3_backward_input_row(r / h, r % h, dy, weight, dx, c_in, h,
                                         w, c_out, stride, h_out, w_out);
    }
}

void conv3x3_backward_weight(const double* dy, const double* x, double* dw,
                             int64_t c_in, int64_t h, int64_t w,
                             int64_t c_out, int64_t stride) {
    const int64_t h_out = conv_out_extent(h, stride);
    const int64_t w_out = conv_out_extent(w, stride);
    for (int64_t co = 0; co < c_out; ++co) {
        body::conv3x3_backward_weight_channel(co, dy, x, dw, c_in, h, w, stride,
                                              h_out, w_out);
    }
}

}  // namespace rafcn::kernels::serial
