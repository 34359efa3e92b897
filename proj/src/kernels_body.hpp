#pragma once

// Per-output-element kernel bodies shared by the serial and OpenMP
// translation units. Threading may only split work across calls to these
// helpers, never inside one, so both backends reduce every output element
// in the same floating-point order and agree bit for bit.

#include <cstdint>

namespace rafcn::kernels::body {

// One output row of C[m×n] = op(A)·op(B). A stored m×k (or k×m when
// trans_a), B stored k×n (or n×k when trans_b).
inline void gemm_row(int64_t i, bool trans_a, bool trans_b, int64_t m,
                     int64_t n, int64_t k, const double* a, const double* b,
                     double* c, bool accumulate) {
    double* crow = c + i * n;
    if (!accumulate) {
        for (int64_t j = 0; j < n; ++j) crow[j] = 0.0;
    }
    for (int64_t l = 0; l < k; ++l) {
        const double av = trans_a ? a[l * m + i] : a[i * k + l];
        if (av == 0.0) continue;
        if (!trans_b) {
            const double* brow = b + l * n;
            for (int64_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        } else {
            for (int64_t j = 0; j < n; ++j) crow[j] += av * b[j * k + l];
        }
    }
}

// One output row (co, ho) of the padded 3×3 cross-correlation.
inline void conv3x3_forward_row(int64_t co, int64_t ho, const double* x,
                                const double* weight, const double* bias,
                                double* y, int64_t c_in, int64_t h, int64_t w,
                                int64_t stride, int64_t w_out) {
    const double b = bias ? bias[co] : 0.0;
    double* yrow = y + (co * ((h + stride - 1) / stride) + ho) * w_out;
    for (int64_t wo = 0; wo < w_out; ++wo) {
        double acc = b;
        for (int64_t ci = 0; ci < c_in; ++ci) {
            const double* xc = x + ci * h * w;
            const double* wc = weight + (co * c_in + ci) * 9;
            for (int64_t kh = 0; kh < 3; ++kh) {
                const int64_t hi = ho * stride + kh - 1;
                if (hi < 0 || hi >= h) continue;
                const double* xr = xc + hi * w;
                for (int64_t kw = 0; kw < 3; ++kw) {
                    const int64_t wi = wo * stride + kw - 1;
                    if (wi < 0 || wi >= w) continue;
                    acc += xr[wi] * wc[kh * 3 + kw];
                }
            }
        }
        yrow[wo] = acc;
    }
}

// One input row (ci, hi) of dL/dx; gather formulation so each element is
// written exactly once.
inline void conv3x3_backward_input_row(int64_t ci, int64_t hi, const double* dy,
                                       const double* weight, double* dx,
                                       int64_t c_in, int64_t h, int64_t w,
                                       int64_t c_out, int64_t stride,
                                       int64_t h_out, int64_t w_out) {
    double* dxr = dx + (ci * h + hi) * w;
    for (int64_t wi = 0; wi < w; ++wi) {
        double acc = 0.0;
        for (int64_t co = 0; co < c_out; ++co) {
            const double* dyc = dy + co * h_out * w_out;
            const double* wc = weight + (co * c_in + ci) * 9;
            for (int64_t kh = 0; kh < 3; ++kh) {
                const int64_t num_h = hi + 1 - kh;
                if (num_h < 0 || num_h % stride != 0) continue;
                const int64_t ho = num_h / stride;
                if (ho >= h_out) continue;
                for (int64_t kw = 0; kw < 3; ++kw) {
                    const int64_t num_w = wi + 1 - kw;
                    if (num_w < 0 || num_w % stride != 0) continue;
                    const int64_t wo = num_w / stride;
                    if (wo >= w_out) continue;
                    acc += wc[kh * 3 + kw] * dyc[ho * w_out + wo];
                }
            }
        }
        dxr[wi] = acc;
    }
}

// All 9·c_in weight-gradient entries for one output channel.
inline void conv3x3_backward_weight_channel(int64_t co, const double* dy,
                                            const double* x, double* dw,
                                            int64_t c_in, int64_t h, int64_t w,
                                            int64_t stride, int64_t h_out,
                                            int64_t w_out) {
    const double* dyc = dy + co * h_out * w_out;
    for (int64_t ci = 0; ci < c_in; ++ci) {
        const double* xc = x + ci * h * w;
        double* dwc = dw + (co * c_in + ci) * 9;
        for (int64_t kh = 0; kh < 3; ++kh) {
            for (int64_t kw = 0; kw < 3; ++kw) {
                double acc = 0.0;
                for (int64_t ho = 0; ho < h_out; ++ho) {
                    const int64_t hi = ho * stride + kh - 1;
                    if (hi < 0 || hi >= h) continue;
                    for (int64_t wo = 0; wo < w_out; ++wo) {
                        const int64_t wi = wo * stride + kw - 1;
                        if (wi < 0 || wi >= w) continue;
                        acc += dyc[ho * w_out + wo] * xc[hi * w + wi];
                    }
                }
                dwc[kh * 3 + kw] = acc;
            }
        }
    }
}

}  // namespace rafcn::kernels::body
