// SPDX-License-Identifier: Apache-2.0
#pragma once

// Dense row-major compute kernels. Every kernel has a serial reference and an
// OpenMP variant; the two produce bit-identical results because each output
// element is reduced by exactly one thread in the serial order.

#include <cstddef>
#include <span>

namespace timeomni::kernels {

/// Runtime switch for the parallel variants (on by default when built with OpenMP).
void set_parallel(bool enabled) noexcept;
bool parallel_enabled() noexcept;
int max_threads() noexcept;

// C[m x n] (+)= A[m x k] * B[k x n]
void gemm_nn_serial(std::span<const double> a, std::span<const double> b, std::span<double> c,
                    std::size_t m, std::size_t k, std::size_t n, bool accumulate);
void gemm_nn_parallel(std::span<const double> a, std::span<const double> b, std::span<double> c,
                      std::size_t m, std::size_t k, std::size_t n, bool accumulate);

// C[m x n] (+)= A[m x k] * B[n x k]^T
void gemm_nt_serial(std::span<const double> a, std::span<const double> b, std::span<double> c,
                    std::size_t m, std::size_t k, std::size_t n, bool accumulate);
void gemm_nt_parallel(std::span<const double> a, std::span<const double> b, std::span<double> c,
                      std::size_t m, std::size_t k, std::size_t n, bool accumulate);

// C[m x n] (+)= A[k x m]^T * B[k x n]
void gemm_tn_serial(std::span<const double> a, std::span<const double> b, std::span<double> c,
                    std::size_t m, std::size_t k, std::size_t n, bool accumulate);
void gemm_tn_parallel(std::span<const double> a, std::span<const double> b, std::span<double> c,
                      std::size_t m, std::size_t k, std::size_t n, bool accumulate);

// Dispatchers: pick the parallel variant when enabled and the problem is big enough.
void gemm_nn(std::span<const double> a, std::span<const double> b, std::span<double> c, std::size_t m,
             std::size_t k, std::size_t n, bool accumulate);
void gemm_nt(std::span<const double> a, std::span<const double> b, std::span<double> c, std::size_t m,
             std::size_t k, std::size_t n, bool accumulate);
void gemm_tn(std::span<const double> a, std::span<const double> b, std::span<double> c, std::size_t m,
             std::size_t k, std::size_t n, bool accumulate);

/// Geometry of a multi-head scaled dot-product attention call.
/// q: [lq x width], k/v: [lk x width], width = heads * head_dim.
struct AttentionShape {
    std::size_t lq = 0;
    std::size_t lk = 0;
    std::size_t width = 0;
    std::size_t heads = 1;
    bool causal = false;  // query i sees keys j <= i
};

// probs: [heads x lq x lk], masked entries are written as exact zeros.
void attention_forward_serial(const AttentionShape& s, std::span<const double> q, std::span<const double> k,
                              std::span<const double> v, std::span<double> out, std::span<double> probs);
void attention_forward_parallel(const AttentionShape& s, std::span<const double> q, std::span<const double> k,
                                std::span<const double> v, std::span<double> out, std::span<double> probs);

// Accumulates into dq/dk/dv (any may be empty to skip).
void attention_backward_serial(const AttentionShape& s, std::span<const double> q, std::span<const double> k,
                               std::span<const double> v, std::span<const double> probs,
                               std::span<const double> dout, std::span<double> dq, std::span<double> dk,
                               std::span<double> dv);
void attention_backward_parallel(const AttentionShape& s, std::span<const double> q, std::span<const double> k,
                                 std::span<const double> v, std::span<const double> probs,
                                 std::span<const double> dout, std::span<double> dq, std::span<double> dk,
                                 std::span<double> dv);

void attention_forward(const AttentionShape& s, std::span<const double> q, std::span<const double> k,
                       std::span<const double> v, std::span<double> out, std::span<double> probs);
void attention_backward(const AttentionShape& s, std::span<const double> q, std::span<const double> k,
                        std::span<const double> v, std::span<const double> probs, std::span<const double> dout,
                        std::span<double> dq, std::span<double> dk, std::span<double> dv);

}  // namespace timeomni::kernels
