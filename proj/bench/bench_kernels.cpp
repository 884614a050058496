// SPDX-License-Identifier: Apache-2.0
// Serial reference vs OpenMP kernels at the shapes a toy training step uses
// (d_llm 32, ~180 tokens) and at a larger width.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "timeomni/kernels.hpp"

namespace k = timeomni::kernels;

namespace {

std::vector<double> random_buffer(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d(0.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

using Gemm = void (*)(std::span<const double>, std::span<const double>, std::span<double>, std::size_t,
                      std::size_t, std::size_t, bool);

template <Gemm F>
void BM_gemm(benchmark::State& state) {
    const auto m = std::size_t(state.range(0)), kk = std::size_t(state.range(1)), n = std::size_t(state.range(2));
    const auto a = random_buffer(m * kk, 1), b = random_buffer(kk * n, 2);
    std::vector<double> c(m * n);
    for (auto _ : state) {
        F(a, b, c, m, kk, n, false);
        benchmark::DoNotOptimize(c.data());
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t(2 * m * kk * n));
}

void gemm_shapes(benchmark::internal::Benchmark* b) {
    b->Args({180, 32, 128})->Args({180, 128, 32})->Args({512, 256, 512});
}

BENCHMARK(BM_gemm<k::gemm_nn_serial>)->Name("gemm_nn/serial")->Apply(gemm_shapes);
BENCHMARK(BM_gemm<k::gemm_nn_parallel>)->Name("gemm_nn/openmp")->Apply(gemm_shapes);
BENCHMARK(BM_gemm<k::gemm_nt_serial>)->Name("gemm_nt/serial")->Apply(gemm_shapes);
BENCHMARK(BM_gemm<k::gemm_nt_parallel>)->Name("gemm_nt/openmp")->Apply(gemm_shapes);
BENCHMARK(BM_gemm<k::gemm_tn_serial>)->Name("gemm_tn/serial")->Apply(gemm_shapes);
BENCHMARK(BM_gemm<k::gemm_tn_parallel>)->Name("gemm_tn/openmp")->Apply(gemm_shapes);

struct AttentionData {
    k::AttentionShape shape;
    std::vector<double> q, kv, v, out, probs, dout, dq, dk, dv;

    AttentionData(std::size_t len, std::size_t width, std::size_t heads) {
        shape = {len, len, width, heads, true};
        q = random_buffer(len * width, 3);
        kv = random_buffer(len * width, 4);
        v = random_buffer(len * width, 5);
        dout = random_buffer(len * width, 6);
        out.resize(len * width);
        probs.resize(heads * len * len);
        dq.resize(len * width);
        dk.resize(len * width);
        dv.resize(len * width);
    }
};

template <bool Parallel>
void BM_attention_forward(benchmark::State& state) {
    AttentionData d(std::size_t(state.range(0)), std::size_t(state.range(1)), 4);
    for (auto _ : state) {
        if (Parallel) k::attention_forward_parallel(d.shape, d.q, d.kv, d.v, d.out, d.probs);
        else k::attention_forward_serial(d.shape, d.q, d.kv, d.v, d.out, d.probs);
        benchmark::DoNotOptimize(d.out.data());
    }
}

template <bool Parallel>
void BM_attention_backward(benchmark::State& state) {
    AttentionData d(std::size_t(state.range(0)), std::size_t(state.range(1)), 4);
    k::attention_forward_serial(d.shape, d.q, d.kv, d.v, d.out, d.probs);
    for (auto _ : state) {
        if (Parallel) k::attention_backward_parallel(d.shape, d.q, d.kv, d.v, d.probs, d.dout, d.dq, d.dk, d.dv);
        else k::attention_backward_serial(d.shape, d.q, d.kv, d.v, d.probs, d.dout, d.dq, d.dk, d.dv);
        benchmark::DoNotOptimize(d.dq.data());
    }
}

void attention_shapes(benchmark::internal::Benchmark* b) { b->Args({180, 32})->Args({512, 128}); }

BENCHMARK(BM_attention_forward<false>)->Name("attention_forward/serial")->Apply(attention_shapes);
BENCHMARK(BM_attention_forward<true>)->Name("attention_forward/openmp")->Apply(attention_shapes);
BENCHMARK(BM_attention_backward<false>)->Name("attention_backward/serial")->Apply(attention_shapes);
BENCHMARK(BM_attention_backward<true>)->Name("attention_backward/openmp")->Apply(attention_shapes);

}  // namespace

BENCHMARK_MAIN();
