// SPDX-License-Identifier: Apache-2.0
#pragma once

// Reverse-mode differentiation over a per-forward operation tape.
//
// A Tape records every op as a node holding its output value and a backward
// closure. Nodes live in a deque so references to earlier values stay valid
// while new ops are appended. Parameters enter as leaves that reference the
// store's tensor (no copy) and receive accumulated gradients on backward().

#include <cstddef>
#include <deque>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "timeomni/tensor.hpp"

namespace timeomni::ad {

class Tape;

/// Handle to a node on a tape.
struct Var {
    Tape* tape = nullptr;
    std::size_t id = 0;

    const Tensor& value() const;
    const Shape& shape() const { return value().shape(); }
    bool requires_grad() const;
    double item() const;
};

class Tape {
public:
    using Backward = std::function<void(Tape&, std::size_t self)>;

    Tape() = default;
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;

    Var constant(Tensor value);
    /// Leaf that references `value`; the tensor must outlive the tape.
    Var constant_ref(const Tensor& value);
    /// Differentiable free input (gradient readable through grad()).
    Var input(Tensor value);
    /// Parameter leaf. Gradients reach p.grad only when p.trainable.
    Var watch(Parameter& p);
    /// Read-only parameter leaf for inference.
    Var watch(const Parameter& p) { return constant_ref(p.value); }

    Var record(Tensor value, std::initializer_list<Var> inputs, Backward backward);
    Var record(Tensor value, std::span<const Var> inputs, Backward backward);

    /// Seeds d(root)/d(root) = 1 and propagates to every leaf.
    void backward(Var root);

    const Tensor& value(std::size_t id) const;
    bool requires_grad(std::size_t id) const { return nodes_.at(id).requires_grad; }
    /// Gradient buffer for a node, allocated as zeros on first access.
    std::span<double> grad(std::size_t id);
    Tensor grad_tensor(Var v) const;

    std::size_t size() const noexcept { return nodes_.size(); }

private:
    struct Node {
        Tensor own;
        const Tensor* ref = nullptr;
        std::vector<double> grad;
        bool requires_grad = false;
        Backward backward;
        Parameter* param = nullptr;
    };

    std::deque<Node> nodes_;
};

// ---- linear algebra --------------------------------------------------------

Var matmul(Var a, Var b);     // [m x k] * [k x n]
Var matmul_nt(Var a, Var b);  // [m x k] * [n x k]^T
/// x [m x in] * w[out x in]^T + bias[out]
Var linear(Var x, Var w, Var bias);
Var linear(Var x, Var w);

// ---- elementwise -------------------------------------------------------------

Var add(Var a, Var b);
Var sub(Var a, Var b);
Var mul(Var a, Var b);
Var scale(Var a, double s);
Var add_row(Var x, Var bias);   // bias [n] broadcast over rows of x [m x n]
Var mul_rows(Var x, Var v);     // row r scaled by v[r]
Var div_rows(Var x, Var v);     // row r divided by v[r]
Var row_norms(Var x);           // Euclidean norm of every row -> [m]
Var gelu(Var x);

// ---- normalisation ---------------------------------------------------------

/// Softmax along `axis` of a 1-D or 2-D tensor, max-subtracted.
Var softmax(Var x, std::size_t axis);
Var layer_norm(Var x, Var gain, Var bias, double eps = 1e-5);

// ---- sequence ops ----------------------------------------------------------

/// Non-overlapping 1-D convolution: stride = kernel = patch, zero-padded tail.
/// signal [T], weights [d x patch], bias [d] -> [ceil(T/patch) x d]
Var conv1d_patch(Var signal, std::size_t patch, Var weights, Var bias);

/// Scaled dot-product attention over `heads` column groups of q/k/v.
/// When `probs_out` is set it receives the [heads x lq x lk] weight tensor.
Var attention(Var q, Var k, Var v, std::size_t heads, bool causal, Tensor* probs_out = nullptr);

// ---- shape ops -----------------------------------------------------------------

Var concat_rows(std::span<const Var> parts);
Var slice_rows(Var x, std::size_t begin, std::size_t end);
Var pad_rows(Var x, std::size_t total_rows);  // append zero rows
Var reshape(Var x, Shape shape);
Var slice(Var x, std::size_t begin, std::size_t end);  // flat range of a 1-D tensor
Var gather_rows(Var table, std::span<const std::size_t> ids);

// ---- reductions --------------------------------------------------------------

Var sum(Var x);
Var mean(Var x);

}  // namespace timeomni::ad
