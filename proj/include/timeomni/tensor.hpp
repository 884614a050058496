// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <deque>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace timeomni {

using Shape = std::vector<std::size_t>;

std::size_t shape_size(const Shape& shape);
std::string shape_string(const Shape& shape);

/// Dense row-major array of doubles. Plain value type.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape shape, double fill = 0.0);
    Tensor(Shape shape, std::vector<double> data);

    static Tensor vector(std::vector<double> values);
    static Tensor matrix(std::size_t rows, std::size_t cols, std::vector<double> values);
    static Tensor randn(Shape shape, double stddev, std::mt19937_64& rng);

    const Shape& shape() const noexcept { return shape_; }
    std::size_t rank() const noexcept { return shape_.size(); }
    std::size_t dim(std::size_t axis) const { return shape_.at(axis); }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    /// Leading dimension, and the product of the remaining ones.
    std::size_t rows() const noexcept { return shape_.empty() ? 1 : shape_.front(); }
    std::size_t cols() const noexcept { return rows() == 0 ? 0 : size() / rows(); }

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }
    std::vector<double>& values() noexcept { return data_; }
    const std::vector<double>& values() const noexcept { return data_; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }
    double& at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

    void reshape(Shape shape);
    void fill(double v);
    bool all_finite() const noexcept;

    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    Shape shape_;
    std::vector<double> data_;
};

/// A named trainable (or frozen) tensor with its gradient accumulator.
struct Parameter {
    std::string name;
    Tensor value;
    Tensor grad;
    bool trainable = true;
    bool has_grad = false;  // set when a backward pass reached this parameter

    void zero_grad();
};

using ParamId = std::size_t;

/// Owns every parameter of a model. Ids are stable insertion indices, so a
/// copied store stays valid for the module structs that reference it.
class ParameterStore {
public:
    ParamId add(std::string name, Tensor init, bool trainable = true);

    Parameter& operator[](ParamId id) { return params_.at(id); }
    const Parameter& operator[](ParamId id) const { return params_.at(id); }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    ParamId id_of(const std::string& name) const;

    std::size_t size() const noexcept { return params_.size(); }
    std::size_t trainable_elements() const;

    void zero_grad();

    auto begin() { return params_.begin(); }
    auto end() { return params_.end(); }
    auto begin() const { return params_.begin(); }
    auto end() const { return params_.end(); }

private:
    std::deque<Parameter> params_;
    std::unordered_map<std::string, ParamId> index_;
};

}  // namespace timeomni
