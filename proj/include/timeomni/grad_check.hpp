// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "timeomni/autodiff.hpp"

namespace timeomni {

struct GradCheckOptions {
    double step = 1e-5;                 // central-difference step, within [1e-6, 1e-4]
    std::size_t max_coords_per_param = 0;  // 0 checks every coordinate
    std::uint64_t seed = 0;             // coordinate sampling when capped
};

/// Scalar objective built on a fresh tape; it must watch the checked parameters.
using Objective = std::function<ad::Var(ad::Tape&)>;

/// Max over checked coordinates of
///   |analytic - central difference| / max(|analytic|, |fd|, 1e-8).
/// Throws NonFiniteGradient when the objective or any gradient is not finite.
/// Parameter values are restored before returning; grads are left populated.
double grad_check(const Objective& f, std::span<Parameter* const> params, const GradCheckOptions& opts = {});

}  // namespace timeomni
