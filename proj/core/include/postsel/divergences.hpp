#pragma once

#include "postsel/finite_distribution.hpp"

namespace postsel {

/// Total variation distance (1/2)·Σ|p_i − q_i|, in [0, 1].
/// Requires identical ordered label sets.
double tv_distance(const FiniteDistribution& p, const FiniteDistribution& q);

/// KL divergence Σ p_i log(p_i/q_i) in nats, with 0·log 0 = 0.
/// Returns +infinity when q fails to dominate p.
double kl_divergence(const FiniteDistribution& p, const FiniteDistribution& q);

/// Shannon entropy −Σ p_i log p_i in nats, with 0·log 0 = 0.
double entropy(const FiniteDistribution& p);

}  // namespace postsel
