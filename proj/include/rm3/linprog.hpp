#pragma once

#include "rm3/rational.hpp"

#include <optional>
#include <vector>

namespace rm3 {

using QVector = std::vector<Rational>;

// Strictly positive rational weights lambda with sum_k lambda_k v_k = 0,
// scaled so min lambda_k >= 1; empty optional if no strict relation exists.
// Decided by the bounded LP: maximize t subject to lambda_k >= t,
// sum lambda_k = 1, sum lambda_k v_k = 0; strict relation <=> optimum > 0.
std::optional<QVector> lp_positive_relation(const std::vector<QVector>& vectors);

// Nonnegative weights alpha with sum_k alpha_k g_k = target, or empty.
std::optional<QVector> lp_in_cone(const QVector& target, const std::vector<QVector>& generators);

// Like lp_in_cone but requires every weight strictly positive, i.e. decides
// membership in the relative interior of the cone spanned by the generators.
std::optional<QVector> lp_in_cone_strict(const QVector& target,
                                         const std::vector<QVector>& generators);

}  // namespace rm3
