#pragma once

// Connected numbers from disconnected ones by taking the logarithm of the
// generating series: a sum over ordered k-tuples of sub-instances with weight
// (-1)^(k-1)/k, in the normalization where the count is multiplied by the
// class sizes of all profiles.

#include <functional>
#include <vector>

#include "hurwitz/multipoly.hpp"
#include "hurwitz/partitions.hpp"

namespace hurwitz {

/// How the branch points of one kind are shared out between components.
/// exponential: the points are labelled, so splits carry a binomial factor.
/// ordinary: the order is fixed by the data (monotone blocks), no factor.
enum class Interleaving { exponential, ordinary };

/// Counts of branch points, one entry per kind of point.
using Orders = std::vector<int>;

/// Disconnected number for a sub-instance, in the plain normalization (divided
/// by the class sizes). Must accept every degree 1..d and orders up to the target.
using DisconnectedEvaluator = std::function<MultiPoly(const ProfileSet&, const Orders&)>;

MultiPoly connected_transform(const DisconnectedEvaluator& evaluate, const ProfileSet& target, const Orders& orders,
                              const std::vector<Interleaving>& slots, VarLayout layout,
                              const DegreeCaps* caps = nullptr);

}  // namespace hurwitz
