#pragma once

#include "sheito/bphz/coproduct.hpp"

#include <mutex>
#include <string>
#include <unordered_map>

namespace sheito {

// Twisted antipode: A(tau) = -M(A (x) id)(Delta^- tau - tau (x) 1), memoized by tree code.
// Defined on nonempty trees of non-positive homogeneity (the ones reachable as left factors).
class TwistedAntipode {
public:
    explicit TwistedAntipode(ScalingAssignment s = {}) : s_(std::move(s)) {}

    const ForestSum& operator()(const DecoratedTree& t);
    ForestSum operator()(const Forest& f);

    // Largest recursion depth reached so far (for termination diagnostics).
    int max_depth() const { return max_depth_; }

private:
    const ForestSum& compute(const DecoratedTree& t, int depth);

    ScalingAssignment s_;
    std::recursive_mutex mu_;
    std::unordered_map<std::string, ForestSum> cache_;
    int max_depth_ = 0;
};

ForestSum twisted_antipode(const DecoratedTree& t);

} // namespace sheito
