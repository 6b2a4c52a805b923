#pragma once

#include "sheito/bphz/antipode.hpp"

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

namespace sheito {

// Names of the character generators: the pair moments of the Gaussian leaf factors.
namespace gen {
inline const std::string C1 = "C1"; // E[rho * K rho]
inline const std::string C2 = "C2"; // E[dK rho * dK rho]
inline const std::string KK = "KK"; // E[K rho * K rho]
inline const std::string RR = "RR"; // E[rho * rho]
} // namespace gen

// Kinds of leaf factors attached to the root of an in-scope tree.
enum class LeafKind { Rho, K, DK };

// Pair moments; the two mixed moments with a space derivative vanish by x-parity.
struct PairMomentTable {
    double kk = 0, krho = 0, dd = 0, kd = 0, rhorho = 0;
    bool kd_vanishes = true;
    bool rhod_vanishes = true;

    std::map<std::string, double> generator_values() const
    {
        return {{gen::C1, krho}, {gen::C2, dd}, {gen::KK, kk}, {gen::RR, rhorho}};
    }
};

// Symbolic pair moment of two leaf factors (zero polynomial when it vanishes by parity).
Poly pair_moment(LeafKind a, LeafKind b);

// g(tau) = E[(Pi' tau)(0)] by Wick's formula over the leaf factors at the root.
// Throws std::domain_error for tree shapes whose leaf factors are outside the table.
Poly wick_character(const DecoratedTree& t);
Poly wick_character(const Forest& f);
double wick_character(const DecoratedTree& t, const PairMomentTable& table);

// h = g o A, multiplicative over forests, h(empty) = 1; memoized.
class BphzCharacter {
public:
    explicit BphzCharacter(ScalingAssignment s = {}) : antipode_(std::move(s)) {}

    Poly operator()(const DecoratedTree& t);
    Poly operator()(const Forest& f);
    TwistedAntipode& antipode() { return antipode_; }

private:
    TwistedAntipode antipode_;
    std::mutex mu_;
    std::unordered_map<std::string, Poly> cache_;
};

} // namespace sheito
