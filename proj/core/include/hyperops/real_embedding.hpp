#pragma once

#include <cstdint>

#include "hyperops/leveled_int.hpp"
#include "hyperops/leveled_nat.hpp"
#include "hyperops/leveled_rat.hpp"

namespace hyperops {

// Floating-point shadow of a leveled value: where it sits in the tower and
// which base produced it.
struct RealLeveled {
    double value;
    int level;
    double omega;
};

// omega^x and its inverse.
double exp_omega(double x, double omega);
double ln_omega(double x, double omega);

// The level-indexed operations on reals: index 0 adds, index 1 multiplies,
// higher indices conjugate through the exponential, index -1 is the
// log-semiring sum.
double bullet(int n, double a, double b, double omega);

// Additive and multiplicative inverses at a level.
double real_additive_inverse(int n, double a, double omega);
double real_multiplicative_inverse(int n, double a, double omega);

// n-fold exponential of the (signed, fractional) coordinate.
double embed_nat(const LeveledNat& a);
double embed_int(const LeveledInt& a);
double embed_rat(const LeveledRat& a);

enum class TowerStatus { Converged, Diverged };

struct TowerResult {
    TowerStatus status;
    double value;
    std::uint64_t iterations;
};

// Fixed point of t -> x^t, iterated from t = x.
TowerResult power_tower(double x, double tol = 1e-12,
                        std::uint64_t max_iter = 100000);

}  // namespace hyperops
