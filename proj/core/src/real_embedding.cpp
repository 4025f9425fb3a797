#include "hyperops/real_embedding.hpp"

#include <algorithm>
#include <cmath>

#include "hyperops/errors.hpp"

namespace hyperops {

namespace {

void require_omega(double omega) {
    if (!(omega > 0.0) || omega == 1.0)
        throw invalid_base("omega must be positive and distinct from 1");
}

double omega_of(const Natural& base) {
    auto u = base.to_u64();
    if (!u) throw overflow_error("base exceeds floating-point range");
    return static_cast<double>(*u);
}

// n-fold exponential of a real coordinate.
double ascend(double x, int level, double omega) {
    for (int i = 0; i < level; ++i) x = exp_omega(x, omega);
    return x;
}

double descend(double x, int level, double omega) {
    for (int i = 0; i < level; ++i) x = ln_omega(x, omega);
    return x;
}

}  // namespace

double exp_omega(double x, double omega) {
    require_omega(omega);
    double r = std::pow(omega, x);
    if (std::isinf(r) && std::isfinite(x))
        throw overflow_error("exponential overflows to infinity");
    return r;
}

double ln_omega(double x, double omega) {
    require_omega(omega);
    if (!(x > 0.0)) throw domain_error("logarithm needs a positive operand");
    return std::log(x) / std::log(omega);
}

double bullet(int n, double a, double b, double omega) {
    require_omega(omega);
    if (n < -1) throw domain_error("no operation below index -1");
    if (n == -1) {
        // log_omega(omega^a + omega^b), factored around the dominant term.
        double m = omega > 1.0 ? std::max(a, b) : std::min(a, b);
        double other = a + b - m;
        return m + std::log1p(std::pow(omega, other - m)) / std::log(omega);
    }
    if (n == 0) return a + b;
    if (n == 1) return a * b;
    return exp_omega(bullet(n - 1, ln_omega(a, omega), ln_omega(b, omega), omega),
                     omega);
}

double real_additive_inverse(int n, double a, double omega) {
    require_omega(omega);
    if (n < 0) throw domain_error("negative level");
    return ascend(-descend(a, n, omega), n, omega);
}

double real_multiplicative_inverse(int n, double a, double omega) {
    require_omega(omega);
    if (n < 0) throw domain_error("negative level");
    double x = descend(a, n, omega);
    if (x == 0.0) throw division_by_zero("zero has no reciprocal");
    return ascend(1.0 / x, n, omega);
}

double embed_nat(const LeveledNat& a) {
    double omega = omega_of(a.base());
    return ascend(a.coord().value().convert_to<double>(),
                  static_cast<int>(a.level()), omega);
}

double embed_int(const LeveledInt& a) {
    double omega = omega_of(a.base());
    return ascend(a.coord().convert_to<double>(), static_cast<int>(a.level()),
                  omega);
}

double embed_rat(const LeveledRat& a) {
    double omega = omega_of(a.base());
    double x = a.num().convert_to<double>() / a.den().convert_to<double>();
    return ascend(x, static_cast<int>(a.level()), omega);
}

TowerResult power_tower(double x, double tol, std::uint64_t max_iter) {
    if (!(x > 0.0)) throw domain_error("tower base must be positive");
    double t = x;
    for (std::uint64_t i = 1; i <= max_iter; ++i) {
        double next = std::pow(x, t);
        if (!std::isfinite(next) || next > 1e100)
            return {TowerStatus::Diverged, next, i};
        if (std::fabs(next - t) < tol) return {TowerStatus::Converged, next, i};
        t = next;
    }
    return {TowerStatus::Diverged, t, max_iter};
}

}  // namespace hyperops
