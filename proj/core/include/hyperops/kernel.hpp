#pragma once

#include <functional>
#include <optional>

#include "hyperops/budget.hpp"
#include "hyperops/natural.hpp"

namespace hyperops {

// Regular hyperoperation H_n:
//   H_0(a,b) = b+1; H_1(a,0) = a; H_2(a,0) = 0; H_{n>=3}(a,0) = 1;
//   H_n(a,b) = H_{n-1}(a, H_n(a,b-1)) otherwise.
// n in {1,2,3} run on native add/multiply/power; n >= 4 unfolds under the
// budget with memoization keyed on (n,a,b).
Natural hyper(unsigned n, const Natural& a, const Natural& b, const Budget& budget = {});

// Height-h power tower of w: h=-1 -> 0, h=0 -> 1, h -> w^tetration(w,h-1).
// h < -1 is a precondition violation (domain_error); the tower is only
// extended one step below zero.
Natural tetration(const Natural& w, long long h, const Budget& budget = {});

// w0^a, the base-w0 exponential E.
Natural exp_base(const Natural& a, const Natural& w0, const Budget& budget = {});

// Exact inverse of exp_base: the unique k with w0^k = a, or empty when a is
// not an exact power. Integer arithmetic only.
std::optional<Natural> log_base(const Natural& a, const Natural& w0);

// Largest n such that a lies in the n-fold image of exp_base; 0 for a = 0.
unsigned filtration_level(const Natural& a, const Natural& w0);

using UnaryFn = std::function<Natural(const Natural&)>;
using PartialUnaryFn = std::function<std::optional<Natural>(const Natural&)>;
using BinaryFn = std::function<Natural(const Natural&, const Natural&)>;

// Conjugation f(op(f_inv(a), f_inv(b))). Throws not_in_image when f_inv
// rejects an operand.
Natural adjoint_op(const UnaryFn& f, const PartialUnaryFn& f_inv, const BinaryFn& op,
                   const Natural& a, const Natural& b);

}  // namespace hyperops
