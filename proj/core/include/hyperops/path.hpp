#pragma once

#include <optional>
#include <vector>

#include "hyperops/budget.hpp"
#include "hyperops/natural.hpp"

namespace hyperops {

// A chain of Peano-system choices: step j+1 climbs step j's carrier by
// applying that carrier's exponential n_{j+1} times. base_coords holds one
// more entry than steps: base_coords[j] is the coordinate (preimage under
// the composed isomorphism) of the exponential base used while climbing out
// of stage j, and the final entry is the current stage's own base, ready for
// the next climb. Every base coordinate must be at least 2: coordinates 0
// and 1 name the excluded identity elements.
class PathIndex {
public:
    explicit PathIndex(Natural root_base);
    PathIndex(std::vector<unsigned> steps, std::vector<Natural> base_coords);

    const std::vector<unsigned>& steps() const noexcept { return steps_; }
    const std::vector<Natural>& base_coords() const noexcept { return base_coords_; }
    const Natural& top_base() const noexcept { return base_coords_.back(); }

    friend bool operator==(const PathIndex&, const PathIndex&) = default;

private:
    std::vector<unsigned> steps_;
    std::vector<Natural> base_coords_;
};

// Appends one step. Without an explicit new base the parent's base follows
// along: its image under the climb keeps the same coordinate, which is the
// choice that keeps the extended exponential pointwise equal to the parent's
// on the new carrier.
PathIndex extend_path(const PathIndex& p, unsigned n_next,
                      std::optional<Natural> w_next = {});

// Element of a path's carrier, stored as the preimage coordinate under the
// composed isomorphism.
class PathNat {
public:
    PathNat(PathIndex path, Natural coord)
        : path_(std::move(path)), coord_(std::move(coord)) {}

    const PathIndex& path() const noexcept { return path_; }
    const Natural& coord() const noexcept { return coord_; }

    friend bool operator==(const PathNat&, const PathNat&) = default;

private:
    PathIndex path_;
    Natural coord_;
};

// Successor of the path carrier: coordinate + 1.
PathNat succ_path(const PathNat& a);

// The m-th operation of the path's Peano system. Coordinates transform by
// plain hyper(m): the operation is the conjugate of H_m under the composed
// isomorphism. The literal recursion over succ_path is kept in the test
// oracles, not here.
PathNat hyper_path(unsigned m, const PathNat& a, const PathNat& b,
                   const Budget& budget = {});

// The carrier's exponential: base^coord by the top base, same path.
PathNat exp_path(const PathNat& a, const Budget& budget = {});

// Exact inverse of exp_path when the coordinate is an exact power.
std::optional<PathNat> log_path(const PathNat& a);

// The same element viewed on the parent path (top step unwound).
PathNat lower_path(const PathNat& a, const Budget& budget = {});

// The denoted plain natural: all steps unwound down to stage zero.
Natural materialize(const PathNat& a, const Budget& budget = {});

}  // namespace hyperops
