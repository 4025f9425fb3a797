#include "hyperops/path.hpp"

#include <utility>

#include "hyperops/errors.hpp"
#include "hyperops/kernel.hpp"

namespace hyperops {

namespace {

void require_base_coord(const Natural& b) {
    if (b < Natural(2)) throw invalid_base("base coordinate must be at least 2");
}

}  // namespace

PathIndex::PathIndex(Natural root_base) {
    require_base_coord(root_base);
    base_coords_.push_back(std::move(root_base));
}

PathIndex::PathIndex(std::vector<unsigned> steps, std::vector<Natural> base_coords)
    : steps_(std::move(steps)), base_coords_(std::move(base_coords)) {
    if (base_coords_.size() != steps_.size() + 1)
        throw path_mismatch("a path needs one base coordinate per stage");
    for (const Natural& b : base_coords_) require_base_coord(b);
}

PathIndex extend_path(const PathIndex& p, unsigned n_next,
                      std::optional<Natural> w_next) {
    Natural next = w_next ? std::move(*w_next) : p.top_base();
    require_base_coord(next);
    std::vector<unsigned> steps = p.steps();
    steps.push_back(n_next);
    std::vector<Natural> bases = p.base_coords();
    bases.push_back(std::move(next));
    return PathIndex(std::move(steps), std::move(bases));
}

PathNat succ_path(const PathNat& a) {
    Natural next = a.coord();
    ++next;
    return PathNat(a.path(), std::move(next));
}

PathNat hyper_path(unsigned m, const PathNat& a, const PathNat& b,
                   const Budget& budget) {
    if (a.path() != b.path())
        throw path_mismatch("operands live on different paths");
    return PathNat(a.path(), hyper(m, a.coord(), b.coord(), budget));
}

PathNat exp_path(const PathNat& a, const Budget& budget) {
    return PathNat(a.path(), exp_base(a.coord(), a.path().top_base(), budget));
}

std::optional<PathNat> log_path(const PathNat& a) {
    auto k = log_base(a.coord(), a.path().top_base());
    if (!k) return std::nullopt;
    return PathNat(a.path(), std::move(*k));
}

PathNat lower_path(const PathNat& a, const Budget& budget) {
    const PathIndex& p = a.path();
    if (p.steps().empty()) throw path_mismatch("the root path has no parent");
    const std::size_t k = p.steps().size();
    const Natural& base = p.base_coords()[k - 1];
    Natural x = a.coord();
    for (unsigned i = 0; i < p.steps()[k - 1]; ++i) x = exp_base(x, base, budget);
    PathIndex parent(std::vector<unsigned>(p.steps().begin(), p.steps().end() - 1),
                     std::vector<Natural>(p.base_coords().begin(),
                                          p.base_coords().end() - 1));
    return PathNat(std::move(parent), std::move(x));
}

Natural materialize(const PathNat& a, const Budget& budget) {
    Natural x = a.coord();
    const auto& steps = a.path().steps();
    const auto& bases = a.path().base_coords();
    for (std::size_t i = steps.size(); i-- > 0;)
        for (unsigned j = 0; j < steps[i]; ++j) x = exp_base(x, bases[i], budget);
    return x;
}

}  // namespace hyperops
