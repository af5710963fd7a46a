#include "chasym/grid.hpp"

#include <cmath>
#include <string>

#include "chasym/errors.hpp"

namespace chasym {

void check_grid(const GridField& g, const char* who) {
    if (g.size() < 5) throw SizeError(std::string(who) + ": grid needs at least 5 nodes");
    if (!(g.h > 0.0) || !std::isfinite(g.h)) throw DomainError(std::string(who) + ": grid spacing must be positive");
}

}  // namespace chasym
