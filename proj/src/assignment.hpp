#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "reconf/graph.hpp"

namespace reconf::detail {

/**
   Square linear assignment by shortest augmenting paths with dual potentials
   (Jonker-Volgenant family). `cost` is row-major k x k. Rows are inserted in
   index order, which fixes tie-breaking. Returns the column of each row.

   Time complexity: O(k^3)
 */
std::vector<std::size_t> solve_assignment(std::span<const Count> cost, std::size_t k);

}  // namespace reconf::detail
