#include "assignment.hpp"

#include <algorithm>
#include <limits>

namespace reconf::detail {

std::vector<std::size_t> solve_assignment(std::span<const Count> cost, std::size_t k) {
  constexpr Count kInf = std::numeric_limits<Count>::max() / 4;
  // 1-based columns; column 0 is the virtual root of each augmenting search.
  std::vector<Count> row_pot(k + 1, 0), col_pot(k + 1, 0), min_slack(k + 1);
  std::vector<std::size_t> col_row(k + 1, 0), way(k + 1, 0);
  std::vector<char> used(k + 1);

  for (std::size_t row = 1; row <= k; ++row) {
    col_row[0] = row;
    std::size_t col = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col] = 1;
      const std::size_t r = col_row[col];
      Count delta = kInf;
      std::size_t next = 0;
      for (std::size_t j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const Count slack = cost[(r - 1) * k + (j - 1)] - row_pot[r] - col_pot[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = col;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          next = j;
        }
      }
      for (std::size_t j = 0; j <= k; ++j) {
        if (used[j]) {
          row_pot[col_row[j]] += delta;
          col_pot[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col = next;
    } while (col_row[col] != 0);
    // Flip the alternating path back to the root.
    do {
      const std::size_t prev = way[col];
      col_row[col] = col_row[prev];
      col = prev;
    } while (col != 0);
  }

  std::vector<std::size_t> assignment(k);
  for (std::size_t j = 1; j <= k; ++j) assignment[col_row[j] - 1] = j - 1;
  return assignment;
}

}  // namespace reconf::detail
