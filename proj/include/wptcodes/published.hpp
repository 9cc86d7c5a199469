#pragma once

// Reference parameter tables for P(1,1,a) over F_5 as they appear in print.
// The a = 2 table lists [8,1,8] at alpha = 5; the computed value there is [8,8,1].

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wpt {

struct PublishedRow {
  std::int64_t alpha;
  std::int64_t length;
  std::int64_t dimension;
  std::int64_t distance;

  std::string bracket() const {
    return "[" + std::to_string(length) + "," + std::to_string(dimension) + "," + std::to_string(distance) + "]";
  }
};

inline std::optional<std::vector<PublishedRow>> published_table(std::uint64_t q, std::int64_t a) {
  if (q == 5 && a == 2)
    return std::vector<PublishedRow>{
        {0, 8, 1, 8}, {1, 8, 2, 6}, {2, 8, 4, 4}, {3, 8, 6, 2}, {4, 8, 7, 2}, {5, 8, 1, 8},
    };
  if (q == 5 && a == 3)
    return std::vector<PublishedRow>{
        {0, 16, 1, 16}, {1, 16, 2, 12}, {2, 16, 3, 8},  {3, 16, 5, 4},   {4, 16, 6, 4},   {5, 16, 7, 4},
        {6, 16, 9, 3},  {7, 16, 10, 3}, {8, 16, 11, 3}, {9, 16, 13, 2}, {10, 16, 14, 2}, {11, 16, 15, 2},
    };
  return std::nullopt;
}

inline std::optional<PublishedRow> published_row(std::uint64_t q, std::int64_t a, std::int64_t alpha) {
  auto table = published_table(q, a);
  if (!table) return std::nullopt;
  for (const auto& r : *table)
    if (r.alpha == alpha) return r;
  return std::nullopt;
}

}  // namespace wpt
