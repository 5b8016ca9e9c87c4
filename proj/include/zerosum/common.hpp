#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace zerosum {

// Elements of a finite Abelian group are handled internally as dense
// indices into the group's element table (see Group in abelian.hpp).
using elem_t = std::uint16_t;

// Thrown when an operation would exceed its documented enumeration or
// search budget. CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Uniform draw from [0, m) by rejection sampling. mt19937_64 has a
// standardized sequence, so results are reproducible across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % m;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % m;
}

}  // namespace zerosum
