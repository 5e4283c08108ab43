#include "transtat/guard.hpp"

#include <atomic>
#include <string>

#include "transtat/errors.hpp"

namespace transtat::guard {

namespace {
std::atomic<std::size_t> g_limit{kDefaultLimit};
}

std::size_t limit() { return g_limit.load(); }

void set_limit(std::size_t value) { g_limit.store(value); }

void check(std::size_t dim, const char* what) {
  const std::size_t cap = limit();
  if (dim > cap) {
    throw GuardError(std::string(what) + ": dimension " + std::to_string(dim) +
                     " exceeds guard limit " + std::to_string(cap));
  }
}

std::size_t checked_power(std::size_t base, std::size_t exponent, const char* what) {
  const std::size_t cap = limit();
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base) {
      throw GuardError(std::string(what) + ": " + std::to_string(base) + "^" +
                       std::to_string(exponent) + " exceeds guard limit " +
                       std::to_string(cap));
    }
    result *= base;
  }
  check(result, what);
  return result;
}

}  // namespace transtat::guard
