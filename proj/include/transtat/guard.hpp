#pragma once

#include <cstddef>

namespace transtat {

/// Global cap on the ambient dimension of any matrix axis.  Tensor-power
/// constructions check against it before allocating, so oversized inputs
/// fail with a clear error instead of exhausting memory.
namespace guard {

constexpr std::size_t kDefaultLimit = 20000;

std::size_t limit();
void set_limit(std::size_t value);

/// Throws GuardError when `dim` exceeds the current limit.
void check(std::size_t dim, const char* what);

/// Computes base^exponent, guarding against both overflow and the limit.
std::size_t checked_power(std::size_t base, std::size_t exponent, const char* what);

}  // namespace guard
}  // namespace transtat
