#include "honlb/format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace honlb {

std::string format_real(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  if (value == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

}  // namespace honlb
