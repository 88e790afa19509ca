#include "lahbell/value.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace lahbell {

const ExactRational& Value::exact() const {
  if (const auto* exact = std::get_if<ExactRational>(&value_)) return *exact;
  throw std::logic_error("value is an approximation, not exact");
}

double Value::approx() const {
  if (const auto* exact = std::get_if<ExactRational>(&value_)) return exact->to_double();
  return std::get<double>(value_);
}

std::string Value::to_string() const {
  if (const auto* exact = std::get_if<ExactRational>(&value_)) return exact->to_string();
  return format_decimal(std::get<double>(value_));
}

std::string format_decimal(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

}  // namespace lahbell
