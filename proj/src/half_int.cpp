#include "hflkit/half_int.hpp"

#include <charconv>
#include <stdexcept>

namespace hflkit {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(parse_integer(text, text));
  const std::int64_t num = parse_integer(text.substr(0, slash), text);
  const std::int64_t den = parse_integer(text.substr(slash + 1), text);
  if (den == 1) return from_int(num);
  if (den != 2) throw std::invalid_argument("denominator must be 1 or 2: '" + std::string(text) + "'");
  return from_twice(num);
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace hflkit
