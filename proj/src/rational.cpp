#include "hyperchord/rational.hpp"

#include <stdexcept>

namespace hyperchord {

Rat rat_from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rat(BigInt(std::string(text)));
    }
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "': " + e.what());
  }
}

std::string rat_to_string(const Rat& value) {
  std::string num = numerator(value).str();
  if (denominator(value) == 1) return num;
  return num + "/" + denominator(value).str();
}

}  // namespace hyperchord
