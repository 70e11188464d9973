#include "latmorse/rational.hpp"

#include "latmorse/common.hpp"

#include <cstdlib>

namespace latmorse {

Rat parse_rational(const std::string& s) {
  require(!s.empty(), Errc::ParseError, "empty rational literal");
  std::size_t slash = s.find('/');
  try {
    std::size_t used = 0;
    long long num = std::stoll(s.substr(0, slash), &used);
    if (slash == std::string::npos) {
      require(used == s.size(), Errc::ParseError, "trailing characters in rational: " + s);
      return Rat(num);
    }
    require(used == slash, Errc::ParseError, "bad numerator in rational: " + s);
    std::string den_part = s.substr(slash + 1);
    long long den = std::stoll(den_part, &used);
    require(used == den_part.size(), Errc::ParseError, "bad denominator in rational: " + s);
    require(den != 0, Errc::ParseError, "zero denominator: " + s);
    return Rat(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "unparsable rational: " + s);
  }
}

std::string format_rational(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace latmorse
