#include "quadlie/rational.hpp"

#include <cctype>
#include <ostream>

namespace quadlie {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  // mpq accepts whitespace and leading '+' inconsistently; be strict instead.
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(text)) throw std::invalid_argument("Rational: bad integer '" + text + "'");
  } else {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
      throw std::invalid_argument("Rational: bad fraction '" + text + "'");
    if (mpz_class(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  }
  mpq_class v(text);
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace quadlie
