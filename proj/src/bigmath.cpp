#include "xprod/bigmath.hpp"

#include <stdexcept>

namespace xprod {

std::string rat_to_string(const BigRat& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt int_from_string(std::string_view text) {
  if (text.empty()) throw std::domain_error("empty integer literal");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) throw std::domain_error("bare sign in integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw std::domain_error("bad integer literal: " + std::string(text));
  }
  return BigInt(std::string(text));
}

}  // namespace

BigRat rat_from_string(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(int_from_string(text));
  const BigInt num = int_from_string(text.substr(0, slash));
  const BigInt den = int_from_string(text.substr(slash + 1));
  if (den == 0) throw std::domain_error("zero denominator: " + std::string(text));
  return BigRat(num, den);
}

}  // namespace xprod
