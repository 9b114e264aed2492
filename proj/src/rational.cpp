#include "bns/rational.hpp"

#include <algorithm>
#include <cctype>

#include "bns/errors.hpp"

namespace bns {
namespace {

Int parse_int(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw ParseError("", "not a rational number: \"" + std::string(whole) + "\"");
  }
  return Int(std::string(text[0] == '+' ? text.substr(1) : text));
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text, text));
  const Int num = parse_int(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("", "denominator must be unsigned: \"" + std::string(text) + "\"");
  }
  const Int den = parse_int(den_text, text);
  if (den.is_zero()) throw ParseError("", "zero denominator: \"" + std::string(text) + "\"");
  return Rat(num, den);
}

std::string to_string(const Rat& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace bns
