#include "coarse/number.hpp"

#include <cctype>
#include <cstdio>

#include "coarse/errors.hpp"

namespace coarse {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view text) {
  throw ParseError("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Number parse_number(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Number result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(original);
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(original) + "'");
    result = Number(Integer(std::string(num), 10), d);
    result.canonicalize();
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad(original);
    }
    std::string digits = std::string(whole) + std::string(frac);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = Number(Integer(digits.empty() ? "0" : digits, 10), scale);
    result.canonicalize();
  } else {
    if (!all_digits(text)) bad(original);
    result = Number(Integer(std::string(text), 10));
  }
  return negative ? Number(-result) : result;
}

std::string to_string(const Number& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Number& value, int digits) {
  if (is_integer(value)) return value.get_num().get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value.get_d());
  return buf;
}

bool is_integer(const Number& value) { return value.get_den() == 1; }

Integer floor(const Number& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

}  // namespace coarse
