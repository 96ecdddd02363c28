#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coarse {

// Exact rational. gmpxx arithmetic stays canonical, but the two-argument
// constructor does not reduce, so build fractions by division.
using Number = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", integers and plain decimals ("0.5" -> 1/2, "-1.25").
// Throws ParseError.
Number parse_number(std::string_view text);

// Canonical "p/q" form, always with a denominator ("4/1", "-1/2").
std::string to_string(const Number& value);

// Human-readable decimal, `digits` significant digits.
std::string to_decimal(const Number& value, int digits = 6);

bool is_integer(const Number& value);

// Largest integer <= value.
Integer floor(const Number& value);

}  // namespace coarse
