#pragma once

#include <stdexcept>
#include <string>

#include "osq/poly.hpp"

namespace osq {

struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := [int] ('*' factor)* | factor ('*' factor)*
///   factor := 'q' ['^' uint] | 't' uint ['^' uint] | uint
/// Whitespace is ignored. 't' indices are 1-based ground labels; t0 is the
/// homogenizing variable and q = t0^2. Exponents expand to repeated letters.
FreePolynomial parse_poly(const std::string& text, OrderPtr ord);

/// Canonical text: terms in decreasing deglex order, q printed for t0^2.
/// parse_poly(print_poly(f)) == f.
std::string print_poly(const FreePolynomial& f);

}  // namespace osq
