#ifndef QCORBIT_CONFIG_HPP
#define QCORBIT_CONFIG_HPP

#include <string>

#include "qcorbit/code.hpp"

namespace qcorbit {

/// Parses the line-oriented code description:
///
///   # comment
///   code q=<int> m=<int> l=<int>
///   constituent coset=<int>
///   row <entry> | <entry> | ...
///
/// with entry ::= 0 | g | polynomial, polynomial ::= term (+ term)*,
/// term ::= coeff | coeff*x^<exp> | x^<exp> | x, and coeff an integer
/// (reduced mod p) or w^<int> (a power of the first primitive element of
/// F_q; non-prime q only).
///
/// Validates q (prime power), gcd(m, q) = 1, l >= 2, entry counts,
/// polynomial degrees and pairwise-distinct constituent cosets. Throws
/// ParseError / InvalidInput with a distinct message per failure.
QccSpec parse_config(const std::string& text);

} // namespace qcorbit

#endif
