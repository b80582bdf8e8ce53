#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace superalg {

// Exact rationals. GMP keeps mpq_class canonical (reduced, positive
// denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& x);

// Accepts only the canonical spelling produced by to_string: no "+", no
// leading zeros, no "-0", no "/1", reduced fraction.
std::optional<Scalar> parse_scalar(std::string_view text);

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
void axpy(Vec& y, const Scalar& a, const Vec& x);
Scalar dot(const Vec& a, const Vec& b);
std::string to_string(const Vec& v);

// Canonical total order used for deterministic choices: compare numerator
// first, then denominator.
bool canonical_less(const Scalar& a, const Scalar& b);

}  // namespace superalg
