#include "superalg/scalar.hpp"
#include "superalg/errors.hpp"

#include <regex>

namespace superalg {

std::string to_string(const Scalar& x) { return x.get_str(); }

std::optional<Scalar> parse_scalar(std::string_view text) {
    static const std::regex pattern("-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?");
    std::string s(text);
    if (!std::regex_match(s, pattern)) return std::nullopt;
    if (s == "-0" || s.starts_with("-0/") || s.starts_with("0/")) return std::nullopt;
    Scalar value;
    if (value.set_str(s, 10) != 0) return std::nullopt;
    value.canonicalize();
    if (value.get_str() != s) return std::nullopt;
    return value;
}

Vec zeros(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit(std::size_t n, std::size_t i) {
    Vec v = zeros(n);
    v[i] = 1;
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

static void require_same(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        fail(ErrorCode::DimensionMismatch,
             "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    r += b;
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    r -= b;
    return r;
}

Vec operator-(const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = -x;
    return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= s;
    return r;
}

Vec& operator+=(Vec& a, const Vec& b) {
    require_same(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
    require_same(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    require_same(y, x);
    if (a == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i] != 0) y[i] += a * x[i];
}

Scalar dot(const Vec& a, const Vec& b) {
    require_same(a, b);
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

std::string to_string(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

bool canonical_less(const Scalar& a, const Scalar& b) {
    int c = cmp(a.get_num(), b.get_num());
    if (c != 0) return c < 0;
    return a.get_den() < b.get_den();
}

}  // namespace superalg
