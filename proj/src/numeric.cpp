#include "udca/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace udca {

std::optional<IntVec> to_int(const RatVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (denominator(v[i]) != 1) return std::nullopt;
        out[i] = numerator(v[i]);
    }
    return out;
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

namespace {
template <typename V>
V add_impl(const V& a, const V& b) {
    V r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
template <typename V>
V sub_impl(const V& a, const V& b) {
    V r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
}  // namespace

IntVec add(const IntVec& a, const IntVec& b) { return add_impl(a, b); }
IntVec sub(const IntVec& a, const IntVec& b) { return sub_impl(a, b); }
RatVec add(const RatVec& a, const RatVec& b) { return add_impl(a, b); }
RatVec sub(const RatVec& a, const RatVec& b) { return sub_impl(a, b); }

IntVec negate(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

RatVec scale(const RatVec& a, const Rat& s) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

IntVec scale(const IntVec& a, const Int& s) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

// cpp_int division truncates toward zero; adjust for mathematical rounding.
Int half_floor(const Int& n) { return n >= 0 ? Int(n / 2) : Int((n - 1) / 2); }
Int half_ceil(const Int& n) { return n >= 0 ? Int((n + 1) / 2) : Int(n / 2); }

Int rat_floor(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g < 0 ? Int(-g) : g;
}

IntVec primitive(const IntVec& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

IntVec primitive_signed(const IntVec& v) {
    IntVec r = primitive(v);
    for (const Int& x : r) {
        if (x > 0) return r;
        if (x < 0) return negate(r);
    }
    return r;
}

IntVec primitive_direction(const RatVec& v) {
    Int mult = 1;
    for (const Rat& x : v) mult = lcm(mult, denominator(x));
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = numerator(v[i]) * (mult / denominator(v[i]));
    return primitive(r);
}

namespace {
template <typename V>
bool lex_less_impl(const V& a, const V& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}
}  // namespace

bool lex_less(const IntVec& a, const IntVec& b) { return lex_less_impl(a, b); }
bool lex_less(const RatVec& a, const RatVec& b) { return lex_less_impl(a, b); }

std::string format_rat(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

namespace {
template <typename V, typename F>
std::string format_vec_impl(const V& v, F fmt) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += fmt(v[i]);
    }
    return s + ")";
}
}  // namespace

std::string format_vec(const IntVec& v) {
    return format_vec_impl(v, [](const Int& x) { return x.str(); });
}

std::string format_vec(const RatVec& v) {
    return format_vec_impl(v, [](const Rat& x) { return format_rat(x); });
}

}  // namespace udca
