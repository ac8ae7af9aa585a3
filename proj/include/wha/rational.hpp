#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>
#include <string_view>
#include <type_traits>

#include "wha/errors.hpp"

namespace wha {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational scalar. Always held in lowest terms with positive
// denominator (maintained by the backing cpp_rational).
class Rational {
public:
    Rational() : v_(0) {}
    template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
    Rational(T n) : v_(static_cast<long long>(n)) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long long num, long long den) : v_(num) {
        check_den(den != 0);
        v_ /= BigRat(den);
    }
    Rational(const BigInt& num, const BigInt& den) : v_(num) {
        check_den(den != 0);
        v_ /= BigRat(den);
    }
    explicit Rational(const BigRat& v) : v_(v) {}

    static Rational parse(std::string_view s);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(BigRat(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorKind::Internal, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    // Serialized as "p/q", or "p" when q = 1.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    double to_double() const { return v_.convert_to<double>(); }

private:
    static void check_den(bool nonzero) {
        if (!nonzero) throw Error(ErrorKind::ParseError, "zero denominator");
    }

    BigRat v_;
};

inline Rational Rational::parse(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    s = s.substr(a, b - a);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational literal");

    auto is_int_literal = [](std::string_view t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    size_t slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int_literal(s))
                throw Error(ErrorKind::ParseError, "bad rational literal '" + std::string(s) + "'");
            return Rational(BigInt(std::string(s)));
        }
        std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (!is_int_literal(ns) || !is_int_literal(ds))
            throw Error(ErrorKind::ParseError, "bad rational literal '" + std::string(s) + "'");
        BigInt num{std::string(ns)}, den{std::string(ds)};
        if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(s) + "'");
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("rational parse: ") + e.what());
    }
}

}  // namespace wha
