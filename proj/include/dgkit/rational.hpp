#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dgkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

namespace detail {

inline unsigned __int128 uabs128(__int128 x) {
    return x < 0 ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
}

inline unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// symmetric bound so that negation never overflows
constexpr __int128 kFit = static_cast<__int128>(INT64_MAX);

inline bool fits64(__int128 x) {
    return x <= kFit && x >= -kFit;
}

}  // namespace detail

/*
 * Exact rational scalar. Values whose numerator and denominator fit in 64
 * bits are kept in machine words; anything larger transparently promotes to
 * arbitrary precision (boost cpp_rational) and demotes back when it shrinks.
 * Always normalized: den > 0, gcd(num, den) = 1.
 */
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (d == 0)
            throw std::domain_error("Rational: zero denominator");
        normalize_small();
    }
    explicit Rational(const BigRat& b) { set_big(b); }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_)
            big_ = std::make_unique<BigRat>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<BigRat>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    bool is_zero() const { return big_ ? big_->is_zero() : num_ == 0; }
    bool is_one() const { return big_ ? *big_ == 1 : (num_ == 1 && den_ == 1); }
    bool is_small() const { return big_ == nullptr; }

    long long num64() const {
        if (big_)
            throw std::overflow_error("Rational: numerator exceeds 64 bits");
        return num_;
    }
    long long den64() const {
        if (big_)
            throw std::overflow_error("Rational: denominator exceeds 64 bits");
        return den_;
    }

    BigRat to_big() const {
        if (big_)
            return *big_;
        return BigRat(BigInt(num_), BigInt(den_));
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.big_ || b.big_)
            return Rational(a.to_big() + b.to_big());
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from128(n, d, a, b, Op::Add);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.big_ || b.big_)
            return Rational(a.to_big() - b.to_big());
        __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from128(n, d, a, b, Op::Sub);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.big_ || b.big_)
            return Rational(a.to_big() * b.to_big());
        __int128 n = (__int128)a.num_ * b.num_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from128(n, d, a, b, Op::Mul);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw std::domain_error("Rational: division by zero");
        if (a.big_ || b.big_)
            return Rational(a.to_big() / b.to_big());
        __int128 n = (__int128)a.num_ * b.den_;
        __int128 d = (__int128)a.den_ * b.num_;
        return from128(n, d, a, b, Op::Div);
    }
    Rational operator-() const {
        if (big_)
            return Rational(BigRat(-*big_));
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_)
            return a.num_ == b.num_ && a.den_ == b.den_;
        return a.to_big() == b.to_big();
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_)
            return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
        return a.to_big() < b.to_big();
    }

    Rational inverse() const {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        return Rational(1) / *this;
    }

    std::string str() const {
        if (big_) {
            if (boost::multiprecision::denominator(*big_) == 1)
                return boost::multiprecision::numerator(*big_).str();
            return big_->str();
        }
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // parses "p", "-p", or "p/q"
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(BigRat(BigInt(s)));
            BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
            if (q == 0)
                throw std::domain_error("Rational: zero denominator");
            if (q < 0) {
                p = -p;
                q = -q;
            }
            return Rational(BigRat(p, q));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

  private:
    enum class Op { Add, Sub, Mul, Div };

    static Rational from128(__int128 n, __int128 d, const Rational& a, const Rational& b, Op op) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0)
            return Rational();
        unsigned __int128 g = detail::gcd128(detail::uabs128(n), (unsigned __int128)d);
        n /= (__int128)g;
        d /= (__int128)g;
        if (detail::fits64(n) && detail::fits64(d)) {
            Rational r;
            r.num_ = (long long)n;
            r.den_ = (long long)d;
            return r;
        }
        // rare: redo exactly in arbitrary precision
        BigRat x = a.to_big(), y = b.to_big();
        switch (op) {
            case Op::Add: return Rational(BigRat(x + y));
            case Op::Sub: return Rational(BigRat(x - y));
            case Op::Mul: return Rational(BigRat(x * y));
            default: return Rational(BigRat(x / y));
        }
    }

    void set_big(const BigRat& b) {
        BigInt n = boost::multiprecision::numerator(b);
        BigInt d = boost::multiprecision::denominator(b);
        if (n >= INT64_MIN + 1 && n <= INT64_MAX && d <= INT64_MAX) {
            num_ = n.convert_to<long long>();
            den_ = d.convert_to<long long>();
            big_ = nullptr;
        } else {
            num_ = 0;
            den_ = 1;
            big_ = std::make_unique<BigRat>(b);
        }
    }

    void normalize_small() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
    }

    long long num_;
    long long den_;
    std::unique_ptr<BigRat> big_;  // null on the fast path
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dgkit
