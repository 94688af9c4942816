#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dgkit {

/*
 * Prime-field scalar with a runtime modulus. An element with p == 0 is a
 * "generic" integer (produced by integer literals and default construction);
 * it reduces against the other operand's modulus on first contact. This lets
 * field-generic template code write K(0), K(1), K(-1) without threading a
 * field context through every call.
 */
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(long long n) : v_(n), p_(0) {}
    Fp(long long n, long long p) : v_(n), p_(p) {
        if (p < 2)
            throw std::domain_error("Fp: modulus must be >= 2");
        reduce();
    }

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend Fp operator+(Fp a, Fp b) {
        long long p = join(a, b);
        if (p == 0)
            return Fp(a.v_ + b.v_);
        return Fp(a.v_ + b.v_, p);
    }
    friend Fp operator-(Fp a, Fp b) {
        long long p = join(a, b);
        if (p == 0)
            return Fp(a.v_ - b.v_);
        return Fp(a.v_ - b.v_, p);
    }
    friend Fp operator*(Fp a, Fp b) {
        long long p = join(a, b);
        if (p == 0)
            return Fp(checked_mul(a.v_, b.v_));
        return Fp((long long)(((__int128)a.v_ * b.v_) % p), p);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return p_ ? Fp(-v_, p_) : Fp(-v_); }

    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    Fp& operator/=(Fp b) { return *this = *this / b; }

    friend bool operator==(Fp a, Fp b) {
        long long p = join(a, b);
        if (p == 0)
            return a.v_ == b.v_;
        long long x = ((a.v_ % p) + p) % p, y = ((b.v_ % p) + p) % p;
        return x == y;
    }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

    Fp inverse() const {
        if (p_ == 0) {
            if (v_ == 1)
                return Fp(1);
            if (v_ == -1)
                return Fp(-1);
            throw std::domain_error("Fp: inverse of generic integer needs a modulus");
        }
        if (v_ == 0)
            throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        long long t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (r != 1)
            throw std::domain_error("Fp: modulus not prime (no inverse)");
        return Fp(t, p_);
    }

    std::string str() const { return std::to_string(v_); }

  private:
    static long long join(Fp& a, Fp& b) {
        if (a.p_ && b.p_) {
            if (a.p_ != b.p_)
                throw std::domain_error("Fp: mixed moduli " + std::to_string(a.p_) + " and " +
                                        std::to_string(b.p_));
            return a.p_;
        }
        return a.p_ ? a.p_ : b.p_;
    }
    static long long checked_mul(long long a, long long b) {
        __int128 r = (__int128)a * b;
        if (r > INT64_MAX || r < -(__int128)INT64_MAX)
            throw std::overflow_error("Fp: generic integer overflow");
        return (long long)r;
    }
    void reduce() {
        v_ %= p_;
        if (v_ < 0)
            v_ += p_;
    }

    long long v_;
    long long p_;
};

inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

}  // namespace dgkit
