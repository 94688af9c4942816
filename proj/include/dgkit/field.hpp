#pragma once

#include "fp.hpp"
#include "rational.hpp"

#include <stdexcept>
#include <string>

namespace dgkit {

enum class FieldKind { Rationals, PrimeField };

// Ground field descriptor: the rationals, or F_p for a prime p.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    long long p = 0;  // prime modulus, present iff PrimeField

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec prime(long long p) {
        if (!is_prime(p))
            throw std::domain_error("FieldSpec: " + std::to_string(p) + " is not prime");
        return {FieldKind::PrimeField, p};
    }

    static bool is_prime(long long n) {
        if (n < 2)
            return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && a.p == b.p;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

    std::string str() const {
        return kind == FieldKind::Rationals ? "Q" : "Fp:" + std::to_string(p);
    }

    // accepts "Q" or "Fp:<p>"
    static FieldSpec parse(const std::string& s) {
        if (s == "Q")
            return rationals();
        if (s.rfind("Fp:", 0) == 0)
            return prime(std::stoll(s.substr(3)));
        throw std::invalid_argument("FieldSpec: cannot parse '" + s + "' (expected Q or Fp:<p>)");
    }
};

// Bridging between the runtime FieldSpec and the compile-time scalar type.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static bool matches(const FieldSpec& fs) { return fs.kind == FieldKind::Rationals; }
    static Rational from_int(const FieldSpec&, long long n) { return Rational(n); }
    static Rational parse(const FieldSpec&, const std::string& s) { return Rational::parse(s); }
};

template <>
struct FieldOps<Fp> {
    static bool matches(const FieldSpec& fs) { return fs.kind == FieldKind::PrimeField; }
    static Fp from_int(const FieldSpec& fs, long long n) { return Fp(n, fs.p); }
    static Fp parse(const FieldSpec& fs, const std::string& s) { return Fp(std::stoll(s), fs.p); }
};

}  // namespace dgkit
