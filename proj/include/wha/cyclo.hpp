#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wha {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised for caller mistakes: level mismatch, inadmissible labels, bad arity.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Coefficients low degree first.
std::vector<Integer> cyclotomic_polynomial(int m);

int euler_phi(int m);

// Q(A) with A a primitive 4r-th root of unity. One shared instance per level.
class CycloField {
public:
    static const CycloField& get(int level);

    int level() const { return level_; }
    int order() const { return 4 * level_; }
    int degree() const { return degree_; }
    const std::vector<Integer>& modulus() const { return phi_; }
    // A^k reduced modulo Phi_{4r}, 0 <= k < 4r.
    const std::vector<Integer>& power(int k) const { return powers_[k]; }

    explicit CycloField(int level);

private:
    int level_;
    int degree_;
    std::vector<Integer> phi_;
    std::vector<std::vector<Integer>> powers_;
};

// Element of Q(A), stored as integer numerators over one positive common
// denominator, always reduced modulo Phi_{4r} and normalized.  A
// default-constructed value is a level-free zero that adopts the level of
// whatever it is combined with.
class CycloScalar {
public:
    CycloScalar() = default;
    CycloScalar(int level, long value);
    CycloScalar(int level, const Rational& value);
    static CycloScalar from_coefficients(int level, const std::vector<Rational>& coeffs);

    int level() const { return field_ ? field_->level() : 0; }
    const CycloField* field() const { return field_; }
    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    Rational coefficient(int i) const;
    std::vector<Rational> coefficients() const;

    CycloScalar operator-() const;
    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    CycloScalar& operator*=(const CycloScalar& o);
    CycloScalar& operator/=(const CycloScalar& o);
    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
    friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }
    friend bool operator==(const CycloScalar& a, const CycloScalar& b);

    CycloScalar inverse() const;
    CycloScalar pow(long e) const;

    std::complex<double> to_complex() const;
    // Returns decimal strings (real, imag) rounded to the given bit precision.
    std::pair<std::string, std::string> to_complex(int precision_bits) const;
    std::string to_string() const;

private:
    void normalize();
    static const CycloField* common_field(const CycloScalar& a, const CycloScalar& b);

    const CycloField* field_ = nullptr;
    std::vector<Integer> num_;  // empty means zero; otherwise length degree
    Integer den_ = 1;
};

CycloScalar a_power(int level, long n);
CycloScalar quantum_int(int level, long n);
CycloScalar quantum_factorial(int level, long n);

}  // namespace wha
