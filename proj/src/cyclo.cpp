#include "wha/cyclo.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace wha {

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
    const std::size_t dn = den.size() - 1;
    IntPoly quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        Integer c = num[k];
        if (c == 0) continue;
        quot[k - dn] = c;
        for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
    }
    trim(num);
    if (!num.empty()) throw std::logic_error("cyclotomic division left a remainder");
    return quot;
}

std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() <= dn) return {{}, num};
    RatPoly quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        if (num[k] == 0) continue;
        Rational c = num[k] / den[dn];
        quot[k - dn] = c;
        for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
    }
    trim(num);
    trim(quot);
    return {quot, num};
}

RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
    RatPoly out(std::max(a.size(), q.size() + b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    trim(out);
    return out;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int m) {
    if (m < 1) throw InputError("cyclotomic_polynomial: m must be positive");
    static std::mutex mu;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    IntPoly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
    std::lock_guard lock(mu);
    cache.emplace(m, p);
    return p;
}

int euler_phi(int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

CycloField::CycloField(int level) : level_(level), degree_(euler_phi(4 * level)) {
    phi_ = cyclotomic_polynomial(4 * level);
    powers_.reserve(4 * level);
    IntPoly cur(degree_, 0);
    cur[0] = 1;
    for (int k = 0; k < 4 * level; ++k) {
        powers_.push_back(cur);
        // multiply by A, then fold A^degree using the monic modulus
        Integer top = cur[degree_ - 1];
        for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < degree_; ++i) cur[i] -= top * phi_[i];
    }
}

const CycloField& CycloField::get(int level) {
    if (level < 1) throw InputError("level must be positive");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> fields;
    std::lock_guard lock(mu);
    auto& slot = fields[level];
    if (!slot) slot = std::make_unique<CycloField>(level);
    return *slot;
}

CycloScalar::CycloScalar(int level, long value) : CycloScalar(level, Rational(value)) {}

CycloScalar::CycloScalar(int level, const Rational& value) : field_(&CycloField::get(level)) {
    if (value == 0) return;
    num_.assign(field_->degree(), 0);
    num_[0] = value.get_num();
    den_ = value.get_den();
}

CycloScalar CycloScalar::from_coefficients(int level, const std::vector<Rational>& coeffs) {
    CycloScalar out;
    out.field_ = &CycloField::get(level);
    if (static_cast<int>(coeffs.size()) != out.field_->degree())
        throw InputError("coefficient vector length must equal phi(4r)");
    Integer den = 1;
    for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
    out.num_.assign(coeffs.size(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out.num_[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    out.den_ = den;
    out.normalize();
    return out;
}

void CycloScalar::normalize() {
    bool zero = true;
    for (const auto& c : num_)
        if (c != 0) { zero = false; break; }
    if (zero) {
        num_.clear();
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    Integer g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (c != 0) g = gcd(g, c);
    }
    if (g != 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

const CycloField* CycloScalar::common_field(const CycloScalar& a, const CycloScalar& b) {
    if (!a.field_) return b.field_;
    if (!b.field_) return a.field_;
    if (a.field_ != b.field_) throw InputError("cyclotomic level mismatch");
    return a.field_;
}

bool CycloScalar::is_one() const {
    if (num_.empty() || den_ != 1 || num_[0] != 1) return false;
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

Rational CycloScalar::coefficient(int i) const {
    if (num_.empty()) return 0;
    Rational r(num_.at(i), den_);
    r.canonicalize();
    return r;
}

std::vector<Rational> CycloScalar::coefficients() const {
    if (!field_) return {};
    std::vector<Rational> out(field_->degree(), 0);
    for (int i = 0; i < static_cast<int>(num_.size()); ++i) out[i] = coefficient(i);
    return out;
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar out = *this;
    for (auto& c : out.num_) c = -c;
    return out;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
    field_ = common_field(*this, o);
    if (o.num_.empty()) return *this;
    if (num_.empty()) {
        num_ = o.num_;
        den_ = o.den_;
        return *this;
    }
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        Integer l = lcm(den_, o.den_);
        Integer fa = l / den_, fb = l / o.den_;
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * fa + o.num_[i] * fb;
        den_ = l;
    }
    normalize();
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
    CycloScalar out;
    out.field_ = CycloScalar::common_field(a, b);
    if (a.num_.empty() || b.num_.empty()) return out;
    const int d = out.field_->degree();
    std::vector<Integer> prod(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (a.num_[i] == 0) continue;
        for (int j = 0; j < d; ++j)
            if (b.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    for (int k = d; k < 2 * d - 1; ++k) {
        if (prod[k] == 0) continue;
        const auto& red = out.field_->power(k);
        for (int i = 0; i < d; ++i)
            if (red[i] != 0) mpz_addmul(prod[i].get_mpz_t(), prod[k].get_mpz_t(), red[i].get_mpz_t());
    }
    prod.resize(d);
    out.num_ = std::move(prod);
    out.den_ = a.den_ * b.den_;
    out.normalize();
    return out;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) { return *this = *this * o; }
CycloScalar& CycloScalar::operator/=(const CycloScalar& o) { return *this = *this / o; }

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    if (a.num_.empty() || b.num_.empty()) return a.num_.empty() && b.num_.empty();
    if (a.field_ != b.field_) throw InputError("cyclotomic level mismatch");
    return a.den_ == b.den_ && a.num_ == b.num_;
}

// Extended Euclid in Q[x] against the modulus.
CycloScalar CycloScalar::inverse() const {
    if (num_.empty()) throw std::domain_error("division by zero in Q(A)");
    RatPoly r0(field_->modulus().begin(), field_->modulus().end());
    RatPoly r1(num_.begin(), num_.end());
    trim(r1);
    RatPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, rem] = divmod(r0, r1);
        RatPoly s2 = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::logic_error("modulus not irreducible");
    std::vector<Rational> coeffs(field_->degree(), 0);
    for (std::size_t i = 0; i < s0.size(); ++i) coeffs[i] = s0[i] * den_ / r0[0];
    return from_coefficients(field_->level(), coeffs);
}

CycloScalar CycloScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloScalar base = *this;
    CycloScalar acc(level() ? level() : 1, 1);
    if (!field_) return e == 0 ? acc : CycloScalar();
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

std::complex<double> CycloScalar::to_complex() const {
    if (num_.empty()) return {0.0, 0.0};
    const double step = std::numbers::pi / (2.0 * field_->level());
    std::complex<double> acc = 0;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        double c = Rational(num_[i], den_).get_d();
        acc += c * std::polar(1.0, step * static_cast<double>(i));
    }
    return acc;
}

std::pair<std::string, std::string> CycloScalar::to_complex(int precision_bits) const {
    // Guard bits absorb cancellation; parts below 2^-precision_bits print as 0.
    const int bits = std::max(precision_bits, 16);
    mpfr_prec_t prec = bits + 64;
    mpfr_t re, im, angle, c, s, coef, tmp;
    for (auto* v : {&re, &im, &angle, &c, &s, &coef, &tmp}) mpfr_init2(*v, prec);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        mpfr_const_pi(angle, MPFR_RNDN);
        mpfr_mul_ui(angle, angle, i, MPFR_RNDN);
        mpfr_div_ui(angle, angle, 2 * field_->level(), MPFR_RNDN);
        mpfr_sin_cos(s, c, angle, MPFR_RNDN);
        mpfr_set_z(coef, num_[i].get_mpz_t(), MPFR_RNDN);
        mpfr_div_z(coef, coef, den_.get_mpz_t(), MPFR_RNDN);
        mpfr_mul(tmp, coef, c, MPFR_RNDN);
        mpfr_add(re, re, tmp, MPFR_RNDN);
        mpfr_mul(tmp, coef, s, MPFR_RNDN);
        mpfr_add(im, im, tmp, MPFR_RNDN);
    }
    const int digits = static_cast<int>(std::ceil(bits * 0.30103));
    auto render = [digits, bits](mpfr_t v) {
        if (mpfr_zero_p(v) || mpfr_get_exp(v) < -bits) return std::string("0");
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", digits, v);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    };
    auto result = std::make_pair(render(re), render(im));
    for (auto* v : {&re, &im, &angle, &c, &s, &coef, &tmp}) mpfr_clear(*v);
    return result;
}

std::string CycloScalar::to_string() const {
    if (num_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        Rational c(num_[i], den_);
        c.canonicalize();
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) os << c.get_str();
        else {
            if (c != 1) os << c.get_str() << "*";
            os << "A";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

CycloScalar a_power(int level, long n) {
    const auto& f = CycloField::get(level);
    long k = ((n % f.order()) + f.order()) % f.order();
    const auto& p = f.power(static_cast<int>(k));
    std::vector<Rational> coeffs(p.begin(), p.end());
    return CycloScalar::from_coefficients(level, coeffs);
}

// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}, q = A^2
CycloScalar quantum_int(int level, long n) {
    if (n < 0) return -quantum_int(level, -n);
    CycloScalar acc(level, 0);
    for (long k = 0; k < n; ++k) acc += a_power(level, 2 * (n - 1 - 2 * k));
    return acc;
}

CycloScalar quantum_factorial(int level, long n) {
    if (n < 0) throw InputError("quantum_factorial of a negative integer");
    CycloScalar acc(level, 1);
    for (long m = 2; m <= n; ++m) acc *= quantum_int(level, m);
    return acc;
}

}  // namespace wha
