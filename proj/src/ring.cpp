#include "refsev/ring.hpp"

#include <cstdlib>
#include <sstream>
#include <vector>

namespace refsev {

BigInt factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

std::string GaussianInt::str() const {
    std::ostringstream os;
    if (im == 0) {
        os << re;
    } else {
        os << re << (im > 0 ? "+" : "-") << abs(im) << "i";
    }
    return os.str();
}

LaurentY::LaurentY(long value) {
    if (value != 0) terms_[0] = value;
}

LaurentY::LaurentY(BigInt value) {
    if (value != 0) terms_[0] = std::move(value);
}

LaurentY LaurentY::term(int e2, BigInt coeff) {
    LaurentY p;
    if (coeff != 0) p.terms_[e2] = std::move(coeff);
    return p;
}

BigInt LaurentY::coeff(int e2) const {
    auto it = terms_.find(e2);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentY::min_exponent2() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentY::max_exponent2() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

void LaurentY::add_term(int e2, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e2, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentY& LaurentY::operator+=(const LaurentY& rhs) {
    for (const auto& [e2, c] : rhs.terms_) add_term(e2, c);
    return *this;
}

LaurentY& LaurentY::operator-=(const LaurentY& rhs) {
    for (const auto& [e2, c] : rhs.terms_) add_term(e2, -c);
    return *this;
}

LaurentY LaurentY::operator+(const LaurentY& rhs) const {
    LaurentY r = *this;
    r += rhs;
    return r;
}

LaurentY LaurentY::operator-(const LaurentY& rhs) const {
    LaurentY r = *this;
    r -= rhs;
    return r;
}

LaurentY LaurentY::operator-() const {
    LaurentY r;
    for (const auto& [e2, c] : terms_) r.terms_[e2] = -c;
    return r;
}

LaurentY LaurentY::operator*(const LaurentY& rhs) const {
    LaurentY r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentY& LaurentY::operator*=(const LaurentY& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentY LaurentY::operator*(const BigInt& scalar) const {
    LaurentY r;
    if (scalar == 0) return r;
    for (const auto& [e2, c] : terms_) r.terms_[e2] = c * scalar;
    return r;
}

bool LaurentY::is_symmetric() const {
    for (const auto& [e2, c] : terms_)
        if (coeff(-e2) != c) return false;
    return true;
}

bool LaurentY::has_negative_coeff() const {
    for (const auto& [e2, c] : terms_)
        if (c < 0) return true;
    return false;
}

GaussianInt LaurentY::eval(EvalPoint point) const {
    GaussianInt v{0, 0};
    for (const auto& [e2, c] : terms_) {
        if (point == EvalPoint::One) {
            v.re += c;
        } else {
            // y^(1/2) -> i, so a term c*y^(e2/2) contributes c*i^e2.
            switch (((e2 % 4) + 4) % 4) {
                case 0: v.re += c; break;
                case 1: v.im += c; break;
                case 2: v.re -= c; break;
                case 3: v.im -= c; break;
            }
        }
    }
    return v;
}

BigInt LaurentY::content() const {
    BigInt g = 0;
    for (const auto& [e2, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentY LaurentY::divided_by(const BigInt& g) const {
    if (g == 0) throw DomainError("division by zero");
    LaurentY r;
    for (const auto& [e2, c] : terms_) {
        BigInt q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        if (rem != 0) throw DomainError("inexact integer division of coefficients");
        r.terms_[e2] = q;
    }
    return r;
}

std::string LaurentY::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e2, c] : terms_) {
        BigInt a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        if (e2 == 0) {
            mono = "";
        } else if (e2 == 2) {
            mono = "y";
        } else if (e2 % 2 == 0) {
            mono = "y^" + std::to_string(e2 / 2);
        } else {
            mono = "y^(" + std::to_string(e2) + "/2)";
        }
        if (mono.empty()) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << mono;
        }
    }
    return os.str();
}

LaurentY quantum_integer(long n) {
    LaurentY p;
    if (n == 0) return p;
    const long m = n > 0 ? n : -n;
    // [m] has terms y^((m-1)/2), y^((m-3)/2), ..., y^(-(m-1)/2).
    for (long k = 0; k < m; ++k)
        p += LaurentY::term(static_cast<int>(m - 1 - 2 * k), n > 0 ? 1 : -1);
    return p;
}

LaurentY divide_exact(const LaurentY& num, const LaurentY& den) {
    if (den.is_zero()) throw DomainError("division by zero polynomial");
    LaurentY rem = num;
    LaurentY quot;
    const int dlead = den.max_exponent2();
    const BigInt dc = den.coeff(dlead);
    // In an exact division every quotient term has exponent at least
    // num.min - den.min; dropping below that floor means the division is a
    // non-terminating power-series expansion, not a polynomial quotient.
    const int floor_e2 = num.is_zero() ? 0 : num.min_exponent2() - den.min_exponent2();
    while (!rem.is_zero()) {
        const int rlead = rem.max_exponent2();
        if (rlead - dlead < floor_e2) throw DomainError("inexact polynomial division");
        const BigInt rc = rem.coeff(rlead);
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rc.get_mpz_t(), dc.get_mpz_t());
        if (r != 0) throw DomainError("inexact polynomial division");
        LaurentY t = LaurentY::term(rlead - dlead, q);
        quot += t;
        rem -= den * t;
        if (!rem.is_zero() && rem.max_exponent2() >= rlead)
            throw DomainError("inexact polynomial division");
    }
    return quot;
}

RationalLaurentY::RationalLaurentY(LaurentY num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    reduce();
}

void RationalLaurentY::reduce() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ == 1) return;
    BigInt g;
    BigInt c = num_.content();
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        num_ = num_.divided_by(g);
        den_ /= g;
    }
}

const LaurentY& RationalLaurentY::as_integral() const {
    if (den_ != 1)
        throw DomainError("denominator did not clear: " + str());
    return num_;
}

RationalLaurentY& RationalLaurentY::operator+=(const RationalLaurentY& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    if (num_.is_zero())
        den_ = 1;
    else
        reduce();
    return *this;
}

RationalLaurentY RationalLaurentY::operator+(const RationalLaurentY& rhs) const {
    RationalLaurentY r = *this;
    r += rhs;
    return r;
}

RationalLaurentY RationalLaurentY::operator-() const {
    RationalLaurentY r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalLaurentY RationalLaurentY::operator*(const RationalLaurentY& rhs) const {
    return RationalLaurentY(num_ * rhs.num_, den_ * rhs.den_);
}

RationalLaurentY RationalLaurentY::operator*(const LaurentY& rhs) const {
    return RationalLaurentY(num_ * rhs, den_);
}

RationalLaurentY RationalLaurentY::operator*(const BigInt& scalar) const {
    return RationalLaurentY(num_ * scalar, den_);
}

RationalLaurentY RationalLaurentY::divided_by(const BigInt& d) const {
    if (d == 0) throw DomainError("division by zero");
    return RationalLaurentY(num_, den_ * d);
}

std::string RationalLaurentY::str() const {
    if (den_ == 1) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/" << den_;
    return os.str();
}

} // namespace refsev
