#include "galdens/cyclotomic.hpp"

#include "galdens/error.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace galdens {

namespace {

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
    // den is monic
    const std::size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long c = num[i];
        q[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<long>> cache;
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic polynomial of order 0");
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    std::vector<long> p(n + 1, 0);  // x^n - 1
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(p)).first->second;
}

CycValue::CycValue(unsigned conductor) : conductor_(conductor) {
    if (conductor == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
    coeffs_.assign(conductor, Rational(0));
}

CycValue::CycValue(unsigned conductor, std::vector<Rational> coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {
    if (conductor == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
    if (coeffs_.size() != conductor)
        throw Error(ErrorCode::InvalidArgument, "cyclotomic coefficient array must have length equal to the conductor");
    reduce();
}

CycValue CycValue::rational(const Rational& r, unsigned conductor) {
    CycValue v(conductor);
    v.coeffs_[0] = r;
    return v;
}

CycValue CycValue::root_of_unity(unsigned conductor, long k) {
    CycValue v(conductor);
    long m = k % static_cast<long>(conductor);
    if (m < 0) m += conductor;
    v.coeffs_[static_cast<std::size_t>(m)] = 1;
    v.reduce();
    return v;
}

void CycValue::reduce() {
    const auto& phi = cyclotomic_polynomial(conductor_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = coeffs_.size(); i-- > deg;) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        for (std::size_t j = 0; j <= deg; ++j)
            if (phi[j] != 0) coeffs_[i - deg + j] -= c * phi[j];
    }
}

bool CycValue::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycValue::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycValue::to_rational() const {
    if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "cyclotomic value is not rational: " + to_string());
    return coeffs_[0];
}

CycValue CycValue::embed(unsigned target) const {
    if (target % conductor_ != 0)
        throw Error(ErrorCode::InvalidArgument, "cannot embed conductor " + std::to_string(conductor_) + " into " +
                                                    std::to_string(target));
    if (target == conductor_) return *this;
    const unsigned step = target / conductor_;
    std::vector<Rational> out(target, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * step] = coeffs_[i];
    return CycValue(target, std::move(out));
}

CycValue CycValue::conj() const {
    std::vector<Rational> out(conductor_, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[(conductor_ - i) % conductor_] += coeffs_[i];
    return CycValue(conductor_, std::move(out));
}

std::complex<double> CycValue::to_complex() const {
    std::complex<double> z = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / conductor_;
        z += coeffs_[i].get_d() * std::polar(1.0, angle);
    }
    return z;
}

std::string CycValue::to_string() const {
    if (is_rational()) return coeffs_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0) os << "-";
        Rational a = abs(coeffs_[i]);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z" << conductor_;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

std::pair<CycValue, CycValue> common(const CycValue& a, const CycValue& b) {
    if (a.conductor() == b.conductor()) return {a, b};
    const unsigned l = std::lcm(a.conductor(), b.conductor());
    return {a.embed(l), b.embed(l)};
}

}  // namespace

CycValue operator+(const CycValue& a, const CycValue& b) {
    auto [x, y] = common(a, b);
    std::vector<Rational> out(x.coeffs());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += y.coeffs()[i];
    return CycValue(x.conductor(), std::move(out));
}

CycValue operator-(const CycValue& a, const CycValue& b) { return a + (-b); }

CycValue CycValue::operator-() const {
    CycValue v(*this);
    for (auto& c : v.coeffs_) c = -c;
    return v;
}

CycValue CycValue::scaled(const Rational& r) const {
    CycValue v(*this);
    for (auto& c : v.coeffs_) c *= r;
    return v;
}

CycValue operator*(const CycValue& a, const CycValue& b) {
    auto [x, y] = common(a, b);
    const unsigned e = x.conductor();
    std::vector<Rational> out(e, Rational(0));
    for (std::size_t i = 0; i < e; ++i) {
        if (x.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < e; ++j) {
            if (y.coeffs()[j] == 0) continue;
            out[(i + j) % e] += x.coeffs()[i] * y.coeffs()[j];
        }
    }
    return CycValue(e, std::move(out));
}

bool operator==(const CycValue& a, const CycValue& b) {
    if (a.conductor() == b.conductor()) return a.coeffs() == b.coeffs();
    auto [x, y] = common(a, b);
    return x.coeffs() == y.coeffs();
}

std::strong_ordering lex_compare(const CycValue& a, const CycValue& b) {
    auto [x, y] = common(a, b);
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        int c = cmp(x.coeffs()[i], y.coeffs()[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace galdens
