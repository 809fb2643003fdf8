#include "permtodd/arith.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace permtodd {

Rational make_rational(long n, long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational make_rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
        throw DomainError("malformed rational: '" + std::string(text) + "'");
    if (num.front() == '+') num.remove_prefix(1);
    return make_rational(BigInt(std::string(num)), BigInt(std::string(den)));
}

std::vector<Rational> todd_coefficients(int m_max) {
    if (m_max < 0) throw DomainError("todd_coefficients: m_max must be nonnegative");
    // (1 - e^{-x}) / x = sum_j c_j x^j, c_j = (-1)^j / (j+1)!; invert the series.
    std::vector<Rational> c(m_max + 1);
    BigInt fact = 1;
    for (int j = 0; j <= m_max; ++j) {
        fact *= j + 1;
        c[j] = Rational(j % 2 == 0 ? 1 : -1) / Rational(fact);
    }
    std::vector<Rational> td(m_max + 1);
    td[0] = 1;
    for (int m = 1; m <= m_max; ++m) {
        Rational acc = 0;
        for (int j = 0; j < m; ++j) acc += td[j] * c[m - j];
        td[m] = -acc;  // c_0 == 1
    }
    return td;
}

Rational todd_coefficient(int m) {
    if (m < 0) throw DomainError("todd_coefficient: negative index");
    static std::mutex mu;
    static std::vector<Rational> cache;
    std::lock_guard lock(mu);
    if (m >= static_cast<int>(cache.size())) cache = todd_coefficients(std::max(2 * m, 32));
    return cache[m];
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

PolynomialQ::PolynomialQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolynomialQ PolynomialQ::constant(const Rational& c) { return PolynomialQ({c}); }

PolynomialQ PolynomialQ::linear(const Rational& slope, const Rational& offset) {
    return PolynomialQ({offset, slope});
}

void PolynomialQ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolynomialQ::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

Rational PolynomialQ::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational PolynomialQ::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

PolynomialQ& PolynomialQ::operator+=(const PolynomialQ& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

PolynomialQ& PolynomialQ::operator-=(const PolynomialQ& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

PolynomialQ& PolynomialQ::operator*=(const PolynomialQ& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

PolynomialQ& PolynomialQ::operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

std::string PolynomialQ::str(char var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (!out.empty() && c > 0) out += "+";
        if (c < 0) out += "-";
        if (i == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) out += mag.get_den() == 1 ? to_string(mag) : "(" + to_string(mag) + ")";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

PolynomialQ interpolate(std::span<const std::pair<long, Rational>> points) {
    if (points.empty()) throw DomainError("interpolate: empty sample set");
    std::set<long> seen;
    for (const auto& [x, _] : points)
        if (!seen.insert(x).second) throw DomainError("interpolate: duplicate abscissa " + std::to_string(x));

    PolynomialQ result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        PolynomialQ basis = PolynomialQ::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            basis *= PolynomialQ::linear(1, -points[j].first);
            denom *= points[i].first - points[j].first;
        }
        result += basis * (points[i].second / denom);
    }
    return result;
}

}  // namespace permtodd
