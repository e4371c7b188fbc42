#include "segrec/rational.hpp"

#include <cmath>

namespace segrec {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string n = slash == std::string::npos ? s : s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+')
        throw std::invalid_argument("Rational: malformed \"" + s + "\"");
    if (n[0] == '+') n.erase(0, 1);
    mpz_class nz(n, 10), dz(d, 10);
    if (dz == 0) throw std::invalid_argument("Rational: zero denominator in \"" + s + "\"");
    return Rational(nz, dz);
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::from_double(double x, long scale) {
    if (!std::isfinite(x)) throw std::invalid_argument("Rational: non-finite double");
    double r = std::round(x * static_cast<double>(scale));
    mpz_class n;
    mpz_set_d(n.get_mpz_t(), r);
    return Rational(n, mpz_class(scale));
}

}  // namespace segrec
