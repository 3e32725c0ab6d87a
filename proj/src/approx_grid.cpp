#include "stc/approx_grid.hpp"

#include <algorithm>
#include <numeric>

#include "stc/errors.hpp"

namespace stc {

Rational Rational::reduced() const {
    auto g = std::gcd(num, den);
    if (g == 0) return *this;
    Rational r{num / g, den / g};
    if (r.den < 0) {
        r.num = -r.num;
        r.den = -r.den;
    }
    return r;
}

Rational Rational::parse(const std::string& text) {
    auto bad = [&] { return InvalidInput("not a rational number: '" + text + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    auto digits = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) throw bad();
        if (s.size() > 15) throw bad();
        return std::stoll(s);
    };
    if (slash != std::string::npos) {
        Rational r{digits(text.substr(0, slash)), digits(text.substr(slash + 1))};
        if (r.den == 0) throw bad();
        return r.reduced();
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational{digits(text), 1};
    std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || frac.size() > 12) throw bad();
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Rational{digits(whole) * den + digits(frac), den}.reduced();
}

RoundingGrid::RoundingGrid(Rational eps, int height, std::int64_t k) : eps_(eps.reduced()), k_(k) {
    if (eps_.num <= 0 || eps_.den <= 0) throw InvalidInput("epsilon must be positive");
    if (height < 1) height = 1;
    if (k < 1) throw InvalidInput("k must be positive");
    delta_ = Rational{eps_.num, eps_.den * 2 * height}.reduced();
    Int p = delta_.num, q = delta_.den;
    // Largest I with (q+p)^I * eps.den <= (eps.den + eps.num) * k * q^I.
    Int top = 1, bottom = 1;
    Int limit = Int(eps_.den + eps_.num) * k;
    int count = 0;
    while (true) {
        Int nt = top * (q + p), nb = bottom * q;
        if (nt * eps_.den > limit * nb) break;
        top = nt;
        bottom = nb;
        ++count;
        if (count > 60000) throw InvalidInput("rounding grid too fine; increase epsilon");
    }
    scale_ = bottom;  // q^I
    values_.push_back(0);
    std::vector<Int> qpow(count + 1);
    qpow[0] = 1;
    for (int j = 1; j <= count; ++j) qpow[j] = qpow[j - 1] * q;
    Int pw = 1;
    for (int i = 0; i <= count; ++i) {
        // (1+delta)^i * q^I = (q+p)^i * q^(I-i)
        values_.push_back(pw * qpow[count - i]);
        pw *= (q + p);
    }
}

long RoundingGrid::round_up(const Int& x) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), x);
    if (it == values_.end()) return -1;
    return static_cast<long>(it - values_.begin());
}

std::int64_t RoundingGrid::ceil_value(std::size_t index) const {
    Int q = values_[index] / scale_;
    if (q * scale_ != values_[index]) q += 1;
    return static_cast<std::int64_t>(q);
}

bool RoundingGrid::within_factor(std::size_t index, int h, std::int64_t c) const {
    Int lhs = values_[index], rhs = Int(c) * scale_;
    for (int i = 0; i < h; ++i) {
        lhs *= delta_.den;
        rhs *= (delta_.den + delta_.num);
    }
    return lhs <= rhs;
}

} // namespace stc
