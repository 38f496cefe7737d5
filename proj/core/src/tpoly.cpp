#include "kschur/tpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace kschur {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in polynomial arithmetic");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in polynomial arithmetic");
    return out;
}

TPoly::TPoly(std::int64_t constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

TPoly::TPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPoly TPoly::t_power(int d) {
    std::vector<std::int64_t> c(d + 1, 0);
    c[d] = 1;
    return TPoly(std::move(c));
}

std::int64_t TPoly::at(int d) const {
    return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : 0;
}

std::int64_t TPoly::eval_at_one() const {
    std::int64_t s = 0;
    for (std::int64_t c : coeffs_) s = checked_add(s, c);
    return s;
}

TPoly TPoly::reversed(int m) const {
    if (m < degree()) throw std::invalid_argument("reversal exponent below degree");
    std::vector<std::int64_t> c(m + 1, 0);
    for (int d = 0; d <= degree(); ++d) c[m - d] = coeffs_[d];
    return TPoly(std::move(c));
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] = checked_add(coeffs_[i], checked_mul(-1, o.coeffs_[i]));
    trim();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly{};
    std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    return TPoly(std::move(c));
}

TPoly TPoly::times(std::int64_t k) const {
    std::vector<std::int64_t> c(coeffs_);
    for (auto& x : c) x = checked_mul(x, k);
    return TPoly(std::move(c));
}

TPoly TPoly::divided_exact(std::int64_t k) const {
    if (k == 0) throw std::invalid_argument("division by zero");
    std::vector<std::int64_t> c(coeffs_);
    for (auto& x : c) {
        if (x % k != 0) throw std::runtime_error("non-exact polynomial division");
        x /= k;
    }
    return TPoly(std::move(c));
}

void TPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string to_string(const TPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        std::int64_t c = p.at(d);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        std::int64_t abs = c > 0 ? c : -c;
        if (abs != 1 || d == 0) os << abs;
        if (d >= 1) os << "t";
        if (d >= 2) os << "^" << d;
    }
    return os.str();
}

}  // namespace kschur
