#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kschur {

// Arithmetic on int64 with hard overflow errors; silent wraparound would
// corrupt coefficient data invisibly.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Univariate polynomial in t with exact integer coefficients; coeffs()[d]
// multiplies t^d and the representation never carries trailing zeros.
class TPoly {
  public:
    TPoly() = default;
    TPoly(std::int64_t constant);
    explicit TPoly(std::vector<std::int64_t> coeffs);
    static TPoly t_power(int d);

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t at(int d) const;
    std::int64_t eval_at_one() const;

    // t^m * p(1/t); requires m >= degree().
    TPoly reversed(int m) const;

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);

    TPoly times(std::int64_t c) const;
    // division by a scalar that must be exact
    TPoly divided_exact(std::int64_t c) const;

    friend bool operator==(const TPoly&, const TPoly&) = default;

  private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

// Human-readable form like "t^4 + 2t^2 + 1"; "0" for the zero polynomial.
std::string to_string(const TPoly& p);

}  // namespace kschur
