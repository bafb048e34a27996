#pragma once

#include "tlacalc/rational.hpp"

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tlacalc {

/// Number of polynomial variables supported. Base coordinates come first,
/// then (for bundle models) the group coordinates.
inline constexpr std::size_t kMaxVars = 16;

using Monomial = std::array<std::uint8_t, kMaxVars>;

class DegreeCapExceeded : public std::runtime_error {
public:
    DegreeCapExceeded(int requested, int cap);
    int requested() const noexcept { return requested_; }
    int cap() const noexcept { return cap_; }

private:
    int requested_;
    int cap_;
};

/// Process-wide cap on the total degree of any polynomial product.
/// A cap <= 0 disables the check.
int degree_cap() noexcept;
void set_degree_cap(int cap) noexcept;

class ScopedDegreeCap {
public:
    explicit ScopedDegreeCap(int cap) noexcept : saved_(degree_cap()) { set_degree_cap(cap); }
    ~ScopedDegreeCap() { set_degree_cap(saved_); }
    ScopedDegreeCap(const ScopedDegreeCap&) = delete;
    ScopedDegreeCap& operator=(const ScopedDegreeCap&) = delete;

private:
    int saved_;
};

/// Exact multivariate polynomial over the rationals in variables x1, x2, ...
/// Stored sparsely; zero coefficients are never kept.
class Poly {
public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    Poly(long constant);
    Poly(const Rational& constant);

    /// The coordinate function x_{index+1}.
    static Poly var(std::size_t index);
    static Poly term(const Monomial& m, const Rational& coeff);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Rational constant_term() const;
    /// -1 for the zero polynomial.
    int total_degree() const noexcept;
    /// Highest variable index that occurs, plus one.
    std::size_t num_vars() const noexcept;

    Poly derivative(std::size_t var) const;
    /// Sets the variables with index in [first, last) to zero.
    Poly restrict_to_zero(std::size_t first, std::size_t last) const;
    /// Replaces x_{i+1} by images[i]; variables beyond images.size() are kept.
    Poly substitute(const std::vector<Poly>& images) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    /// e.g. "3/2*x1^2*x2 - x2 + 1/3"; "0" for zero.
    std::string to_string() const;
    static Poly parse(std::string_view text);

private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

} // namespace tlacalc
