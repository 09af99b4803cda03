#pragma once

// Exact sections f·dz^n (n ≥ 0) or f·dz̄^{|n|} (n < 0) of powers of the
// canonical bundle over the disk, with f = P(z, z̄) / (1 − z z̄)^m and P a
// polynomial with Gaussian-rational coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace zetalab {

using Rational = boost::multiprecision::cpp_rational;

struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(int r) : re(r), im(0) {}  // NOLINT: integer literals are coefficients

    bool is_zero() const { return re == 0 && im == 0; }
    GaussRational conj() const { return {re, -im}; }
    std::complex<double> to_complex() const;

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

std::string to_string(const GaussRational& c);

class TensorSection {
public:
    using Exponents = std::pair<int, int>;  // (power of z, power of z̄)
    using Terms = std::map<Exponents, GaussRational>;

    static constexpr int kDefaultDegreeCap = 64;

    TensorSection() = default;
    TensorSection(int degree, Terms numerator, int denominator_power = 0);

    static TensorSection monomial(int degree, int p, int q, GaussRational c,
                                  int denominator_power = 0);
    static TensorSection zero(int degree) { return TensorSection(degree, {}); }

    int degree() const { return degree_; }
    int denominator_power() const { return m_; }
    const Terms& numerator() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Largest total degree p + q in the numerator.
    int polynomial_degree() const;
    /// Whether the coefficient is a polynomial in z alone (holomorphic).
    bool is_holomorphic() const;

    std::complex<double> evaluate(std::complex<double> z) const;

    /// Same section with the denominator power raised to `m` (m ≥ current).
    TensorSection with_denominator(int m) const;
    /// Cancels common factors (1 − z z̄) between numerator and denominator.
    TensorSection reduced() const;

    /// Raw derivatives of the coefficient function; the degree label is kept.
    TensorSection d_z() const;
    TensorSection d_zbar() const;
    /// Multiplies the coefficient by (1 − z z̄)^2 / 4 = e^{−2α}.
    TensorSection times_inverse_metric() const;
    /// Multiplies the coefficient by z^a z̄^b.
    TensorSection times_monomial(int a, int b) const;
    /// Complex conjugate section, of degree −n.
    TensorSection conjugate() const;

    TensorSection relabel(int degree) const;

    friend TensorSection operator+(const TensorSection& a, const TensorSection& b);
    friend TensorSection operator-(const TensorSection& a, const TensorSection& b);
    friend TensorSection operator*(const GaussRational& c, const TensorSection& a);
    /// Exact equality of the represented sections (degrees must agree).
    friend bool operator==(const TensorSection& a, const TensorSection& b);

    std::string to_string() const;

private:
    void prune();

    int degree_ = 0;
    int m_ = 0;
    Terms terms_;
};

enum class EtaDirection { Raise, Lower };

/// η₊ (degree n → n+1) or η₋ (n → n−1), computed exactly. Throws
/// RepresentationOverflow when a numerator degree exceeds `degree_cap`.
TensorSection eta_apply(EtaDirection dir, const TensorSection& u,
                        int degree_cap = TensorSection::kDefaultDegreeCap);

/// [η₊, η₋]u − (k/2)u for u of degree k; zero exactly when the commutator
/// relation holds.
TensorSection eta_commutator_defect(const TensorSection& u);

/// u_n, u_{n+1}, ..., u_{n+ℓ_max} with u_k = 2/(n−k)·η₊u_{k−1}. Every rung is
/// checked against 2η₋u_{k+1} = (n+k)u_k. Throws BadInput when u_n is not
/// holomorphic of degree n, LoweringMismatch when an identity fails.
std::vector<TensorSection> ladder_build(int n, int l_max, const TensorSection& u_n);

struct LadderNorm {
    Rational value;              // Π_{ℓ,n}
    int growth_exponent = 0;     // least N with Π_{j,n} ≤ C·j^N for j ≤ 10³
    double growth_constant = 0;  // sup_j Π_{j,n} / j^N over 1 ≤ j ≤ 10³
};

/// Π_{ℓ,n} = Π_{r=1}^ℓ (2n−1+r)/r, exact.
Rational ladder_norm_value(int n, int l);
LadderNorm ladder_norm_ratio(int n, int l);

/// Per-mode outcome of the two equivalent formulations of the first-band
/// system at a fixed interior mode k.
struct ModeCheck {
    int k = 0;
    bool eq1 = false;              // (X+λ)u = 0 component: η₊u_{k−1} + η₋u_{k+1} = −λ u_k
    bool eq2 = false;              // U₋u = 0 component:  η₊u_{k−1} − η₋u_{k+1} = −k u_k
    bool recursion_plus = false;   // 2η₊u_{k−1} = (−λ−k)u_k
    bool recursion_minus = false;  // 2η₋u_{k+1} = (−λ+k)u_k
};

/// Checks every interior mode of a finite mode vector (keys k, values u_k of
/// degree k; absent modes are zero) for an integer spectral parameter λ.
std::vector<ModeCheck> recursion_system_check(const std::map<int, TensorSection>& modes,
                                              const GaussRational& lambda);

}  // namespace zetalab
