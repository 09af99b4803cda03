#include "zetalab/sections.hpp"

#include <cmath>
#include <sstream>

#include "zetalab/errors.hpp"

namespace zetalab {

std::complex<double> GaussRational::to_complex() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
}

std::string to_string(const GaussRational& c) {
    std::ostringstream os;
    if (c.im == 0) {
        os << c.re;
    } else if (c.re == 0) {
        os << c.im << "i";
    } else {
        os << "(" << c.re << (c.im < 0 ? "-" : "+") << abs(c.im) << "i)";
    }
    return os.str();
}

namespace {

using Terms = TensorSection::Terms;

void add_term(Terms& t, int p, int q, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace({p, q}, c);
    if (!inserted) it->second = it->second + c;
}

// Numerator times (1 - z z̄).
Terms times_one_minus_w(const Terms& t) {
    Terms out;
    for (const auto& [e, c] : t) {
        add_term(out, e.first, e.second, c);
        add_term(out, e.first + 1, e.second + 1, -c);
    }
    return out;
}

// Divides by (1 - z z̄) when exact; returns false otherwise.
bool divide_one_minus_w(const Terms& t, Terms& out) {
    // Within a fixed charge p - q the numerator is a polynomial in w = z z̄.
    std::map<int, std::map<int, GaussRational>> by_charge;
    for (const auto& [e, c] : t) {
        by_charge[e.first - e.second][std::min(e.first, e.second)] = c;
    }
    out.clear();
    for (const auto& [d, poly] : by_charge) {
        GaussRational total;
        for (const auto& [j, c] : poly) total = total + c;
        if (!total.is_zero()) return false;
        const int p0 = std::max(d, 0), q0 = std::max(-d, 0);
        const int top = poly.rbegin()->first;
        GaussRational running;
        for (int j = 0; j < top; ++j) {
            const auto it = poly.find(j);
            if (it != poly.end()) running = running + it->second;
            add_term(out, p0 + j, q0 + j, running);
        }
    }
    return true;
}

void check_cap(const TensorSection& u, int cap) {
    if (u.polynomial_degree() > cap || u.denominator_power() > cap) {
        throw RepresentationOverflow("section degree exceeds cap " + std::to_string(cap));
    }
}

}  // namespace

TensorSection::TensorSection(int degree, Terms numerator, int denominator_power)
    : degree_(degree), m_(denominator_power), terms_(std::move(numerator)) {
    if (m_ < 0) throw BadInput("denominator power must be nonnegative");
    for (const auto& [e, c] : terms_) {
        if (e.first < 0 || e.second < 0) throw BadInput("negative monomial exponent");
    }
    prune();
}

TensorSection TensorSection::monomial(int degree, int p, int q, GaussRational c,
                                      int denominator_power) {
    return TensorSection(degree, {{{p, q}, std::move(c)}}, denominator_power);
}

void TensorSection::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    if (terms_.empty()) m_ = 0;
}

int TensorSection::polynomial_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

bool TensorSection::is_holomorphic() const {
    const TensorSection r = reduced();
    if (r.m_ != 0) return false;
    for (const auto& [e, c] : r.terms_) {
        if (e.second != 0) return false;
    }
    return true;
}

std::complex<double> TensorSection::evaluate(std::complex<double> z) const {
    std::complex<double> sum = 0.0;
    const std::complex<double> zb = std::conj(z);
    for (const auto& [e, c] : terms_) {
        sum += c.to_complex() * std::pow(z, e.first) * std::pow(zb, e.second);
    }
    return sum / std::pow(1.0 - std::norm(z), m_);
}

TensorSection TensorSection::with_denominator(int m) const {
    if (m < m_) throw BadInput("cannot lower the denominator power");
    TensorSection out = *this;
    if (terms_.empty()) return out;
    for (int j = m_; j < m; ++j) out.terms_ = times_one_minus_w(out.terms_);
    out.m_ = m;
    return out;
}

TensorSection TensorSection::reduced() const {
    TensorSection out = *this;
    Terms q;
    while (out.m_ > 0 && divide_one_minus_w(out.terms_, q)) {
        out.terms_ = std::move(q);
        --out.m_;
    }
    out.prune();
    return out;
}

TensorSection TensorSection::d_z() const {
    // ∂_z[z^p z̄^q (1−w)^{−m}] = [p z^{p−1} z̄^q + (m−p) z^p z̄^{q+1}] (1−w)^{−m−1}
    Terms out;
    for (const auto& [e, c] : terms_) {
        const auto [p, q] = e;
        if (p > 0) add_term(out, p - 1, q, GaussRational(p) * c);
        add_term(out, p, q + 1, GaussRational(m_ - p) * c);
    }
    return TensorSection(degree_, std::move(out), m_ + 1).reduced();
}

TensorSection TensorSection::d_zbar() const {
    Terms out;
    for (const auto& [e, c] : terms_) {
        const auto [p, q] = e;
        if (q > 0) add_term(out, p, q - 1, GaussRational(q) * c);
        add_term(out, p + 1, q, GaussRational(m_ - q) * c);
    }
    return TensorSection(degree_, std::move(out), m_ + 1).reduced();
}

TensorSection TensorSection::times_inverse_metric() const {
    TensorSection out = *this;
    if (out.m_ >= 2) {
        out.m_ -= 2;
    } else {
        for (int j = out.m_; j < 2; ++j) out.terms_ = times_one_minus_w(out.terms_);
        out.m_ = 0;
    }
    const GaussRational quarter(Rational(1, 4));
    for (auto& [e, c] : out.terms_) c = c * quarter;
    out.prune();
    return out.reduced();
}

TensorSection TensorSection::times_monomial(int a, int b) const {
    Terms out;
    for (const auto& [e, c] : terms_) add_term(out, e.first + a, e.second + b, c);
    return TensorSection(degree_, std::move(out), m_);
}

TensorSection TensorSection::conjugate() const {
    Terms out;
    for (const auto& [e, c] : terms_) add_term(out, e.second, e.first, c.conj());
    return TensorSection(-degree_, std::move(out), m_);
}

TensorSection TensorSection::relabel(int degree) const {
    TensorSection out = *this;
    out.degree_ = degree;
    return out;
}

TensorSection operator+(const TensorSection& a, const TensorSection& b) {
    if (a.degree_ != b.degree_) throw BadInput("adding sections of different degree");
    const int m = std::max(a.m_, b.m_);
    TensorSection x = a.with_denominator(m);
    const TensorSection y = b.with_denominator(m);
    for (const auto& [e, c] : y.terms_) add_term(x.terms_, e.first, e.second, c);
    x.m_ = m;
    x.prune();
    return x.reduced();
}

TensorSection operator*(const GaussRational& c, const TensorSection& a) {
    TensorSection out = a;
    for (auto& [e, v] : out.terms_) v = c * v;
    out.prune();
    return out;
}

TensorSection operator-(const TensorSection& a, const TensorSection& b) {
    return a + GaussRational(-1) * b;
}

bool operator==(const TensorSection& a, const TensorSection& b) {
    if (a.degree_ != b.degree_) return false;
    return (a - b).is_zero();
}

std::string TensorSection::to_string() const {
    std::ostringstream os;
    if (terms_.empty()) {
        os << "0";
    } else {
        os << "(";
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << zetalab::to_string(c);
            if (e.first) os << "*z^" << e.first;
            if (e.second) os << "*zb^" << e.second;
        }
        os << ")";
        if (m_) os << "/(1-|z|^2)^" << m_;
    }
    if (degree_ > 0) os << " dz^" << degree_;
    if (degree_ < 0) os << " dzb^" << -degree_;
    return os.str();
}

TensorSection eta_apply(EtaDirection dir, const TensorSection& u, int degree_cap) {
    const int k = u.degree();
    TensorSection out;
    if (dir == EtaDirection::Raise) {
        if (k >= 0) {
            // e^{2kα} ∂_z (e^{−2kα} f) = ∂_z f − 2k z̄ f / (1 − |z|²)
            const TensorSection shifted(k, u.times_monomial(0, 1).numerator(),
                                        u.denominator_power() + 1);
            out = u.d_z() - GaussRational(2 * k) * shifted;
        } else {
            out = u.d_z().times_inverse_metric();
        }
        out = out.relabel(k + 1);
    } else {
        if (k > 0) {
            out = u.d_zbar().times_inverse_metric();
        } else {
            const TensorSection shifted(k, u.times_monomial(1, 0).numerator(),
                                        u.denominator_power() + 1);
            out = u.d_zbar() - GaussRational(-2 * k) * shifted;
        }
        out = out.relabel(k - 1);
    }
    out = out.reduced();
    check_cap(out, degree_cap);
    return out;
}

TensorSection eta_commutator_defect(const TensorSection& u) {
    const TensorSection pm = eta_apply(EtaDirection::Raise, eta_apply(EtaDirection::Lower, u));
    const TensorSection mp = eta_apply(EtaDirection::Lower, eta_apply(EtaDirection::Raise, u));
    return pm - mp - GaussRational(Rational(u.degree()) / 2) * u;
}

std::vector<TensorSection> ladder_build(int n, int l_max, const TensorSection& u_n) {
    if (n < 1 || l_max < 0) throw BadInput("ladder needs n >= 1 and l_max >= 0");
    if (u_n.degree() != n) throw BadInput("u_n must have degree n");
    if (!eta_apply(EtaDirection::Lower, u_n).is_zero()) {
        throw BadInput("u_n must be holomorphic (η₋u_n = 0)");
    }
    std::vector<TensorSection> rungs{u_n};
    for (int k = n + 1; k <= n + l_max; ++k) {
        const GaussRational factor(Rational(2) / (n - k));
        rungs.push_back(factor * eta_apply(EtaDirection::Raise, rungs.back()));
        const TensorSection lhs = GaussRational(2) * eta_apply(EtaDirection::Lower, rungs.back());
        const TensorSection rhs = GaussRational(n + k - 1) * rungs[rungs.size() - 2];
        if (!(lhs == rhs)) {
            throw LoweringMismatch("2η₋u_" + std::to_string(k) + " != " +
                                   std::to_string(n + k - 1) + "·u_" + std::to_string(k - 1));
        }
    }
    return rungs;
}

Rational ladder_norm_value(int n, int l) {
    if (n < 1 || l < 0) throw BadInput("ladder norm needs n >= 1 and l >= 0");
    Rational v = 1;
    for (int r = 1; r <= l; ++r) v *= Rational(2 * n - 1 + r, r);
    return v;
}

LadderNorm ladder_norm_ratio(int n, int l) {
    LadderNorm out;
    out.value = ladder_norm_value(n, l);
    auto log_pi = [n](int j) {
        return std::lgamma(2.0 * n + j) - std::lgamma(j + 1.0) - std::lgamma(2.0 * n);
    };
    // Least N for which Π_{j,n}/j^N stops growing on the upper half of the range.
    constexpr int kRange = 1000;
    int big_n = 0;
    while (log_pi(kRange) - big_n * std::log(kRange) >
           log_pi(kRange / 2) - big_n * std::log(kRange / 2.0)) {
        ++big_n;
    }
    out.growth_exponent = big_n;
    double c = 0.0;
    for (int j = 1; j <= kRange; ++j) c = std::max(c, std::exp(log_pi(j) - big_n * std::log(j)));
    out.growth_constant = c;
    return out;
}

std::vector<ModeCheck> recursion_system_check(const std::map<int, TensorSection>& modes,
                                              const GaussRational& lambda) {
    std::vector<ModeCheck> out;
    if (modes.empty()) return out;
    const int lo = modes.begin()->first, hi = modes.rbegin()->first;
    auto mode = [&](int k) {
        const auto it = modes.find(k);
        if (it == modes.end()) return TensorSection::zero(k);
        if (it->second.degree() != k) throw BadInput("mode degree does not match its index");
        return it->second;
    };
    for (int k = lo + 1; k <= hi - 1; ++k) {
        const TensorSection uk = mode(k);
        const TensorSection a = eta_apply(EtaDirection::Raise, mode(k - 1));
        const TensorSection b = eta_apply(EtaDirection::Lower, mode(k + 1));
        ModeCheck c;
        c.k = k;
        c.eq1 = (a + b) == (-lambda) * uk;
        c.eq2 = (a - b) == GaussRational(-k) * uk;
        c.recursion_plus = GaussRational(2) * a == (-lambda - GaussRational(k)) * uk;
        c.recursion_minus = GaussRational(2) * b == (-lambda + GaussRational(k)) * uk;
        out.push_back(c);
    }
    return out;
}

}  // namespace zetalab
