#include "dunkl/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl {

int euler_phi(int m) {
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials (ascending coefficients), remainder
// known to be zero.
std::vector<Integer> exact_div(std::vector<Integer> num, const std::vector<Integer>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<Integer> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Integer(0));
    const Integer& lead = den.back();
    for (long d = static_cast<long>(num.size()) - 1;
         d >= static_cast<long>(den.size()) - 1; --d) {
        if (num[d] == 0) continue;
        Integer c = num[d] / lead;
        long shift = d - (static_cast<long>(den.size()) - 1);
        q[shift] = c;
        for (std::size_t k = 0; k < den.size(); ++k) num[shift + k] -= c * den[k];
    }
    return q;
}

// Per-conductor data: minimal polynomial, reduction rows for t^k with
// phi <= k <= 2phi-2, and the basis coordinates of eta^k for 0 <= k < m.
struct CycField {
    int m = 1;
    int phi = 1;
    std::vector<Integer> minpoly;
    std::vector<std::vector<Rational>> reduction; // index k-phi
    std::vector<std::vector<Rational>> powers;    // index k in [0, m)
};

const CycField& field(int m) {
    static std::mutex mu;
    static std::map<int, CycField> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    CycField f;
    f.m = m;
    f.phi = euler_phi(m);
    f.minpoly = cyclotomic_polynomial(m);

    // t^phi = -(c_0 + c_1 t + ... + c_{phi-1} t^{phi-1}); higher powers follow
    // by multiplying by t and reducing again.
    std::vector<Rational> cur(f.phi, Rational(0));
    for (int j = 0; j < f.phi; ++j) cur[j] = Rational(-f.minpoly[j]);
    f.reduction.push_back(cur);
    for (int k = f.phi + 1; k <= 2 * f.phi - 2; ++k) {
        std::vector<Rational> next(f.phi, Rational(0));
        Rational top = cur[f.phi - 1];
        for (int j = f.phi - 1; j >= 1; --j) next[j] = cur[j - 1];
        next[0] = 0;
        if (top != 0)
            for (int j = 0; j < f.phi; ++j) next[j] += top * Rational(-f.minpoly[j]);
        f.reduction.push_back(next);
        cur = next;
    }

    f.powers.resize(m);
    std::vector<Rational> pw(f.phi, Rational(0));
    pw[0] = 1;
    f.powers[0] = pw;
    for (int k = 1; k < m; ++k) {
        std::vector<Rational> next(f.phi, Rational(0));
        Rational top = pw[f.phi - 1];
        for (int j = f.phi - 1; j >= 1; --j) next[j] = pw[j - 1];
        next[0] = 0;
        if (top != 0)
            for (int j = 0; j < f.phi; ++j) next[j] += top * Rational(-f.minpoly[j]);
        f.powers[k] = next;
        pw = next;
    }

    auto [pos, inserted] = cache.emplace(m, std::move(f));
    (void)inserted;
    return pos->second;
}

std::vector<Rational> poly_mod_minpoly(std::vector<Rational> conv, const CycField& f) {
    std::vector<Rational> out(f.phi, Rational(0));
    for (std::size_t k = 0; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        if (static_cast<int>(k) < f.phi) {
            out[k] += conv[k];
        } else {
            const auto& row = f.reduction[k - f.phi];
            for (int j = 0; j < f.phi; ++j) out[j] += conv[k] * row[j];
        }
    }
    return out;
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(int m) {
    if (m < 1) throw HypothesisViolation("conductor must be positive");
    if (m == 1) return {Integer(-1), Integer(1)}; // t - 1
    std::vector<Integer> num(m + 1, Integer(0));
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = exact_div(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

CycNumber::CycNumber(int conductor, std::vector<Rational> coords)
    : m_(conductor), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != euler_phi(m_))
        throw HypothesisViolation("coordinate vector length must be phi(m)");
}

CycNumber CycNumber::zero(int m) {
    return CycNumber(m, std::vector<Rational>(euler_phi(m), Rational(0)));
}

CycNumber CycNumber::one(int m) { return from_rational(Rational(1), m); }

CycNumber CycNumber::from_rational(const Rational& r, int m) {
    std::vector<Rational> c(euler_phi(m), Rational(0));
    c[0] = r;
    return CycNumber(m, std::move(c));
}

CycNumber CycNumber::root_of_unity_power(int m, long s) {
    long k = s % m;
    if (k < 0) k += m;
    return CycNumber(m, field(m).powers[k]);
}

bool CycNumber::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (std::size_t j = 1; j < coords_.size(); ++j)
        if (coords_[j] != 0) return false;
    return true;
}

Rational CycNumber::rational_part() const { return coords_[0]; }

Rational CycNumber::as_rational() const {
    if (!is_rational()) throw HypothesisViolation("value is not rational");
    return coords_[0];
}

void CycNumber::check_same_field(const CycNumber& o) const {
    if (m_ != o.m_)
        throw ConductorMismatch("conductor mismatch: " + std::to_string(m_) + " vs " +
                                std::to_string(o.m_));
}

CycNumber CycNumber::operator-() const {
    std::vector<Rational> c(coords_.size());
    for (std::size_t j = 0; j < coords_.size(); ++j) c[j] = -coords_[j];
    return CycNumber(m_, std::move(c));
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
    CycNumber r = *this;
    r += o;
    return r;
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
    CycNumber r = *this;
    r -= o;
    return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    check_same_field(o);
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += o.coords_[j];
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
    check_same_field(o);
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] -= o.coords_[j];
    return *this;
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
    check_same_field(o);
    const CycField& f = field(m_);
    std::vector<Rational> conv(2 * f.phi - 1, Rational(0));
    for (int a = 0; a < f.phi; ++a) {
        if (coords_[a] == 0) continue;
        for (int b = 0; b < f.phi; ++b) {
            if (o.coords_[b] == 0) continue;
            conv[a + b] += coords_[a] * o.coords_[b];
        }
    }
    return CycNumber(m_, poly_mod_minpoly(std::move(conv), f));
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
    *this = *this * o;
    return *this;
}

CycNumber CycNumber::operator*(const Rational& r) const {
    std::vector<Rational> c(coords_.size());
    for (std::size_t j = 0; j < coords_.size(); ++j) c[j] = coords_[j] * r;
    return CycNumber(m_, std::move(c));
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw DivideByZero();
    const CycField& f = field(m_);
    // Extended Euclid in Q[t] for (a, Phi_m); Phi_m irreducible so the gcd is
    // a nonzero constant.
    using QPoly = std::vector<Rational>;
    auto deg = [](const QPoly& p) {
        for (long d = static_cast<long>(p.size()) - 1; d >= 0; --d)
            if (p[d] != 0) return d;
        return -1L;
    };
    QPoly r0(f.minpoly.size());
    for (std::size_t j = 0; j < f.minpoly.size(); ++j) r0[j] = Rational(f.minpoly[j]);
    QPoly r1(coords_.begin(), coords_.end());
    QPoly s0{Rational(0)}, s1{Rational(1)}; // s tracks the coefficient of `a`
    while (deg(r1) > 0) {
        long d0 = deg(r0), d1 = deg(r1);
        QPoly q(d0 - d1 + 1, Rational(0));
        QPoly rem = r0;
        for (long d = d0; d >= d1; --d) {
            if (rem[d] == 0) continue;
            Rational c = rem[d] / r1[d1];
            q[d - d1] = c;
            for (long k = 0; k <= d1; ++k) rem[d - d1 + k] -= c * r1[k];
        }
        QPoly s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (std::size_t j = 0; j < s0.size(); ++j) s2[j] = s0[j];
        for (std::size_t a = 0; a < q.size(); ++a) {
            if (q[a] == 0) continue;
            for (std::size_t b = 0; b < s1.size(); ++b) s2[a + b] -= q[a] * s1[b];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    long d1 = deg(r1);
    if (d1 != 0) throw InvariantViolation("cyclotomic inverse: gcd is not a unit");
    Rational scale = Rational(1) / r1[0];
    std::vector<Rational> conv(s1.size(), Rational(0));
    for (std::size_t j = 0; j < s1.size(); ++j) conv[j] = s1[j] * scale;
    conv.resize(std::max<std::size_t>(conv.size(), f.phi), Rational(0));
    return CycNumber(m_, poly_mod_minpoly(std::move(conv), f));
}

CycNumber CycNumber::conjugate() const {
    const CycField& f = field(m_);
    std::vector<Rational> out(f.phi, Rational(0));
    for (int j = 0; j < f.phi; ++j) {
        if (coords_[j] == 0) continue;
        long k = (static_cast<long>(m_ - 1) * j) % m_;
        const auto& pw = f.powers[k];
        for (int i = 0; i < f.phi; ++i) out[i] += coords_[j] * pw[i];
    }
    return CycNumber(m_, std::move(out));
}

std::vector<std::string> CycNumber::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(to_string(c));
    return out;
}

CycNumber CycNumber::from_strings(int m, const std::vector<std::string>& parts) {
    if (static_cast<int>(parts.size()) != euler_phi(m))
        throw ParseError(0, "cyclotomic value needs phi(m) coordinates");
    std::vector<Rational> c;
    c.reserve(parts.size());
    for (const auto& s : parts) c.push_back(rational_from_string(s));
    return CycNumber(m, std::move(c));
}

std::string CycNumber::to_display_string() const {
    if (is_rational()) return dunkl::to_string(coords_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << dunkl::to_string(coords_[0]);
        } else {
            if (coords_[j] != 1) os << dunkl::to_string(coords_[j]) << "*";
            os << "eta";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

} // namespace dunkl
