#include "dunkl/polynomial.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "dunkl/errors.hpp"

namespace dunkl {

Polynomial Polynomial::constant(int nvars, int conductor, const Rational& c) {
    Polynomial p(nvars, conductor);
    p.add_term(Composition(nvars, 0), CycNumber::from_rational(c, conductor));
    return p;
}

Polynomial Polynomial::monomial(int nvars, int conductor, const Composition& exp,
                                const CycNumber& coeff) {
    Polynomial p(nvars, conductor);
    p.add_term(exp, coeff);
    return p;
}

Polynomial Polynomial::monomial(int nvars, int conductor, const Composition& exp,
                                const Rational& coeff) {
    return monomial(nvars, conductor, exp, CycNumber::from_rational(coeff, conductor));
}

Polynomial Polynomial::x_power(int nvars, int conductor, int i, int e) {
    if (i < 1 || i > nvars) throw HypothesisViolation("variable index out of range");
    Composition exp(nvars, 0);
    exp[i - 1] = e;
    return monomial(nvars, conductor, exp, Rational(1));
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, comp_degree(e));
    return d;
}

bool Polynomial::is_homogeneous() const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
        int de = comp_degree(e);
        if (d == -2) d = de;
        if (de != d) return false;
    }
    return true;
}

CycNumber Polynomial::coefficient(const Composition& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? CycNumber::zero(conductor_) : it->second;
}

void Polynomial::add_term(const Composition& exp, const CycNumber& coeff) {
    if (static_cast<int>(exp.size()) != nvars_)
        throw HypothesisViolation("exponent length does not match nvars");
    if (coeff.conductor() != conductor_)
        throw ConductorMismatch("coefficient conductor does not match polynomial");
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(exp, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
        throw HypothesisViolation("nvars mismatch: " + std::to_string(nvars_) + " vs " +
                                  std::to_string(o.nvars_));
    if (conductor_ != o.conductor_)
        throw ConductorMismatch("polynomial conductor mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_, conductor_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    out -= o;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out(nvars_, conductor_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Composition e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && conductor_ == o.conductor_ && terms_ == o.terms_;
}

Polynomial Polynomial::scale(const CycNumber& c) const {
    Polynomial out(nvars_, conductor_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

Polynomial Polynomial::scale(const Rational& r) const {
    return scale(CycNumber::from_rational(r, conductor_));
}

Polynomial Polynomial::partial_derivative(int i) const {
    if (i < 1 || i > nvars_) throw HypothesisViolation("variable index out of range");
    Polynomial out(nvars_, conductor_);
    for (const auto& [e, c] : terms_) {
        if (e[i - 1] == 0) continue;
        Composition d = e;
        d[i - 1] -= 1;
        out.add_term(d, c * Rational(e[i - 1]));
    }
    return out;
}

CycNumber Polynomial::evaluate_at_zero() const {
    return coefficient(Composition(nvars_, 0));
}

Polynomial Polynomial::conjugate_coefficients() const {
    Polynomial out(nvars_, conductor_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conjugate());
    return out;
}

std::map<int, Polynomial> Polynomial::homogeneous_components() const {
    std::map<int, Polynomial> out;
    for (const auto& [e, c] : terms_) {
        int d = comp_degree(e);
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, Polynomial(nvars_, conductor_)).first;
        it->second.terms_.emplace(e, c);
    }
    return out;
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial out(nvars_, conductor_);
    for (const auto& [e, c] : terms_)
        if (comp_degree(e) == d) out.terms_.emplace(e, c);
    return out;
}

bool Polynomial::has_rational_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_rational()) return false;
    return true;
}

std::string Polynomial::to_text(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool negative = c.is_rational() && c.as_rational() < 0;
        std::string coeff;
        if (c.is_rational())
            coeff = to_string(negative ? Rational(-c.as_rational()) : c.as_rational());
        else
            coeff = "(" + c.to_display_string() + ")";
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool any_var = comp_degree(e) > 0;
        if (!any_var) {
            os << coeff;
            continue;
        }
        bool printed = false;
        if (coeff != "1") os << coeff << "*";
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << " ";
            printed = true;
            os << var << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::string Polynomial::to_json() const {
    nlohmann::ordered_json j;
    j["nvars"] = nvars_;
    j["m"] = conductor_;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::ordered_json t;
        t["exp"] = e;
        t["coeff"] = c.to_strings();
        arr.push_back(t);
    }
    j["terms"] = arr;
    return j.dump();
}

Polynomial Polynomial::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Polynomial p(j.at("nvars").get<int>(), j.at("m").get<int>());
    for (const auto& t : j.at("terms")) {
        Composition e = t.at("exp").get<Composition>();
        auto coeff = CycNumber::from_strings(p.conductor(),
                                             t.at("coeff").get<std::vector<std::string>>());
        p.add_term(e, coeff);
    }
    return p;
}

std::vector<std::pair<ParityType, Polynomial>> parity_split(const Polynomial& p, int m) {
    std::map<ParityType, Polynomial> groups;
    for (const auto& [e, c] : p.terms()) {
        ParityType r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r[i] = e[i] % m;
        auto it = groups.find(r);
        if (it == groups.end())
            it = groups.emplace(r, Polynomial(p.nvars(), p.conductor())).first;
        it->second.add_term(e, c);
    }
    return {groups.begin(), groups.end()};
}

Polynomial y_view(const Polynomial& g_in_y, int m) {
    Polynomial out(g_in_y.nvars(), g_in_y.conductor());
    for (const auto& [e, c] : g_in_y.terms()) {
        Composition x(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) x[i] = m * e[i];
        out.add_term(x, c);
    }
    return out;
}

Polynomial x_to_y(const Polynomial& p_in_x, int m) {
    Polynomial out(p_in_x.nvars(), p_in_x.conductor());
    for (const auto& [e, c] : p_in_x.terms()) {
        Composition y(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] % m != 0)
                throw HypothesisViolation("x_to_y: exponent not divisible by m");
            y[i] = e[i] / m;
        }
        out.add_term(y, c);
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError(start, "expected digits");
        return s.substr(start, pos - start);
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, int nvars, int conductor) {
    Cursor c{text};
    Polynomial out(nvars, conductor);
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = (ch == '-') ? -1 : 1;
            ++c.pos;
        } else if (!first) {
            throw ParseError(c.pos, "expected '+' or '-' between terms");
        }
        first = false;
        c.skip_ws();
        Rational coeff = 1;
        bool saw_anything = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            std::string num = c.digits();
            std::string lit = num;
            if (c.peek() == '/') {
                ++c.pos;
                lit += "/" + c.digits();
            }
            coeff = rational_from_string(lit);
            saw_anything = true;
            if (c.peek() == '*') ++c.pos;
        }
        Composition exp(nvars, 0);
        while (c.peek() == 'x') {
            ++c.pos;
            std::size_t at = c.pos;
            int idx = std::stoi(c.digits());
            if (idx < 1 || idx > nvars)
                throw ParseError(at, "variable index out of range 1.." + std::to_string(nvars));
            int e = 1;
            if (c.peek() == '^') {
                ++c.pos;
                at = c.pos;
                e = std::stoi(c.digits());
            }
            exp[idx - 1] += e;
            saw_anything = true;
            if (c.peek() == '*') ++c.pos;
        }
        if (!saw_anything) throw ParseError(c.pos, "expected coefficient or monomial");
        out.add_term(exp, CycNumber::from_rational(sign * coeff, conductor));
    }
    return out;
}

} // namespace dunkl
