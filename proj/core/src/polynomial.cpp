#include "charvar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace charvar {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string GaussianRational::to_string() const {
    if (im == 0) return rational_to_string(re);
    std::ostringstream os;
    os << "(" << rational_to_string(re);
    if (im < 0)
        os << " - " << rational_to_string(-im);
    else
        os << " + " << rational_to_string(im);
    os << " i)";
    return os.str();
}

namespace {

std::set<std::string>& laurent_registry() {
    static std::set<std::string> reg;
    return reg;
}

std::mutex& laurent_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

void register_laurent_variable(const std::string& name) {
    std::lock_guard<std::mutex> lock(laurent_mutex());
    laurent_registry().insert(name);
}

bool is_laurent_variable(const std::string& name) {
    std::lock_guard<std::mutex> lock(laurent_mutex());
    return laurent_registry().count(name) != 0;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::map<std::string, int> exps) {
    for (auto& [name, e] : exps) {
        if (e == 0) continue;
        if (e < 0 && !is_laurent_variable(name))
            throw std::domain_error("negative exponent on non-Laurent variable '" + name + "'");
        exps_.emplace(name, e);
    }
}

Monomial Monomial::variable(const std::string& name, int exp) {
    return Monomial({{name, exp}});
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [name, e] : exps_) d += e;
    return d;
}

int Monomial::exponent(const std::string& name) const {
    auto it = exps_.find(name);
    return it == exps_.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::map<std::string, int> merged = exps_;
    for (const auto& [name, e] : o.exps_) merged[name] += e;
    return Monomial(std::move(merged));
}

bool Monomial::operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    // Merge by variable name; larger exponent on the earlier name wins.
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() && b != o.exps_.end()) {
        if (a->first != b->first) {
            // The monomial owning the earlier variable is lex-greater.
            return a->first > b->first;
        }
        if (a->second != b->second) return a->second < b->second;
        ++a;
        ++b;
    }
    return a == exps_.end() && b != o.exps_.end();
}

std::string Monomial::to_string() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, e] : exps_) {
        if (!first) os << "*";
        first = false;
        os << name;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), std::move(c));
}

Polynomial::Polynomial(Monomial m, GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(std::move(m), std::move(c));
}

Polynomial Polynomial::variable(const std::string& name, int exp) {
    return Polynomial(Monomial::variable(name, exp));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

GaussianRational Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::set<std::string> Polynomial::variables() const {
    std::set<std::string> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [name, e] : m.exponents()) vars.insert(name);
    return vars;
}

void Polynomial::insert(const Monomial& m, const GaussianRational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) insert(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) insert(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.insert(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const GaussianRational& c) const {
    Polynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
    return r;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::domain_error("negative polynomial power");
    Polynomial r(1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
    Polynomial result;
    for (const auto& [m, c] : terms_) {
        Polynomial term(c);
        for (const auto& [name, e] : m.exponents()) {
            auto it = bindings.find(name);
            if (it == bindings.end()) throw std::domain_error("unbound variable '" + name + "'");
            if (e < 0) throw std::domain_error("cannot substitute into negative power of '" + name + "'");
            term = term * it->second.pow(e);
        }
        result += term;
    }
    return result;
}

GaussianRational Polynomial::evaluate(const std::map<std::string, GaussianRational>& values) const {
    GaussianRational result = 0;
    for (const auto& [m, c] : terms_) {
        GaussianRational term = c;
        for (const auto& [name, e] : m.exponents()) {
            auto it = values.find(name);
            if (it == values.end()) throw std::domain_error("unbound variable '" + name + "'");
            GaussianRational v = it->second;
            int k = e;
            if (k < 0) {
                v = GaussianRational(1) / v;
                k = -k;
            }
            for (int j = 0; j < k; ++j) term *= v;
        }
        result += term;
    }
    return result;
}

Polynomial Polynomial::rename(const std::function<std::string(const std::string&)>& f) const {
    Polynomial result;
    for (const auto& [m, c] : terms_) {
        std::map<std::string, int> exps;
        for (const auto& [name, e] : m.exponents()) exps[f(name)] += e;
        result.insert(Monomial(std::move(exps)), c);
    }
    return result;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    // Largest monomial first.
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        GaussianRational c = it->second;
        bool negative = c.prints_negative();
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool unit_coeff = (c == GaussianRational(1));
        if (m.is_unit()) {
            os << c.to_string();
        } else if (unit_coeff) {
            os << m.to_string();
        } else {
            os << c.to_string() << "*" << m.to_string();
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser. Grammar:
//   poly    := ['+'|'-'] term { ('+'|'-') term }
//   term    := factor { '*' factor }
//   factor  := rational | '(' rational ('+'|'-') rational 'i' ')' | 'i'
//            | ident [ '^' ['-'] integer ]
//   rational:= integer [ '/' integer ]

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    Polynomial parse() {
        Polynomial result;
        skip_ws();
        bool negative = accept('-');
        if (!negative) accept('+');
        result += sign(parse_term(), negative);
        skip_ws();
        while (pos_ < text_.size()) {
            bool neg = false;
            if (accept('-'))
                neg = true;
            else if (!accept('+'))
                fail("expected '+' or '-'");
            result += sign(parse_term(), neg);
            skip_ws();
        }
        return result;
    }

  private:
    static Polynomial sign(Polynomial p, bool neg) { return neg ? -p : p; }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        skip_ws();
        while (accept('*')) {
            p = p * parse_factor();
            skip_ws();
        }
        return p;
    }

    Polynomial parse_factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') return parse_complex();
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(GaussianRational(parse_rational()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = parse_ident();
            if (name == "i") return Polynomial(GaussianRational::i());
            int exp = 1;
            skip_ws();
            if (accept('^')) {
                skip_ws();
                bool neg = accept('-');
                exp = static_cast<int>(parse_integer());
                if (neg) exp = -exp;
                if (exp == 0) fail("zero exponent");
            }
            return Polynomial::variable(name, exp);
        }
        fail("unexpected character");
        return Polynomial();  // unreachable
    }

    Polynomial parse_complex() {
        expect('(');
        Rational re = parse_signed_rational();
        skip_ws();
        bool neg = accept('-');
        if (!neg) expect('+');
        Rational im = parse_signed_rational();
        if (neg) im = -im;
        skip_ws();
        if (parse_ident() != "i") fail("expected 'i'");
        skip_ws();
        expect(')');
        return Polynomial(GaussianRational(std::move(re), std::move(im)));
    }

    Rational parse_signed_rational() {
        skip_ws();
        bool neg = accept('-');
        Rational r = parse_rational();
        return neg ? Rational(-r) : r;
    }

    Rational parse_rational() {
        Integer num = parse_integer();
        skip_ws();
        if (accept('/')) {
            skip_ws();
            Integer den = parse_integer();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    Integer parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return Integer(text_.substr(start, pos_ - start));
    }

    std::string parse_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected identifier");
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial syntax error at position " + std::to_string(pos_) +
                                    ": " + what);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw std::invalid_argument("empty polynomial text");
    return Parser(text).parse();
}

// ---------------------------------------------------------------------------

std::map<WeightKey, Polynomial> grade_components(const Polynomial& p,
                                                 const std::map<std::string, WeightKey>& weights,
                                                 int modulus) {
    std::map<WeightKey, Polynomial> components;
    for (const auto& [m, c] : p.terms()) {
        WeightKey total;
        for (const auto& [name, e] : m.exponents()) {
            auto it = weights.find(name);
            if (it == weights.end()) throw std::domain_error("unweighted variable '" + name + "'");
            const WeightKey& w = it->second;
            if (total.empty()) total.assign(w.size(), 0);
            if (w.size() != total.size()) throw std::domain_error("inconsistent weight dimensions");
            for (std::size_t k = 0; k < w.size(); ++k) total[k] += e * w[k];
        }
        if (total.empty() && !weights.empty()) total.assign(weights.begin()->second.size(), 0);
        if (modulus > 0)
            for (int& v : total) v = ((v % modulus) + modulus) % modulus;
        components[total] += Polynomial(m, c);
    }
    return components;
}

}  // namespace charvar
