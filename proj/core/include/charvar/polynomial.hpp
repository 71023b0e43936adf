#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "charvar/rational.hpp"

namespace charvar {

/// Variables that may carry negative exponents (torus coordinates).
/// The registry is append-only; registering a name twice is a no-op.
void register_laurent_variable(const std::string& name);
bool is_laurent_variable(const std::string& name);

/// Power product of named variables. Exponents are nonzero; negative
/// exponents are rejected unless the variable is registered as Laurent.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::map<std::string, int> exps);

    static Monomial variable(const std::string& name, int exp = 1);

    bool is_unit() const { return exps_.empty(); }
    int degree() const;
    int exponent(const std::string& name) const;
    const std::map<std::string, int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    /// Graded lexicographic: total degree first, then variable names in
    /// lexicographic order. Fixed and deterministic, so canonical forms
    /// compare equal componentwise.
    bool operator<(const Monomial& o) const;

    std::string to_string() const;

  private:
    std::map<std::string, int> exps_;
};

/// Sparse polynomial over Q(i). Zero coefficients are never stored; the
/// zero polynomial has an empty term map. All arithmetic is exact.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(GaussianRational c);  // NOLINT: constants embed implicitly
    Polynomial(int n) : Polynomial(GaussianRational(n)) {}
    explicit Polynomial(Monomial m, GaussianRational c = 1);

    static Polynomial variable(const std::string& name, int exp = 1);
    static Polynomial parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant term; throws unless the polynomial is constant.
    GaussianRational constant_value() const;
    GaussianRational coefficient(const Monomial& m) const;
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const;  // 0 for the zero polynomial
    std::set<std::string> variables() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const GaussianRational& c) const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(int k) const;  // k >= 0

    /// Image under the ring homomorphism extending `bindings`. Every
    /// variable of the polynomial must be bound.
    Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;
    GaussianRational evaluate(const std::map<std::string, GaussianRational>& values) const;
    /// Variable-to-variable renaming (a special case of substitute).
    Polynomial rename(const std::function<std::string(const std::string&)>& f) const;

    std::string to_string() const;

  private:
    void insert(const Monomial& m, const GaussianRational& c);

    std::map<Monomial, GaussianRational> terms_;
};

using WeightKey = std::vector<int>;

/// Splits p into homogeneous components for the grading in which variable
/// x has weight weights.at(x). Components are keyed by their weight,
/// reduced mod `modulus` componentwise (modulus 0 means the Z-grading).
/// The components sum back to p.
std::map<WeightKey, Polynomial> grade_components(const Polynomial& p,
                                                 const std::map<std::string, WeightKey>& weights,
                                                 int modulus);

}  // namespace charvar
