#pragma once

#include <gmpxx.h>

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace ktorus {

// Parse "p/q" or "p" into an exact rational. Rejects zero denominators.
mpq_class rational_from_text(const std::string& s);

// Representative of q mod 1 in [0, 1).
mpq_class reduce_mod1(const mpq_class& q);

// Exact value a + b*theta for one fixed formal irrational theta. Because
// theta is irrational, the value is rational exactly when irr == 0, and two
// values are equal exactly when both components agree.
struct ThetaExponent {
    mpq_class rat;
    mpq_class irr;

    bool operator==(const ThetaExponent& other) const = default;
    std::string to_text() const;  // "1/2 + 2*theta", "theta", "0", ...
};

// Point on the unit circle written e^{2*pi*i*(rat + irr*theta)}. The rational
// part is kept reduced to [0, 1), so value equality is componentwise equality.
class CircleElement {
public:
    CircleElement() = default;
    CircleElement(const mpq_class& rat, const mpq_class& irr);

    const mpq_class& rat() const { return rat_; }
    const mpq_class& irr() const { return irr_; }

    bool operator==(const CircleElement& other) const = default;

    bool is_one() const { return rat_ == 0 && irr_ == 0; }
    // Exactly the elements with no theta component.
    bool is_root_of_unity() const { return irr_ == 0; }
    // Multiplicative order of a root of unity: the reduced denominator of the
    // rational part. Requires is_root_of_unity().
    mpz_class order() const;

    CircleElement inverse() const;
    ThetaExponent exponent() const { return ThetaExponent{rat_, irr_}; }
    std::string to_text() const;  // "e(1/2 + 2*theta)"

    // JSON form {"rat":"1/4","irr":"0"}; components are exact "p/q" strings.
    static CircleElement from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

private:
    mpq_class rat_;  // reduced to [0, 1)
    mpq_class irr_;
};

// Exact product of powers: prod factors[k].first ^ factors[k].second.
CircleElement circle_pow_mul(
    const std::vector<std::pair<CircleElement, mpz_class>>& factors);

// Classification data of a simple infinite-dimensional quotient: dimension n,
// level i in 0..n-1 (i = 0 is the faithful quotient), the base rotation
// lambda, and i structure constants mu[0..i-1]. When i >= 1, lambda and the
// first i-1 constants are roots of unity and the last one is not; when i = 0,
// lambda itself is not a root of unity.
struct QuotientSpec {
    std::size_t n = 1;
    std::size_t i = 0;
    CircleElement lambda;
    std::vector<CircleElement> mu;

    void validate() const;  // throws std::invalid_argument on violation

    // {"n":6,"i":2,"lambda":{"rat":"1/4","irr":"0"},"mu":[...]}
    static QuotientSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// Least r >= 1 with, for every j in 1..i,
//   lambda^C(r,j) * mu_1^C(r,j-1) * ... * mu_{j-1}^C(r,1) == 1.
// All constants involved are roots of unity, and r = L * lcm(1..i) always
// satisfies the system when L is the lcm of their orders (C(r,j) is then a
// multiple of L for j <= i), so the increasing scan terminates. Returns 1
// when i = 0.
mpz_class orbit_cardinality(const QuotientSpec& spec);

// zeta_i = lambda^extbinom(C,i+1) * mu_1^extbinom(C,i) * ... * mu_i^C with
// C = orbit_cardinality(spec); the result always has a theta component.
// Returns lambda itself when i = 0, consistent with C = 1.
CircleElement zeta_invariant(const QuotientSpec& spec);

// Image of K_0 under the tracial state: the subgroup (1/denominator)(Z + Z g)
// of R, with g the exponent of the zeta invariant.
struct TraceRange {
    mpz_class denominator;
    ThetaExponent generator;

    bool operator==(const TraceRange& other) const = default;
    std::string to_text() const;  // "(1/2)(Z + Z*(1/2 + 2*theta))"
};

TraceRange trace_range(const QuotientSpec& spec);

// Isomorphism of the associated quotient algebras: n - i, the orbit
// cardinality, and the zeta invariant up to inversion are a complete set of
// invariants. For two faithful quotients this reduces to the rotation
// parameters agreeing up to sign and an integer shift.
bool quotients_isomorphic(const QuotientSpec& a, const QuotientSpec& b);

}  // namespace ktorus
