#include "ktorus/quotients.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ktorus/combinatorics.hpp"

namespace ktorus {

mpq_class rational_from_text(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational number: \"" + s + "\"");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in rational: \"" + s + "\"");
    }
    q.canonicalize();
    return q;
}

mpq_class reduce_mod1(const mpq_class& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - fl;
}

std::string ThetaExponent::to_text() const {
    if (irr == 0) return rat.get_str();
    auto term = [](const mpq_class& c) -> std::string {
        return c == 1 ? "theta" : c.get_str() + "*theta";
    };
    mpq_class mag = irr < 0 ? mpq_class(-irr) : irr;
    if (rat == 0) return irr < 0 ? "-" + term(mag) : term(mag);
    return rat.get_str() + (irr < 0 ? " - " : " + ") + term(mag);
}

CircleElement::CircleElement(const mpq_class& rat, const mpq_class& irr)
    : rat_(reduce_mod1(rat)), irr_(irr) {}

mpz_class CircleElement::order() const {
    if (!is_root_of_unity()) {
        throw std::domain_error("order is defined only for roots of unity");
    }
    return rat_.get_den();
}

CircleElement CircleElement::inverse() const { return CircleElement(-rat_, -irr_); }

std::string CircleElement::to_text() const {
    return "e(" + exponent().to_text() + ")";
}

CircleElement CircleElement::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rat") || !j.contains("irr")) {
        throw std::invalid_argument("circle element JSON needs \"rat\" and \"irr\"");
    }
    auto component = [](const nlohmann::json& v) {
        if (v.is_string()) return rational_from_text(v.get<std::string>());
        if (v.is_number_integer()) return mpq_class(static_cast<long>(v.get<std::int64_t>()));
        throw std::invalid_argument("rational components must be strings or integers");
    };
    return CircleElement(component(j.at("rat")), component(j.at("irr")));
}

nlohmann::json CircleElement::to_json() const {
    return {{"rat", rat_.get_str()}, {"irr", irr_.get_str()}};
}

CircleElement circle_pow_mul(
    const std::vector<std::pair<CircleElement, mpz_class>>& factors) {
    mpq_class rat = 0;
    mpq_class irr = 0;
    for (const auto& [base, exp] : factors) {
        rat += exp * base.rat();
        irr += exp * base.irr();
    }
    return CircleElement(rat, irr);
}

void QuotientSpec::validate() const {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    if (i >= n) throw std::invalid_argument("level must lie in 0..n-1");
    if (mu.size() != i) {
        throw std::invalid_argument("level i requires exactly i structure constants");
    }
    if (i == 0) {
        if (lambda.is_root_of_unity()) {
            throw std::invalid_argument("the faithful case needs an irrational rotation");
        }
        return;
    }
    if (!lambda.is_root_of_unity()) {
        throw std::invalid_argument("lambda must be a root of unity when i >= 1");
    }
    for (std::size_t s = 0; s + 1 < mu.size(); ++s) {
        if (!mu[s].is_root_of_unity()) {
            throw std::invalid_argument("all structure constants but the last must be roots of unity");
        }
    }
    if (mu.back().is_root_of_unity()) {
        throw std::invalid_argument("the last structure constant must not be a root of unity");
    }
}

QuotientSpec QuotientSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("quotient JSON must be an object");
    QuotientSpec spec;
    spec.n = j.at("n").get<std::size_t>();
    spec.i = j.at("i").get<std::size_t>();
    spec.lambda = CircleElement::from_json(j.at("lambda"));
    if (j.contains("mu")) {
        for (const auto& m : j.at("mu")) spec.mu.push_back(CircleElement::from_json(m));
    }
    spec.validate();
    return spec;
}

nlohmann::json QuotientSpec::to_json() const {
    nlohmann::json ms = nlohmann::json::array();
    for (const auto& m : mu) ms.push_back(m.to_json());
    return {{"n", n}, {"i", i}, {"lambda", lambda.to_json()}, {"mu", std::move(ms)}};
}

namespace {

// The constants entering the orbit system: c_0 = lambda, c_s = mu_s.
std::vector<CircleElement> orbit_constants(const QuotientSpec& spec) {
    std::vector<CircleElement> c;
    c.push_back(spec.lambda);
    for (std::size_t s = 0; s + 1 < spec.i; ++s) c.push_back(spec.mu[s]);
    return c;
}

bool orbit_system_holds(const std::vector<CircleElement>& c, const mpz_class& r,
                        std::size_t i) {
    for (std::size_t j = 1; j <= i; ++j) {
        std::vector<std::pair<CircleElement, mpz_class>> factors;
        for (std::size_t s = 0; s < j; ++s) {
            factors.emplace_back(c[s], extbinom(r, static_cast<long>(j - s)));
        }
        if (!circle_pow_mul(factors).is_one()) return false;
    }
    return true;
}

}  // namespace

mpz_class orbit_cardinality(const QuotientSpec& spec) {
    spec.validate();
    if (spec.i == 0) return 1;
    std::vector<CircleElement> c = orbit_constants(spec);
    mpz_class orders_lcm = 1;
    for (const auto& e : c) {
        mpz_class o = e.order();
        mpz_lcm(orders_lcm.get_mpz_t(), orders_lcm.get_mpz_t(), o.get_mpz_t());
    }
    // With L the lcm of the constituent orders and M = lcm(1..i), every
    // binomial C(L*M, j) for 1 <= j <= i equals L * (M/j) * C(L*M-1, j-1),
    // a multiple of L, so r = L*M satisfies the whole system and the scan
    // stops at or before the product L*M (not the mere lcm of L and M).
    mpz_class index_lcm = 1;
    for (std::size_t j = 2; j <= spec.i; ++j) {
        mpz_class o = j;
        mpz_lcm(index_lcm.get_mpz_t(), index_lcm.get_mpz_t(), o.get_mpz_t());
    }
    mpz_class bound = orders_lcm * index_lcm;
    for (mpz_class r = 1; r <= bound; ++r) {
        if (orbit_system_holds(c, r, spec.i)) return r;
    }
    throw std::logic_error("orbit scan exceeded its proven bound");
}

CircleElement zeta_invariant(const QuotientSpec& spec) {
    spec.validate();
    if (spec.i == 0) return spec.lambda;
    mpz_class count = orbit_cardinality(spec);
    std::vector<std::pair<CircleElement, mpz_class>> factors;
    factors.emplace_back(spec.lambda, extbinom(count, static_cast<long>(spec.i + 1)));
    for (std::size_t s = 1; s <= spec.i; ++s) {
        factors.emplace_back(spec.mu[s - 1],
                             extbinom(count, static_cast<long>(spec.i + 1 - s)));
    }
    CircleElement zeta = circle_pow_mul(factors);
    if (zeta.is_root_of_unity()) {
        throw std::logic_error("zeta invariant lost its theta component");
    }
    return zeta;
}

TraceRange trace_range(const QuotientSpec& spec) {
    spec.validate();
    return TraceRange{orbit_cardinality(spec), zeta_invariant(spec).exponent()};
}

std::string TraceRange::to_text() const {
    std::ostringstream os;
    if (denominator != 1) os << "(1/" << denominator.get_str() << ")";
    os << "(Z + Z*(" << generator.to_text() << "))";
    return os.str();
}

bool quotients_isomorphic(const QuotientSpec& a, const QuotientSpec& b) {
    a.validate();
    b.validate();
    if (a.n - a.i != b.n - b.i) return false;
    if (orbit_cardinality(a) != orbit_cardinality(b)) return false;
    CircleElement za = zeta_invariant(a);
    CircleElement zb = zeta_invariant(b);
    return za == zb || za == zb.inverse();
}

}  // namespace ktorus
