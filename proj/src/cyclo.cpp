#include "gl2/cyclo.hpp"

#include <random>
#include <string>

namespace gl2 {

namespace {

Int mulmod(Int a, Int b, Int p) {
    return static_cast<Int>(static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
                            static_cast<unsigned __int128>(p));
}

Int powmod(Int base, Int exp, Int p) {
    Int r = 1 % p;
    Int b = umod(base, p);
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        exp >>= 1;
    }
    return r;
}

bool is_prime(Int v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (Int d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

std::vector<Int> distinct_prime_factors(Int v) {
    std::vector<Int> out;
    for (Int d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

} // namespace

CycloValue::CycloValue(Int modulus) : modulus_(modulus) {
    if (modulus < 1) throw ModulusMismatch("cyclotomic modulus must be positive");
}

CycloValue CycloValue::integer(Int modulus, Int value) {
    CycloValue v(modulus);
    v.add_term(0, value);
    return v;
}

CycloValue CycloValue::root(Int modulus, Int exponent, Int coeff) {
    CycloValue v(modulus);
    v.add_term(exponent, coeff);
    return v;
}

void CycloValue::add_term(Int exponent, Int coeff) {
    if (coeff == 0) return;
    Int e = umod(exponent, modulus_);
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, coeff);
    } else if ((it->second += coeff) == 0) {
        coeffs_.erase(it);
    }
}

CycloValue& CycloValue::operator+=(const CycloValue& o) {
    if (modulus_ != o.modulus_) throw ModulusMismatch("mixed cyclotomic moduli");
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

CycloValue& CycloValue::operator-=(const CycloValue& o) {
    if (modulus_ != o.modulus_) throw ModulusMismatch("mixed cyclotomic moduli");
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

CycloValue operator*(const CycloValue& x, const CycloValue& y) {
    if (x.modulus_ != y.modulus_) throw ModulusMismatch("mixed cyclotomic moduli");
    CycloValue r(x.modulus_);
    for (const auto& [ex, cx] : x.coeffs_)
        for (const auto& [ey, cy] : y.coeffs_)
            r.add_term(ex + ey, cx * cy);
    return r;
}

CycloValue CycloValue::conjugate() const {
    CycloValue r(modulus_);
    for (const auto& [e, c] : coeffs_) r.add_term(-e, c);
    return r;
}

CycloValue CycloValue::scaled(Int c) const {
    CycloValue r(modulus_);
    for (const auto& [e, cc] : coeffs_) r.add_term(e, cc * c);
    return r;
}

ModularEvaluator::ModularEvaluator(const FieldParams& fp, std::uint64_t seed)
    : modulus_(fp.m2) {
    // Lower bound 2 |G| (q+1)^3 = 2 q (q-1)^2 (q+1)^4, computed with overflow
    // checks so oversized q fails loudly instead of wrapping.
    const Int limit = static_cast<Int>(4e18);
    Int bound = 2 * fp.group_order;
    for (int i = 0; i < 3; ++i) {
        if (bound > limit / (fp.q + 1))
            throw Error("q too large for exact modular evaluation");
        bound *= fp.q + 1;
    }

    std::mt19937_64 rng(seed);
    const std::vector<Int> n_factors = distinct_prime_factors(modulus_);

    auto make_point = [&](Int above) {
        Point pt;
        Int c = (above / modulus_ + 1) * modulus_ + 1; // smallest c > above, c = 1 mod N
        while (!is_prime(c)) c += modulus_;
        pt.P = c;
        std::uniform_int_distribution<Int> pick(2, pt.P - 2);
        for (;;) {
            Int w = powmod(pick(rng), (pt.P - 1) / modulus_, pt.P);
            if (w == 1) continue;
            bool full_order = true;
            for (Int f : n_factors) {
                if (powmod(w, modulus_ / f, pt.P) == 1) {
                    full_order = false;
                    break;
                }
            }
            if (!full_order) continue;
            pt.w = w;
            break;
        }
        pt.pow.resize(modulus_);
        pt.pow[0] = 1;
        for (Int e = 1; e < modulus_; ++e) pt.pow[e] = mulmod(pt.pow[e - 1], pt.w, pt.P);
        return pt;
    };

    pa_ = make_point(bound);
    pb_ = make_point(pa_.P);
}

ModularEvaluator::Image ModularEvaluator::image(const CycloValue& s) const {
    if (s.modulus() != modulus_) throw ModulusMismatch("value modulus does not match evaluator");
    Image r;
    for (const auto& [e, c] : s.terms()) {
        r.a = umod(r.a + mulmod(umod(c, pa_.P), pa_.pow[e], pa_.P), pa_.P);
        r.b = umod(r.b + mulmod(umod(c, pb_.P), pb_.pow[e], pb_.P), pb_.P);
    }
    return r;
}

ModularEvaluator::Image ModularEvaluator::root_image(Int exponent) const {
    return Image{pa_.pow[exponent], pb_.pow[exponent]};
}

ModularEvaluator::Image ModularEvaluator::integer_image(Int value) const {
    return Image{umod(value, pa_.P), umod(value, pb_.P)};
}

ModularEvaluator::Image ModularEvaluator::add(Image x, Image y) const {
    return Image{umod(x.a + y.a, pa_.P), umod(x.b + y.b, pb_.P)};
}

ModularEvaluator::Image ModularEvaluator::sub(Image x, Image y) const {
    return Image{umod(x.a - y.a, pa_.P), umod(x.b - y.b, pb_.P)};
}

ModularEvaluator::Image ModularEvaluator::mul(Image x, Image y) const {
    return Image{mulmod(x.a, y.a, pa_.P), mulmod(x.b, y.b, pb_.P)};
}

Int ModularEvaluator::extract_integer(const CycloValue& s, Int divisor, Int bound) const {
    return extract(image(s), divisor, bound);
}

Int ModularEvaluator::extract(Image s, Int divisor, Int bound) const {
    if (divisor < 1 || bound < 0)
        throw NotAnInteger("extraction needs divisor >= 1 and bound >= 0");
    if (static_cast<unsigned __int128>(2) * divisor * bound >= static_cast<unsigned __int128>(pa_.P))
        throw NotAnInteger("extraction bound too large for the evaluator primes");
    ++extractions_;

    auto lift = [](Int v, Int p) { return v > p / 2 ? v - p : v; };
    Int ra = lift(mulmod(s.a, powmod(divisor, pa_.P - 2, pa_.P), pa_.P), pa_.P);
    Int rb = lift(mulmod(s.b, powmod(divisor, pb_.P - 2, pb_.P), pb_.P), pb_.P);
    if (ra != rb) {
        ++disagreements_;
        throw NotAnInteger("independent evaluations disagree: " + std::to_string(ra) + " vs " +
                           std::to_string(rb));
    }
    if (ra > bound || ra < -bound) {
        ++disagreements_;
        throw NotAnInteger("extracted value " + std::to_string(ra) + " exceeds bound " +
                           std::to_string(bound));
    }
    return ra;
}

} // namespace gl2
