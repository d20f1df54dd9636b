#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <vector>

#include "gl2/characters.hpp"

namespace gl2 {

// Formal integer combination of N-th roots of unity: a sparse map from
// exponent residue mod N to integer coefficient.  Zero coefficients are never
// stored.  This is the exact currency of the character table; no floating
// point appears anywhere.
class CycloValue {
public:
    explicit CycloValue(Int modulus);
    static CycloValue integer(Int modulus, Int value);
    static CycloValue root(Int modulus, Int exponent, Int coeff = 1);

    Int modulus() const { return modulus_; }
    const std::map<Int, Int>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(Int exponent, Int coeff);

    CycloValue& operator+=(const CycloValue& o);
    CycloValue& operator-=(const CycloValue& o);
    friend CycloValue operator+(CycloValue x, const CycloValue& y) { return x += y; }
    friend CycloValue operator-(CycloValue x, const CycloValue& y) { return x -= y; }
    friend CycloValue operator*(const CycloValue& x, const CycloValue& y);

    // Complex conjugation is exponent negation.
    CycloValue conjugate() const;
    CycloValue scaled(Int c) const;

    friend bool operator==(const CycloValue&, const CycloValue&) = default;

private:
    Int modulus_;
    std::map<Int, Int> coeffs_;
};

// Certified integer extraction from formal root-of-unity sums.
//
// A fixed root w of multiplicative order exactly N in Z/P (P prime, P = 1 mod
// N) gives an exact ring homomorphism "evaluate at zeta -> w".  When a caller
// knows on mathematical grounds that s/divisor is a rational integer r with
// |r| <= bound, and P > 2*divisor*bound, the symmetric lift of
// image(s)/divisor mod P recovers r exactly.  Every extraction is performed
// under two independent (P, w) pairs; any disagreement (or a lift outside the
// bound) throws NotAnInteger and indicates a bug in the caller's mathematics,
// never a rounding issue.
class ModularEvaluator {
public:
    static constexpr std::uint64_t kDefaultSeed = 1;

    // Both primes exceed 2 q (q-1)^2 (q+1)^4, enough for every divisor/bound
    // pair used by the character-table sweeps.  The root search draws random
    // residues from a seeded generator, so construction is deterministic.
    explicit ModularEvaluator(const FieldParams& fp, std::uint64_t seed = kDefaultSeed);

    struct Image {
        Int a = 0;
        Int b = 0;
    };

    Int modulus() const { return modulus_; }
    Int prime_a() const { return pa_.P; }
    Int prime_b() const { return pb_.P; }
    Int root_a() const { return pa_.w; }
    Int root_b() const { return pb_.w; }

    Image image(const CycloValue& s) const;
    Image root_image(Int exponent) const; // image of zeta^exponent, exponent in [0, N)
    Image integer_image(Int value) const;

    Image add(Image x, Image y) const;
    Image sub(Image x, Image y) const;
    Image mul(Image x, Image y) const;

    Int extract_integer(const CycloValue& s, Int divisor, Int bound) const;
    Int extract(Image s, Int divisor, Int bound) const;

    unsigned long long extraction_count() const { return extractions_.load(); }
    unsigned long long disagreement_count() const { return disagreements_.load(); }

private:
    struct Point {
        Int P = 0;
        Int w = 0;
        std::vector<Int> pow; // pow[e] = w^e mod P, e in [0, N)
    };

    Int modulus_;
    Point pa_, pb_;
    mutable std::atomic<unsigned long long> extractions_{0};
    mutable std::atomic<unsigned long long> disagreements_{0};
};

} // namespace gl2
