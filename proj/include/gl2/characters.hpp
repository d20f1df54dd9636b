#pragma once

#include <optional>
#include <vector>

#include "gl2/errors.hpp"

namespace gl2 {

using Int = long long;

// Canonical residue of v in [0, m).
Int umod(Int v, Int m);

// Parameters of one odd prime power q = p^n.  Everything downstream is residue
// arithmetic modulo m1 = q-1 (characters of the multiplicative group) and
// m2 = q^2-1 (characters of the degree-two extension's multiplicative group).
struct FieldParams {
    Int p = 0;
    Int n = 0;
    Int q = 0;
    Int m1 = 0;          // q - 1
    Int m2 = 0;          // q^2 - 1
    Int group_order = 0; // q (q-1)^2 (q+1)

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

// Throws NotPrime / EvenCharacteristic / BadExponent.
FieldParams validate_params(Int p, Int n);

// Factors q and validates it as an odd prime power.
FieldParams params_for_q(Int q);

// Character of F_q^x: the exponent of a fixed generator of the dual group,
// which is cyclic of order q-1.
struct MultChar {
    Int q = 0;
    Int a = 0; // 0 <= a < q-1

    friend auto operator<=>(const MultChar&, const MultChar&) = default;
};

// Character of the multiplicative group of the quadratic extension (the
// nonsplit torus): an exponent mod q^2-1 against a fixed generator.
struct TorusChar {
    Int q = 0;
    Int k = 0; // 0 <= k < q^2-1

    friend auto operator<=>(const TorusChar&, const TorusChar&) = default;
};

MultChar mult_char(const FieldParams& fp, Int a);
TorusChar torus_char(const FieldParams& fp, Int k);

MultChar mul(const MultChar& x, const MultChar& y);
MultChar inverse(const MultChar& x);

// The unique character distinct from x with the same square: exponent
// a + (q-1)/2.  Well defined because q is odd, so q-1 is even.
MultChar neg_char(const MultChar& x);

// All y with y*y = x: empty when the exponent is odd, exactly two otherwise
// (a square root and its neg_char partner), returned in increasing order.
std::vector<MultChar> char_sqrts(const MultChar& x);

// Restriction to the scalars inside the extension field.  The embedding sends
// the small generator to the (q+1)-st power of the big one, so restriction is
// plain reduction of the exponent mod q-1.
MultChar torus_bar(const TorusChar& L);

// L -> L^q.  An involution on exponents; its fixed points are exactly the
// decomposable characters.
TorusChar frobenius(const TorusChar& L);

// Witness beta with L = beta o det, present iff (q+1) | k.
std::optional<MultChar> decomposable_witness(const TorusChar& L);
bool is_decomposable(const TorusChar& L);

TorusChar mul(const TorusChar& L, const TorusChar& M);
TorusChar inverse(const TorusChar& L);

// Multiply by theta o det: k -> k + a_theta * (q+1).
TorusChar det_twist(const TorusChar& L, const MultChar& theta);

} // namespace gl2
