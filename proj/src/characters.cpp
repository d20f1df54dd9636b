#include "gl2/characters.hpp"

#include <string>

namespace gl2 {

namespace {

constexpr Int kMaxQ = 1000000; // keeps all residue products inside 64 bits

bool is_prime(Int v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (Int d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

void check_same_q(Int qx, Int qy) {
    if (qx != qy)
        throw ParamMismatch("mixed field parameters: q=" + std::to_string(qx) +
                            " vs q=" + std::to_string(qy));
}

} // namespace

Int umod(Int v, Int m) {
    Int r = v % m;
    return r < 0 ? r + m : r;
}

FieldParams validate_params(Int p, Int n) {
    if (!is_prime(p))
        throw NotPrime("p=" + std::to_string(p) + " is not prime");
    if (p == 2)
        throw EvenCharacteristic("characteristic two is not supported");
    if (n < 1)
        throw BadExponent("exponent n=" + std::to_string(n) + " must be >= 1");
    Int q = 1;
    for (Int i = 0; i < n; ++i) {
        if (q > kMaxQ / p)
            throw BadExponent("q = p^n exceeds the supported range");
        q *= p;
    }
    FieldParams fp;
    fp.p = p;
    fp.n = n;
    fp.q = q;
    fp.m1 = q - 1;
    fp.m2 = q * q - 1;
    fp.group_order = q * (q - 1) * (q - 1) * (q + 1);
    return fp;
}

FieldParams params_for_q(Int q) {
    if (q < 3)
        throw BadExponent("q=" + std::to_string(q) + " is not an odd prime power >= 3");
    Int p = q;
    for (Int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    Int n = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++n;
    }
    if (rest != 1)
        throw NotPrime("q=" + std::to_string(q) + " is not a prime power");
    return validate_params(p, n);
}

MultChar mult_char(const FieldParams& fp, Int a) {
    return MultChar{fp.q, umod(a, fp.m1)};
}

TorusChar torus_char(const FieldParams& fp, Int k) {
    return TorusChar{fp.q, umod(k, fp.m2)};
}

MultChar mul(const MultChar& x, const MultChar& y) {
    check_same_q(x.q, y.q);
    return MultChar{x.q, umod(x.a + y.a, x.q - 1)};
}

MultChar inverse(const MultChar& x) {
    return MultChar{x.q, umod(-x.a, x.q - 1)};
}

MultChar neg_char(const MultChar& x) {
    Int m1 = x.q - 1;
    return MultChar{x.q, umod(x.a + m1 / 2, m1)};
}

std::vector<MultChar> char_sqrts(const MultChar& x) {
    if (x.a % 2 != 0) return {};
    MultChar y{x.q, x.a / 2};
    MultChar z = neg_char(y);
    if (z < y) std::swap(y, z);
    return {y, z};
}

MultChar torus_bar(const TorusChar& L) {
    return MultChar{L.q, umod(L.k, L.q - 1)};
}

TorusChar frobenius(const TorusChar& L) {
    Int m2 = L.q * L.q - 1;
    return TorusChar{L.q, umod(L.k * L.q, m2)};
}

std::optional<MultChar> decomposable_witness(const TorusChar& L) {
    if (L.k % (L.q + 1) != 0) return std::nullopt;
    return MultChar{L.q, L.k / (L.q + 1)}; // k/(q+1) < q-1 already
}

bool is_decomposable(const TorusChar& L) {
    return L.k % (L.q + 1) == 0;
}

TorusChar mul(const TorusChar& L, const TorusChar& M) {
    check_same_q(L.q, M.q);
    Int m2 = L.q * L.q - 1;
    return TorusChar{L.q, umod(L.k + M.k, m2)};
}

TorusChar inverse(const TorusChar& L) {
    Int m2 = L.q * L.q - 1;
    return TorusChar{L.q, umod(-L.k, m2)};
}

TorusChar det_twist(const TorusChar& L, const MultChar& theta) {
    check_same_q(L.q, theta.q);
    Int m2 = L.q * L.q - 1;
    return TorusChar{L.q, umod(L.k + theta.a * (L.q + 1), m2)};
}

} // namespace gl2
