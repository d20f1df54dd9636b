#include "gl2/decompose.hpp"

namespace gl2 {

namespace {

void add_S(Decomposition& d, const MultChar& x) {
    for (const IrrepLabel& v : build_S(x)) d.add(v);
}

void add_W(Decomposition& d, const MultChar& x) {
    for (const IrrepLabel& w : build_W(x)) d.add(w);
}

void add_V(Decomposition& d, const TorusChar& L) {
    for (const IrrepLabel& w : build_V(L)) d.add(w);
}

// Steinbergs at the two square roots of x; empty when x has no square root.
void add_sqrt_steinbergs(Decomposition& d, const MultChar& x) {
    for (const MultChar& th : char_sqrts(x)) d.add(steinberg(th));
}

MultChar mc(Int q, Int a) { return MultChar{q, umod(a, q - 1)}; }
TorusChar tc(Int q, Int k) { return TorusChar{q, umod(k, q * q - 1)}; }

// Product of two Steinberg twists: dim q * q.
Decomposition steinberg_pair(Int q, Int a, Int c) {
    Decomposition d;
    MultChar ac = mc(q, a + c);
    d.add(one_dim(ac));
    d.add(steinberg(ac));
    d.add(steinberg(neg_char(ac)));
    add_S(d, mc(q, 2 * (a + c)));
    // The cuspidal shell comes from the decomposable torus character of ac,
    // where the self-removal is vacuous.
    add_V(d, tc(q, (a + c) * (q + 1)));
    return d;
}

// Steinberg times principal series: dim q * (q+1).
Decomposition steinberg_ps(Int q, Int a, Int c, Int dd) {
    Decomposition d;
    MultChar det = mc(q, 2 * a + c + dd);
    add_sqrt_steinbergs(d, det);
    add_S(d, det);
    d.add(principal_series(mc(q, a + c), mc(q, a + dd))); // doubles the copy inside S
    add_W(d, det);
    return d;
}

// Steinberg times cuspidal: dim q * (q-1).
Decomposition steinberg_cuspidal(Int q, Int a, Int k) {
    Decomposition d;
    MultChar det = mc(q, 2 * a + k);
    add_sqrt_steinbergs(d, det);
    add_S(d, det);
    add_V(d, det_twist(tc(q, k), mc(q, a)));
    return d;
}

// Principal series times principal series: dim (q+1)^2.
Decomposition ps_ps(Int q, Int a, Int b, Int c, Int dd) {
    Decomposition d;
    MultChar det = mc(q, a + b + c + dd);
    add_sqrt_steinbergs(d, det);
    add_S(d, det);
    add_W(d, det);
    d.add(ind_b_expansion(mc(q, a + c), mc(q, b + dd)));
    d.add(ind_b_expansion(mc(q, a + dd), mc(q, b + c)));
    return d;
}

// Principal series times cuspidal: dim (q+1)(q-1).
Decomposition ps_cuspidal(Int q, Int a, Int b, Int k) {
    Decomposition d;
    MultChar det = mc(q, a + b + k);
    add_sqrt_steinbergs(d, det);
    add_S(d, det);
    add_W(d, det);
    return d;
}

// Cuspidal times cuspidal: dim (q-1)^2.  Four branches on the
// decomposability of the plain and Frobenius-twisted label sums.
Decomposition cuspidal_pair(Int q, Int k, Int l) {
    Decomposition d;
    TorusChar prod = tc(q, k + l);
    TorusChar prod_frob = tc(q, k + l * q);
    auto w1 = decomposable_witness(prod);
    auto w2 = decomposable_witness(prod_frob);
    MultChar det = mc(q, k + l);
    add_S(d, det);
    if (!w1 && !w2) {
        add_sqrt_steinbergs(d, det);
        IrrepLabel c1 = cuspidal(prod), c2 = cuspidal(prod_frob);
        for (const IrrepLabel& w : build_W(det))
            if (w != c1 && w != c2) d.add(w);
    } else if (!w1 && w2) {
        d.add(one_dim(*w2));
        d.add(steinberg(neg_char(*w2)));
        IrrepLabel c1 = cuspidal(prod);
        for (const IrrepLabel& w : build_W(det))
            if (w != c1) d.add(w);
    } else if (w1 && !w2) {
        d.add(one_dim(*w1));
        d.add(steinberg(neg_char(*w1)));
        IrrepLabel c2 = cuspidal(prod_frob);
        for (const IrrepLabel& w : build_W(det))
            if (w != c2) d.add(w);
    } else {
        // Both decomposable forces the witnesses to be each other's neg pair.
        if (*w2 != neg_char(*w1))
            throw Error("internal: decomposable witness pair is not a neg pair");
        d.add(one_dim(*w1));
        d.add(one_dim(*w2));
        add_W(d, det);
    }
    return d;
}

struct OrderedPair {
    IrrepLabel lo;
    IrrepLabel hi;
};

OrderedPair by_family(const IrrepLabel& r1, const IrrepLabel& r2) {
    if (r1.q != r2.q) throw ParamMismatch("mixed field parameters in tensor product");
    IrrepLabel a = canonicalize(r1), b = canonicalize(r2);
    if (static_cast<int>(b.family) < static_cast<int>(a.family)) std::swap(a, b);
    return {a, b};
}

} // namespace

Decomposition tensor_decompose(const IrrepLabel& r1, const IrrepLabel& r2) {
    auto [lo, hi] = by_family(r1, r2);
    Int q = lo.q;

    if (lo.family == IrrepFamily::OneDim) {
        Decomposition d;
        d.add(det_twisted(hi, mc(q, lo.x)));
        return d;
    }
    if (lo.family == IrrepFamily::Steinberg) {
        switch (hi.family) {
            case IrrepFamily::Steinberg: return steinberg_pair(q, lo.x, hi.x);
            case IrrepFamily::PrincipalSeries: return steinberg_ps(q, lo.x, hi.x, hi.y);
            default: return steinberg_cuspidal(q, lo.x, hi.x);
        }
    }
    if (lo.family == IrrepFamily::PrincipalSeries) {
        if (hi.family == IrrepFamily::PrincipalSeries)
            return ps_ps(q, lo.x, lo.y, hi.x, hi.y);
        return ps_cuspidal(q, lo.x, lo.y, hi.x);
    }
    return cuspidal_pair(q, lo.x, hi.x);
}

Decomposition ind_tm1_decompose(const TorusChar& L) {
    Decomposition d;
    MultChar bar = torus_bar(L);
    if (auto beta = decomposable_witness(L)) {
        d.add(one_dim(*beta));
        d.add(steinberg(neg_char(*beta)));
        add_S(d, bar);
        add_W(d, bar);
    } else {
        // Square restriction contributes the two Steinberg roots; a nonsquare
        // contributes none.  Both cases share the S shell and the punctured W.
        add_sqrt_steinbergs(d, bar);
        add_S(d, bar);
        add_V(d, L);
    }
    return d;
}

Decomposition ind_t1_decompose(const MultChar& alpha, const MultChar& beta) {
    if (alpha.q != beta.q) throw ParamMismatch("mixed field parameters in torus character");
    Decomposition d;
    MultChar det = mul(alpha, beta);
    if (alpha == beta) {
        d.add(one_dim(alpha));
        d.add(steinberg(alpha), 2);
        d.add(steinberg(neg_char(alpha)));
    } else {
        d.add(principal_series(alpha, beta)); // second copy arrives inside S
        add_sqrt_steinbergs(d, det);
    }
    add_S(d, det);
    add_W(d, det);
    return d;
}

Decomposition ind_zu_decompose(const MultChar& rho) {
    Decomposition d;
    add_sqrt_steinbergs(d, rho);
    add_S(d, rho);
    add_W(d, rho);
    return d;
}

Decomposition ind_b_expansion(const MultChar& mu, const MultChar& nu) {
    Decomposition d;
    if (mu == nu) {
        d.add(one_dim(mu));
        d.add(steinberg(mu));
    } else {
        d.add(principal_series(mu, nu));
    }
    return d;
}

Decomposition virtual_cuspidal(const TorusChar& Psi) {
    Decomposition d = Decomposition::virtual_sum();
    if (auto alpha = decomposable_witness(Psi)) {
        d.add(steinberg(*alpha));
        d.add(one_dim(*alpha), -1);
    } else {
        d.add(cuspidal(Psi));
    }
    return d;
}

Decomposition pantoja_tensor(const IrrepLabel& r1, const IrrepLabel& r2) {
    auto [lo, hi] = by_family(r1, r2);
    Int q = lo.q;

    // One-dimensional factors just relabel; no reduction to prove there.
    if (lo.family == IrrepFamily::OneDim) return tensor_decompose(lo, hi);

    Decomposition d = Decomposition::virtual_sum();
    if (lo.family == IrrepFamily::Steinberg) {
        Int a = lo.x;
        switch (hi.family) {
            case IrrepFamily::Steinberg:
                d.add(ind_tm1_decompose(tc(q, (a + hi.x) * (q + 1))));
                d.add(steinberg(mc(q, a + hi.x)));
                break;
            case IrrepFamily::PrincipalSeries:
                d.add(ind_t1_decompose(mc(q, a + hi.x), mc(q, a + hi.y)));
                break;
            default:
                d.add(ind_tm1_decompose(det_twist(tc(q, hi.x), mc(q, a))));
                break;
        }
    } else if (lo.family == IrrepFamily::PrincipalSeries) {
        if (hi.family == IrrepFamily::PrincipalSeries) {
            // (a,b) x (c,d): induce the straight pairing, correct by the
            // crossed one.
            d.add(ind_t1_decompose(mc(q, lo.x + hi.x), mc(q, lo.y + hi.y)));
            d.add(ind_b_expansion(mc(q, lo.y + hi.x), mc(q, lo.x + hi.y)));
        } else {
            MultChar det = mc(q, lo.x + lo.y);
            MultChar bar = torus_bar(tc(q, hi.x));
            d.add(ind_t1_decompose(det, bar));
            d.add(ind_b_expansion(det, bar), -1);
        }
    } else {
        // cuspidal x cuspidal: induce the Frobenius-crossed product, remove
        // the straight one (virtually, to cover its decomposable shape).
        d.add(ind_tm1_decompose(tc(q, lo.x + hi.x * q)));
        d.add(virtual_cuspidal(tc(q, lo.x + hi.x)), -1);
    }
    return d.materialized();
}

} // namespace gl2
