#include "gl2/analysis.hpp"

#include <algorithm>
#include <map>

namespace gl2 {

MultiplicityFreeness is_multiplicity_free(const IrrepLabel& r1, const IrrepLabel& r2) {
    Decomposition d = tensor_decompose(r1, r2);
    for (const auto& [s, m] : d.terms()) {
        if (m == 1) continue;
        if (m != 2)
            throw Error("internal: multiplicity " + std::to_string(m) + " for " + to_string(s));
        Int dim = dimension(s);
        if (dim != s.q && dim != s.q + 1)
            throw Error("internal: doubled constituent " + to_string(s) + " has dimension " +
                        std::to_string(dim));
        return MultiplicityFreeness{false, s};
    }
    return MultiplicityFreeness{true, std::nullopt};
}

std::vector<IrrepLabel> self_dual_classify(const FieldParams& fp) {
    std::vector<IrrepLabel> out;
    MultChar zero = mult_char(fp, 0);
    MultChar half = mult_char(fp, fp.m1 / 2);
    out.push_back(one_dim(zero));
    out.push_back(one_dim(half));
    out.push_back(steinberg(zero));
    out.push_back(steinberg(half));
    out.push_back(principal_series(zero, half));
    for (Int a = 1; a < fp.m1 - a; ++a)
        if (a != fp.m1 / 2) out.push_back(principal_series(mult_char(fp, a), mult_char(fp, -a)));
    for (Int k = 0; k < fp.m2; k += fp.m1) {
        if (k % (fp.q + 1) == 0) continue;
        IrrepLabel c = cuspidal(torus_char(fp, k));
        if (c.x == k) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void reject_degenerate(const MultChar& a, const MultChar& b, const TorusChar& L) {
    if (a.q != b.q || a.q != L.q) throw ParamMismatch("mixed field parameters");
    if (a == b) throw DegenerateInput("principal-series pair needs distinct characters");
    if (is_decomposable(L)) throw DegenerateInput("torus character must be indecomposable");
}

} // namespace

bool same_ps_cuspidal_product(const MultChar& a, const MultChar& b, const TorusChar& L,
                              const MultChar& c, const MultChar& d, const TorusChar& M) {
    reject_degenerate(a, b, L);
    reject_degenerate(c, d, M);
    Int m1 = a.q - 1;
    return umod(a.a + b.a + torus_bar(L).a, m1) == umod(c.a + d.a + torus_bar(M).a, m1);
}

std::optional<std::pair<IrrepLabel, IrrepLabel>> alternative_factorization(
    const MultChar& a, const MultChar& b, const TorusChar& L) {
    reject_degenerate(a, b, L);
    const FieldParams fp = params_for_q(a.q);
    const Int m1 = fp.m1;
    const Int gap = umod(b.a - a.a, m1);

    for (Int t = 1; t < m1; ++t) {
        // Excluded residues: zero keeps the pair, gap collapses the series,
        // twice the gap lands on a plain twist of it.
        if (t == 0 || t == gap || t == umod(2 * gap, m1)) continue;

        IrrepLabel ps2 = principal_series(mult_char(fp, a.a + t), b);
        Int psi_bar = umod(torus_bar(L).a - t, m1);
        std::optional<IrrepLabel> partner;
        for (Int k = psi_bar; k < fp.m2; k += m1) {
            if (k % (fp.q + 1) == 0) continue;
            IrrepLabel c = cuspidal(torus_char(fp, k));
            if (c.x == k) {
                partner = c;
                break;
            }
        }
        if (!partner) continue; // no indecomposable character on this fiber (never at q >= 5)

        IrrepLabel ps1 = principal_series(a, b);
        if (tensor_decompose(ps2, *partner) != tensor_decompose(ps1, cuspidal(L)))
            throw Error("internal: alternative pair fails to reproduce the product");
        for (Int g = 0; g < m1; ++g)
            if (det_twisted(ps1, mult_char(fp, g)) == ps2)
                throw Error("internal: alternative series is a twist of the original");
        return std::make_pair(ps2, *partner);
    }
    return std::nullopt;
}

bool twist_related(const std::pair<IrrepLabel, IrrepLabel>& v,
                   const std::pair<IrrepLabel, IrrepLabel>& w) {
    Int q = v.first.q;
    Int m1 = q - 1;
    auto matches = [&](const IrrepLabel& x, const IrrepLabel& y) {
        for (Int t = 0; t < m1; ++t)
            if (det_twisted(y, MultChar{q, t}) == x) return true;
        return false;
    };
    return (matches(v.first, w.first) && matches(v.second, w.second)) ||
           (matches(v.first, w.second) && matches(v.second, w.first));
}

UniqueDecompositionReport unique_decomposition_sweep(const FieldParams& fp) {
    UniqueDecompositionReport report;
    report.q = fp.q;

    std::vector<IrrepLabel> big;
    for (const IrrepLabel& r : enumerate_irreps(fp))
        if (dimension(r) > 1) big.push_back(r);

    using Key = std::map<IrrepLabel, Int>;
    std::map<Key, std::vector<std::pair<IrrepLabel, IrrepLabel>>> by_product;
    for (std::size_t i = 0; i < big.size(); ++i) {
        for (std::size_t j = i; j < big.size(); ++j) {
            Decomposition d = tensor_decompose(big[i], big[j]);
            by_product[d.terms()].push_back({big[i], big[j]});
            ++report.pairs_checked;
        }
    }

    // Determinant residue of each principal-series x cuspidal pair, to check
    // the equality criterion in both directions.
    std::map<Int, std::vector<const Key*>> residue_keys;

    for (const auto& [key, pairs] : by_product) {
        const auto& first = pairs.front();
        bool ps_cusp = first.first.family == IrrepFamily::PrincipalSeries &&
                       first.second.family == IrrepFamily::Cuspidal;
        if (ps_cusp) {
            for (const auto& pr : pairs) {
                Int residue = umod(pr.first.x + pr.first.y + pr.second.x, fp.m1);
                auto& keys = residue_keys[residue];
                if (std::find(keys.begin(), keys.end(), &key) == keys.end())
                    keys.push_back(&key);
            }
        }
        if (pairs.size() < 2) continue;

        CollisionGroup g;
        g.pairs = pairs;
        g.ps_cuspidal_shape = ps_cusp;
        g.all_twist_related = true;
        for (std::size_t i = 1; i < pairs.size(); ++i)
            if (!twist_related(pairs[0], pairs[i])) g.all_twist_related = false;

        if (!ps_cusp && !g.all_twist_related)
            report.violations.push_back("non-twist collision involving " +
                                        to_string(pairs[0].first) + " x " +
                                        to_string(pairs[0].second));
        if (ps_cusp) {
            Int r0 = umod(pairs[0].first.x + pairs[0].first.y + pairs[0].second.x, fp.m1);
            for (const auto& pr : pairs) {
                Int r = umod(pr.first.x + pr.first.y + pr.second.x, fp.m1);
                if (r != r0)
                    report.violations.push_back(
                        "colliding series-cuspidal pairs with distinct residues near " +
                        to_string(pr.first) + " x " + to_string(pr.second));
            }
        }
        report.groups.push_back(std::move(g));
    }

    for (const auto& [residue, keys] : residue_keys) {
        if (keys.size() > 1)
            report.violations.push_back("residue " + std::to_string(residue) +
                                        " splits into " + std::to_string(keys.size()) +
                                        " distinct series-cuspidal products");
    }
    return report;
}

} // namespace gl2
