// Acceptance gate: one line per criterion, PASS or FAIL, exit code equal to
// the number of failures.  Every numeric claim is checked here end to end;
// the oracle side never calls the closed-form code it is checking.
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gl2/analysis.hpp"
#include "gl2/decompose.hpp"
#include "gl2/oracle.hpp"

using namespace gl2;

namespace {

struct Context {
    FieldParams fp;
    CharacterTable table;
    ModularEvaluator eval;
    Oracle oracle;

    explicit Context(Int q) : fp(params_for_q(q)), table(fp), eval(fp), oracle(table, eval) {}
};

std::map<Int, std::unique_ptr<Context>> g_contexts;

Context& ctx(Int q) {
    auto it = g_contexts.find(q);
    if (it == g_contexts.end())
        it = g_contexts.emplace(q, std::make_unique<Context>(q)).first;
    return *it->second;
}

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

// Criterion 1: every closed-form tensor decomposition, for every unordered
// pair of irreducibles at q = 3, 5, 7, 9, 11, equals the brute-force
// character-table decomposition and has the right total dimension.
std::string criterion_tensor_oracle() {
    Int products = 0;
    for (Int q : {3, 5, 7, 9, 11}) {
        Context& c = ctx(q);
        const std::vector<IrrepLabel>& all = c.table.irreps();
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i; j < all.size(); ++j) {
                Decomposition closed = tensor_decompose(all[i], all[j]);
                require(closed.total_dimension() == dimension(all[i]) * dimension(all[j]),
                        "dimension mismatch at q=" + std::to_string(q) + " " +
                            to_string(all[i]) + " x " + to_string(all[j]));
                require(c.oracle.tensor_decompose(all[i], all[j]) == closed,
                        "oracle disagrees at q=" + std::to_string(q) + " " +
                            to_string(all[i]) + " x " + to_string(all[j]));
                ++products;
            }
        }
    }
    require(products == 12012, "expected 12012 products, saw " + std::to_string(products));
    return "q=3,5,7,9,11; " + std::to_string(products) + " products";
}

// Criterion 2: all three induced-representation families, over every inducing
// character at q = 3, 5, 7, 9, match the reciprocity oracle and their
// dimension targets q(q-1), q(q+1), q^2-1.
std::string criterion_induction() {
    Int characters = 0;
    for (Int q : {3, 5, 7, 9}) {
        Context& c = ctx(q);
        const FieldParams& fp = c.fp;
        for (Int k = 0; k < fp.m2; ++k) {
            TorusChar L = torus_char(fp, k);
            Decomposition d = ind_tm1_decompose(L);
            require(d.total_dimension() == fp.q * (fp.q - 1),
                    "nonsplit induction dimension at q=" + std::to_string(q));
            require(c.oracle.aniso_torus_decompose(L) == d,
                    "nonsplit induction differs at q=" + std::to_string(q) +
                        " k=" + std::to_string(k));
            ++characters;
        }
        for (Int a = 0; a < fp.m1; ++a) {
            for (Int b = 0; b < fp.m1; ++b) {
                MultChar alpha = mult_char(fp, a), beta = mult_char(fp, b);
                Decomposition d = ind_t1_decompose(alpha, beta);
                require(d.total_dimension() == fp.q * (fp.q + 1),
                        "split induction dimension at q=" + std::to_string(q));
                require(c.oracle.split_torus_decompose(alpha, beta) == d,
                        "split induction differs at q=" + std::to_string(q) + " (" +
                            std::to_string(a) + "," + std::to_string(b) + ")");
                ++characters;
            }
        }
        for (Int rho = 0; rho < fp.m1; ++rho) {
            MultChar r = mult_char(fp, rho);
            Decomposition d = ind_zu_decompose(r);
            require(d.total_dimension() == fp.q * fp.q - 1,
                    "scalar-unipotent induction dimension at q=" + std::to_string(q));
            require(c.oracle.zu_decompose(r) == d,
                    "scalar-unipotent induction differs at q=" + std::to_string(q) +
                        " rho=" + std::to_string(rho));
            ++characters;
        }
    }
    return "q=3,5,7,9; " + std::to_string(characters) + " inducing characters";
}

// Criterion 3: the independent route through torus inductions with signed
// corrections reproduces every tensor decomposition at q = 3, 5, 7.
std::string criterion_induction_route() {
    Int products = 0;
    for (Int q : {3, 5, 7}) {
        FieldParams fp = params_for_q(q);
        std::vector<IrrepLabel> all = enumerate_irreps(fp);
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i; j < all.size(); ++j) {
                require(pantoja_tensor(all[i], all[j]) == tensor_decompose(all[i], all[j]),
                        "routes differ at q=" + std::to_string(q) + " " + to_string(all[i]) +
                            " x " + to_string(all[j]));
                ++products;
            }
        }
    }
    return "q=3,5,7; " + std::to_string(products) + " products";
}

// Criterion 4: exact first and second orthogonality of the character table at
// q = 3, 5, 7, 9, computed through the formal cyclotomic path.
std::string criterion_orthogonality() {
    Int inner_products = 0;
    for (Int q : {3, 5, 7, 9}) {
        Context& c = ctx(q);
        const FieldParams& fp = c.fp;
        std::size_t n = c.table.irreps().size();
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t s = r; s < n; ++s) {
                CycloValue acc(fp.m2);
                for (std::size_t col = 0; col < n; ++col)
                    acc += (c.table.value(r, col) * c.table.value(s, col).conjugate())
                               .scaled(c.table.classes()[col].size);
                require(c.eval.extract_integer(acc, fp.group_order, 1) == (r == s ? 1 : 0),
                        "row orthogonality fails at q=" + std::to_string(q));
                ++inner_products;
            }
        }
        for (std::size_t col = 0; col < n; ++col) {
            for (std::size_t cp = col; cp < n; ++cp) {
                CycloValue acc(fp.m2);
                for (std::size_t r = 0; r < n; ++r)
                    acc += c.table.value(r, col) * c.table.value(r, cp).conjugate();
                Int want = (col == cp) ? fp.group_order / c.table.classes()[col].size : 0;
                require(c.eval.extract_integer(acc, 1, fp.group_order) == want,
                        "column orthogonality fails at q=" + std::to_string(q));
                ++inner_products;
            }
        }
    }
    return "q=3,5,7,9; " + std::to_string(inner_products) + " inner products";
}

// Criterion 5: over all products at q = 3, 5, 7, 9, multiplicities never
// exceed two, two is attained, doubled constituents always have dimension q
// or q+1, and the non-free products are exactly the steinberg x series and
// series x series shapes.
std::string criterion_multiplicity() {
    Int doubled_products = 0;
    for (Int q : {3, 5, 7, 9}) {
        FieldParams fp = params_for_q(q);
        std::vector<IrrepLabel> all = enumerate_irreps(fp);
        Int max_seen = 0;
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i; j < all.size(); ++j) {
                Decomposition d = tensor_decompose(all[i], all[j]);
                Int mm = d.max_multiplicity();
                require(mm <= 2, "multiplicity above two at q=" + std::to_string(q));
                if (mm > max_seen) max_seen = mm;
                MultiplicityFreeness mf = is_multiplicity_free(all[i], all[j]);
                bool st_ps = all[i].family == IrrepFamily::Steinberg &&
                             all[j].family == IrrepFamily::PrincipalSeries;
                bool ps_ps = all[i].family == IrrepFamily::PrincipalSeries &&
                             all[j].family == IrrepFamily::PrincipalSeries;
                require(mf.multiplicity_free == !(st_ps || ps_ps),
                        "wrong multiplicity-free shape at q=" + std::to_string(q) + " " +
                            to_string(all[i]) + " x " + to_string(all[j]));
                if (!mf.multiplicity_free) {
                    Int dim = dimension(*mf.doubled);
                    require(dim == q || dim == q + 1,
                            "doubled constituent of unexpected dimension");
                    ++doubled_products;
                }
            }
        }
        require(max_seen == 2, "multiplicity two not attained at q=" + std::to_string(q));
    }
    return "q=3,5,7,9; " + std::to_string(doubled_products) + " doubled products";
}

// Criterion 6: the closed-form self-dual list equals the duality sweep and
// the oracle's trivial-constituent-in-the-square test, with 4 + (q-1)
// members at q = 3, 5, 7, 9.
std::string criterion_selfdual() {
    std::string counts;
    for (Int q : {3, 5, 7, 9}) {
        Context& c = ctx(q);
        const FieldParams& fp = c.fp;
        std::vector<IrrepLabel> listed = self_dual_classify(fp);
        std::vector<IrrepLabel> swept;
        IrrepLabel triv = one_dim(mult_char(fp, 0));
        for (const IrrepLabel& r : enumerate_irreps(fp)) {
            bool by_dual = dual(r) == r;
            bool by_square = c.oracle.tensor_multiplicity(r, r, triv) == 1;
            require(by_dual == by_square,
                    "duality and square tests disagree at q=" + std::to_string(q) + " " +
                        to_string(r));
            if (by_dual) swept.push_back(r);
        }
        require(listed == swept, "closed-form list differs at q=" + std::to_string(q));
        require(static_cast<Int>(listed.size()) == 4 + (q - 1),
                "self-dual count at q=" + std::to_string(q));
        if (!counts.empty()) counts += ",";
        counts += std::to_string(listed.size());
    }
    return "q=3,5,7,9; counts " + counts;
}

// Criterion 7: at q = 5, 7 two series x cuspidal products coincide exactly
// when their determinant residues agree, and every such product admits an
// alternative factorization that is not a twist of the original pair.
std::string criterion_series_cuspidal() {
    Int comparisons = 0, witnesses = 0;
    for (Int q : {5, 7}) {
        FieldParams fp = params_for_q(q);
        std::vector<IrrepLabel> series, cusps;
        for (const IrrepLabel& r : enumerate_irreps(fp)) {
            if (r.family == IrrepFamily::PrincipalSeries) series.push_back(r);
            if (r.family == IrrepFamily::Cuspidal) cusps.push_back(r);
        }
        std::vector<std::pair<std::pair<IrrepLabel, IrrepLabel>, Decomposition>> products;
        for (const IrrepLabel& s : series)
            for (const IrrepLabel& cu : cusps)
                products.push_back({{s, cu}, tensor_decompose(s, cu)});
        for (const auto& [p1, d1] : products) {
            for (const auto& [p2, d2] : products) {
                bool same = same_ps_cuspidal_product(
                    mult_char(fp, p1.first.x), mult_char(fp, p1.first.y),
                    torus_char(fp, p1.second.x), mult_char(fp, p2.first.x),
                    mult_char(fp, p2.first.y), torus_char(fp, p2.second.x));
                require(same == (d1 == d2),
                        "residue criterion fails at q=" + std::to_string(q));
                ++comparisons;
            }
        }
        for (const auto& [p, d] : products) {
            auto alt = alternative_factorization(mult_char(fp, p.first.x),
                                                 mult_char(fp, p.first.y),
                                                 torus_char(fp, p.second.x));
            require(alt.has_value(), "missing alternative factorization at q=" +
                                         std::to_string(q));
            require(tensor_decompose(alt->first, alt->second) == d,
                    "alternative factorization changes the product");
            require(!twist_related(p, *alt),
                    "alternative factorization is a twist of the original");
            ++witnesses;
        }
    }
    return "q=5,7; " + std::to_string(comparisons) + " comparisons, " +
           std::to_string(witnesses) + " non-twist witnesses";
}

// Criterion 8: the unique-decomposition sweep reports no violations at
// q = 3, 5.
std::string criterion_unique_sweep() {
    Int pairs = 0;
    for (Int q : {3, 5}) {
        UniqueDecompositionReport report = unique_decomposition_sweep(params_for_q(q));
        for (const std::string& v : report.violations)
            throw CheckFailure("q=" + std::to_string(q) + ": " + v);
        pairs += report.pairs_checked;
    }
    return "q=3,5; " + std::to_string(pairs) + " pairs, no violations";
}

// Criterion 9: constituent-shell sizes match their closed-form counts at
// q = 3, 5, 7, 9, 11, 13: series shells (q-3)/2 or (q-1)/2 by parity,
// cuspidal shells (q-1)/2 or (q+1)/2, punctured shells smaller by one
// exactly for indecomposable labels, and family totals filling q^2-1.
std::string criterion_shell_counts() {
    Int shells = 0;
    for (Int q : {3, 5, 7, 9, 11, 13}) {
        FieldParams fp = params_for_q(q);
        Int series_total = 0, cusp_total = 0;
        for (Int x = 0; x < fp.m1; ++x) {
            MultChar ch = mult_char(fp, x);
            Int s = static_cast<Int>(build_S(ch).size());
            Int w = static_cast<Int>(build_W(ch).size());
            require(s == (x % 2 == 0 ? (q - 3) / 2 : (q - 1) / 2),
                    "series shell size at q=" + std::to_string(q));
            require(w == (x % 2 == 0 ? (q - 1) / 2 : (q + 1) / 2),
                    "cuspidal shell size at q=" + std::to_string(q));
            series_total += s;
            cusp_total += w;
            shells += 2;
        }
        require(series_total == fp.m1 * (fp.m1 - 1) / 2, "series family total");
        require(cusp_total == q * fp.m1 / 2, "cuspidal family total");
        for (Int k = 0; k < fp.m2; ++k) {
            TorusChar L = torus_char(fp, k);
            Int w = static_cast<Int>(build_W(torus_bar(L)).size());
            Int v = static_cast<Int>(build_V(L).size());
            require(v == w - (is_decomposable(L) ? 0 : 1),
                    "punctured shell size at q=" + std::to_string(q));
            ++shells;
        }
        std::vector<IrrepLabel> all = enumerate_irreps(fp);
        Int sum_sq = 0;
        for (const IrrepLabel& r : all) sum_sq += dimension(r) * dimension(r);
        require(static_cast<Int>(all.size()) == q * q - 1, "irrep count");
        require(sum_sq == fp.group_order, "dimension mass");
    }
    return "q=3,5,7,9,11,13; " + std::to_string(shells) + " shells";
}

// Criterion 10: at q = 3 the landscape degenerates: one principal series,
// three cuspidals, every collision among their ten products is explained by
// twists, and no alternative factorization exists.
std::string criterion_q3_degeneracy() {
    FieldParams fp = params_for_q(3);
    std::vector<IrrepLabel> series, cusps;
    for (const IrrepLabel& r : enumerate_irreps(fp)) {
        if (r.family == IrrepFamily::PrincipalSeries) series.push_back(r);
        if (r.family == IrrepFamily::Cuspidal) cusps.push_back(r);
    }
    require(series.size() == 1 && cusps.size() == 3, "expected 1 series and 3 cuspidals");

    std::vector<IrrepLabel> four = series;
    four.insert(four.end(), cusps.begin(), cusps.end());
    std::vector<std::pair<std::pair<IrrepLabel, IrrepLabel>, Decomposition>> products;
    for (std::size_t i = 0; i < four.size(); ++i)
        for (std::size_t j = i; j < four.size(); ++j)
            products.push_back({{four[i], four[j]}, tensor_decompose(four[i], four[j])});
    require(products.size() == 10, "expected ten products");
    Int collisions = 0;
    for (std::size_t i = 0; i < products.size(); ++i) {
        for (std::size_t j = i + 1; j < products.size(); ++j) {
            if (products[i].second != products[j].second) continue;
            require(twist_related(products[i].first, products[j].first),
                    "non-twist collision at q=3");
            ++collisions;
        }
    }
    require(collisions > 0, "expected at least one collision at q=3");
    for (const IrrepLabel& cu : cusps)
        require(!alternative_factorization(mult_char(fp, series[0].x),
                                           mult_char(fp, series[0].y),
                                           torus_char(fp, cu.x))
                     .has_value(),
                "unexpected alternative factorization at q=3");
    return std::to_string(collisions) + " collisions, all twists; no alternative pairs";
}

// Criterion 11: every certified extraction agreed across the two independent
// primes, and the run exercised the dual-prime path heavily.
std::string criterion_dual_prime() {
    unsigned long long extractions = 0, disagreements = 0;
    for (const auto& [q, c] : g_contexts) {
        extractions += c->eval.extraction_count();
        disagreements += c->eval.disagreement_count();
    }
    require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    require(extractions >= 100000,
            "only " + std::to_string(extractions) + " extractions exercised");
    return std::to_string(extractions) + " extractions, 0 disagreements";
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria = {
        {"closed-form tensor decompositions match the brute-force oracle",
         criterion_tensor_oracle},
        {"induced decompositions match the reciprocity oracle", criterion_induction},
        {"the torus-induction route reproduces every tensor product",
         criterion_induction_route},
        {"character tables satisfy exact row and column orthogonality",
         criterion_orthogonality},
        {"multiplicity bound two, attained only in the two series shapes",
         criterion_multiplicity},
        {"self-dual classification agrees three ways", criterion_selfdual},
        {"series-cuspidal products collide exactly on determinant residues, with "
         "non-twist witnesses",
         criterion_series_cuspidal},
        {"unique-decomposition sweeps are violation-free", criterion_unique_sweep},
        {"constituent shell sizes match their counting formulas", criterion_shell_counts},
        {"q=3 collisions are all twists and admit no alternative factorization",
         criterion_q3_degeneracy},
        {"dual-prime extraction integrity", criterion_dual_prime},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = true;
        try {
            detail = criteria[i].run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  [" << (i + 1) << "/" << criteria.size()
                  << "] " << criteria[i].name << " (" << detail << ")\n"
                  << std::flush;
        if (!ok) ++failures;
    }
    return failures;
}
