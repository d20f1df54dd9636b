#pragma once

#include <map>
#include <string>
#include <vector>

#include "gl2/characters.hpp"

namespace gl2 {

enum class IrrepFamily : int {
    OneDim = 0,          // alpha o det, dim 1
    Steinberg = 1,       // twisted Steinberg, dim q
    PrincipalSeries = 2, // unordered pair of distinct characters, dim q+1
    Cuspidal = 3,        // Frobenius orbit of an indecomposable torus character, dim q-1
};

// Canonical label of one irreducible.
//   OneDim(a), Steinberg(a): x = a, y = 0.
//   PrincipalSeries(a, b):   x = a < y = b.
//   Cuspidal(k):             x = min(k, k*q mod m2), y = 0, (q+1) does not divide k.
struct IrrepLabel {
    Int q = 0;
    IrrepFamily family = IrrepFamily::OneDim;
    Int x = 0;
    Int y = 0;

    friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

// Reduces residues, orders pairs, folds Frobenius orbits.  Throws
// DegeneratePrincipalSeries / DecomposableCuspidalLabel on invalid input.
// Idempotent.
IrrepLabel canonicalize(const IrrepLabel& raw);

IrrepLabel one_dim(const MultChar& a);
IrrepLabel steinberg(const MultChar& a);
IrrepLabel principal_series(const MultChar& a, const MultChar& b);
IrrepLabel cuspidal(const TorusChar& L);

Int dimension(const IrrepLabel& r);
MultChar central_character(const IrrepLabel& r);
IrrepLabel dual(const IrrepLabel& r);

// Tensoring with the one-dimensional chi_t o det.
IrrepLabel det_twisted(const IrrepLabel& r, const MultChar& t);

// Label grammar shared with the CLI: 1d:<a>, st:<a>, ps:<a>,<b>, cusp:<k>.
std::string to_string(const IrrepLabel& r);
// Parses the grammar into a raw (possibly non-canonical) label; residues are
// kept as written so the caller can canonicalize and report.  Throws
// MalformedLabel on anything outside the grammar.
IrrepLabel parse_irrep_label(const FieldParams& fp, const std::string& text);

// All q^2-1 irreducibles in deterministic order: family, then lexicographic.
std::vector<IrrepLabel> enumerate_irreps(const FieldParams& fp);

// Principal-series labels whose two characters multiply to x:
// (q-3)/2 of them when the exponent of x is even, (q-1)/2 when odd.
std::vector<IrrepLabel> build_S(const MultChar& x);

// Cuspidal labels whose restriction to scalars is x:
// (q-1)/2 when the exponent of x is even, (q+1)/2 when odd.
std::vector<IrrepLabel> build_W(const MultChar& x);

// build_W(bar L) minus the cuspidal of L itself; the removal is vacuous when
// L is decomposable (no cuspidal carries a decomposable label).
std::vector<IrrepLabel> build_V(const TorusChar& L);

// Multiset of irreducibles with integer multiplicities.  Genuine
// decompositions keep every stored multiplicity >= 1; a virtual accumulator
// allows signed intermediate values until materialized.
class Decomposition {
public:
    Decomposition() = default;
    static Decomposition virtual_sum();

    bool is_virtual() const { return virtual_; }
    const std::map<IrrepLabel, Int>& terms() const { return terms_; }

    void add(const IrrepLabel& r, Int mult = 1);
    void add(const Decomposition& other, Int scale = 1);

    Int multiplicity(const IrrepLabel& r) const;
    Int total_dimension() const;
    Int max_multiplicity() const;
    Int constituent_count() const { return static_cast<Int>(terms_.size()); }

    // Checks every multiplicity is nonnegative and returns the genuine
    // decomposition; throws NegativeMultiplicity naming the first offender.
    Decomposition materialized() const;

    // Equality of the underlying multisets.
    friend bool operator==(const Decomposition& x, const Decomposition& y) {
        return x.terms_ == y.terms_;
    }

private:
    std::map<IrrepLabel, Int> terms_;
    bool virtual_ = false;
};

} // namespace gl2
