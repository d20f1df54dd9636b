#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gl2/decompose.hpp"

namespace gl2 {

struct MultiplicityFreeness {
    bool multiplicity_free = true;
    // A constituent of multiplicity two when not free; doubled constituents
    // always have dimension q or q+1.
    std::optional<IrrepLabel> doubled;
};

MultiplicityFreeness is_multiplicity_free(const IrrepLabel& r1, const IrrepLabel& r2);

// The exact closed-form list of self-dual irreducibles, in label order:
// the two real one-dims and Steinbergs, the inverse-paired principal series,
// and the cuspidals whose restriction to scalars is trivial.
std::vector<IrrepLabel> self_dual_classify(const FieldParams& fp);

// Criterion for two principal-series x cuspidal products to coincide: equal
// determinant-character residues a+b+bar(L) mod q-1.  Throws DegenerateInput
// on a degenerate pair or a decomposable torus character.
bool same_ps_cuspidal_product(const MultChar& a, const MultChar& b, const TorusChar& L,
                              const MultChar& c, const MultChar& d, const TorusChar& M);

// A different pair with the same tensor product as PS(a,b) x Cuspidal(L),
// whose principal-series factor is not a one-dimensional twist of PS(a,b).
// Exists whenever q != 3; returns nullopt at q = 3 where every admissible
// twist residue is excluded.
std::optional<std::pair<IrrepLabel, IrrepLabel>> alternative_factorization(
    const MultChar& a, const MultChar& b, const TorusChar& L);

// Are two unordered pairs related by one-dimensional twists plus a swap?
bool twist_related(const std::pair<IrrepLabel, IrrepLabel>& v,
                   const std::pair<IrrepLabel, IrrepLabel>& w);

struct CollisionGroup {
    std::vector<std::pair<IrrepLabel, IrrepLabel>> pairs; // share one decomposition
    bool ps_cuspidal_shape = false; // factor dimensions {q-1, q+1}
    bool all_twist_related = false;
};

struct UniqueDecompositionReport {
    Int q = 0;
    Int pairs_checked = 0;
    std::vector<CollisionGroup> groups;
    std::vector<std::string> violations;
    bool clean() const { return violations.empty(); }
};

// Sweeps all unordered pairs of irreducibles of dimension > 1, groups equal
// tensor decompositions, and checks: collisions outside the principal-series
// x cuspidal shape must be twist-related, and within that shape collisions
// must match the determinant-residue criterion in both directions.
UniqueDecompositionReport unique_decomposition_sweep(const FieldParams& fp);

} // namespace gl2
