#pragma once

#include <cstddef>
#include <vector>

#include "gl2/char_table.hpp"

namespace gl2 {

// Brute-force verifier.  Everything here is a character inner product over
// the full class list, evaluated exactly in two independent prime fields; it
// shares no code path with the closed-form decompositions it checks.
class Oracle {
public:
    // Both referents must outlive the oracle.  The evaluator's modulus must
    // match the table's q^2-1.
    Oracle(const CharacterTable& table, const ModularEvaluator& eval);

    const CharacterTable& table() const { return table_; }

    // <chi_r1 * chi_r2, chi_s> over the group.
    Int tensor_multiplicity(const IrrepLabel& r1, const IrrepLabel& r2,
                            const IrrepLabel& s) const;

    // Full decomposition of r1 (x) r2 by sweeping every irreducible; checks
    // the dimension count and throws DimensionMismatch on any deficit.
    Decomposition tensor_decompose(const IrrepLabel& r1, const IrrepLabel& r2) const;

    // Induced-representation multiplicities by reciprocity: the inner product
    // of the inducing character with the restricted irreducible character,
    // summed over subgroup elements as pure index arithmetic.
    Int aniso_torus_multiplicity(const TorusChar& L, const IrrepLabel& s) const;
    Int split_torus_multiplicity(const MultChar& a, const MultChar& b,
                                 const IrrepLabel& s) const;
    // rho against the scalar part; the unipotent part contributes a fixed
    // nontrivial additive character whose nontrivial-element sum is -1, so no
    // additive character values are ever materialized.
    Int zu_multiplicity(const MultChar& rho, const IrrepLabel& s) const;

    Decomposition aniso_torus_decompose(const TorusChar& L) const;    // dim q(q-1)
    Decomposition split_torus_decompose(const MultChar& a, const MultChar& b) const; // q(q+1)
    Decomposition zu_decompose(const MultChar& rho) const;            // q^2-1

    // Table self-checks: row inner product (1/|G|) sum_c size chi_r conj(chi_s)
    // and column inner product sum_r chi_r(c) conj(chi_r(c')).
    Int row_inner(std::size_t r, std::size_t s) const;
    Int column_inner(std::size_t c, std::size_t cp) const;

private:
    using Image = ModularEvaluator::Image;

    Int extract_sum(Image acc, Int divisor, Int bound) const;

    const CharacterTable& table_;
    const ModularEvaluator& eval_;
    std::size_t n_irreps_ = 0;
    std::size_t n_classes_ = 0;
    std::vector<std::vector<Image>> val_;      // [irrep][class]
    std::vector<std::vector<Image>> conj_val_; // [irrep][class], conjugated
    std::vector<Image> size_im_;               // [class]
    std::vector<std::size_t> aniso_class_;     // torus exponent -> class index
    std::vector<std::size_t> split_pair_class_; // i*m1+j -> class index
    std::vector<std::size_t> central_idx_, nss_idx_;
};

} // namespace gl2
