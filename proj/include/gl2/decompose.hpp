#pragma once

#include "gl2/irreps.hpp"

namespace gl2 {

// Closed-form decomposition of the tensor product of two irreducibles.
// Dispatches on the family pair; the cuspidal-cuspidal case splits four ways
// on the decomposability of the two Frobenius-twisted products.  Output is
// genuine (all multiplicities >= 1) and exact.
Decomposition tensor_decompose(const IrrepLabel& r1, const IrrepLabel& r2);

// Induction from the nonsplit torus: three cases on the inducing character
// (decomposable / indecomposable with square restriction / with nonsquare
// restriction).  Total dimension q(q-1).
Decomposition ind_tm1_decompose(const TorusChar& L);

// Induction from the split (diagonal) torus: three cases on (alpha, beta).
// The principal series of the pair itself lands with multiplicity two when
// alpha != beta.  Total dimension q(q+1).
Decomposition ind_t1_decompose(const MultChar& alpha, const MultChar& beta);

// Induction from scalars times unipotents against rho x (fixed nontrivial
// additive character): square roots of rho as Steinbergs, plus the full
// principal-series and cuspidal shells of rho.  Total dimension q^2-1.
Decomposition ind_zu_decompose(const MultChar& rho);

// Borel-type induction of the ordered pair (mu, nu): the principal series
// when mu != nu, otherwise its one-dimensional and Steinberg pieces.
Decomposition ind_b_expansion(const MultChar& mu, const MultChar& nu);

// Signed stand-in for a cuspidal constituent: the genuine cuspidal when Psi
// is indecomposable, Steinberg minus one-dim at the witness otherwise.
// Always a virtual sum.
Decomposition virtual_cuspidal(const TorusChar& Psi);

// Independent route to the same tensor decompositions: rewrite the product as
// a torus induction plus or minus explicit corrections, expand the induction
// by its closed form, and materialize.  Throws NegativeMultiplicity if the
// signed bookkeeping ever dips below zero (it must not).
Decomposition pantoja_tensor(const IrrepLabel& r1, const IrrepLabel& r2);

} // namespace gl2
