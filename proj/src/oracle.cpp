#include "gl2/oracle.hpp"

namespace gl2 {

Oracle::Oracle(const CharacterTable& table, const ModularEvaluator& eval)
    : table_(table), eval_(eval) {
    const FieldParams& fp = table_.params();
    if (eval_.modulus() != fp.m2)
        throw ModulusMismatch("evaluator modulus does not match the table");

    n_irreps_ = table_.irreps().size();
    n_classes_ = table_.classes().size();
    val_.assign(n_irreps_, std::vector<Image>(n_classes_));
    conj_val_.assign(n_irreps_, std::vector<Image>(n_classes_));
    for (std::size_t r = 0; r < n_irreps_; ++r) {
        for (std::size_t c = 0; c < n_classes_; ++c) {
            val_[r][c] = eval_.image(table_.value(r, c));
            conj_val_[r][c] = eval_.image(table_.value(r, c).conjugate());
        }
    }
    size_im_.reserve(n_classes_);
    for (const auto& cd : table_.classes()) size_im_.push_back(eval_.integer_image(cd.size));

    aniso_class_.resize(fp.m2);
    for (Int m = 0; m < fp.m2; ++m) {
        ConjClassLabel c = (m % (fp.q + 1) == 0) ? central_class(fp, m / (fp.q + 1))
                                                 : elliptic_class(fp, m);
        aniso_class_[m] = table_.class_index(c);
    }
    split_pair_class_.resize(fp.m1 * fp.m1);
    for (Int i = 0; i < fp.m1; ++i)
        for (Int j = 0; j < fp.m1; ++j)
            split_pair_class_[i * fp.m1 + j] =
                table_.class_index(i == j ? central_class(fp, i) : split_class(fp, i, j));
    central_idx_.resize(fp.m1);
    nss_idx_.resize(fp.m1);
    for (Int i = 0; i < fp.m1; ++i) {
        central_idx_[i] = table_.class_index(central_class(fp, i));
        nss_idx_[i] = table_.class_index(nonsemisimple_class(fp, i));
    }
}

Int Oracle::extract_sum(Image acc, Int divisor, Int bound) const {
    return eval_.extract(acc, divisor, bound);
}

Int Oracle::tensor_multiplicity(const IrrepLabel& r1, const IrrepLabel& r2,
                                const IrrepLabel& s) const {
    const FieldParams& fp = table_.params();
    std::size_t i1 = table_.irrep_index(canonicalize(r1));
    std::size_t i2 = table_.irrep_index(canonicalize(r2));
    std::size_t is = table_.irrep_index(canonicalize(s));
    Image acc;
    for (std::size_t c = 0; c < n_classes_; ++c) {
        Image t = eval_.mul(val_[i1][c], val_[i2][c]);
        t = eval_.mul(t, conj_val_[is][c]);
        acc = eval_.add(acc, eval_.mul(t, size_im_[c]));
    }
    return extract_sum(acc, fp.group_order, (fp.q + 1) * (fp.q + 1));
}

Decomposition Oracle::tensor_decompose(const IrrepLabel& r1, const IrrepLabel& r2) const {
    Decomposition d;
    for (const IrrepLabel& s : table_.irreps()) {
        Int m = tensor_multiplicity(r1, r2, s);
        if (m != 0) d.add(s, m);
    }
    Int want = dimension(canonicalize(r1)) * dimension(canonicalize(r2));
    if (d.total_dimension() != want)
        throw DimensionMismatch("oracle decomposition covers " +
                                std::to_string(d.total_dimension()) + " of " +
                                std::to_string(want) + " dimensions");
    return d;
}

Int Oracle::aniso_torus_multiplicity(const TorusChar& L, const IrrepLabel& s) const {
    const FieldParams& fp = table_.params();
    if (L.q != fp.q) throw ParamMismatch("torus character does not match the table");
    std::size_t is = table_.irrep_index(canonicalize(s));
    Image acc;
    for (Int m = 0; m < fp.m2; ++m) {
        Image t = eval_.mul(eval_.root_image(umod(L.k * m, fp.m2)), conj_val_[is][aniso_class_[m]]);
        acc = eval_.add(acc, t);
    }
    return extract_sum(acc, fp.m2, fp.q + 1);
}

Int Oracle::split_torus_multiplicity(const MultChar& a, const MultChar& b,
                                     const IrrepLabel& s) const {
    const FieldParams& fp = table_.params();
    if (a.q != fp.q || b.q != fp.q) throw ParamMismatch("character does not match the table");
    std::size_t is = table_.irrep_index(canonicalize(s));
    Image acc;
    for (Int i = 0; i < fp.m1; ++i) {
        for (Int j = 0; j < fp.m1; ++j) {
            Int e = umod(umod(a.a * i + b.a * j, fp.m1) * (fp.q + 1), fp.m2);
            Image t = eval_.mul(eval_.root_image(e), conj_val_[is][split_pair_class_[i * fp.m1 + j]]);
            acc = eval_.add(acc, t);
        }
    }
    return extract_sum(acc, fp.m1 * fp.m1, fp.q + 1);
}

Int Oracle::zu_multiplicity(const MultChar& rho, const IrrepLabel& s) const {
    const FieldParams& fp = table_.params();
    if (rho.q != fp.q) throw ParamMismatch("character does not match the table");
    std::size_t is = table_.irrep_index(canonicalize(s));
    Image acc;
    for (Int i = 0; i < fp.m1; ++i) {
        Int e = umod(umod(rho.a * i, fp.m1) * (fp.q + 1), fp.m2);
        Image t = eval_.sub(conj_val_[is][central_idx_[i]], conj_val_[is][nss_idx_[i]]);
        acc = eval_.add(acc, eval_.mul(eval_.root_image(e), t));
    }
    return extract_sum(acc, fp.q * fp.m1, fp.q + 1);
}

Decomposition Oracle::aniso_torus_decompose(const TorusChar& L) const {
    const FieldParams& fp = table_.params();
    Decomposition d;
    for (const IrrepLabel& s : table_.irreps()) {
        Int m = aniso_torus_multiplicity(L, s);
        if (m != 0) d.add(s, m);
    }
    if (d.total_dimension() != fp.q * (fp.q - 1))
        throw DimensionMismatch("anisotropic induction dimension is off");
    return d;
}

Decomposition Oracle::split_torus_decompose(const MultChar& a, const MultChar& b) const {
    const FieldParams& fp = table_.params();
    Decomposition d;
    for (const IrrepLabel& s : table_.irreps()) {
        Int m = split_torus_multiplicity(a, b, s);
        if (m != 0) d.add(s, m);
    }
    if (d.total_dimension() != fp.q * (fp.q + 1))
        throw DimensionMismatch("split-torus induction dimension is off");
    return d;
}

Decomposition Oracle::zu_decompose(const MultChar& rho) const {
    const FieldParams& fp = table_.params();
    Decomposition d;
    for (const IrrepLabel& s : table_.irreps()) {
        Int m = zu_multiplicity(rho, s);
        if (m != 0) d.add(s, m);
    }
    if (d.total_dimension() != fp.m2)
        throw DimensionMismatch("central-unipotent induction dimension is off");
    return d;
}

Int Oracle::row_inner(std::size_t r, std::size_t s) const {
    const FieldParams& fp = table_.params();
    Image acc;
    for (std::size_t c = 0; c < n_classes_; ++c) {
        Image t = eval_.mul(val_[r][c], conj_val_[s][c]);
        acc = eval_.add(acc, eval_.mul(t, size_im_[c]));
    }
    return extract_sum(acc, fp.group_order, 1);
}

Int Oracle::column_inner(std::size_t c, std::size_t cp) const {
    const FieldParams& fp = table_.params();
    Image acc;
    for (std::size_t r = 0; r < n_irreps_; ++r)
        acc = eval_.add(acc, eval_.mul(val_[r][c], conj_val_[r][cp]));
    return extract_sum(acc, 1, fp.group_order);
}

} // namespace gl2
