#include "gl2/char_table.hpp"

#include <algorithm>

namespace gl2 {

namespace {

// The table is (q^2-1)^2 formal values; past this the oracle layer is the
// wrong tool and construction refuses instead of thrashing memory.
constexpr Int kMaxTableQ = 31;

Int orbit_min(Int m, Int q, Int m2) {
    return std::min(m, umod(m * q, m2));
}

} // namespace

ConjClassLabel central_class(const FieldParams& fp, Int i) {
    return ConjClassLabel{fp.q, ClassKind::Central, umod(i, fp.m1), 0};
}

ConjClassLabel nonsemisimple_class(const FieldParams& fp, Int i) {
    return ConjClassLabel{fp.q, ClassKind::NonSemisimple, umod(i, fp.m1), 0};
}

ConjClassLabel split_class(const FieldParams& fp, Int i, Int j) {
    Int a = umod(i, fp.m1), b = umod(j, fp.m1);
    if (a == b) throw DegenerateInput("split class needs distinct eigenvalue residues");
    return ConjClassLabel{fp.q, ClassKind::Split, std::min(a, b), std::max(a, b)};
}

ConjClassLabel elliptic_class(const FieldParams& fp, Int m) {
    Int k = umod(m, fp.m2);
    if (k % (fp.q + 1) == 0)
        throw DegenerateInput("elliptic class label must avoid the scalar subgroup");
    return ConjClassLabel{fp.q, ClassKind::Elliptic, orbit_min(k, fp.q, fp.m2), 0};
}

Int class_size(const ConjClassLabel& c) {
    switch (c.kind) {
        case ClassKind::Central: return 1;
        case ClassKind::NonSemisimple: return c.q * c.q - 1;
        case ClassKind::Split: return c.q * (c.q + 1);
        case ClassKind::Elliptic: return c.q * (c.q - 1);
    }
    throw Error("unreachable");
}

std::string to_string(const ConjClassLabel& c) {
    switch (c.kind) {
        case ClassKind::Central: return "cen:" + std::to_string(c.x);
        case ClassKind::NonSemisimple: return "nss:" + std::to_string(c.x);
        case ClassKind::Split: return "spl:" + std::to_string(c.x) + "," + std::to_string(c.y);
        case ClassKind::Elliptic: return "ell:" + std::to_string(c.x);
    }
    throw Error("unreachable");
}

std::vector<ClassData> enumerate_classes(const FieldParams& fp) {
    std::vector<ClassData> out;
    out.reserve(fp.m2);
    for (Int i = 0; i < fp.m1; ++i)
        out.push_back({ConjClassLabel{fp.q, ClassKind::Central, i, 0}, 1});
    for (Int i = 0; i < fp.m1; ++i)
        out.push_back({ConjClassLabel{fp.q, ClassKind::NonSemisimple, i, 0}, fp.m2});
    for (Int i = 0; i < fp.m1; ++i)
        for (Int j = i + 1; j < fp.m1; ++j)
            out.push_back({ConjClassLabel{fp.q, ClassKind::Split, i, j}, fp.q * (fp.q + 1)});
    for (Int m = 0; m < fp.m2; ++m) {
        if (m % (fp.q + 1) == 0) continue;
        if (orbit_min(m, fp.q, fp.m2) != m) continue;
        out.push_back({ConjClassLabel{fp.q, ClassKind::Elliptic, m, 0}, fp.q * (fp.q - 1)});
    }
    return out;
}

CycloValue char_value(const IrrepLabel& r, const ConjClassLabel& c) {
    if (r.q != c.q) throw ParamMismatch("mixed field parameters in character value");
    const Int q = r.q, m1 = q - 1, m2 = q * q - 1;
    // eta^e as a power of zeta; e is reduced mod m1 first so products stay small.
    auto eta = [&](Int e) { return umod(umod(e, m1) * (q + 1), m2); };
    CycloValue v(m2);

    switch (r.family) {
        case IrrepFamily::OneDim: {
            Int a = r.x;
            switch (c.kind) {
                case ClassKind::Central:
                case ClassKind::NonSemisimple: v.add_term(eta(2 * a * c.x), 1); break;
                case ClassKind::Split: v.add_term(eta(a * (c.x + c.y)), 1); break;
                case ClassKind::Elliptic: v.add_term(eta(a * umod(c.x, m1)), 1); break;
            }
            break;
        }
        case IrrepFamily::Steinberg: {
            Int a = r.x;
            switch (c.kind) {
                case ClassKind::Central: v.add_term(eta(2 * a * c.x), q); break;
                case ClassKind::NonSemisimple: break; // zero
                case ClassKind::Split: v.add_term(eta(a * (c.x + c.y)), 1); break;
                case ClassKind::Elliptic: v.add_term(eta(a * umod(c.x, m1)), -1); break;
            }
            break;
        }
        case IrrepFamily::PrincipalSeries: {
            Int a = r.x, b = r.y;
            switch (c.kind) {
                case ClassKind::Central: v.add_term(eta((a + b) * c.x), q + 1); break;
                case ClassKind::NonSemisimple: v.add_term(eta((a + b) * c.x), 1); break;
                case ClassKind::Split:
                    v.add_term(eta(a * c.x + b * c.y), 1);
                    v.add_term(eta(a * c.y + b * c.x), 1);
                    break;
                case ClassKind::Elliptic: break; // zero
            }
            break;
        }
        case IrrepFamily::Cuspidal: {
            Int k = r.x;
            switch (c.kind) {
                case ClassKind::Central:
                    v.add_term(umod(umod(k * (q + 1), m2) * c.x, m2), q - 1);
                    break;
                case ClassKind::NonSemisimple:
                    v.add_term(umod(umod(k * (q + 1), m2) * c.x, m2), -1);
                    break;
                case ClassKind::Split: break; // zero
                case ClassKind::Elliptic:
                    v.add_term(umod(k * c.x, m2), -1);
                    v.add_term(umod(umod(k * q, m2) * c.x, m2), -1);
                    break;
            }
            break;
        }
    }
    return v;
}

CharacterTable::CharacterTable(const FieldParams& fp) : fp_(fp) {
    if (fp.q > kMaxTableQ)
        throw Error("character table supported for q <= " + std::to_string(kMaxTableQ) +
                    "; the closed-form decompositions have no such limit");
    irreps_ = enumerate_irreps(fp);
    classes_ = enumerate_classes(fp);
    values_.reserve(irreps_.size());
    for (std::size_t r = 0; r < irreps_.size(); ++r) {
        std::vector<CycloValue> row;
        row.reserve(classes_.size());
        for (const auto& cd : classes_) row.push_back(char_value(irreps_[r], cd.label));
        values_.push_back(std::move(row));
        irrep_index_.emplace(irreps_[r], r);
    }
    for (std::size_t c = 0; c < classes_.size(); ++c) class_index_.emplace(classes_[c].label, c);
}

std::size_t CharacterTable::irrep_index(const IrrepLabel& r) const {
    auto it = irrep_index_.find(r);
    if (it == irrep_index_.end())
        throw Error("unknown irrep label " + to_string(r));
    return it->second;
}

std::size_t CharacterTable::class_index(const ConjClassLabel& c) const {
    auto it = class_index_.find(c);
    if (it == class_index_.end())
        throw Error("unknown class label " + to_string(c));
    return it->second;
}

} // namespace gl2
