#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gl2/cyclo.hpp"
#include "gl2/irreps.hpp"

namespace gl2 {

enum class ClassKind : int {
    Central = 0,       // scalar, size 1
    NonSemisimple = 1, // scalar times a nontrivial Jordan block, size q^2-1
    Split = 2,         // two distinct eigenvalue residues, size q(q+1)
    Elliptic = 3,      // eigenvalues in the quadratic extension, size q(q-1)
};

// Conjugacy class of the group, by eigenvalue residue data.
//   Central(i), NonSemisimple(i): x = i mod m1.
//   Split(i, j): x = i < y = j.
//   Elliptic(m): x = min(m, m*q mod m2), (q+1) does not divide m.
struct ConjClassLabel {
    Int q = 0;
    ClassKind kind = ClassKind::Central;
    Int x = 0;
    Int y = 0;

    friend auto operator<=>(const ConjClassLabel&, const ConjClassLabel&) = default;
};

struct ClassData {
    ConjClassLabel label;
    Int size = 0;
};

ConjClassLabel central_class(const FieldParams& fp, Int i);
ConjClassLabel nonsemisimple_class(const FieldParams& fp, Int i);
ConjClassLabel split_class(const FieldParams& fp, Int i, Int j);
ConjClassLabel elliptic_class(const FieldParams& fp, Int m);

Int class_size(const ConjClassLabel& c);
std::string to_string(const ConjClassLabel& c);

// All q^2-1 classes in deterministic order: kind, then lexicographic.  Class
// counts mirror the irrep counts family by family.
std::vector<ClassData> enumerate_classes(const FieldParams& fp);

// Exact character value as a formal sum of (q^2-1)-st roots of unity.  The
// small-field root eta is the (q+1)-st power of the big-field root zeta.
CycloValue char_value(const IrrepLabel& r, const ConjClassLabel& c);

// Immutable precomputed table: rows in enumerate_irreps order, columns in
// enumerate_classes order.
class CharacterTable {
public:
    explicit CharacterTable(const FieldParams& fp);

    const FieldParams& params() const { return fp_; }
    const std::vector<IrrepLabel>& irreps() const { return irreps_; }
    const std::vector<ClassData>& classes() const { return classes_; }
    const CycloValue& value(std::size_t r, std::size_t c) const { return values_[r][c]; }

    std::size_t irrep_index(const IrrepLabel& r) const;
    std::size_t class_index(const ConjClassLabel& c) const;

private:
    FieldParams fp_;
    std::vector<IrrepLabel> irreps_;
    std::vector<ClassData> classes_;
    std::vector<std::vector<CycloValue>> values_;
    std::map<IrrepLabel, std::size_t> irrep_index_;
    std::map<ConjClassLabel, std::size_t> class_index_;
};

} // namespace gl2
