#include "gl2/irreps.hpp"

#include <algorithm>

namespace gl2 {

namespace {

Int cusp_orbit_min(Int k, Int q, Int m2) {
    return std::min(k, umod(k * q, m2));
}

} // namespace

IrrepLabel canonicalize(const IrrepLabel& raw) {
    Int q = raw.q;
    Int m1 = q - 1;
    Int m2 = q * q - 1;
    IrrepLabel r{q, raw.family, 0, 0};
    switch (raw.family) {
        case IrrepFamily::OneDim:
        case IrrepFamily::Steinberg:
            r.x = umod(raw.x, m1);
            break;
        case IrrepFamily::PrincipalSeries: {
            Int a = umod(raw.x, m1), b = umod(raw.y, m1);
            if (a == b)
                throw DegeneratePrincipalSeries("principal series needs two distinct characters");
            r.x = std::min(a, b);
            r.y = std::max(a, b);
            break;
        }
        case IrrepFamily::Cuspidal: {
            Int k = umod(raw.x, m2);
            if (k % (q + 1) == 0)
                throw DecomposableCuspidalLabel("cuspidal label must be indecomposable");
            r.x = cusp_orbit_min(k, q, m2);
            break;
        }
    }
    return r;
}

IrrepLabel one_dim(const MultChar& a) {
    return IrrepLabel{a.q, IrrepFamily::OneDim, a.a, 0};
}

IrrepLabel steinberg(const MultChar& a) {
    return IrrepLabel{a.q, IrrepFamily::Steinberg, a.a, 0};
}

IrrepLabel principal_series(const MultChar& a, const MultChar& b) {
    if (a.q != b.q) throw ParamMismatch("mixed field parameters in principal series");
    return canonicalize(IrrepLabel{a.q, IrrepFamily::PrincipalSeries, a.a, b.a});
}

IrrepLabel cuspidal(const TorusChar& L) {
    return canonicalize(IrrepLabel{L.q, IrrepFamily::Cuspidal, L.k, 0});
}

Int dimension(const IrrepLabel& r) {
    switch (r.family) {
        case IrrepFamily::OneDim: return 1;
        case IrrepFamily::Steinberg: return r.q;
        case IrrepFamily::PrincipalSeries: return r.q + 1;
        case IrrepFamily::Cuspidal: return r.q - 1;
    }
    throw Error("unreachable");
}

MultChar central_character(const IrrepLabel& r) {
    Int m1 = r.q - 1;
    switch (r.family) {
        case IrrepFamily::OneDim:
        case IrrepFamily::Steinberg: return MultChar{r.q, umod(2 * r.x, m1)};
        case IrrepFamily::PrincipalSeries: return MultChar{r.q, umod(r.x + r.y, m1)};
        case IrrepFamily::Cuspidal: return MultChar{r.q, umod(r.x, m1)};
    }
    throw Error("unreachable");
}

IrrepLabel dual(const IrrepLabel& r) {
    IrrepLabel raw = r;
    raw.x = -r.x;
    raw.y = -r.y;
    return canonicalize(raw);
}

IrrepLabel det_twisted(const IrrepLabel& r, const MultChar& t) {
    if (r.q != t.q) throw ParamMismatch("mixed field parameters in twist");
    IrrepLabel raw = r;
    switch (r.family) {
        case IrrepFamily::OneDim:
        case IrrepFamily::Steinberg:
            raw.x = r.x + t.a;
            break;
        case IrrepFamily::PrincipalSeries:
            raw.x = r.x + t.a;
            raw.y = r.y + t.a;
            break;
        case IrrepFamily::Cuspidal:
            raw.x = r.x + t.a * (r.q + 1);
            break;
    }
    return canonicalize(raw);
}

std::string to_string(const IrrepLabel& r) {
    switch (r.family) {
        case IrrepFamily::OneDim: return "1d:" + std::to_string(r.x);
        case IrrepFamily::Steinberg: return "st:" + std::to_string(r.x);
        case IrrepFamily::PrincipalSeries:
            return "ps:" + std::to_string(r.x) + "," + std::to_string(r.y);
        case IrrepFamily::Cuspidal: return "cusp:" + std::to_string(r.x);
    }
    throw Error("unreachable");
}

IrrepLabel parse_irrep_label(const FieldParams& fp, const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw MalformedLabel("label '" + text + "' is missing ':'");
    std::string head = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    auto parse_int = [&](const std::string& s) {
        if (s.empty()) throw MalformedLabel("label '" + text + "' has an empty residue");
        std::size_t pos = 0;
        Int v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw MalformedLabel("label '" + text + "' has a non-numeric residue");
        }
        if (pos != s.size())
            throw MalformedLabel("label '" + text + "' has a non-numeric residue");
        return v;
    };

    IrrepLabel raw;
    raw.q = fp.q;
    if (head == "1d" || head == "st") {
        raw.family = head == "1d" ? IrrepFamily::OneDim : IrrepFamily::Steinberg;
        raw.x = parse_int(rest);
    } else if (head == "ps") {
        raw.family = IrrepFamily::PrincipalSeries;
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw MalformedLabel("label '" + text + "' needs two residues");
        raw.x = parse_int(rest.substr(0, comma));
        raw.y = parse_int(rest.substr(comma + 1));
    } else if (head == "cusp") {
        raw.family = IrrepFamily::Cuspidal;
        raw.x = parse_int(rest);
    } else {
        throw MalformedLabel("unknown label family '" + head + "'");
    }
    return raw;
}

std::vector<IrrepLabel> enumerate_irreps(const FieldParams& fp) {
    std::vector<IrrepLabel> out;
    out.reserve(fp.m2);
    for (Int a = 0; a < fp.m1; ++a) out.push_back(IrrepLabel{fp.q, IrrepFamily::OneDim, a, 0});
    for (Int a = 0; a < fp.m1; ++a) out.push_back(IrrepLabel{fp.q, IrrepFamily::Steinberg, a, 0});
    for (Int a = 0; a < fp.m1; ++a)
        for (Int b = a + 1; b < fp.m1; ++b)
            out.push_back(IrrepLabel{fp.q, IrrepFamily::PrincipalSeries, a, b});
    for (Int k = 0; k < fp.m2; ++k) {
        if (k % (fp.q + 1) == 0) continue;
        if (cusp_orbit_min(k, fp.q, fp.m2) != k) continue;
        out.push_back(IrrepLabel{fp.q, IrrepFamily::Cuspidal, k, 0});
    }
    return out;
}

std::vector<IrrepLabel> build_S(const MultChar& x) {
    Int m1 = x.q - 1;
    std::vector<IrrepLabel> out;
    for (Int a = 0; a < m1; ++a) {
        Int b = umod(x.a - a, m1);
        if (a < b) out.push_back(IrrepLabel{x.q, IrrepFamily::PrincipalSeries, a, b});
    }
    return out;
}

std::vector<IrrepLabel> build_W(const MultChar& x) {
    Int q = x.q, m1 = q - 1, m2 = q * q - 1;
    std::vector<IrrepLabel> out;
    // Residues over the fiber k = x mod (q-1); q+1 of them, minus decomposables.
    for (Int k = x.a; k < m2; k += m1) {
        if (k % (q + 1) == 0) continue;
        if (cusp_orbit_min(k, q, m2) != k) continue;
        out.push_back(IrrepLabel{q, IrrepFamily::Cuspidal, k, 0});
    }
    return out;
}

std::vector<IrrepLabel> build_V(const TorusChar& L) {
    std::vector<IrrepLabel> w = build_W(torus_bar(L));
    if (!is_decomposable(L)) {
        IrrepLabel self = cuspidal(L);
        w.erase(std::remove(w.begin(), w.end(), self), w.end());
    }
    return w;
}

Decomposition Decomposition::virtual_sum() {
    Decomposition d;
    d.virtual_ = true;
    return d;
}

void Decomposition::add(const IrrepLabel& r, Int mult) {
    if (mult == 0) return;
    if (!terms_.empty() && terms_.begin()->first.q != r.q)
        throw ParamMismatch("mixed field parameters in decomposition");
    Int next = terms_[r] + mult;
    if (!virtual_ && next < 0)
        throw NegativeMultiplicity("multiplicity of " + to_string(r) + " would become " +
                                   std::to_string(next));
    if (next == 0)
        terms_.erase(r);
    else
        terms_[r] = next;
}

void Decomposition::add(const Decomposition& other, Int scale) {
    for (const auto& [r, m] : other.terms_) add(r, m * scale);
}

Int Decomposition::multiplicity(const IrrepLabel& r) const {
    auto it = terms_.find(r);
    return it == terms_.end() ? 0 : it->second;
}

Int Decomposition::total_dimension() const {
    Int total = 0;
    for (const auto& [r, m] : terms_) total += m * dimension(r);
    return total;
}

Int Decomposition::max_multiplicity() const {
    Int best = 0;
    for (const auto& [r, m] : terms_) best = std::max(best, m);
    return best;
}

Decomposition Decomposition::materialized() const {
    for (const auto& [r, m] : terms_)
        if (m < 0)
            throw NegativeMultiplicity("virtual sum left " + to_string(r) + " at " +
                                       std::to_string(m));
    Decomposition d;
    d.terms_ = terms_;
    return d;
}

} // namespace gl2
