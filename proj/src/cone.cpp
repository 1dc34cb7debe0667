#include "preriesz/cone.hpp"

#include <algorithm>

#include "preriesz/errors.hpp"
#include "preriesz/linalg.hpp"

namespace preriesz {

Caps Caps::wide() {
    Caps c;
    c.max_dim = 24;
    c.max_rays = 4096;
    c.max_functionals = 64;
    c.max_closure = 1 << 16;
    c.max_search_nodes = 2000000;
    c.max_subset_enumeration = 20000000;
    return c;
}

namespace {

void sort_dedupe(std::vector<QVector>& vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

bool all_nonneg(const std::vector<QVector>& rows, const QVector& v) {
    for (const auto& r : rows)
        if (dot(r, v) < 0) return false;
    return true;
}

// Enumerates k-subsets of {0..n-1} in lexicographic order, invoking fn on
// each.  Throws when the count would exceed the cap.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, std::size_t cap, Fn&& fn) {
    if (k > n) return;
    if (k == 0) {
        fn(std::vector<std::size_t>{});
        return;
    }
    unsigned __int128 count = 1; // C(n, k), checked against the cap
    for (std::size_t i = 0; i < k; ++i) {
        count = count * (n - i) / (i + 1);
        if (count > cap) throw CapacityError("subset enumeration exceeds configured cap");
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

PolarGenerators polar_generators(const std::vector<QVector>& rows,
                                 std::size_t ambient_dim, const Caps& caps) {
    const std::size_t n = ambient_dim;
    PolarGenerators out;

    QMatrix m = rows.empty() ? QMatrix(0, n) : QMatrix::from_rows(rows);
    out.lineality = kernel_basis(m);
    const std::size_t lin_dim = out.lineality.size();
    if (lin_dim >= n) {
        // Polar is the whole space (no constraints at all).
        sort_dedupe(out.lineality);
        return out;
    }
    if (n == 0) return out;

    // Pointed part: intersect with the orthogonal complement of the
    // lineality and enumerate rank-(n-1) tight subsets.
    std::vector<QVector> eq_rows = out.lineality;
    const std::size_t need = n - 1 - lin_dim;
    std::vector<QVector> candidates;
    if (n == 1 + lin_dim) {
        // Single subset: the empty one.
        QMatrix e = QMatrix::from_rows(eq_rows);
        auto basis = eq_rows.empty() ? kernel_basis(QMatrix(0, n)) : kernel_basis(e);
        if (basis.size() == 1) {
            const QVector v = primitive(basis[0], /*normalize_sign=*/true);
            if (all_nonneg(rows, v)) candidates.push_back(v);
            else if (all_nonneg(rows, negate(v))) candidates.push_back(primitive(negate(v)));
        }
    } else {
        for_each_subset(rows.size(), need, caps.max_subset_enumeration,
                        [&](const std::vector<std::size_t>& idx) {
            std::vector<QVector> sys = eq_rows;
            for (std::size_t i : idx) sys.push_back(rows[i]);
            QMatrix m2 = QMatrix::from_rows(sys);
            auto basis = kernel_basis(m2);
            if (basis.size() != 1) return;
            const QVector v = primitive(basis[0], /*normalize_sign=*/true);
            if (all_nonneg(rows, v)) candidates.push_back(v);
            else if (all_nonneg(rows, negate(v))) candidates.push_back(primitive(negate(v)));
        });
    }
    sort_dedupe(candidates);
    out.rays = std::move(candidates);
    sort_dedupe(out.lineality);
    return out;
}

namespace {

// Shared construction: given one side's generators-as-rows, compute the
// polar's generator list (lineality folded in as ± pairs), then the polar of
// that to obtain the canonical minimal form of the original side.
std::vector<QVector> flatten(const PolarGenerators& g) {
    std::vector<QVector> vs = g.rays;
    for (const auto& l : g.lineality) {
        vs.push_back(l);
        vs.push_back(primitive(negate(l)));
    }
    sort_dedupe(vs);
    return vs;
}

std::vector<QVector> clean_input(std::vector<QVector> vs, std::size_t n) {
    std::vector<QVector> out;
    for (auto& v : vs) {
        if (v.size() != n) throw ArgumentError("cone generator dimension mismatch");
        if (is_zero(v)) continue;
        out.push_back(primitive(v));
    }
    sort_dedupe(out);
    return out;
}

} // namespace

Cone Cone::from_rays(std::vector<QVector> rays, std::size_t ambient_dim, const Caps& caps) {
    if (ambient_dim == 0 || ambient_dim > caps.max_dim)
        throw CapacityError("ambient dimension outside configured cap");
    if (rays.size() > caps.max_rays)
        throw CapacityError("ray count exceeds configured cap");
    Cone k;
    k.ambient_ = ambient_dim;
    auto input = clean_input(std::move(rays), ambient_dim);

    const PolarGenerators dual = polar_generators(input, ambient_dim, caps);
    k.normals_ = flatten(dual);
    const PolarGenerators primal = polar_generators(k.normals_, ambient_dim, caps);
    k.rays_ = flatten(primal);

    k.generating_ = dual.lineality.empty();
    if (!k.generating_) k.hyperplane_witness_ = dual.lineality.front();
    k.pointed_ = primal.lineality.empty();
    if (!k.pointed_) k.line_witness_ = primal.lineality.front();
    return k;
}

Cone Cone::from_inequalities(std::vector<QVector> normals, std::size_t ambient_dim,
                             const Caps& caps) {
    if (ambient_dim == 0 || ambient_dim > caps.max_dim)
        throw CapacityError("ambient dimension outside configured cap");
    Cone k;
    k.ambient_ = ambient_dim;
    auto input = clean_input(std::move(normals), ambient_dim);

    const PolarGenerators primal = polar_generators(input, ambient_dim, caps);
    k.rays_ = flatten(primal);
    if (k.rays_.size() > caps.max_rays)
        throw CapacityError("computed ray count exceeds configured cap");
    const PolarGenerators dual = polar_generators(k.rays_, ambient_dim, caps);
    k.normals_ = flatten(dual);

    k.pointed_ = primal.lineality.empty();
    if (!k.pointed_) k.line_witness_ = primal.lineality.front();
    k.generating_ = dual.lineality.empty();
    if (!k.generating_) k.hyperplane_witness_ = dual.lineality.front();
    return k;
}

bool Cone::contains(const QVector& x) const {
    if (x.size() != ambient_) throw ArgumentError("point dimension mismatch");
    for (const auto& f : normals_)
        if (dot(f, x) < 0) return false;
    return true;
}

Cone dual_cone(const Cone& k) {
    Cone d;
    d.ambient_ = k.ambient_dim();
    d.rays_ = k.normals();
    d.normals_ = k.rays();
    d.pointed_ = k.generating();
    d.generating_ = k.pointed();
    d.line_witness_ = k.hyperplane_witness();
    d.hyperplane_witness_ = k.line_witness();
    return d;
}

std::vector<QVector> extreme_rays(const Cone& k) {
    if (!k.pointed()) {
        std::string msg = "extreme rays of a non-pointed cone";
        if (k.line_witness()) msg += "; contains the line through " + vec_str(*k.line_witness());
        throw StructuralError(msg);
    }
    return k.rays();
}

} // namespace preriesz
