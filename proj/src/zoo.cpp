#include "preriesz/zoo.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "preriesz/errors.hpp"
#include "preriesz/rng.hpp"

namespace preriesz {

namespace {

std::vector<Rat> sorted_unique(std::vector<Rat> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

Caps grid_caps(std::size_t dim) {
    Caps caps = Caps::wide();
    caps.max_dim = std::max<std::size_t>(caps.max_dim, dim);
    return caps;
}

PreRieszModel build_grid_model(const std::string& name, const std::vector<Rat>& grid,
                               const std::vector<QVector>& basis_on_grid) {
    ModelSpec spec;
    spec.name = name;
    spec.dimension = basis_on_grid.size();
    spec.subspace = SubspaceSpec{grid.size(), basis_on_grid};
    PreRieszModel model = build_model(spec, grid_caps(basis_on_grid.size()));
    std::vector<std::string> labels;
    labels.reserve(grid.size());
    for (const auto& t : grid) labels.push_back(rat_str(t));
    model.provenance->coordinate_labels = std::move(labels);
    return model;
}

} // namespace

PreRieszModel make_simplicial(std::size_t n) {
    if (n == 0) throw ArgumentError("simplicial model needs n ≥ 1");
    ModelSpec spec;
    spec.dimension = n;
    std::vector<QVector> rays;
    for (std::size_t i = 0; i < n; ++i) {
        QVector e(n, Rat(0));
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    spec.cone_rays = std::move(rays);
    std::ostringstream name;
    name << "simplicial(" << n << ")";
    spec.name = name.str();
    return build_model(spec);
}

PreRieszModel make_four_ray() {
    ModelSpec spec;
    spec.dimension = 3;
    spec.cone_rays = std::vector<QVector>{qvec({1, 0, 1}), qvec({-1, 0, 1}), qvec({0, 1, 1}),
                                          qvec({0, -1, 1})};
    spec.name = "four_ray";
    return build_model(spec);
}

std::vector<Rat> example14_default_grid(std::size_t big_n) {
    // 0; the reciprocals 1/j for j ≤ N+1 (N+1 points of ]0,1]); every spike
    // point n + 1/k; and one spike-free interior point n + 1/(N+2) per unit
    // interval.  The interior points pin down the indicator tails which the
    // spike points alone cannot see.
    std::vector<Rat> grid;
    grid.push_back(Rat(0));
    for (std::size_t j = 1; j <= big_n + 1; ++j) grid.push_back(rat(1, long(j)));
    for (std::size_t n = 1; n <= big_n; ++n)
        for (std::size_t k = 1; k <= big_n; ++k)
            grid.push_back(Rat(long(n)) + rat(1, long(k)));
    for (std::size_t n = 1; n <= big_n; ++n)
        grid.push_back(Rat(long(n)) + rat(1, long(big_n) + 2));
    return sorted_unique(std::move(grid));
}

namespace {

Rat eval_e(std::size_t n, const Rat& t) {
    return (t >= long(n) - 1 && t < long(n)) ? Rat(1) : Rat(0);
}

Rat eval_u(std::size_t n, std::size_t k, const Rat& t) {
    Rat v(0);
    if (t >= 0 && t * long(n) <= 1) v += Rat(long(n)) * t;
    if (t == Rat(long(n)) + rat(1, long(k))) v += rat(1, long(k));
    return v;
}

void validate_example14_grid(std::size_t big_n, const std::vector<Rat>& grid) {
    std::vector<std::string> missing;
    auto has = [&](const Rat& t) { return std::binary_search(grid.begin(), grid.end(), t); };
    if (!has(Rat(0))) missing.push_back("0");
    std::size_t unit_points = 0;
    for (const auto& t : grid)
        if (t > 0 && t <= 1) ++unit_points;
    if (unit_points < big_n + 1) {
        std::ostringstream msg;
        msg << "at least " << big_n + 1 << " points of ]0,1] (found " << unit_points << ")";
        missing.push_back(msg.str());
    }
    for (std::size_t n = 1; n <= big_n; ++n)
        for (std::size_t k = 1; k <= big_n; ++k) {
            const Rat spike = Rat(long(n)) + rat(1, long(k));
            if (!has(spike)) missing.push_back(rat_str(spike));
        }
    for (std::size_t n = 1; n <= big_n + 1; ++n) {
        const bool found = std::any_of(grid.begin(), grid.end(), [&](const Rat& t) {
            return t > long(n) - 1 && t < long(n);
        });
        if (!found) {
            std::ostringstream msg;
            msg << "an interior point of [" << n - 1 << "," << n << "[";
            missing.push_back(msg.str());
        }
    }
    if (!missing.empty()) {
        std::string msg = "grid is missing required points:";
        for (const auto& m : missing) msg += " " + m + ";";
        throw ArgumentError(msg);
    }
}

} // namespace

PreRieszModel make_example14(std::size_t big_n, std::optional<std::vector<Rat>> grid) {
    if (big_n < 3) throw ArgumentError("example14 needs N ≥ 3");
    std::vector<Rat> points =
        grid ? sorted_unique(std::move(*grid)) : example14_default_grid(big_n);
    for (const auto& t : points)
        if (t < 0) throw ArgumentError("example14 grid points must be ≥ 0");
    validate_example14_grid(big_n, points);

    std::vector<QVector> basis;
    for (std::size_t n = 1; n <= big_n; ++n) {
        QVector v;
        v.reserve(points.size());
        for (const auto& t : points) v.push_back(eval_e(n, t));
        basis.push_back(std::move(v));
    }
    for (std::size_t n = 1; n <= big_n; ++n)
        for (std::size_t k = 1; k <= big_n; ++k) {
            QVector v;
            v.reserve(points.size());
            for (const auto& t : points) v.push_back(eval_u(n, k, t));
            basis.push_back(std::move(v));
        }
    std::ostringstream name;
    name << "example14(N=" << big_n << ")";
    return build_grid_model(name.str(), points, basis);
}

QVector example14_basis_e(std::size_t big_n, std::size_t n) {
    if (n < 1 || n > big_n) throw ArgumentError("basis index out of range");
    QVector v(big_n + big_n * big_n, Rat(0));
    v[n - 1] = 1;
    return v;
}

QVector example14_basis_u(std::size_t big_n, std::size_t n, std::size_t k) {
    if (n < 1 || n > big_n || k < 1 || k > big_n)
        throw ArgumentError("basis index out of range");
    QVector v(big_n + big_n * big_n, Rat(0));
    v[big_n + (n - 1) * big_n + (k - 1)] = 1;
    return v;
}

std::vector<Rat> example13_default_grid(std::size_t d) {
    std::vector<Rat> grid{rat(1, 4), rat(1, 2)};
    for (std::size_t j = 1; j <= d + 1; ++j)
        grid.push_back(rat(1, 2) + rat(long(j), 2 * (long(d) + 1)));
    return sorted_unique(std::move(grid));
}

PreRieszModel make_example13(std::size_t d, std::optional<std::vector<Rat>> grid) {
    if (d < 2) throw ArgumentError("example13 needs d ≥ 2");
    std::vector<Rat> points =
        grid ? sorted_unique(std::move(*grid)) : example13_default_grid(d);
    std::vector<std::string> missing;
    auto has = [&](const Rat& t) { return std::binary_search(points.begin(), points.end(), t); };
    for (const auto& t : points)
        if (t < 0 || t > 1) throw ArgumentError("example13 grid points must lie in [0,1]");
    if (!has(rat(1, 4))) missing.push_back("1/4");
    if (!has(rat(1, 2))) missing.push_back("1/2");
    std::size_t upper = 0;
    for (const auto& t : points)
        if (t > rat(1, 2) && t <= 1) ++upper;
    if (upper < d + 1) {
        std::ostringstream msg;
        msg << "at least " << d + 1 << " points of ]1/2,1] (found " << upper << ")";
        missing.push_back(msg.str());
    }
    if (points.size() < d + 1) missing.push_back("at least d+1 points in total");
    if (!missing.empty()) {
        std::string msg = "grid is missing required points:";
        for (const auto& m : missing) msg += " " + m + ";";
        throw ArgumentError(msg);
    }

    std::vector<QVector> basis;
    for (std::size_t p = 0; p <= d; ++p) {
        QVector v;
        v.reserve(points.size());
        for (const auto& t : points) {
            Rat power(1);
            for (std::size_t i = 0; i < p; ++i) power *= t;
            v.push_back(power);
        }
        basis.push_back(std::move(v));
    }
    std::ostringstream name;
    name << "example13(d=" << d << ")";
    return build_grid_model(name.str(), points, basis);
}

PreRieszModel make_example10(std::size_t big_n, std::size_t big_m) {
    if (big_n < 2 || big_m < 1) throw ArgumentError("example10 needs N ≥ 2, M ≥ 1");
    const std::size_t ambient = big_n + big_m + 1;
    const std::size_t dim = big_n + big_m;
    std::vector<QVector> basis;
    for (std::size_t p = 0; p < dim; ++p) {
        QVector v(ambient, Rat(0));
        v[p] = 1;
        if (p < big_n) {
            // position p carries index -(N-p); its series weight is 1/2^{N-p}
            long k = long(big_n - p);
            Rat w(1);
            for (long i = 0; i < k; ++i) w /= 2;
            v[ambient - 1] = w;
        }
        basis.push_back(std::move(v));
    }
    ModelSpec spec;
    std::ostringstream name;
    name << "example10(N=" << big_n << ",M=" << big_m << ")";
    spec.name = name.str();
    spec.dimension = dim;
    spec.subspace = SubspaceSpec{ambient, basis};
    PreRieszModel model = build_model(spec, grid_caps(dim));
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < ambient; ++p) {
        std::ostringstream lab;
        lab << (long(p) - long(big_n));
        labels.push_back(lab.str());
    }
    model.provenance->coordinate_labels = std::move(labels);
    return model;
}

PreRieszModel make_random(std::uint64_t seed, std::size_t n, std::size_t ray_count,
                          long coeff_bound) {
    if (n == 0 || n > 6) throw ArgumentError("random model needs 1 ≤ n ≤ 6");
    if (ray_count == 0 || ray_count > 10) throw ArgumentError("random model needs 1 ≤ rays ≤ 10");
    if (coeff_bound < 1) throw ArgumentError("random model needs coeff_bound ≥ 1");
    Rng rng(seed);
    Caps caps = Caps::wide();
    caps.max_dim = 8;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<QVector> rays;
        for (std::size_t i = 0; i < ray_count; ++i) {
            QVector v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = Rat(rng.int_in(-coeff_bound, coeff_bound));
            rays.push_back(std::move(v));
        }
        ModelSpec spec;
        spec.dimension = n;
        spec.cone_rays = std::move(rays);
        std::ostringstream name;
        name << "random(seed=" << seed << ",n=" << n << ",rays=" << ray_count << ")";
        spec.name = name.str();
        try {
            return build_model(spec, caps);
        } catch (const ModelRejected&) {
            continue;
        }
    }
    throw CapacityError("random model resampling budget exceeded");
}

Rat evaluate_at(const PreRieszModel& model, const QVector& element, const Rat& point) {
    const auto idx = ambient_index_of(model, point);
    if (!idx) throw ArgumentError("point " + rat_str(point) + " is not on the grid");
    return dot(model.provenance->evaluation.row(*idx), element);
}

std::optional<std::size_t> ambient_index_of(const PreRieszModel& model, const Rat& point) {
    if (!model.provenance) return std::nullopt;
    const auto& labels = model.provenance->coordinate_labels;
    const std::string key = rat_str(point);
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == key) return i;
    return std::nullopt;
}

PreRieszModel make_zoo(const std::string& name, const ZooParams& params) {
    if (name == "simplicial") {
        return make_simplicial(static_cast<std::size_t>(params.n.value_or(2)));
    }
    if (name == "four_ray") {
        return make_four_ray();
    }
    if (name == "example14") {
        return make_example14(static_cast<std::size_t>(params.big_n.value_or(3)), params.grid);
    }
    if (name == "example13") {
        return make_example13(static_cast<std::size_t>(params.d.value_or(4)), params.grid);
    }
    if (name == "example10") {
        return make_example10(static_cast<std::size_t>(params.big_n.value_or(4)),
                              static_cast<std::size_t>(params.big_m.value_or(4)));
    }
    if (name == "random") {
        return make_random(params.seed.value_or(1),
                           static_cast<std::size_t>(params.n.value_or(3)),
                           static_cast<std::size_t>(params.ray_count.value_or(5)),
                           params.coeff_bound.value_or(3));
    }
    throw ArgumentError("unknown zoo model '" + name + "'");
}

} // namespace preriesz
