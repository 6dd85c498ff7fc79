#include "qalg/pointscheme.hpp"

#include <algorithm>
#include <map>

namespace qalg {

namespace {

using TE = TElem<RatFunc>;

MPoly<RatFunc> canonical_generator(const MPoly<RatFunc>& p, const MonomialOrder& ord) {
    if (p.is_zero()) return p;
    return monic(primitive_part(p), ord);
}

// Monomial values at a fixed point, memoized across all generators (the 15
// minors share most of their monomials).
TE mono_value(Mono m, const std::array<TE, 4>& coords, const TE& one,
              std::map<uint64_t, TE>& memo) {
    if (m.bits == 0) return one;
    auto it = memo.find(m.bits);
    if (it != memo.end()) return it->second;
    int v = 0;
    while (m.exp(v) == 0) ++v;
    TE val = coords[static_cast<size_t>(v)] * mono_value(m / Mono::var(v), coords, one, memo);
    memo.emplace(m.bits, val);
    return val;
}

} // namespace

std::vector<MPoly<RatFunc>> point_ideal(const QuadAlgebra& alg) {
    Mat<MPoly<RatFunc>> M = build_relation_matrix(alg);
    MonomialOrder ord{MonomialOrder::grevlex};
    std::vector<MPoly<RatFunc>> gens;
    for (auto& e : enumerate_minors(M, std::min(M.rows(), M.cols())))
        gens.push_back(canonical_generator(e.minor, ord));
    std::stable_sort(gens.begin(), gens.end(),
                     [&](const MPoly<RatFunc>& a, const MPoly<RatFunc>& b) {
                         return to_string(a, ord) < to_string(b, ord);
                     });
    return gens;
}

TowerPtr<RatFunc> master_tower() {
    RatFunc al = RatFunc::alpha();
    auto r = tower_base<RatFunc>();
    r = tower_adjoin_sqrt(r, RatFunc(-1), "i");
    r = tower_adjoin_sqrt(r, al, "a");
    r = tower_adjoin_sqrt(r, RatFunc(2), "b");
    r = tower_adjoin_sqrt(r, RatFunc(1) - al * al, "d");
    r = tower_adjoin_sqrt(r, RatFunc(-2) * (RatFunc(1) + al), "r1");
    r = tower_adjoin_sqrt(r, RatFunc(-2) * (RatFunc(1) - al), "r2");
    return r;
}

std::vector<SchemePoint> enumerate_points(const QuadAlgebra& alg) {
    auto ring = master_tower();
    TE zero(ring), one(ring, RatFunc(1));
    TE i = TE::generator(ring, "i");
    TE a = TE::generator(ring, "a");
    TE b = TE::generator(ring, "b");
    TE d = TE::generator(ring, "d");
    TE r1 = TE::generator(ring, "r1");
    TE r2 = TE::generator(ring, "r2");
    RatFunc al = RatFunc::alpha();

    std::vector<SchemePoint> pts;
    auto add = [&](std::string label, int family, TE c1, TE c2, TE c3, TE c4) {
        pts.push_back({std::move(label), family, {c1, c2, c3, c4}});
    };

    add("e1", 0, one, zero, zero, zero);
    add("e2", 0, zero, one, zero, zero);
    add("e3", 0, zero, zero, one, zero);
    add("e4", 0, zero, zero, zero, one);

    for (int s1 = 0; s1 < 2; ++s1)
        for (int s3 = 0; s3 < 2; ++s3) {
            TE l1 = s1 ? -r1 : r1, l3 = s3 ? -b : b;
            add("Z1." + std::to_string(2 * s1 + s3 + 1), 1, l1, one, l3, one);
        }
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s3 = 0; s3 < 2; ++s3) {
            TE l1 = s1 ? -r2 : r2, l3 = s3 ? -(i * b) : i * b;
            add("Z2." + std::to_string(2 * s1 + s3 + 1), 2, l1, -one, l3, one);
        }
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) {
            TE l1 = s1 ? -(i * b) : i * b, l2 = s2 ? -i : i;
            add("Z3." + std::to_string(2 * s1 + s2 + 1), 3, l1, l2, zero, one);
        }
    // alpha l2^2 + 2 l2 + alpha = 0: l2 = (-1 +- d)/alpha; then
    // l3 = +- l2 i b a / alpha squares to -2 l2^2 / alpha.
    RatFunc inv_al = RatFunc(1) / al;
    for (int sd = 0; sd < 2; ++sd)
        for (int s3 = 0; s3 < 2; ++s3) {
            TE l2 = (sd ? -one - d : -one + d) * inv_al;
            TE l3 = l2 * i * b * a * inv_al;
            if (s3) l3 = -l3;
            add("Z4." + std::to_string(2 * sd + s3 + 1), 4, zero, l2, l3, one);
        }

    std::vector<MPoly<RatFunc>> gens = point_ideal(alg);
    for (const auto& p : pts) {
        std::map<uint64_t, TE> memo;
        for (size_t g = 0; g < gens.size(); ++g) {
            TE val(ring);
            for (const auto& [m, c] : gens[g].terms())
                val = val + c * mono_value(m, p.coords, one, memo);
            if (!val.is_zero())
                throw VerificationFailure("generator " + std::to_string(g + 1) +
                                              " does not vanish at " + p.label,
                                          static_cast<int>(g));
        }
    }
    return pts;
}

SchemePoint sigma(const QuadAlgebra& alg, const SchemePoint& q) {
    const TowerPtr<RatFunc>& ring = q.coords[0].ring();
    TE zero(ring), one(ring, RatFunc(1));
    Mat<TE> A(static_cast<int>(alg.relations.size()), 4, zero);
    for (size_t k = 0; k < alg.relations.size(); ++k)
        for (int j = 0; j < 4; ++j) {
            TE acc = zero;
            for (int i = 0; i < 4; ++i) {
                const RatFunc& c = alg.relations[k][static_cast<size_t>(4 * i + j)];
                if (!is_zero(c)) acc += q.coords[static_cast<size_t>(i)] * TE(ring, c);
            }
            A.at(static_cast<int>(k), j) = acc;
        }
    auto basis = ring_null_space(A, zero, one);
    if (basis.size() != 1)
        throw NonUniqueImage("incidence system at " + q.label + " has nullity " +
                             std::to_string(basis.size()));
    SchemePoint out;
    out.label = "sigma(" + q.label + ")";
    out.family = -1;
    for (int j = 0; j < 4; ++j) out.coords[static_cast<size_t>(j)] = basis[0][static_cast<size_t>(j)];
    return out;
}

std::vector<std::array<int, 2>> sigma_orbits(const QuadAlgebra& alg,
                                             const std::vector<SchemePoint>& pts) {
    std::vector<int> image(pts.size(), -1);
    for (size_t k = 0; k < pts.size(); ++k) {
        SchemePoint s = sigma(alg, pts[k]);
        for (size_t j = 0; j < pts.size(); ++j)
            if (coords_projectively_equal(s.coords, pts[j].coords)) {
                if (image[k] != -1)
                    throw NonUniqueImage("image of " + pts[k].label + " matches two points");
                image[k] = static_cast<int>(j);
            }
        if (image[k] < 0)
            throw VerificationFailure("image of " + pts[k].label + " is not on the point list",
                                      -1);
    }
    std::vector<std::array<int, 2>> orbits;
    for (size_t k = 0; k < pts.size(); ++k) {
        int j = image[k];
        if (image[static_cast<size_t>(j)] != static_cast<int>(k))
            throw VerificationFailure("sigma is not an involution at " + pts[k].label, -1);
        if (static_cast<int>(k) <= j) orbits.push_back({static_cast<int>(k), j});
    }
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

std::vector<std::array<TElem<Rat>, 4>> specialize_points(const std::vector<SchemePoint>& pts,
                                                         const Rat& value) {
    std::vector<std::array<TElem<Rat>, 4>> out;
    if (pts.empty()) return out;
    TowerPtr<Rat> target = specialize_ring(pts[0].coords[0].ring(), value);
    for (const auto& p : pts) {
        std::array<TElem<Rat>, 4> c;
        for (int j = 0; j < 4; ++j)
            c[static_cast<size_t>(j)] = specialize_alpha(p.coords[static_cast<size_t>(j)], target, value);
        out.push_back(c);
    }
    return out;
}

} // namespace qalg
