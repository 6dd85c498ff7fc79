#include "qalg/geometry.hpp"
#include "qalg/pluecker.hpp"
#include "qtest.hpp"

#include <map>

using namespace qalg;

namespace {

std::string fixture(const std::string& name) { return std::string(QALG_FIXTURE_DIR "/") + name; }

using TE = TElem<RatFunc>;
using P6 = std::array<TE, 6>;

template <class K>
bool proj_eq6(const std::array<TElem<K>, 6>& p, const std::array<TElem<K>, 6>& q) {
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = i + 1; j < 6; ++j)
            if (!(p[i] * q[j] - p[j] * q[i]).is_zero()) return false;
    return true;
}

template <class K>
bool proj_distinct6(const std::array<TElem<K>, 6>& p, const std::array<TElem<K>, 6>& q) {
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = i + 1; j < 6; ++j)
            if (is_unit(p[i] * q[j] - p[j] * q[i])) return true;
    return false;
}

bool contains_match(const std::vector<P6>& have, const P6& want) {
    for (const auto& h : have)
        if (proj_eq6(h, want)) return true;
    return false;
}

} // namespace

int main() {
    QuadAlgebra A = load_algebra(fixture("a_alpha.txt"));

    QT_TEST("component table: names, degrees, homogeneous ideals");
    {
        const auto& comps = line_components();
        QT_EQ(comps.size(), size_t(8));
        std::vector<std::string> names;
        int total = 0;
        for (const auto& c : comps) {
            names.push_back(c.name);
            total += c.degree;
            QT_EQ(c.defining.size(), size_t(4));
            for (const auto& f : c.defining) QT_CHECK(f.is_homogeneous());
        }
        std::vector<std::string> expect = {"L1", "L2", "L3", "L4", "L5a", "L5b", "L6a", "L6b"};
        QT_CHECK(names == expect);
        QT_EQ(total, 20);
    }

    QT_TEST("component membership both ways, with dimension and degree");
    {
        ComponentReport rep = verify_components(A);
        QT_CHECK(rep.ok);
        QT_EQ(rep.total_degree, 20);
        QT_EQ(rep.checks.size(), size_t(8));
        const auto& comps = line_components();
        for (size_t k = 0; k < rep.checks.size(); ++k) {
            QT_CHECK(rep.checks[k].family_in_scheme);
            QT_CHECK(rep.checks[k].system_in_ideal);
            QT_EQ(rep.checks[k].dimension, 1);
            QT_EQ(rep.checks[k].degree, comps[k].degree);
        }
    }

    QT_TEST("pairwise intersections match the golden table");
    {
        IntersectionTable tab = pairwise_intersections();
        QT_EQ(tab.pairs.size(), size_t(28));
        const auto& ring = tab.ring;
        TE zero(ring), one(ring, RatFunc(1));
        TE i = TE::generator(ring, "i");
        TE a = TE::generator(ring, "a");
        TE b = TE::generator(ring, "b");
        TE d = TE::generator(ring, "d");
        TE al(ring, RatFunc::alpha());

        auto E = [&](size_t k) {
            P6 p = {zero, zero, zero, zero, zero, zero};
            p[k] = one;
            return p;
        };
        auto pt = [&](TE c0, TE c1, TE c2, TE c3, TE c4, TE c5) {
            return P6{c0, c1, c2, c3, c4, c5};
        };

        // index by component names, coordinates (M12, M13, M14, M23, M24, M34)
        std::map<std::pair<std::string, std::string>, std::vector<P6>> want;
        want[{"L2", "L3"}] = {E(1)};
        want[{"L2", "L4"}] = {E(1)};
        want[{"L3", "L4"}] = {E(1)};
        want[{"L3", "L5a"}] = {E(2)};
        want[{"L4", "L6a"}] = {E(3)};
        want[{"L5a", "L6a"}] = {E(4)};
        want[{"L1", "L3"}] = {pt(one, zero, i, zero, zero, zero), pt(one, zero, -i, zero, zero, zero)};
        want[{"L1", "L4"}] = {pt(zero, zero, zero, al, zero, one + d),
                              pt(zero, zero, zero, al, zero, one - d)};
        want[{"L1", "L5b"}] = {pt(zero, zero, i * a, zero, zero, one),
                               pt(zero, zero, -(i * a), zero, zero, one)};
        want[{"L1", "L6b"}] = {pt(i * a, zero, zero, one, zero, zero),
                               pt(-(i * a), zero, zero, one, zero, zero)};
        want[{"L2", "L5b"}] = {pt(zero, zero, zero, zero, a, i * b),
                               pt(zero, zero, zero, zero, a, -(i * b))};
        want[{"L2", "L6b"}] = {pt(b, zero, zero, zero, i, zero), pt(b, zero, zero, zero, -i, zero)};
        want[{"L5a", "L5b"}] = {pt(zero, zero, b, zero, i, zero), pt(zero, zero, b, zero, -i, zero)};
        want[{"L6a", "L6b"}] = {pt(zero, zero, zero, b, i * a, zero),
                                pt(zero, zero, zero, b, -(i * a), zero)};

        const auto& comps = line_components();
        int nonempty = 0;
        for (const auto& pr : tab.pairs) {
            auto key = std::make_pair(comps[size_t(pr.a)].name, comps[size_t(pr.b)].name);
            auto it = want.find(key);
            if (it == want.end()) {
                QT_CHECK(pr.points.empty());
                continue;
            }
            ++nonempty;
            QT_EQ(pr.points.size(), it->second.size());
            for (const auto& w : it->second) QT_CHECK(contains_match(pr.points, w));
        }
        QT_EQ(nonempty, 14);
        QT_EQ(tab.distinct_points.size(), size_t(20));
    }

    QT_TEST("intersection points satisfy all 46 system polynomials");
    {
        IntersectionTable tab = pairwise_intersections();
        LineSchemeSystem sys = line_scheme_system(A);
        std::vector<MPoly<RatFunc>> system;
        system.push_back(sys.pluecker);
        for (const auto& q : sys.quartics) system.push_back(q);
        QT_EQ(system.size(), size_t(46));
        for (const auto& p : tab.distinct_points) {
            bool all_zero = true;
            for (const auto& q : system) {
                TE v = q.eval(std::span<const TE>(p.data(), 6),
                              [&](const RatFunc& c) { return TE(tab.ring, c); });
                all_zero = all_zero && v.is_zero();
            }
            QT_CHECK(all_zero);
        }
    }

    QT_TEST("the twenty points stay distinct at alpha = 3 and 5");
    {
        IntersectionTable tab = pairwise_intersections();
        for (long av : {3L, 5L}) {
            auto target = specialize_ring(tab.ring, Rat(av));
            std::vector<std::array<TElem<Rat>, 6>> sp;
            for (const auto& p : tab.distinct_points) {
                std::array<TElem<Rat>, 6> q = {
                    specialize_alpha(p[0], target, Rat(av)), specialize_alpha(p[1], target, Rat(av)),
                    specialize_alpha(p[2], target, Rat(av)), specialize_alpha(p[3], target, Rat(av)),
                    specialize_alpha(p[4], target, Rat(av)), specialize_alpha(p[5], target, Rat(av))};
                sp.push_back(q);
            }
            bool distinct = true;
            for (size_t x = 0; x < sp.size(); ++x)
                for (size_t y = x + 1; y < sp.size(); ++y)
                    distinct = distinct && proj_distinct6(sp[x], sp[y]);
            QT_CHECK(distinct);
        }
    }

    QT_TEST("line recovery round trip on the twenty points");
    {
        IntersectionTable tab = pairwise_intersections();
        TE zero(tab.ring);
        for (const auto& p : tab.distinct_points) {
            auto [r1, r2] = line_from_pluecker(p, zero);
            P6 q = pluecker_of_span(r1, r2);
            QT_CHECK(proj_eq6(p, q));
        }
    }

    QT_TEST("six lines through each point of the first two root families");
    {
        auto pts = enumerate_points(A);
        std::vector<std::vector<std::string>> want = {{"L1"}, {"L2"}, {"L3"},
                                                      {"L4"}, {"L5b"}, {"L6b"}};
        int seen = 0;
        for (const auto& p : pts) {
            if (p.family != 1 && p.family != 2) continue;
            ++seen;
            IncidenceReport rep = lines_through_point(A, p);
            QT_CHECK(!rep.infinite);
            QT_EQ(rep.lines.size(), size_t(6));
            for (size_t k = 0; k < rep.lines.size(); ++k)
                QT_CHECK(rep.lines[k].components == want[k]);
        }
        QT_EQ(seen, 8);
    }

    QT_TEST("four lines with double memberships through the last two families");
    {
        auto pts = enumerate_points(A);
        std::vector<std::vector<std::string>> want3 = {{"L1", "L3"}, {"L2", "L6b"}, {"L4"}, {"L5a"}};
        std::vector<std::vector<std::string>> want4 = {{"L1", "L4"}, {"L2", "L5b"}, {"L3"}, {"L6a"}};
        int seen = 0;
        for (const auto& p : pts) {
            if (p.family != 3 && p.family != 4) continue;
            ++seen;
            IncidenceReport rep = lines_through_point(A, p);
            QT_CHECK(!rep.infinite);
            QT_EQ(rep.lines.size(), size_t(4));
            const auto& want = p.family == 3 ? want3 : want4;
            for (size_t k = 0; k < rep.lines.size(); ++k)
                QT_CHECK(rep.lines[k].components == want[k]);
        }
        QT_EQ(seen, 8);
    }

    QT_TEST("doubly-labeled incidence lines land on listed intersection points");
    {
        IntersectionTable tab = pairwise_intersections();
        auto pts = enumerate_points(A);
        for (const auto& p : pts) {
            if (p.family != 3 && p.family != 4) continue;
            IncidenceReport rep = lines_through_point(A, p);
            for (const auto& ln : rep.lines) {
                if (ln.components.size() < 2) continue;
                QT_CHECK(contains_match(tab.distinct_points, ln.pluecker));
            }
        }
    }

    QT_TEST("coordinate points lie on an infinite family of lines");
    {
        auto pts = enumerate_points(A);
        int seen = 0;
        for (const auto& p : pts) {
            if (p.family != 0) continue;
            ++seen;
            IncidenceReport rep = lines_through_point(A, p);
            QT_CHECK(rep.infinite);
            QT_CHECK(rep.lines.empty());
        }
        QT_EQ(seen, 4);
    }

    QT_TEST("unknown families are rejected");
    {
        auto pts = enumerate_points(A);
        SchemePoint bogus = pts[0];
        bogus.label = "mystery";
        bogus.family = 9;
        QT_THROWS(lines_through_point(A, bogus), UnknownPoint);
    }

    QT_TEST("jacobian rank report");
    {
        JacobianReport rep = jacobian_checks();
        QT_CHECK(rep.j1_rank_locus_empty);
        QT_CHECK(rep.j1_samples >= 20);
        QT_CHECK(rep.j2_singular_only_at_e2);
        QT_EQ(rep.j2_rank_at_e2, 1);
        QT_CHECK(rep.l3_curve_smooth);
        QT_CHECK(rep.l4_curve_smooth);
        QT_CHECK(rep.quadric_ranks_ok);
        QT_CHECK(rep.ok);
    }

    QT_TEST("parametrization and its inverse compose to the identity");
    {
        BirationalReport rep = birational_check();
        QT_CHECK(rep.chi_after_delta);
        QT_CHECK(rep.delta_after_chi_x);
        QT_CHECK(rep.delta_after_chi_z);
        QT_CHECK(rep.sample_defined);
        QT_CHECK(rep.ok);
    }

    return qtest::summary();
}
