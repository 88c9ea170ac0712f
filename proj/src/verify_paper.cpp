#include "ntau/verify_paper.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "ntau/appendix.hpp"
#include "ntau/extremal.hpp"
#include "ntau/geometry.hpp"
#include "ntau/newton_sps.hpp"
#include "ntau/poly.hpp"
#include "ntau/rng.hpp"

namespace ntau {

namespace {

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.str().empty()) detail << "; ";
            detail << what;
        }
    }
};

SparsePoly example1_A() { return parse_poly("X*Y + X^2 + X^2*Y^2 + X^3*Y + X^5*Y"); }
SparsePoly example1_B() { return parse_poly("1 + X*Y^2"); }
SparsePoly example1_C() { return parse_poly("-X - X*Y - X^2*Y^2"); }
SparsePoly example1_D() { return parse_poly("Y + X + X^2*Y + X^4*Y"); }
SparsePoly example2_f() { return parse_poly("1 + X^2*Y + X*Y^2"); }
SparsePoly example2_g() { return parse_poly("1 + X^4*Y + X*Y^4"); }

SparsePoly random_sparse(Rng& rng, std::size_t max_terms, long exponent_bound,
                         bool positive) {
    const auto t = static_cast<std::size_t>(rng.range(1, static_cast<long>(max_terms)));
    SparsePoly f;
    while (support(f).size() < t) {
        Monomial m(rng.range(0, exponent_bound), rng.range(0, exponent_bound));
        f += SparsePoly::monomial(m, rng.nonzero_rational(!positive));
    }
    return f;
}

void check_example1(Check& c) {
    const SparsePoly sum = example1_A() * example1_B() + example1_C() * example1_D();
    const SparsePoly expected =
        parse_poly("X^2*Y^2 + X^3*Y^4 - X*Y^2 - X^2*Y - X^3*Y^2 - X^5*Y^2");
    c.require(sum == expected, "expansion of AB+CD is wrong");

    const ConvexPolygon newt = newton_polygon(sum);
    const ConvexPolygon expected_newt = convex_hull(
        PointSet({{1, 2}, {2, 1}, {5, 2}, {3, 4}}));
    c.require(newt == expected_newt, "Newt(AB+CD) vertices are wrong");

    // The two support points that reach the hull of the sum despite lying
    // strictly inside both product polygons.
    const ConvexPolygon nab = newton_polygon(example1_A() * example1_B());
    const ConvexPolygon ncd = newton_polygon(example1_C() * example1_D());
    for (const LatticePoint p : {LatticePoint{2, 1}, LatticePoint{5, 2}}) {
        c.require(newt.is_vertex(p), "expected escape vertex " + to_string(p));
        c.require(!nab.is_vertex(p), to_string(p) + " should not be a vertex of Newt(AB)");
        c.require(!ncd.is_vertex(p), to_string(p) + " should not be a vertex of Newt(CD)");
    }

    const SpsExpression expr({{example1_A(), example1_B()}, {example1_C(), example1_D()}});
    const EdgeReport report = sps_edge_report(expr, mpq_class(3, 2));
    c.require(report.edges == 4, "edge count of the worked instance should be 4");
    c.require(report.bound_no_cancel == 20, "kmt should be 20 for the worked instance");
    c.require(report.containment_ok, "containment must hold");
}

void check_example2(Check& c) {
    const SparsePoly fg = example2_f() * example2_g();
    const SparsePoly fg_minus_1 = fg - SparsePoly::constant(1);
    const ConvexPolygon with_const = newton_polygon(fg);
    const ConvexPolygon without_const = newton_polygon(fg_minus_1);
    c.require(support(fg).size() == 9, "Mon(fg) should have 9 points");
    for (const LatticePoint p : {LatticePoint{1, 2}, LatticePoint{2, 1}}) {
        c.require(without_const.is_vertex(p),
                  to_string(p) + " should be a vertex of Newt(fg-1)");
        c.require(!with_const.is_vertex(p),
                  to_string(p) + " should not be a vertex of Newt(fg)");
    }
}

void check_hard_family(Check& c) {
    for (unsigned n = 2; n <= 10; ++n) {
        const std::size_t edges = edge_count(newton_polygon(hard_family(n)));
        c.require(edges == (1ull << n),
                  "f_" + std::to_string(n) + " should have 2^n edges, got " +
                      std::to_string(edges));
    }
}

void check_substitution(Check& c) {
    for (unsigned n = 1; n <= 8; ++n)
        c.require(hn_substituted(n) == hard_family(n),
                  "substitution identity fails at n=" + std::to_string(n));
}

void check_fischer(Check& c, std::uint64_t seed) {
    for (std::size_t m = 1; m <= 6; ++m) {
        Rng rng(derive_seed(seed, 100 + m));
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<SparsePoly> factors;
            SparsePoly product = SparsePoly::constant(1);
            for (std::size_t i = 0; i < m; ++i) {
                factors.push_back(random_sparse(rng, 4, 3, false));
                product = product * factors.back();
            }
            const PowerSumExpression powers = fischer_expand(factors);
            if (powers.summands.size() != (1ull << (m - 1))) {
                c.require(false, "summand count should be 2^(m-1) at m=" + std::to_string(m));
                return;
            }
            if (expand_power_sum(powers) != product) {
                c.require(false, "expansion mismatch at m=" + std::to_string(m) +
                                     ", trial " + std::to_string(trial));
                return;
            }
        }
    }
}

void check_powers_rewriting(Check& c, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 7));
    for (int trial = 0; trial < 60; ++trial) {
        const auto k = static_cast<std::size_t>(rng.range(1, 3));
        const auto m = static_cast<std::size_t>(rng.range(1, 3));
        std::vector<std::vector<SparsePoly>> rows;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<SparsePoly> row;
            for (std::size_t j = 0; j < m; ++j) row.push_back(random_sparse(rng, 3, 3, false));
            rows.push_back(std::move(row));
        }
        const SpsExpression expr(rows);
        const PowerSumExpression powers = sps_to_powers(expr);
        if (powers.summands.size() != (1ull << (m - 1)) * k) {
            c.require(false, "summand count should be 2^(m-1)*k");
            return;
        }
        const std::size_t t = expr.t();
        for (const auto& [a, base] : powers.summands)
            if (base.term_count() > m * t) {
                c.require(false, "summand base exceeds m*t monomials");
                return;
            }
        if (expand_power_sum(powers) != expand_sps(expr)) {
            c.require(false, "power rewriting changed the value, trial " +
                                 std::to_string(trial));
            return;
        }
    }
}

void check_product_rule(Check& c, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 8));
    for (int trial = 0; trial < 500; ++trial) {
        const SparsePoly f = random_sparse(rng, 5, 8, false);
        const SparsePoly g = random_sparse(rng, 5, 8, false);
        const ConvexPolygon product_newt = newton_polygon(f * g);
        const ConvexPolygon sum_polygon =
            minkowski_sum_polygons(newton_polygon(f), newton_polygon(g));
        if (product_newt != sum_polygon) {
            c.require(false, "Newt(fg) != Newt(f)+Newt(g) at trial " + std::to_string(trial));
            return;
        }
        if (edge_count(product_newt) >
            edge_count(newton_polygon(f)) + edge_count(newton_polygon(g))) {
            c.require(false, "edge count exceeds s+t at trial " + std::to_string(trial));
            return;
        }
    }
}

void check_no_cancellation(Check& c, std::uint64_t seed) {
    for (int trial = 0; trial < 500; ++trial) {
        Rng rng(derive_seed(seed, 9000 + static_cast<std::uint64_t>(trial)));
        const auto k = static_cast<std::size_t>(rng.range(1, 4));
        const auto m = static_cast<std::size_t>(rng.range(1, 4));
        const auto t = static_cast<std::size_t>(rng.range(1, 5));
        const SpsExpression expr =
            random_sps(k, m, t, 6, CoeffMode::Positive, rng.next());
        const SparsePoly expanded = expand_sps(expr);
        const ConvexPolygon newt = newton_polygon(expanded);
        const ConvexPolygon env = envelope(expr);
        if (newt != env) {
            c.require(false, "positive coefficients must give Newt = envelope");
            return;
        }
        if (edge_count(newt) > k * m * t) {
            c.require(false, "edge count exceeds kmt with positive coefficients");
            return;
        }
    }
}

void check_containment(Check& c, std::uint64_t seed) {
    for (int trial = 0; trial < 500; ++trial) {
        Rng rng(derive_seed(seed, 17000 + static_cast<std::uint64_t>(trial)));
        const auto k = static_cast<std::size_t>(rng.range(1, 4));
        const auto m = static_cast<std::size_t>(rng.range(1, 4));
        const auto t = static_cast<std::size_t>(rng.range(1, 5));
        const CoeffMode mode = (trial % 3 == 0 && k >= 2) ? CoeffMode::Cancelling
                                                          : CoeffMode::Signed;
        const SpsExpression expr = random_sps(k, m, t, 6, mode, rng.next());
        const EdgeReport report = sps_edge_report(expr, mpq_class(3, 2));
        if (!report.containment_ok) {
            c.require(false, "expansion support escaped the envelope at trial " +
                                 std::to_string(trial));
            return;
        }
    }
}

void check_grids(Check& c) {
    const std::pair<unsigned long, unsigned> cases[] = {
        {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
    for (const auto& [b, m] : cases) {
        const GridFamily family = example_grids(b, m);
        for (const auto& set : family.sets)
            c.require(set.size() == b * b * b, "each P_k must have b^3 points");
        const PointSet sum = minkowski_multi(family.sets);
        mpz_class wx, wy;
        mpz_ui_pow_ui(wx.get_mpz_t(), b, 2ul * m);
        mpz_ui_pow_ui(wy.get_mpz_t(), b, m);
        std::vector<LatticePoint> full;
        for (mpz_class x = 0; x < wx; ++x)
            for (mpz_class y = 0; y < wy; ++y) full.emplace_back(x, y);
        c.require(sum == PointSet(std::move(full)),
                  "P_0+...+P_{m-1} must be the full grid at b=" + std::to_string(b) +
                      ", m=" + std::to_string(m));
    }
}

void check_staircase(Check& c) {
    for (long M = 1; M <= 200; ++M) {
        for (long N = 1; N <= 200; ++N) {
            const PointSet stairs = grid_staircase(M, N);
            long n = 1;
            while ((n + 1) * n / 2 < M && n + 1 < N) ++n;
            if (stairs.size() != static_cast<std::size_t>(n)) {
                c.require(false, "staircase size wrong at M=" + std::to_string(M) +
                                     ", N=" + std::to_string(N));
                return;
            }
            if (!is_convexly_independent(stairs)) {
                c.require(false, "staircase not convexly independent at M=" +
                                     std::to_string(M) + ", N=" + std::to_string(N));
                return;
            }
            for (const auto& p : stairs)
                if (p.x < 0 || p.x >= M || p.y < 0 || p.y >= N) {
                    c.require(false, "staircase leaves the grid at M=" +
                                         std::to_string(M) + ", N=" + std::to_string(N));
                    return;
                }
        }
    }
}

void check_lb_witness(Check& c) {
    const std::pair<unsigned long, unsigned> cases[] = {{2, 2}, {2, 3}, {3, 2}};
    for (const auto& [b, m] : cases) {
        const PointSet witness = lb_witness(b, m); // digit membership checked inside
        mpz_class target;
        mpz_ui_pow_ui(target.get_mpz_t(), b, m);
        target -= 1;
        c.require(mpz_class(static_cast<unsigned long>(witness.size())) >= target,
                  "witness below b^m - 1 at b=" + std::to_string(b) +
                      ", m=" + std::to_string(m));
    }
}

void check_union_trick(Check& c) {
    const GridFamily family = example_grids(2, 2);
    const auto [united, witness] = union_powers_witness(family.sets);
    c.require(united.size() <= 16, "union of the two grids has at most 16 points");
    c.require(witness.size() >= 3, "union witness should have at least 3 points");
    c.require(is_convexly_independent(witness), "union witness must be convexly independent");
}

void check_convex_position_experiment(Check& c, std::uint64_t seed) {
    c.require(convexly_independent_in_sum(example2_f(), example2_g()) == 6,
              "the worked 3x3 instance must give 6 convexly independent sum points");
    Rng rng(derive_seed(seed, 11));
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(rng.range(1, 10));
        std::vector<LatticePoint> pts;
        for (std::size_t i = 0; i < n; ++i)
            pts.emplace_back(rng.range(0, 12), rng.range(0, 12));
        const PointSet s(pts);
        if (max_convex_subset(s).size() != max_convex_subset_bruteforce(s).size()) {
            c.require(false, "DP disagrees with brute force at trial " + std::to_string(trial));
            return;
        }
    }
}

void check_appendix_structure(Check& c, std::uint64_t seed, bool edges_only) {
    for (int trial = 0; trial < 500; ++trial) {
        const auto t = static_cast<std::size_t>(2 + (trial % 7)); // 2..8
        const SameSupportPair pair = random_same_support_pair(
            t, 6, true, derive_seed(seed, 23000 + static_cast<std::uint64_t>(trial)));
        if (edges_only) {
            const SameThReport r = verify_sameth(pair);
            if (!r.ok) {
                c.require(false, "edge bound t+1 violated at trial " + std::to_string(trial) +
                                     " (edges=" + std::to_string(r.edges) + ")");
                return;
            }
        } else {
            const SamePropReport r = verify_sameprop_report(pair);
            if (!r.match) {
                c.require(false, "structure equality fails at trial " + std::to_string(trial));
                return;
            }
            if (r.which_case == SamePropCase::ConstantCancels && r.jk_overlap > 2) {
                c.require(false, "|J ∩ K| > 2 at trial " + std::to_string(trial));
                return;
            }
        }
    }
}

void check_counterexample(Check& c) {
    const auto [pair, expanded] = builtin_counterexample();
    const SparsePoly expected =
        parse_poly("2*X^3*Y^3 - (1/2)*X^6*Y^6 - (1/4)*X^4*Y^8 - (1/4)*X^8*Y^4");
    c.require(expanded == expected, "counterexample expansion is wrong");
    c.require(newton_polygon(expanded).is_vertex({3, 3}),
              "(3,3) should be a vertex of the counterexample polygon");
    c.require(!check_condition_ii(pair), "the counterexample must violate condition (ii)");
    const SamePropReport r = verify_sameprop_report(pair);
    c.require(!r.match, "the counterexample must break the structure equality");
    c.require(r.offending_vertex && *r.offending_vertex == LatticePoint{3, 3},
              "the offending vertex should be (3,3)");
}

void check_six_points(Check& c, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 31));
    int done = 0;
    while (done < 1000) {
        LatticePoint p(rng.range(-10, 10), rng.range(-10, 10));
        LatticePoint q(rng.range(-10, 10), rng.range(-10, 10));
        LatticePoint r(rng.range(-10, 10), rng.range(-10, 10));
        const LatticePoint zero(0, 0);
        if (p == zero || q == zero || r == zero || p == q || q == r || p == r) continue;
        ++done;
        const SixPointResult result = six_point_check(p, q, r);
        if (result.independent) {
            c.require(false, "six points reported convexly independent: " + to_string(p) +
                                 " " + to_string(q) + " " + to_string(r));
            return;
        }
        if (!result.certificate) {
            c.require(false, "no containment certificate for " + to_string(p) + " " +
                                 to_string(q) + " " + to_string(r));
            return;
        }
    }
}

} // namespace

ChecklistReport run_paper_checklist(std::uint64_t seed) {
    using Clock = std::chrono::steady_clock;
    ChecklistReport report;

    const std::vector<std::pair<std::string, std::function<void(Check&)>>> items = {
        {"Example 1 (AB+CD cancellation)", [&](Check& c) { check_example1(c); }},
        {"Example 2 (fg-1 cancellation)", [&](Check& c) { check_example2(c); }},
        {"Eq. (3) hard family edge counts", [&](Check& c) { check_hard_family(c); }},
        {"Eq. (4) substitution identity", [&](Check& c) { check_substitution(c); }},
        {"Lemma 1 (Fischer's formula)", [&](Check& c) { check_fischer(c, seed); }},
        {"Theorem 3 (sums of powers rewriting)",
         [&](Check& c) { check_powers_rewriting(c, seed); }},
        {"Product rule Newt(fg) = Newt(f) + Newt(g)",
         [&](Check& c) { check_product_rule(c, seed); }},
        {"kmt bound without cancellation", [&](Check& c) { check_no_cancellation(c, seed); }},
        {"Envelope containment under cancellation",
         [&](Check& c) { check_containment(c, seed); }},
        {"Theorem 4 experiment (convex position in sums)",
         [&](Check& c) { check_convex_position_experiment(c, seed); }},
        {"Example 4 (digit grids)", [&](Check& c) { check_grids(c); }},
        {"Lemma 2 (staircase)", [&](Check& c) { check_staircase(c); }},
        {"Proposition 1 (grid witness)", [&](Check& c) { check_lb_witness(c); }},
        {"Union-of-sets witness", [&](Check& c) { check_union_trick(c); }},
        {"Appendix Proposition (structure of Newt(fg+1))",
         [&](Check& c) { check_appendix_structure(c, seed, false); }},
        {"Appendix Theorem (t+1 edge bound)",
         [&](Check& c) { check_appendix_structure(c, seed, true); }},
        {"Appendix counterexample", [&](Check& c) { check_counterexample(c); }},
        {"Appendix Lemma (six points)", [&](Check& c) { check_six_points(c, seed); }},
    };

    const auto start_all = Clock::now();
    for (const auto& [location, fn] : items) {
        Check check;
        const auto start = Clock::now();
        try {
            fn(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        ChecklistItem item;
        item.location = location;
        item.pass = check.pass;
        item.detail = check.detail.str();
        item.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        report.all_pass = report.all_pass && item.pass;
        report.items.push_back(std::move(item));
    }
    report.total_seconds = std::chrono::duration<double>(Clock::now() - start_all).count();
    return report;
}

} // namespace ntau
