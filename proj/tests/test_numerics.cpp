#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "comax/errors.hpp"
#include "comax/numerics/flow.hpp"
#include "comax/numerics/secular.hpp"
#include "comax/numerics/simplex.hpp"
#include "comax/numerics/sym_eig.hpp"
#include "comax/oracle/instances.hpp"

using namespace comax;

TEST_CASE("sym_eig diagonal") {
    Eigen::MatrixXd m = Eigen::Vector3d(5, 2, 1).asDiagonal();
    EigResult e = sym_eig(m);
    CHECK(e.values[0] == doctest::Approx(5).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(2).epsilon(1e-12));
    CHECK(e.values[2] == doctest::Approx(1).epsilon(1e-12));
    CHECK(std::abs(e.vectors(0, 0)) == doctest::Approx(1));
}

TEST_CASE("sym_eig 2x2") {
    Eigen::MatrixXd m(2, 2);
    m << 2, 1, 1, 2;
    EigResult e = sym_eig(m);
    CHECK(e.values[0] == doctest::Approx(3).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(1).epsilon(1e-12));
    Eigen::VectorXd v = e.vectors.col(0);
    CHECK(std::abs(v[0] - v[1]) < 1e-10);
}

TEST_CASE("sym_eig rank one") {
    Eigen::Vector3d a(3, -1, 2);
    Eigen::MatrixXd m = a * a.transpose();
    EigResult e = sym_eig(m);
    CHECK(e.values[0] == doctest::Approx(14).epsilon(1e-12));
    CHECK(std::abs(e.values[1]) < 1e-10);
    CHECK(std::abs(e.values[2]) < 1e-10);
    Eigen::VectorXd v = e.vectors.col(0);
    CHECK(std::abs(std::abs(v.dot(a.normalized())) - 1.0) < 1e-10);
}

TEST_CASE("sym_eig reconstruction property") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.next_u64() % 11);
        Eigen::MatrixXd g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian();
        Eigen::MatrixXd m = 0.5 * (g + g.transpose());
        EigResult e = sym_eig(m);
        Eigen::MatrixXd rec = e.vectors * e.values.asDiagonal() * e.vectors.transpose();
        CHECK((rec - m).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((e.vectors.transpose() * e.vectors - Eigen::MatrixXd::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff() < 1e-9);
        for (int k = 0; k + 1 < n; ++k) CHECK(e.values[k] >= e.values[k + 1] - 1e-12);
    }
}

TEST_CASE("sym_eig rejects bad input") {
    Eigen::MatrixXd m(2, 2);
    m << 1, 2, 3, 4;
    CHECK_THROWS_AS(sym_eig(m), InvalidInput);
    CHECK_THROWS_AS(sym_eig(Eigen::MatrixXd::Zero(65, 65)), InvalidInput);
}

TEST_CASE("lp max t under coordinate floors") {
    // max t s.t. y1 >= t, y2 >= t, y1 + y2 = 1  ->  1/2
    LpProblem p;
    p.objective = Eigen::Vector3d(0, 0, 1);
    p.add_le(Eigen::Vector3d(-1, 0, 1), 0);
    p.add_le(Eigen::Vector3d(0, -1, 1), 0);
    p.add_eq(Eigen::Vector3d(1, 1, 0), 1);
    LpResult r = solve_lp(p);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(dual_residual(p, r) < 1e-8);
}

TEST_CASE("lp with a negative optimum") {
    // max t s.t. y >= t, y <= -1, y >= -2  ->  t* = -1
    LpProblem p;
    p.objective = Eigen::Vector2d(0, 1);
    p.add_le(Eigen::Vector2d(-1, 1), 0);
    p.add_le(Eigen::Vector2d(1, 0), -1);
    p.add_le(Eigen::Vector2d(-1, 0), 2);
    LpResult r = solve_lp(p);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == doctest::Approx(-1).epsilon(1e-9));
}

TEST_CASE("lp infeasible and unbounded") {
    LpProblem p;
    p.objective = Eigen::VectorXd::Ones(1);
    p.add_le(Eigen::VectorXd::Ones(1), 1);
    p.add_le(-Eigen::VectorXd::Ones(1), -2);  // x >= 2 contradicts x <= 1
    CHECK(solve_lp(p).status == LpStatus::Infeasible);

    LpProblem q;
    q.objective = Eigen::VectorXd::Ones(1);
    q.add_le(-Eigen::VectorXd::Ones(1), 0);
    CHECK(solve_lp(q).status == LpStatus::Unbounded);
}

TEST_CASE("lp duality property") {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng.next_u64() % 4);
        int m = 3 + static_cast<int>(rng.next_u64() % 4);
        LpProblem p;
        p.objective.resize(n);
        for (int j = 0; j < n; ++j) p.objective[j] = rng.gaussian();
        for (int i = 0; i < m; ++i) {
            Eigen::VectorXd row(n);
            for (int j = 0; j < n; ++j) row[j] = rng.gaussian();
            p.add_le(row, 1.0 + std::abs(rng.gaussian()));
        }
        // Box to keep it bounded.
        for (int j = 0; j < n; ++j) {
            Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
            e[j] = 1;
            p.add_le(e, 10);
            p.add_le(-e, 10);
        }
        LpResult r = solve_lp(p);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(dual_residual(p, r) < 1e-7);
        double dual_value = r.dual_le.dot(p.b_le);
        CHECK(dual_value == doctest::Approx(r.value).epsilon(1e-7));
    }
}

TEST_CASE("flow bipartite exact fill") {
    // rows {0,1} -> cols {2,3}, each col must receive exactly 1.
    FlowNetwork net;
    net.num_nodes = 4;
    net.supply = {1, 1, -1, -1};
    net.arcs.push_back({0, 2, 1, false});
    net.arcs.push_back({0, 3, 1, false});
    net.arcs.push_back({1, 2, 1, false});
    auto flow = max_flow_exact_fill(net);
    REQUIRE(flow.has_value());
    CHECK(flow->arc_flow[0] + flow->arc_flow[1] == 1);
    CHECK(flow->arc_flow[2] == 1);
    // Col 3 reachable only from row 0, so arc 1 carries its unit.
    CHECK(flow->arc_flow[1] == 1);
}

TEST_CASE("flow infeasible when a demand is unreachable") {
    FlowNetwork net;
    net.num_nodes = 4;
    net.supply = {1, 1, -2, 0};
    net.arcs.push_back({0, 2, 1, false});
    net.arcs.push_back({1, 3, 1, false});
    CHECK(!max_flow_exact_fill(net).has_value());
}

TEST_CASE("flow exact fill forces a saturated arc") {
    FlowNetwork net;
    net.num_nodes = 3;
    net.supply = {2, 0, -2};
    net.arcs.push_back({0, 1, 2, true});
    net.arcs.push_back({1, 2, 2, false});
    net.arcs.push_back({0, 2, 2, false});
    auto flow = max_flow_exact_fill(net);
    REQUIRE(flow.has_value());
    CHECK(flow->arc_flow[0] == 2);
    CHECK(flow->arc_flow[1] == 2);
    CHECK(flow->arc_flow[2] == 0);
}

TEST_CASE("flow matches brute-force assignment counts") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng.next_u64() % 4);
        int cols = 1 + static_cast<int>(rng.next_u64() % 3);
        std::vector<std::vector<int>> allowed(rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (rng.next_u64() % 2) allowed[i].push_back(j);
        std::vector<long> cap(cols);
        for (int j = 0; j < cols; ++j) cap[j] = 1 + static_cast<long>(rng.next_u64() % 2);

        // Brute force: each row picks one allowed column (or none is not an
        // option here: rows carry supply 1 and must be assigned).
        bool brute = false;
        std::vector<int> pick(rows, 0);
        long combos = 1;
        for (int i = 0; i < rows; ++i) combos *= std::max<size_t>(allowed[i].size(), 1);
        if (std::all_of(allowed.begin(), allowed.end(),
                        [](const std::vector<int>& a) { return !a.empty(); })) {
            for (long code = 0; code < combos && !brute; ++code) {
                long c = code;
                std::vector<long> used(cols, 0);
                bool ok = true;
                for (int i = 0; i < rows; ++i) {
                    int j = allowed[i][c % allowed[i].size()];
                    c /= allowed[i].size();
                    if (++used[j] > cap[j]) { ok = false; break; }
                }
                brute = brute || ok;
            }
        }

        FlowNetwork net;
        net.num_nodes = rows + cols;
        net.supply.assign(rows + cols, 0);
        for (int i = 0; i < rows; ++i) net.supply[i] = 1;
        long total_cap = 0;
        for (int j = 0; j < cols; ++j) total_cap += cap[j];
        // Demands: columns absorb what they get; model with per-column demand
        // shifted onto capacity by a shared sink column trick is overkill at
        // this size, so give each column demand up to cap via a sink node.
        net.num_nodes = rows + cols + 1;
        net.supply.assign(net.num_nodes, 0);
        for (int i = 0; i < rows; ++i) net.supply[i] = 1;
        net.supply[net.num_nodes - 1] = -rows;
        for (int i = 0; i < rows; ++i)
            for (int j : allowed[i]) net.arcs.push_back({i, rows + j, 1, false});
        for (int j = 0; j < cols; ++j)
            net.arcs.push_back({rows + j, net.num_nodes - 1, cap[j], false});
        bool feasible = max_flow_exact_fill(net).has_value();
        CHECK(feasible == brute);
    }
}

TEST_CASE("secular fixture") {
    Eigen::Vector2d lam(2, 1), b(0.2, 0);
    CHECK(secular_root(lam, b) == doctest::Approx(2.1).epsilon(1e-10));
}

TEST_CASE("secular hard case when top components vanish") {
    Eigen::Vector2d lam(2, 1), b(0, 0);
    CHECK_THROWS_AS(secular_root(lam, b), HardCase);
}

TEST_CASE("secular agrees with plain bisection") {
    Rng rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.next_u64() % 5);
        Eigen::VectorXd lam(n), b(n);
        for (int i = 0; i < n; ++i) {
            lam[i] = rng.gaussian();
            b[i] = rng.gaussian();
        }
        std::sort(lam.data(), lam.data() + n, std::greater<double>());
        if (std::abs(b[0]) < 1e-3) b[0] = 1e-3;
        double mu = secular_root(lam, b);
        auto phi = [&](double m) {
            double s = 0;
            for (int i = 0; i < n; ++i) s += (b[i] * b[i] / 4) / ((m - lam[i]) * (m - lam[i]));
            return s;
        };
        CHECK(mu > lam[0]);
        CHECK(phi(mu) == doctest::Approx(1.0).epsilon(1e-8));
        double lo = lam[0] + 1e-14, hi = lam[0] + b.norm() + 1;
        while (phi(hi) >= 1) hi = lam[0] + 2 * (hi - lam[0]);
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            (phi(mid) > 1 ? lo : hi) = mid;
        }
        CHECK(mu == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-7));
    }
}
