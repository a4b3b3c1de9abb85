#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <set>

#include "comax/arrangement/arrangement.hpp"
#include "comax/errors.hpp"
#include "comax/oracle/instances.hpp"

using namespace comax;

namespace {

Hyperplane line(double a, double b, double c = 0) {
    return {Eigen::Vector2d(a, b), c};
}

std::vector<std::int8_t> signs_at(const std::vector<Hyperplane>& planes,
                                  const Eigen::VectorXd& z, double tol = 1e-9) {
    std::vector<std::int8_t> s;
    for (const Hyperplane& h : planes) {
        double v = h.normal.dot(z) - h.offset;
        s.push_back(v > tol ? 1 : (v < -tol ? -1 : 0));
    }
    return s;
}

} // namespace

TEST_CASE("single plane on a line") {
    std::vector<Hyperplane> planes{{Eigen::VectorXd::Ones(1), 0.0}};
    auto cells = enumerate_cells(planes, 1, 1);
    REQUIRE(cells.size() == 3);
    std::set<std::vector<std::int8_t>> got;
    for (auto& c : cells) got.insert(c.signs);
    CHECK(got.count({-1}));
    CHECK(got.count({0}));
    CHECK(got.count({1}));
}

TEST_CASE("three central lines give 13 cells") {
    std::vector<Hyperplane> planes{line(1, 0), line(0, 1), line(1, -1)};
    auto cells = enumerate_cells(planes, 2, 2);
    CHECK(cells.size() == 13);
    int open = 0, rays = 0, origin = 0;
    for (auto& c : cells) {
        int zeros = 0;
        for (auto s : c.signs) zeros += (s == 0);
        if (zeros == 0) ++open;
        else if (zeros == static_cast<int>(planes.size())) ++origin;
        else ++rays;
    }
    CHECK(open == 6);
    CHECK(rays == 6);
    CHECK(origin == 1);
}

TEST_CASE("four affine lines in general position give 11 full cells") {
    std::vector<Hyperplane> planes{line(1, 0, 0.3), line(0, 1, -0.2),
                                   line(1, 1, 0.7), line(1, -2, 0.11)};
    auto cells = enumerate_cells(planes, 2, 0);
    CHECK(cells.size() == 11);
    for (auto& c : cells) CHECK(c.dim == 2);
}

TEST_CASE("witness validity and determinism") {
    std::vector<Hyperplane> planes{line(2, 1, 0.4), line(-1, 3, 0), line(1, 1, 1)};
    auto a = enumerate_cells(planes, 2, 2);
    auto b = enumerate_cells(planes, 2, 2);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].signs == b[i].signs);
        CHECK(a[i].signs == signs_at(planes, a[i].witness));
        if (i > 0) CHECK(a[i - 1].signs < a[i].signs);
    }
}

TEST_CASE("completeness against random sampling") {
    Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        int q = 1 + static_cast<int>(rng.next_u64() % 3);
        int p = 1 + static_cast<int>(rng.next_u64() % 7);
        std::vector<Hyperplane> planes;
        for (int i = 0; i < p; ++i) {
            Eigen::VectorXd n(q);
            for (int j = 0; j < q; ++j) n[j] = rng.gaussian();
            planes.push_back({n, rng.gaussian()});
        }
        auto cells = enumerate_cells(planes, q, 0);
        std::set<std::vector<std::int8_t>> known;
        for (auto& c : cells) known.insert(c.signs);
        for (int s = 0; s < 2000; ++s) {
            Eigen::VectorXd z(q);
            for (int j = 0; j < q; ++j) z[j] = 4.0 * rng.gaussian();
            auto sv = signs_at(planes, z, 1e-7);
            bool strict = true;
            for (auto v : sv) strict = strict && v != 0;
            if (!strict) continue;  // sampled a boundary; skip
            CHECK(known.count(sv) == 1);
        }
        // Count bound for full-dimensional cells.
        long bound = 0, binom = 1;
        for (int i = 0; i <= q; ++i) {
            bound += binom;
            binom = binom * (p - i) / (i + 1);
        }
        CHECK(static_cast<long>(cells.size()) <= bound);
    }
}

TEST_CASE("flat recursion equals LP-free brute force on small instances") {
    Rng rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        int q = 2;
        int p = 2 + static_cast<int>(rng.next_u64() % 3);
        std::vector<Hyperplane> planes;
        for (int i = 0; i < p; ++i) {
            Eigen::VectorXd n(q);
            for (int j = 0; j < q; ++j) n[j] = snap_grid(rng.gaussian());
            planes.push_back({n, snap_grid(rng.gaussian())});
        }
        auto cells = enumerate_cells(planes, q, q);
        std::set<std::vector<std::int8_t>> known;
        for (auto& c : cells) known.insert(c.signs);
        // Dense sampling both in the plane and on every line/intersection.
        for (int s = 0; s < 4000; ++s) {
            Eigen::VectorXd z(q);
            for (int j = 0; j < q; ++j) z[j] = 5.0 * (rng.uniform() - 0.5);
            auto sv = signs_at(planes, z, 1e-7);
            bool strict = true;
            for (auto v : sv) strict = strict && v != 0;
            if (strict) CHECK(known.count(sv) == 1);
        }
        for (int i = 0; i < p; ++i) {
            // Points on plane i.
            const Hyperplane& h = planes[i];
            Eigen::Vector2d n = h.normal.normalized();
            Eigen::Vector2d t(-n[1], n[0]);
            Eigen::Vector2d base = n * (h.offset / h.normal.norm());
            for (int s = -50; s <= 50; ++s) {
                Eigen::VectorXd z = base + t * (0.11 * s);
                auto sv = signs_at(planes, z, 1e-7);
                if (sv[i] != 0) continue;
                int zeros = 0;
                for (auto v : sv) zeros += (v == 0);
                if (zeros > 1) continue;  // may sit near a vertex
                CHECK(known.count(sv) == 1);
            }
        }
    }
}

TEST_CASE("coincident planes are merged with sign back-map") {
    std::vector<Hyperplane> planes{line(1, 1, 0.5), line(-2, -2, -1), line(1, 0, 0)};
    auto cells = enumerate_cells(planes, 2, 0);
    for (auto& c : cells) CHECK(c.signs[0] == -c.signs[1]);
}

TEST_CASE("restrict_to_flat central pair") {
    std::vector<Hyperplane> planes{line(1, 0), line(0, 1)};
    FlatRestriction fr = restrict_to_flat(planes, 2, {0});
    CHECK(fr.basis.cols() == 1);
    CHECK(fr.plane_map[0] == -2);
    REQUIRE(fr.plane_map[1] >= 0);
    auto sub = enumerate_cells(fr.induced, 1, 1);
    CHECK(sub.size() == 3);
}

TEST_CASE("restrict_to_flat deduplicates coincident induced planes") {
    // Threshold planes y_i = l1 and y_i = l2 for i in {0,1} over (y0, y1, l1, l2);
    // restricting to l1 = l2 makes the pairs coincide.
    std::vector<Hyperplane> planes;
    int n = 2;
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(4);
        a[i] = 1;
        a[2] = -1;
        planes.push_back({a, 0});
        Eigen::VectorXd b = Eigen::VectorXd::Zero(4);
        b[i] = 1;
        b[3] = -1;
        planes.push_back({b, 0});
    }
    Eigen::VectorXd diff = Eigen::VectorXd::Zero(4);
    diff[2] = 1;
    diff[3] = -1;
    planes.push_back({diff, 0});
    FlatRestriction fr = restrict_to_flat(planes, 4, {static_cast<int>(planes.size()) - 1});
    CHECK(static_cast<int>(fr.induced.size()) == n);
    for (int i = 0; i < n; ++i) CHECK(fr.plane_map[2 * i] == fr.plane_map[2 * i + 1]);
}

TEST_CASE("restrict_to_flat rejects dependent active sets") {
    std::vector<Hyperplane> planes{line(1, 1, 0), line(2, 2, 1)};
    CHECK_THROWS_AS(restrict_to_flat(planes, 2, {0, 1}), DependentActiveSet);
}

TEST_CASE("input validation and budgets") {
    CHECK_THROWS_AS(enumerate_cells({{Eigen::Vector2d(0, 0), 1.0}}, 2, 0), InvalidInput);
    std::vector<Hyperplane> many(600, line(1, 0, 0));
    CHECK_THROWS_AS(enumerate_cells(many, 2, 0), BudgetExceeded);
    Budget tiny;
    tiny.max_cells = 2;
    std::vector<Hyperplane> planes{line(1, 0), line(0, 1)};
    CHECK_THROWS_AS(enumerate_cells(planes, 2, 0, {}, tiny), BudgetExceeded);
}
