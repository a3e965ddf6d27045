#include <doctest.h>

#include <cmath>
#include <vector>

#include "anyd/analysis.hpp"
#include "anyd/costs.hpp"
#include "anyd/errors.hpp"
#include "anyd/oracle.hpp"
#include "anyd/solver.hpp"
#include "helpers.hpp"

using namespace anyd;
using namespace anyd::testing;

TEST_CASE("extract_path on the proof lattice") {
    Lattice lat = proof_lattice();
    SolveResult res = solve(lat, {0, 0});
    Path p = extract_path(res, {0, 0}, {1, 1}, lat);
    REQUIRE(p.nodes.size() == 3);
    CHECK(p.nodes[0] == NodeCoord{0, 0});
    CHECK(p.nodes[1] == NodeCoord{0, 1});
    CHECK(p.nodes[2] == NodeCoord{1, 1});
    CHECK(p.cost == 2.0);
    CHECK(p.turns == 1);

    Path self = extract_path(res, {0, 0}, {0, 0}, lat);
    CHECK(self.nodes.size() == 1);
    CHECK(self.cost == 0.0);
    CHECK(self.turns == 0);
}

TEST_CASE("extract_path failure modes") {
    Lattice lat = proof_lattice();
    SolverState s = init_state(lat, {0, 0});
    // nothing has run: only the source is reached
    CHECK_THROWS_AS(extract_path(s.bed, s.pred, {0, 0}, {1, 1}, lat), UnreachableError);

    SolveResult res = solve(lat, {0, 0});
    SUBCASE("pred cycle") {
        res.pred.at(1, 1) = linear_index({1, 0}, lat.dims());
        res.pred.at(1, 0) = linear_index({1, 1}, lat.dims());
        CHECK_THROWS_AS(extract_path(res, {0, 0}, {1, 1}, lat), CorruptionError);
    }
    SUBCASE("broken chain") {
        res.pred.at(0, 1) = -1;
        CHECK_THROWS_AS(extract_path(res, {0, 0}, {0, 1}, lat), CorruptionError);
    }
    SUBCASE("non-adjacent link") {
        res.pred.at(1, 1) = linear_index({0, 0}, lat.dims());
        CHECK_THROWS_AS(extract_path(res, {0, 0}, {1, 1}, lat), CorruptionError);
    }
}

TEST_CASE("count_turns") {
    std::vector<NodeCoord> zigzag{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}};
    CHECK(count_turns(zigzag) == 2);
    std::vector<NodeCoord> straight{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    CHECK(count_turns(straight) == 0);
    std::vector<NodeCoord> single{{2, 2}};
    CHECK(count_turns(single) == 0);
}

TEST_CASE("error_vs_oracle") {
    ExactResult exact;
    exact.dist = mat(1, 3, {0, 2, 2});
    exact.pred = Matrix<int64_t>(1, 3, 0);

    SUBCASE("simple difference") {
        ErrorReport rep = error_vs_oracle(mat(1, 3, {0, 2, 3}), exact);
        CHECK(rep.l1 == 1.0);
        CHECK(rep.linf == 1.0);
        CHECK(rep.mismatched == 1);
    }
    SUBCASE("identical fields") {
        ErrorReport rep = error_vs_oracle(mat(1, 3, {0, 2, 2}), exact);
        CHECK(rep.l1 == 0.0);
        CHECK(rep.linf == 0.0);
        CHECK(rep.mismatched == 0);
    }
    SUBCASE("unreached nodes contribute their exact distance") {
        ErrorReport rep = error_vs_oracle(mat(1, 3, {0, kInf, kInf}), exact);
        CHECK(rep.l1 == 4.0);
        CHECK(rep.linf == 2.0);
        CHECK(rep.mismatched == 2);
    }
    SUBCASE("shape mismatch") {
        CHECK_THROWS_AS(error_vs_oracle(mat(3, 1, {0, 0, 0}), exact), DimensionError);
    }
}

TEST_CASE("convergence_trace on the proof lattice") {
    Lattice lat = proof_lattice();
    std::vector<TraceEntry> trace = convergence_trace(lat, {0, 0});
    REQUIRE(trace.size() == 3);
    CHECK(trace[0].error.l1 == 1.0); // only D is off by one at iteration 1
    CHECK(trace[0].error.mismatched == 1);
    CHECK(trace[1].error.l1 == 0.0);
    CHECK(trace[2].error.l1 == 0.0);
    CHECK(trace.back().error.mismatched == 0);
    CHECK(trace.back().report.updates_total() == 0);
}

TEST_CASE("convergence_trace on unit grid and random lattices") {
    Lattice unit = make_lattice(GridDims{8, 8}, Matrix<double>(7, 8, 1.0),
                                Matrix<double>(8, 7, 1.0));
    std::vector<TraceEntry> trace = convergence_trace(unit, {0, 0});
    CHECK(trace.size() == 2);
    CHECK(trace.back().error.l1 == 0.0);

    for (uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        Lattice lat = random_lattice(GridDims{20, 20}, RngSpec{seed});
        std::vector<TraceEntry> t = convergence_trace(lat, {seed % 20 == 0 ? 0 : 7, 3});
        REQUIRE(!t.empty());
        for (size_t k = 1; k < t.size(); ++k) {
            CHECK(t[k].error.l1 <= t[k - 1].error.l1 + 1e-12);
            CHECK(t[k].error.linf <= t[k - 1].error.linf + 1e-12);
        }
        CHECK(t.back().error.mismatched == 0);
        CHECK(t.back().error.l1 == 0.0);
    }
}

TEST_CASE("snapshot callback sees every iteration") {
    Lattice lat = random_lattice(GridDims{10, 10}, RngSpec{5});
    int64_t snaps = 0;
    std::vector<TraceEntry> trace = convergence_trace(
        lat, {0, 0}, {}, [&](const IterationReport& r, const Matrix<double>& bed) {
            ++snaps;
            CHECK(r.iteration == snaps);
            CHECK(bed.rows() == 10);
        });
    CHECK(snaps == static_cast<int64_t>(trace.size()));
}

TEST_CASE("converged path costs agree with the oracle") {
    Lattice lat = random_lattice(GridDims{12, 15}, RngSpec{41});
    const NodeCoord src{3, 12};
    SolveResult res = solve(lat, src);
    ExactResult exact = dijkstra_reference(lat, src);
    for (int64_t i = 0; i < 12; i += 3) {
        for (int64_t j = 0; j < 15; j += 4) {
            Path p = extract_path(res, src, {i, j}, lat);
            CHECK(p.cost == doctest::Approx(exact.dist.at(i, j)).epsilon(1e-9));
            CHECK(std::abs(p.cost - res.bed.at(i, j)) <=
                  1e-12 * static_cast<double>(p.nodes.size()));
            // oracle pred trace realizes the same cost
            Path op = extract_path(exact, src, {i, j}, lat);
            CHECK(op.cost == doctest::Approx(p.cost).epsilon(1e-9));
        }
    }
}

TEST_CASE("turn bound: nodes are exact once iteration exceeds their min turns") {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        const GridDims dims{static_cast<int64_t>(3 + seed % 10),
                            static_cast<int64_t>(12 - seed % 9)};
        Lattice lat = random_lattice(dims, RngSpec{seed * 13});
        const NodeCoord src{static_cast<int64_t>(seed) % dims.height,
                            static_cast<int64_t>(seed / 2) % dims.width};
        TurnAnnotatedResult turns = min_turn_oracle(lat, src);
        ExactResult exact = dijkstra_reference(lat, src);

        std::vector<Matrix<double>> fields;
        SolveOptions opts;
        opts.on_iteration = [&](const IterationReport&, const Matrix<double>& bed) {
            fields.push_back(bed);
            return true;
        };
        SolveResult res = solve(lat, src, opts);
        REQUIRE(res.converged);

        for (int64_t i = 0; i < dims.height; ++i) {
            for (int64_t j = 0; j < dims.width; ++j) {
                const int64_t m = turns.min_turns.at(i, j);
                const auto k = static_cast<size_t>(
                    std::min<int64_t>(m + 1, static_cast<int64_t>(fields.size())));
                const double approx = fields[k - 1].at(i, j);
                const double e = exact.dist.at(i, j);
                CHECK(std::abs(approx - e) <= 1e-9 * (1.0 + std::abs(e)));
            }
        }
    }
}

TEST_CASE("distance symmetry between source and target") {
    Lattice lat = random_lattice(GridDims{11, 13}, RngSpec{71});
    const NodeCoord a{2, 3}, b{9, 11};
    SolveResult from_a = solve(lat, a);
    SolveResult from_b = solve(lat, b);
    const double ab = from_a.bed.at(b.row, b.col);
    const double ba = from_b.bed.at(a.row, a.col);
    CHECK(ab == doctest::Approx(ba).epsilon(1e-9));
}
