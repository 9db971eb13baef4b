#include "nullwidth/lp.hpp"

#include "doctest.h"

using namespace nw;

TEST_CASE("simplex solves small knowns exactly") {
    {
        // min -x - 2y, x + y <= 3, y <= 2, x,y >= 0 -> x=1, y=2, obj -5
        LpProblem p;
        int x = p.add_var(true), y = p.add_var(true);
        p.add_row({{x, Rat(1)}, {y, Rat(1)}}, 'L', Rat(3));
        p.add_row({{y, Rat(1)}}, 'L', Rat(2));
        p.set_cost(x, Rat(-1));
        p.set_cost(y, Rat(-2));
        auto s = p.solve();
        REQUIRE(s.status == LpSolution::Status::Optimal);
        CHECK(s.objective == Rat(-5));
        CHECK(s.x[0] == Rat(1));
        CHECK(s.x[1] == Rat(2));
    }
    {
        // equality row and a free variable: min s with -s <= x - 3 <= s
        LpProblem p;
        int x = p.add_var(false), s = p.add_var(true);
        p.add_row({{x, Rat(1)}, {s, Rat(-1)}}, 'L', Rat(3));
        p.add_row({{x, Rat(-1)}, {s, Rat(-1)}}, 'L', Rat(-3));
        p.set_cost(s, Rat(1));
        auto sol = p.solve();
        REQUIRE(sol.status == LpSolution::Status::Optimal);
        CHECK(sol.objective == Rat(0));
        CHECK(sol.x[0] == Rat(3));
    }
    {
        // infeasible: x >= 1 and x <= 0
        LpProblem p;
        int x = p.add_var(true);
        p.add_row({{x, Rat(-1)}}, 'L', Rat(-1));
        p.add_row({{x, Rat(1)}}, 'L', Rat(0));
        auto sol = p.solve();
        CHECK(sol.status == LpSolution::Status::Infeasible);
    }
    {
        // unbounded: min x with x free and only an upper bound
        LpProblem p;
        int x = p.add_var(false);
        p.add_row({{x, Rat(1)}}, 'L', Rat(100));
        p.set_cost(x, Rat(1));
        CHECK(p.solve().status == LpSolution::Status::Unbounded);
    }
}

TEST_CASE("simplex terminates on Beale's cycling example and is deterministic") {
    // Beale's example cycles under naive largest-coefficient pivoting with
    // textbook tie-breaking; the stall switch to Bland's rule must end it.
    auto build = [] {
        LpProblem p;
        int x1 = p.add_var(true), x2 = p.add_var(true), x3 = p.add_var(true),
            x4 = p.add_var(true);
        p.add_row({{x1, Rat(1, 4)}, {x2, Rat(-60)}, {x3, Rat(-1, 25)}, {x4, Rat(9)}}, 'L', Rat(0));
        p.add_row({{x1, Rat(1, 2)}, {x2, Rat(-90)}, {x3, Rat(-1, 50)}, {x4, Rat(3)}}, 'L', Rat(0));
        p.add_row({{x3, Rat(1)}}, 'L', Rat(1));
        p.set_cost(x1, Rat(-3, 4));
        p.set_cost(x2, Rat(150));
        p.set_cost(x3, Rat(-1, 50));
        p.set_cost(x4, Rat(6));
        return p;
    };
    auto s1 = build().solve(PivotRule::DantzigThenBland);
    REQUIRE(s1.status == LpSolution::Status::Optimal);
    CHECK(s1.objective == Rat(-1, 20));

    auto s2 = build().solve(PivotRule::BlandOnly);
    REQUIRE(s2.status == LpSolution::Status::Optimal);
    CHECK(s2.objective == s1.objective);

    // identical inputs give identical traces
    auto s3 = build().solve(PivotRule::DantzigThenBland);
    CHECK(s3.trace.phase1_pivots == s1.trace.phase1_pivots);
    CHECK(s3.trace.phase2_pivots == s1.trace.phase2_pivots);
    for (std::size_t i = 0; i < s1.x.size(); ++i) CHECK(s3.x[i] == s1.x[i]);
}
