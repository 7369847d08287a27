#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "instanton/partitions.hpp"

#include <random>
#include <set>

using namespace inst;

namespace {

// Partition count by Euler's pentagonal recurrence, independent of the generator.
long pentagonal_count(int n)
{
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long s = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            long sign = (k % 2) ? 1 : -1;
            s += sign * p[m - g1];
            if (g2 <= m) s += sign * p[m - g2];
        }
        p[m] = s;
    }
    return p[n];
}

YoungDiagram random_diagram(std::mt19937& g)
{
    std::uniform_int_distribution<int> len(0, 5), part(1, 6);
    std::vector<int> parts;
    int n = len(g);
    for (int k = 0; k < n; ++k) parts.push_back(part(g));
    std::sort(parts.rbegin(), parts.rend());
    return YoungDiagram(parts);
}

}  // namespace

TEST_CASE("arm and leg")
{
    YoungDiagram y({2, 1});
    CHECK(y.arm(1, 1) == 1);
    CHECK(y.leg(1, 1) == 1);
    CHECK(YoungDiagram::coarm(1, 1) == 0);
    CHECK(YoungDiagram::coleg(1, 1) == 0);
    YoungDiagram empty;
    CHECK(empty.leg(1, 1) == -1);
    CHECK(empty.arm(2, 3) == -3);
    CHECK(y.arm(2, 2) == -1);
}

TEST_CASE("diagram text form")
{
    YoungDiagram y({3, 1, 1});
    CHECK(y.str() == "[3,1,1]");
    CHECK(YoungDiagram::parse("[3, 1,1]") == y);
    CHECK(YoungDiagram::parse("[]").empty());
    CHECK_THROWS(YoungDiagram::parse("[1,2]"));
}

TEST_CASE("pairs of total")
{
    auto p0 = pairs_of_total(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].first.empty());
    auto p1 = pairs_of_total(1);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0].first.size() == 0);
    CHECK(p1[1].first.size() == 1);
    CHECK(pairs_of_total(2).size() == 5);
    for (int n = 0; n <= 10; ++n) {
        long expected = 0;
        for (int k = 0; k <= n; ++k) expected += pentagonal_count(k) * pentagonal_count(n - k);
        auto pairs = pairs_of_total(n);
        CHECK(long(pairs.size()) == expected);
        std::set<std::string> seen;
        for (size_t k = 0; k < pairs.size(); ++k) {
            CHECK(pairs[k].total() == n);
            seen.insert(pairs[k].str());
            if (k > 0) CHECK(pairs[k - 1] < pairs[k]);
        }
        CHECK(seen.size() == pairs.size());
    }
}

TEST_CASE("tuples of total")
{
    CHECK(tuples_of_total(3, 0).size() == 1);
    CHECK(tuples_of_total(3, 1).size() == 6);
    CHECK(tuples_of_total(2, 2).size() == 14);
    // Torus fixed points on the Hilbert scheme of two points on a three-point surface.
    CHECK(tuples_of_total(3, 2).size() == 27);
}

TEST_CASE("transpose is an involution and swaps arm and leg")
{
    std::mt19937 g(99);
    for (int it = 0; it < 200; ++it) {
        YoungDiagram y = random_diagram(g);
        YoungDiagram yt = y.transpose();
        CHECK(yt.transpose() == y);
        CHECK(yt.size() == y.size());
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j) CHECK(y.arm(i, j) == yt.leg(j, i));
    }
}
