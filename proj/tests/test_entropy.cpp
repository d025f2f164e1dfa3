#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "mstme/entropy.hpp"
#include "mstme/rng.hpp"

using namespace mstme;

namespace {

DegreeHistogram histogram_of(std::vector<int> degrees) {
    return DegreeHistogram::from_degrees(degrees);
}

// Direct evaluation, independent of the histogram bookkeeping.
double entropy_by_definition(const std::vector<int>& degrees) {
    double h = 0.0;
    std::vector<int> distinct = degrees;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int d : distinct) {
        const double p = static_cast<double>(std::count(degrees.begin(), degrees.end(), d)) /
                         static_cast<double>(degrees.size());
        h -= p * std::log2(p);
    }
    return h;
}

}  // namespace

TEST_CASE("entropy golden values for five-vertex trees", "[entropy]") {
    // Star: one hub of degree 4 and four leaves.
    CHECK(shannon_entropy(histogram_of({1, 1, 1, 1, 4})) == Catch::Approx(0.7219280948873623).epsilon(1e-12));
    // The higher-entropy tree: degrees 1,1,1,2,3.
    CHECK(shannon_entropy(histogram_of({1, 1, 1, 2, 3})) == Catch::Approx(1.3709505944546687).epsilon(1e-12));
    // Path: degrees 1,1,2,2,2, evaluated by hand.
    CHECK(shannon_entropy(histogram_of({1, 1, 2, 2, 2})) == Catch::Approx(0.9709505944546686).epsilon(1e-12));
}

TEST_CASE("regular degree distributions have zero entropy", "[entropy]") {
    CHECK(shannon_entropy(histogram_of({2, 2, 2, 2, 2})) == 0.0);
    CHECK(shannon_entropy(histogram_of({3, 3})) == 0.0);
    CHECK(shannon_entropy(DegreeHistogram(6)) == 0.0);  // all isolated
}

TEST_CASE("entropy ignores vertex labels and stays within log2(n)", "[entropy]") {
    DeterministicRng rng(21);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 30);
        std::vector<int> degrees(n);
        for (int& d : degrees) d = static_cast<int>(rng.next_u64() % 6);
        const double h = shannon_entropy(histogram_of(degrees));
        CHECK(h == Catch::Approx(entropy_by_definition(degrees)).margin(1e-12));
        CHECK(h >= 0.0);
        CHECK(h <= std::log2(static_cast<double>(n)) + 1e-12);

        std::vector<int> shuffled = degrees;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.next_u64() % i]);
        CHECK(shannon_entropy(histogram_of(shuffled)) == h);
    }
}

TEST_CASE("histogram bookkeeping stays consistent under moves", "[entropy]") {
    DegreeHistogram h(5);
    REQUIRE(h.counts().at(0) == 5);

    h.move_vertex(0, 1);
    h.move_vertex(0, 1);
    CHECK(h.counts().at(0) == 3);
    CHECK(h.counts().at(1) == 2);

    h.move_vertex(1, 2);
    CHECK(h.counts().at(1) == 1);
    CHECK(h.counts().at(2) == 1);

    int total = 0;
    for (const auto& [d, c] : h.counts()) {
        CHECK(c > 0);
        total += c;
    }
    CHECK(total == h.n_vertices());

    CHECK_THROWS_AS(h.move_vertex(7, 8), std::logic_error);
}

TEST_CASE("isolated vertices can be excluded from the distribution", "[entropy]") {
    // Degrees 0,0,1,1: included -> two buckets of 2/4 each; excluded -> one bucket.
    DegreeHistogram h = histogram_of({0, 0, 1, 1});
    CHECK(h.entropy_bits(true) == Catch::Approx(1.0));
    CHECK(h.entropy_bits(false) == 0.0);
    CHECK(DegreeHistogram(4).entropy_bits(false) == 0.0);
}

TEST_CASE("objective combines weight and entropy linearly", "[entropy]") {
    CHECK(objective_cost(4.0, 0.7219280948873623, 0.0) == 4.0);
    CHECK(objective_cost(4.41, 1.3709505944546687, 1.0) == Catch::Approx(3.04).margin(0.01));
    CHECK(objective_cost(17.5, 123.0, 0.0) == 17.5);
    CHECK(objective_cost(2.0, 1.5, 2.0) == Catch::Approx(-1.0));
    CHECK_THROWS_AS(objective_cost(1.0, 1.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(objective_cost(1.0, 1.0, std::nan("")), std::invalid_argument);
}
