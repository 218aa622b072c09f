#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "simwaring/root_chain.hpp"

using simwaring::BigInt;
using simwaring::RootChain;
using simwaring::SymbolicRoot;

namespace {

std::vector<SymbolicRoot> roots_of_unity(int order) {
    std::vector<SymbolicRoot> roots;
    for (int k = 0; k < order; ++k) roots.push_back(SymbolicRoot::root_of_unity(0, order, k));
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// A random free chain: start >= c, gaps of 1 (at most once) or >= c+1.
std::vector<int> random_free_chain(std::mt19937& rng, int c) {
    std::uniform_int_distribution<int> start_dist(c, c + 3);
    std::uniform_int_distribution<int> len_dist(1, 4);
    std::uniform_int_distribution<int> gap_dist(c + 1, c + 4);
    int value = start_dist(rng);
    std::vector<int> chain{value};
    bool used_unit = false;
    const int len = len_dist(rng);
    for (int s = 1; s < len; ++s) {
        std::bernoulli_distribution unit(used_unit ? 0.0 : 0.5);
        if (unit(rng)) {
            value += 1;
            used_unit = true;
        } else {
            value += gap_dist(rng);
        }
        chain.push_back(value);
    }
    return chain;
}

} // namespace

TEST_CASE("symbolic roots canonicalize and compare exactly") {
    CHECK(SymbolicRoot::root_of_unity(0, 4, 2) == SymbolicRoot::root_of_unity(0, 2, 1));
    CHECK(SymbolicRoot::root_of_unity(0, 6, 2) == SymbolicRoot::root_of_unity(0, 3, 1));
    CHECK(SymbolicRoot::root_of_unity(0, 4, 0) == SymbolicRoot::one());
    CHECK(SymbolicRoot::root_of_unity(0, 4, 1) != SymbolicRoot::root_of_unity(1, 4, 1));
    CHECK(SymbolicRoot::zero() != SymbolicRoot::one());
}

TEST_CASE("materialized values are exact on quarter turns") {
    CHECK(SymbolicRoot::zero().value() == std::complex<double>(0.0, 0.0));
    CHECK(SymbolicRoot::root_of_unity(0, 4, 1).value() == std::complex<double>(0.0, 1.0));
    CHECK(SymbolicRoot::root_of_unity(1, 2, 1).value() == std::complex<double>(-2.0, 0.0));
    CHECK(SymbolicRoot::root_of_unity(3, 1, 0).value() == std::complex<double>(8.0, 0.0));
}

TEST_CASE("chain base case: roots of unity") {
    const auto chain = simwaring::build_root_chain({3}, 1);
    CHECK(chain.set_for(3) == roots_of_unity(4));
}

TEST_CASE("unit step adds the zero root") {
    const auto chain = simwaring::build_root_chain({3, 4}, 1);
    auto expected = roots_of_unity(4);
    expected.push_back(SymbolicRoot::zero());
    std::sort(expected.begin(), expected.end());
    CHECK(chain.set_for(4) == expected);
    CHECK(chain.set_for(3) == roots_of_unity(4));
}

TEST_CASE("scaled step adds radius-2 roots") {
    const auto chain = simwaring::build_root_chain({2, 4}, 1);
    auto expected = roots_of_unity(3);
    expected.push_back(SymbolicRoot::root_of_unity(1, 2, 0)); // 2
    expected.push_back(SymbolicRoot::root_of_unity(1, 2, 1)); // -2
    std::sort(expected.begin(), expected.end());
    CHECK(chain.set_for(4) == expected);
}

TEST_CASE("free-condition violations are rejected") {
    CHECK_THROWS_AS(simwaring::build_root_chain({2, 4}, 3), simwaring::hypothesis_error);
    CHECK_THROWS_AS(simwaring::build_root_chain({1, 2, 3}, 1), simwaring::hypothesis_error);
    CHECK_THROWS_AS(simwaring::build_root_chain({0, 1}, 1), simwaring::hypothesis_error);
}

TEST_CASE("absent variables pin the coordinate to zero") {
    const auto chain = simwaring::build_root_chain({0}, 2);
    CHECK(chain.set_for(0) == std::vector<SymbolicRoot>{SymbolicRoot::zero()});
}

TEST_CASE("chains are nested with exactly e+1 distinct roots") {
    std::mt19937 rng(7301);
    std::uniform_int_distribution<int> c_dist(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const int c = c_dist(rng);
        const auto values = random_free_chain(rng, c);
        const auto chain = simwaring::build_root_chain(values, c);
        std::set<SymbolicRoot> previous;
        for (const int e : values) {
            const auto& level = chain.set_for(e);
            const std::set<SymbolicRoot> as_set(level.begin(), level.end());
            CHECK(as_set.size() == level.size()); // exact distinctness
            CHECK(static_cast<int>(level.size()) == e + 1);
            CHECK(std::includes(as_set.begin(), as_set.end(), previous.begin(), previous.end()));
            previous = as_set;
        }
    }
}

TEST_CASE("chain binary forms lie in the expected apolar pieces") {
    // (X1^4 - X0^4) * X1 for the chain {3,4}: X0-degrees 0 and 4 only.
    const auto chain = simwaring::build_root_chain({3, 4}, 1);
    const auto coeffs = chain.binary_form_x0_coefficients(4);
    REQUIRE(coeffs.size() == 6);
    CHECK(coeffs[0] == 1);
    CHECK(coeffs[4] == -1);
    for (const std::size_t index : {1u, 2u, 3u, 5u}) CHECK(coeffs[index] == 0);

    // Membership in (X0^(c+1), Xi^(e+1)): every X0-degree between 1 and c has
    // a vanishing coefficient, and the pure Xi term survives.
    std::mt19937 rng(7302);
    std::uniform_int_distribution<int> c_dist(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const int c = c_dist(rng);
        const auto values = random_free_chain(rng, c);
        const auto built = simwaring::build_root_chain(values, c);
        for (const int e : values) {
            const auto form = built.binary_form_x0_coefficients(e);
            REQUIRE(static_cast<int>(form.size()) == e + 2);
            CHECK(form[0] != 0);
            for (int a = 1; a <= c; ++a) CHECK(form[static_cast<std::size_t>(a)] == 0);
        }
    }
}
