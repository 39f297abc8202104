#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace hungerlab;
using namespace hltest;

namespace {

Errc code_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::invariant_violated;
}

}  // namespace

TEST(Rational, ParsesAndPrintsReducedForms) {
    EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
    EXPECT_EQ(to_string(parse_rational("3")), "3");
    EXPECT_EQ(to_string(parse_rational("0/7")), "0");
    EXPECT_EQ(to_string(parse_exact("-1.5")), "-3/2");
    EXPECT_EQ(to_string(parse_exact("-6/4")), "-3/2");
    EXPECT_EQ(to_string(parse_exact("0.05")), "1/20");
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("a/b"), Error);
    EXPECT_THROW(parse_rational(""), Error);
    EXPECT_THROW(parse_exact("1/2/3"), Error);
}

TEST(Rational, EqualValuesHashEqually) {
    EXPECT_EQ(RationalHash{}(parse_rational("2/4")), RationalHash{}(parse_rational("1/2")));
    EXPECT_EQ(lcd(std::vector<Rational>{q("11/18"), q("5/18"), q("1/9")}), 18);
}

TEST(ChainIo, ParsesRationalDocument) {
    const auto any = parse_chain(R"({"mode":"rational","P":[["1/2","1/2"],["1","0"]]})");
    const auto& c = std::get<MarkovChain<Rational>>(any);
    EXPECT_EQ(c.size(), 2u);
    EXPECT_EQ(c.label(0), "v1");
    EXPECT_EQ(c.label(1), "v2");
    EXPECT_EQ(c.prob(0, 1), q("1/2"));
}

TEST(ChainIo, ParsesFloatDocumentWithLabels) {
    const auto any = parse_chain(R"({"mode":"float","states":["a","b"],"P":[[0.25,0.75],[1.0,0.0]]})");
    const auto& c = std::get<MarkovChain<double>>(any);
    EXPECT_EQ(c.label(1), "b");
    EXPECT_DOUBLE_EQ(c.prob(0, 1), 0.75);
    EXPECT_EQ(c.state_index("b"), 1u);
    EXPECT_EQ(c.state_index("1"), 0u);
}

TEST(ChainIo, RejectsBadDocuments) {
    EXPECT_EQ(code_of([] { parse_chain(R"({"mode":"rational","P":[["1/2","1/3"],["1","0"]]})"); }), Errc::row_sum);
    EXPECT_EQ(code_of([] { parse_chain(R"({"mode":"rational","P":[["-1/2","3/2"],["1","0"]]})"); }), Errc::negative_entry);
    EXPECT_EQ(code_of([] { parse_chain(R"({"mode":"rational","P":[["0.5","0.5"],["1","0"]]})"); }), Errc::mode_mismatch);
    EXPECT_EQ(code_of([] { parse_chain(R"({"mode":"rational","P":[[0.5,0.5],["1","0"]]})"); }), Errc::mode_mismatch);
    EXPECT_EQ(code_of([] { parse_chain(R"({"mode":"rational","P":[["x","1"],["1","0"]]})"); }), Errc::malformed_token);
    EXPECT_EQ(code_of([] { parse_chain(R"({"mode":"float","P":[[0.5,0.4],[1,0]]})"); }), Errc::row_sum);
    EXPECT_EQ(code_of([] { parse_chain(R"({"mode":"float","P":[[-0.5,1.5],[1,0]]})"); }), Errc::negative_entry);
    EXPECT_EQ(code_of([] { parse_chain(R"({"mode":"decimal","P":[[1]]})"); }), Errc::malformed_token);
    EXPECT_EQ(code_of([] { parse_chain("{not json"); }), Errc::malformed_token);
    EXPECT_EQ(code_of([] { parse_chain(R"({"mode":"rational","P":[["1","0"]]})"); }), Errc::malformed_token);
    EXPECT_EQ(code_of([] { parse_chain(R"({"mode":"rational","states":["a","a"],"P":[["1","0"],["0","1"]]})"); }),
              Errc::invalid_argument);
}

TEST(ChainIo, FloatRowsWithinToleranceAreRenormalized) {
    const auto any = parse_chain(R"({"mode":"float","P":[[0.3333333333333333,0.3333333333333333,0.3333333333333334],[0,1,0],[0,0,1]]})");
    const auto& c = std::get<MarkovChain<double>>(any);
    double s = 0;
    for (double x : c.row(0)) s += x;
    EXPECT_NEAR(s, 1.0, 1e-15);
}

TEST(ChainIo, RoundTripsThroughJson) {
    const auto c = three_state_period18();
    const auto back = parse_chain(chain_to_json(c).dump());
    EXPECT_EQ(std::get<MarkovChain<Rational>>(back), c);
}

TEST(Chain, ClassifiesAbsorbingAndIrreducible) {
    EXPECT_TRUE(is_irreducible(doubly_reflecting()));
    EXPECT_TRUE(absorbing_states(doubly_reflecting()).empty());
    const auto c = five_state_absorbing();
    EXPECT_FALSE(is_irreducible(c));
    EXPECT_EQ(absorbing_states(c), (std::vector<std::size_t>{0, 4}));
}

TEST(Chain, StationaryOfWorkedChains) {
    EXPECT_EQ(stationary_distribution(doubly_reflecting()), vec({"1/3", "1/3", "1/3"}));
    EXPECT_EQ(stationary_distribution(three_state_period18()), vec({"11/18", "5/18", "1/9"}));
    EXPECT_EQ(lcd_of_stationary(three_state_period18()), 18);
    EXPECT_EQ(code_of([] { stationary_distribution(five_state_absorbing()); }), Errc::non_unique_stationary);
    EXPECT_EQ(code_of([] { lcd_of_stationary(to_double(doubly_reflecting())); }), Errc::float_mode_unsupported);
}

TEST(Chain, StationaryMatchesIndependentOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto c = random_irreducible(2 + trial % 5, 8, rng);
        const auto pi = stationary_distribution(c);
        EXPECT_EQ(pi, oracle_stationary(c));
        EXPECT_EQ(lcd_of_stationary(c), oracle_lcd(pi));
    }
}

TEST(Chain, FloatStationaryAgreesWithRational) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = random_irreducible(2 + trial % 4, 6, rng);
        const auto exact = stationary_distribution(c);
        const auto approx = stationary_distribution(to_double(c));
        for (std::size_t i = 0; i < exact.size(); ++i) EXPECT_NEAR(approx[i], exact[i].get_d(), 1e-12);
    }
}

TEST(Chain, HungerMatrixRowsSumToZero) {
    const auto h = hunger_matrix(three_state_period18()).h;
    for (std::size_t i = 0; i < 3; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < 3; ++j) s += h(i, j);
        EXPECT_EQ(s, 0);
    }
    EXPECT_EQ(h(0, 0), q("-1/5"));
}

TEST(Reroute, DropsUnreachableStateAndSendsAbsorbingToOrigin) {
    const auto rr = reroute(reroute_example(), 1);
    EXPECT_EQ(rr.kept, (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(rr.origin, 1u);
    EXPECT_EQ(rr.chain.labels(), (std::vector<std::string>{"v1", "v2", "v3", "v4"}));
    const auto expected = chain({{"0", "1", "0", "0"}, {"1/2", "0", "1/2", "0"}, {"0", "1/2", "0", "1/2"}, {"0", "1", "0", "0"}});
    EXPECT_EQ(rr.chain.transitions(), expected.transitions());
    EXPECT_TRUE(is_irreducible(rr.chain));
    EXPECT_EQ(stationary_distribution(rr.chain), oracle_stationary(rr.chain));
    EXPECT_EQ(stationary_distribution(rr.chain), vec({"2/9", "4/9", "2/9", "1/9"}));
}

TEST(Reroute, Errors) {
    EXPECT_EQ(code_of([] { reroute(doubly_reflecting(), 0); }), Errc::no_absorbing_states);
    EXPECT_EQ(code_of([] { reroute(five_state_absorbing(), 0); }), Errc::v_is_absorbing);
}

TEST(Reroute, AlwaysIrreducibleOnRandomAbsorbingChains) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + trial % 4;
        const auto c = random_absorbing(n, 1 + trial % 2, 6, rng);
        for (std::size_t v = 0; v < n; ++v) {
            if (c.is_absorbing(v)) continue;
            const auto rr = reroute(c, v);
            EXPECT_TRUE(oracle_irreducible(rr.chain));
        }
    }
}

TEST(SplitVertex, MovesInEdgesToAbsorbingCopy) {
    const auto s = split_vertex(doubly_reflecting(), 0);
    EXPECT_EQ(s.v0, 0u);
    EXPECT_EQ(s.v1, 3u);
    EXPECT_EQ(s.chain.label(0), "v1_0");
    EXPECT_EQ(s.chain.label(3), "v1_1");
    const auto expected = chain({{"0", "1/2", "0", "1/2"}, {"0", "0", "1/2", "1/2"}, {"0", "1/2", "1/2", "0"}, {"0", "0", "0", "1"}});
    EXPECT_EQ(s.chain.transitions(), expected.transitions());
}

TEST(MakeAbsorbing, ReplacesRow) {
    const auto c = make_absorbing(doubly_reflecting(), 2);
    EXPECT_TRUE(c.is_absorbing(2));
    EXPECT_EQ(c.prob(0, 1), q("1/2"));
}

TEST(Graph, TarjanAgreesWithReachabilityOracle) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 6;
        Grid rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(random_row(n, 3, rng));
        const auto c = from_grid(rows);
        EXPECT_EQ(is_irreducible(c), oracle_irreducible(c));
    }
}
