#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "seplab/errors.hpp"
#include "seplab/lts.hpp"

using namespace seplab;

namespace {

std::set<StateId> oracle_reach(const Lts& lts, StateId s, const Word& w) {
    std::set<StateId> out;
    for (const auto& [word, t] : oracle::enum_paths(lts, s, w.size()))
        if (word == w) out.insert(t);
    return out;
}

std::size_t count_edges_with_letter(const Lts& lts, const Letter& a) {
    std::size_t n = 0;
    for (StateId s = 0; s < lts.state_count(); ++s)
        for (const auto& [letter, t] : lts.out_edges(s))
            if (letter == a) ++n;
    return n;
}

} // namespace

TEST_CASE("reach_by_word on the b-chain") {
    Lts chain = make_chain_b(2);
    StateId s2 = chain.state("2");

    Word bb{"b", "b"};
    CHECK(reach_by_word(chain, s2, bb) == oracle_reach(chain, s2, bb));
    CHECK(reach_by_word(chain, s2, bb) == std::set<StateId>{chain.state("0")});

    CHECK(reach_by_word(chain, s2, {}) == std::set<StateId>{s2});

    Word bbb{"b", "b", "b"};
    CHECK(reach_by_word(chain, s2, bbb) == oracle_reach(chain, s2, bbb));
    CHECK(reach_by_word(chain, s2, bbb).empty());

    CHECK_THROWS_AS(reach_by_word(chain, s2, {"c"}), InputError);
    CHECK_THROWS_AS(reach_by_word(chain, 99, bb), InputError);
}

TEST_CASE("words_from enumerates exhaustively") {
    Lts chain = make_chain_b(2);

    auto from1 = words_from(chain, chain.state("1"), 1);
    std::set<std::pair<Word, StateId>> expect1{{Word{}, chain.state("1")},
                                               {Word{"b"}, chain.state("0")}};
    CHECK(from1 == expect1);

    auto from0 = words_from(chain, chain.state("0"), 5);
    CHECK(from0 == std::set<std::pair<Word, StateId>>{{Word{}, chain.state("0")}});

    auto from2 = words_from(chain, chain.state("2"), 2);
    std::set<std::pair<Word, StateId>> expect2{{Word{}, chain.state("2")},
                                               {Word{"b"}, chain.state("1")},
                                               {Word{"b", "b"}, chain.state("0")}};
    CHECK(from2 == expect2);
}

TEST_CASE("words_from agrees with reach_by_word and the path oracle") {
    Lts lts;
    lts.add_letter("a");
    lts.add_letter("b");
    StateId s0 = lts.add_state("s0");
    StateId s1 = lts.add_state("s1");
    StateId s2 = lts.add_state("s2");
    lts.add_transition(s0, "a", s1);
    lts.add_transition(s0, "a", s2);
    lts.add_transition(s1, "b", s0);
    lts.add_transition(s2, "b", s2);
    lts.add_transition(s2, "a", s0);

    for (StateId s = 0; s < lts.state_count(); ++s) {
        auto ours = words_from(lts, s, 4);
        auto raw = oracle::enum_paths(lts, s, 4);
        std::set<std::pair<Word, StateId>> reference(raw.begin(), raw.end());
        CHECK(ours == reference);
        for (const auto& [w, t] : ours) CHECK(reach_by_word(lts, s, w).count(t) == 1);
    }
}

TEST_CASE("reach_by_word satisfies the word composition law") {
    Lts lts;
    lts.add_letter("a");
    lts.add_letter("b");
    StateId s0 = lts.add_state("s0");
    StateId s1 = lts.add_state("s1");
    StateId s2 = lts.add_state("s2");
    lts.add_transition(s0, "a", s1);
    lts.add_transition(s1, "b", s2);
    lts.add_transition(s1, "a", s1);
    lts.add_transition(s2, "b", s0);

    std::vector<Word> words{{}, {"a"}, {"b"}, {"a", "b"}, {"a", "a", "b"}, {"b", "b"}};
    for (const Word& u : words) {
        for (const Word& v : words) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            for (StateId s = 0; s < lts.state_count(); ++s) {
                std::set<StateId> expect;
                for (StateId mid : reach_by_word(lts, s, u)) {
                    auto part = reach_by_word(lts, mid, v);
                    expect.insert(part.begin(), part.end());
                }
                CHECK(reach_by_word(lts, s, uv) == expect);
            }
        }
    }
}

TEST_CASE("make_chain_b") {
    SUBCASE("length zero") {
        Lts c = make_chain_b(0);
        CHECK(c.state_count() == 1);
        CHECK(c.transition_count() == 0);
        CHECK(c.has_prop(c.state("0"), "p"));
        CHECK(c.initial() == c.state("0"));
    }
    SUBCASE("length two") {
        Lts c = make_chain_b(2);
        CHECK(c.state_count() == 3);
        CHECK(c.transition_count() == 2);
        for (StateId s = 0; s < c.state_count(); ++s)
            CHECK(c.has_prop(s, "p") == (c.state_name(s) == "0"));
        CHECK(c.initial() == c.state("2"));
    }
    SUBCASE("single maximal path of length five") {
        Lts c = make_chain_b(5);
        auto paths = oracle::enum_paths(c, c.state("5"), 10);
        std::size_t maximal = 0;
        for (const auto& [w, t] : paths) {
            if (!c.out_edges(t).empty()) continue;
            ++maximal;
            CHECK(w == Word(5, "b"));
            CHECK(t == c.state("0"));
        }
        CHECK(maximal == 1);
    }
    SUBCASE("deterministic and acyclic") {
        Lts c = make_chain_b(6);
        for (StateId s = 0; s < c.state_count(); ++s) {
            std::size_t expected = c.state_name(s) == "0" ? 0 : 1;
            CHECK(c.successors(s, "b").size() == expected);
        }
        // No path returns to its origin.
        for (StateId s = 0; s < c.state_count(); ++s)
            for (const auto& [w, t] : oracle::enum_paths(c, s, 7))
                if (!w.empty()) CHECK(t != s);
    }
}

TEST_CASE("make_witness_diabox shape") {
    SUBCASE("state counts at (1,2,1)") {
        auto [t1, t2] = make_witness_diabox(1, 2, 1, false);
        // l = 3: two chains of four states plus the junction.
        CHECK(t1.state_count() == 9);
        CHECK(t2.state_count() == 15);
        CHECK(t1.initial() == t1.state("3_4"));
        CHECK(t2.initial() == t2.state("3_5"));
        CHECK(t1.has_prop(t1.state("0_1"), "p"));
        CHECK(t2.has_prop(t2.state("0_2"), "p"));
        CHECK(t2.has_prop(t2.state("0_3"), "p"));
    }
    SUBCASE("cross edge adds a junction copy to T1") {
        auto [t1, t2] = make_witness_diabox(1, 2, 1, true);
        CHECK(t1.state_count() == 20); // 9 + dn' + branches of 4 and 6
        CHECK(t1.find_state("dn'").has_value());
        CHECK(reach_by_word(t1, t1.state("0_4"), {"a"}).size() == 2);
        CHECK(t2.state_count() == 15);
    }
    SUBCASE("b-paths from u peak exactly at the p state") {
        for (auto [m, k, d] : {std::tuple<std::size_t, std::size_t, std::size_t>{1, 1, 1},
                               {1, 2, 1}, {2, 1, 2}}) {
            auto [t1, t2] = make_witness_diabox(m, k, d, false);
            const std::size_t l = (m + k) * d;
            StateId u = t1.state("u");
            std::size_t longest = 0;
            for (const auto& [w, t] : oracle::enum_paths(t1, u, 3 * l + 5)) {
                CHECK(std::all_of(w.begin(), w.end(), [](const Letter& a) { return a == "b"; }));
                longest = std::max(longest, w.size());
                CHECK(t1.has_prop(t, "p") == (w.size() == l + 1));
            }
            CHECK(longest == l + 1);
        }
    }
    SUBCASE("zero parameters are rejected") {
        CHECK_THROWS_AS(make_witness_diabox(0, 1, 1, false), InputError);
        CHECK_THROWS_AS(make_witness_diabox(1, 0, 1, false), InputError);
        CHECK_THROWS_AS(make_witness_diabox(1, 1, 0, false), InputError);
    }
}

TEST_CASE("make_witness_an_b_an shape") {
    SUBCASE("letter counts at (1,1,1)") {
        auto [t1, t2] = make_witness_an_b_an(1, 1, 1, false);
        CHECK(count_edges_with_letter(t1, "b") == 1);
        CHECK(count_edges_with_letter(t2, "b") == 2);
        CHECK(count_edges_with_letter(t1, "a") > 1);
    }
    SUBCASE("T1 has the a^n b a^n path to p") {
        auto [t1, t2] = make_witness_an_b_an(1, 2, 1, false);
        const std::size_t n = 3; // (m+k)*d
        Word w(n, "a");
        w.push_back("b");
        w.insert(w.end(), n, "a");
        bool found = false;
        for (StateId t : reach_by_word(t1, *t1.initial(), w))
            if (t1.has_prop(t, "p")) found = true;
        CHECK(found);
    }
    SUBCASE("T2 fails the boxed version for every n") {
        auto [t1, t2] = make_witness_an_b_an(1, 2, 1, false);
        oracle::Row sat1 = oracle::property_dia_an_box_b_dia_an(t1);
        oracle::Row sat2 = oracle::property_dia_an_box_b_dia_an(t2);
        CHECK(((sat1 >> *t1.initial()) & 1) == 1);
        CHECK(((sat2 >> *t2.initial()) & 1) == 0);
    }
}

TEST_CASE("word helpers") {
    CHECK(word_from_string("bb") == Word{"b", "b"});
    CHECK(word_from_string("ab c") == Word{"ab", "c"});
    CHECK(word_to_string(Word{"a", "b"}) == "ab");
    CHECK(word_to_string(Word{"ab", "c"}) == "ab c");
}
