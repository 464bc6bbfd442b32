#include <doctest.h>

#include <algorithm>
#include <set>

#include "cantor/admissibility.hpp"

using namespace cantor;

namespace {

TranslationVector tv(int cap, std::vector<std::vector<int>> entries) {
    std::vector<DigitString> list;
    for (auto& e : entries) list.emplace_back(std::move(e), cap);
    return TranslationVector(cap, std::move(list));
}

TranslationVector example2() { return tv(1, {{}, {1, 1}, {1, 0, 1}, {1, 0, 0, 1}}); }

TranslationVector example1(int cap, int m) {
    std::vector<std::vector<int>> entries{{}};
    for (int j = 1; j <= m; ++j) entries.push_back(std::vector<int>(j, 1));
    return tv(cap, std::move(entries));
}

std::set<std::string> vertex_texts(const WordGraph& g) {
    std::set<std::string> out;
    for (auto c : g.vertex_codes) out.insert(word_text(c, g.tau, g.alphabet));
    return out;
}

// Reference covering check: materialize the full length-ell universe and test
// every aligned length-tau factor against W. Memory-bound; small ell only.
bool covered_brute_force(const TranslationVector& t, int ell) {
    int tau = t.tau();
    auto bs = block_sets(t, tau);
    int alphabet = t.alphabet_cap() + 1;
    std::uint64_t tail = universe_size(alphabet, tau);
    for (std::uint64_t code = 0; code < universe_size(alphabet, ell); ++code) {
        bool hit = false;
        for (int off = 0; off + tau <= ell && !hit; ++off) {
            std::uint64_t shifted = code;
            for (int k = 0; k < ell - tau - off; ++k) shifted /= alphabet;
            hit = bs.W.contains(shifted % tail);
        }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("word graph of the reference four-translate vector") {
    auto g = build_graph(example2());
    CHECK(g.tau == 4);
    CHECK(vertex_texts(g) == std::set<std::string>{"0001", "0010", "0100", "0111",
                                                   "1000", "1011", "1101", "1110"});
    // 0001 -> 0010 and 0011 is blocked
    auto succ = g.successors(encode_word({0, 0, 0, 1}, 2));
    CHECK(succ == std::vector<std::uint64_t>{encode_word({0, 0, 1, 0}, 2)});
}

TEST_CASE("cycle detection finds the known loop") {
    auto g = build_graph(example2());
    auto cyc = find_cycle(g);
    REQUIRE(cyc.cyclic);
    REQUIRE(cyc.cycle.size() == 4);
    // the cycle is closed under the shift rule
    std::uint64_t shift = universe_size(g.alphabet, g.tau) / g.alphabet;
    for (std::size_t i = 0; i < cyc.cycle.size(); ++i) {
        auto from = cyc.cycle[i];
        auto to = cyc.cycle[(i + 1) % cyc.cycle.size()];
        CHECK(to / g.alphabet == from % shift);
        CHECK(g.vertices.contains(from));
    }
}

TEST_CASE("graphs with no vertices or no edges are acyclic") {
    // staircase m = 2: the block union fills the whole square
    auto g2 = build_graph(example1(1, 2));
    CHECK(g2.vertex_codes.empty());
    CHECK_FALSE(find_cycle(g2).cyclic);

    auto g1 = build_graph(example1(1, 1));
    CHECK_FALSE(find_cycle(g1).cyclic);
}

TEST_CASE("boolean matrix nilpotency") {
    BoolMatrix upper(3);  // strictly upper triangular, index nilpotent
    upper.set(0, 1);
    upper.set(0, 2);
    upper.set(1, 2);
    CHECK(is_nilpotent(upper));

    BoolMatrix loop(3);
    loop.set(0, 1);
    loop.set(1, 2);
    loop.set(2, 0);
    CHECK_FALSE(is_nilpotent(loop));

    BoolMatrix idm(2);
    idm.set(0, 0);
    idm.set(1, 1);
    CHECK_FALSE(is_nilpotent(idm));
    CHECK(is_nilpotent(BoolMatrix(4)));

    auto sq = loop * loop;
    CHECK(sq.get(0, 2));
    CHECK_FALSE(sq.get(0, 1));
}

TEST_CASE("covering matches the dense reference oracle") {
    std::vector<TranslationVector> cases = {
        example1(1, 1), example1(1, 2), example1(1, 3),
        tv(1, {{}, {0, 1}}), tv(2, {{}, {1}}), tv(2, {{}, {2}}),
        tv(2, {{}, {1}, {2, 1}}), tv(1, {{}, {1, 1}}),
    };
    for (const auto& t : cases) {
        for (int ell = t.tau(); ell <= t.tau() + 4; ++ell) {
            auto got = covering_holds(t, ell);
            CHECK(got.covered == covered_brute_force(t, ell));
            if (!got.covered) {
                // the witness really dodges every aligned factor
                REQUIRE(int(got.witness.size()) == ell);
                auto bs = block_sets(t, t.tau());
                for (int off = 0; off + t.tau() <= ell; ++off) {
                    std::vector<int> factor(got.witness.begin() + off,
                                            got.witness.begin() + off + t.tau());
                    CHECK_FALSE(bs.W.contains(encode_word(factor, t.alphabet_cap() + 1)));
                }
            }
        }
    }
}

TEST_CASE("covering fails at the nilpotency bound for the cyclic example") {
    auto t = example2();
    auto adm = check_admissible(t);
    REQUIRE_FALSE(adm.admissible);
    CHECK(adm.vertex_count == 8);
    auto cov = covering_holds(t, t.tau() + int(adm.vertex_count));
    CHECK_FALSE(cov.covered);
    CHECK(cov.witness.size() == 12);
}

TEST_CASE("covering is monotone in the stamping length") {
    for (auto t : {example1(1, 1), tv(2, {{}, {1}}), tv(1, {{}, {0, 1}})}) {
        bool seen = false;
        for (int ell = t.tau(); ell <= t.tau() + 5; ++ell) {
            bool now = covering_holds(t, ell).covered;
            if (seen) CHECK(now);
            seen = seen || now;
        }
        CHECK(seen);
    }
}

TEST_CASE("acyclicity, nilpotency and covering agree") {
    // cross_check throws if the three engines ever disagree
    for (auto t : {example2(), example1(1, 1), example1(1, 2), example1(1, 3),
                   example1(2, 4), tv(2, {{}, {1}, {2, 1}}), tv(1, {{}, {0, 1}}),
                   tv(3, {{}, {2}}), tv(3, {{}, {3}})}) {
        CHECK_NOTHROW(check_admissible(t, true));
    }
}

TEST_CASE("minimal covering length") {
    // W for (0, [1]) at N = 1 is the full one-letter alphabet
    CHECK(minimal_covering_length(example1(1, 1)) == 1);
    auto t = tv(2, {{}, {1}});
    int ell = minimal_covering_length(t);
    CHECK(covering_holds(t, ell).covered);
    if (ell > t.tau()) CHECK_FALSE(covering_holds(t, ell - 1).covered);
    CHECK_THROWS_AS(minimal_covering_length(example2()), std::invalid_argument);
}

TEST_CASE("decision for the reference examples") {
    auto bad = decide_self_similar(example2());
    CHECK(bad.decision == Decision::NotSelfSimilar);
    CHECK(bad.admissible_side.empty());
    CHECK_FALSE(bad.t_side.admissible);
    CHECK_FALSE(bad.conjugate_side.in_T);
    CHECK(bad.t_side.cycle.size() == 4);

    for (int m : {1, 2}) {
        auto v = decide_self_similar(example1(1, m));
        CHECK(v.decision == Decision::SelfSimilar);
        CHECK(v.covering_length >= example1(1, m).tau());
    }
    for (int m : {3, 4, 5}) {
        CHECK(decide_self_similar(example1(1, m)).decision == Decision::NotSelfSimilar);
    }
}

TEST_CASE("trivial vector is self-similar") {
    auto v = decide_self_similar(TranslationVector::trivial(2));
    CHECK(v.decision == Decision::SelfSimilar);
}

TEST_CASE("between regime only downgrades negatives") {
    auto neg = decide_self_similar(example2(), BetaRegime::Between);
    CHECK(neg.decision == Decision::SufficientOnly);
    auto pos = decide_self_similar(example1(1, 1), BetaRegime::Between);
    CHECK(pos.decision == Decision::SelfSimilar);
}

TEST_CASE("decision is symmetric under conjugation") {
    for (auto t : {example1(1, 3), example1(2, 2), tv(2, {{}, {1}, {2, 1}}),
                   tv(1, {{}, {0, 1}}), tv(3, {{}, {2}})}) {
        auto c = conjugate(t);
        if (!c.in_T()) continue;
        CHECK(decide_self_similar(t).decision == decide_self_similar(*c.vec).decision);
    }
}

TEST_CASE("dot output lists the vertices") {
    auto g = build_graph(example2());
    auto dot = graph_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("0001") != std::string::npos);
    CHECK(dot.find("1110") != std::string::npos);
}
