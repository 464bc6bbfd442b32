// Acceptance gate: eight end-to-end checks, one pass/fail line each.
// All tolerances and runtime budgets are pinned here.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cantor/admissibility.hpp"
#include "cantor/constructors.hpp"
#include "cantor/ifs.hpp"
#include "cantor/words.hpp"

using namespace cantor;

namespace {

int g_failures = 0;

struct Criterion {
    const char* label;
    double budget_seconds;  // <= 0: no budget

    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& why) {
        if (!cond && ok) {
            ok = false;
            detail = why;
        }
    }

    template <class Body>
    void run(Body body) {
        auto start = std::chrono::steady_clock::now();
        try {
            body(*this);
        } catch (const std::exception& e) {
            expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (budget_seconds > 0 && secs > budget_seconds)
            expect(false, "runtime " + std::to_string(secs) + "s over budget");
        std::printf("%s %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", label, secs,
                    ok ? "" : ": ", ok ? "" : detail.c_str());
        std::fflush(stdout);
        if (!ok) ++g_failures;
    }
};

TranslationVector tv(int cap, std::vector<std::vector<int>> entries) {
    std::vector<DigitString> list;
    for (auto& e : entries) list.emplace_back(std::move(e), cap);
    return TranslationVector(cap, std::move(list));
}

TranslationVector staircase(int cap, int m) {
    std::vector<std::vector<int>> entries{{}};
    for (int j = 1; j <= m; ++j) entries.push_back(std::vector<int>(j, 1));
    return tv(cap, std::move(entries));
}

std::set<std::string> vertex_texts(const WordGraph& g) {
    std::set<std::string> out;
    for (auto c : g.vertex_codes) out.insert(word_text(c, g.tau, g.alphabet));
    return out;
}

// true when every listed word is a graph vertex and consecutive words (cyclically)
// satisfy the one-letter shift-overlap rule
bool closed_walk(const WordGraph& g, const std::vector<std::vector<int>>& words) {
    std::uint64_t shift = universe_size(g.alphabet, g.tau) / g.alphabet;
    for (std::size_t i = 0; i < words.size(); ++i) {
        auto from = encode_word(words[i], g.alphabet);
        auto to = encode_word(words[(i + 1) % words.size()], g.alphabet);
        if (!g.vertices.contains(from)) return false;
        if (to / g.alphabet != from % shift) return false;
    }
    return true;
}

// admissible vectors feeding the numeric verification and gap checks
std::vector<TranslationVector> closed_form_vectors() {
    std::vector<TranslationVector> out;
    for (int cap = 1; cap <= 4; ++cap)
        for (int k = 1; k <= 4; ++k)
            for (int j = 1; 2 * j <= cap + 1; ++j) {
                std::vector<int> digits(k, 0);
                digits[k - 1] = j;
                out.push_back(tv(cap, {{}, digits}));
            }
    return out;
}

std::vector<TranslationVector> constructed_vectors() {
    std::vector<TranslationVector> out;
    for (int cap = 1; cap <= 3; ++cap)
        for (int m = 1; m <= 16; ++m) out.push_back(construct_admissible(m, cap));
    return out;
}

}  // namespace

int main() {
    Criterion{"criterion 1: four-translate reference instance", 1.0}.run([](Criterion& c) {
        auto t = tv(1, {{}, {1, 1}, {1, 0, 1}, {1, 0, 0, 1}});
        c.expect(t.tau() == 4, "digit depth != 4");
        auto om = omega(t, 4);
        auto omh = omega_hat(t, 4);
        c.expect(om.codes() == std::vector<std::uint64_t>{0}, "tail set != {0000}");
        c.expect(omh.codes() == std::vector<std::uint64_t>{15}, "conjugate tail set != {1111}");
        auto bs = block_sets(t, 4);
        auto texts = [&](const WordSet& s) {
            std::set<std::string> out;
            for (auto code : s.codes()) out.insert(word_text(code, 4, 2));
            return out;
        };
        c.expect(texts(bs.A) == std::set<std::string>{"0000", "0011", "0101", "1001"},
                 "add-side block set mismatch");
        c.expect(texts(bs.A_hat) == std::set<std::string>{"1111", "1100", "1010", "0110"},
                 "subtract-side block set mismatch");
        auto g = build_graph(t);
        c.expect(vertex_texts(g) == std::set<std::string>{"0001", "0010", "0100", "0111",
                                                          "1000", "1011", "1101", "1110"},
                 "vertex set mismatch");
        c.expect(find_cycle(g).cyclic, "no cycle found");
        c.expect(closed_walk(g, {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}),
                 "first 4-cycle missing");
        c.expect(closed_walk(g, {{0, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}}),
                 "second 4-cycle missing");
        c.expect(!conjugate(t).in_T(), "conjugate unexpectedly representable");
        c.expect(decide_self_similar(t).decision == Decision::NotSelfSimilar,
                 "verdict != NotSelfSimilar");
    });

    Criterion{"criterion 2: staircase sweep", 5.0}.run([](Criterion& c) {
        for (int cap = 1; cap <= 3; ++cap) {
            for (int m = 1; m <= 6; ++m) {
                auto t = staircase(cap, m);
                auto verdict = decide_self_similar(t);
                bool expect_ss = m <= 2;
                c.expect((verdict.decision == Decision::SelfSimilar) == expect_ss,
                         "wrong verdict at N=" + std::to_string(cap) + " m=" + std::to_string(m));
                if (m >= 3) {
                    // alternating 0N / N0 words form a 2-cycle in the graph
                    auto g = build_graph(t);
                    std::vector<int> a(m), b(m);
                    for (int k = 0; k < m; ++k) {
                        a[k] = k % 2 == 0 ? 0 : cap;
                        b[k] = k % 2 == 0 ? cap : 0;
                    }
                    c.expect(closed_walk(g, {a, b}),
                             "alternating cycle missing at N=" + std::to_string(cap) +
                                 " m=" + std::to_string(m));
                }
            }
        }
    });

    Criterion{"criterion 3: single-translate closed form, exhaustive", 60.0}.run([](Criterion& c) {
        for (int cap = 1; cap <= 4; ++cap) {
            for (const auto& d : all_digit_strings(cap, 4)) {
                TranslationVector t(cap, {DigitString({}, cap), d});
                bool decided =
                    decide_self_similar(t).decision == Decision::SelfSimilar;
                c.expect(decided == corollary_m1(d, cap),
                         "closed form disagrees at N=" + std::to_string(cap) + " t1=" + d.text());
                // independent restatement: one nonzero digit, value at most (N+1)/2
                int nonzero = 0, value = 0;
                for (int k = 1; k <= d.length(); ++k)
                    if (d.digit(k) != 0) {
                        ++nonzero;
                        value = d.digit(k);
                    }
                bool expected = nonzero == 1 && 2 * value <= cap + 1;
                c.expect(decided == expected,
                         "admissible set mismatch at N=" + std::to_string(cap) + " t1=" + d.text());
            }
        }
    });

    Criterion{"criterion 4: three engines agree, exhaustive", 600.0}.run([](Criterion& c) {
        std::uint64_t instances = 0;
        for (int cap = 1; cap <= 2; ++cap) {
            int tau_max = cap == 1 ? 4 : 3;
            auto pool = all_digit_strings(cap, tau_max);
            DigitString zero({}, cap);
            for (std::size_t i = 0; i < pool.size(); ++i) {
                TranslationVector t1(cap, {zero, pool[i]});
                check_admissible(t1, /*cross_check=*/true);  // throws on disagreement
                ++instances;
                for (std::size_t j = i + 1; j < pool.size(); ++j) {
                    TranslationVector t2(cap, {zero, pool[i], pool[j]});
                    check_admissible(t2, true);
                    ++instances;
                }
            }
        }
        c.expect(instances == (15 + 105) + (26 + 325), "unexpected instance count");
    });

    Criterion{"criterion 5: constructed families verify", 60.0}.run([](Criterion& c) {
        for (const auto& t : constructed_vectors()) {
            c.expect(check_admissible(t).admissible,
                     "construction not admissible at N=" + std::to_string(t.alphabet_cap()) +
                         " m=" + std::to_string(t.m()));
            auto ifs = extract_ifs(t);
            c.expect(verify_symbolic(t, ifs),
                     "system rejected at N=" + std::to_string(t.alphabet_cap()) +
                         " m=" + std::to_string(t.m()));
        }
    });

    Criterion{"criterion 6: scaling and conjugation invariance", 0.0}.run([](Criterion& c) {
        std::mt19937_64 rng(20260823);
        std::uniform_int_distribution<int> pick_cap(1, 3);
        std::uniform_int_distribution<int> pick_m(1, 3);
        for (int trial = 0; trial < 500; ++trial) {
            int cap = pick_cap(rng);
            int m = pick_m(rng);
            auto pool = all_digit_strings(cap, 4);
            std::set<std::size_t> chosen;
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            while (int(chosen.size()) < m) chosen.insert(pick(rng));
            std::vector<DigitString> entries{DigitString({}, cap)};
            for (auto idx : chosen) entries.push_back(pool[idx]);  // set order = pool order
            TranslationVector t(cap, std::move(entries));

            bool adm = check_admissible(t).admissible;
            for (int q : {-2, -1, 1, 2}) {
                auto scaled = scale(t, q);
                if (!scaled) continue;
                c.expect(check_admissible(*scaled).admissible == adm,
                         "scaling changed admissibility (trial " + std::to_string(trial) + ")");
            }
            auto conj = conjugate(t);
            if (conj.in_T()) {
                c.expect(decide_self_similar(*conj.vec).decision ==
                             decide_self_similar(t).decision,
                         "conjugation changed the verdict (trial " + std::to_string(trial) + ")");
            }
        }
    });

    Criterion{"criterion 7: numeric system verification", 300.0}.run([](Criterion& c) {
        auto vectors = closed_form_vectors();
        for (auto& t : constructed_vectors()) vectors.push_back(std::move(t));
        const int samples = 1000;
        const int depth = 12;
        const double float_tolerance = 1e-9;
        std::uint64_t seed = 424242;
        for (const auto& t : vectors) {
            Rational beta(1, 2 * t.alphabet_cap() + 2);
            auto ifs = extract_ifs(t);
            auto exact = verify_numeric(t, ifs, beta, samples, depth, seed);
            c.expect(exact.ok && exact.max_residual == 0,
                     "exact residual nonzero at N=" + std::to_string(t.alphabet_cap()) +
                         " m=" + std::to_string(t.m()) + ": " + exact.failure);
            auto fl = verify_numeric(t, ifs, beta, samples, depth, seed, true, float_tolerance);
            c.expect(fl.ok && fl.max_float_residual < float_tolerance,
                     "float residual over tolerance at N=" + std::to_string(t.alphabet_cap()) +
                         " m=" + std::to_string(t.m()) + ": " + fl.failure);
            ++seed;
            if (!c.ok) break;
        }
    });

    Criterion{"criterion 8: translate gaps exceed the unit interval", 0.0}.run([](Criterion& c) {
        auto vectors = closed_form_vectors();
        for (auto& t : constructed_vectors()) vectors.push_back(std::move(t));
        for (const auto& t : vectors) {
            Rational beta(1, 2 * t.alphabet_cap() + 2);
            for (int j = 0; j < t.m(); ++j) {
                Rational gap = t.entry(j + 1).value_at(beta) - t.entry(j).value_at(beta);
                c.expect(gap > 1, "gap <= 1 at N=" + std::to_string(t.alphabet_cap()) +
                                      " m=" + std::to_string(t.m()) +
                                      " j=" + std::to_string(j));
            }
        }
    });

    return g_failures == 0 ? 0 : 1;
}
