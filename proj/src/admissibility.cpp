#include "cantor/admissibility.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cantor {

std::vector<std::uint64_t> WordGraph::successors(std::uint64_t code) const {
    std::vector<std::uint64_t> out;
    if (tau == 0) return out;
    std::uint64_t shift_universe = vertices.universe() / alphabet;
    std::uint64_t base = (code % shift_universe) * alphabet;
    for (int letter = 0; letter < alphabet; ++letter)
        if (vertices.contains(base + letter)) out.push_back(base + letter);
    return out;
}

WordGraph build_graph(const TranslationVector& t) {
    if (t.m() < 1) throw std::invalid_argument("trivial vector has no word graph");
    WordGraph g;
    g.tau = t.tau();
    g.alphabet = t.alphabet_cap() + 1;
    g.vertices = block_sets(t, t.tau()).W.complement();
    g.vertex_codes = g.vertices.codes();
    return g;
}

CycleResult find_cycle(const WordGraph& g) {
    // Three-color iterative DFS, vertices and children in ascending code
    // order, so the reported cycle is deterministic.
    enum Color : unsigned char { White, Gray, Black };
    std::unordered_map<std::uint64_t, Color> color;
    color.reserve(g.vertex_codes.size());
    for (auto code : g.vertex_codes) color[code] = White;

    struct Frame {
        std::uint64_t code;
        std::vector<std::uint64_t> succ;
        std::size_t next = 0;
    };

    for (auto root : g.vertex_codes) {
        if (color[root] != White) continue;
        std::vector<Frame> stack;
        stack.push_back({root, g.successors(root)});
        color[root] = Gray;
        while (!stack.empty()) {
            Frame& frame = stack.back();
            if (frame.next == frame.succ.size()) {
                color[frame.code] = Black;
                stack.pop_back();
                continue;
            }
            std::uint64_t next = frame.succ[frame.next++];
            if (color[next] == Gray) {
                CycleResult result;
                result.cyclic = true;
                std::size_t start = 0;
                while (stack[start].code != next) ++start;
                for (std::size_t i = start; i < stack.size(); ++i)
                    result.cycle.push_back(stack[i].code);
                return result;
            }
            if (color[next] == White) {
                color[next] = Gray;
                stack.push_back({next, g.successors(next)});
            }
        }
    }
    return {};
}

BoolMatrix::BoolMatrix(std::size_t n)
    : n_(n), words_per_row_((n + 63) / 64),
      rows_(n, std::vector<std::uint64_t>(words_per_row_, 0)) {}

bool BoolMatrix::is_zero() const {
    for (const auto& row : rows_)
        for (std::uint64_t w : row)
            if (w) return false;
    return true;
}

bool BoolMatrix::operator==(const BoolMatrix& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
}

BoolMatrix BoolMatrix::operator*(const BoolMatrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("matrix size mismatch");
    BoolMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            if (!get(i, k)) continue;
            for (std::size_t w = 0; w < words_per_row_; ++w)
                out.rows_[i][w] |= other.rows_[k][w];
        }
    }
    return out;
}

BoolMatrix adjacency_matrix(const WordGraph& g) {
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(g.vertex_codes.size());
    for (std::size_t i = 0; i < g.vertex_codes.size(); ++i) index[g.vertex_codes[i]] = i;
    BoolMatrix m(g.vertex_codes.size());
    for (std::size_t i = 0; i < g.vertex_codes.size(); ++i)
        for (auto succ : g.successors(g.vertex_codes[i])) m.set(i, index.at(succ));
    return m;
}

bool is_nilpotent(const BoolMatrix& m) {
    if (m.size() == 0 || m.is_zero()) return true;
    // Repeated boolean squaring: M^(2^i). Zero means nilpotent; a nonzero
    // fixpoint of squaring, or a nonzero power >= #V, means not.
    BoolMatrix power = m;
    std::size_t exponent = 1;
    while (exponent < m.size()) {
        BoolMatrix squared = power * power;
        if (squared.is_zero()) return true;
        if (squared == power) return false;
        power = std::move(squared);
        exponent *= 2;
    }
    return power.is_zero();
}

CoveringResult covering_holds(const TranslationVector& t, int ell) {
    if (t.m() < 1) return {true, {}};  // W is the full universe
    const int tau = t.tau();
    if (ell < tau) throw std::invalid_argument("stamping length below tau");
    WordSet avoid = block_sets(t, tau).W.complement();  // = V_t
    const int alphabet = t.alphabet_cap() + 1;
    const std::uint64_t shift_universe = avoid.universe() / alphabet;

    // A length-ell word escapes every stamp iff all of its aligned length-tau
    // factors avoid W. Propagate the set of length-tau suffixes of such words
    // length by length; covering holds iff the frontier dies out by ell.
    std::vector<WordSet> frontiers{avoid};
    for (int len = tau; len < ell; ++len) {
        if (frontiers.back().empty()) return {true, {}};
        WordSet next(tau, alphabet);
        for (std::uint64_t code : frontiers.back().codes()) {
            std::uint64_t base = (code % shift_universe) * alphabet;
            for (int letter = 0; letter < alphabet; ++letter)
                if (avoid.contains(base + letter)) next.insert(base + letter);
        }
        frontiers.push_back(std::move(next));
    }
    if (frontiers.back().empty()) return {true, {}};

    // Reconstruct one uncovered word by walking the frontiers backwards.
    std::vector<int> witness;
    std::uint64_t current = frontiers.back().codes().front();
    std::vector<int> suffix_letters = decode_word(current, tau, alphabet);
    std::vector<int> appended;
    for (int step = static_cast<int>(frontiers.size()) - 1; step > 0; --step) {
        appended.push_back(static_cast<int>(current % alphabet));
        std::uint64_t head = current / alphabet;
        for (int letter = 0; letter < alphabet; ++letter) {
            std::uint64_t prev = std::uint64_t(letter) * shift_universe + head;
            if (frontiers[step - 1].contains(prev)) {
                current = prev;
                break;
            }
        }
    }
    witness = decode_word(current, tau, alphabet);
    for (auto it = appended.rbegin(); it != appended.rend(); ++it) witness.push_back(*it);
    return {false, witness};
}

Admissibility check_admissible(const TranslationVector& t, bool cross_check) {
    Admissibility out;
    if (t.m() < 1) {
        out.admissible = true;
        return out;
    }
    WordGraph g = build_graph(t);
    out.tau = g.tau;
    out.vertex_count = g.vertex_codes.size();
    CycleResult cycle = find_cycle(g);
    out.admissible = !cycle.cyclic;
    out.cycle = cycle.cycle;
    if (out.admissible) out.covering_length = minimal_covering_length(t);

    if (cross_check) {
        bool nilpotent = is_nilpotent(adjacency_matrix(g));
        bool covered = covering_holds(t, g.tau + static_cast<int>(out.vertex_count)).covered;
        if (nilpotent != out.admissible || covered != out.admissible)
            throw std::logic_error("admissibility oracles disagree (implementation bug)");
    }
    return out;
}

int minimal_covering_length(const TranslationVector& t) {
    if (t.m() < 1) return 0;
    const int tau = t.tau();
    WordSet avoid = block_sets(t, tau).W.complement();
    const int alphabet = t.alphabet_cap() + 1;
    const std::uint64_t shift_universe = avoid.universe() / alphabet;
    const int bound = tau + static_cast<int>(avoid.count());
    WordSet frontier = avoid;
    for (int ell = tau; ell <= bound; ++ell) {
        if (frontier.empty()) return ell;
        WordSet next(tau, alphabet);
        for (std::uint64_t code : frontier.codes()) {
            std::uint64_t base = (code % shift_universe) * alphabet;
            for (int letter = 0; letter < alphabet; ++letter)
                if (avoid.contains(base + letter)) next.insert(base + letter);
        }
        frontier = std::move(next);
    }
    throw std::invalid_argument("not admissible: no covering length exists");
}

namespace {

SideReport report_side(const TranslationVector& t, bool cross_check) {
    SideReport report;
    report.in_T = true;
    Admissibility adm = check_admissible(t, cross_check);
    report.admissible = adm.admissible;
    report.covering_length = adm.covering_length;
    for (auto code : adm.cycle)
        report.cycle.push_back(word_text(code, t.tau(), t.alphabet_cap() + 1));
    return report;
}

}  // namespace

Verdict decide_self_similar(const TranslationVector& t, BetaRegime regime, bool cross_check) {
    Verdict v;
    if (t.is_trivial()) {
        // Gamma itself is self-similar by definition.
        v.decision = Decision::SelfSimilar;
        v.admissible_side = "t";
        v.t_side = {true, true, {}, 0};
        v.conjugate_side = {true, true, {}, 0};
        return v;
    }

    v.t_side = report_side(t, cross_check);
    ConjugateResult conj = conjugate(t);
    if (conj.in_T()) {
        v.conjugate_side = report_side(*conj.vec, cross_check);
    } else {
        v.conjugate_side.in_T = false;
    }

    if (v.t_side.admissible) {
        v.decision = Decision::SelfSimilar;
        v.admissible_side = "t";
        v.covering_length = v.t_side.covering_length;
    } else if (v.conjugate_side.in_T && v.conjugate_side.admissible) {
        v.decision = Decision::SelfSimilar;
        v.admissible_side = "conjugate";
        v.covering_length = v.conjugate_side.covering_length;
    } else {
        v.decision = regime == BetaRegime::BelowCritical ? Decision::NotSelfSimilar
                                                         : Decision::SufficientOnly;
    }
    return v;
}

std::string graph_dot(const WordGraph& g) {
    std::ostringstream out;
    out << "digraph G_t {\n";
    for (auto code : g.vertex_codes)
        out << "  \"" << word_text(code, g.tau, g.alphabet) << "\";\n";
    for (auto code : g.vertex_codes)
        for (auto succ : g.successors(code))
            out << "  \"" << word_text(code, g.tau, g.alphabet) << "\" -> \""
                << word_text(succ, g.tau, g.alphabet) << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace cantor
