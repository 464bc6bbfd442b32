#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cantor/words.hpp"

namespace cantor {

/// Directed graph on length-tau words avoiding W_t^tau; an edge i -> j exists
/// iff the length-(tau-1) suffix of i equals the prefix of j. Edges are
/// implicit in the shift rule.
struct WordGraph {
    int tau = 0;
    int alphabet = 1;
    WordSet vertices;
    std::vector<std::uint64_t> vertex_codes;  // ascending

    WordGraph() : vertices(0, 1) {}

    /// The at most N+1 out-neighbors of a vertex, ascending by last letter.
    std::vector<std::uint64_t> successors(std::uint64_t code) const;
};

WordGraph build_graph(const TranslationVector& t);

struct CycleResult {
    bool cyclic = false;
    /// Vertex codes of one cycle (first vertex repeated at the end is
    /// omitted), found by DFS from the smallest-code vertex with children
    /// visited in ascending order.
    std::vector<std::uint64_t> cycle;
};
CycleResult find_cycle(const WordGraph& g);

/// Square boolean matrix, rows stored as bitsets; indexed by the sorted
/// vertex codes of the graph it came from.
class BoolMatrix {
public:
    explicit BoolMatrix(std::size_t n);

    std::size_t size() const { return n_; }
    bool get(std::size_t i, std::size_t j) const {
        return (rows_[i][j >> 6] >> (j & 63)) & 1;
    }
    void set(std::size_t i, std::size_t j) {
        rows_[i][j >> 6] |= std::uint64_t(1) << (j & 63);
    }
    bool is_zero() const;
    bool operator==(const BoolMatrix& other) const;

    /// Boolean matrix product.
    BoolMatrix operator*(const BoolMatrix& other) const;

private:
    std::size_t n_;
    std::size_t words_per_row_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

BoolMatrix adjacency_matrix(const WordGraph& g);

/// True iff M^#V = 0 under boolean arithmetic; repeated squaring with early
/// exit on zero or on a nonzero fixpoint.
bool is_nilpotent(const BoolMatrix& m);

struct CoveringResult {
    bool covered = false;
    /// When not covered, letters of one length-ell word none of whose aligned
    /// length-tau factors lies in W_t^tau.
    std::vector<int> witness;
};
/// Definition of admissibility at a fixed stamping length ell >= tau: the
/// union over n in [tau, ell] of {0..N}^{n-tau} x W^tau x {0..N}^{ell-n}
/// must be all of {0..N}^ell. Decided by propagating the set of length-tau
/// suffixes of still-uncovered words, so only the length-tau universe is
/// materialized.
CoveringResult covering_holds(const TranslationVector& t, int ell);

struct Admissibility {
    bool admissible = false;
    std::vector<std::uint64_t> cycle;  // when not admissible
    int covering_length = 0;           // minimal ell, when admissible
    int tau = 0;
    std::size_t vertex_count = 0;
};

/// Acyclicity of G_t (the default engine). With cross_check, also runs
/// matrix nilpotency and the covering test at ell = tau + #V and requires
/// all three verdicts to agree; disagreement throws.
Admissibility check_admissible(const TranslationVector& t, bool cross_check = false);

/// Least ell with covering; requires an admissible vector.
int minimal_covering_length(const TranslationVector& t);

enum class Decision { SelfSimilar, NotSelfSimilar, SufficientOnly };
enum class BetaRegime { BelowCritical, Between };  // beta < 1/(2N+1), or in [1/(2N+1), 1/(N+1))

struct SideReport {
    bool in_T = false;
    bool admissible = false;
    std::vector<std::string> cycle;  // vertex words, when cyclic
    int covering_length = 0;         // when admissible
};

struct Verdict {
    Decision decision = Decision::NotSelfSimilar;
    /// "t", "conjugate", or empty.
    std::string admissible_side;
    int covering_length = 0;
    SideReport t_side;
    SideReport conjugate_side;
};

/// The full decision: self-similar iff t or its conjugate is admissible
/// (exact below beta = 1/(2N+1); sufficiency only in the regime between
/// 1/(2N+1) and 1/(N+1), where a negative turns into SufficientOnly).
Verdict decide_self_similar(const TranslationVector& t,
                            BetaRegime regime = BetaRegime::BelowCritical,
                            bool cross_check = false);

/// Graphviz DOT form of G_t; vertex labels are digit strings.
std::string graph_dot(const WordGraph& g);

}  // namespace cantor
