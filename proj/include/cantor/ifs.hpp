#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/admissibility.hpp"
#include "cantor/digits.hpp"

namespace cantor {

/// Exact similitude x -> beta^power * x + offset (sign +) or
/// beta^power * (1 - x) + offset (sign -), with offset in the beta-Laurent
/// ring. `word` is the defining word i (from Omega resp. Omega-hat) and
/// `translate` the outer translate index j; offset = phi_i(0) + t_j.
struct AffineMap {
    int sign = +1;  // +1: phi_i(x) + t_j, -1: phi_i(1-x) + t_j
    int power = 1;  // contraction ratio magnitude beta^power
    BetaLaurent offset;
    std::vector<int> word;
    int translate = 0;

    Rational apply(const Rational& x, const Rational& beta) const;
};

/// Generating IFS from an admissible vector, at the minimal covering length
/// ell: every phi_i(x) + t_j with i in Omega^n (tau <= n <= ell) and every
/// phi_i(1-x) + t_j with i in Omega-hat^n. Throws on non-admissible input.
std::vector<AffineMap> extract_ifs(const TranslationVector& t);

/// Word-level verification: the covering identity holds at the maps' maximal
/// length, and for each outer translate j the block words of the group's
/// maps exhaust {0..N}^ell once padded. Exact; true only if both hold.
bool verify_symbolic(const TranslationVector& t, const std::vector<AffineMap>& ifs);

struct GreedyResult {
    bool ok = false;
    std::vector<int> digits;
    int fail_index = 0;      // 1-based index of the first impossible digit
    Rational residual = 0;   // remaining mass after the last extracted digit
};
/// Digit-wise expansion of x in [0,1] over Gamma's alphabet; valid because
/// codings are unique for beta < 1/(2N+1). Fails at the first index where no
/// digit keeps the remainder inside [0,1].
GreedyResult greedy_coding(const Rational& x, const Rational& beta, int alphabet_cap,
                           int depth);

struct VerifyReport {
    bool ok = false;
    int samples = 0;
    int maps = 0;
    std::uint64_t certifications = 0;
    std::uint64_t endpoint_checks = 0;
    std::uint64_t seed = 0;
    bool float_mode = false;
    Rational max_residual = 0;       // exact mode; must be 0
    double max_float_residual = 0.0; // float mode
    std::string failure;             // empty when ok
};

/// Numerical check of the IFS at an exact rational beta < 1/(2N+1): seeded
/// random depth-`depth` points of Gamma_t are pushed through every map and
/// certified to land back in Gamma_t by greedy digit extraction; map images
/// are also pinned to their block cylinders by exact endpoint evaluation.
VerifyReport verify_numeric(const TranslationVector& t, const std::vector<AffineMap>& ifs,
                            const Rational& beta, int samples, int depth,
                            std::uint64_t seed, bool float_mode = false,
                            double tolerance = 1e-9);

}  // namespace cantor
