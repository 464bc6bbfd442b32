#include "cantor/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace cantor {

namespace {

Rational pow_rational(const Rational& base, int exponent) {
    Rational out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

BetaLaurent word_offset(const std::vector<int>& word, int cap) {
    // phi_{i_1...i_n}(0): coefficient i_k at exponent k-1.
    BetaLaurent p(cap);
    for (std::size_t k = 0; k < word.size(); ++k) p.add_term(static_cast<int>(k), word[k]);
    return p;
}

// Block word of phi_i(Gamma +- t_j): digit add (sign +) or subtract (sign -)
// of t_j on the last tau letters. Empty when a letter leaves {0,...,N}.
std::optional<std::vector<int>> block_word(const std::vector<int>& word, int sign,
                                           const TranslationVector& t, int j) {
    std::vector<int> out = word;
    const int n = static_cast<int>(word.size());
    for (int k = 1; k <= t.tau(); ++k) {
        int& letter = out[n - k];
        letter += sign * t.entry(j).digit(k);
        if (letter < 0 || letter > t.alphabet_cap()) return std::nullopt;
    }
    return out;
}

bool in_omega(const std::vector<int>& word, int sign, const TranslationVector& t) {
    const int n = static_cast<int>(word.size());
    for (int k = 1; k <= t.tau(); ++k) {
        int letter = word[n - k];
        if (sign > 0 ? letter > t.alphabet_cap() - t.s(k) : letter < t.s(k)) return false;
    }
    return true;
}

}  // namespace

Rational AffineMap::apply(const Rational& x, const Rational& beta) const {
    Rational arg = sign > 0 ? x : 1 - x;
    return pow_rational(beta, power) * arg + offset.value_at(beta);
}

std::vector<AffineMap> extract_ifs(const TranslationVector& t) {
    const int cap = t.alphabet_cap();
    std::vector<AffineMap> ifs;
    if (t.is_trivial()) {
        // Gamma's own generating IFS.
        for (int i = 0; i <= cap; ++i) {
            AffineMap map;
            map.power = 1;
            map.word = {i};
            map.offset = word_offset(map.word, cap);
            ifs.push_back(std::move(map));
        }
        return ifs;
    }

    Admissibility adm = check_admissible(t);
    if (!adm.admissible) throw std::invalid_argument("extract_ifs requires an admissible vector");
    const int ell = adm.covering_length;
    const int alphabet = cap + 1;

    for (int n = t.tau(); n <= ell; ++n) {
        for (int side = 0; side < 2; ++side) {
            int sign = side == 0 ? +1 : -1;
            WordSet words = side == 0 ? omega(t, n) : omega_hat(t, n);
            for (std::uint64_t code : words.codes()) {
                auto letters = decode_word(code, n, alphabet);
                for (int j = 0; j <= t.m(); ++j) {
                    AffineMap map;
                    map.sign = sign;
                    map.power = n;
                    map.word = letters;
                    map.translate = j;
                    map.offset = word_offset(letters, cap);
                    map.offset += t.entry(j).to_laurent();
                    ifs.push_back(std::move(map));
                }
            }
        }
    }
    return ifs;
}

namespace {

// Canonical form of one map for multiset comparison.
using MapKey = std::tuple<int, int, int, std::vector<int>, std::map<int, long long>>;

MapKey map_key(const AffineMap& map) {
    return {map.sign, map.power, map.translate, map.word, map.offset.coefficients()};
}

}  // namespace

bool verify_symbolic(const TranslationVector& t, const std::vector<AffineMap>& ifs) {
    if (ifs.empty()) return false;
    const int cap = t.alphabet_cap();
    const int alphabet = cap + 1;
    int ell = 0;
    for (const auto& map : ifs) ell = std::max(ell, map.power);

    std::vector<MapKey> actual;
    actual.reserve(ifs.size());
    for (const auto& map : ifs) actual.push_back(map_key(map));
    std::sort(actual.begin(), actual.end());

    // The base system for the untranslated set.
    if (t.is_trivial()) {
        if (ell != 1) return false;
        std::vector<MapKey> expected;
        for (int i = 0; i <= cap; ++i) {
            AffineMap map;
            map.power = 1;
            map.word = {i};
            map.offset = word_offset(map.word, cap);
            expected.push_back(map_key(map));
        }
        std::sort(expected.begin(), expected.end());
        return actual == expected;
    }

    if (ell < t.tau()) return false;
    // the stamped blocks must exhaust every word at the system's depth
    if (!covering_holds(t, ell).covered) return false;

    // The system must be exactly the two-branch family at depth ell: every
    // tail word of every length in [tau, ell], both orientations, every
    // outer translate, with offset phi_i(0) + t_j. A missing, duplicated, or
    // mangled map breaks the multiset equality. Each map's image decomposes
    // into block words, which block_word certifies per inner translate.
    std::vector<MapKey> expected;
    for (int n = t.tau(); n <= ell; ++n) {
        for (int side = 0; side < 2; ++side) {
            int sign = side == 0 ? +1 : -1;
            WordSet words = side == 0 ? omega(t, n) : omega_hat(t, n);
            for (std::uint64_t code : words.codes()) {
                auto letters = decode_word(code, n, alphabet);
                for (int j = 0; j <= t.m(); ++j) {
                    if (!block_word(letters, sign, t, j)) return false;
                    AffineMap map;
                    map.sign = sign;
                    map.power = n;
                    map.word = letters;
                    map.translate = j;
                    map.offset = word_offset(letters, cap);
                    map.offset += t.entry(j).to_laurent();
                    expected.push_back(map_key(map));
                }
            }
        }
    }
    std::sort(expected.begin(), expected.end());
    return actual == expected;
}

GreedyResult greedy_coding(const Rational& x, const Rational& beta, int alphabet_cap,
                           int depth) {
    if (x < 0 || x > 1) throw std::invalid_argument("x outside [0,1]");
    if (beta <= 0 || beta * (2 * alphabet_cap + 1) >= 1)
        throw std::invalid_argument("beta outside (0, 1/(2N+1))");
    const int N = alphabet_cap;
    const Rational step = (1 - beta) / N;  // width of one digit
    GreedyResult out;
    Rational r = x;
    for (int k = 1; k <= depth; ++k) {
        Rational ratio = r / step;
        BigInt j = numerator(ratio) / denominator(ratio);  // floor; r >= 0
        if (j > N) j = N;
        Rational next = (r - Rational(j) * step) / beta;
        if (next < 0 || next > 1) {
            out.fail_index = k;
            out.residual = r;
            return out;
        }
        out.digits.push_back(static_cast<int>(j));
        r = next;
    }
    out.ok = true;
    out.residual = r;
    return out;
}

namespace {

// Exact membership of r = R/S in Gamma, beta = 1/q, S = N * q^D. Success iff
// the remainder reaches 0 (all-zero tail) or S (all-N tail) within D steps.
template <class Int>
bool greedy_member(Int R, const Int& S, long long q, int N, int D) {
    // den = (1-beta)/N * S = (q-1)/(N q) * N q^D = (q-1) q^(D-1)
    const Int den = S / q * (q - 1) / N;
    for (int k = 0; k < D; ++k) {
        if (R == 0 || R == S) return true;
        if (R < 0 || R > S) return false;
        Int j = R / den;
        if (j > N) j = N;
        R = (R - j * den) * q;
    }
    return R == 0 || R == S;
}

struct ExactMapData {
    int sign;
    int power;
    Rational offset;
};

}  // namespace

VerifyReport verify_numeric(const TranslationVector& t, const std::vector<AffineMap>& ifs,
                            const Rational& beta, int samples, int depth,
                            std::uint64_t seed, bool float_mode, double tolerance) {
    const int N = t.alphabet_cap();
    if (beta <= 0 || beta * (2 * N + 1) >= 1)
        throw std::invalid_argument("beta outside (0, 1/(2N+1))");
    if (ifs.empty()) throw std::invalid_argument("empty IFS");

    VerifyReport report;
    report.samples = samples;
    report.maps = static_cast<int>(ifs.size());
    report.seed = seed;
    report.float_mode = float_mode;

    int max_power = 0;
    for (const auto& map : ifs) max_power = std::max(max_power, map.power);

    std::vector<Rational> t_values;
    for (const auto& e : t.entries()) t_values.push_back(e.value_at(beta));

    std::vector<ExactMapData> maps;
    maps.reserve(ifs.size());
    for (const auto& map : ifs)
        maps.push_back({map.sign, map.power, map.offset.value_at(beta)});

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_entry(0, t.m());
    std::uniform_int_distribution<int> pick_digit(0, N);

    const Rational unit = (1 - beta) / N;

    if (float_mode) {
        const double b = static_cast<double>(numerator(beta)) / static_cast<double>(denominator(beta));
        const double u = (1.0 - b) / N;
        std::vector<double> tv, off, ratio;
        for (const auto& v : t_values) tv.push_back(static_cast<double>(v));
        for (const auto& m : maps) {
            off.push_back(static_cast<double>(m.offset));
            ratio.push_back(std::pow(b, m.power));
        }
        const int steps = depth + max_power + t.tau() + 4;
        for (int s = 0; s < samples; ++s) {
            int j0 = pick_entry(rng);
            double x = 0.0;
            double w = u;
            for (int k = 0; k < depth; ++k, w *= b) x += pick_digit(rng) * w;
            x += tv[j0];
            for (std::size_t mi = 0; mi < maps.size(); ++mi) {
                double y = ratio[mi] * (maps[mi].sign > 0 ? x : 1.0 - x) + off[mi];
                // locate the translate whose cylinder contains y
                double r = -1.0;
                for (double tj : tv)
                    if (y >= tj - tolerance && y <= tj + 1.0 + tolerance) r = y - tj;
                if (r < 0.0) {
                    report.failure = "image outside every translate interval";
                    return report;
                }
                double rem = r;
                for (int k = 0; k < steps; ++k) {
                    // nearest digit: cylinders [d*u, d*u + b] are separated by
                    // gaps of width u - b, so rounding is boundary-stable
                    int d = static_cast<int>(std::lround((rem - b / 2) / u));
                    if (d < 0) d = 0;
                    if (d > N) d = N;
                    rem = (rem - d * u) / b;
                    if (rem < -1.0 || rem > 2.0) break;
                }
                double residual = std::min(std::abs(rem), std::abs(1.0 - rem)) * std::pow(b, steps);
                report.max_float_residual = std::max(report.max_float_residual, residual);
                ++report.certifications;
                if (residual > tolerance) {
                    report.failure = "float residual above tolerance";
                    return report;
                }
            }
        }
        report.ok = true;
        return report;
    }

    // Exact mode. Fast integer kernel when beta = 1/q; generic rationals
    // otherwise.
    const bool unit_numerator = numerator(beta) == 1;
    const long long q = unit_numerator ? static_cast<long long>(denominator(beta)) : 0;
    const int D = depth + max_power + t.tau() + 2;
    BigInt S = N;
    for (int i = 0; i < D; ++i) S *= q > 0 ? q : 1;

    const bool narrow = unit_numerator && S < (BigInt(1) << 120);
    const unsigned __int128 S_narrow =
        narrow ? static_cast<unsigned __int128>(S) : 0;

    auto certify = [&](const Rational& y) -> bool {
        for (std::size_t j = 0; j < t_values.size(); ++j) {
            Rational r = y - t_values[j];
            if (r < 0 || r > 1) continue;
            if (unit_numerator) {
                Rational scaled = r * Rational(S);
                if (denominator(scaled) != 1) return false;
                BigInt R = numerator(scaled);
                if (narrow)
                    return greedy_member<unsigned __int128>(
                        static_cast<unsigned __int128>(R), S_narrow, q, N, D);
                return greedy_member<BigInt>(R, S, q, N, D);
            }
            // generic exact greedy
            Rational rem = r;
            for (int k = 0; k < D; ++k) {
                if (rem == 0 || rem == 1) return true;
                Rational ratio = rem / unit;
                BigInt d = numerator(ratio) / denominator(ratio);
                if (d > N) d = N;
                rem = (rem - Rational(d) * unit) / beta;
                if (rem < 0 || rem > 1) return false;
            }
            return rem == 0 || rem == 1;
        }
        return false;
    };

    // When beta = 1/q and every quantity fits in 128 bits after scaling by
    // S, the whole sampling loop runs on native integers: v maps to v * S,
    // all sample and image values are then exact integers.
    bool integer_loop = narrow;
    using Wide = __int128;
    const Wide kScaledLimit = Wide(1) << 124;
    auto to_scaled = [&](const Rational& v) -> std::optional<Wide> {
        if (!integer_loop) return std::nullopt;
        Rational scaled = v * Rational(S);
        if (denominator(scaled) != 1) return std::nullopt;
        BigInt num = numerator(scaled);
        if (num < 0 || BigInt(num) >= BigInt(1) << 124) return std::nullopt;
        return static_cast<Wide>(num);
    };
    std::vector<Wide> t_scaled, off_scaled, q_pow;
    if (integer_loop) {
        for (const auto& v : t_values) {
            auto s = to_scaled(v);
            if (!s) { integer_loop = false; break; }
            t_scaled.push_back(*s);
        }
        for (const auto& m : maps) {
            if (!integer_loop) break;
            auto s = to_scaled(m.offset);
            if (!s) { integer_loop = false; break; }
            off_scaled.push_back(*s);
            Wide p = 1;
            for (int i = 0; i < m.power; ++i) p *= q;
            q_pow.push_back(p);
        }
    }

    if (integer_loop) {
        const Wide Si = static_cast<Wide>(S_narrow);
        std::vector<Wide> weight(depth);  // digit weight unit * beta^k, scaled
        Wide w = Si / q * (q - 1) / N;    // (q-1) q^(D-1)
        for (int k = 0; k < depth; ++k, w /= q) weight[k] = w;
        for (int s = 0; s < samples; ++s) {
            Wide x = t_scaled[pick_entry(rng)];
            for (int k = 0; k < depth; ++k) x += pick_digit(rng) * weight[k];
            for (std::size_t mi = 0; mi < maps.size(); ++mi) {
                // x and S - x are divisible by q^power by construction
                Wide y = (maps[mi].sign > 0 ? x : Si - x) / q_pow[mi] + off_scaled[mi];
                ++report.certifications;
                bool ok = false;
                for (Wide tj : t_scaled) {
                    Wide r = y - tj;
                    if (r < 0 || r > Si) continue;
                    ok = greedy_member<unsigned __int128>(
                        static_cast<unsigned __int128>(r), S_narrow, q, N, D);
                    break;
                }
                if (!ok) {
                    report.max_residual = 1;  // membership failed outright
                    report.failure = "sampled image not certified in Gamma_t";
                    return report;
                }
            }
        }
    } else {
        std::vector<Rational> ratios;
        for (const auto& m : maps) ratios.push_back(pow_rational(beta, m.power));
        for (int s = 0; s < samples; ++s) {
            int j0 = pick_entry(rng);
            Rational x = t_values[j0];
            Rational w = unit;
            for (int k = 0; k < depth; ++k, w *= beta) x += pick_digit(rng) * w;
            for (std::size_t mi = 0; mi < maps.size(); ++mi) {
                Rational y = ratios[mi] * (maps[mi].sign > 0 ? x : 1 - x) + maps[mi].offset;
                ++report.certifications;
                if (!certify(y)) {
                    report.max_residual = 1;  // membership failed outright
                    report.failure = "sampled image not certified in Gamma_t";
                    return report;
                }
            }
        }
    }

    // Pin each map image to its block cylinder by exact endpoint evaluation:
    // phi_i(+-t_j + {0,1}) must land on phi_w(0) and phi_w(1) for the block
    // word w from the digit arithmetic.
    if (t.m() >= 1) {
        std::set<std::pair<int, std::vector<int>>> seen;
        for (const auto& map : ifs) {
            if (!seen.insert({map.sign, map.word}).second) continue;
            Rational ratio = pow_rational(beta, map.power);
            Rational phi0 = word_offset(map.word, N).value_at(beta);
            for (int j = 0; j <= t.m(); ++j) {
                auto block = block_word(map.word, map.sign, t, j);
                if (!block) {
                    report.failure = "block letter out of range";
                    return report;
                }
                Rational block0 = word_offset(*block, N).value_at(beta);
                Rational lo = map.sign > 0 ? Rational(ratio * t_values[j] + phi0)
                                           : Rational(phi0 - ratio * t_values[j]);
                Rational hi = map.sign > 0 ? Rational(ratio * (1 + t_values[j]) + phi0)
                                           : Rational(ratio * (1 - t_values[j]) + phi0);
                ++report.endpoint_checks;
                if (lo != block0 || hi != block0 + ratio) {
                    report.failure = "map image endpoints differ from block cylinder";
                    return report;
                }
            }
        }
    }

    report.ok = true;
    return report;
}

}  // namespace cantor
