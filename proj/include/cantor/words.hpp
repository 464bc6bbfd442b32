#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/digits.hpp"

namespace cantor {

/// Hard cap on dense word-set universes: (N+1)^n may not exceed 2^28 bits.
inline constexpr std::uint64_t kMaxUniverseBits = std::uint64_t(1) << 28;

/// (N+1)^n with an overflow/memory-guard check.
std::uint64_t universe_size(int alphabet, int length);

/// Integer code of a word i_1...i_n: sum i_k * (N+1)^(n-k), i_1 most
/// significant.
std::uint64_t encode_word(const std::vector<int>& letters, int alphabet);
std::vector<int> decode_word(std::uint64_t code, int length, int alphabet);
/// Bare digit text, e.g. "0110" (alphabet <= 10).
std::string word_text(std::uint64_t code, int length, int alphabet);

/// Dense bitset of words of one fixed length over {0,...,N}.
class WordSet {
public:
    WordSet(int length, int alphabet);

    int length() const { return length_; }
    int alphabet() const { return alphabet_; }
    std::uint64_t universe() const { return universe_; }

    bool contains(std::uint64_t code) const {
        return (bits_[code >> 6] >> (code & 63)) & 1;
    }
    void insert(std::uint64_t code) { bits_[code >> 6] |= std::uint64_t(1) << (code & 63); }
    std::uint64_t count() const;
    bool empty() const { return count() == 0; }
    bool is_full() const { return count() == universe_; }

    WordSet& operator|=(const WordSet& other);
    WordSet& operator&=(const WordSet& other);
    WordSet complement() const;
    bool operator==(const WordSet& other) const;

    /// Member codes in ascending order.
    std::vector<std::uint64_t> codes() const;

private:
    int length_;
    int alphabet_;
    std::uint64_t universe_;
    std::vector<std::uint64_t> bits_;
};

/// Omega_t^n: words whose tail digits leave room to add the translation
/// digits, i_{n+1-k} <= N - s_k for 1 <= k <= tau.
WordSet omega(const TranslationVector& t, int n);
/// Conjugate set: i_{n+1-k} >= s_k.
WordSet omega_hat(const TranslationVector& t, int n);

struct BlockSets {
    WordSet A;
    WordSet A_hat;
    WordSet W;  // A union A_hat
};
/// Block sets of length n >= tau: A from Omega by digit addition on the last
/// tau letters, A-hat from Omega-hat by subtraction, W their union.
BlockSets block_sets(const TranslationVector& t, int n);

}  // namespace cantor
