#include "cantor/words.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cantor {

std::uint64_t universe_size(int alphabet, int length) {
    if (alphabet < 2 || length < 0) throw std::invalid_argument("bad universe parameters");
    std::uint64_t size = 1;
    for (int i = 0; i < length; ++i) {
        if (size > kMaxUniverseBits / alphabet)
            throw std::length_error("word universe exceeds the 2^28-bit memory guard");
        size *= alphabet;
    }
    if (size > kMaxUniverseBits)
        throw std::length_error("word universe exceeds the 2^28-bit memory guard");
    return size;
}

std::uint64_t encode_word(const std::vector<int>& letters, int alphabet) {
    std::uint64_t code = 0;
    for (int letter : letters) {
        if (letter < 0 || letter >= alphabet) throw std::invalid_argument("letter out of range");
        code = code * alphabet + letter;
    }
    return code;
}

std::vector<int> decode_word(std::uint64_t code, int length, int alphabet) {
    std::vector<int> letters(length);
    for (int k = length - 1; k >= 0; --k) {
        letters[k] = static_cast<int>(code % alphabet);
        code /= alphabet;
    }
    return letters;
}

std::string word_text(std::uint64_t code, int length, int alphabet) {
    if (alphabet > 10) {
        std::ostringstream out;
        auto letters = decode_word(code, length, alphabet);
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) out << ',';
            out << letters[i];
        }
        return out.str();
    }
    std::string text(length, '0');
    for (int k = length - 1; k >= 0; --k) {
        text[k] = static_cast<char>('0' + code % alphabet);
        code /= alphabet;
    }
    return text;
}

WordSet::WordSet(int length, int alphabet)
    : length_(length), alphabet_(alphabet),
      universe_(length == 0 ? 1 : universe_size(alphabet, length)),
      bits_((universe_ + 63) / 64, 0) {}

std::uint64_t WordSet::count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total;
}

WordSet& WordSet::operator|=(const WordSet& other) {
    if (length_ != other.length_ || alphabet_ != other.alphabet_)
        throw std::invalid_argument("word-set shape mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
    return *this;
}

WordSet& WordSet::operator&=(const WordSet& other) {
    if (length_ != other.length_ || alphabet_ != other.alphabet_)
        throw std::invalid_argument("word-set shape mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
    return *this;
}

WordSet WordSet::complement() const {
    WordSet out(length_, alphabet_);
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = ~bits_[i];
    // mask the tail beyond the universe
    std::uint64_t tail = universe_ & 63;
    if (tail) out.bits_.back() &= (std::uint64_t(1) << tail) - 1;
    return out;
}

bool WordSet::operator==(const WordSet& other) const {
    return length_ == other.length_ && alphabet_ == other.alphabet_ && bits_ == other.bits_;
}

std::vector<std::uint64_t> WordSet::codes() const {
    std::vector<std::uint64_t> out;
    out.reserve(count());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        std::uint64_t w = bits_[i];
        while (w) {
            out.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

namespace {

// Codes of the length-tau suffix part satisfying the Omega (add = true wants
// i_{n+1-k} <= N - s_k) or Omega-hat (i_{n+1-k} >= s_k) tail conditions.
std::vector<std::uint64_t> tail_codes(const TranslationVector& t, bool omega_side) {
    const int alphabet = t.alphabet_cap() + 1;
    const int tau = t.tau();
    std::vector<std::uint64_t> out{0};
    // Build left to right: position p (1-based within the suffix) carries the
    // condition for k = tau - p + 1.
    for (int p = 1; p <= tau; ++p) {
        int k = tau - p + 1;
        int lo = omega_side ? 0 : t.s(k);
        int hi = omega_side ? t.alphabet_cap() - t.s(k) : t.alphabet_cap();
        std::vector<std::uint64_t> next;
        next.reserve(out.size() * (hi - lo + 1));
        for (std::uint64_t prefix : out)
            for (int letter = lo; letter <= hi; ++letter)
                next.push_back(prefix * alphabet + letter);
        out = std::move(next);
    }
    return out;
}

WordSet from_tails(const TranslationVector& t, int n, const std::vector<std::uint64_t>& tails) {
    const int alphabet = t.alphabet_cap() + 1;
    WordSet set(n, alphabet);
    std::uint64_t tail_universe = 1;
    for (int i = 0; i < t.tau(); ++i) tail_universe *= alphabet;
    std::uint64_t prefixes = set.universe() / tail_universe;
    for (std::uint64_t prefix = 0; prefix < prefixes; ++prefix)
        for (std::uint64_t tail : tails) set.insert(prefix * tail_universe + tail);
    return set;
}

void check_length(const TranslationVector& t, int n) {
    if (t.m() < 1) throw std::invalid_argument("trivial vector has no block sets");
    if (n < t.tau()) throw std::invalid_argument("length below tau");
}

}  // namespace

WordSet omega(const TranslationVector& t, int n) {
    check_length(t, n);
    return from_tails(t, n, tail_codes(t, true));
}

WordSet omega_hat(const TranslationVector& t, int n) {
    check_length(t, n);
    return from_tails(t, n, tail_codes(t, false));
}

BlockSets block_sets(const TranslationVector& t, int n) {
    check_length(t, n);
    const int alphabet = t.alphabet_cap() + 1;
    const int tau = t.tau();

    // Digit add/subtract on the last tau letters is a plain code offset:
    // entry j contributes sum_k t_{j,k} * (N+1)^(k-1). The Omega/Omega-hat
    // constraints guarantee no letter leaves {0,...,N}.
    std::vector<std::uint64_t> offsets;
    offsets.reserve(t.m() + 1);
    for (const auto& e : t.entries()) {
        std::uint64_t offset = 0;
        std::uint64_t weight = 1;
        for (int k = 1; k <= tau; ++k) {
            offset += e.digit(k) * weight;
            weight *= alphabet;
        }
        offsets.push_back(offset);
    }

    auto omega_tails = tail_codes(t, true);
    auto hat_tails = tail_codes(t, false);
    std::uint64_t tail_universe = 1;
    for (int i = 0; i < tau; ++i) tail_universe *= alphabet;

    std::vector<std::uint64_t> a_tails, ahat_tails;
    a_tails.reserve(omega_tails.size() * offsets.size());
    ahat_tails.reserve(hat_tails.size() * offsets.size());
    for (std::uint64_t tail : omega_tails)
        for (std::uint64_t offset : offsets) {
            std::uint64_t shifted = tail + offset;
            if (shifted >= tail_universe)
                throw std::logic_error("block letter out of range (construction bug)");
            a_tails.push_back(shifted);
        }
    for (std::uint64_t tail : hat_tails)
        for (std::uint64_t offset : offsets) {
            if (tail < offset) throw std::logic_error("block letter out of range (construction bug)");
            ahat_tails.push_back(tail - offset);
        }

    BlockSets out{from_tails(t, n, a_tails), from_tails(t, n, ahat_tails),
                  WordSet(n, alphabet)};
    out.W = out.A;
    out.W |= out.A_hat;
    return out;
}

}  // namespace cantor
