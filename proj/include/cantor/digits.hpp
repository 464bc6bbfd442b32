#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

/// Finitely supported Laurent "polynomial" in beta with integer coefficients.
/// The represented value is ((1-beta)/N) * sum c_k beta^k, with N carried as
/// context. Equality is coefficient-wise; this determines the value for every
/// beta in (0, 1/(N+1)) at once.
class BetaLaurent {
public:
    explicit BetaLaurent(int alphabet_cap = 1) : cap_(alphabet_cap) {}

    int alphabet_cap() const { return cap_; }
    const std::map<int, long long>& coefficients() const { return coeffs_; }

    void add_term(int exponent, long long coefficient);
    BetaLaurent& operator+=(const BetaLaurent& other);

    bool operator==(const BetaLaurent& other) const {
        return cap_ == other.cap_ && coeffs_ == other.coeffs_;
    }

    /// Exact value at a rational beta in (0, 1/(N+1)).
    Rational value_at(const Rational& beta) const;

private:
    int cap_;
    std::map<int, long long> coeffs_;  // zero coefficients never stored
};

/// Finite expansion of one translation value: digit at index k (k >= 1) has
/// weight beta^{-k}, so the value is ((1-beta)/N) * sum_k digit(k) beta^{-k}.
/// Canonical form strips the trailing run of zero digits.
class DigitString {
public:
    DigitString() : cap_(1) {}
    DigitString(std::vector<int> digits, int alphabet_cap);

    int alphabet_cap() const { return cap_; }
    /// Highest nonzero digit index, 0 for the zero string.
    int length() const { return static_cast<int>(digits_.size()); }
    bool is_zero() const { return digits_.empty(); }
    /// Digit at index k >= 1; zero above length().
    int digit(int k) const {
        return (k >= 1 && k <= length()) ? digits_[k - 1] : 0;
    }
    const std::vector<int>& digits() const { return digits_; }

    /// Lowest-index-first text form, e.g. "1,0,1".
    std::string text() const;
    static DigitString parse(const std::string& text, int alphabet_cap);

    BetaLaurent to_laurent() const;
    Rational value_at(const Rational& beta) const;

    bool operator==(const DigitString& other) const {
        return cap_ == other.cap_ && digits_ == other.digits_;
    }

private:
    int cap_;
    std::vector<int> digits_;  // digits_[k-1] = digit at index k
};

/// Order of the represented real values, valid for every beta in
/// (0, 1/(N+1)): the highest differing digit decides.
std::strong_ordering digit_compare(const DigitString& a, const DigitString& b);

/// Ordered tuple (t_0, ..., t_m) of digit strings with t_0 = 0 and entries
/// strictly increasing. m = 0 gives the trivial vector.
class TranslationVector {
public:
    TranslationVector(int alphabet_cap, std::vector<DigitString> entries);

    /// The trivial vector (0).
    static TranslationVector trivial(int alphabet_cap);

    int alphabet_cap() const { return cap_; }
    int m() const { return static_cast<int>(entries_.size()) - 1; }
    bool is_trivial() const { return m() == 0; }
    const std::vector<DigitString>& entries() const { return entries_; }
    const DigitString& entry(int j) const { return entries_.at(j); }

    /// Smallest digit depth expressing every entry; 0 for the trivial vector.
    int tau() const { return tau_; }
    /// Componentwise max digit at level k, 1 <= k <= tau().
    int s(int k) const;

    bool operator==(const TranslationVector& other) const {
        return cap_ == other.cap_ && entries_ == other.entries_;
    }

private:
    int cap_;
    std::vector<DigitString> entries_;
    int tau_;
};

/// Conjugate vector t-hat with entries t_m - t_{m-j}, decided digit-wise.
/// When some per-digit difference leaves {0,...,N}, the conjugate is not in
/// T and (bad_j, bad_k) point at the offending entry and digit index.
struct ConjugateResult {
    std::optional<TranslationVector> vec;
    int bad_j = -1;
    int bad_k = -1;

    bool in_T() const { return vec.has_value(); }
};
ConjugateResult conjugate(const TranslationVector& t);

/// beta^q * t: shifts every digit index by -q. Empty when a nonzero digit
/// would land at index < 1 (the result would leave T).
std::optional<TranslationVector> scale(const TranslationVector& t, int q);

/// Exact value of a digit string at a rational beta in (0, 1/(N+1)).
Rational value_at(const DigitString& d, const Rational& beta);
Rational value_at(const BetaLaurent& p, const Rational& beta);

}  // namespace cantor
