#include "cantor/digits.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cantor {

void BetaLaurent::add_term(int exponent, long long coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = coeffs_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) coeffs_.erase(it);
    }
}

BetaLaurent& BetaLaurent::operator+=(const BetaLaurent& other) {
    if (cap_ != other.cap_) throw std::invalid_argument("mismatched alphabet parameter");
    for (const auto& [k, c] : other.coeffs_) add_term(k, c);
    return *this;
}

Rational BetaLaurent::value_at(const Rational& beta) const {
    if (beta <= 0 || beta * (cap_ + 1) >= 1)
        throw std::invalid_argument("beta outside (0, 1/(N+1))");
    Rational sum = 0;
    for (const auto& [k, c] : coeffs_) {
        Rational pow = 1;
        if (k >= 0) {
            for (int i = 0; i < k; ++i) pow *= beta;
        } else {
            for (int i = 0; i < -k; ++i) pow /= beta;
        }
        sum += Rational(c) * pow;
    }
    return sum * (1 - beta) / cap_;
}

DigitString::DigitString(std::vector<int> digits, int alphabet_cap)
    : cap_(alphabet_cap), digits_(std::move(digits)) {
    if (cap_ < 1) throw std::invalid_argument("alphabet parameter N must be >= 1");
    for (int d : digits_)
        if (d < 0 || d > cap_)
            throw std::invalid_argument("digit out of {0,...,N}");
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
}

std::string DigitString::text() const {
    if (digits_.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i) out << ',';
        out << digits_[i];
    }
    return out.str();
}

DigitString DigitString::parse(const std::string& text, int alphabet_cap) {
    std::vector<int> digits;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        int value = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad digit: '" + item + "'");
        digits.push_back(value);
    }
    return DigitString(std::move(digits), alphabet_cap);
}

BetaLaurent DigitString::to_laurent() const {
    BetaLaurent p(cap_);
    for (int k = 1; k <= length(); ++k) p.add_term(-k, digit(k));
    return p;
}

Rational DigitString::value_at(const Rational& beta) const {
    return to_laurent().value_at(beta);
}

std::strong_ordering digit_compare(const DigitString& a, const DigitString& b) {
    if (a.alphabet_cap() != b.alphabet_cap())
        throw std::invalid_argument("mismatched alphabet parameter");
    for (int k = std::max(a.length(), b.length()); k >= 1; --k) {
        if (a.digit(k) != b.digit(k)) return a.digit(k) <=> b.digit(k);
    }
    return std::strong_ordering::equal;
}

TranslationVector::TranslationVector(int alphabet_cap, std::vector<DigitString> entries)
    : cap_(alphabet_cap), entries_(std::move(entries)), tau_(0) {
    if (cap_ < 1) throw std::invalid_argument("alphabet parameter N must be >= 1");
    if (entries_.empty()) throw std::invalid_argument("vector needs at least the zero entry");
    for (const auto& e : entries_) {
        if (e.alphabet_cap() != cap_)
            throw std::invalid_argument("entry alphabet parameter differs from vector's");
        tau_ = std::max(tau_, e.length());
    }
    if (!entries_.front().is_zero())
        throw std::invalid_argument("t_0 must be the zero string");
    for (std::size_t j = 1; j < entries_.size(); ++j) {
        if (digit_compare(entries_[j - 1], entries_[j]) != std::strong_ordering::less)
            throw std::invalid_argument("entries must be strictly increasing");
    }
}

TranslationVector TranslationVector::trivial(int alphabet_cap) {
    return TranslationVector(alphabet_cap, {DigitString({}, alphabet_cap)});
}

int TranslationVector::s(int k) const {
    int best = 0;
    for (const auto& e : entries_) best = std::max(best, e.digit(k));
    return best;
}

ConjugateResult conjugate(const TranslationVector& t) {
    const int m = t.m();
    const auto& top = t.entry(m);
    std::vector<DigitString> entries;
    entries.reserve(m + 1);
    for (int j = 0; j <= m; ++j) {
        std::vector<int> digits(t.tau(), 0);
        for (int k = 1; k <= t.tau(); ++k) {
            int d = top.digit(k) - t.entry(m - j).digit(k);
            if (d < 0 || d > t.alphabet_cap()) return {std::nullopt, j, k};
            digits[k - 1] = d;
        }
        entries.emplace_back(std::move(digits), t.alphabet_cap());
    }
    return {TranslationVector(t.alphabet_cap(), std::move(entries)), -1, -1};
}

std::optional<TranslationVector> scale(const TranslationVector& t, int q) {
    std::vector<DigitString> entries;
    entries.reserve(t.m() + 1);
    for (const auto& e : t.entries()) {
        std::vector<int> digits;
        if (!e.is_zero()) {
            // digit at index k moves to index k - q
            if (q > 0) {
                for (int k = 1; k <= q; ++k)
                    if (e.digit(k) != 0) return std::nullopt;
            }
            digits.assign(std::max(0, e.length() - q), 0);
            for (int k = 1; k <= e.length(); ++k)
                if (e.digit(k) != 0) digits[k - q - 1] = e.digit(k);
        }
        entries.emplace_back(std::move(digits), t.alphabet_cap());
    }
    return TranslationVector(t.alphabet_cap(), std::move(entries));
}

Rational value_at(const DigitString& d, const Rational& beta) {
    return d.value_at(beta);
}

Rational value_at(const BetaLaurent& p, const Rational& beta) {
    return p.value_at(beta);
}

}  // namespace cantor
