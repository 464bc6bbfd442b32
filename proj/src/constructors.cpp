#include "cantor/constructors.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "cantor/admissibility.hpp"

namespace cantor {

TranslationVector construct_admissible(int m, int alphabet_cap) {
    if (m < 1 || alphabet_cap < 1) throw std::invalid_argument("need m >= 1 and N >= 1");
    const int N = alphabet_cap;
    if (m == 1) {
        return TranslationVector(N, {DigitString({}, N), DigitString({1}, N)});
    }

    int ell = 0;
    while ((1 << (ell + 1)) <= m) ++ell;  // 2^ell <= m < 2^(ell+1)
    const int width = ell + 1;
    const std::uint64_t full = (std::uint64_t(1) << width) - 1;

    // S starts with the lexicographically smaller representative of each
    // complement pair (leading bit 0, includes 0^width), then takes
    // complements in ascending code order beginning with 1^width.
    std::vector<std::uint64_t> members;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << ell); ++code)
        members.push_back(code);
    std::size_t want = static_cast<std::size_t>(m) + 1;
    if (members.size() < want) members.push_back(full);
    for (std::uint64_t code = std::uint64_t(1) << ell; members.size() < want; ++code)
        if (code != full) members.push_back(code);

    std::vector<DigitString> entries;
    entries.reserve(want);
    for (std::uint64_t code : members) {
        std::vector<int> digits(width, 0);
        for (int k = 1; k <= width; ++k)
            digits[k - 1] = static_cast<int>((code >> (width - k)) & 1);
        entries.emplace_back(std::move(digits), N);
    }
    std::sort(entries.begin(), entries.end(), [](const DigitString& a, const DigitString& b) {
        return digit_compare(a, b) == std::strong_ordering::less;
    });
    return TranslationVector(N, std::move(entries));
}

bool corollary_m1(const DigitString& t1, int alphabet_cap) {
    if (t1.is_zero()) throw std::invalid_argument("t1 must be nonzero");
    int nonzero = 0;
    int value = 0;
    for (int k = 1; k <= t1.length(); ++k) {
        if (t1.digit(k) != 0) {
            ++nonzero;
            value = t1.digit(k);
        }
    }
    return nonzero == 1 && value <= (alphabet_cap + 1) / 2;
}

std::vector<DigitString> all_digit_strings(int alphabet_cap, int tau_max) {
    const int alphabet = alphabet_cap + 1;
    std::uint64_t count = universe_size(alphabet, tau_max);
    std::vector<DigitString> out;
    out.reserve(count - 1);
    for (std::uint64_t code = 1; code < count; ++code) {
        std::vector<int> digits(tau_max);
        std::uint64_t rest = code;
        for (int k = 0; k < tau_max; ++k) {
            digits[k] = static_cast<int>(rest % alphabet);
            rest /= alphabet;
        }
        out.emplace_back(std::move(digits), alphabet_cap);
    }
    std::sort(out.begin(), out.end(), [](const DigitString& a, const DigitString& b) {
        return digit_compare(a, b) == std::strong_ordering::less;
    });
    return out;
}

namespace {

std::uint64_t tuple_count(std::uint64_t pool, int m, std::uint64_t cap) {
    // binomial(pool, m), saturating at cap
    std::uint64_t count = 1;
    for (int i = 0; i < m; ++i) {
        if (count > cap) return cap + 1;
        count = count * (pool - i) / (i + 1);
    }
    return count;
}

void enumerate_from(const std::vector<DigitString>& pool, int alphabet_cap, int m,
                    std::size_t first, std::vector<std::size_t>& chosen,
                    std::vector<TranslationVector>& out) {
    if (static_cast<int>(chosen.size()) == m) {
        std::vector<DigitString> entries{DigitString({}, alphabet_cap)};
        for (auto idx : chosen) entries.push_back(pool[idx]);
        TranslationVector t(alphabet_cap, std::move(entries));
        if (check_admissible(t).admissible) out.push_back(std::move(t));
        return;
    }
    for (std::size_t i = first; i + (m - chosen.size()) <= pool.size(); ++i) {
        chosen.push_back(i);
        enumerate_from(pool, alphabet_cap, m, i + 1, chosen, out);
        chosen.pop_back();
    }
}

}  // namespace

std::vector<TranslationVector> enumerate_admissible(int m, int alphabet_cap, int tau_max,
                                                    std::uint64_t budget, int jobs) {
    if (m < 1 || tau_max < 1) throw std::invalid_argument("need m >= 1 and tau_max >= 1");
    auto pool = all_digit_strings(alphabet_cap, tau_max);
    if (tuple_count(pool.size(), m, budget) > budget)
        throw BudgetError("candidate tuple count exceeds budget");

    jobs = std::max(1, jobs);
    if (jobs == 1 || pool.size() < 2) {
        std::vector<TranslationVector> out;
        std::vector<std::size_t> chosen;
        enumerate_from(pool, alphabet_cap, m, 0, chosen, out);
        return out;
    }

    // Partition by the first chosen index; results merge in canonical order.
    std::vector<std::future<std::vector<TranslationVector>>> futures;
    int workers = std::min<int>(jobs, static_cast<int>(pool.size()));
    for (int w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            std::vector<TranslationVector> local;
            std::vector<std::size_t> chosen;
            for (std::size_t first = w; first < pool.size(); first += workers) {
                chosen.push_back(first);
                enumerate_from(pool, alphabet_cap, m, first + 1, chosen, local);
                chosen.pop_back();
            }
            return local;
        }));
    }
    std::vector<std::vector<TranslationVector>> partial;
    for (auto& f : futures) partial.push_back(f.get());
    // Round-robin partition preserved per-worker order; merge by first-entry
    // position in the pool, which is the canonical tuple order.
    std::vector<TranslationVector> out;
    std::vector<std::size_t> cursor(partial.size(), 0);
    for (std::size_t first = 0; first < pool.size(); ++first) {
        auto& bucket = partial[first % workers];
        auto& pos = cursor[first % workers];
        while (pos < bucket.size() &&
               digit_compare(bucket[pos].entry(1), pool[first]) == std::strong_ordering::equal) {
            out.push_back(bucket[pos]);
            ++pos;
        }
    }
    return out;
}

}  // namespace cantor
