#include "regseq/factors.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>

#include "regseq/words.hpp"

namespace regseq::factors {

namespace {

bool same_factor_set(const FactorIndex& a, const FactorIndex& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        if (a.factors[i].word != b.factors[i].word) return false;
    return true;
}

}  // namespace

FactorIndex scan_prefix(const sequences::Sequence& seq, std::size_t n, std::size_t prefix_length) {
    if (n == 0) throw std::invalid_argument("factor length must be positive");
    FactorIndex index;
    index.length = n;
    index.prefix_length_used = prefix_length;
    if (prefix_length < n) return index;

    const std::string prefix = seq.prefix(prefix_length);
    std::unordered_map<std::string_view, std::size_t> first_pos;
    first_pos.reserve(prefix_length / 4 + 16);
    for (std::size_t i = 0; i + n <= prefix.size(); ++i)
        first_pos.try_emplace(std::string_view(prefix).substr(i, n), i);

    index.factors.reserve(first_pos.size());
    for (const auto& [word, pos] : first_pos)
        index.factors.push_back(FactorEntry{std::string(word), pos});
    std::sort(index.factors.begin(), index.factors.end(),
              [](const FactorEntry& a, const FactorEntry& b) { return a.first_pos < b.first_pos; });
    return index;
}

FactorIndex distinct_factors(const sequences::Sequence& seq, std::size_t n,
                             const ScanOptions& options) {
    if (n == 0) throw std::invalid_argument("factor length must be positive");
    std::size_t prefix = std::max<std::size_t>(64, 8 * n);
    FactorIndex current = scan_prefix(seq, n, prefix);
    while (true) {
        const std::size_t next_len = prefix * 2;
        if (next_len > options.max_prefix)
            throw InconclusiveEnumeration(
                "factor set for length " + std::to_string(n) + " of " + seq.name() +
                " did not stabilize within prefix cap " + std::to_string(options.max_prefix));
        FactorIndex next = scan_prefix(seq, n, next_len);
        if (same_factor_set(current, next)) {
            next.saturated = true;
            return next;
        }
        current = std::move(next);
        prefix = next_len;
    }
}

std::size_t count_unbordered(const sequences::Sequence& seq, std::size_t n,
                             const ScanOptions& options) {
    const FactorIndex index = distinct_factors(seq, n, options);
    std::size_t count = 0;
    for (const auto& f : index.factors)
        if (words::is_unbordered(f.word)) ++count;
    return count;
}

std::vector<std::size_t> novel_unbordered_positions(const sequences::Sequence& seq, std::size_t n,
                                                    const ScanOptions& options) {
    const FactorIndex index = distinct_factors(seq, n, options);
    std::vector<std::size_t> positions;
    for (const auto& f : index.factors)
        if (words::is_unbordered(f.word)) positions.push_back(f.first_pos);
    return positions;
}

std::vector<std::string> unbordered_factors(const sequences::Sequence& seq, std::size_t n,
                                            const ScanOptions& options) {
    const FactorIndex index = distinct_factors(seq, n, options);
    std::vector<std::string> out;
    for (const auto& f : index.factors)
        if (words::is_unbordered(f.word)) out.push_back(f.word);
    return out;
}

}  // namespace regseq::factors
