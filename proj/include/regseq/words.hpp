#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace regseq::words {

/// Digit string over {0,...,base-1}, most significant digit first.
/// The canonical representation of 0 is the empty word.
struct Word {
    unsigned base = 2;
    std::vector<std::uint8_t> digits;

    bool empty() const noexcept { return digits.empty(); }
    std::size_t size() const noexcept { return digits.size(); }

    /// No leading zero unless empty.
    bool canonical() const noexcept { return digits.empty() || digits.front() != 0; }

    /// Digits rendered as characters, e.g. "101011". Supports base <= 10.
    std::string str() const;

    bool operator==(const Word&) const = default;
};

/// Parses a digit string such as "101011" into a Word. Rejects characters
/// that are not digits below `base`.
Word word_from_string(std::string_view s, unsigned base);

/// Canonical msd-first base-k representation of n; empty for n = 0.
Word to_base(std::uint64_t n, unsigned base);

/// Value of a digit string; leading zeros are ignored.
std::uint64_t from_base(const Word& w);

/// Parallel base-k encoding of a pair (m, n): both representations are
/// left-padded with zeros to a common length.
struct PairWord {
    unsigned base = 2;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;

    bool operator==(const PairWord&) const = default;
};

PairWord pair_encode(std::uint64_t m, std::uint64_t n, unsigned base);

/// Border array (failure function): entry i is the length of the longest
/// proper border of the prefix of length i+1. Symbols are raw bytes.
std::vector<std::size_t> border_array(std::string_view w);

/// True iff no nonempty word other than w itself is both a prefix and a
/// suffix of w. The empty word is rejected.
bool is_unbordered(std::string_view w);

/// Renders a byte word (symbols 0,1,...) as printable characters.
std::string render_symbols(std::string_view w);

}  // namespace regseq::words
