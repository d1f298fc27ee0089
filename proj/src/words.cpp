#include "regseq/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace regseq::words {

namespace {

void require_base(unsigned base) {
    if (base < 2)
        throw std::invalid_argument("base must be at least 2, got " + std::to_string(base));
}

}  // namespace

std::string Word::str() const {
    std::string s;
    s.reserve(digits.size());
    for (auto d : digits) s.push_back(static_cast<char>('0' + d));
    return s;
}

Word word_from_string(std::string_view s, unsigned base) {
    require_base(base);
    Word w{base, {}};
    w.digits.reserve(s.size());
    for (char c : s) {
        if (c < '0' || static_cast<unsigned>(c - '0') >= base)
            throw std::invalid_argument("invalid digit '" + std::string(1, c) + "' for base " +
                                        std::to_string(base));
        w.digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return w;
}

Word to_base(std::uint64_t n, unsigned base) {
    require_base(base);
    Word w{base, {}};
    while (n > 0) {
        w.digits.push_back(static_cast<std::uint8_t>(n % base));
        n /= base;
    }
    std::reverse(w.digits.begin(), w.digits.end());
    return w;
}

std::uint64_t from_base(const Word& w) {
    require_base(w.base);
    std::uint64_t value = 0;
    for (auto d : w.digits) {
        if (d >= w.base)
            throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " +
                                        std::to_string(w.base));
        value = value * w.base + d;
    }
    return value;
}

PairWord pair_encode(std::uint64_t m, std::uint64_t n, unsigned base) {
    require_base(base);
    Word wm = to_base(m, base);
    Word wn = to_base(n, base);
    const std::size_t len = std::max(wm.size(), wn.size());
    PairWord pw{base, {}};
    pw.pairs.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        auto digit_at = [len](const Word& w, std::size_t pos) -> std::uint8_t {
            const std::size_t pad = len - w.size();
            return pos < pad ? std::uint8_t{0} : w.digits[pos - pad];
        };
        pw.pairs.emplace_back(digit_at(wm, i), digit_at(wn, i));
    }
    return pw;
}

std::vector<std::size_t> border_array(std::string_view w) {
    std::vector<std::size_t> b(w.size());
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = b[k - 1];
        if (w[i] == w[k]) ++k;
        b[i] = k;
    }
    return b;
}

bool is_unbordered(std::string_view w) {
    if (w.empty()) throw std::invalid_argument("borderedness of the empty word is undefined");
    return border_array(w).back() == 0;
}

std::string render_symbols(std::string_view w) {
    std::string s;
    s.reserve(w.size());
    for (char c : w) s.push_back(static_cast<char>('0' + c));
    return s;
}

}  // namespace regseq::words
