#include "regseq/sequences.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "regseq/words.hpp"

namespace regseq::sequences {

void Dfao::validate() const {
    if (base < 2) throw std::invalid_argument("DFAO base must be at least 2");
    if (state_count == 0) throw std::invalid_argument("DFAO needs at least one state");
    if (initial >= state_count) throw std::invalid_argument("DFAO initial state out of range");
    if (transitions.size() != state_count || output.size() != state_count)
        throw std::invalid_argument("DFAO table sizes disagree with state count");
    for (const auto& row : transitions) {
        if (row.size() != base)
            throw std::invalid_argument("DFAO transition row does not cover every digit");
        for (auto s : row)
            if (s >= state_count) throw std::invalid_argument("DFAO transition target out of range");
    }
    // Canonical representations drop leading zeros, so a DFAO whose initial
    // state moves on digit 0 would give ambiguous values.
    if (transitions[initial][0] != initial)
        throw std::invalid_argument("DFAO rejected: delta(initial, 0) != initial");
}

Dfao Dfao::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open DFAO file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
        Dfao a;
        a.base = j.at("k").get<unsigned>();
        a.state_count = j.at("states").get<std::size_t>();
        a.initial = j.at("initial").get<std::size_t>();
        a.transitions = j.at("transitions").get<std::vector<std::vector<std::size_t>>>();
        a.output = j.at("output").get<std::vector<int>>();
        a.validate();
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed DFAO file " + path.string() + ": " + e.what());
    }
}

void Dfao::save(const std::filesystem::path& path) const {
    validate();
    nlohmann::json j{{"k", base},
                     {"states", state_count},
                     {"initial", initial},
                     {"transitions", transitions},
                     {"output", output}};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write DFAO file: " + path.string());
    out << j.dump(2) << '\n';
}

int dfao_eval(const Dfao& a, std::uint64_t n) {
    std::size_t state = a.initial;
    for (auto d : words::to_base(n, a.base).digits) state = a.transitions[state][d];
    return a.output[state];
}

bool Morphism::prolongable() const noexcept {
    if (seed >= images.size()) return false;
    const std::string& img = images[seed];
    return img.size() >= 2 && static_cast<std::uint8_t>(img.front()) == seed;
}

int thue_morse(std::uint64_t n) {
    return std::popcount(n) & 1;
}

int rudin_shapiro(std::uint64_t n) {
    return std::popcount(n & (n >> 1)) & 1;
}

unsigned nu(unsigned k, std::uint64_t x) {
    if (k < 2) throw std::invalid_argument("nu requires base k >= 2");
    if (x == 0) throw std::invalid_argument("nu(k, 0) is undefined");
    unsigned e = 0;
    while (x % k == 0) {
        x /= k;
        ++e;
    }
    return e;
}

int period_doubling(unsigned k, std::uint64_t n) {
    return nu(k, n + 1) & 1;
}

Morphism phi_k(unsigned k) {
    if (k < 2) throw std::invalid_argument("phi_k requires k >= 2");
    Morphism m;
    m.images.resize(2);
    m.images[0] = std::string(k - 1, '\0') + '\x01';
    m.images[1] = std::string(k, '\0');
    m.seed = 0;
    return m;
}

std::string morphism_prefix(const Morphism& m, std::size_t length) {
    if (!m.prolongable())
        throw std::invalid_argument("morphism is not prolongable at its seed letter");
    std::string s(1, static_cast<char>(m.seed));
    while (s.size() < length) {
        std::string next;
        next.reserve(s.size() * 2);
        for (char c : s) {
            const auto letter = static_cast<std::uint8_t>(c);
            if (letter >= m.images.size() || m.images[letter].empty())
                throw std::invalid_argument("morphism image missing for letter " +
                                            std::to_string(letter));
            next += m.images[letter];
            if (next.size() >= length) break;
        }
        s = std::move(next);
    }
    s.resize(length);
    return s;
}

Sequence Sequence::thue_morse() {
    return Sequence("thue-morse", [](std::size_t len) {
        std::string s(len, '\0');
        for (std::size_t i = 1; i < len; ++i)
            s[i] = (i & 1) ? static_cast<char>(1 - s[i >> 1]) : s[i >> 1];
        return s;
    });
}

Sequence Sequence::rudin_shapiro() {
    return Sequence("rudin-shapiro", [](std::size_t len) {
        std::string s(len, '\0');
        for (std::size_t i = 0; i < len; ++i)
            s[i] = static_cast<char>(sequences::rudin_shapiro(i));
        return s;
    });
}

Sequence Sequence::period_doubling(unsigned k) {
    if (k < 2) throw std::invalid_argument("period-doubling base must be >= 2");
    return Sequence("period-doubling:" + std::to_string(k), [k](std::size_t len) {
        std::string s(len, '\0');
        for (std::size_t i = 0; i < len; ++i)
            s[i] = static_cast<char>(sequences::period_doubling(k, i));
        return s;
    });
}

Sequence Sequence::from_dfao(Dfao a) {
    a.validate();
    return Sequence("dfao", [a = std::move(a)](std::size_t len) {
        std::string s(len, '\0');
        for (std::size_t i = 0; i < len; ++i) s[i] = static_cast<char>(dfao_eval(a, i));
        return s;
    });
}

Sequence Sequence::from_morphism(Morphism m) {
    if (!m.prolongable())
        throw std::invalid_argument("morphism is not prolongable at its seed letter");
    return Sequence("morphism",
                    [m = std::move(m)](std::size_t len) { return morphism_prefix(m, len); });
}

Sequence Sequence::with_flipped_bit(std::size_t pos) const {
    auto gen = gen_;
    return Sequence(name_ + "!flip" + std::to_string(pos), [gen, pos](std::size_t len) {
        std::string s = gen(len);
        if (pos < s.size()) s[pos] = static_cast<char>(1 - s[pos]);
        return s;
    });
}

Sequence parse_sequence(std::string_view spec) {
    if (spec == "thue-morse") return Sequence::thue_morse();
    if (spec == "rudin-shapiro") return Sequence::rudin_shapiro();
    constexpr std::string_view pd = "period-doubling:";
    if (spec.starts_with(pd)) {
        const std::string_view arg = spec.substr(pd.size());
        unsigned k = 0;
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
        if (ec != std::errc{} || ptr != arg.data() + arg.size() || k < 2)
            throw std::invalid_argument("bad period-doubling base in '" + std::string(spec) + "'");
        return Sequence::period_doubling(k);
    }
    throw std::invalid_argument("unknown sequence '" + std::string(spec) + "'");
}

std::string sequence_prefix(std::string_view spec, std::size_t length) {
    return parse_sequence(spec).prefix(length);
}

}  // namespace regseq::sequences
