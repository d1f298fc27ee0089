#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace regseq::sequences {

/// Deterministic finite automaton with output. Reading the canonical base-k
/// digits of n (msd first) from the initial state and applying the output map
/// to the final state yields the nth term of the generated sequence.
///
/// Loading validates that delta(initial, 0) = initial, so evaluation is
/// insensitive to leading zeros.
struct Dfao {
    unsigned base = 2;
    std::size_t state_count = 0;
    std::size_t initial = 0;
    std::vector<std::vector<std::size_t>> transitions;  // [state][digit]
    std::vector<int> output;                            // [state]

    void validate() const;

    static Dfao load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;
};

int dfao_eval(const Dfao& a, std::uint64_t n);

/// Letter-to-word substitution over a byte alphabet. `images[c]` is the image
/// of letter c. Prolongable when images[seed] starts with seed and has
/// length >= 2, which guarantees a unique fixed point starting with seed.
struct Morphism {
    std::vector<std::string> images;
    std::uint8_t seed = 0;

    bool prolongable() const noexcept;
};

int thue_morse(std::uint64_t n);
int rudin_shapiro(std::uint64_t n);

/// Exponent of the largest power of k dividing x (x >= 1).
unsigned nu(unsigned k, std::uint64_t x);

/// nu_k(n+1) mod 2.
int period_doubling(unsigned k, std::uint64_t n);

/// The morphism 0 -> 0^{k-1} 1, 1 -> 0^k whose fixed point is the base-k
/// period-doubling sequence.
Morphism phi_k(unsigned k);

/// First `length` letters of the fixed point of m starting with m.seed.
std::string morphism_prefix(const Morphism& m, std::size_t length);

/// Uniform handle on a sequence generator. Prefixes are materialized eagerly
/// as byte strings (symbol values, not characters).
class Sequence {
  public:
    Sequence(std::string name, std::function<std::string(std::size_t)> gen)
        : name_(std::move(name)), gen_(std::move(gen)) {}

    const std::string& name() const noexcept { return name_; }
    std::string prefix(std::size_t length) const { return gen_(length); }

    static Sequence thue_morse();
    static Sequence rudin_shapiro();
    static Sequence period_doubling(unsigned k);
    static Sequence from_dfao(Dfao a);
    static Sequence from_morphism(Morphism m);

    /// Returns a copy whose generated prefix has the bit at `pos` flipped.
    /// Used by fault-injection self-tests.
    Sequence with_flipped_bit(std::size_t pos) const;

  private:
    std::string name_;
    std::function<std::string(std::size_t)> gen_;
};

/// Resolves a builtin name: "thue-morse" | "rudin-shapiro" |
/// "period-doubling:<k>". Throws std::invalid_argument on anything else.
Sequence parse_sequence(std::string_view spec);

std::string sequence_prefix(std::string_view spec, std::size_t length);

}  // namespace regseq::sequences
