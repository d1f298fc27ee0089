#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regseq/linrep.hpp"
#include "regseq/rational.hpp"
#include "regseq/words.hpp"

namespace regseq::relations {

/// A kernel subsequence n -> g(k^t n + r), named by the t-digit msd-first
/// word y with value r. Leading zeros are meaningful: "01" is g(4n+1).
struct KernelTerm {
    words::Word word;

    std::size_t length() const noexcept { return word.size(); }
    std::uint64_t value() const { return words::from_base(word); }
    /// k^t for the term's length t.
    std::uint64_t modulus() const;
    /// The subsequence argument at n: k^t * n + r.
    std::uint64_t argument(std::uint64_t n) const;

    bool operator==(const KernelTerm&) const = default;
};

KernelTerm term_from_string(std::string_view digits, unsigned base);

/// Claimed linear relation: g over the target equals the combination of the
/// right-hand terms, for all n >= min_n.
struct Identity {
    KernelTerm target;
    std::vector<std::pair<Rational, KernelTerm>> terms;
    std::uint64_t min_n = 0;

    /// e.g. "f(16n) = -2 f(4n) + 3 f(8n)  [n >= 0]"
    std::string render() const;
};

Identity identity_from_json_text(const std::string& text, unsigned base);
std::string identity_to_json_text(const Identity& id);
Identity load_identity(const std::filesystem::path& path, unsigned base);

/// The column functional M_y * w; the empty word gives w itself. The term's
/// value at n is (v * M_{(n)_k}) . functional.
linrep::RatVec functional(const linrep::LinRep& r, const KernelTerm& y);

enum class Mode { FullVector, ZeroPattern, Subspace, Numeric };

struct VerifyMode {
    Mode kind = Mode::FullVector;
    std::size_t depth = 1;  // subspace only

    static VerifyMode full_vector() { return {Mode::FullVector, 0}; }
    static VerifyMode zero_pattern() { return {Mode::ZeroPattern, 0}; }
    static VerifyMode subspace(std::size_t depth) { return {Mode::Subspace, depth}; }
};

std::string mode_name(const VerifyMode& m);

struct VerificationReport {
    std::string mode;      // which mode produced the verdict
    bool verified = false;
    std::uint64_t valid_from = 0;  // n0 from which the symbolic argument applies
    // Range [first, second) of n checked numerically below the symbolic
    // threshold; empty when first == second.
    std::pair<std::uint64_t, std::uint64_t> numeric_residual_checked{0, 0};
    std::uint64_t spot_checked = 0;  // values checked at and above valid_from
    std::optional<std::uint64_t> counterexample;
    std::string detail;
};

/// Symbolic check of one identity: forms the defect vector
/// functional(target) - sum c_i functional(term_i) and tests it under the
/// requested mode. Failure is a verdict, not an error.
VerificationReport verify_symbolic(const linrep::LinRep& r, const Identity& id, VerifyMode mode);

struct VerifyOptions {
    std::size_t max_subspace_depth = 6;
    /// How far to scan for a numeric counterexample when every symbolic mode
    /// fails.
    std::uint64_t counterexample_scan = 64;
    /// Declared values for arguments eval cannot reach (n = 0).
    std::map<std::uint64_t, Rational> base_values;
};

/// Driver: full-vector, then zero-pattern, then subspace of increasing depth.
/// On symbolic success at threshold n0 it checks every n in [min_n, n0)
/// numerically and spot-checks `numeric_extent` values from n0 on.
VerificationReport verify(const linrep::LinRep& r, const Identity& id,
                          std::uint64_t numeric_extent, const VerifyOptions& options = {});

/// A closed system: independent basis subsequences, one identity per
/// dependent subsequence, and enough base values to start the recursion.
struct RecurrenceSystem {
    unsigned base = 2;
    std::vector<KernelTerm> basis_terms;
    std::vector<Identity> identities;
    std::map<std::uint64_t, Rational> base_values;
    bool complete = true;

    std::string render() const;

    static RecurrenceSystem load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;
};

/// Breadth-first search over kernel terms in length-lex order, refining by
/// prepending one low-order digit. A term whose functional is independent
/// (under the mode's projection) joins the basis; a dependent term emits an
/// identity over the basis and is not expanded further.
RecurrenceSystem discover(const linrep::LinRep& r, VerifyMode mode, std::size_t max_len = 16);

/// Memoized top-down evaluation by the system's identities and base values.
/// Throws std::runtime_error naming n when no rule applies.
Rational evaluate_by_recurrences(const RecurrenceSystem& s, std::uint64_t n);

struct CompletenessReport {
    bool complete = false;
    std::vector<std::string> problems;
};

/// Checks residue coverage modulo k^T, strict descent of right-hand
/// arguments, and termination of trial evaluations near the base range.
CompletenessReport check_completeness(const RecurrenceSystem& s);

}  // namespace regseq::relations
