#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "regseq/rational.hpp"
#include "regseq/words.hpp"

namespace regseq::linrep {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// Linear representation (v, M_0..M_{k-1}, w) of a k-regular sequence over
/// exact rationals: g(n) = v * M_{a_1} * ... * M_{a_i} * w for the canonical
/// base-k digits a_1...a_i of n.
struct LinRep {
    unsigned base = 2;
    std::size_t dim = 0;
    RatVec v;                      // row vector
    std::vector<RatMat> matrices;  // one d x d matrix per digit
    RatVec w;                      // column vector

    void validate() const;

    static LinRep load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;
};

/// v * M_{(n)_k} * w, computed exactly. n = 0 (empty digit product) is out of
/// domain; base values for n = 0 belong to recurrence systems.
Rational eval(const LinRep& r, std::uint64_t n);

/// Product over a literal digit string, no canonicalization. The empty word
/// gives v * w.
Rational eval_word(const LinRep& r, const words::Word& y);

/// eval(r, n) for every n in [1, n_max], sharing prefix products across the
/// tree of canonical words. Index 0 of the result is unused.
std::vector<Rational> eval_range(const LinRep& r, std::uint64_t n_max);

/// Coordinates that can be nonzero in v * M_{(n)_k} for some n >= 1, found by
/// boolean reachability: seed at supp(v), advance once through a nonzero
/// leading digit, then close under all digit matrices. A false coordinate is
/// exactly 0 in every such product.
struct ZeroPattern {
    std::vector<bool> support;
};

ZeroPattern zero_pattern(const LinRep& r);

/// Row space maintained in fully reduced echelon form. Insertions are
/// processed one row at a time in caller order, which makes ranks and
/// extracted coefficients deterministic. Each echelon row also carries its
/// expression over the inserted independent rows, so membership tests can
/// report exact coefficients over the original insertions.
class RowBasis {
  public:
    explicit RowBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return echelon_.size(); }

    /// Adds the row if it is independent of the current span. Returns true
    /// when added.
    bool insert(const RatVec& row);

    bool contains(const RatVec& row) const;

    /// If row is in the span, the coefficients expressing it over the
    /// inserted independent rows (in insertion order); otherwise nullopt.
    std::optional<RatVec> coefficients(const RatVec& row) const;

  private:
    RatVec reduce(const RatVec& row, RatVec* alphas) const;

    std::size_t dim_;
    std::vector<RatVec> echelon_;  // pivot entries normalized to 1
    std::vector<std::size_t> pivot_;
    std::vector<RatVec> combo_;  // echelon row i = sum_j combo_[i][j] * original_j
};

/// Basis of span{ v * M_x : x canonical, |x| >= depth }, computed by seeding
/// with the words of length exactly `depth` and closing the span under right
/// multiplication by every digit matrix. Certifies statements for all
/// n >= k^(depth-1).
struct ReachableSubspace {
    std::size_t depth = 0;
    std::vector<RatVec> basis;  // independent generators, insertion order
    RowBasis span;
};

ReachableSubspace reachable_subspace(const LinRep& r, std::size_t depth);

/// Bundled 23-dimensional base-2 representation of the unbordered-factor
/// count of the Thue-Morse sequence (tm23.json).
LinRep tm_fixture();

/// Bundled 2x2 rational demonstration representation (example2x2.json).
LinRep example2x2_fixture();

// Exact row * matrix and matrix * column products.
RatVec row_times_matrix(const RatVec& row, const RatMat& m);
RatVec matrix_times_col(const RatMat& m, const RatVec& col);
Rational dot(const RatVec& a, const RatVec& b);

}  // namespace regseq::linrep
