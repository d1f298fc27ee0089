#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "regseq/sequences.hpp"

namespace regseq::factors {

/// Thrown when the doubling policy hits the prefix cap before the factor set
/// stabilizes. The caller gets no count rather than a possibly low one.
class InconclusiveEnumeration : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ScanOptions {
    /// Hard cap on the scanned prefix length.
    std::size_t max_prefix = std::size_t{1} << 24;
};

struct FactorEntry {
    std::string word;       // raw symbol bytes
    std::size_t first_pos;  // leftmost occurrence in the scanned prefix
};

/// All distinct factors of one length, each with its first occurrence.
/// Saturation means a prefix doubling reproduced the identical factor set.
struct FactorIndex {
    std::size_t length = 0;
    std::vector<FactorEntry> factors;  // ordered by first occurrence
    std::size_t prefix_length_used = 0;
    bool saturated = false;
};

/// Scans a prefix grown by the saturation policy: start at max(64, 8n),
/// double until two successive scans agree, fail past options.max_prefix.
FactorIndex distinct_factors(const sequences::Sequence& seq, std::size_t n,
                             const ScanOptions& options = {});

std::size_t count_unbordered(const sequences::Sequence& seq, std::size_t n,
                             const ScanOptions& options = {});

/// Positions i such that seq[i..i+n-1] is unbordered and first occurs at i.
std::vector<std::size_t> novel_unbordered_positions(const sequences::Sequence& seq, std::size_t n,
                                                    const ScanOptions& options = {});

/// The unbordered factor words themselves, in first-occurrence order.
std::vector<std::string> unbordered_factors(const sequences::Sequence& seq, std::size_t n,
                                            const ScanOptions& options = {});

/// One scan at a fixed prefix length, no saturation policy. Exposed for the
/// saturation soundness checks.
FactorIndex scan_prefix(const sequences::Sequence& seq, std::size_t n, std::size_t prefix_length);

}  // namespace regseq::factors
