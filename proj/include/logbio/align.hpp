#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "logbio/recode.hpp"

namespace logbio {

/// Match/mismatch/affine-gap parameters. A gap run of length g costs
/// gap_open + (g-1)*gap_extend: the first gap column pays gap_open.
struct ScoringScheme {
    int match = 1;
    int mismatch = -1;
    int gap_open = -1;
    int gap_extend = -1;

    static ScoringScheme unit() { return {1, -1, -1, -1}; }
    static ScoringScheme evaluation() { return {6, -5, -11, -1}; }
    static ScoringScheme by_name(std::string_view name);  // "unit" | "eval"

    /// match > 0, mismatch < 0, gap_open <= gap_extend < 0.
    void validate() const;
};

/// Summary of one global alignment (its canonical traceback path).
struct AlignmentStats {
    std::int64_t score = 0;
    std::size_t identical = 0;  // columns with equal symbols, no gap
    std::size_t length = 0;     // total columns
    std::size_t gaps = 0;       // gap columns (either row)

    std::size_t mismatches() const { return length - identical - gaps; }
};

struct Alignment {
    std::string aligned_a;  // gapped with '-'
    std::string aligned_b;
    AlignmentStats stats;
};

/// Maximum-score global alignment (affine-gap dynamic programming).
/// Ties are broken deterministically: diagonal over gap-in-b over
/// gap-in-a, both when selecting predecessors and at the final cell.
Alignment align(const BioSequence& a, const BioSequence& b, const ScoringScheme& scheme);

/// Same canonical alignment, stats only (no column strings). This is the
/// clustering inner kernel; align() and align_stats() always agree.
AlignmentStats align_stats(std::string_view a, std::string_view b, const ScoringScheme& scheme);

/// identical / length, in [0,1]. Throws on zero-length alignments.
double similarity(const AlignmentStats& stats);

/// Four-row text rendering of a FULL-mode alignment against the original
/// lines: query / aligned / subject at byte resolution plus a diff row
/// ('X' = differing byte, '-' = gap, ' ' = match).
struct DiffRendering {
    std::string query;
    std::string aligned;
    std::string subject;
    std::string diff;
};

DiffRendering render_diff(const Alignment& alignment, std::string_view a_text,
                          std::string_view b_text);

/// Base-20 packed k-mer codes of a symbol string, sorted (multiset).
std::vector<std::uint64_t> kmer_codes(std::string_view symbols, int k);

/// Size of the multiset intersection of two sorted code vectors.
std::size_t shared_kmer_count(const std::vector<std::uint64_t>& a,
                              const std::vector<std::uint64_t>& b);

/// Minimum number of shared k-mers any pair with similarity >= threshold
/// must exhibit, over shorter length len_min. <= 0 means the bound is
/// uninformative (the filter abstains).
std::int64_t required_shared_kmers(std::size_t len_min, int k, double threshold);

/// Short-word prefilter: false only when the pair provably cannot reach
/// the similarity threshold; abstains (true) when either side is
/// shorter than k.
bool kmer_filter(const BioSequence& a, const BioSequence& b, int k, double threshold);
bool kmer_filter_symbols(std::string_view a, std::string_view b, int k, double threshold);

} // namespace logbio
