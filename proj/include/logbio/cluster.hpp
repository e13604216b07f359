#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "logbio/align.hpp"
#include "logbio/recode.hpp"

namespace logbio {

struct ClusterParams {
    double threshold = 0.90;  // similarity threshold x, in (0,1)
    ScoringScheme scheme = ScoringScheme::evaluation();
    int k = 5;                // short-word filter length, 2..8
    bool best_match = true;   // assign to most similar cluster, not first
    bool use_filter = true;

    void validate() const;
};

struct Cluster {
    std::size_t id = 0;               // creation order
    BioSequence representative;       // first (longest) member
    std::vector<std::size_t> members; // source indices, assignment order

    std::size_t size() const { return members.size(); }
};

struct ClusterModel {
    std::vector<Cluster> clusters;  // in id order
    ClusterParams params;
    EncodingMode mode = EncodingMode::Compressed;
    std::size_t corpus_size = 0;
};

/// Greedy incremental clustering. Sequences are processed longest first
/// (ties: ascending source index); each either joins the best eligible
/// existing cluster or founds a new one as representative. Eligibility
/// against a representative ll for an incoming line sl requires
///   len(sl) >= x*len(ll),
///   similarity >= x,
///   alignment length >= len(sl) and >= x*len(ll).
/// Candidate alignments are pruned by the short-word bound and evaluated
/// in parallel; the result is identical to cluster_greedy_reference.
ClusterModel cluster_greedy(const std::vector<BioSequence>& sequences,
                            const ClusterParams& params, bool parallel = true);

/// Plain serial implementation, no index, no pruning. Kept as the
/// reference the optimized kernel is tested and benchmarked against.
ClusterModel cluster_greedy_reference(const std::vector<BioSequence>& sequences,
                                      const ClusterParams& params);

struct ClassifyResult {
    bool outlier = true;
    std::size_t cluster_id = 0;
    double similarity = 0.0;
};

/// Sort one line into an existing model (read-only): same candidate and
/// eligibility rules as clustering, against representatives only.
ClassifyResult classify(const BioSequence& sequence, const ClusterModel& model);

std::vector<ClassifyResult> classify_batch(const std::vector<BioSequence>& sequences,
                                           const ClusterModel& model, bool parallel = true);

/// Append a new singleton cluster with the sequence as representative.
void adopt_outlier(ClusterModel& model, const BioSequence& sequence);

/// Versioned flat-file model persistence (deterministic byte-for-byte).
std::string model_to_string(const ClusterModel& model);
ClusterModel model_from_string(std::string_view content);
void save_model(const ClusterModel& model, const std::string& path);
ClusterModel load_model(const std::string& path);

/// TSV report: cluster_id, size, representative_index, member_indices
/// (comma-joined), sorted by size descending then id.
std::string cluster_report_tsv(const ClusterModel& model);

} // namespace logbio
