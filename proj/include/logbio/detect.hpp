#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logbio/cluster.hpp"

namespace logbio {

/// Clusters of size <= min_size, size ascending then id. min_size 1 is
/// the operating definition of an outlier.
std::vector<Cluster> detect_outliers(const ClusterModel& model, std::size_t min_size = 1);

struct OutlierReport {
    double threshold = 0.0;
    std::size_t cluster_count = 0;
    std::size_t corpus_size = 0;
    std::vector<std::size_t> outlier_indices;    // singleton members, ascending
    std::size_t outlier_count = 0;
    std::vector<std::size_t> detected_targets;   // targets among outliers
    std::size_t fp = 0;                          // outliers not in the target set
    double fpr = 0.0;                            // fp / corpus_size
};

/// Partition singleton outliers into detected targets and false
/// positives. Throws if a target index is not part of the model.
OutlierReport evaluate(const ClusterModel& model, const std::set<std::size_t>& targets);

/// FPR with 3 significant digits, e.g. "2.89e-05".
std::string format_fpr(std::size_t fp, std::size_t corpus_size);

struct SweepParams {
    double from = 0.85;
    double to = 0.99;
    double step = 0.01;
    bool require_all = true;  // all targets must be detected (vs any)
};

struct SweepResult {
    std::vector<OutlierReport> reports;              // one per threshold, ascending
    std::optional<double> min_detect_threshold;      // lowest threshold detecting the targets
    bool require_all = true;
};

/// Cluster the corpus at every threshold in [from, to] and evaluate each
/// model against the target set.
SweepResult sweep(const std::vector<BioSequence>& sequences,
                  const std::set<std::size_t>& targets,
                  const SweepParams& sweep_params, const ClusterParams& base);

bool report_detected(const OutlierReport& report, const std::set<std::size_t>& targets,
                     bool require_all);

/// threshold, clusters, outliers, fp, fpr, detected(0/1)
std::string sweep_tsv(const SweepResult& result, const std::set<std::size_t>& targets);
std::string sweep_json(const SweepResult& result, const std::set<std::size_t>& targets);

struct BenchRow {
    std::size_t lines = 0;
    EncodingMode mode = EncodingMode::Compressed;
    double recode_s = 0.0;
    double cluster_s = 0.0;
    double retranslate_s = 0.0;
    double total_s = 0.0;
    double lines_per_s = 0.0;
    std::size_t clusters = 0;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

struct BenchResult {
    std::vector<BenchRow> rows;
    std::vector<std::pair<EncodingMode, LinearFit>> fits;  // total time vs lines, per mode
};

/// Time the recode / cluster / retranslate stages per corpus size and
/// mode. corpus_source delivers the first n lines of the subject corpus.
BenchResult bench(const std::vector<std::size_t>& sizes,
                  const std::vector<EncodingMode>& modes, const ClusterParams& params,
                  const std::function<std::vector<LogRecord>(std::size_t)>& corpus_source);

std::string bench_tsv(const BenchResult& result);
std::string bench_json(const BenchResult& result);

} // namespace logbio
