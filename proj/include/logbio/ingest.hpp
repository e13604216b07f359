#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace logbio {

/// One homogenized log line. `index` is the 0-based line number in the
/// source file and stays stable through the whole pipeline; it is what
/// cluster members and FASTA headers refer back to.
struct LogRecord {
    std::size_t index = 0;
    std::string raw;   // original bytes, trailing newline stripped
    std::string text;  // homogenized bytes (== raw unless a rule matched)
};

/// One timestamp rewrite rule. Patterns are written with the tokens
/// YYYY, Mon, MM, DD, HH, SS (everything else is literal), e.g.
///   pattern "DD/Mon/YYYY:HH:MM:SS"  format "YYYY-MM-DDTHH:MM:SS"
/// turns "30/Sep/2014:00:22:05" into "2014-09-30T00:22:05".
/// When a pattern contains Mon, its MM tokens mean minutes; otherwise
/// the first MM is the month and the second the minute.
struct TimestampRule {
    std::string pattern;
    std::string format;
};

struct HomogenizeConfig {
    std::vector<TimestampRule> rules;  // applied in order, first match wins
    bool drop_empty = true;
};

struct Corpus {
    std::vector<LogRecord> records;
    std::size_t dropped_empty = 0;
    std::size_t total_lines = 0;
};

/// Read a newline-delimited log file ("\n" or "\r\n"). Empty lines are
/// dropped and counted; indices equal source line numbers. Throws on
/// I/O failure or when no non-empty line remains.
Corpus read_corpus(const std::string& path, bool drop_empty = true);

/// Rule table compiled once at load time; malformed rules throw here,
/// never per line.
class Homogenizer {
public:
    explicit Homogenizer(const HomogenizeConfig& config);

    /// text = raw with the first matching rule applied (once); raw if none.
    std::string apply(const std::string& raw) const;

    void apply_all(std::vector<LogRecord>& records) const;

private:
    struct CompiledRule;
    std::vector<CompiledRule> rules_;

public:
    ~Homogenizer();
    Homogenizer(Homogenizer&&) noexcept;
    Homogenizer& operator=(Homogenizer&&) noexcept;
};

/// Convenience wrapper over Homogenizer for one record.
LogRecord homogenize(const LogRecord& record, const HomogenizeConfig& config);

} // namespace logbio
