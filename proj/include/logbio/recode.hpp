#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "logbio/ingest.hpp"

namespace logbio {

/// The 20 canonical amino-acid letters; position i encodes the value i.
inline constexpr std::string_view kBioAlphabet = "ACDEFGHIKLMNPQRSTVWY";

/// Index of a symbol in kBioAlphabet, or -1.
int symbol_index(char c);

enum class EncodingMode {
    Full,        // lossless: byte b -> symbols (b/20, b%20), 2 per byte
    Compressed,  // lossy: keeps only the remainder symbol, 1 per byte
};

const char* mode_name(EncodingMode mode);
EncodingMode mode_from_name(std::string_view name);  // "full" | "compressed"

struct BioSequence {
    std::size_t source_index = 0;
    EncodingMode mode = EncodingMode::Compressed;
    std::string symbols;
};

/// Re-code raw bytes into the amino-acid alphabet.
std::string recode_bytes(std::string_view text, EncodingMode mode);

/// Re-code one record's homogenized text; throws on empty text.
BioSequence recode(const LogRecord& record, EncodingMode mode);

/// Re-code a whole corpus; records with empty text are rejected.
std::vector<BioSequence> recode_corpus(const std::vector<LogRecord>& records,
                                       EncodingMode mode, bool parallel = true);

/// Invert a FULL-mode symbol string back to the original bytes.
std::string decode_full_symbols(std::string_view symbols);

/// Invert a FULL-mode sequence; refuses COMPRESSED input.
std::string decode_full(const BioSequence& sequence);

/// FASTA with "> {index}x" headers, one unwrapped body line per sequence.
void write_fasta(const std::vector<BioSequence>& sequences, const std::string& path);
std::string fasta_string(const std::vector<BioSequence>& sequences);

/// Parse FASTA as emitted by write_fasta; wrapped body lines are
/// concatenated. The format does not carry the encoding mode, so the
/// caller supplies it.
std::vector<BioSequence> read_fasta(const std::string& path, EncodingMode mode);
std::vector<BioSequence> parse_fasta(std::string_view content, EncodingMode mode);

/// Look up original records for cluster members, in member order.
/// Works for both encoding modes (lookup is by index, never by decoding).
std::vector<LogRecord> retranslate(const std::vector<std::size_t>& members,
                                   const std::vector<LogRecord>& corpus);

} // namespace logbio
