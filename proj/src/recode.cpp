#include "logbio/recode.hpp"

#include <array>
#include <charconv>
#include <unordered_map>

#include "logbio/common.hpp"

namespace logbio {

namespace {

constexpr std::array<int, 256> build_symbol_index() {
    std::array<int, 256> table{};
    for (auto& v : table) {
        v = -1;
    }
    for (int i = 0; i < 20; ++i) {
        table[static_cast<unsigned char>(kBioAlphabet[i])] = i;
    }
    return table;
}

constexpr std::array<int, 256> kSymbolIndex = build_symbol_index();

} // namespace

int symbol_index(char c) {
    return kSymbolIndex[static_cast<unsigned char>(c)];
}

const char* mode_name(EncodingMode mode) {
    return mode == EncodingMode::Full ? "full" : "compressed";
}

EncodingMode mode_from_name(std::string_view name) {
    if (name == "full") {
        return EncodingMode::Full;
    }
    if (name == "compressed") {
        return EncodingMode::Compressed;
    }
    throw Error("unknown encoding mode: " + std::string(name));
}

std::string recode_bytes(std::string_view text, EncodingMode mode) {
    std::string out;
    if (mode == EncodingMode::Full) {
        out.reserve(text.size() * 2);
        for (unsigned char b : text) {
            out.push_back(kBioAlphabet[b / 20]);
            out.push_back(kBioAlphabet[b % 20]);
        }
    } else {
        out.reserve(text.size());
        for (unsigned char b : text) {
            out.push_back(kBioAlphabet[b % 20]);
        }
    }
    return out;
}

BioSequence recode(const LogRecord& record, EncodingMode mode) {
    if (record.text.empty()) {
        throw Error("empty line (index " + std::to_string(record.index) + ")");
    }
    return {record.index, mode, recode_bytes(record.text, mode)};
}

std::vector<BioSequence> recode_corpus(const std::vector<LogRecord>& records,
                                       EncodingMode mode, bool parallel) {
    std::vector<BioSequence> out(records.size());
    const std::int64_t n = static_cast<std::int64_t>(records.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            recode(records[static_cast<std::size_t>(i)], mode);
    }
    return out;
}

std::string decode_full_symbols(std::string_view symbols) {
    if (symbols.size() % 2 != 0) {
        throw Error("corrupt full-mode sequence: odd length");
    }
    std::string out;
    out.reserve(symbols.size() / 2);
    for (std::size_t i = 0; i < symbols.size(); i += 2) {
        int hi = symbol_index(symbols[i]);
        int lo = symbol_index(symbols[i + 1]);
        if (hi < 0 || lo < 0) {
            throw Error("corrupt full-mode sequence: symbol outside alphabet");
        }
        int value = hi * 20 + lo;
        if (value > 255) {
            throw Error("corrupt full-mode sequence: pair value " +
                        std::to_string(value) + " > 255");
        }
        out.push_back(static_cast<char>(static_cast<unsigned char>(value)));
    }
    return out;
}

std::string decode_full(const BioSequence& sequence) {
    if (sequence.mode != EncodingMode::Full) {
        throw Error("lossy mode is not invertible");
    }
    return decode_full_symbols(sequence.symbols);
}

std::string fasta_string(const std::vector<BioSequence>& sequences) {
    std::unordered_map<std::size_t, bool> seen;
    seen.reserve(sequences.size());
    std::string out;
    for (const auto& seq : sequences) {
        if (!seen.emplace(seq.source_index, true).second) {
            throw Error("duplicate source index in FASTA output: " +
                        std::to_string(seq.source_index));
        }
        out += "> ";
        out += std::to_string(seq.source_index);
        out += "x\n";
        out += seq.symbols;
        out += '\n';
    }
    return out;
}

void write_fasta(const std::vector<BioSequence>& sequences, const std::string& path) {
    write_file_atomic(path, fasta_string(sequences));
}

std::vector<BioSequence> parse_fasta(std::string_view content, EncodingMode mode) {
    std::vector<BioSequence> out;
    bool have_current = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        std::size_t eol = content.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = content.size();
        }
        std::string_view line = content.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        ++line_no;
        const bool at_end = eol >= content.size();
        pos = eol + 1;
        if (line.empty()) {
            if (at_end) {
                break;
            }
            continue;
        }
        if (line.front() == '>') {
            // strict header: "> <digits>x"
            std::string_view rest = line.substr(1);
            if (rest.empty() || rest.front() != ' ') {
                throw Error("FASTA parse error at line " + std::to_string(line_no) +
                            ": expected \"> <index>x\"");
            }
            rest.remove_prefix(1);
            if (rest.size() < 2 || rest.back() != 'x') {
                throw Error("FASTA parse error at line " + std::to_string(line_no) +
                            ": expected \"> <index>x\"");
            }
            std::string_view digits = rest.substr(0, rest.size() - 1);
            std::size_t index = 0;
            auto [ptr, ec] = std::from_chars(digits.begin(), digits.end(), index);
            if (ec != std::errc() || ptr != digits.end()) {
                throw Error("FASTA parse error at line " + std::to_string(line_no) +
                            ": bad index \"" + std::string(digits) + "\"");
            }
            out.push_back({index, mode, ""});
            have_current = true;
        } else {
            if (!have_current) {
                throw Error("FASTA parse error at line " + std::to_string(line_no) +
                            ": sequence data before any header");
            }
            for (char c : line) {
                if (symbol_index(c) < 0) {
                    throw Error("FASTA parse error at line " + std::to_string(line_no) +
                                ": symbol '" + std::string(1, c) + "' outside alphabet");
                }
            }
            out.back().symbols.append(line);  // wrapped bodies concatenate
        }
        if (at_end) {
            break;
        }
    }
    return out;
}

std::vector<BioSequence> read_fasta(const std::string& path, EncodingMode mode) {
    return parse_fasta(read_file(path), mode);
}

std::vector<LogRecord> retranslate(const std::vector<std::size_t>& members,
                                   const std::vector<LogRecord>& corpus) {
    std::unordered_map<std::size_t, const LogRecord*> by_index;
    by_index.reserve(corpus.size());
    for (const auto& rec : corpus) {
        by_index.emplace(rec.index, &rec);
    }
    std::vector<LogRecord> out;
    out.reserve(members.size());
    for (std::size_t idx : members) {
        auto it = by_index.find(idx);
        if (it == by_index.end()) {
            throw Error("unknown source index: " + std::to_string(idx));
        }
        out.push_back(*it->second);
    }
    return out;
}

} // namespace logbio
