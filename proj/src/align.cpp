#include "logbio/align.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "logbio/common.hpp"

namespace logbio {

ScoringScheme ScoringScheme::by_name(std::string_view name) {
    if (name == "unit") {
        return unit();
    }
    if (name == "eval") {
        return evaluation();
    }
    throw Error("unknown scoring scheme: " + std::string(name));
}

void ScoringScheme::validate() const {
    if (match <= 0 || mismatch >= 0 || gap_extend >= 0 || gap_open > gap_extend) {
        throw Error("invalid scoring scheme: need match > 0, mismatch < 0, "
                    "gap_open <= gap_extend < 0");
    }
}

namespace {

constexpr std::int32_t kNegInf = std::numeric_limits<std::int32_t>::min() / 4;

// DP states. M ends in a diagonal column, X in a gap-in-b column
// (consumes a), Y in a gap-in-a column (consumes b). Ties are broken by
// state order M > X > Y everywhere, which realizes the documented
// "diagonal over gap-in-b over gap-in-a" rule.
enum State : int { kM = 0, kX = 1, kY = 2 };

// Per-state path stats packed as (diag_columns << 32) | identical.
constexpr std::uint64_t kDiagOne = std::uint64_t{1} << 32;

struct Row {
    std::vector<std::int32_t> sm, sx, sy;
    std::vector<std::uint64_t> tm, tx, ty;

    explicit Row(std::size_t width)
        : sm(width), sx(width), sy(width), tm(width), tx(width), ty(width) {}
};

inline int pick3(std::int32_t m, std::int32_t x, std::int32_t y, std::int32_t& best) {
    // first listed wins ties
    int state = kM;
    best = m;
    if (x > best) {
        best = x;
        state = kX;
    }
    if (y > best) {
        best = y;
        state = kY;
    }
    return state;
}

struct DpResult {
    AlignmentStats stats;
    int final_state = kM;
};

// Core Gotoh recurrence. When preds is non-null it receives one byte per
// cell: bits 0-1 the predecessor state of M, 2-3 of X, 4-5 of Y.
DpResult run_dp(std::string_view a, std::string_view b, const ScoringScheme& sc,
                std::vector<std::uint8_t>* preds) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    const std::int32_t open = sc.gap_open;
    const std::int32_t extend = sc.gap_extend;
    const std::int32_t match = sc.match;
    const std::int32_t mismatch = sc.mismatch;
    const std::size_t width = m + 1;

    if (preds) {
        preds->assign((n + 1) * width, 0);
    }

    Row prev(width);
    Row cur(width);

    // row 0: only Y (gap in a) is reachable for j > 0
    prev.sm[0] = 0;
    prev.sx[0] = kNegInf;
    prev.sy[0] = kNegInf;
    prev.tm[0] = prev.tx[0] = prev.ty[0] = 0;
    for (std::size_t j = 1; j <= m; ++j) {
        prev.sm[j] = kNegInf;
        prev.sx[j] = kNegInf;
        prev.sy[j] = open + static_cast<std::int32_t>(j - 1) * extend;
        prev.tm[j] = prev.tx[j] = prev.ty[j] = 0;
        if (preds) {
            (*preds)[j] = static_cast<std::uint8_t>((j == 1 ? kM : kY) << 4);
        }
    }

    for (std::size_t i = 1; i <= n; ++i) {
        const char ai = a[i - 1];
        cur.sm[0] = kNegInf;
        cur.sy[0] = kNegInf;
        cur.sx[0] = open + static_cast<std::int32_t>(i - 1) * extend;
        cur.tm[0] = cur.tx[0] = cur.ty[0] = 0;
        if (preds) {
            (*preds)[i * width] = static_cast<std::uint8_t>((i == 1 ? kM : kX) << 2);
        }

        const std::int32_t* psm = prev.sm.data();
        const std::int32_t* psx = prev.sx.data();
        const std::int32_t* psy = prev.sy.data();
        const std::uint64_t* ptm = prev.tm.data();
        const std::uint64_t* ptx = prev.tx.data();
        const std::uint64_t* pty = prev.ty.data();

        std::uint8_t* pred_row = preds ? preds->data() + i * width : nullptr;

        for (std::size_t j = 1; j <= m; ++j) {
            const bool eq = ai == b[j - 1];
            const std::int32_t sub = eq ? match : mismatch;

            std::int32_t best;
            // M from the diagonal cell (i-1, j-1)
            int pm = pick3(psm[j - 1], psx[j - 1], psy[j - 1], best);
            const std::int32_t m_score = best + sub;
            const std::uint64_t m_stats =
                (pm == kM ? ptm[j - 1] : pm == kX ? ptx[j - 1] : pty[j - 1]) + kDiagOne +
                (eq ? 1u : 0u);

            // X from the cell above (i-1, j); entering from M or Y opens a run
            int px = pick3(psm[j] + open, psx[j] + extend, psy[j] + open, best);
            const std::int32_t x_score = best;
            const std::uint64_t x_stats = px == kM ? ptm[j] : px == kX ? ptx[j] : pty[j];

            // Y from the cell left (i, j-1)
            int py = pick3(cur.sm[j - 1] + open, cur.sx[j - 1] + open,
                           cur.sy[j - 1] + extend, best);
            const std::int32_t y_score = best;
            const std::uint64_t y_stats =
                py == kM ? cur.tm[j - 1] : py == kX ? cur.tx[j - 1] : cur.ty[j - 1];

            cur.sm[j] = m_score;
            cur.sx[j] = x_score;
            cur.sy[j] = y_score;
            cur.tm[j] = m_stats;
            cur.tx[j] = x_stats;
            cur.ty[j] = y_stats;
            if (pred_row) {
                pred_row[j] = static_cast<std::uint8_t>(pm | (px << 2) | (py << 4));
            }
        }
        std::swap(prev, cur);
    }

    std::int32_t best;
    int fs = pick3(prev.sm[m], prev.sx[m], prev.sy[m], best);
    const std::uint64_t stats = fs == kM ? prev.tm[m] : fs == kX ? prev.tx[m] : prev.ty[m];
    const std::size_t diag = static_cast<std::size_t>(stats >> 32);
    const std::size_t ident = static_cast<std::size_t>(stats & 0xffffffffu);

    DpResult out;
    out.final_state = fs;
    out.stats.score = best;
    out.stats.identical = ident;
    out.stats.length = n + m - diag;
    out.stats.gaps = n + m - 2 * diag;
    return out;
}

} // namespace

AlignmentStats align_stats(std::string_view a, std::string_view b,
                           const ScoringScheme& scheme) {
    if (a.empty() || b.empty()) {
        throw Error("cannot align empty sequence");
    }
    return run_dp(a, b, scheme, nullptr).stats;
}

Alignment align(const BioSequence& a, const BioSequence& b, const ScoringScheme& scheme) {
    if (a.mode != b.mode) {
        throw Error("incomparable encodings");
    }
    if (a.symbols.empty() || b.symbols.empty()) {
        throw Error("cannot align empty sequence");
    }

    std::vector<std::uint8_t> preds;
    DpResult dp = run_dp(a.symbols, b.symbols, scheme, &preds);

    const std::size_t m = b.symbols.size();
    const std::size_t width = m + 1;
    std::size_t i = a.symbols.size();
    std::size_t j = m;
    int state = dp.final_state;

    std::string ra, rb;
    ra.reserve(dp.stats.length);
    rb.reserve(dp.stats.length);
    while (i > 0 || j > 0) {
        const std::uint8_t p = preds[i * width + j];
        if (state == kM) {
            ra.push_back(a.symbols[i - 1]);
            rb.push_back(b.symbols[j - 1]);
            state = p & 3;
            --i;
            --j;
        } else if (state == kX) {
            ra.push_back(a.symbols[i - 1]);
            rb.push_back('-');
            state = (p >> 2) & 3;
            --i;
        } else {
            ra.push_back('-');
            rb.push_back(b.symbols[j - 1]);
            state = (p >> 4) & 3;
            --j;
        }
    }
    std::reverse(ra.begin(), ra.end());
    std::reverse(rb.begin(), rb.end());

    Alignment out;
    out.aligned_a = std::move(ra);
    out.aligned_b = std::move(rb);
    out.stats = dp.stats;
    return out;
}

double similarity(const AlignmentStats& stats) {
    if (stats.length == 0) {
        throw Error("similarity of zero-length alignment");
    }
    return static_cast<double>(stats.identical) / static_cast<double>(stats.length);
}

DiffRendering render_diff(const Alignment& alignment, std::string_view a_text,
                          std::string_view b_text) {
    std::size_t a_syms = 0;
    std::size_t b_syms = 0;
    for (char c : alignment.aligned_a) {
        a_syms += c != '-';
    }
    for (char c : alignment.aligned_b) {
        b_syms += c != '-';
    }
    if (a_syms != 2 * a_text.size() || b_syms != 2 * b_text.size()) {
        throw Error("diff rendering requires lossless mode");
    }

    DiffRendering out;
    // Walk the symbol-level path and close a byte segment at every vertex
    // where both sequences sit on a byte boundary. Within a segment,
    // min(da,db)/2 byte columns are diagonal and the rest are gaps.
    std::size_t ai = 0, bi = 0;        // symbols consumed
    std::size_t seg_a = 0, seg_b = 0;  // within current segment
    std::size_t seg_cols = 0, seg_ident = 0;
    for (std::size_t col = 0; col < alignment.aligned_a.size(); ++col) {
        const char ca = alignment.aligned_a[col];
        const char cb = alignment.aligned_b[col];
        if (ca != '-') {
            ++ai;
            ++seg_a;
        }
        if (cb != '-') {
            ++bi;
            ++seg_b;
        }
        ++seg_cols;
        if (ca != '-' && cb != '-' && ca == cb) {
            ++seg_ident;
        }
        if (ai % 2 != 0 || bi % 2 != 0) {
            continue;
        }
        if (seg_a == 0 && seg_b == 0) {
            continue;
        }
        const std::size_t a_bytes = seg_a / 2;
        const std::size_t b_bytes = seg_b / 2;
        const std::size_t diag_bytes = std::min(a_bytes, b_bytes);
        const bool clean = seg_cols == 2 && seg_ident == 2;
        std::size_t a_byte = ai / 2 - a_bytes;
        std::size_t b_byte = bi / 2 - b_bytes;
        for (std::size_t d = 0; d < diag_bytes; ++d) {
            const char qa = a_text[a_byte++];
            const char qb = b_text[b_byte++];
            out.query.push_back(qa);
            out.subject.push_back(qb);
            if (clean && qa == qb) {
                out.aligned.push_back(qa);
                out.diff.push_back(' ');
            } else {
                out.aligned.push_back('X');
                out.diff.push_back('X');
            }
        }
        for (std::size_t g = diag_bytes; g < a_bytes; ++g) {  // gap in subject
            out.query.push_back(a_text[a_byte++]);
            out.subject.push_back('-');
            out.aligned.push_back(' ');
            out.diff.push_back('-');
        }
        for (std::size_t g = diag_bytes; g < b_bytes; ++g) {  // gap in query
            out.query.push_back('-');
            out.subject.push_back(b_text[b_byte++]);
            out.aligned.push_back(' ');
            out.diff.push_back('-');
        }
        seg_a = seg_b = seg_cols = seg_ident = 0;
    }
    return out;
}

std::vector<std::uint64_t> kmer_codes(std::string_view symbols, int k) {
    if (k < 1) {
        throw Error("k-mer length must be >= 1");
    }
    std::vector<std::uint64_t> codes;
    if (symbols.size() < static_cast<std::size_t>(k)) {
        return codes;
    }
    codes.reserve(symbols.size() - k + 1);
    std::uint64_t power = 1;
    for (int i = 1; i < k; ++i) {
        power *= 20;
    }
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const int v = symbol_index(symbols[i]);
        if (v < 0) {
            throw Error("symbol outside alphabet in k-mer scan");
        }
        if (i >= static_cast<std::size_t>(k)) {
            code -= power * static_cast<std::uint64_t>(symbol_index(symbols[i - k]));
        }
        code = code * 20 + static_cast<std::uint64_t>(v);
        if (i + 1 >= static_cast<std::size_t>(k)) {
            codes.push_back(code);
        }
    }
    std::sort(codes.begin(), codes.end());
    return codes;
}

std::size_t shared_kmer_count(const std::vector<std::uint64_t>& a,
                              const std::vector<std::uint64_t>& b) {
    std::size_t shared = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++shared;
            ++i;
            ++j;
        }
    }
    return shared;
}

std::int64_t required_shared_kmers(std::size_t len_min, int k, double threshold) {
    // An alignment with similarity >= t has at most D = floor(L*(1-t)/t)
    // difference columns (I >= t*length and length <= L + D), and each
    // difference column destroys at most k of the shorter side's L-k+1
    // windows; the surviving windows appear in both sequences.
    const auto L = static_cast<double>(len_min);
    if (threshold <= 0.0) {
        return std::numeric_limits<std::int64_t>::min();
    }
    const double budget = std::floor(L * (1.0 - threshold) / threshold + kThresholdSlack);
    const auto windows = static_cast<std::int64_t>(len_min) - k + 1;
    return windows - static_cast<std::int64_t>(k) * static_cast<std::int64_t>(budget);
}

bool kmer_filter_symbols(std::string_view a, std::string_view b, int k, double threshold) {
    if (k < 1) {
        throw Error("k-mer length must be >= 1");
    }
    const std::size_t len_min = std::min(a.size(), b.size());
    if (len_min < static_cast<std::size_t>(k)) {
        return true;  // filter abstains
    }
    const std::int64_t required = required_shared_kmers(len_min, k, threshold);
    if (required <= 0) {
        return true;
    }
    const auto ca = kmer_codes(a, k);
    const auto cb = kmer_codes(b, k);
    return static_cast<std::int64_t>(shared_kmer_count(ca, cb)) >= required;
}

bool kmer_filter(const BioSequence& a, const BioSequence& b, int k, double threshold) {
    if (a.mode != b.mode) {
        throw Error("incomparable encodings");
    }
    return kmer_filter_symbols(a.symbols, b.symbols, k, threshold);
}

} // namespace logbio
