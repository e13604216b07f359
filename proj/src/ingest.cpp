#include "logbio/ingest.hpp"

#include <array>
#include <fstream>
#include <regex>

#include "logbio/common.hpp"

namespace logbio {

Corpus read_corpus(const std::string& path, bool drop_empty) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open log file: " + path);
    }
    Corpus corpus;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() && drop_empty) {
            ++corpus.dropped_empty;
        } else {
            LogRecord rec;
            rec.index = line_no;
            rec.raw = line;
            rec.text = line;
            corpus.records.push_back(std::move(rec));
        }
        ++line_no;
    }
    if (in.bad()) {
        throw Error("read failed: " + path);
    }
    corpus.total_lines = line_no;
    if (corpus.records.empty()) {
        throw Error("empty corpus: " + path);
    }
    return corpus;
}

namespace {

enum class Field { Year, Month, Day, Hour, Minute, Second };

constexpr std::array<std::string_view, 12> kMonthNames = {
    "Jan", "Feb", "Mar", "Apr", "May", "Jun",
    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

int month_number(std::string_view name) {
    for (std::size_t i = 0; i < kMonthNames.size(); ++i) {
        if (kMonthNames[i] == name) {
            return static_cast<int>(i) + 1;
        }
    }
    return 0;
}

struct Token {
    bool literal = true;
    std::string text;   // literal text
    Field field = Field::Year;
    bool month_name = false;  // Mon vs numeric
};

// Tokens: YYYY, Mon, MM, DD, HH, SS. MM is a month unless the pattern
// also contains Mon or an earlier MM already took the month slot.
std::vector<Token> tokenize(const std::string& spec_text) {
    std::vector<Token> tokens;
    bool has_mon = spec_text.find("Mon") != std::string::npos;
    bool month_taken = has_mon;
    std::size_t i = 0;
    auto literal = [&](char c) {
        if (tokens.empty() || !tokens.back().literal) {
            tokens.push_back({true, "", Field::Year, false});
        }
        tokens.back().text.push_back(c);
    };
    while (i < spec_text.size()) {
        auto starts = [&](std::string_view tok) {
            return spec_text.compare(i, tok.size(), tok) == 0;
        };
        if (starts("YYYY")) {
            tokens.push_back({false, "", Field::Year, false});
            i += 4;
        } else if (starts("Mon")) {
            tokens.push_back({false, "", Field::Month, true});
            i += 3;
        } else if (starts("MM")) {
            Field f = month_taken ? Field::Minute : Field::Month;
            month_taken = true;
            tokens.push_back({false, "", f, false});
            i += 2;
        } else if (starts("DD")) {
            tokens.push_back({false, "", Field::Day, false});
            i += 2;
        } else if (starts("HH")) {
            tokens.push_back({false, "", Field::Hour, false});
            i += 2;
        } else if (starts("SS")) {
            tokens.push_back({false, "", Field::Second, false});
            i += 2;
        } else {
            literal(spec_text[i]);
            ++i;
        }
    }
    return tokens;
}

std::string escape_regex(const std::string& text) {
    static const std::string special = R"(\^$.|?*+()[]{})";
    std::string out;
    for (char c : text) {
        if (special.find(c) != std::string::npos) {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out;
}

} // namespace

struct Homogenizer::CompiledRule {
    std::regex re;
    std::vector<Token> pattern_tokens;  // non-literal ones, capture order
    std::vector<Token> format_tokens;   // all, emission order
};

Homogenizer::Homogenizer(const HomogenizeConfig& config) {
    for (const auto& rule : config.rules) {
        auto pat = tokenize(rule.pattern);
        auto fmt = tokenize(rule.format);

        std::string re_text;
        std::vector<Token> captures;
        bool any_field = false;
        for (const auto& tok : pat) {
            if (tok.literal) {
                re_text += escape_regex(tok.text);
                continue;
            }
            any_field = true;
            captures.push_back(tok);
            if (tok.month_name) {
                re_text += "(Jan|Feb|Mar|Apr|May|Jun|Jul|Aug|Sep|Oct|Nov|Dec)";
            } else if (tok.field == Field::Year) {
                re_text += "([0-9]{4})";
            } else {
                re_text += "([0-9]{2})";
            }
        }
        if (!any_field) {
            throw Error("malformed rewrite rule (no timestamp tokens): " + rule.pattern);
        }
        for (const auto& tok : fmt) {
            if (tok.literal) {
                continue;
            }
            bool captured = false;
            for (const auto& cap : captures) {
                if (cap.field == tok.field) {
                    captured = true;
                    break;
                }
            }
            if (!captured) {
                throw Error("malformed rewrite rule: format needs a field the pattern "
                            "does not capture: " + rule.pattern + " => " + rule.format);
            }
        }

        CompiledRule compiled;
        try {
            compiled.re = std::regex(re_text);
        } catch (const std::regex_error& e) {
            throw Error("malformed rewrite rule: " + rule.pattern + ": " + e.what());
        }
        compiled.pattern_tokens = std::move(captures);
        compiled.format_tokens = std::move(fmt);
        rules_.push_back(std::move(compiled));
    }
}

Homogenizer::~Homogenizer() = default;
Homogenizer::Homogenizer(Homogenizer&&) noexcept = default;
Homogenizer& Homogenizer::operator=(Homogenizer&&) noexcept = default;

std::string Homogenizer::apply(const std::string& raw) const {
    for (const auto& rule : rules_) {
        std::smatch m;
        if (!std::regex_search(raw, m, rule.re)) {
            continue;
        }
        // Field values from the captures.
        std::string year, month, day, hour, minute, second;
        std::string month_name_capture;
        for (std::size_t i = 0; i < rule.pattern_tokens.size(); ++i) {
            const Token& tok = rule.pattern_tokens[i];
            std::string value = m[i + 1].str();
            if (tok.month_name) {
                month_name_capture = value;
                int num = month_number(value);
                char buf[4];
                std::snprintf(buf, sizeof buf, "%02d", num);
                month = buf;
                continue;
            }
            switch (tok.field) {
                case Field::Year: year = value; break;
                case Field::Month: month = value; break;
                case Field::Day: day = value; break;
                case Field::Hour: hour = value; break;
                case Field::Minute: minute = value; break;
                case Field::Second: second = value; break;
            }
        }
        std::string replacement;
        for (const auto& tok : rule.format_tokens) {
            if (tok.literal) {
                replacement += tok.text;
                continue;
            }
            if (tok.month_name) {
                if (!month_name_capture.empty()) {
                    replacement += month_name_capture;
                } else {
                    int num = std::stoi(month);
                    replacement += (num >= 1 && num <= 12) ? std::string(kMonthNames[num - 1])
                                                           : month;
                }
                continue;
            }
            switch (tok.field) {
                case Field::Year: replacement += year; break;
                case Field::Month: replacement += month; break;
                case Field::Day: replacement += day; break;
                case Field::Hour: replacement += hour; break;
                case Field::Minute: replacement += minute; break;
                case Field::Second: replacement += second; break;
            }
        }
        std::string out = raw;
        out.replace(static_cast<std::size_t>(m.position(0)),
                    static_cast<std::size_t>(m.length(0)), replacement);
        return out;  // first matching rule wins
    }
    return raw;
}

void Homogenizer::apply_all(std::vector<LogRecord>& records) const {
    if (rules_.empty()) {
        return;
    }
    for (auto& rec : records) {
        rec.text = apply(rec.raw);
    }
}

LogRecord homogenize(const LogRecord& record, const HomogenizeConfig& config) {
    Homogenizer h(config);
    LogRecord out = record;
    out.text = h.apply(record.raw);
    return out;
}

} // namespace logbio
