#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace logbio {

enum class Complexity { Low, High };

Complexity complexity_from_name(std::string_view name);  // "low" | "high"

/// Deterministic synthetic log corpus: web access, database and firewall
/// lines in the shape of a small bug-tracker deployment. Same spec and
/// seed always produce the identical file.
struct ScenarioSpec {
    std::size_t users = 1;
    std::size_t lines = 1000;
    Complexity complexity = Complexity::Low;
    std::uint64_t seed = 1;
};

std::size_t template_count(Complexity complexity);

std::vector<std::string> generate_lines(const ScenarioSpec& spec);
void generate(const ScenarioSpec& spec, const std::string& path);

struct InjectionResult {
    std::vector<std::size_t> indices;  // positions of the inserted line(s)
    std::string line;                  // the modified firewall line
};

/// Clone the first firewall line, rewrite its MAC and source IP with
/// seeded random values guaranteed absent from the corpus, and insert
/// `copies` adjacent copies at a seeded random position.
InjectionResult inject_attack_lines(std::vector<std::string>& lines, std::uint64_t seed,
                                    int copies = 1);

/// File-level wrapper: reads corpus_path, writes the injected corpus and
/// a targets file (one inserted index per line).
InjectionResult inject_attack(const std::string& corpus_path, const std::string& out_path,
                              const std::string& targets_path, std::uint64_t seed,
                              int copies = 1);

} // namespace logbio
