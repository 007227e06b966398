#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qalg/errors.hpp"

namespace qalg {

// Module selector grammar: "S" (direct sum of all simples), "S<label>",
// "P<label>", each optionally twisted as "...@<t>".
struct ModuleSelector {
    enum class Kind { all_simples, simple_at, projective_at };
    Kind kind = Kind::all_simples;
    std::string label;
    int twist = 0;

    static ModuleSelector parse(const std::string& text);
    std::string str() const;
};

struct ManifestCase {
    std::filesystem::path algebra_path;  // resolved against the manifest directory
    bool all_simple_pairs = true;
    std::vector<std::pair<ModuleSelector, ModuleSelector>> pairs;
    std::optional<int> i_max;
};

struct Manifest {
    std::vector<ManifestCase> cases;
};

Manifest parse_manifest(const std::string& text, const std::filesystem::path& base_dir);
Manifest parse_manifest_file(const std::filesystem::path& path);

}  // namespace qalg
