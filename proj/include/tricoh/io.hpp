#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "tricoh/bench.hpp"
#include "tricoh/geometry.hpp"
#include "tricoh/sampling.hpp"
#include "tricoh/state.hpp"

namespace tricoh::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kStateFormat = "tricoh-state-v1";
inline constexpr const char* kBeamFormat = "tricoh-beam-v1";
inline constexpr const char* kRecipeFormat = "tricoh-recipe-v1";

/// Contents of a state file: either explicit amplitudes or a beam.
using StateDocument = std::variant<ThreeQubitState, BeamParameters>;

/// Parses a tricoh-state-v1 or tricoh-beam-v1 document. Throws ParseError
/// for malformed JSON, missing fields or an unknown "format"; validation
/// failures keep their own codes (NotNormalized, InvalidParameters, ...).
StateDocument parse_state_document(const std::string& text);
StateDocument read_state_file(const std::filesystem::path& path);
ThreeQubitState to_state(const StateDocument& doc);

Json state_to_json(const ThreeQubitState& s);
Json beam_to_json(const BeamParameters& p);

/// A recipe file names a benchmark beam or gives explicit settings.
struct RecipeDocument {
  std::string label;
  BenchPipeline pipeline;
  bool named = false;
};

RecipeDocument parse_recipe_document(const std::string& text);
RecipeDocument read_recipe_file(const std::filesystem::path& path);
Json recipe_to_json(const std::string& label, const BenchPipeline& p);

Json amplitude_to_json(Amplitude a);
Json matrix_to_json(const Matrix2c& m);
Json coherence_vector_to_json(const CoherenceVector& v);

Json sweep_to_json(const SweepStatistics& st);
Json volume_to_json(const VolumeEstimate& v);
Json table_to_json(const std::vector<TableRow>& rows);
/// CSV in the column order of the reference table, with uncertainty columns
/// next to each separability and a kind column (measured / theory).
std::string table_to_csv(const std::vector<TableRow>& rows);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace tricoh::io
