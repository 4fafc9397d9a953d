#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lindiag/matrix.hpp"
#include "lindiag/set_system.hpp"

namespace lindiag {

/// Malformed input document; the message carries line/field context.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Set-system JSON: {"elements": [unique strings],
///                   "sets": [{"name": str, "members": [element names]}]}.
/// Unknown keys are rejected.
SetSystem parse_set_system_json(std::string_view text);
std::string serialize_set_system_json(const SetSystem& s);

/// Matrix text: one row per line, characters '0'/'1', equal lengths,
/// trailing newline optional.
BinaryMatrix parse_matrix_text(std::string_view text);
std::string serialize_matrix_text(const BinaryMatrix& a);

struct LoadedInput {
    BinaryMatrix matrix;
    std::optional<SetSystem> system;  // present for JSON inputs
};

/// Dispatches on extension: .json parses as a set system, anything else
/// as matrix text.
LoadedInput load_input_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace lindiag
