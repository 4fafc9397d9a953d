#pragma once

#include <string>

#include "lindiag/matrix.hpp"
#include "lindiag/set_system.hpp"

namespace lindiag {

struct RenderStyle {
    int cell_width = 26;
    int cell_height = 22;
    int gutter_width = 120;  // left band for set names
    int header_height = 46;  // top band for column labels
    int segment_thickness = 10;
    int margin = 6;
    int font_size = 12;
    bool grid = true;
};

/// SVG 1.1 document: one band per set, each maximal run of member columns
/// under the given order drawn as a single rect with class "seg". Output
/// bytes are deterministic for identical inputs.
std::string render_svg(const SetSystem& s, const ColumnPermutation& p,
                       const RenderStyle& style = {});

/// Terminal form of the permuted matrix: header of column indices, then
/// one line per row using '█' for ones and '·' for zeros.
std::string render_text(const BinaryMatrix& a, const ColumnPermutation& p);

}  // namespace lindiag
