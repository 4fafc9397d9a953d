#include "lindiag/render.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace lindiag {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc949",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1f77b4", "#8c564b"};

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const SetSystem& s, const ColumnPermutation& p, const RenderStyle& style) {
    const int n = static_cast<int>(s.elements().size());
    const int m = static_cast<int>(s.sets().size());
    if (p.size() != n) throw std::invalid_argument("order length does not match element count");
    if (style.cell_width <= 0 || style.cell_height <= 0 || style.segment_thickness <= 0 ||
        style.gutter_width <= 0 || style.header_height <= 0 || style.margin < 0 ||
        style.font_size <= 0) {
        throw std::invalid_argument("style dimensions must be positive");
    }
    const int x0 = style.margin + style.gutter_width;
    const int y0 = style.margin + style.header_height;
    const int width = x0 + n * style.cell_width + style.margin;
    const int height = y0 + m * style.cell_height + style.margin;
    if (width > 100000 || height > 100000) {
        throw std::invalid_argument("canvas would exceed 100000 px");
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";

    if (style.grid) {
        for (int j = 0; j <= n; ++j) {
            const int x = x0 + j * style.cell_width;
            out << "<line x1=\"" << x << "\" y1=\"" << y0 << "\" x2=\"" << x << "\" y2=\""
                << y0 + m * style.cell_height << "\" stroke=\"#e3e3e3\" stroke-width=\"1\"/>\n";
        }
        for (int i = 0; i <= m; ++i) {
            const int y = y0 + i * style.cell_height;
            out << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\""
                << x0 + n * style.cell_width << "\" y2=\"" << y
                << "\" stroke=\"#e3e3e3\" stroke-width=\"1\"/>\n";
        }
    }

    for (int j = 0; j < n; ++j) {
        const int x = x0 + j * style.cell_width + style.cell_width / 2;
        const int y = y0 - 8;
        out << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << style.font_size
            << "\" font-family=\"sans-serif\" text-anchor=\"start\" transform=\"rotate(-45 " << x
            << " " << y << ")\">" << xml_escape(s.elements()[static_cast<std::size_t>(p[j])])
            << "</text>\n";
    }

    for (int i = 0; i < m; ++i) {
        const auto& set = s.sets()[static_cast<std::size_t>(i)];
        const int yrow = y0 + i * style.cell_height;
        out << "<text x=\"" << style.margin + 2 << "\" y=\""
            << yrow + style.cell_height / 2 + style.font_size / 3 << "\" font-size=\""
            << style.font_size << "\" font-family=\"sans-serif\">" << xml_escape(set.name)
            << "</text>\n";

        std::vector<bool> member(static_cast<std::size_t>(n), false);
        for (const int e : set.members) member[static_cast<std::size_t>(e)] = true;
        const int yseg = yrow + (style.cell_height - style.segment_thickness) / 2;
        int run_start = -1;
        for (int j = 0; j <= n; ++j) {
            const bool on = j < n && member[static_cast<std::size_t>(p[j])];
            if (on && run_start < 0) run_start = j;
            if (!on && run_start >= 0) {
                const int x = x0 + run_start * style.cell_width + 2;
                const int w = (j - run_start) * style.cell_width - 4;
                out << "<rect class=\"seg\" x=\"" << x << "\" y=\"" << yseg << "\" width=\"" << w
                    << "\" height=\"" << style.segment_thickness << "\" rx=\"3\" fill=\""
                    << kPalette[static_cast<std::size_t>(i % 12)] << "\"/>\n";
                run_start = -1;
            }
        }
    }
    out << "</svg>\n";
    return std::move(out).str();
}

std::string render_text(const BinaryMatrix& a, const ColumnPermutation& p) {
    if (p.size() != a.cols()) {
        throw std::invalid_argument("order length does not match column count");
    }
    std::string out;
    for (int j = 0; j < a.cols(); ++j) out += static_cast<char>('0' + p[j] % 10);
    out += '\n';
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out += a.get(i, p[j]) ? "█" : "·";
        out += '\n';
    }
    return out;
}

}  // namespace lindiag
