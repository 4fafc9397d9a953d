#include "lindiag/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace lindiag {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) throw ParseError("unknown key \"" + key + "\" in " + where);
    }
}

}  // namespace

SetSystem parse_set_system_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level value must be an object");
    reject_unknown_keys(doc, {"elements", "sets"}, "top-level object");
    if (!doc.contains("elements") || !doc["elements"].is_array()) {
        throw ParseError("missing \"elements\" array");
    }
    if (!doc.contains("sets") || !doc["sets"].is_array()) {
        throw ParseError("missing \"sets\" array");
    }

    std::vector<std::string> elements;
    std::unordered_map<std::string, int> index_of;
    int ei = 0;
    for (const auto& e : doc["elements"]) {
        if (!e.is_string()) throw ParseError("elements[" + std::to_string(ei) + "] is not a string");
        std::string name = e.get<std::string>();
        if (!index_of.emplace(name, ei).second) {
            throw ParseError("duplicate element name \"" + name + "\" (elements[" + std::to_string(ei) + "])");
        }
        elements.push_back(std::move(name));
        ++ei;
    }

    std::vector<SetEntry> sets;
    std::unordered_map<std::string, int> set_names;
    int si = 0;
    for (const auto& s : doc["sets"]) {
        const std::string where = "sets[" + std::to_string(si) + "]";
        if (!s.is_object()) throw ParseError(where + " is not an object");
        reject_unknown_keys(s, {"name", "members"}, where);
        if (!s.contains("name") || !s["name"].is_string()) {
            throw ParseError(where + " is missing a string \"name\"");
        }
        if (!s.contains("members") || !s["members"].is_array()) {
            throw ParseError(where + " is missing a \"members\" array");
        }
        SetEntry entry;
        entry.name = s["name"].get<std::string>();
        if (!set_names.emplace(entry.name, si).second) {
            throw ParseError("duplicate set name \"" + entry.name + "\" (" + where + ")");
        }
        int mi = 0;
        for (const auto& member : s["members"]) {
            if (!member.is_string()) {
                throw ParseError(where + ".members[" + std::to_string(mi) + "] is not a string");
            }
            const std::string name = member.get<std::string>();
            const auto it = index_of.find(name);
            if (it == index_of.end()) {
                throw ParseError(where + ".members[" + std::to_string(mi) + "]: unknown element \"" +
                                 name + "\"");
            }
            entry.members.push_back(it->second);
            ++mi;
        }
        for (std::size_t k = 1; k < entry.members.size(); ++k) {
            for (std::size_t l = 0; l < k; ++l) {
                if (entry.members[k] == entry.members[l]) {
                    throw ParseError(where + ": element \"" +
                                     elements[static_cast<std::size_t>(entry.members[k])] +
                                     "\" listed twice");
                }
            }
        }
        sets.push_back(std::move(entry));
        ++si;
    }
    return SetSystem(std::move(elements), std::move(sets));
}

std::string serialize_set_system_json(const SetSystem& s) {
    json doc;
    doc["elements"] = s.elements();
    doc["sets"] = json::array();
    for (const auto& set : s.sets()) {
        json members = json::array();
        for (const int idx : set.members) {
            members.push_back(s.elements()[static_cast<std::size_t>(idx)]);
        }
        doc["sets"].push_back(json{{"name", set.name}, {"members", std::move(members)}});
    }
    return doc.dump(2) + "\n";
}

BinaryMatrix parse_matrix_text(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const bool last = end == text.size();
        if (!(last && line.empty())) lines.push_back(std::move(line));
        if (last) break;
        start = end + 1;
    }
    if (lines.empty()) return BinaryMatrix(0, 0);
    const std::size_t width = lines.front().size();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].size() != width) {
            throw ParseError("line " + std::to_string(i + 1) + ": expected " + std::to_string(width) +
                             " characters, got " + std::to_string(lines[i].size()));
        }
        for (std::size_t j = 0; j < lines[i].size(); ++j) {
            if (lines[i][j] != '0' && lines[i][j] != '1') {
                throw ParseError("line " + std::to_string(i + 1) + ", column " + std::to_string(j + 1) +
                                 ": invalid character '" + std::string(1, lines[i][j]) + "'");
            }
        }
    }
    return BinaryMatrix::from_rows(lines);
}

std::string serialize_matrix_text(const BinaryMatrix& a) {
    std::string out;
    out.reserve(static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(a.cols() + 1));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.push_back(a.get(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

LoadedInput load_input_file(const std::string& path) {
    const std::string text = read_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        SetSystem system = parse_set_system_json(text);
        return {from_set_system(system), std::move(system)};
    }
    return {parse_matrix_text(text), std::nullopt};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace lindiag
