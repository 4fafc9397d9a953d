#include "lindiag/set_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace lindiag {

SetSystem::SetSystem(std::vector<std::string> elements, std::vector<SetEntry> sets)
    : elements_(std::move(elements)), sets_(std::move(sets)) {
    std::unordered_set<std::string> names(elements_.begin(), elements_.end());
    if (names.size() != elements_.size()) {
        throw std::invalid_argument("element names must be unique");
    }
    names.clear();
    for (auto& set : sets_) {
        if (!names.insert(set.name).second) {
            throw std::invalid_argument("set names must be unique");
        }
        std::sort(set.members.begin(), set.members.end());
        if (std::adjacent_find(set.members.begin(), set.members.end()) != set.members.end()) {
            throw std::invalid_argument("set '" + set.name + "' lists an element twice");
        }
        for (const int idx : set.members) {
            if (idx < 0 || idx >= static_cast<int>(elements_.size())) {
                throw std::invalid_argument("set '" + set.name + "' references an unknown element index");
            }
        }
    }
}

BinaryMatrix from_set_system(const SetSystem& s) {
    BinaryMatrix a(static_cast<int>(s.sets().size()), static_cast<int>(s.elements().size()));
    for (int i = 0; i < a.rows(); ++i) {
        for (const int j : s.sets()[static_cast<std::size_t>(i)].members) {
            a.set(i, j, true);
        }
    }
    return a;
}

SetSystem to_set_system(const BinaryMatrix& a,
                        std::vector<std::string> element_names,
                        std::vector<std::string> set_names) {
    if (element_names.empty()) {
        for (int j = 0; j < a.cols(); ++j) element_names.push_back("e" + std::to_string(j));
    }
    if (set_names.empty()) {
        for (int i = 0; i < a.rows(); ++i) set_names.push_back("S" + std::to_string(i));
    }
    if (static_cast<int>(element_names.size()) != a.cols() ||
        static_cast<int>(set_names.size()) != a.rows()) {
        throw std::invalid_argument("name counts do not match matrix dimensions");
    }
    std::vector<SetEntry> sets;
    sets.reserve(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        SetEntry entry;
        entry.name = std::move(set_names[static_cast<std::size_t>(i)]);
        for (int j = 0; j < a.cols(); ++j) {
            if (a.get(i, j)) entry.members.push_back(j);
        }
        sets.push_back(std::move(entry));
    }
    return SetSystem(std::move(element_names), std::move(sets));
}

}  // namespace lindiag
