#pragma once

#include <string>
#include <vector>

#include "lindiag/matrix.hpp"

namespace lindiag {

struct SetEntry {
    std::string name;
    std::vector<int> members;  // ascending, unique element indices

    bool operator==(const SetEntry&) const = default;
};

/// Named universe elements plus named sets over them; the human-facing
/// form of a diagram instance, bijective with BinaryMatrix.
class SetSystem {
public:
    SetSystem() = default;
    SetSystem(std::vector<std::string> elements, std::vector<SetEntry> sets);

    const std::vector<std::string>& elements() const { return elements_; }
    const std::vector<SetEntry>& sets() const { return sets_; }

    bool operator==(const SetSystem&) const = default;

private:
    std::vector<std::string> elements_;
    std::vector<SetEntry> sets_;
};

/// Membership matrix: entry (i, j) = 1 iff element j belongs to set i.
BinaryMatrix from_set_system(const SetSystem& s);

/// Inverse of from_set_system. Names default to e0..e{n-1} / S0..S{m-1}
/// when not supplied.
SetSystem to_set_system(const BinaryMatrix& a,
                        std::vector<std::string> element_names = {},
                        std::vector<std::string> set_names = {});

}  // namespace lindiag
