#pragma once

#include <string>
#include <vector>

#include "windlass/poset.hpp"

namespace windlass {

struct FigurePanel {
    std::string name;
    Poset poset;
};

// Posets drawn in the reference figures 1 to 6; figures 3 and 4 have two panels.
std::vector<FigurePanel> figure(int k);

}  // namespace windlass
