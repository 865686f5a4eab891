#include "windlass/figures.hpp"

#include <stdexcept>

#include "windlass/forest.hpp"
#include "windlass/leaning.hpp"
#include "windlass/tilt.hpp"

namespace windlass {

std::vector<FigurePanel> figure(int k) {
    const Signature sig = Signature::a_family(4);
    switch (k) {
        case 1:
            return {{"figure1", upper_set(parse_term("a3(a3(*,*,*),a1(*),a2(*,*))", sig))}};
        case 2:
            return {{"figure2", tilted_upper_set(TiltSet{1, 2}, parse_term("a3(a3(*,*,*),a1(*),a2(*,*))", sig))}};
        case 3: {
            Term t = parse_term("a3(*,a3(*,*,a1(*)),a1(*))", sig);
            return {{"figure3_left", upper_set(t)},
                    {"figure3_right", tilted_upper_set(TiltSet{1}, tilt(TiltSet{1}, t))}};
        }
        case 4:
            return {{"figure4_left", fuss_catalan_poset(1, 4)}, {"figure4_right", fuss_catalan_poset(2, 3)}};
        case 5:
            return {{"figure5", rooted_tree_poset(4)}};
        case 6: {
            DecorationWord w;
            for (int i : {2, 1, 2, 0}) w.push_back(Token{a_symbol(i), i});
            return {{"figure6", leaning_poset(w)}};
        }
        default:
            throw std::invalid_argument("figure: no preset " + std::to_string(k) + " (expected 1 to 6)");
    }
}

}  // namespace windlass
