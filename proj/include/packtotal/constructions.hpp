#pragma once

#include "packtotal/coloring.hpp"
#include "packtotal/distance.hpp"
#include "packtotal/graph.hpp"
#include "packtotal/transform.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace packtotal {

/// The periodic 54-color pattern behind the 8-color packing coloring of the
/// distance graph D(1,2); values in {1..8}, colors 7 and 8 each occur
/// exactly three times.
using PatternTable = std::array<int, 54>;

/// The verbatim pattern table.
const PatternTable& d12_pattern();

/// A packing conflict created by wrapping the pattern around a cycle seam.
/// `statement` tags the matching case ("A".."F") of the known seam
/// classification, or stays empty when no case applies.
struct SeamConflict {
    Element a;
    Element b;
    int color = 0;
    int distance = 0;
    std::string statement;
};

/// Raised when seam_repair exhausts the window without a valid completion
/// (deliberately distinct from a search timeout).
class SeamRepairError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The n+2-color packing total coloring of the star K_{1,n}: all leaves get
/// color 1, the center gets 2, the edges get 3..n+2. Requires n >= 1.
PackingColoring color_star_total(int n);

/// A minimum packing total coloring of the path P_n for 3 <= n <= 9 (the
/// known optimal tables) and an at-most-8-color one for n >= 10 (restriction
/// of the D(1,2) pattern to the 2n-1 elements in path order).
PackingColoring color_path_total(int n);

/// A packing total coloring of the cycle C_n: the known optimal tables for
/// 3 <= n <= 12, and pattern application plus seam repair (at most 11
/// colors) for n >= 13.
PackingColoring color_cycle_total(int n);

/// Raw cyclic application of the 54-pattern to the 2n elements of C_n in
/// cyclic element order, plus the exact list of packing conflicts it causes
/// at the seam (empty iff n is a multiple of 27). Requires n >= 13.
std::pair<PackingColoring, std::vector<SeamConflict>> pattern_on_cycle(int n);

/// Exhaustive deterministic backtracking over recolorings of the window
/// elements with colors {1..max_color}; everything outside the window stays
/// fixed. Returns the input unchanged when it is already valid, otherwise the
/// first valid completion with the free elements searched in window order
/// (duplicates ignored) and colors ascending. Preconditions
/// (std::invalid_argument): window elements belong to the graph, every
/// conflict of c touches the window, and max_color covers the colors of c.
/// Throws SeamRepairError when no valid completion exists.
PackingColoring seam_repair(const LabeledGraph& t, const DistanceMatrix& d,
                            const PackingColoring& c, const std::vector<Element>& window,
                            int max_color);

} // namespace packtotal
