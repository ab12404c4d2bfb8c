#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cccforge/code.hpp"
#include "cccforge/designs.hpp"

namespace ccc {

/// Filling in groups: place a length-g_i code on every group of size g_i
/// and keep the master words. Output is a plain code on the same points.
/// Needs d <= 2(w-1) = 6.
Code fill_groups(const Gdc& g, const std::map<int, Code>& fillers);

/// Adjoining y points: one distinguished group together with the y new
/// points is filled with a (g1+y,d)-code; every other group gets a GDC of
/// type 1^g y^1 whose declared y-group lands on the new points. For y = 1
/// a plain (g+1)-code serves as the edge filler (its last point plays the
/// y-group). When the distinguished size occurs only once no edge filler
/// of that size is needed.
Code adjoin_points(const Gdc& g, int y, std::size_t first_group,
                   const Code& first_filler, const std::map<int, Gdc>& edge_fillers);

/// Weighting construction: blow each master point x up into omega(x)
/// copies and place, on every master block, an ingredient GDC whose type
/// matches the block's weight multiset. Group fibers over master groups.
/// Needs d <= 2(w-1).
Gdc fundamental(const BlockDesign& master, const std::vector<int>& weights,
                const std::function<Gdc(const std::vector<int>&)>& supplier);

/// Inflation by a TD(4,m): each word expands through the m^2 transversal
/// blocks; the type is multiplied by m and the size by m^2.
Gdc inflate(const Gdc& g, const BlockDesign& td);

struct ShortenResult {
    Code code;
    std::vector<int> census;  // nonzero count per coordinate, before shortening
    int removed = 0;
};

/// Drop every word with a nonzero symbol at x, then delete coordinate x.
ShortenResult shorten(const Code& c, int x);

/// Wrap a plain code as the type-1^{n-1} 1^1 GDC used by adjoin_points.
Gdc as_edge_filler(const Code& c);

}  // namespace ccc
