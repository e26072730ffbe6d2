#pragma once

#include "matgerm/rational.hpp"

#include <string>
#include <vector>

namespace mg {

// Positive variable weights plus row/column degrees. Every nonzero entry
// (i,j) of a quasi-homogeneous family is homogeneous of degree
// d_ij = row_deg[i] + col_deg[j]; for Sym/Sk kinds col_deg == row_deg.
struct WeightSystem {
    std::vector<Rat> weights;
    std::vector<Rat> row_deg;
    std::vector<Rat> col_deg;

    Rat entry_degree(int i, int j) const { return row_deg.at(i) + col_deg.at(j); }
    std::string str() const;
};

} // namespace mg
