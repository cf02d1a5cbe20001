#pragma once

#include <string>
#include <vector>

#include "lvmb/moment.hpp"

namespace lvmb {

// Canned data sets used across tests and the CLI:
//   projective-space-<m>  proper subsets of {0,...,m}, h = 0
//   hopf                  m = 2, maximal {{1},{2}}, h = span{(1, 1+i)}
//   calabi-eckmann        m = 4, maximal {{1,3},{1,4},{2,3},{2,4}},
//                         h = span{(1,1,i,i)}
//   nonpolytopal-fan      a complete simplicial non-polytopal fan in R^3
//                         (fan mode, h = 0)
std::vector<std::string> builtin_example_names();

// Throws std::invalid_argument listing the available names when unknown.
LVMBData builtin_example(const std::string& name);

}  // namespace lvmb
