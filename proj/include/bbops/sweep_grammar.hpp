#ifndef BBOPS_SWEEP_GRAMMAR_HPP
#define BBOPS_SWEEP_GRAMMAR_HPP

#include <string>
#include <vector>

namespace bbops {

// Sweep list grammar shared by the --n and --t flags:
//   "a:b:xF"   geometric from a toward b by factor F (F != 1, F > 0)
//   "a:b:+d"   arithmetic from a toward b by step d
//   "v1,v2"    explicit comma list
//   "v"        single value
std::vector<double> parse_value_list(const std::string& token);
std::vector<int> parse_count_list(const std::string& token);

}  // namespace bbops

#endif
