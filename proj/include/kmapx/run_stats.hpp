#pragma once

#include <cstdint>
#include <string>

#include "kmapx/solver.hpp"

namespace kmapx
{

struct run_stats
{
  int var_count = 0;
  int on_count = 0;
  int dc_count = 0;
  group_mode mode = group_mode::extended;
  solve_method method = solve_method::exact;
  int cost = 0;
  int group_count = 0;
  int depth = 0; /* levels under balanced decomposition */
  uint64_t search_nodes = 0;
  double elapsed_ms = 0.0;
  std::string expression;
  bool optimal = true;
};

run_stats stats_for( const minimize_result& r, double elapsed_ms );

/*! \brief One JSON object; schema versioned with a "schema": 1 field. */
std::string run_stats_to_json( const run_stats& s );

} // namespace kmapx
