/*!
  \file sweep.hpp
  \brief Corpus sweeps: run both modes over many functions and aggregate

  Every produced cover is verified by tabulation. Output is deterministic
  for a given seed and independent of the worker count: results are
  aggregated in function-index order and carry no timing data.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "kmapx/solver.hpp"

namespace kmapx
{

struct sweep_options
{
  int var_count = 3;
  bool all = true;          /* every on-set; var_count <= 4 */
  int sample_count = 0;     /* when !all: seeded random on-sets */
  uint64_t seed = 0;
  solve_method method = solve_method::exact;
  bool run_conventional = true;
  bool run_extended = true;
  bool compare_methods = false; /* greedy runs also solve exactly to report the gap */
  int max_exclusions = 2;
  uint64_t node_budget = 50'000'000;
  int jobs = 1;
};

struct sweep_mode_result
{
  int cost = 0;
  int group_count = 0;
  int depth = 0;
  bool optimal = true;
  bool verified = false;
  uint64_t covered = 0;        /* union of the cover's group cells */
  std::optional<int> exact_cost; /* filled when comparing methods */
  std::string expression;
};

struct sweep_function_result
{
  uint64_t index = 0;
  uint64_t on_mask = 0;
  int on_count = 0;
  std::optional<sweep_mode_result> conventional;
  std::optional<sweep_mode_result> extended;
};

struct sweep_summary
{
  uint64_t function_count = 0;
  uint64_t verify_failures = 0;
  uint64_t budget_aborts = 0;
  uint64_t extended_wins = 0; /* extended cost strictly below conventional */
  double mean_cost_conventional = 0.0;
  double mean_cost_extended = 0.0;
  std::map<int, uint64_t> savings_histogram; /* conventional - extended */

  /* greedy-vs-exact gap, populated when compare_methods is set */
  uint64_t greedy_suboptimal = 0;
  uint64_t greedy_below_exact = 0; /* must stay zero */
  double mean_exact_cost_conventional = 0.0;
  double mean_exact_cost_extended = 0.0;
};

/*! \brief Run the sweep; on_result is called in ascending function index order. */
sweep_summary run_sweep( const sweep_options& opts,
                         const std::function<void( const sweep_function_result& )>& on_result = {} );

/*! \brief One deterministic JSON line per function. */
std::string sweep_result_json_line( const sweep_function_result& r, int var_count );

/*! \brief Deterministic plain-text summary. */
std::string sweep_summary_text( const sweep_options& opts, const sweep_summary& s );

} // namespace kmapx
