#include "kmapx/sweep.hpp"

#include <atomic>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "json.hpp"

namespace kmapx
{

namespace
{

sweep_mode_result run_mode( const bool_func& f, group_mode mode, const sweep_options& opts )
{
  solver_config config;
  config.method = opts.method;
  config.max_exclusions = opts.max_exclusions;
  config.node_budget = opts.node_budget;
  const minimize_result r = minimize( f, mode, config );

  const expr e = cover_expression( r.best );
  sweep_mode_result out;
  out.cost = cover_cost( r.best );
  out.group_count = static_cast<int>( r.best.groups.size() );
  out.depth = expr_depth( e );
  out.optimal = r.optimal;
  out.covered = covered_cells( r.best );
  out.expression = print_expr( e, f.var_names() );
  /* Tabulation check: the expression must realize exactly the covered
   * cells, which in turn must include ON and avoid OFF. */
  out.verified = verify_cover( r.best ) && truth_table( e, f.var_count() ) == out.covered;

  if ( opts.compare_methods && opts.method == solve_method::greedy )
  {
    solver_config exact_config = config;
    exact_config.method = solve_method::exact;
    out.exact_cost = cover_cost( minimize( f, mode, exact_config ).best );
  }
  return out;
}

} // namespace

sweep_summary run_sweep( const sweep_options& opts,
                         const std::function<void( const sweep_function_result& )>& on_result )
{
  if ( opts.var_count < 1 || opts.var_count > max_var_count )
    throw std::invalid_argument( "var_count out of range" );
  if ( opts.all && opts.var_count > 4 )
    throw std::invalid_argument( "--all sweeps support up to 4 variables" );
  if ( !opts.all && opts.sample_count < 1 )
    throw std::invalid_argument( "sample count must be >= 1" );

  /* Function list is fixed up front so worker count cannot affect it.
   * mt19937_64 is fully specified, so samples reproduce across platforms. */
  std::vector<uint64_t> on_masks;
  if ( opts.all )
  {
    const uint64_t count = uint64_t( 1 ) << ( 1u << opts.var_count );
    on_masks.reserve( count );
    for ( uint64_t m = 0; m < count; ++m )
      on_masks.push_back( m );
  }
  else
  {
    std::mt19937_64 rng( opts.seed );
    on_masks.reserve( opts.sample_count );
    for ( int i = 0; i < opts.sample_count; ++i )
      on_masks.push_back( rng() & full_cell_mask( opts.var_count ) );
  }

  std::vector<sweep_function_result> results( on_masks.size() );
  const int jobs = std::max( 1, opts.jobs );

  auto work = [&]( std::atomic<size_t>& cursor ) {
    while ( true )
    {
      const size_t i = cursor.fetch_add( 1 );
      if ( i >= on_masks.size() )
        return;
      const bool_func f( opts.var_count, on_masks[i], 0 );
      sweep_function_result r;
      r.index = i;
      r.on_mask = on_masks[i];
      r.on_count = f.on_count();
      if ( opts.run_conventional )
        r.conventional = run_mode( f, group_mode::conventional, opts );
      if ( opts.run_extended )
        r.extended = run_mode( f, group_mode::extended, opts );
      results[i] = std::move( r );
    }
  };

  std::atomic<size_t> cursor{ 0 };
  if ( jobs == 1 )
    work( cursor );
  else
  {
    std::vector<std::thread> threads;
    for ( int t = 0; t < jobs; ++t )
      threads.emplace_back( [&] { work( cursor ); } );
    for ( auto& t : threads )
      t.join();
  }

  sweep_summary summary;
  summary.function_count = results.size();
  double sum_conv = 0.0, sum_ext = 0.0;
  double sum_exact_conv = 0.0, sum_exact_ext = 0.0;
  auto account = [&]( const std::optional<sweep_mode_result>& m, double& exact_sum ) {
    if ( !m )
      return;
    if ( !m->verified )
      ++summary.verify_failures;
    if ( !m->optimal )
      ++summary.budget_aborts;
    if ( m->exact_cost )
    {
      exact_sum += *m->exact_cost;
      if ( m->cost > *m->exact_cost )
        ++summary.greedy_suboptimal;
      if ( m->cost < *m->exact_cost )
        ++summary.greedy_below_exact;
    }
  };
  for ( const auto& r : results )
  {
    account( r.conventional, sum_exact_conv );
    account( r.extended, sum_exact_ext );
    if ( r.conventional )
      sum_conv += r.conventional->cost;
    if ( r.extended )
      sum_ext += r.extended->cost;
    if ( r.conventional && r.extended )
    {
      const int savings = r.conventional->cost - r.extended->cost;
      ++summary.savings_histogram[savings];
      if ( savings > 0 )
        ++summary.extended_wins;
    }
    if ( on_result )
      on_result( r );
  }
  if ( !results.empty() )
  {
    summary.mean_cost_conventional = sum_conv / results.size();
    summary.mean_cost_extended = sum_ext / results.size();
    summary.mean_exact_cost_conventional = sum_exact_conv / results.size();
    summary.mean_exact_cost_extended = sum_exact_ext / results.size();
  }
  return summary;
}

namespace
{

std::string hex_mask( uint64_t mask )
{
  std::ostringstream os;
  os << "0x" << std::hex << mask;
  return os.str();
}

nlohmann::ordered_json mode_json( const sweep_mode_result& m )
{
  nlohmann::ordered_json j;
  j["cost"] = m.cost;
  j["groups"] = m.group_count;
  j["depth"] = m.depth;
  j["optimal"] = m.optimal;
  if ( m.exact_cost )
    j["exact_cost"] = *m.exact_cost;
  j["expression"] = m.expression;
  return j;
}

} // namespace

std::string sweep_result_json_line( const sweep_function_result& r, int var_count )
{
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["index"] = r.index;
  j["vars"] = var_count;
  j["on"] = hex_mask( r.on_mask );
  j["on_count"] = r.on_count;
  if ( r.conventional )
    j["conventional"] = mode_json( *r.conventional );
  if ( r.extended )
    j["extended"] = mode_json( *r.extended );
  if ( r.conventional && r.extended )
    j["savings"] = r.conventional->cost - r.extended->cost;
  return j.dump();
}

std::string sweep_summary_text( const sweep_options& opts, const sweep_summary& s )
{
  std::ostringstream os;
  os << "sweep: vars=" << opts.var_count;
  if ( opts.all )
    os << " all";
  else
    os << " sample=" << opts.sample_count << " seed=" << opts.seed;
  os << " method=" << to_string( opts.method ) << " modes=";
  if ( opts.run_conventional && opts.run_extended )
    os << "conventional,extended";
  else
    os << ( opts.run_conventional ? "conventional" : "extended" );
  os << '\n';
  os << "functions: " << s.function_count << '\n';
  os << "verify failures: " << s.verify_failures << '\n';
  os << "budget aborts: " << s.budget_aborts << '\n';
  if ( opts.run_conventional )
  {
    os << "mean cost conventional: ";
    os.precision( 4 );
    os << std::fixed << s.mean_cost_conventional << '\n';
  }
  if ( opts.run_extended )
  {
    os.precision( 4 );
    os << std::fixed << "mean cost extended: " << s.mean_cost_extended << '\n';
  }
  if ( opts.run_conventional && opts.run_extended )
  {
    os << "extended wins: " << s.extended_wins << " of " << s.function_count << '\n';
    os << "savings histogram:\n";
    for ( const auto& [savings, count] : s.savings_histogram )
      os << "  " << savings << ": " << count << '\n';
  }
  if ( opts.compare_methods && opts.method == solve_method::greedy )
  {
    os.precision( 4 );
    if ( opts.run_conventional )
      os << std::fixed << "mean exact cost conventional: " << s.mean_exact_cost_conventional
         << '\n';
    if ( opts.run_extended )
      os << std::fixed << "mean exact cost extended: " << s.mean_exact_cost_extended << '\n';
    os << "greedy suboptimal: " << s.greedy_suboptimal << '\n';
    os << "greedy below exact: " << s.greedy_below_exact << '\n';
  }
  return os.str();
}

} // namespace kmapx
