/* kmapx: minimize boolean functions on Karnaugh maps with conventional
 * power-of-two groups (sum of products) or extended groups of arbitrary
 * size (factored terms), compare the two, verify expressions, render maps
 * and sweep whole function corpora. */

#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "kmapx/netlist.hpp"
#include "kmapx/render.hpp"
#include "kmapx/run_stats.hpp"
#include "kmapx/sweep.hpp"

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_not_equivalent = 1;
constexpr int exit_input_error = 2;
constexpr int exit_budget_abort = 3;

using clock_type = std::chrono::steady_clock;

double elapsed_ms( clock_type::time_point start )
{
  return std::chrono::duration<double, std::milli>( clock_type::now() - start ).count();
}

std::string read_file( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open " + path );
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/* A function arrives either as a file (PLA or minterm list) or inline. */
struct function_input
{
  std::string path;
  int vars = 0;
  std::vector<int> on, dc;
};

void add_function_options( CLI::App* cmd, function_input& in )
{
  cmd->add_option( "input", in.path, "input file (PLA or minterm list)" );
  cmd->add_option( "--vars", in.vars, "number of variables (1..6)" );
  cmd->add_option( "--on", in.on, "ON-set minterms" )->delimiter( ',' );
  cmd->add_option( "--dc", in.dc, "don't-care minterms" )->delimiter( ',' );
}

kmapx::bool_func load_function( const function_input& in )
{
  if ( !in.path.empty() )
  {
    const std::string text = read_file( in.path );
    if ( text.find( "vars=" ) != std::string::npos && text.find( ".i" ) == std::string::npos )
      return kmapx::parse_minterm_list( text );
    return kmapx::parse_pla( text );
  }
  if ( in.vars == 0 )
    throw std::runtime_error( "provide an input file or --vars with --on/--dc" );
  return kmapx::bool_func::from_minterms( in.vars, in.on, in.dc );
}

struct solve_flags
{
  std::string mode = "extended";
  std::string method = "exact";
  int max_exclusions = 2;
  uint64_t node_budget = 50'000'000;
};

void add_solve_options( CLI::App* cmd, solve_flags& flags, bool with_mode = true )
{
  if ( with_mode )
    cmd->add_option( "--mode", flags.mode, "conventional | extended" )
        ->check( CLI::IsMember( { "conventional", "extended" } ) );
  cmd->add_option( "--method", flags.method, "exact | greedy" )
      ->check( CLI::IsMember( { "exact", "greedy" } ) );
  cmd->add_option( "--max-exclusions", flags.max_exclusions,
                   "exclusion limit per extended group" )
      ->check( CLI::NonNegativeNumber );
  cmd->add_option( "--node-budget", flags.node_budget, "exact search node limit" );
}

kmapx::group_mode mode_of( const std::string& s )
{
  return s == "conventional" ? kmapx::group_mode::conventional : kmapx::group_mode::extended;
}

kmapx::solver_config config_of( const solve_flags& flags )
{
  kmapx::solver_config config;
  config.method = flags.method == "greedy" ? kmapx::solve_method::greedy
                                           : kmapx::solve_method::exact;
  config.max_exclusions = flags.max_exclusions;
  config.node_budget = flags.node_budget;
  return config;
}

std::vector<std::string> netlist_comments( const kmapx::cover& cov, const std::string& expression )
{
  std::vector<std::string> comments{ "f = " + expression };
  for ( const auto& g : cov.groups )
    comments.push_back( "group " + kmapx::group_debug_string( g ) );
  return comments;
}

int cmd_minimize( const function_input& in, const solve_flags& flags, bool render, bool json,
                  const std::string& netlist_path )
{
  const auto f = load_function( in );
  const auto start = clock_type::now();
  const auto result = kmapx::minimize( f, mode_of( flags.mode ), config_of( flags ) );
  const auto stats = kmapx::stats_for( result, elapsed_ms( start ) );

  if ( json )
    std::cout << kmapx::run_stats_to_json( stats ) << '\n';
  else
  {
    std::cout << stats.expression << '\n';
    std::cout << "cost: " << stats.cost << "  groups: " << stats.group_count
              << "  depth: " << stats.depth << '\n';
  }
  if ( render )
    std::cout << kmapx::render_kmap( f, &result.best );
  if ( !netlist_path.empty() )
  {
    std::ofstream out( netlist_path );
    if ( !out )
      throw std::runtime_error( "cannot write " + netlist_path );
    kmapx::emit_netlist( kmapx::cover_expression( result.best ), out, f.var_names(),
                         netlist_comments( result.best, stats.expression ) );
  }
  if ( !result.optimal )
  {
    std::cerr << "warning: node budget exhausted; printed cover is the best found\n";
    return exit_budget_abort;
  }
  return exit_ok;
}

int cmd_compare( const function_input& in, const solve_flags& flags )
{
  const auto f = load_function( in );
  bool aborted = false;

  std::printf( "%-14s%6s%7s%8s  %s\n", "mode", "cost", "depth", "groups", "expression" );
  for ( const auto mode : { kmapx::group_mode::conventional, kmapx::group_mode::extended } )
  {
    const auto result = kmapx::minimize( f, mode, config_of( flags ) );
    aborted = aborted || !result.optimal;
    const auto e = kmapx::cover_expression( result.best );
    std::printf( "%-14s%6d%7d%8zu  %s\n", kmapx::to_string( mode ).c_str(),
                 kmapx::cover_cost( result.best ), kmapx::expr_depth( e ),
                 result.best.groups.size(), kmapx::print_expr( e, f.var_names() ).c_str() );
  }
  if ( aborted )
  {
    std::cerr << "warning: node budget exhausted\n";
    return exit_budget_abort;
  }
  return exit_ok;
}

int cmd_verify( const std::string& lhs_text, const std::string& rhs_text,
                const function_input& in, int vars_override )
{
  const bool against_function =
      rhs_text.empty() || !in.path.empty() || !in.on.empty() || !in.dc.empty();

  if ( !against_function )
  {
    /* Expression vs expression: letter names unless --vars switches to the
     * default naming for that width (x1..xn beyond four variables). */
    const std::vector<std::string> names =
        vars_override > 0 ? kmapx::default_var_names( vars_override )
                          : std::vector<std::string>{ "a", "b", "c", "d", "e", "f" };
    const kmapx::expr lhs = kmapx::parse_expr( lhs_text, names );
    const kmapx::expr rhs = kmapx::parse_expr( rhs_text, names );
    const int vars = vars_override > 0
                         ? vars_override
                         : std::max( { 1, kmapx::max_var_index( lhs ) + 1,
                                       kmapx::max_var_index( rhs ) + 1 } );
    const uint64_t lt = kmapx::truth_table( lhs, vars );
    const uint64_t rt = kmapx::truth_table( rhs, vars );
    if ( lt == rt )
    {
      std::cout << "EQUIVALENT\n";
      return exit_ok;
    }
    const int m = std::countr_zero( lt ^ rt );
    std::cout << "NOT EQUIVALENT: first difference at minterm " << m << " (lhs="
              << ( ( lt >> m ) & 1 ) << ", rhs=" << ( ( rt >> m ) & 1 ) << ")\n";
    return exit_not_equivalent;
  }

  /* Against a function: the expression must cover ON and avoid OFF
   * (don't-cares may fall either way). */
  if ( rhs_text.empty() && in.path.empty() && in.on.empty() && in.dc.empty() )
    throw std::runtime_error( "provide a second expression or a function input" );
  const auto f = load_function( in );
  const kmapx::expr lhs = kmapx::parse_expr( lhs_text, f.var_names() );
  const uint64_t tt = kmapx::truth_table( lhs, f.var_count() );
  const uint64_t bad = ( f.on_mask() & ~tt ) | ( f.off_mask() & tt );
  if ( bad == 0 )
  {
    std::cout << "EQUIVALENT\n";
    return exit_ok;
  }
  const int m = std::countr_zero( bad );
  std::cout << "NOT EQUIVALENT: first difference at minterm " << m << " (expr="
            << ( ( tt >> m ) & 1 ) << ", function=" << ( ( f.on_mask() >> m ) & 1 ) << ")\n";
  return exit_not_equivalent;
}

int cmd_render( const function_input& in, const solve_flags& flags, bool overlay )
{
  const auto f = load_function( in );
  if ( !overlay )
  {
    std::cout << kmapx::render_kmap( f );
    return exit_ok;
  }
  const auto result = kmapx::minimize( f, mode_of( flags.mode ), config_of( flags ) );
  std::cout << kmapx::render_kmap( f, &result.best );
  return result.optimal ? exit_ok : exit_budget_abort;
}

int cmd_sweep( kmapx::sweep_options opts, const std::string& method, bool method_given,
               const std::string& modes, const std::string& json_path )
{
  if ( method_given )
    opts.method = method == "greedy" ? kmapx::solve_method::greedy : kmapx::solve_method::exact;
  else
    /* exhausting all 65536 4-variable functions defaults to greedy */
    opts.method = ( opts.all && opts.var_count == 4 ) ? kmapx::solve_method::greedy
                                                      : kmapx::solve_method::exact;
  opts.run_conventional = modes != "extended";
  opts.run_extended = modes != "conventional";

  std::ofstream json_out;
  std::function<void( const kmapx::sweep_function_result& )> on_result;
  if ( !json_path.empty() )
  {
    json_out.open( json_path );
    if ( !json_out )
      throw std::runtime_error( "cannot write " + json_path );
    on_result = [&]( const kmapx::sweep_function_result& r ) {
      json_out << kmapx::sweep_result_json_line( r, opts.var_count ) << '\n';
    };
  }

  const auto start = clock_type::now();
  const auto summary = kmapx::run_sweep( opts, on_result );
  std::cout << kmapx::sweep_summary_text( opts, summary );
  std::cerr << "elapsed: " << elapsed_ms( start ) << " ms\n";
  return exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "K-map minimizer with extended non-power-of-two groups" };
  app.require_subcommand( 1 );

  function_input min_in;
  solve_flags min_flags;
  bool min_render = false, min_json = false;
  std::string min_netlist;
  auto* minimize_cmd = app.add_subcommand( "minimize", "minimize a function" );
  add_function_options( minimize_cmd, min_in );
  add_solve_options( minimize_cmd, min_flags );
  minimize_cmd->add_flag( "--render", min_render, "print the K-map with the cover" );
  minimize_cmd->add_flag( "--json", min_json, "emit run statistics as JSON" );
  minimize_cmd->add_option( "--netlist", min_netlist, "write a gate-level netlist" );

  function_input cmp_in;
  solve_flags cmp_flags;
  auto* compare_cmd = app.add_subcommand( "compare", "run both modes and tabulate" );
  add_function_options( compare_cmd, cmp_in );
  add_solve_options( compare_cmd, cmp_flags, /*with_mode=*/false );

  std::string verify_lhs, verify_rhs;
  function_input verify_in;
  int verify_vars = 0;
  auto* verify_cmd = app.add_subcommand( "verify", "check expressions for equivalence" );
  verify_cmd->add_option( "expr", verify_lhs, "left expression" )->required();
  verify_cmd->add_option( "expr2", verify_rhs, "right expression" );
  verify_cmd->add_option( "--input", verify_in.path, "compare against a function file" );
  verify_cmd->add_option( "--vars", verify_vars, "variable count override" );
  verify_cmd->add_option( "--on", verify_in.on, "compare against inline ON-set" )
      ->delimiter( ',' );
  verify_cmd->add_option( "--dc", verify_in.dc, "inline don't-cares" )->delimiter( ',' );

  function_input render_in;
  solve_flags render_flags;
  bool render_overlay = false;
  auto* render_cmd = app.add_subcommand( "render", "print the K-map" );
  add_function_options( render_cmd, render_in );
  add_solve_options( render_cmd, render_flags );
  render_cmd->add_flag( "--cover", render_overlay, "overlay a minimized cover" );

  kmapx::sweep_options sweep_opts;
  std::string sweep_method = "exact", sweep_modes = "both", sweep_json;
  bool sweep_all = false;
  auto* sweep_cmd = app.add_subcommand( "sweep", "minimize a corpus of functions" );
  sweep_cmd->add_option( "--vars", sweep_opts.var_count, "number of variables" )->required();
  sweep_cmd->add_flag( "--all", sweep_all, "every function (vars <= 4)" );
  sweep_cmd->add_option( "--sample", sweep_opts.sample_count, "random sample size" );
  sweep_cmd->add_option( "--seed", sweep_opts.seed, "sample seed" );
  auto* sweep_method_opt = sweep_cmd->add_option( "--method", sweep_method, "exact | greedy" )
                               ->check( CLI::IsMember( { "exact", "greedy" } ) );
  sweep_cmd->add_option( "--modes", sweep_modes, "both | conventional | extended" )
      ->check( CLI::IsMember( { "both", "conventional", "extended" } ) );
  sweep_cmd->add_option( "--max-exclusions", sweep_opts.max_exclusions, "exclusion limit" );
  sweep_cmd->add_option( "--node-budget", sweep_opts.node_budget, "exact search node limit" );
  sweep_cmd->add_option( "--jobs", sweep_opts.jobs, "parallel workers" );
  sweep_cmd->add_flag( "--compare-methods", sweep_opts.compare_methods,
                       "also solve greedy runs exactly and report the gap" );
  sweep_cmd->add_option( "--json", sweep_json, "write one JSON line per function" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e );
    return code == 0 ? exit_ok : exit_input_error;
  }

  try
  {
    if ( minimize_cmd->parsed() )
      return cmd_minimize( min_in, min_flags, min_render, min_json, min_netlist );
    if ( compare_cmd->parsed() )
      return cmd_compare( cmp_in, cmp_flags );
    if ( verify_cmd->parsed() )
    {
      verify_in.vars = verify_vars;
      return cmd_verify( verify_lhs, verify_rhs, verify_in, verify_vars );
    }
    if ( render_cmd->parsed() )
      return cmd_render( render_in, render_flags, render_overlay );
    if ( sweep_cmd->parsed() )
    {
      sweep_opts.all = sweep_all;
      if ( sweep_all && sweep_opts.sample_count > 0 )
        throw std::runtime_error( "--all and --sample are mutually exclusive" );
      return cmd_sweep( sweep_opts, sweep_method, sweep_method_opt->count() > 0, sweep_modes,
                        sweep_json );
    }
  }
  catch ( const kmapx::parse_error& e )
  {
    std::cerr << "error: " << e.what() << " (position " << e.position << ")\n";
    return exit_input_error;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_ok;
}
