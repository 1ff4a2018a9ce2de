/*!
  \file pipeline.hpp
  \brief End-to-end runs with per-stage statistics, and the seeded benchmark.
*/

#pragma once

#include "bdd.hpp"
#include "boolfn.hpp"
#include "minimizer.hpp"
#include "ordering.hpp"
#include "qm.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsopmin
{

inline std::string to_string( ordering_method m )
{
  switch ( m )
  {
  case ordering_method::entropy:
    return "entropy";
  case ordering_method::given:
    return "given";
  case ordering_method::sift:
    return "sift";
  }
  return "unknown";
}

inline ordering_method parse_ordering( std::string_view text )
{
  if ( text == "entropy" )
    return ordering_method::entropy;
  if ( text == "given" )
    return ordering_method::given;
  if ( text == "sift" )
    return ordering_method::sift;
  throw std::invalid_argument( "unknown ordering '" + std::string( text ) + "'" );
}

struct pipeline_config
{
  ordering_method ordering{ordering_method::entropy};
  std::optional<variable_order> given_order;
  bool oracle_qm{false};
  std::vector<std::string> names; /*!< defaults to a, b, c, ... when empty */
};

struct stage_timings
{
  double order_ms{0};
  double build_ms{0};
  double enumerate_ms{0};
  double minimize_ms{0};
  double oracle_ms{0};
};

struct stats_report
{
  std::string label;
  std::uint32_t n{0};
  std::string ordering;
  variable_order order;
  entropy_report entropy;
  std::size_t bdd_nodes{0};
  std::uint64_t one_paths{0};
  std::size_t dsop_cubes{0};
  std::uint64_t dsop_literals{0};
  std::size_t sop_cubes{0};
  std::uint64_t sop_literals{0};
  std::optional<std::size_t> oracle_primes;
  std::optional<std::size_t> oracle_cubes;
  std::optional<std::uint64_t> oracle_literals;
  stage_timings timings;
};

struct pipeline_result
{
  stats_report stats;
  std::vector<std::string> names;
  cover dsop;
  cover sop;
  std::optional<cover> oracle;
};

namespace detail
{

class stage_clock
{
public:
  double lap()
  {
    const auto now = std::chrono::steady_clock::now();
    const auto ms = std::chrono::duration<double, std::milli>( now - last_ ).count();
    last_ = now;
    return ms;
  }

private:
  std::chrono::steady_clock::time_point last_{std::chrono::steady_clock::now()};
};

} // namespace detail

inline pipeline_result run_pipeline( const truth_table& tt, const pipeline_config& cfg )
{
  const auto n = tt.num_vars();
  if ( !cfg.names.empty() && cfg.names.size() != n )
  {
    throw std::invalid_argument( "expected " + std::to_string( n ) + " variable names, got " +
                                 std::to_string( cfg.names.size() ) );
  }

  pipeline_result result;
  result.names = cfg.names.empty() ? default_names( n ) : cfg.names;
  auto& st = result.stats;
  st.n = n;
  st.ordering = to_string( cfg.ordering );
  st.entropy = make_entropy_report( tt );

  detail::stage_clock clock;
  const auto initial = initial_order_for( tt, {cfg.ordering, cfg.given_order} );
  st.timings.order_ms = clock.lap();

  bdd_manager mgr( initial );
  const auto on = mgr.build( tt );
  if ( cfg.ordering == ordering_method::sift )
  {
    sift_paths( on );
  }
  st.order = mgr.order();
  st.bdd_nodes = node_count( on );
  st.one_paths = one_path_count( on );
  st.timings.build_ms = clock.lap();

  result.dsop = enumerate_one_paths( on );
  st.dsop_cubes = result.dsop.size();
  st.dsop_literals = literal_count( result.dsop );
  st.timings.enumerate_ms = clock.lap();

  result.sop = irredundant( expand( simplify( result.dsop ), on ), on );
  st.sop_cubes = result.sop.size();
  st.sop_literals = literal_count( result.sop );
  st.timings.minimize_ms = clock.lap();

  if ( cfg.oracle_qm )
  {
    st.oracle_primes = prime_implicants( tt ).size();
    result.oracle = exact_cover( tt );
    st.oracle_cubes = result.oracle->size();
    st.oracle_literals = literal_count( *result.oracle );
    st.timings.oracle_ms = clock.lap();
  }
  return result;
}

/*! \brief Violated report invariants as messages; empty when all hold. */
inline std::vector<std::string> check_invariants( const stats_report& st )
{
  std::vector<std::string> errors;
  if ( st.dsop_cubes != st.one_paths )
  {
    errors.push_back( "dsop_cubes (" + std::to_string( st.dsop_cubes ) + ") != one_paths (" +
                      std::to_string( st.one_paths ) + ")" );
  }
  if ( st.sop_cubes > st.dsop_cubes )
  {
    errors.push_back( "sop_cubes (" + std::to_string( st.sop_cubes ) + ") > dsop_cubes (" +
                      std::to_string( st.dsop_cubes ) + ")" );
  }
  if ( st.oracle_cubes && *st.oracle_cubes > st.sop_cubes )
  {
    errors.push_back( "oracle_cubes (" + std::to_string( *st.oracle_cubes ) + ") > sop_cubes (" +
                      std::to_string( st.sop_cubes ) + ")" );
  }
  return errors;
}

/*! \brief Report invariants plus function equivalence of every emitted cover with `tt`. */
inline std::vector<std::string> check_invariants( const pipeline_result& r, const truth_table& tt )
{
  auto errors = check_invariants( r.stats );
  if ( cover_to_truthtable( r.dsop ) != tt )
  {
    errors.push_back( "DSOP does not represent the input function" );
  }
  for ( std::size_t i = 0; i < r.dsop.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < r.dsop.size(); ++j )
    {
      if ( !cubes_disjoint( r.dsop[i], r.dsop[j] ) )
      {
        errors.push_back( "DSOP cubes " + std::to_string( i ) + " and " + std::to_string( j ) + " intersect" );
      }
    }
  }
  if ( cover_to_truthtable( r.sop ) != tt )
  {
    errors.push_back( "SOP does not represent the input function" );
  }
  if ( r.oracle && cover_to_truthtable( *r.oracle ) != tt )
  {
    errors.push_back( "exact cover does not represent the input function" );
  }
  return errors;
}

/*! \brief Uniformly random table drawn from raw 64-bit generator words (platform-independent). */
inline truth_table random_truth_table( std::uint32_t num_vars, std::mt19937_64& rng )
{
  truth_table tt( num_vars );
  std::uint64_t word = 0;
  for ( std::uint64_t m = 0; m < tt.num_bits(); ++m )
  {
    if ( m % 64 == 0 )
    {
      word = rng();
    }
    tt.set( m, ( word >> ( m % 64 ) ) & 1u );
  }
  return tt;
}

struct benchmark_config
{
  std::uint32_t count{100};
  std::uint32_t min_vars{4};
  std::uint32_t max_vars{4};
  std::uint64_t seed{1};
};

struct benchmark_run
{
  truth_table table;
  pipeline_result result;
};

/*! \brief Runs the pipeline on `count` seeded random functions; records are ordered by run index. */
inline std::vector<benchmark_run> run_benchmark( const benchmark_config& bench, const pipeline_config& cfg )
{
  if ( bench.min_vars < 1 || bench.min_vars > bench.max_vars || bench.max_vars > truth_table::max_vars )
  {
    throw std::invalid_argument( "invalid benchmark variable range" );
  }
  std::mt19937_64 rng( bench.seed );
  std::vector<benchmark_run> runs;
  runs.reserve( bench.count );
  const std::uint64_t span = bench.max_vars - bench.min_vars + 1;
  for ( std::uint32_t i = 0; i < bench.count; ++i )
  {
    const auto n = bench.min_vars + static_cast<std::uint32_t>( rng() % span );
    auto tt = random_truth_table( n, rng );
    auto run_cfg = cfg;
    run_cfg.names.clear();
    auto result = run_pipeline( tt, run_cfg );
    result.stats.label = "random-" + std::to_string( i );
    runs.push_back( {std::move( tt ), std::move( result )} );
  }
  return runs;
}

} // namespace dsopmin
