/*!
  \file ordering.hpp
  \brief Static variable ordering by conditional Shannon entropy.

  `I(x,v)` is the binary entropy of the output on the cofactor `x = v` and
  `E(x)` the average of `I(x,0)` and `I(x,1)` under the uniform input
  distribution. The order is chosen greedily: at each step the variable with
  the smallest average `E` over all subtables induced by the variables chosen
  so far goes next.
*/

#pragma once

#include "bdd.hpp"
#include "boolfn.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace dsopmin
{

/*! \brief `-p log2 p - (1-p) log2 (1-p)`, with `H(0) = H(1) = 0`. */
inline double binary_entropy( double p )
{
  if ( p <= 0.0 || p >= 1.0 )
  {
    return 0.0;
  }
  return -p * std::log2( p ) - ( 1.0 - p ) * std::log2( 1.0 - p );
}

inline double cofactor_entropy( const truth_table& tt, std::uint32_t var, bool value )
{
  if ( var >= tt.num_vars() )
  {
    throw std::out_of_range( "entropy variable out of range" );
  }
  std::uint64_t ones = 0;
  for ( std::uint64_t m = 0; m < tt.num_bits(); ++m )
  {
    if ( tt.var_value( m, var ) == value && tt.get( m ) )
    {
      ++ones;
    }
  }
  return binary_entropy( static_cast<double>( ones ) / static_cast<double>( tt.num_bits() / 2 ) );
}

inline double variable_entropy( const truth_table& tt, std::uint32_t var )
{
  return 0.5 * cofactor_entropy( tt, var, false ) + 0.5 * cofactor_entropy( tt, var, true );
}

struct variable_entropy_entry
{
  double i0;
  double i1;
  double e;
};

/*! \brief `I(x,0)`, `I(x,1)` and `E(x)` for every variable of the whole table. */
using entropy_report = std::vector<variable_entropy_entry>;

inline entropy_report make_entropy_report( const truth_table& tt )
{
  entropy_report report;
  for ( std::uint32_t v = 0; v < tt.num_vars(); ++v )
  {
    const auto i0 = cofactor_entropy( tt, v, false );
    const auto i1 = cofactor_entropy( tt, v, true );
    report.push_back( {i0, i1, 0.5 * i0 + 0.5 * i1} );
  }
  return report;
}

/*! \brief Greedy entropy order; ties go to the lowest variable index. */
inline variable_order entropy_order( const truth_table& tt )
{
  constexpr double tolerance = 1e-9;
  const auto n = tt.num_vars();
  const auto bits = tt.num_bits();

  // subtable id of each minterm, built from the values of the chosen variables
  std::vector<std::uint32_t> subtable( bits, 0 );
  std::uint32_t num_subtables = 1;
  std::vector<bool> chosen( n, false );
  std::vector<std::uint32_t> perm;
  perm.reserve( n );

  // counts[s][value] = {assignments, ones}
  std::vector<std::uint64_t> total( 2 * num_subtables );
  std::vector<std::uint64_t> ones( 2 * num_subtables );

  for ( std::uint32_t step = 0; step < n; ++step )
  {
    std::uint32_t best_var = n;
    double best_score = 0.0;
    for ( std::uint32_t v = 0; v < n; ++v )
    {
      if ( chosen[v] )
      {
        continue;
      }
      if ( step + 1 == n )
      {
        best_var = v;
        break;
      }
      total.assign( 2 * num_subtables, 0 );
      ones.assign( 2 * num_subtables, 0 );
      for ( std::uint64_t m = 0; m < bits; ++m )
      {
        const auto slot = 2 * subtable[m] + ( tt.var_value( m, v ) ? 1u : 0u );
        ++total[slot];
        ones[slot] += tt.get( m ) ? 1u : 0u;
      }
      double score = 0.0;
      for ( std::uint32_t s = 0; s < num_subtables; ++s )
      {
        const auto i0 = binary_entropy( static_cast<double>( ones[2 * s] ) / static_cast<double>( total[2 * s] ) );
        const auto i1 =
            binary_entropy( static_cast<double>( ones[2 * s + 1] ) / static_cast<double>( total[2 * s + 1] ) );
        score += 0.5 * i0 + 0.5 * i1;
      }
      score /= num_subtables;
      if ( best_var == n || score < best_score - tolerance )
      {
        best_var = v;
        best_score = score;
      }
    }
    chosen[best_var] = true;
    perm.push_back( best_var );
    if ( step + 1 == n )
    {
      break;
    }
    for ( std::uint64_t m = 0; m < bits; ++m )
    {
      subtable[m] = 2 * subtable[m] + ( tt.var_value( m, best_var ) ? 1u : 0u );
    }
    num_subtables *= 2;
  }
  return variable_order( std::move( perm ) );
}

} // namespace dsopmin
