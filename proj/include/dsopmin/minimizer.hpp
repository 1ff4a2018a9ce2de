/*!
  \file minimizer.hpp
  \brief Two-level minimization of a disjoint cover by the unate recursive paradigm.

  A cover is split on its most binate variable, both cofactors are simplified
  recursively, and the results are merged back, lifting cubes that are
  shared up to containment so they drop the splitting variable. Unate covers
  are simplified by single-cube containment alone. The result is then
  expanded towards primes and made irredundant against the ON-set held as a
  BDD.
*/

#pragma once

#include "bdd.hpp"
#include "boolfn.hpp"
#include "ordering.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dsopmin
{

/*! \brief Cube-by-variable view of a cover. Does not own the cover. */
class covering_matrix
{
public:
  explicit covering_matrix( const cover& f )
      : cover_( &f )
  {
  }

  std::size_t rows() const { return cover_->size(); }
  std::uint32_t cols() const { return cover_->num_vars(); }
  trit entry( std::size_t row, std::uint32_t col ) const { return ( *cover_ )[row][col]; }
  const cube& row( std::size_t i ) const { return ( *cover_ )[i]; }

private:
  const cover* cover_;
};

inline covering_matrix build_matrix( const cover& f )
{
  return covering_matrix( f );
}

enum class monotonicity
{
  pos_unate,
  neg_unate,
  binate,
  absent
};

struct unateness
{
  std::vector<monotonicity> columns;
  bool unate{true};
};

inline unateness classify( const cover& f )
{
  unateness result;
  result.columns.reserve( f.num_vars() );
  for ( std::uint32_t v = 0; v < f.num_vars(); ++v )
  {
    bool has0 = false;
    bool has1 = false;
    for ( const auto& c : f )
    {
      has0 |= c[v] == trit::zero;
      has1 |= c[v] == trit::one;
    }
    const auto m = has0 && has1 ? monotonicity::binate
                   : has0       ? monotonicity::neg_unate
                   : has1       ? monotonicity::pos_unate
                                : monotonicity::absent;
    result.columns.push_back( m );
    result.unate &= m != monotonicity::binate;
  }
  return result;
}

/*! \brief The binate column with the most literals; ties prefer balanced polarity, then lower index. */
inline std::uint32_t select_binate( const cover& f )
{
  std::optional<std::uint32_t> best;
  std::size_t best_count = 0;
  std::size_t best_imbalance = 0;
  for ( std::uint32_t v = 0; v < f.num_vars(); ++v )
  {
    std::size_t zeros = 0;
    std::size_t ones = 0;
    for ( const auto& c : f )
    {
      zeros += c[v] == trit::zero;
      ones += c[v] == trit::one;
    }
    if ( zeros == 0 || ones == 0 )
    {
      continue;
    }
    const auto count = zeros + ones;
    const auto imbalance = zeros > ones ? zeros - ones : ones - zeros;
    if ( !best || count > best_count || ( count == best_count && imbalance < best_imbalance ) )
    {
      best = v;
      best_count = count;
      best_imbalance = imbalance;
    }
  }
  if ( !best )
  {
    throw std::invalid_argument( "select_binate on a unate cover" );
  }
  return *best;
}

inline cover cover_cofactor( const cover& f, std::uint32_t var, bool value )
{
  if ( var >= f.num_vars() )
  {
    throw std::out_of_range( "cofactor variable out of range" );
  }
  cover result( f.num_vars() );
  for ( const auto& c : f )
  {
    if ( auto r = cube_cofactor( c, var, value ) )
    {
      result.push_back( std::move( *r ) );
    }
  }
  return result;
}

/*! \brief Single-cube containment: drops cubes contained in another cube; of identical cubes the first survives. */
inline cover scc( const cover& f )
{
  cover result( f.num_vars() );
  for ( std::size_t i = 0; i < f.size(); ++i )
  {
    bool contained = false;
    for ( std::size_t j = 0; j < f.size() && !contained; ++j )
    {
      if ( i == j || !cube_contains( f[j], f[i] ) )
      {
        continue;
      }
      contained = f[j] != f[i] || j < i;
    }
    if ( !contained )
    {
      result.push_back( f[i] );
    }
  }
  return result;
}

/*! \brief Recombines `x'·h0 + x·h1`.

  Cubes of either side contained in a cube of the other side are lifted
  unchanged (they keep `x` as don't-care). The remaining cubes of `h0` get
  the literal `x'`, those of `h1` the literal `x`. Neither input may mention
  `var`.
*/
inline cover merge_with_containment( const cover& h0, const cover& h1, std::uint32_t var )
{
  if ( h0.num_vars() != h1.num_vars() || var >= h0.num_vars() )
  {
    throw std::invalid_argument( "merge operands disagree on variable count" );
  }
  for ( const auto* h : {&h0, &h1} )
  {
    for ( const auto& c : *h )
    {
      if ( c[var] != trit::dont_care )
      {
        throw std::invalid_argument( "merge operand mentions the splitting variable" );
      }
    }
  }

  auto contained_in = []( const cube& c, const cover& other ) {
    return std::any_of( other.begin(), other.end(), [&]( const cube& d ) { return cube_contains( d, c ); } );
  };

  std::vector<cube> lifted;
  std::vector<bool> lifted0( h0.size(), false );
  std::vector<bool> lifted1( h1.size(), false );
  for ( std::size_t i = 0; i < h0.size(); ++i )
  {
    if ( contained_in( h0[i], h1 ) )
    {
      lifted0[i] = true;
      lifted.push_back( h0[i] );
    }
  }
  for ( std::size_t j = 0; j < h1.size(); ++j )
  {
    if ( contained_in( h1[j], h0 ) )
    {
      lifted1[j] = true;
      if ( std::find( lifted.begin(), lifted.end(), h1[j] ) == lifted.end() )
      {
        lifted.push_back( h1[j] );
      }
    }
  }

  cover result( h0.num_vars(), std::move( lifted ) );
  for ( std::size_t i = 0; i < h0.size(); ++i )
  {
    if ( !lifted0[i] )
    {
      result.push_back( h0[i].with( var, trit::zero ) );
    }
  }
  for ( std::size_t j = 0; j < h1.size(); ++j )
  {
    if ( !lifted1[j] )
    {
      result.push_back( h1[j].with( var, trit::one ) );
    }
  }
  return scc( result );
}

/*! \brief Unate recursive simplification; never returns more cubes than the input. */
inline cover simplify( const cover& f )
{
  if ( f.empty() )
  {
    return f;
  }
  if ( std::any_of( f.begin(), f.end(), []( const cube& c ) { return c.is_universal(); } ) )
  {
    return cover( f.num_vars(), {cube::universal( f.num_vars() )} );
  }
  auto base = scc( f );
  if ( classify( f ).unate )
  {
    return base;
  }
  const auto x = select_binate( f );
  const auto h0 = simplify( cover_cofactor( f, x, false ) );
  const auto h1 = simplify( cover_cofactor( f, x, true ) );
  auto merged = merge_with_containment( h0, h1, x );
  return merged.size() <= base.size() ? merged : base;
}

/*! \brief Raises literals to don't-care while the cube stays inside ON(f).

  Cubes are processed in cover order and variables by ascending index.
*/
inline cover expand( const cover& f, const bdd_function& on )
{
  cover result( f.num_vars() );
  for ( const auto& c : f )
  {
    if ( !cube_in_function( c, on ) )
    {
      throw std::invalid_argument( "expand: cube " + c.to_string() + " is not an implicant" );
    }
    auto raised = c;
    for ( std::uint32_t v = 0; v < raised.num_vars(); ++v )
    {
      if ( raised[v] == trit::dont_care )
      {
        continue;
      }
      auto candidate = raised.with( v, trit::dont_care );
      if ( cube_in_function( candidate, on ) )
      {
        raised = std::move( candidate );
      }
    }
    result.push_back( std::move( raised ) );
  }
  return result;
}

/*! \brief Greedy first-to-last removal of cubes not needed to represent `on`. */
inline cover irredundant( const cover& f, const bdd_function& on )
{
  auto& mgr = on.manager();
  std::vector<cube> cubes;
  for ( const auto& c : f )
  {
    if ( std::find( cubes.begin(), cubes.end(), c ) == cubes.end() )
    {
      cubes.push_back( c );
    }
  }
  if ( from_cover( mgr, cover( f.num_vars(), cubes ) ) != on )
  {
    throw std::invalid_argument( "irredundant: cover does not represent the function" );
  }
  for ( std::size_t i = 0; i < cubes.size(); )
  {
    auto rest = mgr.constant( false );
    for ( std::size_t j = 0; j < cubes.size(); ++j )
    {
      if ( j != i )
      {
        rest = rest | from_cube( mgr, cubes[j] );
      }
    }
    if ( rest == on )
    {
      cubes.erase( cubes.begin() + static_cast<std::ptrdiff_t>( i ) );
    }
    else
    {
      ++i;
    }
  }
  return cover( f.num_vars(), std::move( cubes ) );
}

enum class ordering_method
{
  entropy,
  given,
  sift
};

struct minimize_config
{
  ordering_method ordering{ordering_method::entropy};
  /*! \brief Order for `given`, and the starting order for `sift`; identity when empty. */
  std::optional<variable_order> initial_order;
};

inline variable_order initial_order_for( const truth_table& tt, const minimize_config& cfg )
{
  if ( cfg.ordering == ordering_method::entropy )
  {
    return entropy_order( tt );
  }
  if ( cfg.initial_order )
  {
    if ( cfg.initial_order->size() != tt.num_vars() )
    {
      throw std::invalid_argument( "given order does not match the variable count" );
    }
    return *cfg.initial_order;
  }
  return variable_order::identity( tt.num_vars() );
}

/*! \brief Full pipeline: order, build, one-path DSOP, simplify, expand, irredundant. */
inline cover minimize( const truth_table& tt, const minimize_config& cfg = {} )
{
  bdd_manager mgr( initial_order_for( tt, cfg ) );
  const auto on = mgr.build( tt );
  if ( cfg.ordering == ordering_method::sift )
  {
    sift_paths( on );
  }
  const auto dsop = enumerate_one_paths( on );
  return irredundant( expand( simplify( dsop ), on ), on );
}

} // namespace dsopmin
