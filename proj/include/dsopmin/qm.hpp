/*!
  \file qm.hpp
  \brief Quine-McCluskey prime generation and exact minimum covering.

  Used as the optimality oracle for the heuristic minimizer. Limited to 16
  variables.
*/

#pragma once

#include "boolfn.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace dsopmin
{

inline constexpr std::uint32_t qm_max_vars = 16;

struct implicant
{
  cube term;
  std::vector<std::uint64_t> covered; /*!< ON-set minterms of `term`, ascending */
};

namespace detail
{

inline void require_qm_size( const truth_table& tt )
{
  if ( tt.num_vars() > qm_max_vars )
  {
    throw std::invalid_argument( "Quine-McCluskey is limited to " + std::to_string( qm_max_vars ) + " variables" );
  }
}

/* value/mask encoding in minterm bit order; a set mask bit is a don't-care */
inline cube cube_from_bits( std::uint32_t n, std::uint32_t value, std::uint32_t mask )
{
  cube c( n );
  for ( std::uint32_t i = 0; i < n; ++i )
  {
    const auto bit = std::uint32_t{1} << ( n - 1 - i );
    c[i] = ( mask & bit ) ? trit::dont_care : ( value & bit ) ? trit::one : trit::zero;
  }
  return c;
}

inline implicant make_implicant( cube c )
{
  implicant imp{std::move( c ), {}};
  for_each_minterm( imp.term, [&]( std::uint64_t m ) { imp.covered.push_back( m ); } );
  std::sort( imp.covered.begin(), imp.covered.end() );
  return imp;
}

} // namespace detail

/*! \brief All prime implicants by iterated adjacency combination, sorted by cube text. */
inline std::vector<implicant> prime_implicants( const truth_table& tt )
{
  detail::require_qm_size( tt );
  const auto n = tt.num_vars();
  auto key = []( std::uint32_t value, std::uint32_t mask ) { return ( std::uint64_t{mask} << 32 ) | value; };

  std::unordered_set<std::uint64_t> current;
  for ( auto m : tt.minterms() )
  {
    current.insert( key( static_cast<std::uint32_t>( m ), 0 ) );
  }

  std::vector<cube> primes;
  while ( !current.empty() )
  {
    std::unordered_set<std::uint64_t> next;
    std::unordered_set<std::uint64_t> combined;
    for ( auto k : current )
    {
      const auto value = static_cast<std::uint32_t>( k );
      const auto mask = static_cast<std::uint32_t>( k >> 32 );
      for ( std::uint32_t b = 0; b < n; ++b )
      {
        const auto bit = std::uint32_t{1} << b;
        if ( ( mask & bit ) || ( value & bit ) )
        {
          continue;
        }
        const auto partner = key( value | bit, mask );
        if ( current.count( partner ) )
        {
          next.insert( key( value, mask | bit ) );
          combined.insert( k );
          combined.insert( partner );
        }
      }
    }
    for ( auto k : current )
    {
      if ( !combined.count( k ) )
      {
        primes.push_back( detail::cube_from_bits( n, static_cast<std::uint32_t>( k ),
                                                  static_cast<std::uint32_t>( k >> 32 ) ) );
      }
    }
    current = std::move( next );
  }

  std::sort( primes.begin(), primes.end(),
             []( const cube& a, const cube& b ) { return a.to_string() < b.to_string(); } );
  std::vector<implicant> result;
  result.reserve( primes.size() );
  for ( auto& p : primes )
  {
    result.push_back( detail::make_implicant( std::move( p ) ) );
  }
  return result;
}

/*! \brief Prime-by-minterm incidence chart. */
struct pi_chart
{
  std::vector<implicant> rows;
  std::vector<std::uint64_t> columns;                   /*!< ON-set minterms */
  std::vector<std::vector<std::size_t>> row_columns;    /*!< column positions covered by each row */
  std::vector<std::vector<std::size_t>> column_rows;    /*!< rows covering each column */
};

inline pi_chart make_chart( const truth_table& tt, std::vector<implicant> primes )
{
  pi_chart chart;
  chart.columns = tt.minterms();
  chart.rows = std::move( primes );
  chart.row_columns.resize( chart.rows.size() );
  chart.column_rows.resize( chart.columns.size() );
  for ( std::size_t r = 0; r < chart.rows.size(); ++r )
  {
    for ( auto m : chart.rows[r].covered )
    {
      const auto it = std::lower_bound( chart.columns.begin(), chart.columns.end(), m );
      if ( it == chart.columns.end() || *it != m )
      {
        throw std::invalid_argument( "implicant covers a minterm outside the ON-set" );
      }
      const auto c = static_cast<std::size_t>( it - chart.columns.begin() );
      chart.row_columns[r].push_back( c );
      chart.column_rows[c].push_back( r );
    }
  }
  for ( const auto& rows : chart.column_rows )
  {
    if ( rows.empty() )
    {
      throw std::invalid_argument( "chart has an uncovered minterm" );
    }
  }
  return chart;
}

inline pi_chart make_chart( const truth_table& tt )
{
  return make_chart( tt, prime_implicants( tt ) );
}

/*! \brief Rows that alone cover some column, in row order. */
inline std::vector<implicant> essential_primes( const pi_chart& chart )
{
  std::vector<bool> essential( chart.rows.size(), false );
  for ( const auto& rows : chart.column_rows )
  {
    if ( rows.size() == 1 )
    {
      essential[rows.front()] = true;
    }
  }
  std::vector<implicant> result;
  for ( std::size_t r = 0; r < chart.rows.size(); ++r )
  {
    if ( essential[r] )
    {
      result.push_back( chart.rows[r] );
    }
  }
  return result;
}

namespace detail
{

/*! \brief Reduces a chart and solves its cyclic core exactly.

  Covers compare by cube count, then literal count, then the sorted list of
  cube texts.
*/
class cover_solver
{
public:
  static constexpr std::size_t petrick_column_limit = 12;

  explicit cover_solver( const pi_chart& chart )
      : chart_( chart ), row_alive_( chart.rows.size(), true ), col_alive_( chart.columns.size(), true )
  {
    for ( const auto& imp : chart.rows )
    {
      literals_.push_back( imp.term.literal_count() );
      texts_.push_back( imp.term.to_string() );
    }
  }

  std::vector<std::size_t> solve()
  {
    reduce();
    std::vector<std::size_t> core_cols;
    std::vector<std::size_t> core_rows;
    for ( std::size_t c = 0; c < col_alive_.size(); ++c )
    {
      if ( col_alive_[c] )
      {
        core_cols.push_back( c );
      }
    }
    for ( std::size_t r = 0; r < row_alive_.size(); ++r )
    {
      if ( row_alive_[r] )
      {
        core_rows.push_back( r );
      }
    }
    if ( !core_cols.empty() )
    {
      const auto extra = core_cols.size() < petrick_column_limit ? petrick( core_cols )
                                                                 : branch_and_bound( core_rows, core_cols );
      selected_.insert( selected_.end(), extra.begin(), extra.end() );
    }
    return selected_;
  }

  /*! \brief True iff `a` is a better (selected + a) cover than (selected + b). */
  bool better( const std::vector<std::size_t>& a, const std::vector<std::size_t>& b ) const
  {
    if ( a.size() != b.size() )
    {
      return a.size() < b.size();
    }
    const auto la = literal_sum( a );
    const auto lb = literal_sum( b );
    if ( la != lb )
    {
      return la < lb;
    }
    return sorted_texts( a ) < sorted_texts( b );
  }

  std::vector<std::size_t> petrick( const std::vector<std::size_t>& cols ) const
  {
    using term = std::vector<std::size_t>;
    std::set<term> products{term{}};
    for ( auto c : cols )
    {
      std::set<term> next;
      for ( const auto& p : products )
      {
        for ( auto r : chart_.column_rows[c] )
        {
          if ( !row_alive_[r] )
          {
            continue;
          }
          auto q = p;
          if ( !std::binary_search( q.begin(), q.end(), r ) )
          {
            q.insert( std::upper_bound( q.begin(), q.end(), r ), r );
          }
          next.insert( std::move( q ) );
        }
      }
      products = absorb( next );
    }
    std::optional<term> best;
    for ( const auto& p : products )
    {
      if ( !best || better( p, *best ) )
      {
        best = p;
      }
    }
    return *best;
  }

  std::vector<std::size_t> branch_and_bound( const std::vector<std::size_t>& rows,
                                             const std::vector<std::size_t>& cols )
  {
    std::vector<bool> uncovered( chart_.columns.size(), false );
    for ( auto c : cols )
    {
      uncovered[c] = true;
    }
    std::vector<std::size_t> chosen;
    best_.reset();
    search( rows, uncovered, cols.size(), chosen );
    return *best_;
  }

private:
  std::uint64_t literal_sum( const std::vector<std::size_t>& extra ) const
  {
    std::uint64_t total = 0;
    for ( auto r : selected_ )
    {
      total += literals_[r];
    }
    for ( auto r : extra )
    {
      total += literals_[r];
    }
    return total;
  }

  std::vector<std::string> sorted_texts( const std::vector<std::size_t>& extra ) const
  {
    std::vector<std::string> texts;
    for ( auto r : selected_ )
    {
      texts.push_back( texts_[r] );
    }
    for ( auto r : extra )
    {
      texts.push_back( texts_[r] );
    }
    std::sort( texts.begin(), texts.end() );
    return texts;
  }

  static std::set<std::vector<std::size_t>> absorb( const std::set<std::vector<std::size_t>>& terms )
  {
    std::vector<std::vector<std::size_t>> by_size( terms.begin(), terms.end() );
    std::stable_sort( by_size.begin(), by_size.end(), []( const auto& a, const auto& b ) { return a.size() < b.size(); } );
    std::vector<std::vector<std::size_t>> kept;
    for ( const auto& t : by_size )
    {
      const bool absorbed = std::any_of( kept.begin(), kept.end(), [&]( const auto& k ) {
        return std::includes( t.begin(), t.end(), k.begin(), k.end() );
      } );
      if ( !absorbed )
      {
        kept.push_back( t );
      }
    }
    return {kept.begin(), kept.end()};
  }

  std::size_t live_coverage( std::size_t r ) const
  {
    return static_cast<std::size_t>( std::count_if( chart_.row_columns[r].begin(), chart_.row_columns[r].end(),
                                                    [&]( auto c ) { return col_alive_[c]; } ) );
  }

  bool row_key_less( std::size_t a, std::size_t b ) const
  {
    return literals_[a] != literals_[b] ? literals_[a] < literals_[b] : texts_[a] < texts_[b];
  }

  void select( std::size_t r )
  {
    selected_.push_back( r );
    row_alive_[r] = false;
    for ( auto c : chart_.row_columns[r] )
    {
      col_alive_[c] = false;
    }
  }

  void reduce()
  {
    for ( bool changed = true; changed; )
    {
      changed = false;

      // essential rows of the current chart
      for ( std::size_t c = 0; c < col_alive_.size(); ++c )
      {
        if ( !col_alive_[c] )
        {
          continue;
        }
        std::size_t count = 0;
        std::size_t only = 0;
        for ( auto r : chart_.column_rows[c] )
        {
          if ( row_alive_[r] )
          {
            ++count;
            only = r;
          }
        }
        if ( count == 1 )
        {
          select( only );
          changed = true;
        }
      }

      // row dominance: drop r when a better-or-equal row s covers all its live columns
      std::vector<std::vector<std::size_t>> live( chart_.rows.size() );
      for ( std::size_t r = 0; r < row_alive_.size(); ++r )
      {
        if ( !row_alive_[r] )
        {
          continue;
        }
        for ( auto c : chart_.row_columns[r] )
        {
          if ( col_alive_[c] )
          {
            live[r].push_back( c );
          }
        }
        if ( live[r].empty() )
        {
          row_alive_[r] = false;
          changed = true;
        }
      }
      for ( std::size_t r = 0; r < row_alive_.size(); ++r )
      {
        if ( !row_alive_[r] )
        {
          continue;
        }
        for ( std::size_t s = 0; s < row_alive_.size(); ++s )
        {
          if ( s == r || !row_alive_[s] || !row_key_less( s, r ) )
          {
            continue;
          }
          if ( std::includes( live[s].begin(), live[s].end(), live[r].begin(), live[r].end() ) )
          {
            row_alive_[r] = false;
            changed = true;
            break;
          }
        }
      }

      // column dominance: drop d when some column c has a subset of its rows
      std::vector<std::vector<std::size_t>> rows_of( chart_.columns.size() );
      for ( std::size_t c = 0; c < col_alive_.size(); ++c )
      {
        if ( !col_alive_[c] )
        {
          continue;
        }
        for ( auto r : chart_.column_rows[c] )
        {
          if ( row_alive_[r] )
          {
            rows_of[c].push_back( r );
          }
        }
      }
      for ( std::size_t d = 0; d < col_alive_.size(); ++d )
      {
        if ( !col_alive_[d] )
        {
          continue;
        }
        for ( std::size_t c = 0; c < col_alive_.size(); ++c )
        {
          if ( c == d || !col_alive_[c] )
          {
            continue;
          }
          const bool subset = std::includes( rows_of[d].begin(), rows_of[d].end(), rows_of[c].begin(), rows_of[c].end() );
          if ( subset && ( rows_of[c] != rows_of[d] || c < d ) )
          {
            col_alive_[d] = false;
            changed = true;
            break;
          }
        }
      }
    }
  }

  void search( const std::vector<std::size_t>& rows, std::vector<bool>& uncovered, std::size_t remaining,
               std::vector<std::size_t>& chosen )
  {
    if ( remaining == 0 )
    {
      if ( !best_ || better( chosen, *best_ ) )
      {
        best_ = chosen;
      }
      return;
    }
    std::size_t max_cov = 0;
    std::size_t pick = 0;
    std::vector<std::size_t> candidates;
    for ( auto r : rows )
    {
      std::size_t cov = 0;
      for ( auto c : chart_.row_columns[r] )
      {
        cov += uncovered[c];
      }
      if ( cov == 0 )
      {
        continue;
      }
      candidates.push_back( r );
      if ( cov > max_cov || ( cov == max_cov && row_key_less( r, pick ) ) )
      {
        max_cov = cov;
        pick = r;
      }
    }
    if ( max_cov == 0 )
    {
      return;
    }
    const auto bound = chosen.size() + ( remaining + max_cov - 1 ) / max_cov;
    if ( best_ )
    {
      if ( bound > best_->size() )
      {
        return;
      }
      if ( bound == best_->size() && literal_sum( chosen ) > literal_sum( *best_ ) )
      {
        return;
      }
    }
    std::vector<std::size_t> rest;
    for ( auto r : candidates )
    {
      if ( r != pick )
      {
        rest.push_back( r );
      }
    }

    std::vector<std::size_t> newly;
    for ( auto c : chart_.row_columns[pick] )
    {
      if ( uncovered[c] )
      {
        uncovered[c] = false;
        newly.push_back( c );
      }
    }
    chosen.push_back( pick );
    search( rest, uncovered, remaining - newly.size(), chosen );
    chosen.pop_back();
    for ( auto c : newly )
    {
      uncovered[c] = true;
    }

    search( rest, uncovered, remaining, chosen );
  }

  const pi_chart& chart_;
  std::vector<bool> row_alive_;
  std::vector<bool> col_alive_;
  std::vector<std::uint32_t> literals_;
  std::vector<std::string> texts_;
  std::vector<std::size_t> selected_;
  std::optional<std::vector<std::size_t>> best_;
};

} // namespace detail

/*! \brief A minimum-cardinality prime cover; ties go to fewer literals, then to the smaller sorted cube text list.

  Essential rows, row dominance and column dominance are applied until
  fixpoint; the remaining cyclic core is solved by Petrick expansion when
  small and by branch and bound otherwise. The result is sorted by cube text.
*/
inline cover exact_cover( const truth_table& tt )
{
  detail::require_qm_size( tt );
  cover result( tt.num_vars() );
  if ( tt.is_const0() )
  {
    return result;
  }
  const auto chart = make_chart( tt );
  detail::cover_solver solver( chart );
  auto rows = solver.solve();
  std::vector<cube> cubes;
  for ( auto r : rows )
  {
    cubes.push_back( chart.rows[r].term );
  }
  std::sort( cubes.begin(), cubes.end(), []( const cube& a, const cube& b ) { return a.to_string() < b.to_string(); } );
  return cover( tt.num_vars(), std::move( cubes ) );
}

} // namespace dsopmin
