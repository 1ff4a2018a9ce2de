// Brute-force reference computations used only by the tests. They work on
// cube text and raw minterm sets so they share no code path with the library.

#pragma once

#include <dsopmin/boolfn.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle
{

/* minterms of a cube text over {0,1,2}, variable 0 as the MSB */
inline std::set<std::uint64_t> minterms_of( const std::string& text )
{
  const auto n = text.size();
  std::set<std::uint64_t> result;
  for ( std::uint64_t m = 0; m < ( std::uint64_t{1} << n ); ++m )
  {
    bool match = true;
    for ( std::size_t i = 0; i < n && match; ++i )
    {
      const int bit = static_cast<int>( ( m >> ( n - 1 - i ) ) & 1u );
      match = text[i] == '2' || text[i] - '0' == bit;
    }
    if ( match )
    {
      result.insert( m );
    }
  }
  return result;
}

inline std::vector<std::string> all_cube_texts( std::size_t n )
{
  std::vector<std::string> result{""};
  for ( std::size_t i = 0; i < n; ++i )
  {
    std::vector<std::string> next;
    for ( const auto& p : result )
    {
      for ( char c : {'0', '1', '2'} )
      {
        next.push_back( p + c );
      }
    }
    result = std::move( next );
  }
  return result;
}

inline std::set<std::uint64_t> onset_of( const dsopmin::truth_table& tt )
{
  std::set<std::uint64_t> s;
  for ( std::uint64_t m = 0; m < tt.num_bits(); ++m )
  {
    if ( tt.get( m ) )
    {
      s.insert( m );
    }
  }
  return s;
}

inline std::set<std::uint64_t> union_of( const dsopmin::cover& f )
{
  std::set<std::uint64_t> s;
  for ( const auto& c : f )
  {
    const auto ms = minterms_of( c.to_string() );
    s.insert( ms.begin(), ms.end() );
  }
  return s;
}

/* maximal cubes inside the ON-set, sorted by text */
inline std::vector<std::string> brute_force_primes( const dsopmin::truth_table& tt )
{
  const auto on = onset_of( tt );
  std::vector<std::string> implicants;
  for ( const auto& t : all_cube_texts( tt.num_vars() ) )
  {
    const auto ms = minterms_of( t );
    if ( std::includes( on.begin(), on.end(), ms.begin(), ms.end() ) )
    {
      implicants.push_back( t );
    }
  }
  std::vector<std::string> primes;
  for ( const auto& c : implicants )
  {
    bool maximal = true;
    for ( std::size_t i = 0; i < c.size() && maximal; ++i )
    {
      if ( c[i] == '2' )
      {
        continue;
      }
      auto raised = c;
      raised[i] = '2';
      maximal = std::find( implicants.begin(), implicants.end(), raised ) == implicants.end();
    }
    if ( maximal )
    {
      primes.push_back( c );
    }
  }
  std::sort( primes.begin(), primes.end() );
  return primes;
}

/* smallest number of primes covering the ON-set, by subset enumeration in increasing size */
inline std::size_t brute_force_min_cover_size( const dsopmin::truth_table& tt )
{
  const auto on = onset_of( tt );
  if ( on.empty() )
  {
    return 0;
  }
  const auto primes = brute_force_primes( tt );
  std::vector<std::set<std::uint64_t>> sets;
  for ( const auto& p : primes )
  {
    sets.push_back( minterms_of( p ) );
  }
  for ( std::size_t k = 1; k <= primes.size(); ++k )
  {
    std::vector<bool> pick( primes.size(), false );
    std::fill( pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>( k ), true );
    do
    {
      std::set<std::uint64_t> covered;
      for ( std::size_t i = 0; i < primes.size(); ++i )
      {
        if ( pick[i] )
        {
          covered.insert( sets[i].begin(), sets[i].end() );
        }
      }
      if ( covered == on )
      {
        return k;
      }
    } while ( std::prev_permutation( pick.begin(), pick.end() ) );
  }
  return primes.size();
}

inline dsopmin::truth_table random_table( std::uint32_t n, std::mt19937_64& rng )
{
  dsopmin::truth_table tt( n );
  for ( std::uint64_t m = 0; m < tt.num_bits(); ++m )
  {
    tt.set( m, rng() & 1u );
  }
  return tt;
}

inline std::set<std::string> texts( const dsopmin::cover& f )
{
  std::set<std::string> s;
  for ( const auto& c : f )
  {
    s.insert( c.to_string() );
  }
  return s;
}

} // namespace oracle
