/*!
  \file boolfn.hpp
  \brief Truth tables, cubes in positional notation, and covers.

  A cube holds one trit per variable: 0 for a complemented literal, 1 for a
  positive literal and 2 for an absent variable. A cover is an ordered list
  of cubes read as their disjunction.

  Minterm indices put variable 0 in the most significant bit, so for four
  variables named a, b, c, d the minterm 5 = 0101 is a'bc'd.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dsopmin
{

enum class trit : std::uint8_t
{
  zero = 0,
  one = 1,
  dont_care = 2
};

inline char to_char( trit t )
{
  return static_cast<char>( '0' + static_cast<int>( t ) );
}

/*! \brief Parses one of `0`, `1`, `2` or `-` (alias for `2`). */
inline trit trit_from_char( char c )
{
  switch ( c )
  {
  case '0':
    return trit::zero;
  case '1':
    return trit::one;
  case '2':
  case '-':
    return trit::dont_care;
  default:
    throw std::invalid_argument( std::string( "illegal cube character '" ) + c + "'" );
  }
}

/*! \brief An implicant over a fixed number of variables. */
class cube
{
public:
  cube() = default;

  explicit cube( std::uint32_t num_vars, trit fill = trit::dont_care )
      : trits_( num_vars, fill )
  {
  }

  explicit cube( std::vector<trit> trits )
      : trits_( std::move( trits ) )
  {
  }

  static cube universal( std::uint32_t num_vars ) { return cube( num_vars ); }

  /*! \brief Decodes positional text; `text.size()` must equal `num_vars`. */
  static cube parse( std::string_view text, std::uint32_t num_vars )
  {
    if ( text.size() != num_vars )
    {
      throw std::invalid_argument( "cube text '" + std::string( text ) + "' has length " + std::to_string( text.size() ) +
                                   ", expected " + std::to_string( num_vars ) );
    }
    std::vector<trit> trits;
    trits.reserve( text.size() );
    for ( char c : text )
    {
      trits.push_back( trit_from_char( c ) );
    }
    return cube( std::move( trits ) );
  }

  /*! \brief Canonical text over `{0,1,2}`. */
  std::string to_string() const
  {
    std::string s;
    s.reserve( trits_.size() );
    for ( auto t : trits_ )
    {
      s.push_back( to_char( t ) );
    }
    return s;
  }

  std::uint32_t num_vars() const { return static_cast<std::uint32_t>( trits_.size() ); }
  trit operator[]( std::uint32_t var ) const { return trits_[var]; }
  trit& operator[]( std::uint32_t var ) { return trits_[var]; }
  std::span<const trit> trits() const { return trits_; }

  bool is_universal() const
  {
    return std::all_of( trits_.begin(), trits_.end(), []( trit t ) { return t == trit::dont_care; } );
  }

  std::uint32_t literal_count() const
  {
    return static_cast<std::uint32_t>(
        std::count_if( trits_.begin(), trits_.end(), []( trit t ) { return t != trit::dont_care; } ) );
  }

  /*! \brief Returns a copy with `var` set to `value`. */
  cube with( std::uint32_t var, trit value ) const
  {
    auto copy = *this;
    copy.trits_[var] = value;
    return copy;
  }

  friend bool operator==( const cube&, const cube& ) = default;
  friend auto operator<=>( const cube&, const cube& ) = default;

private:
  std::vector<trit> trits_;
};

namespace detail
{

inline void require_same_length( const cube& a, const cube& b )
{
  if ( a.num_vars() != b.num_vars() )
  {
    throw std::invalid_argument( "cube length mismatch: " + std::to_string( a.num_vars() ) + " vs " +
                                 std::to_string( b.num_vars() ) );
  }
}

} // namespace detail

/*! \brief True iff every minterm of `inner` is a minterm of `outer`. */
inline bool cube_contains( const cube& outer, const cube& inner )
{
  detail::require_same_length( outer, inner );
  for ( std::uint32_t i = 0; i < outer.num_vars(); ++i )
  {
    if ( outer[i] != trit::dont_care && outer[i] != inner[i] )
    {
      return false;
    }
  }
  return true;
}

/*! \brief True iff the cubes share no minterm, i.e. some position holds opposing literals. */
inline bool cubes_disjoint( const cube& a, const cube& b )
{
  detail::require_same_length( a, b );
  for ( std::uint32_t i = 0; i < a.num_vars(); ++i )
  {
    if ( a[i] != trit::dont_care && b[i] != trit::dont_care && a[i] != b[i] )
    {
      return true;
    }
  }
  return false;
}

/*! \brief Shannon cofactor of a cube.

  Returns `std::nullopt` when the cube's literal on `var` opposes `value`;
  otherwise the cube with that position raised to don't-care.
*/
inline std::optional<cube> cube_cofactor( const cube& c, std::uint32_t var, bool value )
{
  if ( var >= c.num_vars() )
  {
    throw std::out_of_range( "cofactor variable out of range" );
  }
  const auto want = value ? trit::one : trit::zero;
  if ( c[var] != trit::dont_care && c[var] != want )
  {
    return std::nullopt;
  }
  return c.with( var, trit::dont_care );
}

using assignment = std::vector<bool>;

/*! \brief Decodes minterm index `m` into per-variable bits (variable 0 is the MSB). */
inline assignment assignment_from_minterm( std::uint32_t num_vars, std::uint64_t m )
{
  assignment a( num_vars );
  for ( std::uint32_t i = 0; i < num_vars; ++i )
  {
    a[i] = ( m >> ( num_vars - 1 - i ) ) & 1u;
  }
  return a;
}

inline bool cube_matches( const cube& c, const assignment& a )
{
  for ( std::uint32_t i = 0; i < c.num_vars(); ++i )
  {
    if ( c[i] != trit::dont_care && ( c[i] == trit::one ) != a[i] )
    {
      return false;
    }
  }
  return true;
}

/*! \brief A sum of products over `num_vars` variables. */
class cover
{
public:
  cover() = default;
  explicit cover( std::uint32_t num_vars )
      : num_vars_( num_vars )
  {
  }

  cover( std::uint32_t num_vars, std::vector<cube> cubes )
      : num_vars_( num_vars )
  {
    cubes_.reserve( cubes.size() );
    for ( auto& c : cubes )
    {
      push_back( std::move( c ) );
    }
  }

  /*! \brief Builds a cover from cube texts, e.g. `{"1122", "2201"}`. */
  static cover parse( std::uint32_t num_vars, std::initializer_list<std::string_view> texts )
  {
    cover result( num_vars );
    for ( auto t : texts )
    {
      result.push_back( cube::parse( t, num_vars ) );
    }
    return result;
  }

  void push_back( cube c )
  {
    if ( c.num_vars() != num_vars_ )
    {
      throw std::invalid_argument( "cube of length " + std::to_string( c.num_vars() ) + " added to cover over " +
                                   std::to_string( num_vars_ ) + " variables" );
    }
    cubes_.push_back( std::move( c ) );
  }

  std::uint32_t num_vars() const { return num_vars_; }
  std::size_t size() const { return cubes_.size(); }
  bool empty() const { return cubes_.empty(); }
  const cube& operator[]( std::size_t i ) const { return cubes_[i]; }
  const std::vector<cube>& cubes() const { return cubes_; }
  auto begin() const { return cubes_.begin(); }
  auto end() const { return cubes_.end(); }

  friend bool operator==( const cover&, const cover& ) = default;

private:
  std::uint32_t num_vars_{0};
  std::vector<cube> cubes_;
};

inline bool cover_eval( const cover& f, const assignment& a )
{
  if ( a.size() != f.num_vars() )
  {
    throw std::invalid_argument( "assignment length does not match cover" );
  }
  return std::any_of( f.begin(), f.end(), [&]( const cube& c ) { return cube_matches( c, a ); } );
}

/*! \brief Total number of literals over all cubes. */
inline std::uint64_t literal_count( const cover& f )
{
  std::uint64_t total = 0;
  for ( const auto& c : f )
  {
    total += c.literal_count();
  }
  return total;
}

/*! \brief Completely specified single-output function stored as its ON-set bit vector. */
class truth_table
{
public:
  static constexpr std::uint32_t max_vars = 24;

  truth_table() = default;

  explicit truth_table( std::uint32_t num_vars )
      : num_vars_( num_vars )
  {
    if ( num_vars < 1 || num_vars > max_vars )
    {
      throw std::invalid_argument( "truth table needs 1 to " + std::to_string( max_vars ) + " variables, got " +
                                   std::to_string( num_vars ) );
    }
    words_.assign( ( num_bits() + 63 ) / 64, 0u );
  }

  static truth_table from_minterms( std::uint32_t num_vars, std::span<const std::uint64_t> minterms )
  {
    truth_table tt( num_vars );
    for ( auto m : minterms )
    {
      if ( m >= tt.num_bits() )
      {
        throw std::out_of_range( "minterm " + std::to_string( m ) + " out of range for " + std::to_string( num_vars ) +
                                 " variables" );
      }
      tt.set( m );
    }
    return tt;
  }

  static truth_table from_minterms( std::uint32_t num_vars, std::initializer_list<std::uint64_t> minterms )
  {
    return from_minterms( num_vars, std::span<const std::uint64_t>( minterms.begin(), minterms.size() ) );
  }

  std::uint32_t num_vars() const { return num_vars_; }
  std::uint64_t num_bits() const { return std::uint64_t{1} << num_vars_; }

  bool get( std::uint64_t m ) const { return ( words_[m >> 6] >> ( m & 63u ) ) & 1u; }
  void set( std::uint64_t m, bool value = true )
  {
    const auto bit = std::uint64_t{1} << ( m & 63u );
    if ( value )
    {
      words_[m >> 6] |= bit;
    }
    else
    {
      words_[m >> 6] &= ~bit;
    }
  }

  std::uint64_t count_ones() const
  {
    std::uint64_t total = 0;
    for ( auto w : words_ )
    {
      total += static_cast<std::uint64_t>( __builtin_popcountll( w ) );
    }
    return total;
  }

  bool is_const0() const { return count_ones() == 0; }
  bool is_const1() const { return count_ones() == num_bits(); }

  std::vector<std::uint64_t> minterms() const
  {
    std::vector<std::uint64_t> result;
    for ( std::uint64_t m = 0; m < num_bits(); ++m )
    {
      if ( get( m ) )
      {
        result.push_back( m );
      }
    }
    return result;
  }

  /*! \brief Bit of variable `var` inside minterm index `m`. */
  bool var_value( std::uint64_t m, std::uint32_t var ) const { return ( m >> ( num_vars_ - 1 - var ) ) & 1u; }

  friend bool operator==( const truth_table&, const truth_table& ) = default;

private:
  std::uint32_t num_vars_{0};
  std::vector<std::uint64_t> words_;
};

/*! \brief The subtable `tt|var=value` over the remaining `n-1` variables, in their original relative order. */
inline truth_table cofactor_table( const truth_table& tt, std::uint32_t var, bool value )
{
  const auto n = tt.num_vars();
  if ( var >= n )
  {
    throw std::out_of_range( "cofactor variable out of range" );
  }
  truth_table result( n - 1 );
  const auto low_bits = n - 1 - var;
  const std::uint64_t low_mask = ( std::uint64_t{1} << low_bits ) - 1;
  for ( std::uint64_t m = 0; m < result.num_bits(); ++m )
  {
    const auto high = m >> low_bits;
    const auto low = m & low_mask;
    const auto full = ( ( ( high << 1 ) | ( value ? 1u : 0u ) ) << low_bits ) | low;
    result.set( m, tt.get( full ) );
  }
  return result;
}

/*! \brief Calls `fn(m)` for every minterm index of `c`. */
template<class Fn>
void for_each_minterm( const cube& c, Fn&& fn )
{
  const auto n = c.num_vars();
  std::uint64_t base = 0;
  std::vector<std::uint32_t> free_bits;
  for ( std::uint32_t i = 0; i < n; ++i )
  {
    const auto bit = n - 1 - i;
    if ( c[i] == trit::one )
    {
      base |= std::uint64_t{1} << bit;
    }
    else if ( c[i] == trit::dont_care )
    {
      free_bits.push_back( bit );
    }
  }
  const std::uint64_t count = std::uint64_t{1} << free_bits.size();
  for ( std::uint64_t k = 0; k < count; ++k )
  {
    auto m = base;
    for ( std::size_t j = 0; j < free_bits.size(); ++j )
    {
      if ( ( k >> j ) & 1u )
      {
        m |= std::uint64_t{1} << free_bits[j];
      }
    }
    fn( m );
  }
}

inline truth_table cover_to_truthtable( const cover& f )
{
  if ( f.num_vars() > truth_table::max_vars )
  {
    throw std::invalid_argument( "cover has too many variables for a truth table" );
  }
  truth_table tt( f.num_vars() );
  for ( const auto& c : f )
  {
    for_each_minterm( c, [&]( std::uint64_t m ) { tt.set( m ); } );
  }
  return tt;
}

/*! \brief The canonical cover: one minterm cube per ON-set bit, ascending. */
inline cover minterm_cover( const truth_table& tt )
{
  cover result( tt.num_vars() );
  for ( auto m : tt.minterms() )
  {
    const auto a = assignment_from_minterm( tt.num_vars(), m );
    cube c( tt.num_vars() );
    for ( std::uint32_t i = 0; i < tt.num_vars(); ++i )
    {
      c[i] = a[i] ? trit::one : trit::zero;
    }
    result.push_back( std::move( c ) );
  }
  return result;
}

/*! \brief Default variable names `a, b, c, ...`; beyond 26 variables `x26, x27, ...`. */
inline std::vector<std::string> default_names( std::uint32_t num_vars )
{
  std::vector<std::string> names;
  names.reserve( num_vars );
  for ( std::uint32_t i = 0; i < num_vars; ++i )
  {
    names.push_back( i < 26 ? std::string( 1, static_cast<char>( 'a' + i ) ) : "x" + std::to_string( i ) );
  }
  return names;
}

/*! \brief Writes a cube as a product such as `a'bc'd`; the universal cube prints as `1`. */
inline std::string format_product( const cube& c, std::span<const std::string> names )
{
  if ( names.size() != c.num_vars() )
  {
    throw std::invalid_argument( "variable name count does not match cube length" );
  }
  std::string s;
  for ( std::uint32_t i = 0; i < c.num_vars(); ++i )
  {
    if ( c[i] == trit::dont_care )
    {
      continue;
    }
    s += names[i];
    if ( c[i] == trit::zero )
    {
      s += '\'';
    }
  }
  return s.empty() ? "1" : s;
}

/*! \brief Writes a cover as `ab + c'd + bcd'`; the empty cover prints as `0`. */
inline std::string format_expression( const cover& f, std::span<const std::string> names )
{
  if ( f.empty() )
  {
    return "0";
  }
  std::string s;
  for ( std::size_t i = 0; i < f.size(); ++i )
  {
    if ( i != 0 )
    {
      s += " + ";
    }
    s += format_product( f[i], names );
  }
  return s;
}

inline std::string format_expression( const cover& f )
{
  const auto names = default_names( f.num_vars() );
  return format_expression( f, names );
}

} // namespace dsopmin
