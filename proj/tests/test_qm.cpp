#include "oracles.hpp"

#include <dsopmin/minimizer.hpp>
#include <dsopmin/qm.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace dsopmin;

namespace
{

const truth_table worked_example = truth_table::from_minterms( 4, {1, 5, 6, 9, 12, 13, 14, 15} );

std::vector<std::string> prime_texts( const truth_table& tt )
{
  std::vector<std::string> texts;
  for ( const auto& p : prime_implicants( tt ) )
  {
    texts.push_back( p.term.to_string() );
  }
  return texts;
}

} // namespace

TEST( PrimeImplicants, WorkedExample )
{
  EXPECT_EQ( prime_texts( worked_example ), ( std::vector<std::string>{"1122", "2110", "2201"} ) );
  const auto primes = prime_implicants( worked_example );
  EXPECT_EQ( primes[0].covered, ( std::vector<std::uint64_t>{12, 13, 14, 15} ) );
}

TEST( PrimeImplicants, SmallCases )
{
  EXPECT_EQ( prime_texts( cover_to_truthtable( cover( 3, {cube::universal( 3 )} ) ) ),
             ( std::vector<std::string>{"222"} ) );
  EXPECT_EQ( prime_texts( truth_table::from_minterms( 2, {1, 2} ) ), ( std::vector<std::string>{"01", "10"} ) );
  EXPECT_TRUE( prime_implicants( truth_table( 3 ) ).empty() );
  EXPECT_THROW( prime_implicants( truth_table( 17 ) ), std::invalid_argument );
}

TEST( PrimeImplicants, MatchBruteForceOnRandomTables )
{
  std::mt19937_64 rng( 41 );
  for ( int i = 0; i < 200; ++i )
  {
    const auto n = 1 + static_cast<std::uint32_t>( rng() % 4 );
    const auto tt = oracle::random_table( n, rng );
    EXPECT_EQ( prime_texts( tt ), oracle::brute_force_primes( tt ) );
  }
}

TEST( PrimeImplicants, CountStaysUnderSanityBound )
{
  std::mt19937_64 rng( 43 );
  for ( int i = 0; i < 60; ++i )
  {
    const auto n = 2 + static_cast<std::uint32_t>( rng() % 7 );
    const auto tt = oracle::random_table( n, rng );
    EXPECT_LE( static_cast<double>( prime_implicants( tt ).size() ), std::pow( 3.0, n ) / n + 1.0 );
  }
}

TEST( PrimeImplicants, EveryPrimeIsMaximal )
{
  std::mt19937_64 rng( 47 );
  for ( int i = 0; i < 50; ++i )
  {
    const auto n = 2 + static_cast<std::uint32_t>( rng() % 5 );
    const auto tt = oracle::random_table( n, rng );
    bdd_manager mgr( n );
    const auto on = mgr.build( tt );
    for ( const auto& p : prime_implicants( tt ) )
    {
      EXPECT_TRUE( cube_in_function( p.term, on ) );
      for ( std::uint32_t v = 0; v < n; ++v )
      {
        if ( p.term[v] != trit::dont_care )
        {
          EXPECT_FALSE( cube_in_function( p.term.with( v, trit::dont_care ), on ) );
        }
      }
    }
  }
}

TEST( EssentialPrimes, WorkedExampleAllEssential )
{
  const auto chart = make_chart( worked_example );
  EXPECT_EQ( essential_primes( chart ).size(), 3u );
}

TEST( EssentialPrimes, SharedCoverageIsNotEssential )
{
  // two hand-built rows covering the same single minterm
  const auto tt = truth_table::from_minterms( 2, {3} );
  std::vector<implicant> rows{{cube::parse( "11", 2 ), {3}}, {cube::parse( "11", 2 ), {3}}};
  EXPECT_TRUE( essential_primes( make_chart( tt, rows ) ).empty() );

  const auto single = make_chart( tt );
  ASSERT_EQ( single.rows.size(), 1u );
  EXPECT_EQ( essential_primes( single ).size(), 1u );
}

TEST( ExactCover, WorkedExample )
{
  const auto c = exact_cover( worked_example );
  EXPECT_EQ( oracle::texts( c ), ( std::set<std::string>{"1122", "2110", "2201"} ) );
  EXPECT_EQ( literal_count( c ), 7u );
}

TEST( ExactCover, EmptyOnSet )
{
  EXPECT_TRUE( exact_cover( truth_table( 4 ) ).empty() );
}

TEST( ExactCover, CyclicCoreTieBreak )
{
  // two 3-cube minima exist; the lexicographically smaller text list wins
  const auto c = exact_cover( truth_table::from_minterms( 3, {0, 1, 2, 5, 6, 7} ) );
  EXPECT_EQ( c, cover::parse( 3, {"002", "121", "210"} ) );
  EXPECT_EQ( oracle::brute_force_min_cover_size( truth_table::from_minterms( 3, {0, 1, 2, 5, 6, 7} ) ), 3u );
}

TEST( ExactCover, BranchAndBoundAgreesWithPetrick )
{
  std::mt19937_64 rng( 53 );
  int cores = 0;
  for ( int i = 0; i < 300; ++i )
  {
    const auto n = 3 + static_cast<std::uint32_t>( rng() % 3 );
    const auto tt = oracle::random_table( n, rng );
    if ( tt.is_const0() )
    {
      continue;
    }
    const auto chart = make_chart( tt );
    std::vector<std::size_t> all_cols( chart.columns.size() );
    std::iota( all_cols.begin(), all_cols.end(), 0u );
    std::vector<std::size_t> all_rows( chart.rows.size() );
    std::iota( all_rows.begin(), all_rows.end(), 0u );
    if ( all_cols.size() > 10 )
    {
      continue;
    }
    ++cores;
    detail::cover_solver a( chart );
    detail::cover_solver b( chart );
    const auto pa = a.petrick( all_cols );
    const auto pb = b.branch_and_bound( all_rows, all_cols );
    EXPECT_FALSE( a.better( pa, pb ) );
    EXPECT_FALSE( a.better( pb, pa ) );
  }
  EXPECT_GT( cores, 20 );
}

TEST( ExactCover, IsMinimumAndCorrect )
{
  std::mt19937_64 rng( 59 );
  for ( int i = 0; i < 200; ++i )
  {
    const auto n = 1 + static_cast<std::uint32_t>( rng() % 6 );
    const auto tt = oracle::random_table( n, rng );
    const auto c = exact_cover( tt );
    EXPECT_EQ( cover_to_truthtable( c ), tt );
    if ( n <= 4 )
    {
      EXPECT_EQ( c.size(), oracle::brute_force_min_cover_size( tt ) );
    }
    EXPECT_LE( c.size(), minimize( tt ).size() );
  }
}

TEST( ExactCover, ExhaustiveOverAllThreeVariableFunctions )
{
  for ( std::uint64_t bits = 0; bits < 256; ++bits )
  {
    truth_table tt( 3 );
    for ( std::uint64_t m = 0; m < 8; ++m )
    {
      tt.set( m, ( bits >> m ) & 1u );
    }
    const auto c = exact_cover( tt );
    ASSERT_EQ( cover_to_truthtable( c ), tt );
    ASSERT_EQ( c.size(), oracle::brute_force_min_cover_size( tt ) );
  }
}
