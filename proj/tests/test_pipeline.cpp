#include "oracles.hpp"

#include <dsopmin/pipeline.hpp>
#include <dsopmin/pla.hpp>
#include <dsopmin/report.hpp>

#include <gtest/gtest.h>

#include <json.hpp>

using namespace dsopmin;

namespace
{

const truth_table worked_example = truth_table::from_minterms( 4, {1, 5, 6, 9, 12, 13, 14, 15} );

constexpr const char* worked_pla = R"(# worked example
.i 4
.o 1
.ilb a b c d
.ob f
.p 8
0001 1
0101 1
0110 1
1001 1
1100 1
1101 1
1110 1
1111 1
.e
)";

} // namespace

TEST( Pla, ParsesMintermRows )
{
  const auto f = parse_pla( worked_pla );
  EXPECT_EQ( f.table, worked_example );
  EXPECT_EQ( f.names, ( std::vector<std::string>{"a", "b", "c", "d"} ) );
}

TEST( Pla, CubeRowsAndDefaults )
{
  const auto f = parse_pla( ".i 4\n.o 1\n11-- 1\n--01 1\n-110 1\n0000 0\n.end\n" );
  EXPECT_EQ( f.table, worked_example );
  EXPECT_EQ( f.names, default_names( 4 ) );
}

TEST( Pla, Errors )
{
  EXPECT_THROW( parse_pla( ".o 1\n1 1\n" ), pla_error );
  EXPECT_THROW( parse_pla( ".i 2\n11 1\n" ), pla_error );
  EXPECT_THROW( parse_pla( ".i 2\n.o 2\n11 10\n" ), pla_error );
  EXPECT_THROW( parse_pla( ".i 2\n.o 1\n11 -\n" ), pla_error );
  EXPECT_THROW( parse_pla( ".i 2\n.o 1\n1x 1\n" ), pla_error );
  EXPECT_THROW( parse_pla( ".i 2\n.o 1\n.ilb a\n11 1\n" ), pla_error );
  EXPECT_THROW( parse_pla( ".i 2\n.o 1\n.mv 3\n" ), pla_error );
  try
  {
    parse_pla( ".i 2\n.o 2\n" );
    FAIL();
  }
  catch ( const pla_error& e )
  {
    EXPECT_EQ( e.line(), 2u );
  }
}

TEST( Pla, RoundTripOnRandomCovers )
{
  std::mt19937_64 rng( 61 );
  for ( int i = 0; i < 100; ++i )
  {
    const auto n = 1 + static_cast<std::uint32_t>( rng() % 6 );
    const auto tt = oracle::random_table( n, rng );
    const auto sop = minimize( tt );
    const auto back = parse_pla( format_pla( sop, default_names( n ) ) );
    EXPECT_EQ( back.table, tt );
  }
}

TEST( Pipeline, WorkedExampleEntropy )
{
  const auto r = run_pipeline( worked_example, {} );
  EXPECT_EQ( r.stats.order.to_string( r.names ), "b,a,c,d" );
  EXPECT_EQ( r.stats.bdd_nodes, 6u );
  EXPECT_EQ( r.stats.one_paths, 4u );
  EXPECT_EQ( oracle::texts( r.dsop ), ( std::set<std::string>{"1122", "0110", "2001", "0101"} ) );
  EXPECT_EQ( oracle::texts( r.sop ), ( std::set<std::string>{"1122", "2201", "2110"} ) );
  EXPECT_EQ( r.stats.sop_literals, 7u );
  EXPECT_TRUE( check_invariants( r, worked_example ).empty() );
}

TEST( Pipeline, WorkedExampleGivenOrder )
{
  pipeline_config cfg;
  cfg.ordering = ordering_method::given;
  const auto r = run_pipeline( worked_example, cfg );
  EXPECT_EQ( r.stats.order, variable_order::identity( 4 ) );
  EXPECT_EQ( r.stats.bdd_nodes, 7u );
  EXPECT_EQ( r.stats.one_paths, 5u );
  EXPECT_EQ( r.stats.sop_cubes, 3u );
}

TEST( Pipeline, SiftFromGivenOrder )
{
  pipeline_config cfg;
  cfg.ordering = ordering_method::sift;
  const auto r = run_pipeline( worked_example, cfg );
  EXPECT_EQ( r.stats.one_paths, 4u );
  EXPECT_TRUE( check_invariants( r, worked_example ).empty() );
}

TEST( Pipeline, OracleAndNames )
{
  pipeline_config cfg;
  cfg.oracle_qm = true;
  cfg.names = {"w", "x", "y", "z"};
  const auto r = run_pipeline( worked_example, cfg );
  ASSERT_TRUE( r.oracle.has_value() );
  EXPECT_EQ( r.stats.oracle_primes, 3u );
  EXPECT_EQ( r.stats.oracle_cubes, 3u );
  EXPECT_EQ( r.stats.oracle_literals, 7u );
  EXPECT_EQ( r.stats.order.to_string( r.names ), "x,w,y,z" );
  cfg.names = {"x"};
  EXPECT_THROW( run_pipeline( worked_example, cfg ), std::invalid_argument );
}

TEST( Pipeline, Constants )
{
  const auto zero = run_pipeline( truth_table( 3 ), {} );
  EXPECT_EQ( zero.stats.one_paths, 0u );
  EXPECT_TRUE( zero.sop.empty() );
  const auto one = run_pipeline( cover_to_truthtable( cover( 3, {cube::universal( 3 )} ) ), {} );
  EXPECT_EQ( one.stats.one_paths, 1u );
  EXPECT_EQ( one.stats.bdd_nodes, 0u );
  EXPECT_EQ( one.sop, cover( 3, {cube::universal( 3 )} ) );
}

TEST( Pipeline, ParseOrdering )
{
  EXPECT_EQ( parse_ordering( "sift" ), ordering_method::sift );
  EXPECT_EQ( to_string( parse_ordering( "given" ) ), "given" );
  EXPECT_THROW( parse_ordering( "random" ), std::invalid_argument );
}

TEST( Invariants, DetectViolations )
{
  stats_report st;
  st.one_paths = 4;
  st.dsop_cubes = 3;
  st.sop_cubes = 5;
  st.oracle_cubes = 6;
  EXPECT_EQ( check_invariants( st ).size(), 3u );

  auto r = run_pipeline( worked_example, {} );
  r.sop = cover::parse( 4, {"1122"} );
  EXPECT_FALSE( check_invariants( r, worked_example ).empty() );
}

TEST( Report, WorkedExampleRecord )
{
  pipeline_config cfg;
  cfg.oracle_qm = true;
  auto r = run_pipeline( worked_example, cfg );
  r.stats.label = "worked";
  const auto doc = nlohmann::json::parse( report_json( {r} ) );
  EXPECT_EQ( doc["schema"], report_schema );
  ASSERT_EQ( doc["records"].size(), 1u );
  const auto& rec = doc["records"][0];
  EXPECT_EQ( rec["label"], "worked" );
  EXPECT_EQ( rec["order"], "b,a,c,d" );
  EXPECT_EQ( rec["dsop_cubes"], 4 );
  EXPECT_EQ( rec["one_paths"], 4 );
  EXPECT_EQ( rec["sop_cubes"], 3 );
  EXPECT_EQ( rec["sop_literals"], 7 );
  EXPECT_EQ( rec["oracle"], "qm" );
  EXPECT_EQ( rec["oracle_cubes"], 3 );
  EXPECT_NEAR( rec["entropy_e"][1].get<double>(), 0.811, 1e-3 );
  EXPECT_FALSE( rec.contains( "time_build_ms" ) );

  const auto timed = nlohmann::json::parse( report_json( {r}, {true} ) );
  EXPECT_TRUE( timed["records"][0].contains( "time_build_ms" ) );
}

TEST( Report, EmptyRunListAndNullOracle )
{
  const auto doc = nlohmann::json::parse( report_json( {} ) );
  EXPECT_TRUE( doc["records"].empty() );
  const auto rec = nlohmann::json::parse( report_json( {run_pipeline( worked_example, {} )} ) )["records"][0];
  EXPECT_TRUE( rec["oracle_cubes"].is_null() );
  EXPECT_EQ( rec["oracle"], "" );
}

TEST( Report, CsvHasHeaderAndOneLinePerRun )
{
  const auto csv = report_csv( {run_pipeline( worked_example, {} ), run_pipeline( worked_example, {} )} );
  EXPECT_EQ( std::count( csv.begin(), csv.end(), '\n' ), 3 );
  EXPECT_EQ( csv.rfind( "run,", 0 ), 0u );
}

TEST( Benchmark, InvariantsHoldAndRunsAreDeterministic )
{
  benchmark_config bench;
  bench.count = 100;
  bench.seed = 7;
  pipeline_config cfg;
  cfg.oracle_qm = true;
  const auto runs = run_benchmark( bench, cfg );
  ASSERT_EQ( runs.size(), 100u );
  std::vector<pipeline_result> results;
  for ( const auto& run : runs )
  {
    EXPECT_TRUE( check_invariants( run.result, run.table ).empty() ) << run.result.stats.label;
    results.push_back( run.result );
  }
  std::vector<pipeline_result> again;
  for ( auto& run : run_benchmark( bench, cfg ) )
  {
    again.push_back( run.result );
  }
  EXPECT_EQ( report_json( results ), report_json( again ) );
}

TEST( Benchmark, VariableRange )
{
  benchmark_config bench;
  bench.count = 40;
  bench.min_vars = 3;
  bench.max_vars = 6;
  std::set<std::uint32_t> seen;
  for ( const auto& run : run_benchmark( bench, {} ) )
  {
    seen.insert( run.table.num_vars() );
  }
  EXPECT_EQ( seen, ( std::set<std::uint32_t>{3, 4, 5, 6} ) );
  bench.min_vars = 7;
  EXPECT_THROW( run_benchmark( bench, {} ), std::invalid_argument );
}
