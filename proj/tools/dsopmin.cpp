// dsopmin: minimize a single-output Boolean function through its BDD one-path cover.

#include <dsopmin/dsopmin.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace
{

std::vector<std::string> split( const std::string& text, char sep )
{
  std::vector<std::string> parts;
  std::stringstream ss( text );
  for ( std::string item; std::getline( ss, item, sep ); )
  {
    if ( !item.empty() )
    {
      parts.push_back( item );
    }
  }
  return parts;
}

/* "N:i,j,k" */
dsopmin::truth_table parse_minterm_spec( const std::string& spec )
{
  const auto colon = spec.find( ':' );
  if ( colon == std::string::npos )
  {
    throw std::invalid_argument( "--minterms expects N:LIST, e.g. 4:1,5,6,9" );
  }
  const auto n = static_cast<std::uint32_t>( std::stoul( spec.substr( 0, colon ) ) );
  std::vector<std::uint64_t> minterms;
  for ( const auto& item : split( spec.substr( colon + 1 ), ',' ) )
  {
    minterms.push_back( std::stoull( item ) );
  }
  return dsopmin::truth_table::from_minterms( n, minterms );
}

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw std::runtime_error( "cannot read '" + path + "'" );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dsopmin::variable_order parse_order( const std::string& text, const std::vector<std::string>& names )
{
  std::vector<std::uint32_t> perm;
  for ( const auto& name : split( text, ',' ) )
  {
    const auto it = std::find( names.begin(), names.end(), name );
    if ( it == names.end() )
    {
      throw std::invalid_argument( "unknown variable '" + name + "' in --var-order" );
    }
    perm.push_back( static_cast<std::uint32_t>( it - names.begin() ) );
  }
  if ( perm.size() != names.size() )
  {
    throw std::invalid_argument( "--var-order must list every variable once" );
  }
  return dsopmin::variable_order( std::move( perm ) );
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{"Two-level minimization through BDD one-path (DSOP) covers"};

  std::string input;
  std::string minterms;
  std::string ordering = "entropy";
  std::string var_order;
  std::string emit = "dsop,sop";
  std::string oracle;
  std::string report_path;
  std::string csv_path;
  std::string names_arg;
  std::string dot_path;
  std::string output_path;
  bool timings = false;
  bool show_entropy = false;
  std::uint32_t bench_count = 0;
  std::string bench_vars = "4";
  std::uint64_t seed = 1;

  auto* source = app.add_option_group( "source" );
  source->add_option( "--input", input, "PLA file (single output, completely specified)" )->check( CLI::ExistingFile );
  source->add_option( "--minterms", minterms, "Function as N:LIST, e.g. 4:1,5,6,9,12,13,14,15" );
  source->add_option( "--bench", bench_count, "Run COUNT seeded random functions instead of one input" );
  source->require_option( 1 );

  app.add_option( "--order", ordering, "Variable ordering" )->check( CLI::IsMember( {"entropy", "given", "sift"} ) );
  app.add_option( "--var-order", var_order, "Comma-separated names for --order given (or the sift start)" );
  app.add_option( "--emit", emit, "Covers to print: dsop, sop or both" );
  app.add_option( "--oracle", oracle, "Exact oracle to compare against" )->check( CLI::IsMember( {"qm"} ) );
  app.add_option( "--report", report_path, "Write the JSON report here" );
  app.add_option( "--csv", csv_path, "Write a CSV table here" );
  app.add_option( "--names", names_arg, "Comma-separated variable names" );
  app.add_option( "--dot", dot_path, "Write the BDD as Graphviz text (single-function mode)" );
  app.add_option( "--output", output_path, "Write the minimized cover as PLA (single-function mode)" );
  app.add_flag( "--timings", timings, "Include stage timings in reports" );
  app.add_flag( "--entropy", show_entropy, "Print the per-variable entropy table" );
  app.add_option( "--bench-vars", bench_vars, "Variable count or range LO-HI for --bench" );
  app.add_option( "--seed", seed, "Benchmark seed" );

  CLI11_PARSE( app, argc, argv );

  try
  {
    dsopmin::pipeline_config cfg;
    cfg.ordering = dsopmin::parse_ordering( ordering );
    cfg.oracle_qm = oracle == "qm";
    const auto emits = split( emit, ',' );
    for ( const auto& e : emits )
    {
      if ( e != "dsop" && e != "sop" )
      {
        throw std::invalid_argument( "--emit accepts dsop and sop" );
      }
    }
    auto emits_has = [&]( const char* what ) { return std::find( emits.begin(), emits.end(), what ) != emits.end(); };
    const dsopmin::report_options ropts{timings};

    std::vector<dsopmin::pipeline_result> results;
    std::vector<dsopmin::truth_table> tables;

    if ( bench_count > 0 )
    {
      dsopmin::benchmark_config bench;
      bench.count = bench_count;
      bench.seed = seed;
      const auto range = split( bench_vars, '-' );
      bench.min_vars = static_cast<std::uint32_t>( std::stoul( range.at( 0 ) ) );
      bench.max_vars = range.size() > 1 ? static_cast<std::uint32_t>( std::stoul( range[1] ) ) : bench.min_vars;
      if ( !var_order.empty() )
      {
        throw std::invalid_argument( "--var-order is not available in benchmark mode" );
      }
      for ( auto& run : dsopmin::run_benchmark( bench, cfg ) )
      {
        tables.push_back( std::move( run.table ) );
        results.push_back( std::move( run.result ) );
      }
      std::cout << "benchmark: " << results.size() << " functions, seed " << seed << '\n';
    }
    else
    {
      dsopmin::truth_table tt;
      std::vector<std::string> names;
      if ( !input.empty() )
      {
        auto parsed = dsopmin::parse_pla( read_file( input ) );
        tt = std::move( parsed.table );
        names = std::move( parsed.names );
      }
      else
      {
        tt = parse_minterm_spec( minterms );
        names = dsopmin::default_names( tt.num_vars() );
      }
      if ( !names_arg.empty() )
      {
        names = split( names_arg, ',' );
      }
      cfg.names = names;
      if ( !var_order.empty() )
      {
        cfg.given_order = parse_order( var_order, names );
      }
      auto result = dsopmin::run_pipeline( tt, cfg );
      result.stats.label = input.empty() ? "minterms" : input;
      const auto& st = result.stats;

      std::cout << "variables: " << st.n << '\n';
      std::cout << "order (" << st.ordering << "): " << st.order.to_string( result.names ) << '\n';
      std::cout << "bdd nodes: " << st.bdd_nodes << '\n';
      std::cout << "one-paths: " << st.one_paths << '\n';
      if ( show_entropy )
      {
        for ( std::uint32_t v = 0; v < st.n; ++v )
        {
          const auto& e = st.entropy[v];
          std::cout << "entropy " << result.names[v] << ": I0=" << e.i0 << " I1=" << e.i1 << " E=" << e.e << '\n';
        }
      }
      if ( emits_has( "dsop" ) )
      {
        std::cout << "dsop: " << dsopmin::format_expression( result.dsop, result.names ) << "  (" << st.dsop_cubes
                  << " cubes, " << st.dsop_literals << " literals)\n";
      }
      if ( emits_has( "sop" ) )
      {
        std::cout << "sop: " << dsopmin::format_expression( result.sop, result.names ) << "  (" << st.sop_cubes
                  << " cubes, " << st.sop_literals << " literals)\n";
      }
      if ( result.oracle )
      {
        std::cout << "qm: " << dsopmin::format_expression( *result.oracle, result.names ) << "  ("
                  << *st.oracle_cubes << " cubes, " << *st.oracle_literals << " literals, " << *st.oracle_primes
                  << " primes)\n";
      }
      if ( !dot_path.empty() )
      {
        dsopmin::bdd_manager mgr( st.order );
        dsopmin::write_file( dot_path, dsopmin::to_dot( mgr.build( tt ), result.names ) );
      }
      if ( !output_path.empty() )
      {
        dsopmin::write_file( output_path, dsopmin::format_pla( result.sop, result.names ) );
      }
      tables.push_back( std::move( tt ) );
      results.push_back( std::move( result ) );
    }

    if ( !report_path.empty() )
    {
      dsopmin::write_file( report_path, dsopmin::report_json( results, ropts ) );
    }
    if ( !csv_path.empty() )
    {
      dsopmin::write_file( csv_path, dsopmin::report_csv( results, ropts ) );
    }

    int failures = 0;
    for ( std::size_t i = 0; i < results.size(); ++i )
    {
      for ( const auto& msg : dsopmin::check_invariants( results[i], tables[i] ) )
      {
        std::cerr << "invariant violated (run " << i << "): " << msg << '\n';
        ++failures;
      }
    }
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
