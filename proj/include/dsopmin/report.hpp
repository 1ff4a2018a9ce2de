/*!
  \file report.hpp
  \brief JSON and CSV emission of run statistics.

  The JSON document is `{"schema": "dsopmin-report/1", "records": [...]}` with
  one flat object per run; see README.md for the key list. Timing fields are
  written only on request, which keeps reports byte-stable across runs.
*/

#pragma once

#include "pipeline.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dsopmin
{

inline constexpr const char* report_schema = "dsopmin-report/1";

struct report_options
{
  bool timings{false};
};

inline nlohmann::ordered_json report_record( std::size_t index, const pipeline_result& r, const report_options& opts )
{
  const auto& st = r.stats;
  nlohmann::ordered_json rec;
  rec["run"] = index;
  rec["label"] = st.label;
  rec["n"] = st.n;
  rec["ordering"] = st.ordering;
  rec["order"] = st.order.to_string( r.names );
  rec["bdd_nodes"] = st.bdd_nodes;
  rec["one_paths"] = st.one_paths;
  rec["dsop_cubes"] = st.dsop_cubes;
  rec["dsop_literals"] = st.dsop_literals;
  rec["sop_cubes"] = st.sop_cubes;
  rec["sop_literals"] = st.sop_literals;
  rec["oracle"] = st.oracle_cubes ? "qm" : "";
  rec["oracle_primes"] = st.oracle_primes ? nlohmann::ordered_json( *st.oracle_primes ) : nullptr;
  rec["oracle_cubes"] = st.oracle_cubes ? nlohmann::ordered_json( *st.oracle_cubes ) : nullptr;
  rec["oracle_literals"] = st.oracle_literals ? nlohmann::ordered_json( *st.oracle_literals ) : nullptr;
  auto i0 = nlohmann::ordered_json::array();
  auto i1 = nlohmann::ordered_json::array();
  auto e = nlohmann::ordered_json::array();
  for ( const auto& entry : st.entropy )
  {
    i0.push_back( entry.i0 );
    i1.push_back( entry.i1 );
    e.push_back( entry.e );
  }
  rec["entropy_i0"] = std::move( i0 );
  rec["entropy_i1"] = std::move( i1 );
  rec["entropy_e"] = std::move( e );
  rec["dsop"] = format_expression( r.dsop, r.names );
  rec["sop"] = format_expression( r.sop, r.names );
  if ( opts.timings )
  {
    rec["time_order_ms"] = st.timings.order_ms;
    rec["time_build_ms"] = st.timings.build_ms;
    rec["time_enumerate_ms"] = st.timings.enumerate_ms;
    rec["time_minimize_ms"] = st.timings.minimize_ms;
    rec["time_oracle_ms"] = st.timings.oracle_ms;
  }
  return rec;
}

inline std::string report_json( const std::vector<pipeline_result>& runs, const report_options& opts = {} )
{
  nlohmann::ordered_json doc;
  doc["schema"] = report_schema;
  doc["records"] = nlohmann::ordered_json::array();
  for ( std::size_t i = 0; i < runs.size(); ++i )
  {
    doc["records"].push_back( report_record( i, runs[i], opts ) );
  }
  return doc.dump( 2 ) + "\n";
}

/*! \brief Scalar columns only, one row per run. */
inline std::string report_csv( const std::vector<pipeline_result>& runs, const report_options& opts = {} )
{
  std::ostringstream os;
  os << "run,label,n,ordering,order,bdd_nodes,one_paths,dsop_cubes,dsop_literals,sop_cubes,sop_literals,"
        "oracle_primes,oracle_cubes,oracle_literals";
  if ( opts.timings )
  {
    os << ",time_order_ms,time_build_ms,time_enumerate_ms,time_minimize_ms,time_oracle_ms";
  }
  os << '\n';
  auto opt = []( const auto& v ) { return v ? std::to_string( *v ) : std::string(); };
  for ( std::size_t i = 0; i < runs.size(); ++i )
  {
    const auto& st = runs[i].stats;
    os << i << ',' << st.label << ',' << st.n << ',' << st.ordering << ",\"" << st.order.to_string( runs[i].names )
       << "\"," << st.bdd_nodes << ',' << st.one_paths << ',' << st.dsop_cubes << ',' << st.dsop_literals << ','
       << st.sop_cubes << ',' << st.sop_literals << ',' << opt( st.oracle_primes ) << ',' << opt( st.oracle_cubes )
       << ',' << opt( st.oracle_literals );
    if ( opts.timings )
    {
      os << ',' << st.timings.order_ms << ',' << st.timings.build_ms << ',' << st.timings.enumerate_ms << ','
         << st.timings.minimize_ms << ',' << st.timings.oracle_ms;
    }
    os << '\n';
  }
  return os.str();
}

inline void write_file( const std::string& path, const std::string& contents )
{
  std::ofstream out( path, std::ios::binary | std::ios::trunc );
  if ( !out )
  {
    throw std::runtime_error( "cannot open '" + path + "' for writing" );
  }
  out << contents;
  if ( !out )
  {
    throw std::runtime_error( "failed writing '" + path + "'" );
  }
}

} // namespace dsopmin
