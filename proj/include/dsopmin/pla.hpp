/*!
  \file pla.hpp
  \brief Single-output, completely specified subset of the PLA format.

  Accepted directives: `.i`, `.o` (must be 1), `.ilb`, `.ob`, `.p`, `.type f`
  and `.e`. Cube lines are an input part over `{0,1,-}` followed by an output
  character; rows with output `1` define the ON-set and every other minterm
  is OFF. `#` starts a comment.
*/

#pragma once

#include "boolfn.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dsopmin
{

class pla_error : public std::runtime_error
{
public:
  pla_error( std::size_t line, const std::string& what )
      : std::runtime_error( "line " + std::to_string( line ) + ": " + what ), line_( line )
  {
  }

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct pla_function
{
  truth_table table;
  std::vector<std::string> names;
};

inline pla_function parse_pla( std::string_view text )
{
  std::istringstream in{std::string( text )};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::uint32_t> num_inputs;
  std::optional<std::uint32_t> num_outputs;
  std::vector<std::string> names;
  std::vector<std::string> rows;

  while ( std::getline( in, raw ) )
  {
    ++line_no;
    if ( auto hash = raw.find( '#' ); hash != std::string::npos )
    {
      raw.erase( hash );
    }
    std::istringstream line( raw );
    std::vector<std::string> tokens;
    for ( std::string tok; line >> tok; )
    {
      tokens.push_back( tok );
    }
    if ( tokens.empty() )
    {
      continue;
    }
    const auto& head = tokens.front();
    if ( head == ".e" || head == ".end" )
    {
      break;
    }
    if ( head == ".i" || head == ".o" || head == ".p" )
    {
      if ( tokens.size() != 2 )
      {
        throw pla_error( line_no, head + " expects one number" );
      }
      std::uint32_t value = 0;
      try
      {
        std::size_t used = 0;
        value = static_cast<std::uint32_t>( std::stoul( tokens[1], &used ) );
        if ( used != tokens[1].size() )
        {
          throw std::invalid_argument( tokens[1] );
        }
      }
      catch ( const std::exception& )
      {
        throw pla_error( line_no, "malformed number '" + tokens[1] + "'" );
      }
      if ( head == ".i" )
      {
        num_inputs = value;
      }
      else if ( head == ".o" )
      {
        if ( value != 1 )
        {
          throw pla_error( line_no, "only single-output functions are supported (.o " + tokens[1] + ")" );
        }
        num_outputs = value;
      }
      continue;
    }
    if ( head == ".ilb" )
    {
      names.assign( tokens.begin() + 1, tokens.end() );
      continue;
    }
    if ( head == ".ob" )
    {
      continue;
    }
    if ( head == ".type" )
    {
      if ( tokens.size() != 2 || tokens[1] != "f" )
      {
        throw pla_error( line_no, "only '.type f' is supported" );
      }
      continue;
    }
    if ( head.front() == '.' )
    {
      throw pla_error( line_no, "unsupported directive '" + head + "'" );
    }
    if ( !num_inputs || !num_outputs )
    {
      throw pla_error( line_no, "cube line before .i and .o" );
    }
    std::string inputs;
    std::string output;
    if ( tokens.size() == 2 )
    {
      inputs = tokens[0];
      output = tokens[1];
    }
    else if ( tokens.size() == 1 && tokens[0].size() == *num_inputs + 1 )
    {
      inputs = tokens[0].substr( 0, *num_inputs );
      output = tokens[0].substr( *num_inputs );
    }
    else
    {
      throw pla_error( line_no, "malformed cube line" );
    }
    if ( inputs.size() != *num_inputs || output.size() != 1 )
    {
      throw pla_error( line_no, "cube line has wrong width" );
    }
    for ( char c : inputs )
    {
      if ( c != '0' && c != '1' && c != '-' )
      {
        throw pla_error( line_no, std::string( "illegal input character '" ) + c + "'" );
      }
    }
    if ( output == "-" || output == "~" || output == "2" )
    {
      throw pla_error( line_no, "don't-care outputs are not supported" );
    }
    if ( output != "0" && output != "1" )
    {
      throw pla_error( line_no, "illegal output character '" + output + "'" );
    }
    if ( output == "1" )
    {
      rows.push_back( inputs );
    }
  }

  if ( !num_inputs )
  {
    throw pla_error( line_no, "missing .i" );
  }
  if ( !num_outputs )
  {
    throw pla_error( line_no, "missing .o" );
  }
  if ( *num_inputs < 1 || *num_inputs > truth_table::max_vars )
  {
    throw pla_error( line_no, ".i must be between 1 and " + std::to_string( truth_table::max_vars ) );
  }
  if ( !names.empty() && names.size() != *num_inputs )
  {
    throw pla_error( line_no, ".ilb lists " + std::to_string( names.size() ) + " names for " +
                                  std::to_string( *num_inputs ) + " inputs" );
  }

  cover on( *num_inputs );
  for ( const auto& inputs : rows )
  {
    on.push_back( cube::parse( inputs, *num_inputs ) );
  }
  return {cover_to_truthtable( on ), names.empty() ? default_names( *num_inputs ) : std::move( names )};
}

/*! \brief Writes a cover as a PLA with `-` for don't-care positions. */
inline std::string format_pla( const cover& f, std::span<const std::string> names )
{
  std::ostringstream os;
  os << ".i " << f.num_vars() << "\n.o 1\n.ilb";
  for ( const auto& n : names )
  {
    os << ' ' << n;
  }
  os << "\n.ob f\n.p " << f.size() << '\n';
  for ( const auto& c : f )
  {
    auto text = c.to_string();
    for ( auto& ch : text )
    {
      if ( ch == '2' )
      {
        ch = '-';
      }
    }
    os << text << " 1\n";
  }
  os << ".e\n";
  return os.str();
}

} // namespace dsopmin
