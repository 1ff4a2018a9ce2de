/*!
  \file bdd.hpp
  \brief Reduced ordered BDDs with one-path enumeration and path-count sifting.

  The manager keeps one unique table per level. Node 0 and node 1 are the
  terminals; every internal node stores its level (position in the current
  variable order) and its else/then children. Adjacent-level swaps rewrite
  nodes in place, so node identifiers keep denoting the same function across
  reordering.
*/

#pragma once

#include "boolfn.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace dsopmin
{

using node_id = std::uint32_t;

inline constexpr node_id false_node = 0;
inline constexpr node_id true_node = 1;

/*! \brief Permutation of variable indices; position 0 is the root level. */
class variable_order
{
public:
  variable_order() = default;

  explicit variable_order( std::vector<std::uint32_t> perm )
      : perm_( std::move( perm ) )
  {
    std::vector<bool> seen( perm_.size(), false );
    for ( auto v : perm_ )
    {
      if ( v >= perm_.size() || seen[v] )
      {
        throw std::invalid_argument( "variable order is not a permutation" );
      }
      seen[v] = true;
    }
  }

  static variable_order identity( std::uint32_t num_vars )
  {
    std::vector<std::uint32_t> perm( num_vars );
    std::iota( perm.begin(), perm.end(), 0u );
    return variable_order( std::move( perm ) );
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>( perm_.size() ); }
  std::uint32_t operator[]( std::uint32_t level ) const { return perm_[level]; }
  const std::vector<std::uint32_t>& vars() const { return perm_; }

  std::string to_string( std::span<const std::string> names ) const
  {
    std::string s;
    for ( std::size_t i = 0; i < perm_.size(); ++i )
    {
      if ( i != 0 )
      {
        s += ',';
      }
      s += names[perm_[i]];
    }
    return s;
  }

  friend bool operator==( const variable_order&, const variable_order& ) = default;

private:
  std::vector<std::uint32_t> perm_;
};

struct bdd_node
{
  std::uint32_t level;
  node_id lo; /*!< else-branch, variable = 0 */
  node_id hi; /*!< then-branch, variable = 1 */
};

class bdd_manager;

/*! \brief Reference-counted root of a function stored in a `bdd_manager`.

  Valid while its manager lives. Registered roots survive garbage collection.
*/
class bdd_function
{
public:
  bdd_function() = default;

  bdd_function( bdd_manager& mgr, node_id root );
  bdd_function( const bdd_function& other );
  bdd_function( bdd_function&& other ) noexcept
      : mgr_( std::exchange( other.mgr_, nullptr ) ), root_( other.root_ )
  {
  }
  bdd_function& operator=( bdd_function other ) noexcept
  {
    std::swap( mgr_, other.mgr_ );
    std::swap( root_, other.root_ );
    return *this;
  }
  ~bdd_function();

  node_id root() const { return root_; }
  bdd_manager& manager() const
  {
    if ( mgr_ == nullptr )
    {
      throw std::logic_error( "empty bdd_function" );
    }
    return *mgr_;
  }

  bool is_const0() const { return root_ == false_node; }
  bool is_const1() const { return root_ == true_node; }

  friend bool operator==( const bdd_function& a, const bdd_function& b )
  {
    return a.mgr_ == b.mgr_ && a.root_ == b.root_;
  }

private:
  bdd_manager* mgr_{nullptr};
  node_id root_{false_node};
};

/*! \brief Canonical store of reduced ordered BDD nodes.

  Mutation (building, swapping, garbage collection) needs exclusive access.
  The manager is pinned in memory because handles point back to it.
*/
class bdd_manager
{
public:
  explicit bdd_manager( std::uint32_t num_vars )
      : bdd_manager( variable_order::identity( num_vars ) )
  {
  }

  explicit bdd_manager( variable_order order )
      : order_( std::move( order ) ), num_vars_( order_.size() ), unique_( num_vars_ )
  {
    level_of_var_.resize( num_vars_ );
    for ( std::uint32_t l = 0; l < num_vars_; ++l )
    {
      level_of_var_[order_[l]] = l;
    }
    nodes_.push_back( {num_vars_, false_node, false_node} );
    nodes_.push_back( {num_vars_, true_node, true_node} );
  }

  bdd_manager( const bdd_manager& ) = delete;
  bdd_manager& operator=( const bdd_manager& ) = delete;

  std::uint32_t num_vars() const { return num_vars_; }
  const variable_order& order() const { return order_; }
  std::uint32_t level_of_var( std::uint32_t var ) const { return level_of_var_[var]; }
  std::uint32_t var_at_level( std::uint32_t level ) const { return order_[level]; }

  const bdd_node& node( node_id id ) const { return nodes_[id]; }
  std::uint32_t level( node_id id ) const { return nodes_[id].level; }
  static bool is_terminal( node_id id ) { return id <= true_node; }

  bdd_function constant( bool value ) { return {*this, value ? true_node : false_node}; }

  bdd_function literal( std::uint32_t var, bool positive = true )
  {
    check_var( var );
    const auto l = level_of_var( var );
    return {*this, positive ? make_node( l, false_node, true_node ) : make_node( l, true_node, false_node )};
  }

  /*! \brief Returns the unique node `(level, lo, hi)`, applying the reduction rule. */
  node_id make_node( std::uint32_t level, node_id lo, node_id hi )
  {
    if ( lo == hi )
    {
      return lo;
    }
    auto& table = unique_[level];
    const auto key = pack( lo, hi );
    if ( auto it = table.find( key ); it != table.end() )
    {
      return it->second;
    }
    node_id id;
    if ( !free_.empty() )
    {
      id = free_.back();
      free_.pop_back();
      nodes_[id] = {level, lo, hi};
    }
    else
    {
      id = static_cast<node_id>( nodes_.size() );
      nodes_.push_back( {level, lo, hi} );
    }
    table.emplace( key, id );
    return id;
  }

  /*! \brief Builds `tt` under the manager's current order by Shannon expansion, bottom-up. */
  bdd_function build( const truth_table& tt )
  {
    if ( tt.num_vars() != num_vars_ )
    {
      throw std::invalid_argument( "truth table variable count does not match manager" );
    }
    const auto n = num_vars_;
    // level-ordered index j -> minterm index, split into two lookup halves
    const auto low_levels = n / 2;
    const auto high_levels = n - low_levels;
    auto partial = [&]( std::uint32_t first_level, std::uint32_t count ) {
      std::vector<std::uint64_t> table( std::size_t{1} << count, 0 );
      for ( std::uint64_t j = 0; j < table.size(); ++j )
      {
        std::uint64_t m = 0;
        for ( std::uint32_t k = 0; k < count; ++k )
        {
          if ( ( j >> ( count - 1 - k ) ) & 1u )
          {
            m |= std::uint64_t{1} << ( n - 1 - order_[first_level + k] );
          }
        }
        table[j] = m;
      }
      return table;
    };
    const auto high_part = partial( 0, high_levels );
    const auto low_part = partial( high_levels, low_levels );
    const std::uint64_t low_mask = ( std::uint64_t{1} << low_levels ) - 1;

    std::vector<node_id> layer( std::size_t{1} << n );
    for ( std::uint64_t j = 0; j < layer.size(); ++j )
    {
      layer[j] = tt.get( high_part[j >> low_levels] | low_part[j & low_mask] ) ? true_node : false_node;
    }
    for ( std::uint32_t l = n; l-- > 0; )
    {
      std::vector<node_id> next( layer.size() / 2 );
      for ( std::size_t j = 0; j < next.size(); ++j )
      {
        next[j] = make_node( l, layer[2 * j], layer[2 * j + 1] );
      }
      layer = std::move( next );
    }
    return {*this, layer[0]};
  }

  /*! \brief Exchanges the variables at `level` and `level + 1` in place. */
  void swap_adjacent_levels( std::uint32_t level )
  {
    if ( level + 1 >= num_vars_ )
    {
      throw std::out_of_range( "swap level out of range" );
    }
    const auto upper = level;
    const auto lower = level + 1;

    std::vector<node_id> upper_nodes;
    std::vector<node_id> lower_nodes;
    for ( const auto& [key, id] : unique_[upper] )
    {
      upper_nodes.push_back( id );
    }
    for ( const auto& [key, id] : unique_[lower] )
    {
      lower_nodes.push_back( id );
    }
    std::vector<node_id> stay;
    std::vector<node_id> rewrite;
    for ( auto id : upper_nodes )
    {
      const auto& nd = nodes_[id];
      ( nodes_[nd.lo].level == lower || nodes_[nd.hi].level == lower ? rewrite : stay ).push_back( id );
    }
    unique_[upper].clear();
    unique_[lower].clear();

    for ( auto id : lower_nodes )
    {
      nodes_[id].level = upper;
      unique_[upper].emplace( pack( nodes_[id].lo, nodes_[id].hi ), id );
    }
    for ( auto id : stay )
    {
      nodes_[id].level = lower;
      unique_[lower].emplace( pack( nodes_[id].lo, nodes_[id].hi ), id );
    }
    for ( auto id : rewrite )
    {
      const auto [lvl, f0, f1] = nodes_[id];
      // f0 and f1 that were lower-level nodes now sit at `upper`
      auto cof = [&]( node_id f, bool value ) {
        return nodes_[f].level == upper ? ( value ? nodes_[f].hi : nodes_[f].lo ) : f;
      };
      const auto f00 = cof( f0, false );
      const auto f01 = cof( f0, true );
      const auto f10 = cof( f1, false );
      const auto f11 = cof( f1, true );
      const auto new_lo = make_node( lower, f00, f10 );
      const auto new_hi = make_node( lower, f01, f11 );
      nodes_[id] = {upper, new_lo, new_hi};
      unique_[upper].emplace( pack( new_lo, new_hi ), id );
    }

    const auto x = order_[upper];
    const auto y = order_[lower];
    auto perm = order_.vars();
    std::swap( perm[upper], perm[lower] );
    order_ = variable_order( std::move( perm ) );
    level_of_var_[x] = lower;
    level_of_var_[y] = upper;
  }

  /*! \brief Frees every node not reachable from a live `bdd_function`. */
  void collect_garbage()
  {
    std::vector<bool> marked( nodes_.size(), false );
    marked[false_node] = marked[true_node] = true;
    std::vector<node_id> stack;
    for ( const auto& [root, count] : refs_ )
    {
      stack.push_back( root );
    }
    while ( !stack.empty() )
    {
      const auto id = stack.back();
      stack.pop_back();
      if ( marked[id] )
      {
        continue;
      }
      marked[id] = true;
      stack.push_back( nodes_[id].lo );
      stack.push_back( nodes_[id].hi );
    }
    for ( auto& table : unique_ )
    {
      for ( auto it = table.begin(); it != table.end(); )
      {
        if ( !marked[it->second] )
        {
          free_.push_back( it->second );
          it = table.erase( it );
        }
        else
        {
          ++it;
        }
      }
    }
    std::sort( free_.begin(), free_.end(), std::greater<>() );
  }

  /*! \brief Number of internal nodes held in the unique tables, live or dead. */
  std::size_t stored_node_count() const
  {
    std::size_t total = 0;
    for ( const auto& t : unique_ )
    {
      total += t.size();
    }
    return total;
  }

  /*! \brief Visits every stored internal node as `fn(id, node)`. */
  template<class Fn>
  void for_each_stored_node( Fn&& fn ) const
  {
    for ( const auto& t : unique_ )
    {
      for ( const auto& [key, id] : t )
      {
        fn( id, nodes_[id] );
      }
    }
  }

  void check_var( std::uint32_t var ) const
  {
    if ( var >= num_vars_ )
    {
      throw std::out_of_range( "variable index " + std::to_string( var ) + " out of range" );
    }
  }

private:
  friend class bdd_function;

  static std::uint64_t pack( node_id lo, node_id hi ) { return ( std::uint64_t{lo} << 32 ) | hi; }

  void ref( node_id id ) { ++refs_[id]; }
  void deref( node_id id )
  {
    if ( auto it = refs_.find( id ); it != refs_.end() && --it->second == 0 )
    {
      refs_.erase( it );
    }
  }

  variable_order order_;
  std::uint32_t num_vars_;
  std::vector<std::uint32_t> level_of_var_;
  std::vector<bdd_node> nodes_;
  std::vector<std::unordered_map<std::uint64_t, node_id>> unique_;
  std::vector<node_id> free_;
  std::unordered_map<node_id, std::uint32_t> refs_;
};

inline bdd_function::bdd_function( bdd_manager& mgr, node_id root )
    : mgr_( &mgr ), root_( root )
{
  mgr_->ref( root_ );
}

inline bdd_function::bdd_function( const bdd_function& other )
    : mgr_( other.mgr_ ), root_( other.root_ )
{
  if ( mgr_ )
  {
    mgr_->ref( root_ );
  }
}

inline bdd_function::~bdd_function()
{
  if ( mgr_ )
  {
    mgr_->deref( root_ );
  }
}

/*! \brief Builds the ROBDD of `tt` under `order` in a manager created with that order. */
inline bdd_function build_from_truthtable( bdd_manager& mgr, const truth_table& tt )
{
  return mgr.build( tt );
}

namespace detail
{

template<class Fn>
void for_each_reachable( const bdd_manager& mgr, node_id root, Fn&& fn )
{
  std::unordered_set<node_id> seen;
  std::vector<node_id> stack{root};
  while ( !stack.empty() )
  {
    const auto id = stack.back();
    stack.pop_back();
    if ( bdd_manager::is_terminal( id ) || !seen.insert( id ).second )
    {
      continue;
    }
    fn( id );
    stack.push_back( mgr.node( id ).hi );
    stack.push_back( mgr.node( id ).lo );
  }
}

} // namespace detail

/*! \brief Number of internal nodes reachable from the root; terminals excluded. */
inline std::size_t node_count( const bdd_function& f )
{
  std::size_t count = 0;
  detail::for_each_reachable( f.manager(), f.root(), [&]( node_id ) { ++count; } );
  return count;
}

/*! \brief Reachable internal nodes per level. */
inline std::vector<std::size_t> level_population( const bdd_function& f )
{
  const auto& mgr = f.manager();
  std::vector<std::size_t> pop( mgr.num_vars(), 0 );
  detail::for_each_reachable( mgr, f.root(), [&]( node_id id ) { ++pop[mgr.level( id )]; } );
  return pop;
}

/*! \brief Number of root-to-1 paths, counted bottom-up without materializing paths. */
inline std::uint64_t one_path_count( const bdd_function& f )
{
  const auto& mgr = f.manager();
  std::unordered_map<node_id, std::uint64_t> memo;
  std::function<std::uint64_t( node_id )> count = [&]( node_id id ) -> std::uint64_t {
    if ( id == false_node )
    {
      return 0;
    }
    if ( id == true_node )
    {
      return 1;
    }
    if ( auto it = memo.find( id ); it != memo.end() )
    {
      return it->second;
    }
    const auto r = count( mgr.node( id ).lo ) + count( mgr.node( id ).hi );
    memo.emplace( id, r );
    return r;
  };
  return count( f.root() );
}

struct path_edge
{
  node_id node;
  bool high; /*!< then-branch taken */
};

using one_path = std::vector<path_edge>;

/*! \brief Visits each one-path depth-first, else-branch before then-branch. */
template<class Fn>
void for_each_one_path( const bdd_function& f, Fn&& fn )
{
  const auto& mgr = f.manager();
  one_path path;
  std::function<void( node_id )> walk = [&]( node_id id ) {
    if ( id == false_node )
    {
      return;
    }
    if ( id == true_node )
    {
      fn( static_cast<const one_path&>( path ) );
      return;
    }
    path.push_back( {id, false} );
    walk( mgr.node( id ).lo );
    path.back().high = true;
    walk( mgr.node( id ).hi );
    path.pop_back();
  };
  walk( f.root() );
}

/*! \brief Cube of a one-path: else-edges give complemented literals, skipped variables stay don't-care. */
inline cube path_to_cube( const bdd_manager& mgr, const one_path& path )
{
  cube c( mgr.num_vars() );
  for ( const auto& e : path )
  {
    c[mgr.var_at_level( mgr.level( e.node ) )] = e.high ? trit::one : trit::zero;
  }
  return c;
}

/*! \brief The disjoint cover formed by all one-paths, in depth-first else-first order. */
inline cover enumerate_one_paths( const bdd_function& f )
{
  const auto& mgr = f.manager();
  cover result( mgr.num_vars() );
  for_each_one_path( f, [&]( const one_path& p ) { result.push_back( path_to_cube( mgr, p ) ); } );
  return result;
}

inline bdd_function restrict( const bdd_function& f, std::uint32_t var, bool value )
{
  auto& mgr = f.manager();
  mgr.check_var( var );
  const auto target = mgr.level_of_var( var );
  std::unordered_map<node_id, node_id> memo;
  std::function<node_id( node_id )> rec = [&]( node_id id ) -> node_id {
    const auto l = mgr.level( id );
    if ( l > target )
    {
      return id;
    }
    if ( l == target )
    {
      return value ? mgr.node( id ).hi : mgr.node( id ).lo;
    }
    if ( auto it = memo.find( id ); it != memo.end() )
    {
      return it->second;
    }
    const auto lo = mgr.node( id ).lo;
    const auto hi = mgr.node( id ).hi;
    const auto r = mgr.make_node( l, rec( lo ), rec( hi ) );
    memo.emplace( id, r );
    return r;
  };
  return {mgr, rec( f.root() )};
}

enum class bdd_op
{
  conjunction,
  disjunction
};

inline bdd_function apply( bdd_op op, const bdd_function& f, const bdd_function& g )
{
  auto& mgr = f.manager();
  if ( &g.manager() != &mgr )
  {
    throw std::invalid_argument( "apply across managers" );
  }
  std::unordered_map<std::uint64_t, node_id> memo;
  std::function<node_id( node_id, node_id )> rec = [&]( node_id a, node_id b ) -> node_id {
    if ( op == bdd_op::conjunction )
    {
      if ( a == false_node || b == false_node )
        return false_node;
      if ( a == true_node )
        return b;
      if ( b == true_node || a == b )
        return a;
    }
    else
    {
      if ( a == true_node || b == true_node )
        return true_node;
      if ( a == false_node )
        return b;
      if ( b == false_node || a == b )
        return a;
    }
    if ( a > b )
    {
      std::swap( a, b );
    }
    const auto key = ( std::uint64_t{a} << 32 ) | b;
    if ( auto it = memo.find( key ); it != memo.end() )
    {
      return it->second;
    }
    const auto la = mgr.level( a );
    const auto lb = mgr.level( b );
    const auto l = std::min( la, lb );
    const auto a0 = la == l ? mgr.node( a ).lo : a;
    const auto a1 = la == l ? mgr.node( a ).hi : a;
    const auto b0 = lb == l ? mgr.node( b ).lo : b;
    const auto b1 = lb == l ? mgr.node( b ).hi : b;
    const auto lo = rec( a0, b0 );
    const auto hi = rec( a1, b1 );
    const auto r = mgr.make_node( l, lo, hi );
    memo.emplace( key, r );
    return r;
  };
  return {mgr, rec( f.root(), g.root() )};
}

inline bdd_function operator&( const bdd_function& f, const bdd_function& g )
{
  return apply( bdd_op::conjunction, f, g );
}

inline bdd_function operator|( const bdd_function& f, const bdd_function& g )
{
  return apply( bdd_op::disjunction, f, g );
}

inline bdd_function operator!( const bdd_function& f )
{
  auto& mgr = f.manager();
  std::unordered_map<node_id, node_id> memo;
  std::function<node_id( node_id )> rec = [&]( node_id id ) -> node_id {
    if ( id == false_node )
      return true_node;
    if ( id == true_node )
      return false_node;
    if ( auto it = memo.find( id ); it != memo.end() )
    {
      return it->second;
    }
    const auto nd = mgr.node( id );
    const auto r = mgr.make_node( nd.level, rec( nd.lo ), rec( nd.hi ) );
    memo.emplace( id, r );
    return r;
  };
  return {mgr, rec( f.root() )};
}

inline bdd_function from_cube( bdd_manager& mgr, const cube& c )
{
  if ( c.num_vars() != mgr.num_vars() )
  {
    throw std::invalid_argument( "cube length does not match manager" );
  }
  node_id r = true_node;
  for ( std::uint32_t l = mgr.num_vars(); l-- > 0; )
  {
    switch ( c[mgr.var_at_level( l )] )
    {
    case trit::one:
      r = mgr.make_node( l, false_node, r );
      break;
    case trit::zero:
      r = mgr.make_node( l, r, false_node );
      break;
    case trit::dont_care:
      break;
    }
  }
  return {mgr, r};
}

inline bdd_function from_cover( bdd_manager& mgr, const cover& f )
{
  auto result = mgr.constant( false );
  for ( const auto& c : f )
  {
    result = result | from_cube( mgr, c );
  }
  return result;
}

/*! \brief Canonicity makes tautology a root comparison. */
inline bool is_tautology( const bdd_function& f )
{
  return f.root() == true_node;
}

/*! \brief True iff every minterm of `c` lies in ON(f). */
inline bool cube_in_function( const cube& c, const bdd_function& f )
{
  if ( c.num_vars() != f.manager().num_vars() )
  {
    throw std::invalid_argument( "cube length does not match function" );
  }
  auto g = f;
  for ( std::uint32_t v = 0; v < c.num_vars() && !g.is_const0(); ++v )
  {
    if ( c[v] != trit::dont_care )
    {
      g = restrict( g, v, c[v] == trit::one );
    }
  }
  return is_tautology( g );
}

/*! \brief Sifting that minimizes the number of one-paths.

  Variables are taken once each, in decreasing order of reachable node
  population. Each is moved through every level by adjacent swaps and fixed
  where the one-path count is smallest; ties go to fewer nodes, then to the
  earlier level. The manager is left in the returned order and unreferenced
  nodes are collected.
*/
inline variable_order sift_paths( const bdd_function& f )
{
  auto& mgr = f.manager();
  const auto n = mgr.num_vars();
  mgr.collect_garbage();
  if ( n < 2 )
  {
    return mgr.order();
  }

  const auto pop = level_population( f );
  std::vector<std::uint32_t> vars( n );
  std::iota( vars.begin(), vars.end(), 0u );
  std::stable_sort( vars.begin(), vars.end(), [&]( auto a, auto b ) {
    const auto pa = pop[mgr.level_of_var( a )];
    const auto pb = pop[mgr.level_of_var( b )];
    if ( pa != pb )
    {
      return pa > pb;
    }
    return mgr.level_of_var( a ) < mgr.level_of_var( b );
  } );

  struct score
  {
    std::uint64_t paths;
    std::size_t nodes;
    std::uint32_t level;
    auto operator<=>( const score& ) const = default;
  };
  auto measure = [&]( std::uint32_t level ) { return score{one_path_count( f ), node_count( f ), level}; };

  for ( auto var : vars )
  {
    auto cur = mgr.level_of_var( var );
    auto best = measure( cur );
    auto step = [&]( bool down ) {
      mgr.swap_adjacent_levels( down ? cur : cur - 1 );
      cur = down ? cur + 1 : cur - 1;
      mgr.collect_garbage();
    };
    while ( cur + 1 < n )
    {
      step( true );
      best = std::min( best, measure( cur ) );
    }
    while ( cur > 0 )
    {
      step( false );
      best = std::min( best, measure( cur ) );
    }
    while ( cur < best.level )
    {
      step( true );
    }
  }
  return mgr.order();
}

/*! \brief Graphviz text of the diagram: dashed edges are else-branches, solid edges then-branches. */
inline std::string to_dot( const bdd_function& f, std::span<const std::string> names )
{
  const auto& mgr = f.manager();
  std::ostringstream os;
  os << "digraph bdd {\n";
  bool uses0 = f.root() == false_node;
  bool uses1 = f.root() == true_node;
  detail::for_each_reachable( mgr, f.root(), [&]( node_id id ) {
    const auto& nd = mgr.node( id );
    os << "  n" << id << " [label=\"" << names[mgr.var_at_level( nd.level )] << "\"];\n";
    auto target = [&]( node_id c ) {
      uses0 |= c == false_node;
      uses1 |= c == true_node;
      return bdd_manager::is_terminal( c ) ? "t" + std::to_string( c ) : "n" + std::to_string( c );
    };
    os << "  n" << id << " -> " << target( nd.lo ) << " [style=dashed];\n";
    os << "  n" << id << " -> " << target( nd.hi ) << " [style=solid];\n";
  } );
  if ( uses0 )
  {
    os << "  t0 [shape=box,label=\"0\"];\n";
  }
  if ( uses1 )
  {
    os << "  t1 [shape=box,label=\"1\"];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace dsopmin
