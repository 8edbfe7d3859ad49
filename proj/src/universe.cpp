#include "setlab/universe.hpp"

#include <algorithm>
#include <map>

namespace setlab
{

std::vector<ElementId> ElementSet::to_vector() const
{
    std::vector<ElementId> out;
    out.reserve( count() );
    for_each( [ & ]( ElementId x ) { out.push_back( x ); } );
    return out;
}

Universe::Universe( std::shared_ptr<const std::vector<std::string>> names, std::vector<ElementSet> extensions )
        : _names{ std::move( names ) }, _extensions{ std::move( extensions ) }, _self_membered( _extensions.size() )
{
    const auto n = _extensions.size();
    if ( !_names || _names->size() != n )
        throw Error( "universe: name count does not match extension count" );
    if ( !std::is_sorted( _names->begin(), _names->end() ) ||
         std::adjacent_find( _names->begin(), _names->end() ) != _names->end() )
        throw Error( "universe: names must be strictly increasing" );

    for ( std::size_t i = 0; i < n; ++i )
    {
        if ( _extensions[ i ].capacity() != n )
            throw Error( "universe: extension of '" + ( *_names )[ i ] + "' has the wrong capacity" );
        const ElementId x{ static_cast<std::uint32_t>( i ) };
        if ( _extensions[ i ].contains( x ) )
            _self_membered.insert( x );
    }
}

Universe Universe::from_definitions( const std::vector<std::pair<std::string, std::vector<std::string>>>& defs )
{
    std::vector<std::string> names;
    names.reserve( defs.size() );
    for ( const auto& [ name, _ ] : defs )
        names.push_back( name );
    std::sort( names.begin(), names.end() );
    if ( auto dup = std::adjacent_find( names.begin(), names.end() ); dup != names.end() )
        throw Error( "duplicate definition of '" + *dup + "'" );

    auto index_of = [ & ]( const std::string& name ) -> std::uint32_t {
        auto it = std::lower_bound( names.begin(), names.end(), name );
        if ( it == names.end() || *it != name )
            throw UnknownElement( "unknown element '" + name + "'" );
        return static_cast<std::uint32_t>( it - names.begin() );
    };

    std::vector<ElementSet> ext( names.size(), ElementSet( names.size() ) );
    for ( const auto& [ name, members ] : defs )
    {
        auto& set = ext[ index_of( name ) ];
        for ( const auto& m : members )
            set.insert( ElementId{ index_of( m ) } );
    }
    return Universe( std::make_shared<const std::vector<std::string>>( std::move( names ) ), std::move( ext ) );
}

std::vector<ElementId> Universe::elements() const
{
    std::vector<ElementId> out( size() );
    for ( std::size_t i = 0; i < out.size(); ++i )
        out[ i ] = ElementId{ static_cast<std::uint32_t>( i ) };
    return out;
}

std::optional<ElementId> Universe::find( std::string_view name ) const
{
    auto it = std::lower_bound( _names->begin(), _names->end(), name );
    if ( it == _names->end() || *it != name )
        return std::nullopt;
    return ElementId{ static_cast<std::uint32_t>( it - _names->begin() ) };
}

ElementId Universe::id( std::string_view name ) const
{
    if ( auto x = find( name ) )
        return *x;
    throw UnknownElement( "unknown element '" + std::string( name ) + "'" );
}

void Universe::require( ElementId x ) const
{
    if ( !contains( x ) )
        throw UnknownElement( "unknown element #" + std::to_string( x.index ) );
}

const std::string& Universe::name( ElementId x ) const
{
    require( x );
    return ( *_names )[ x.index ];
}

const ElementSet& Universe::members( ElementId x ) const
{
    require( x );
    return _extensions[ x.index ];
}

ElementSet Universe::all() const
{
    ElementSet s( size() );
    for ( std::size_t i = 0; i < size(); ++i )
        s.insert( ElementId{ static_cast<std::uint32_t>( i ) } );
    return s;
}

LookupResult LookupResult::multiple( std::vector<ElementId> ids )
{
    std::sort( ids.begin(), ids.end() );
    ids.erase( std::unique( ids.begin(), ids.end() ), ids.end() );
    if ( ids.size() < 2 )
        throw Error( "LookupResult::multiple needs at least two distinct ids" );
    return LookupResult{ Kind::Multiple, std::move( ids ) };
}

std::string to_string( LookupResult::Kind kind )
{
    switch ( kind )
    {
    case LookupResult::Kind::Unique: return "unique";
    case LookupResult::Kind::Absent: return "absent";
    case LookupResult::Kind::Multiple: return "multiple";
    }
    return "?";
}

const ElementSet& extension( const Universe& u, ElementId x )
{
    return u.members( x );
}

bool is_member( const Universe& u, ElementId x, ElementId y )
{
    u.require( x );
    return u.members( y ).contains( x );
}

bool coextensive( const Universe& u, ElementId x, ElementId y )
{
    return u.members( x ) == u.members( y );
}

bool self_membered( const Universe& u, ElementId x )
{
    return u.members( x ).contains( x );
}

LookupResult lookup_extension( const Universe& u, const ElementSet& target )
{
    std::vector<ElementId> hits;
    for ( std::uint32_t i = 0; i < u.size(); ++i )
        if ( u.members( ElementId{ i } ) == target )
            hits.push_back( ElementId{ i } );

    if ( hits.empty() )
        return LookupResult::absent();
    if ( hits.size() == 1 )
        return LookupResult::unique( hits.front() );
    return LookupResult::multiple( std::move( hits ) );
}

ElementSet successor_target( const Universe& u, ElementId x )
{
    auto s = u.members( x );
    s.insert( x );
    return s;
}

ElementSet predecessor_target( const Universe& u, ElementId x )
{
    auto s = u.members( x );
    s.erase( x );
    return s;
}

LookupResult successor_in( const Universe& u, ElementId x )
{
    return lookup_extension( u, successor_target( u, x ) );
}

LookupResult predecessor_in( const Universe& u, ElementId x )
{
    return lookup_extension( u, predecessor_target( u, x ) );
}

ElementSet sym_diff_singleton( const Universe& u, ElementId x )
{
    return u.members( x ) ^ ElementSet::singleton( u.size(), x );
}

} // namespace setlab
