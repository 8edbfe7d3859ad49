#include "setlab/classifier.hpp"

#include <algorithm>

namespace setlab
{

bool is_lower( const Universe& u, ElementId x )
{
    return !u.members( x ).intersects( u.self_membered_set() );
}

bool is_upper( const Universe& u, ElementId x )
{
    const auto non_self = u.all() - u.self_membered_set();
    return non_self.is_subset_of( u.members( x ) );
}

bool is_strictly_russellian( const Universe& u, ElementId x )
{
    return is_lower( u, x ) && is_upper( u, x );
}

Classification classify( const Universe& u, ElementId x )
{
    return Classification{ x, is_lower( u, x ), is_upper( u, x ), self_membered( u, x ) };
}

std::vector<Classification> classify_all( const Universe& u )
{
    std::vector<Classification> out;
    out.reserve( u.size() );
    for ( auto x : u.elements() )
        out.push_back( classify( u, x ) );
    return out;
}

std::optional<LinkKind> link( const Universe& u, ElementId x, ElementId y )
{
    u.require( x );
    u.require( y );
    if ( x == y )
        return std::nullopt;

    LinkKind kind;
    kind.ascending = is_member( u, x, y );
    kind.descending = is_member( u, y, x );
    if ( !kind.ascending && !kind.descending )
        return std::nullopt;
    return kind;
}

std::optional<LinkKind> phi_link( const Universe& u, ElementId x, ElementId y, const Predicate& phi,
                                  std::string phi_name )
{
    auto kind = link( u, x, y );
    if ( !kind || !phi( x ) || !phi( y ) )
        return std::nullopt;
    kind->phi = std::move( phi_name );
    return kind;
}

std::optional<ElementId> comprehension_witness( const Universe& u, const Predicate& phi )
{
    ElementSet target( u.size() );
    for ( auto x : u.elements() )
        if ( phi( x ) )
            target.insert( x );

    for ( auto y : u.elements() )
        if ( u.members( y ) == target )
            return y;
    return std::nullopt;
}

std::optional<ElementId> russell_witness( const Universe& u )
{
    for ( auto y : u.elements() )
        if ( is_strictly_russellian( u, y ) )
            return y;
    return std::nullopt;
}

const std::vector<std::string>& predicate_names()
{
    static const std::vector<std::string> names{ "nonself", "lower", "upper", "all", "none" };
    return names;
}

Predicate named_predicate( const Universe& u, std::string_view name )
{
    const Universe* p = &u;
    if ( name == "nonself" )
        return [ p ]( ElementId x ) { return !self_membered( *p, x ); };
    if ( name == "lower" )
        return [ p ]( ElementId x ) { return is_lower( *p, x ); };
    if ( name == "upper" )
        return [ p ]( ElementId x ) { return is_upper( *p, x ); };
    if ( name == "all" )
        return []( ElementId ) { return true; };
    if ( name == "none" )
        return []( ElementId ) { return false; };
    throw Error( "unknown predicate '" + std::string( name ) + "'" );
}

} // namespace setlab
