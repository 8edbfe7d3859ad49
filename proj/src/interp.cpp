#include "setlab/interp.hpp"

#include "setlab/classifier.hpp"
#include "setlab/enumerator.hpp"

#include <algorithm>

namespace setlab
{

Index Index::make( bool zero, const std::vector<Entity>& mu )
{
    Index index;
    if ( zero )
        index.level0.insert( ZeroRep{} );
    for ( auto e : mu )
        index.level_mu.insert( MuRep{ e } );
    return index;
}

namespace
{

// Depth-first search for a membership cycle (self-membership included).
bool well_founded( const Universe& u )
{
    enum class Mark { White, Grey, Black };
    std::vector<Mark> mark( u.size(), Mark::White );

    auto visit = [ & ]( auto&& self, ElementId x ) -> bool {
        mark[ x.index ] = Mark::Grey;
        bool ok = true;
        u.members( x ).for_each( [ & ]( ElementId z ) {
            if ( !ok || mark[ z.index ] == Mark::Black )
                return;
            if ( mark[ z.index ] == Mark::Grey )
                ok = false;
            else
                ok = self( self, z );
        } );
        mark[ x.index ] = Mark::Black;
        return ok;
    };

    for ( auto x : u.elements() )
        if ( mark[ x.index ] == Mark::White && !visit( visit, x ) )
            return false;
    return true;
}

} // namespace

BaseModel::BaseModel( Universe hf_part, std::vector<std::string> urelements )
        : _hf{ std::move( hf_part ) }, _urelements{ std::move( urelements ) }
{
    if ( !well_founded( _hf ) )
        throw ModelError( "base model: the set part must be well-founded" );

    auto sorted = _urelements;
    std::sort( sorted.begin(), sorted.end() );
    if ( auto dup = std::adjacent_find( sorted.begin(), sorted.end() ); dup != sorted.end() )
        throw ModelError( "base model: urelement '" + *dup + "' listed twice" );
    for ( const auto& name : _urelements )
        if ( _hf.find( name ) )
            throw ModelError( "base model: urelement '" + name + "' clashes with a set of the same name" );
}

std::vector<Entity> BaseModel::entities() const
{
    std::vector<Entity> out( entity_count() );
    for ( std::size_t i = 0; i < out.size(); ++i )
        out[ i ] = Entity{ static_cast<std::uint32_t>( i ) };
    return out;
}

std::vector<Entity> BaseModel::urelements() const
{
    std::vector<Entity> out;
    for ( std::size_t i = _hf.size(); i < entity_count(); ++i )
        out.push_back( Entity{ static_cast<std::uint32_t>( i ) } );
    return out;
}

void BaseModel::require( Entity e ) const
{
    if ( !contains( e ) )
        throw UnknownElement( "unknown entity #" + std::to_string( e.index ) );
}

bool BaseModel::is_urelement( Entity e ) const
{
    require( e );
    return e.index >= _hf.size();
}

const std::string& BaseModel::name( Entity e ) const
{
    require( e );
    if ( e.index < _hf.size() )
        return _hf.name( ElementId{ e.index } );
    return _urelements[ e.index - _hf.size() ];
}

std::optional<Entity> BaseModel::find( std::string_view name ) const
{
    if ( auto x = _hf.find( name ) )
        return Entity{ x->index };
    auto it = std::find( _urelements.begin(), _urelements.end(), name );
    if ( it == _urelements.end() )
        return std::nullopt;
    return Entity{ static_cast<std::uint32_t>( _hf.size() + ( it - _urelements.begin() ) ) };
}

Entity BaseModel::entity( std::string_view name ) const
{
    if ( auto e = find( name ) )
        return *e;
    throw UnknownElement( "unknown entity '" + std::string( name ) + "'" );
}

ElementId BaseModel::hf_element( Entity e ) const
{
    if ( is_urelement( e ) )
        throw ModelError( "'" + name( e ) + "' is an urelement, not a set" );
    return ElementId{ e.index };
}

std::optional<Index> BaseModel::index_of( Entity u ) const
{
    auto it = _inverse.find( u );
    if ( it == _inverse.end() )
        return std::nullopt;
    return it->second;
}

std::optional<Entity> BaseModel::tagged( const Index& index ) const
{
    auto it = _tagging.find( index );
    if ( it == _tagging.end() )
        return std::nullopt;
    return it->second;
}

std::vector<Entity> BaseModel::untagged_urelements() const
{
    std::vector<Entity> out;
    for ( auto u : urelements() )
        if ( !_inverse.contains( u ) )
            out.push_back( u );
    return out;
}

void BaseModel::validate( const Index& index ) const
{
    for ( const auto& t : index.level0 )
        if ( !std::holds_alternative<ZeroRep>( t ) )
            throw ModelError( "index: the level-0 component may only hold the 0-representative" );
    for ( const auto& t : index.level_mu )
    {
        const auto* mu = std::get_if<MuRep>( &t );
        if ( mu == nullptr )
            throw ModelError( "index: the level-mu component may only hold entity representatives" );
        if ( !contains( mu->entity ) )
            throw ModelError( "index: refers to an entity outside the model" );
    }
}

BaseModel BaseModel::with_tag( Entity u, Index index ) const
{
    if ( !is_urelement( u ) )
        throw ModelError( "cannot tag '" + name( u ) + "': not an urelement" );
    validate( index );
    if ( auto other = tagged( index ) )
        throw CollisionError( "index already tags '" + name( *other ) + "'" );
    if ( _inverse.contains( u ) )
        throw CollisionError( "'" + name( u ) + "' is already tagged" );

    BaseModel copy = *this;
    copy._tagging.emplace( index, u );
    copy._inverse.emplace( u, std::move( index ) );
    return copy;
}

BaseModel BaseModel::with_tagging( std::map<Index, Entity> tagging ) const
{
    std::map<Entity, Index> inverse;
    for ( const auto& [ index, u ] : tagging )
    {
        if ( !is_urelement( u ) )
            throw ModelError( "cannot tag '" + name( u ) + "': not an urelement" );
        validate( index );
        if ( !inverse.emplace( u, index ).second )
            throw CollisionError( "tagging is not injective: '" + name( u ) + "' has two indexes" );
    }
    BaseModel copy = *this;
    copy._tagging = std::move( tagging );
    copy._inverse = std::move( inverse );
    return copy;
}

bool BaseModel::tagging_bijective() const
{
    if ( _tagging.size() != _inverse.size() )
        return false;
    for ( const auto& [ index, u ] : _tagging )
    {
        auto it = _inverse.find( u );
        if ( it == _inverse.end() || it->second != index || !is_urelement( u ) )
            return false;
    }
    for ( const auto& [ u, index ] : _inverse )
    {
        auto it = _tagging.find( index );
        if ( it == _tagging.end() || it->second != u )
            return false;
    }
    return true;
}

std::optional<Entity> BaseModel::universal() const
{
    return tagged( Index::make( true, {} ) );
}

RepToken j_rep( Level j, Entity x )
{
    if ( j == Level::Zero )
        return ZeroRep{};
    return MuRep{ x };
}

Sprig sprig( const BaseModel& model, Entity x, const Index& index )
{
    model.require( x );
    Sprig s;
    for ( auto j : { Level::Zero, Level::Mu } )
    {
        const auto rep = j_rep( j, x );
        const auto& component = j == Level::Zero ? index.level0 : index.level_mu;
        if ( component.contains( rep ) )
            s.pairs.emplace_back( j, rep );
    }
    return s;
}

bool member_interp( const BaseModel& model, Entity x, Entity u )
{
    model.require( x );
    if ( !model.is_urelement( u ) )
    {
        if ( model.is_urelement( x ) )
            return false;
        return is_member( model.hf_part(), model.hf_element( x ), model.hf_element( u ) );
    }
    const auto index = model.index_of( u );
    if ( !index )
        return false;
    const bool zero = index->level0.contains( ZeroRep{} );
    const bool mu = index->level_mu.contains( MuRep{ x } );
    return zero != mu;
}

Index forster_index_n( Entity m_entity )
{
    return Index::make( true, { m_entity } );
}

Index forster_index_m( Entity m_entity, Entity n_entity )
{
    return Index::make( true, { m_entity, n_entity } );
}

namespace
{

// Makes tagging map index to target. If index had an image a, and target
// had an index i, i now maps to a (or is dropped if index was unmapped).
void move_value( std::map<Index, Entity>& tagging, const Index& index, Entity target )
{
    auto at_index = tagging.find( index );
    if ( at_index != tagging.end() && at_index->second == target )
        return;

    std::optional<Entity> former;
    if ( at_index != tagging.end() )
        former = at_index->second;

    auto holder = std::find_if( tagging.begin(), tagging.end(), [ & ]( const auto& kv ) { return kv.second == target; } );
    if ( holder != tagging.end() )
    {
        if ( former )
            holder->second = *former;
        else
            tagging.erase( holder );
    }
    tagging[ index ] = target;
}

} // namespace

BaseModel upsilon_swap( const BaseModel& model, Entity m_entity, Entity n_entity )
{
    if ( m_entity == n_entity )
        throw CollisionError( "upsilon_swap: M and N must be distinct" );
    if ( !model.is_urelement( m_entity ) || !model.is_urelement( n_entity ) )
        throw CollisionError( "upsilon_swap: M and N must both be urelements of the pool" );

    auto tagging = model.tagging();
    move_value( tagging, forster_index_n( m_entity ), n_entity );
    move_value( tagging, forster_index_m( m_entity, n_entity ), m_entity );

    auto swapped = model.with_tagging( std::move( tagging ) );
    if ( !swapped.tagging_bijective() )
        throw CollisionError( "upsilon_swap: tagging is no longer a bijection" );
    swapped._swapped = std::make_pair( m_entity, n_entity );
    return swapped;
}

std::vector<Entity> extension_interp( const BaseModel& model, Entity u )
{
    model.require( u );
    std::vector<Entity> out;
    for ( auto x : model.entities() )
        if ( member_interp( model, x, u ) )
            out.push_back( x );
    return out;
}

Universe materialize( const BaseModel& model )
{
    std::vector<std::pair<std::string, std::vector<std::string>>> defs;
    defs.reserve( model.entity_count() );
    for ( auto u : model.entities() )
    {
        std::vector<std::string> members;
        for ( auto x : extension_interp( model, u ) )
            members.push_back( model.name( x ) );
        defs.emplace_back( model.name( u ), std::move( members ) );
    }
    return Universe::from_definitions( defs );
}

bool InterpReport::passed() const
{
    return !unmet_precondition && !checks.empty() &&
           std::all_of( checks.begin(), checks.end(), []( const Check& c ) { return c.passed; } );
}

namespace
{

std::string names_of( const BaseModel& model, const std::vector<Entity>& es )
{
    std::string out = "{";
    for ( std::size_t i = 0; i < es.size(); ++i )
        out += ( i ? ", " : "" ) + model.name( es[ i ] );
    return out + "}";
}

std::vector<Entity> all_except( const BaseModel& model, std::initializer_list<Entity> excluded )
{
    std::vector<Entity> out;
    for ( auto e : model.entities() )
        if ( std::find( excluded.begin(), excluded.end(), e ) == excluded.end() )
            out.push_back( e );
    return out;
}

void warn_untagged( const BaseModel& model, InterpReport& report )
{
    for ( auto u : model.untagged_urelements() )
        report.warnings.push_back( "urelement '" + model.name( u ) + "' is untagged; it has no interpreted members" );
}

} // namespace

InterpReport verify_forster_counterexample( const BaseModel& model )
{
    InterpReport report;
    report.demo = "forster";

    const auto u_entity = model.universal();
    if ( !u_entity )
    {
        report.unmet_precondition = "no urelement is tagged ({0rep}, {}) to serve as the universal set";
        return report;
    }
    if ( !model.swapped() )
    {
        report.unmet_precondition = "model has not been prepared by upsilon_swap, so M and N are not designated";
        return report;
    }
    const auto [ m, n ] = *model.swapped();
    if ( model.tagged( forster_index_n( m ) ) != n || model.tagged( forster_index_m( m, n ) ) != m )
    {
        report.unmet_precondition = "tagging no longer maps n to N and m to M";
        return report;
    }
    warn_untagged( model, report );

    const auto ext_n = extension_interp( model, n );
    const auto ext_m = extension_interp( model, m );
    const auto expect_n = all_except( model, { m } );
    const auto expect_m = all_except( model, { m, n } );

    report.checks.push_back( { "ext(N) = All - {M}", ext_n == expect_n, "ext(N) = " + names_of( model, ext_n ) } );
    report.checks.push_back( { "ext(M) = All - {M, N}", ext_m == expect_m, "ext(M) = " + names_of( model, ext_m ) } );
    report.checks.push_back( { "N in N", member_interp( model, n, n ), "" } );
    report.checks.push_back( { "M not in M", !member_interp( model, m, m ), "" } );

    auto n_minus_self = ext_n;
    std::erase( n_minus_self, n );
    report.checks.push_back( { "ext(M) = ext(N) - {N}", ext_m == n_minus_self, "M is the predecessor of N" } );

    // The same facts read off the materialized universe with the core lookups.
    const auto u = materialize( model );
    const auto un = u.id( model.name( n ) );
    const auto um = u.id( model.name( m ) );
    const auto uu = u.id( model.name( *u_entity ) );
    const auto pred = predecessor_in( u, un );
    const bool pred_is_m = pred.is_unique() && pred.value() == um;
    auto u_minus = u.members( uu );
    u_minus.erase( um );
    report.checks.push_back( { "N = U - {N--}", pred_is_m && u.members( un ) == u_minus,
                               "N-- lookup: " + to_string( pred.kind() ) +
                                   ( pred.is_unique() ? " " + u.name( pred.value() ) : "" ) } );
    report.checks.push_back(
            { "N in N and N-- not in N--", pred_is_m && self_membered( u, un ) && !self_membered( u, um ), "" } );
    return report;
}

InterpReport verify_quine_counterexample()
{
    InterpReport report;
    report.demo = "quine";
    const auto u = Universe::from_definitions( { { "e", {} }, { "q", { "q" } } } );
    const auto q = u.id( "q" );
    const auto e = u.id( "e" );
    const auto pred = predecessor_in( u, q );

    report.checks.push_back( { "q in q", self_membered( u, q ), "" } );
    report.checks.push_back( { "q-- = e", pred.is_unique() && pred.value() == e,
                               "q-- lookup: " + to_string( pred.kind() ) +
                                   ( pred.is_unique() ? " " + u.name( pred.value() ) : "" ) } );
    report.checks.push_back( { "e not in e", !self_membered( u, e ), "" } );
    return report;
}

BaseModel default_demo_model()
{
    std::vector<std::string> pool{ "U", "M", "N" };
    for ( std::size_t i = pool.size(); i < default_demo_pool; ++i )
        pool.push_back( "ur" + std::to_string( i ) );

    BaseModel model( hf_universe( default_demo_rank ), pool );
    const auto u = model.entity( "U" );
    const auto m = model.entity( "M" );
    const auto n = model.entity( "N" );

    // Initial tagging: n and m point at other urelements, and M, N carry
    // indexes of their own, so the swap exercises the collision fixup.
    return model.with_tag( u, Index::make( true, {} ) )
            .with_tag( model.entity( "ur3" ), forster_index_n( m ) )
            .with_tag( model.entity( "ur4" ), forster_index_m( m, n ) )
            .with_tag( n, Index::make( false, {} ) )
            .with_tag( m, Index::make( false, { u } ) );
}

UpperChain upper_chain_interp( const BaseModel& model, std::size_t k )
{
    if ( k == 0 )
        throw Error( "upper_chain_interp: k must be at least 1" );
    const auto u = model.universal();
    if ( !u )
        throw ModelError( "upper_chain_interp: no urelement is tagged ({0rep}, {})" );

    UpperChain chain{ model, *u, {} };
    std::vector<Entity> excluded{ *u };
    for ( std::size_t i = 0; i < k; ++i )
    {
        const auto index = Index::make( true, excluded );
        Entity next;
        if ( auto existing = chain.model.tagged( index ) )
            next = *existing;
        else
        {
            const auto fresh = chain.model.untagged_urelements();
            if ( fresh.empty() )
                throw PoolExhausted( "upper_chain_interp: no untagged urelement left for step " +
                                     std::to_string( i + 1 ) + " of " + std::to_string( k ) );
            next = fresh.front();
            chain.model = chain.model.with_tag( next, index );
        }
        chain.nodes.push_back( next );
        excluded.push_back( next );
    }
    return chain;
}

InterpReport verify_upper_chain( const UpperChain& chain )
{
    InterpReport report;
    report.demo = "upperchain";
    const auto& model = chain.model;
    warn_untagged( model, report );

    const auto u = materialize( model );
    auto id = [ & ]( Entity e ) { return u.id( model.name( e ) ); };

    Entity prev = chain.universal;
    report.chain.push_back( model.name( prev ) );
    for ( auto node : chain.nodes )
    {
        const auto x = id( node );
        const auto p = id( prev );
        const auto label = model.name( node );
        report.chain.push_back( label );
        report.checks.push_back( { label + " is an upper", is_upper( u, x ), "" } );
        report.checks.push_back( { label + " in " + label, self_membered( u, x ), "" } );
        report.checks.push_back( { label + " != " + model.name( prev ), x != p, "" } );
        report.checks.push_back( { label + " in " + model.name( prev ), is_member( u, x, p ), "" } );
        prev = node;
    }

    const auto traced = trace_chain( u, id( chain.universal ), Direction::Descending, chain.nodes.size() + 1 );
    std::vector<ElementId> expected{ id( chain.universal ) };
    for ( auto node : chain.nodes )
        expected.push_back( id( node ) );
    report.checks.push_back( { "trace_chain from " + model.name( chain.universal ) + " agrees",
                               traced.nodes == expected && traced.property_held,
                               "traced " + std::to_string( traced.nodes.size() ) + " nodes, " +
                                       to_string( traced.terminated_by ) } );
    return report;
}

} // namespace setlab
