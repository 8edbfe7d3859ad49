#include "setlab/audit.hpp"

#include <algorithm>

namespace setlab
{

std::string to_string( Axiom axiom )
{
    return axiom == Axiom::Successor ? "successor" : "predecessor";
}

AxiomReport check_axiom( const Universe& u, Axiom which )
{
    AxiomReport report{ which, {}, true };
    report.per_element.reserve( u.size() );
    for ( auto x : u.elements() )
    {
        auto r = which == Axiom::Successor ? successor_in( u, x ) : predecessor_in( u, x );
        report.satisfied = report.satisfied && r.is_unique();
        report.per_element.emplace_back( x, std::move( r ) );
    }
    return report;
}

std::string_view to_string( LemmaTag tag )
{
    switch ( tag )
    {
    case LemmaTag::LowerNotSelf: return "L-lower-not-self";
    case LemmaTag::UpperSelf: return "L-upper-self";
    case LemmaTag::NotBoth: return "C-not-both";
    case LemmaTag::Stoppage: return "C-stoppage";
    case LemmaTag::PredNotSelf: return "L-pred-not-self";
    case LemmaTag::SuccSelf: return "L-succ-self";
    case LemmaTag::A: return "A";
    case LemmaTag::B: return "B";
    case LemmaTag::C2: return "C2";
    case LemmaTag::D: return "D";
    case LemmaTag::E: return "E";
    case LemmaTag::MainResult: return "main-result";
    case LemmaTag::Restated: return "restated";
    }
    return "?";
}

std::string_view describe( LemmaTag tag )
{
    switch ( tag )
    {
    case LemmaTag::LowerNotSelf: return "a lower is not a member of itself";
    case LemmaTag::UpperSelf: return "an upper is a member of itself";
    case LemmaTag::NotBoth: return "no set is both an upper and a lower";
    case LemmaTag::Stoppage: return "a lower is coextensive with x--, an upper with x++";
    case LemmaTag::PredNotSelf: return "x is not a member of x--";
    case LemmaTag::SuccSelf: return "x is a member of x++";
    case LemmaTag::A: return "if x is a lower then x++ != x";
    case LemmaTag::B: return "if x is a lower then x++ is a lower";
    case LemmaTag::C2: return "if x is an upper then x-- != x";
    case LemmaTag::D: return "if x is an upper then x-- is an upper";
    case LemmaTag::E: return "if x is an upper then x-- is a member of x";
    case LemmaTag::MainResult: return "lower and upper links share no endpoint; x,x++ is a lower ascending link "
                                      "for a lower x; x,x-- is an upper descending link for an upper x";
    case LemmaTag::Restated: return "a strictly Russellian R would satisfy R++ = R and R-- = R";
    }
    return "?";
}

std::string to_string( LemmaVerdict::Status status )
{
    switch ( status )
    {
    case LemmaVerdict::Status::Holds: return "holds";
    case LemmaVerdict::Status::Vacuous: return "vacuous";
    case LemmaVerdict::Status::Violated: return "violated";
    }
    return "?";
}

bool LemmaReport::any_violated() const
{
    return std::any_of( per_lemma.begin(), per_lemma.end(), []( const auto& entry ) {
        return entry.second.status == LemmaVerdict::Status::Violated;
    } );
}

const LemmaVerdict& LemmaReport::at( LemmaTag tag ) const
{
    for ( const auto& [ t, verdict ] : per_lemma )
        if ( t == tag )
            return verdict;
    throw Error( "lemma " + std::string( to_string( tag ) ) + " not in report" );
}

namespace
{

// Accumulates one lemma's instances; the first failing instance is kept.
class Tally
{
public:
    void check( bool ok, std::vector<ElementId> witness )
    {
        ++_verdict.checked;
        if ( !ok && _verdict.witness.empty() )
            _verdict.witness = std::move( witness );
    }

    [[nodiscard]] LemmaVerdict finish() const
    {
        auto v = _verdict;
        if ( !v.witness.empty() )
            v.status = LemmaVerdict::Status::Violated;
        else
            v.status = v.checked == 0 ? LemmaVerdict::Status::Vacuous : LemmaVerdict::Status::Holds;
        return v;
    }

private:
    LemmaVerdict _verdict;
};

} // namespace

LemmaReport verify_lemma_suite( const Universe& u )
{
    const auto n = u.size();
    std::vector<Classification> cls = classify_all( u );
    std::vector<LookupResult> succ, pred;
    succ.reserve( n );
    pred.reserve( n );
    for ( auto x : u.elements() )
    {
        succ.push_back( successor_in( u, x ) );
        pred.push_back( predecessor_in( u, x ) );
    }

    Tally lower_not_self, upper_self, not_both, stoppage, pred_not_self, succ_self;
    Tally lemma_a, lemma_b, lemma_c, lemma_d, lemma_e, main_result, restated;

    for ( auto x : u.elements() )
    {
        const auto& c = cls[ x.index ];
        const auto s = succ[ x.index ].get();
        const auto p = pred[ x.index ].get();

        if ( c.lower )
            lower_not_self.check( !c.self_membered, { x } );
        if ( c.upper )
            upper_self.check( c.self_membered, { x } );
        not_both.check( !( c.lower && c.upper ), { x } );

        if ( c.lower && p )
            stoppage.check( coextensive( u, x, *p ), { x, *p } );
        if ( c.upper && s )
            stoppage.check( coextensive( u, x, *s ), { x, *s } );

        if ( p )
            pred_not_self.check( !is_member( u, x, *p ), { x, *p } );
        if ( s )
            succ_self.check( is_member( u, x, *s ), { x, *s } );

        if ( c.lower && s )
        {
            lemma_a.check( *s != x, { x, *s } );
            lemma_b.check( cls[ s->index ].lower, { x, *s } );

            auto l = phi_link( u, x, *s, [ & ]( ElementId z ) { return cls[ z.index ].lower; }, "lower" );
            main_result.check( l && l->ascending, { x, *s } );
        }
        if ( c.upper && p )
        {
            lemma_c.check( *p != x, { x, *p } );
            lemma_d.check( cls[ p->index ].upper, { x, *p } );
            lemma_e.check( is_member( u, *p, x ), { x, *p } );

            auto l = phi_link( u, x, *p, [ & ]( ElementId z ) { return cls[ z.index ].upper; }, "upper" );
            main_result.check( l && l->descending, { x, *p } );
        }

        if ( c.strictly_russellian() )
        {
            const bool succ_fixed = successor_target( u, x ) == u.members( x );
            const bool pred_fixed = predecessor_target( u, x ) == u.members( x );
            restated.check( succ_fixed && pred_fixed, { x } );
        }
    }

    // Element-level reading of "no lower link intersects any upper link": no
    // element is an endpoint of both a lower link and an upper link.
    for ( auto x : u.elements() )
    {
        bool lower_endpoint = false;
        bool upper_endpoint = false;
        for ( auto y : u.elements() )
        {
            if ( x == y || !link( u, x, y ) )
                continue;
            lower_endpoint = lower_endpoint || ( cls[ x.index ].lower && cls[ y.index ].lower );
            upper_endpoint = upper_endpoint || ( cls[ x.index ].upper && cls[ y.index ].upper );
        }
        if ( lower_endpoint || upper_endpoint )
            main_result.check( !( lower_endpoint && upper_endpoint ), { x } );
    }

    LemmaReport report;
    report.per_lemma = {
        { LemmaTag::LowerNotSelf, lower_not_self.finish() },
        { LemmaTag::UpperSelf, upper_self.finish() },
        { LemmaTag::NotBoth, not_both.finish() },
        { LemmaTag::Stoppage, stoppage.finish() },
        { LemmaTag::PredNotSelf, pred_not_self.finish() },
        { LemmaTag::SuccSelf, succ_self.finish() },
        { LemmaTag::A, lemma_a.finish() },
        { LemmaTag::B, lemma_b.finish() },
        { LemmaTag::C2, lemma_c.finish() },
        { LemmaTag::D, lemma_d.finish() },
        { LemmaTag::E, lemma_e.finish() },
        { LemmaTag::MainResult, main_result.finish() },
        { LemmaTag::Restated, restated.finish() },
    };
    return report;
}

std::string to_string( Direction direction )
{
    return direction == Direction::Ascending ? "asc" : "desc";
}

std::string to_string( Chain::Termination termination )
{
    switch ( termination )
    {
    case Chain::Termination::Absent: return "absent";
    case Chain::Termination::Multiple: return "multiple";
    case Chain::Termination::Cycle: return "cycle";
    case Chain::Termination::LengthCap: return "length-cap";
    }
    return "?";
}

Chain trace_chain( const Universe& u, ElementId start, Direction direction, std::size_t cap )
{
    u.require( start );
    if ( cap == 0 )
        throw Error( "trace_chain: cap must be at least 1" );

    const bool ascending = direction == Direction::Ascending;
    Chain chain;
    chain.direction = direction;
    chain.nodes.push_back( start );

    std::optional<Predicate> property;
    if ( ascending && is_lower( u, start ) )
    {
        chain.tracked_property = "lower";
        property = [ &u ]( ElementId z ) { return is_lower( u, z ); };
    }
    else if ( !ascending && is_upper( u, start ) )
    {
        chain.tracked_property = "upper";
        property = [ &u ]( ElementId z ) { return is_upper( u, z ); };
    }

    ElementSet visited( u.size() );
    visited.insert( start );

    for ( ;; )
    {
        const auto prev = chain.nodes.back();
        const auto next = ascending ? successor_in( u, prev ) : predecessor_in( u, prev );
        if ( next.is_absent() )
        {
            chain.terminated_by = Chain::Termination::Absent;
            break;
        }
        if ( next.is_multiple() )
        {
            chain.terminated_by = Chain::Termination::Multiple;
            chain.ambiguous = next.candidates();
            break;
        }
        const auto y = next.value();
        if ( visited.contains( y ) )
        {
            chain.terminated_by = Chain::Termination::Cycle;
            chain.repeated = y;
            break;
        }
        if ( chain.nodes.size() >= cap )
        {
            chain.terminated_by = Chain::Termination::LengthCap;
            break;
        }

        visited.insert( y );
        chain.nodes.push_back( y );

        if ( property )
        {
            const bool linked = ascending ? is_member( u, prev, y ) : is_member( u, y, prev );
            if ( !( ( *property )( y ) && y != prev && linked ) && chain.property_held )
            {
                chain.property_held = false;
                chain.property_failure = chain.nodes.size() - 1;
            }
        }
    }
    return chain;
}

} // namespace setlab
