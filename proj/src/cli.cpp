#include "setlab/cli.hpp"

#include "setlab/audit.hpp"
#include "setlab/classifier.hpp"
#include "setlab/dsl.hpp"
#include "setlab/enumerator.hpp"
#include "setlab/interp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>

namespace setlab::cli
{

namespace
{

using Json = nlohmann::ordered_json;

std::string read_file( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw Error( "cannot read '" + path + "'" );
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string yes_no( bool b )
{
    return b ? "yes" : "no";
}

Json names_json( const Universe& u, const std::vector<ElementId>& ids )
{
    Json out = Json::array();
    for ( auto x : ids )
        out.push_back( u.name( x ) );
    return out;
}

std::string join( const Json& names )
{
    std::string out;
    for ( std::size_t i = 0; i < names.size(); ++i )
        out += ( i ? ", " : "" ) + names[ i ].get<std::string>();
    return out;
}

Json lookup_json( const Universe& u, const LookupResult& r )
{
    return Json{ { "result", to_string( r.kind() ) }, { "candidates", names_json( u, r.candidates() ) } };
}

Json axiom_json( const Universe& u, const AxiomReport& report )
{
    Json per = Json::array();
    for ( const auto& [ x, r ] : report.per_element )
    {
        Json entry{ { "element", u.name( x ) } };
        entry.update( lookup_json( u, r ) );
        per.push_back( std::move( entry ) );
    }
    return Json{ { "axiom", to_string( report.axiom ) }, { "satisfied", report.satisfied }, { "per_element", per } };
}

// Shared options of the commands that read a universe file.
struct Options
{
    std::string format = "text";
    std::string require;
};

// --require: which axioms must hold, as a json block; sets failed on a miss.
Json require_json( const Universe& u, const std::string& require, bool& failed )
{
    if ( require.empty() )
        return nullptr;
    Json out = Json::object();
    bool ok = true;
    for ( auto axiom : { Axiom::Successor, Axiom::Predecessor } )
    {
        const bool wanted = require == "both" || require == to_string( axiom );
        if ( !wanted )
            continue;
        const bool sat = check_axiom( u, axiom ).satisfied;
        out[ to_string( axiom ) ] = sat;
        ok = ok && sat;
    }
    failed = failed || !ok;
    return out;
}

void render_require( std::ostream& os, const Json& doc )
{
    if ( !doc.contains( "require" ) || doc[ "require" ].is_null() )
        return;
    for ( const auto& [ axiom, sat ] : doc[ "require" ].items() )
        os << "require " << axiom << ": " << ( sat.get<bool>() ? "satisfied" : "NOT satisfied" ) << "\n";
}

void render_lookup_line( std::ostream& os, const std::string& label, const Json& r )
{
    os << "  " << label << ": " << r[ "result" ].get<std::string>();
    if ( !r[ "candidates" ].empty() )
        os << " " << join( r[ "candidates" ] );
    os << "\n";
}

// ---------------------------------------------------------------- check

Json cmd_check( const Universe& u, const Options& opt, bool& failed )
{
    Json doc;
    doc[ "size" ] = u.size();
    Json axioms = Json::array();
    for ( auto axiom : { Axiom::Successor, Axiom::Predecessor } )
        axioms.push_back( axiom_json( u, check_axiom( u, axiom ) ) );
    doc[ "axioms" ] = axioms;
    doc[ "require" ] = require_json( u, opt.require, failed );
    return doc;
}

void render_check( std::ostream& os, const Json& doc )
{
    os << "elements: " << doc[ "size" ].get<std::size_t>() << "\n";
    for ( const auto& a : doc[ "axioms" ] )
    {
        os << "axiom " << a[ "axiom" ].get<std::string>() << ": "
           << ( a[ "satisfied" ].get<bool>() ? "satisfied" : "not satisfied" ) << "\n";
        for ( const auto& e : a[ "per_element" ] )
            render_lookup_line( os, e[ "element" ].get<std::string>(), e );
    }
    render_require( os, doc );
}

// ---------------------------------------------------------------- classify

Json cmd_classify( const Universe& u, const Options& opt, bool& failed )
{
    Json doc;
    doc[ "size" ] = u.size();

    Json elements = Json::array();
    for ( const auto& c : classify_all( u ) )
        elements.push_back( Json{ { "element", u.name( c.element ) },
                                  { "self_membered", c.self_membered },
                                  { "lower", c.lower },
                                  { "upper", c.upper },
                                  { "strictly_russellian", c.strictly_russellian() } } );
    doc[ "elements" ] = elements;

    const auto lower = named_predicate( u, "lower" );
    const auto upper = named_predicate( u, "upper" );
    Json links = Json::array();
    for ( auto x : u.elements() )
        for ( auto y : u.elements() )
        {
            if ( !( x < y ) )
                continue;
            const auto l = link( u, x, y );
            if ( !l )
                continue;
            Json phis = Json::array();
            if ( phi_link( u, x, y, lower, "lower" ) )
                phis.push_back( "lower" );
            if ( phi_link( u, x, y, upper, "upper" ) )
                phis.push_back( "upper" );
            links.push_back( Json{ { "from", u.name( x ) },
                                   { "to", u.name( y ) },
                                   { "ascending", l->ascending },
                                   { "descending", l->descending },
                                   { "phi", phis } } );
        }
    doc[ "links" ] = links;

    const auto rw = russell_witness( u );
    doc[ "russell_witness" ] = rw ? Json( u.name( *rw ) ) : Json( nullptr );

    Json comprehension = Json::object();
    for ( const auto& name : predicate_names() )
    {
        const auto w = comprehension_witness( u, named_predicate( u, name ) );
        comprehension[ name ] = w ? Json( u.name( *w ) ) : Json( nullptr );
    }
    doc[ "comprehension" ] = comprehension;
    doc[ "require" ] = require_json( u, opt.require, failed );
    return doc;
}

void render_classify( std::ostream& os, const Json& doc )
{
    os << "elements: " << doc[ "size" ].get<std::size_t>() << "\n";
    for ( const auto& e : doc[ "elements" ] )
        os << "  " << e[ "element" ].get<std::string>() << ": self=" << yes_no( e[ "self_membered" ] )
           << " lower=" << yes_no( e[ "lower" ] ) << " upper=" << yes_no( e[ "upper" ] )
           << " strictly-russellian=" << yes_no( e[ "strictly_russellian" ] ) << "\n";
    os << "links: " << doc[ "links" ].size() << "\n";
    for ( const auto& l : doc[ "links" ] )
    {
        const bool asc = l[ "ascending" ];
        const bool desc = l[ "descending" ];
        os << "  " << l[ "from" ].get<std::string>() << ( asc && desc ? " <-> " : asc ? " -> " : " <- " )
           << l[ "to" ].get<std::string>();
        if ( !l[ "phi" ].empty() )
            os << " [" << join( l[ "phi" ] ) << "]";
        os << "\n";
    }
    os << "russell witness: "
       << ( doc[ "russell_witness" ].is_null() ? "none" : doc[ "russell_witness" ].get<std::string>() ) << "\n";
    os << "comprehension witnesses:\n";
    for ( const auto& [ phi, w ] : doc[ "comprehension" ].items() )
        os << "  " << phi << ": " << ( w.is_null() ? "none" : w.get<std::string>() ) << "\n";
    render_require( os, doc );
}

// ---------------------------------------------------------------- verify

Json cmd_verify( const Universe& u, const Options& opt, bool& failed )
{
    Json doc;
    doc[ "size" ] = u.size();
    const auto report = verify_lemma_suite( u );
    Json lemmas = Json::array();
    for ( const auto& [ tag, v ] : report.per_lemma )
    {
        Json entry{ { "lemma", std::string( to_string( tag ) ) },
                    { "status", to_string( v.status ) },
                    { "checked", v.checked },
                    { "witness", names_json( u, v.witness ) },
                    { "statement", std::string( describe( tag ) ) } };
        if ( tag == LemmaTag::MainResult )
            entry[ "note" ] = "disjointness read at element level: no element is an endpoint of both a lower "
                              "link and an upper link";
        lemmas.push_back( std::move( entry ) );
    }
    doc[ "lemmas" ] = lemmas;
    doc[ "violated" ] = report.any_violated();
    failed = failed || report.any_violated();

    // Informational: self-membered x whose predecessor exists and is not
    // self-membered, as with the Quine atom.
    Json query = Json::array();
    for ( auto x : u.elements() )
    {
        const auto p = predecessor_in( u, x ).get();
        if ( self_membered( u, x ) && p && !self_membered( u, *p ) )
            query.push_back( Json{ { "element", u.name( x ) }, { "predecessor", u.name( *p ) } } );
    }
    doc[ "self_membered_with_non_self_membered_predecessor" ] = query;
    doc[ "require" ] = require_json( u, opt.require, failed );
    return doc;
}

void render_verify( std::ostream& os, const Json& doc )
{
    os << "elements: " << doc[ "size" ].get<std::size_t>() << "\n";
    for ( const auto& l : doc[ "lemmas" ] )
    {
        os << "  " << l[ "lemma" ].get<std::string>() << ": " << l[ "status" ].get<std::string>() << " ("
           << l[ "checked" ].get<std::size_t>() << " checked)";
        if ( !l[ "witness" ].empty() )
            os << " witness: " << join( l[ "witness" ] );
        os << "\n";
    }
    os << "violations: " << ( doc[ "violated" ].get<bool>() ? "yes" : "none" ) << "\n";
    const auto& q = doc[ "self_membered_with_non_self_membered_predecessor" ];
    os << "x in x but x-- not in x--: ";
    if ( q.empty() )
        os << "none";
    for ( std::size_t i = 0; i < q.size(); ++i )
        os << ( i ? ", " : "" ) << q[ i ][ "element" ].get<std::string>() << " (x-- = "
           << q[ i ][ "predecessor" ].get<std::string>() << ")";
    os << "\n";
    render_require( os, doc );
}

// ---------------------------------------------------------------- chains

Json cmd_chains( const Universe& u, const Options& opt, const std::string& from, const std::string& dir,
                 std::size_t cap, bool& failed )
{
    const auto direction = dir == "asc" ? Direction::Ascending : Direction::Descending;
    const auto chain = trace_chain( u, u.id( from ), direction, cap );

    Json doc;
    doc[ "from" ] = from;
    doc[ "direction" ] = to_string( direction );
    doc[ "cap" ] = cap;
    doc[ "nodes" ] = names_json( u, chain.nodes );
    doc[ "terminated_by" ] = to_string( chain.terminated_by );
    doc[ "repeated" ] = chain.repeated ? Json( u.name( *chain.repeated ) ) : Json( nullptr );
    doc[ "ambiguous" ] = names_json( u, chain.ambiguous );
    doc[ "tracked_property" ] = chain.tracked_property ? Json( *chain.tracked_property ) : Json( nullptr );
    doc[ "property_held" ] = chain.property_held;
    failed = failed || !chain.property_held;
    doc[ "require" ] = require_json( u, opt.require, failed );
    return doc;
}

void render_chains( std::ostream& os, const Json& doc )
{
    os << "chain from " << doc[ "from" ].get<std::string>() << " (" << doc[ "direction" ].get<std::string>()
       << ", cap " << doc[ "cap" ].get<std::size_t>() << "): ";
    const auto& nodes = doc[ "nodes" ];
    for ( std::size_t i = 0; i < nodes.size(); ++i )
        os << ( i ? ( doc[ "direction" ] == "asc" ? " -> " : " <- " ) : "" ) << nodes[ i ].get<std::string>();
    os << "\n";
    os << "length: " << nodes.size() << "\n";
    os << "terminated by: " << doc[ "terminated_by" ].get<std::string>();
    if ( !doc[ "repeated" ].is_null() )
        os << " (revisits " << doc[ "repeated" ].get<std::string>() << ")";
    if ( !doc[ "ambiguous" ].empty() )
        os << " (candidates " << join( doc[ "ambiguous" ] ) << ")";
    os << "\n";
    if ( !doc[ "tracked_property" ].is_null() )
        os << "tracked property: " << doc[ "tracked_property" ].get<std::string>() << ", "
           << ( doc[ "property_held" ].get<bool>() ? "held at every step" : "BROKEN" ) << "\n";
    render_require( os, doc );
}

// ---------------------------------------------------------------- enumerate

Json cmd_enumerate( std::size_t size, const std::string& filter, bool dedupe, std::size_t threads,
                    std::size_t samples, bool audit, bool& failed )
{
    EnumSpec spec;
    spec.n = size;
    spec.dedupe = dedupe;
    spec.max_n = max_n_from_env();
    spec.threads = threads;
    spec.max_samples = samples;
    if ( !filter.empty() )
        spec.filter = parse_filter( filter );

    std::atomic<std::uint64_t> violations{ 0 };
    UniverseVisitor visit;
    if ( audit )
        visit = [ & ]( const Universe& u ) {
            if ( verify_lemma_suite( u ).any_violated() )
                ++violations;
        };
    const auto stats = enumerate( spec, visit );

    Json doc;
    doc[ "size" ] = size;
    doc[ "filter" ] = filter.empty() ? Json( nullptr ) : Json( filter );
    doc[ "dedupe" ] = dedupe;
    doc[ "cap" ] = spec.max_n;
    doc[ "total" ] = stats.total;
    doc[ "matching" ] = stats.matching;
    doc[ "samples" ] = stats.sample_witnesses;
    if ( audit )
    {
        doc[ "lemma_violations" ] = violations.load();
        failed = failed || violations.load() != 0;
    }
    return doc;
}

void render_enumerate( std::ostream& os, const Json& doc )
{
    os << "size: " << doc[ "size" ].get<std::size_t>() << "\n";
    os << "filter: " << ( doc[ "filter" ].is_null() ? "none" : doc[ "filter" ].get<std::string>() ) << "\n";
    os << "dedupe: " << yes_no( doc[ "dedupe" ] ) << "\n";
    os << "total: " << doc[ "total" ].get<std::uint64_t>() << "\n";
    os << "matching: " << doc[ "matching" ].get<std::uint64_t>() << "\n";
    if ( doc.contains( "lemma_violations" ) )
        os << "lemma violations: " << doc[ "lemma_violations" ].get<std::uint64_t>() << "\n";
    const auto& samples = doc[ "samples" ];
    for ( std::size_t i = 0; i < samples.size(); ++i )
    {
        os << "sample " << i + 1 << ":\n";
        std::istringstream lines( samples[ i ].get<std::string>() );
        for ( std::string line; std::getline( lines, line ); )
            os << "  " << line << "\n";
    }
}

// ---------------------------------------------------------------- interp

std::string index_text( const BaseModel& model, const Index& index )
{
    std::string out = "({";
    if ( !index.level0.empty() )
        out += "0rep";
    out += "}, {";
    bool first = true;
    for ( const auto& t : index.level_mu )
    {
        out += ( first ? "" : ", " ) + model.name( std::get<MuRep>( t ).entity );
        first = false;
    }
    return out + "})";
}

Json model_json( const BaseModel& model )
{
    Json entities = Json::array();
    for ( auto e : model.entities() )
        entities.push_back( model.name( e ) );
    Json tags = Json::array();
    for ( auto u : model.urelements() )
    {
        const auto idx = model.index_of( u );
        tags.push_back( Json{ { "urelement", model.name( u ) },
                              { "index", idx ? Json( index_text( model, *idx ) ) : Json( nullptr ) } } );
    }
    return Json{ { "entities", entities }, { "tagging", tags } };
}

Json report_json( const InterpReport& r )
{
    Json checks = Json::array();
    for ( const auto& c : r.checks )
        checks.push_back( Json{ { "check", c.name }, { "passed", c.passed }, { "detail", c.detail } } );
    Json doc;
    doc[ "demo" ] = r.demo;
    doc[ "precondition" ] = r.unmet_precondition ? Json( *r.unmet_precondition ) : Json( nullptr );
    if ( !r.chain.empty() )
        doc[ "chain" ] = r.chain;
    doc[ "checks" ] = checks;
    doc[ "warnings" ] = r.warnings;
    doc[ "passed" ] = r.passed();
    return doc;
}

Json cmd_interp( const std::string& demo, std::size_t k, const std::string& model_path, const std::string& m_name,
                 const std::string& n_name, bool& failed )
{
    Json doc;
    if ( demo == "quine" )
    {
        doc = report_json( verify_quine_counterexample() );
    }
    else
    {
        const auto base = model_path.empty() ? default_demo_model() : load_model( read_file( model_path ) );
        if ( demo == "forster" )
        {
            const auto swapped = upsilon_swap( base, base.entity( m_name ), base.entity( n_name ) );
            doc = report_json( verify_forster_counterexample( swapped ) );
            doc[ "model" ] = model_json( swapped );
        }
        else
        {
            const auto chain = upper_chain_interp( base, k );
            doc = report_json( verify_upper_chain( chain ) );
            doc[ "k" ] = k;
            doc[ "model" ] = model_json( chain.model );
        }
    }
    failed = failed || !doc[ "passed" ].get<bool>();
    return doc;
}

void render_interp( std::ostream& os, const Json& doc )
{
    os << "demo: " << doc[ "demo" ].get<std::string>() << "\n";
    if ( doc.contains( "model" ) )
    {
        os << "entities: " << join( doc[ "model" ][ "entities" ] ) << "\n";
        os << "tagging:\n";
        for ( const auto& t : doc[ "model" ][ "tagging" ] )
            os << "  " << t[ "urelement" ].get<std::string>() << " <- "
               << ( t[ "index" ].is_null() ? "untagged" : t[ "index" ].get<std::string>() ) << "\n";
    }
    if ( !doc[ "precondition" ].is_null() )
        os << "precondition not met: " << doc[ "precondition" ].get<std::string>() << "\n";
    if ( doc.contains( "chain" ) )
        os << "chain: " << join( doc[ "chain" ] ) << "\n";
    for ( const auto& c : doc[ "checks" ] )
    {
        os << ( c[ "passed" ].get<bool>() ? "PASS " : "FAIL " ) << c[ "check" ].get<std::string>();
        if ( !c[ "detail" ].get<std::string>().empty() )
            os << "  [" << c[ "detail" ].get<std::string>() << "]";
        os << "\n";
    }
    for ( const auto& w : doc[ "warnings" ] )
        os << "warning: " << w.get<std::string>() << "\n";
    os << "result: " << ( doc[ "passed" ].get<bool>() ? "all checks passed" : "FAILED" ) << "\n";
}

std::string echo( const std::vector<std::string>& args )
{
    std::string out = "setlab";
    for ( const auto& a : args )
        out += " " + a;
    return out;
}

} // namespace

int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Finite membership universes: axiom checks, classifiers, lemma audits and interpretation demos",
                  "setlab" };
    app.require_subcommand( 1 );
    app.fallthrough();

    Options opt;
    app.add_option( "--format", opt.format, "Output format" )->check( CLI::IsMember( { "text", "json" } ) );
    app.add_option( "--require", opt.require, "Exit 1 unless these axioms hold" )
            ->check( CLI::IsMember( { "successor", "predecessor", "both" } ) );

    std::string file;
    auto* check = app.add_subcommand( "check", "Successor and predecessor lookups for every element" );
    check->add_option( "file", file, "Universe file" )->required();
    auto* classify = app.add_subcommand( "classify", "Lower/upper classification, links and witnesses" );
    classify->add_option( "file", file, "Universe file" )->required();
    auto* verify = app.add_subcommand( "verify", "Evaluate every lemma on a universe" );
    verify->add_option( "file", file, "Universe file" )->required();

    std::string from, dir = "asc";
    std::size_t cap = 64;
    auto* chains = app.add_subcommand( "chains", "Trace successor or predecessor chains" );
    chains->add_option( "file", file, "Universe file" )->required();
    chains->add_option( "--from", from, "Start element" )->required();
    chains->add_option( "--dir", dir, "Direction" )->check( CLI::IsMember( { "asc", "desc" } ) );
    chains->add_option( "--cap", cap, "Maximum chain length" )->check( CLI::Range( std::size_t{ 1 }, std::size_t{ 1000000 } ) );

    std::size_t size = 0, threads = 1, samples = 4;
    std::string filter;
    bool dedupe = false, audit = false;
    auto* enumerate_cmd = app.add_subcommand( "enumerate", "Enumerate every universe of a given size" );
    enumerate_cmd->add_option( "--size", size, "Number of elements" )->required();
    enumerate_cmd->add_option( "--filter", filter, "Universe filter" )->check( CLI::IsMember( filter_names() ) );
    enumerate_cmd->add_flag( "--dedupe", dedupe, "One universe per isomorphism class" );
    enumerate_cmd->add_flag( "--audit", audit, "Run the lemma suite on every matching universe" );
    enumerate_cmd->add_option( "--threads", threads, "Worker threads" )->check( CLI::Range( 1, 256 ) );
    enumerate_cmd->add_option( "--samples", samples, "Matching universes to print" );

    std::string demo, model_path, m_name = "M", n_name = "N";
    std::size_t k = 3;
    auto* interp = app.add_subcommand( "interp", "Interpreted-membership demos" );
    interp->add_option( "--demo", demo, "Demo to run" )
            ->required()
            ->check( CLI::IsMember( { "forster", "quine", "upperchain" } ) );
    interp->add_option( "--k", k, "Upper chain length" )->check( CLI::Range( std::size_t{ 1 }, std::size_t{ 100000 } ) );
    interp->add_option( "--model", model_path, "Model file (default: built-in demo model)" );
    interp->add_option( "--m", m_name, "Urelement playing M" );
    interp->add_option( "--n", n_name, "Urelement playing N" );

    try
    {
        std::vector<std::string> reversed( args.rbegin(), args.rend() );
        app.parse( reversed );
    }
    catch ( const CLI::ParseError& e )
    {
        const int code = app.exit( e, out, err );
        return code == 0 ? Success : Usage;
    }

    bool failed = false;
    Json body;
    void ( *render )( std::ostream&, const Json& ) = nullptr;
    try
    {
        if ( *enumerate_cmd )
        {
            body = cmd_enumerate( size, filter, dedupe, threads, samples, audit, failed );
            render = render_enumerate;
        }
        else if ( *interp )
        {
            body = cmd_interp( demo, k, model_path, m_name, n_name, failed );
            render = render_interp;
        }
        else
        {
            const auto u = load_universe( read_file( file ) );
            if ( *check )
            {
                body = cmd_check( u, opt, failed );
                render = render_check;
            }
            else if ( *classify )
            {
                body = cmd_classify( u, opt, failed );
                render = render_classify;
            }
            else if ( *verify )
            {
                body = cmd_verify( u, opt, failed );
                render = render_verify;
            }
            else
            {
                body = cmd_chains( u, opt, from, dir, cap, failed );
                render = render_chains;
            }
        }
    }
    catch ( const Error& e )
    {
        err << "setlab: " << e.what() << "\n";
        return Usage;
    }

    const int code = failed ? Failed : Success;
    if ( opt.format == "json" )
    {
        Json doc{ { "command", echo( args ) } };
        doc.update( body );
        doc[ "exit_code" ] = code;
        out << doc.dump( 2 ) << "\n";
    }
    else
    {
        out << "command: " << echo( args ) << "\n";
        render( out, body );
        out << "exit: " << code << "\n";
    }
    return code;
}

} // namespace setlab::cli
