#include "setlab/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace setlab
{

namespace
{

enum class Tok
{
    Name,
    ZeroRep,
    Equals,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Comment,
    Newline,
    End
};

std::string describe( Tok t )
{
    switch ( t )
    {
    case Tok::Name: return "name";
    case Tok::ZeroRep: return "'0rep'";
    case Tok::Equals: return "'='";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Comment: return "comment";
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
    }
    return "?";
}

struct Token
{
    Tok kind;
    std::string text;
    SourcePos pos;
};

class Lexer
{
public:
    explicit Lexer( std::string_view text ) : _text{ text } {}

    Token next()
    {
        skip_blanks();
        const SourcePos pos = _pos;
        if ( _at >= _text.size() )
            return { Tok::End, "", pos };

        const char c = _text[ _at ];
        if ( c == '\n' )
        {
            advance();
            return { Tok::Newline, "", pos };
        }
        if ( c == '#' )
        {
            advance();
            std::string body;
            while ( _at < _text.size() && _text[ _at ] != '\n' )
                body.push_back( advance() );
            while ( !body.empty() && body.back() == '\r' )
                body.pop_back();
            return { Tok::Comment, body, pos };
        }
        if ( std::isalpha( static_cast<unsigned char>( c ) ) || c == '_' )
        {
            std::string name;
            while ( _at < _text.size() && ( std::isalnum( static_cast<unsigned char>( _text[ _at ] ) ) || _text[ _at ] == '_' ) )
                name.push_back( advance() );
            return { Tok::Name, name, pos };
        }
        if ( _text.substr( _at, 4 ) == "0rep" )
        {
            for ( int i = 0; i < 4; ++i )
                advance();
            return { Tok::ZeroRep, "0rep", pos };
        }

        advance();
        switch ( c )
        {
        case '=': return { Tok::Equals, "=", pos };
        case '{': return { Tok::LBrace, "{", pos };
        case '}': return { Tok::RBrace, "}", pos };
        case '(': return { Tok::LParen, "(", pos };
        case ')': return { Tok::RParen, ")", pos };
        case ',': return { Tok::Comma, ",", pos };
        default: break;
        }
        throw ParseError( pos.line, pos.column, std::string( "unexpected character '" ) + c + "'" );
    }

private:
    char advance()
    {
        const char c = _text[ _at++ ];
        if ( c == '\n' )
        {
            ++_pos.line;
            _pos.column = 1;
        }
        else
            ++_pos.column;
        return c;
    }

    void skip_blanks()
    {
        while ( _at < _text.size() && ( _text[ _at ] == ' ' || _text[ _at ] == '\t' || _text[ _at ] == '\r' ) )
            advance();
    }

    std::string_view _text;
    std::size_t _at = 0;
    SourcePos _pos;
};

class Parser
{
public:
    Parser( std::string_view text, bool allow_urelements ) : _lexer{ text }, _allow_urelements{ allow_urelements }
    {
        _cur = _lexer.next();
    }

    UniverseDoc parse()
    {
        UniverseDoc doc;
        while ( _cur.kind != Tok::End )
        {
            if ( _cur.kind == Tok::Newline )
            {
                shift();
                continue;
            }
            doc.statements.push_back( statement() );
            if ( _cur.kind != Tok::End )
                expect( Tok::Newline );
        }
        return doc;
    }

private:
    Statement statement()
    {
        if ( _cur.kind == Tok::Comment )
        {
            auto text = _cur.text;
            shift();
            return Comment{ std::move( text ) };
        }

        const auto head = expect( Tok::Name );
        if ( head.text == "urelement" && _cur.kind != Tok::Equals )
        {
            if ( !_allow_urelements )
                throw ParseError( head.pos.line, head.pos.column, "urelement declarations are only allowed in model files" );
            return urelement();
        }

        SetDefinition def{ head.text, {}, head.pos, {} };
        expect( Tok::Equals );
        expect( Tok::LBrace );
        if ( _cur.kind != Tok::RBrace )
        {
            for ( ;; )
            {
                auto m = expect( Tok::Name );
                def.members.push_back( m.text );
                def.member_pos.push_back( m.pos );
                if ( _cur.kind != Tok::Comma )
                    break;
                shift();
            }
        }
        expect( Tok::RBrace );
        return def;
    }

    UrelementDeclaration urelement()
    {
        const auto name = expect( Tok::Name );
        UrelementDeclaration decl{ name.text, name.pos, std::nullopt };
        if ( _cur.kind != Tok::Name )
            return decl;

        const auto kw = expect( Tok::Name );
        if ( kw.text != "index" )
            throw ParseError( kw.pos.line, kw.pos.column, "expected 'index', found '" + kw.text + "'" );

        UrelementDeclaration::Tag tag;
        expect( Tok::LParen );
        for ( const auto& t : token_set() )
        {
            if ( t.kind != Tok::ZeroRep )
                throw ParseError( t.pos.line, t.pos.column, "the level-0 component may only contain 0rep" );
            tag.zero = true;
        }
        expect( Tok::Comma );
        for ( const auto& t : token_set() )
        {
            if ( t.kind != Tok::Name )
                throw ParseError( t.pos.line, t.pos.column, "the level-mu component may only contain names" );
            tag.mu.push_back( t.text );
            tag.mu_pos.push_back( t.pos );
        }
        expect( Tok::RParen );
        decl.tag = std::move( tag );
        return decl;
    }

    std::vector<Token> token_set()
    {
        std::vector<Token> out;
        expect( Tok::LBrace );
        if ( _cur.kind != Tok::RBrace )
        {
            for ( ;; )
            {
                if ( _cur.kind != Tok::Name && _cur.kind != Tok::ZeroRep )
                    fail( "0rep or a name" );
                out.push_back( _cur );
                shift();
                if ( _cur.kind != Tok::Comma )
                    break;
                shift();
            }
        }
        expect( Tok::RBrace );
        return out;
    }

    Token expect( Tok kind )
    {
        if ( _cur.kind != kind )
            fail( describe( kind ) );
        auto t = _cur;
        shift();
        return t;
    }

    [[noreturn]] void fail( const std::string& wanted )
    {
        auto found = _cur.kind == Tok::Name ? "'" + _cur.text + "'" : describe( _cur.kind );
        throw ParseError( _cur.pos.line, _cur.pos.column, "expected " + wanted + ", found " + found );
    }

    void shift() { _cur = _lexer.next(); }

    Lexer _lexer;
    bool _allow_urelements;
    Token _cur;
};

// Checks duplicates across sets and urelements, and that every referenced
// name resolves. Set members must be sets; index names may be any entity.
void validate( const UniverseDoc& doc )
{
    std::map<std::string, SourcePos> sets;
    std::map<std::string, SourcePos> urelements;
    auto define = [ & ]( std::map<std::string, SourcePos>& into, const std::string& name, SourcePos pos ) {
        if ( sets.contains( name ) || urelements.contains( name ) )
            throw DuplicateDefinition( pos.line, pos.column, "duplicate definition of '" + name + "'" );
        into.emplace( name, pos );
    };

    for ( const auto& st : doc.statements )
    {
        if ( const auto* def = std::get_if<SetDefinition>( &st ) )
            define( sets, def->name, def->pos );
        else if ( const auto* ur = std::get_if<UrelementDeclaration>( &st ) )
            define( urelements, ur->name, ur->pos );
    }

    for ( const auto& st : doc.statements )
    {
        if ( const auto* def = std::get_if<SetDefinition>( &st ) )
        {
            for ( std::size_t i = 0; i < def->members.size(); ++i )
            {
                const auto& m = def->members[ i ];
                const auto pos = def->member_pos[ i ];
                if ( urelements.contains( m ) )
                    throw ParseError( pos.line, pos.column, "'" + m + "' is an urelement; sets may only contain sets" );
                if ( !sets.contains( m ) )
                    throw UndefinedName( pos.line, pos.column, "undefined name '" + m + "'" );
            }
        }
        else if ( const auto* ur = std::get_if<UrelementDeclaration>( &st ); ur && ur->tag )
        {
            for ( std::size_t i = 0; i < ur->tag->mu.size(); ++i )
            {
                const auto& m = ur->tag->mu[ i ];
                if ( !sets.contains( m ) && !urelements.contains( m ) )
                    throw UndefinedName( ur->tag->mu_pos[ i ].line, ur->tag->mu_pos[ i ].column,
                                         "undefined name '" + m + "'" );
            }
        }
    }
}

std::vector<std::pair<std::string, std::vector<std::string>>> set_definitions( const UniverseDoc& doc )
{
    std::vector<std::pair<std::string, std::vector<std::string>>> defs;
    for ( const auto& st : doc.statements )
        if ( const auto* def = std::get_if<SetDefinition>( &st ) )
            defs.emplace_back( def->name, def->members );
    return defs;
}

} // namespace

UniverseDoc parse_universe( std::string_view text )
{
    auto doc = Parser( text, false ).parse();
    validate( doc );
    return doc;
}

Universe to_universe( const UniverseDoc& doc )
{
    return Universe::from_definitions( set_definitions( doc ) );
}

Universe load_universe( std::string_view text )
{
    return to_universe( parse_universe( text ) );
}

std::string print_universe( const Universe& u )
{
    std::string out;
    for ( auto x : u.elements() )
    {
        out += u.name( x ) + " = {";
        bool first = true;
        u.members( x ).for_each( [ & ]( ElementId m ) {
            out += ( first ? "" : ", " ) + u.name( m );
            first = false;
        } );
        out += "}\n";
    }
    return out;
}

UniverseDoc parse_model( std::string_view text )
{
    auto doc = Parser( text, true ).parse();
    validate( doc );
    return doc;
}

BaseModel to_model( const UniverseDoc& doc )
{
    std::vector<std::string> pool;
    for ( const auto& st : doc.statements )
        if ( const auto* ur = std::get_if<UrelementDeclaration>( &st ) )
            pool.push_back( ur->name );

    BaseModel model( Universe::from_definitions( set_definitions( doc ) ), std::move( pool ) );
    for ( const auto& st : doc.statements )
    {
        const auto* ur = std::get_if<UrelementDeclaration>( &st );
        if ( !ur || !ur->tag )
            continue;
        std::vector<Entity> mu;
        for ( const auto& m : ur->tag->mu )
            mu.push_back( model.entity( m ) );
        try
        {
            model = model.with_tag( model.entity( ur->name ), Index::make( ur->tag->zero, mu ) );
        }
        catch ( const ModelError& e )
        {
            throw ParseError( ur->pos.line, ur->pos.column, e.what() );
        }
    }
    return model;
}

BaseModel load_model( std::string_view text )
{
    return to_model( parse_model( text ) );
}

} // namespace setlab
