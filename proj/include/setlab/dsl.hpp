#pragma once

// Universe description language:
//
//   doc  := (stmt NEWLINE)*
//   stmt := name "=" "{" [name ("," name)*] "}" | "#" comment
//   name := [A-Za-z_][A-Za-z0-9_]*
//
// Whitespace around tokens is insignificant and names are case-sensitive.
// Blank lines are accepted and the final newline may be omitted. Names may be
// referenced before their definition.
//
// Model files add urelement declarations:
//
//   stmt  := ... | "urelement" name [ "index" "(" tset "," tset ")" ]
//   tset  := "{" [token ("," token)*] "}"
//   token := "0rep" | name
//
// The first token set is the level-0 component (only 0rep may appear), the
// second the level-mu component (entity names).

#include "setlab/interp.hpp"
#include "setlab/universe.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace setlab
{

struct SourcePos
{
    std::size_t line = 1;
    std::size_t column = 1;
};

struct SetDefinition
{
    std::string name;
    std::vector<std::string> members;
    SourcePos pos;
    std::vector<SourcePos> member_pos;
};

struct Comment
{
    std::string text;
};

struct UrelementDeclaration
{
    std::string name;
    SourcePos pos;
    struct Tag
    {
        bool zero = false;
        std::vector<std::string> mu;
        std::vector<SourcePos> mu_pos;
    };
    std::optional<Tag> tag;
};

using Statement = std::variant<SetDefinition, Comment, UrelementDeclaration>;

struct UniverseDoc
{
    std::vector<Statement> statements;
};

// Parses a universe document and validates it (no duplicates, no undefined
// names, no urelement declarations). Throws ParseError (or its
// DuplicateDefinition / UndefinedName subclasses) with a location.
UniverseDoc parse_universe( std::string_view text );
Universe to_universe( const UniverseDoc& doc );
Universe load_universe( std::string_view text );

// One "name = {a, b}" line per element in canonical order.
std::string print_universe( const Universe& u );

// Parses a model file: set definitions (the well-founded base) plus
// urelement declarations in pool order.
UniverseDoc parse_model( std::string_view text );
BaseModel to_model( const UniverseDoc& doc );
BaseModel load_model( std::string_view text );

} // namespace setlab
