#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace setlab
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class UnknownElement : public Error
{
public:
    using Error::Error;
};

// Requested size exceeds a configured ceiling (enumeration size, HF rank,
// canonicalization size).
class CapExceeded : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError( std::size_t line, std::size_t column, const std::string& message )
            : Error( std::to_string( line ) + ":" + std::to_string( column ) + ": " + message ),
              _line{ line }, _column{ column }
    {
    }

    [[nodiscard]] std::size_t line() const { return _line; }
    [[nodiscard]] std::size_t column() const { return _column; }

private:
    std::size_t _line;
    std::size_t _column;
};

class DuplicateDefinition : public ParseError
{
public:
    using ParseError::ParseError;
};

class UndefinedName : public ParseError
{
public:
    using ParseError::ParseError;
};

class ModelError : public Error
{
public:
    using Error::Error;
};

class CollisionError : public ModelError
{
public:
    using ModelError::ModelError;
};

class PoolExhausted : public ModelError
{
public:
    using ModelError::ModelError;
};

} // namespace setlab
