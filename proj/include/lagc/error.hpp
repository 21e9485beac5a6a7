#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lagc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A variable was dereferenced outside the state's domain.
class UnboundVariable : public Error {
public:
    explicit UnboundVariable(std::string var)
        : Error("unbound variable '" + var + "'"), var_(std::move(var)) {}
    const std::string& variable() const { return var_; }

private:
    std::string var_;
};

// A partial function was applied outside its domain.
class Undefined : public Error {
public:
    using Error::Error;
};

class FreshBoundExceeded : public Error {
public:
    using Error::Error;
};

class DivergenceLimit : public Error {
public:
    using Error::Error;
};

class MalformedParam : public Error {
public:
    using Error::Error;
};

class ModeError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::string expected)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected),
          line_(line), column_(column), expected_(std::move(expected)) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string expected_;
};

}  // namespace lagc
