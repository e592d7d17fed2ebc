#pragma once

#include <stdexcept>
#include <string>

namespace robtree {

// Base for every domain error the library raises. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class InvalidTreeError : public Error {
public:
    using Error::Error;
};

class LimitError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace robtree
