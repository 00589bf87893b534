#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidfoq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(std::size_t rank)
        : Error("singular matrix (rank " + std::to_string(rank) + ")"), rank_(rank) {}
    std::size_t rank() const noexcept { return rank_; }

private:
    std::size_t rank_;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

// Raised when the requested data cannot exist, e.g. an unsolvable middle block.
class Infeasible : public Error {
public:
    using Error::Error;
};

class InvalidData : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace braidfoq
