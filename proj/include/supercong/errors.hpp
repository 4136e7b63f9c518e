#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supercong {

// Base of every error thrown by the library. CLI maps these to exit code 2
// (ConfigError) or reports them as failed outcomes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A congruence mod p^k was requested for a value with negative p-valuation.
class NegativeValuation : public Error {
public:
    using Error::Error;
};

class ZeroDenominatorPochhammer : public Error {
public:
    ZeroDenominatorPochhammer(std::size_t term, std::size_t param)
        : Error("bottom Pochhammer vanished at term " + std::to_string(term) +
                " (bottom parameter " + std::to_string(param) + ")"),
          term_(term), param_(param) {}

    std::size_t term() const noexcept { return term_; }
    std::size_t param() const noexcept { return param_; }

private:
    std::size_t term_;
    std::size_t param_;
};

class PoleParameter : public Error {
public:
    using Error::Error;
};

// An expression that must be real (conjugate-paired) had a nonzero imaginary part.
class NonRealResult : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace supercong
