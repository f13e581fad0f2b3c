#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hlcd {

// Machine-readable error categories; the CLI prints kind_name() on stderr.
enum class ErrorKind {
    LengthMismatch,
    DimensionMismatch,
    RankDeficient,
    NotStandardForm,
    IsotropyViolated,
    ZeroVector,
    BudgetExceeded,
    TooLarge,
    AllCoordinatesDeleted,
    InvalidCoordinate,
    PreconditionViolated,
    NotLcd,
    ExhaustedRetries,
    NoPairExists,
    UnknownEntry,
    ParseError,
    InvalidArgument,
};

std::string_view kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

namespace detail {
template <ErrorKind K>
class KindError : public Error {
public:
    explicit KindError(const std::string& message) : Error(K, message) {}
};
}  // namespace detail

using LengthMismatch = detail::KindError<ErrorKind::LengthMismatch>;
using DimensionMismatch = detail::KindError<ErrorKind::DimensionMismatch>;
using RankDeficient = detail::KindError<ErrorKind::RankDeficient>;
using NotStandardForm = detail::KindError<ErrorKind::NotStandardForm>;
using ZeroVector = detail::KindError<ErrorKind::ZeroVector>;
using TooLarge = detail::KindError<ErrorKind::TooLarge>;
using AllCoordinatesDeleted = detail::KindError<ErrorKind::AllCoordinatesDeleted>;
using InvalidCoordinate = detail::KindError<ErrorKind::InvalidCoordinate>;
using PreconditionViolated = detail::KindError<ErrorKind::PreconditionViolated>;
using NotLcd = detail::KindError<ErrorKind::NotLcd>;
using ExhaustedRetries = detail::KindError<ErrorKind::ExhaustedRetries>;
using NoPairExists = detail::KindError<ErrorKind::NoPairExists>;
using UnknownEntry = detail::KindError<ErrorKind::UnknownEntry>;
using InvalidArgument = detail::KindError<ErrorKind::InvalidArgument>;

// Thrown by exact_min_weight() when the enumeration budget runs out.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t upper_bound, std::uint64_t enumerated)
        : Error(ErrorKind::BudgetExceeded,
                "enumeration budget exhausted after " + std::to_string(enumerated) +
                    " classes; best upper bound " + std::to_string(upper_bound)),
          upper_bound_(upper_bound) {}
    std::size_t upper_bound() const noexcept { return upper_bound_; }

private:
    std::size_t upper_bound_;
};

// Carries the three inner products (2-bit GF(4) encodings) of the failed check.
class IsotropyViolated : public Error {
public:
    IsotropyViolated(const std::string& message, std::array<std::uint8_t, 3> products)
        : Error(ErrorKind::IsotropyViolated, message), products_(products) {}
    const std::array<std::uint8_t, 3>& products() const noexcept { return products_; }

private:
    std::array<std::uint8_t, 3> products_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace hlcd
