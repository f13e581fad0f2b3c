#include "hlcd/field.hpp"

#include <algorithm>
#include <cctype>

#include "hlcd/errors.hpp"

namespace hlcd {

std::string_view kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::NotStandardForm: return "NotStandardForm";
        case ErrorKind::IsotropyViolated: return "IsotropyViolated";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::AllCoordinatesDeleted: return "AllCoordinatesDeleted";
        case ErrorKind::InvalidCoordinate: return "InvalidCoordinate";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::NotLcd: return "NotLcd";
        case ErrorKind::ExhaustedRetries: return "ExhaustedRetries";
        case ErrorKind::NoPairExists: return "NoPairExists";
        case ErrorKind::UnknownEntry: return "UnknownEntry";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool Gf4::from_symbol(char c, Gf4& out) noexcept {
    switch (c) {
        case '0': out = zero(); return true;
        case '1': out = one(); return true;
        case 'w': out = omega(); return true;
        case 'W': out = omega2(); return true;
        default: return false;
    }
}

F4Vector F4Vector::parse(std::string_view symbols) {
    std::vector<Gf4> out;
    out.reserve(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const char c = symbols[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') continue;
        Gf4 a;
        if (!Gf4::from_symbol(c, a)) {
            throw ParseError(std::string("unexpected symbol '") + c + "'", 1, i + 1);
        }
        out.push_back(a);
    }
    return F4Vector(std::move(out));
}

bool F4Vector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](Gf4 a) { return a.is_zero(); });
}

std::string F4Vector::to_string() const {
    std::string s;
    s.reserve(entries_.size());
    for (Gf4 a : entries_) s.push_back(a.symbol());
    return s;
}

std::size_t weight(std::span<const Gf4> x) noexcept {
    return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](Gf4 a) { return !a.is_zero(); }));
}

Gf4 hermitian_inner(std::span<const Gf4> x, std::span<const Gf4> y) {
    if (x.size() != y.size()) {
        throw LengthMismatch("hermitian_inner: lengths " + std::to_string(x.size()) + " and " +
                             std::to_string(y.size()));
    }
    Gf4 acc;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i].conj();
    return acc;
}

F4Vector scale(const F4Vector& v, Gf4 alpha) {
    F4Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = alpha * v[i];
    return out;
}

F4Vector add(const F4Vector& x, const F4Vector& y) {
    F4Vector out = x;
    axpy(out.span(), Gf4::one(), y.span());
    return out;
}

void axpy(std::span<Gf4> x, Gf4 alpha, std::span<const Gf4> y) {
    if (x.size() != y.size()) throw LengthMismatch("axpy: length mismatch");
    if (alpha.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += alpha * y[i];
}

}  // namespace hlcd
