#ifndef TANGLES_CHECKED_HPP
#define TANGLES_CHECKED_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace tangles {

// Precondition violations on public entry points.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invariant breaches that indicate a bug, not bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Structured rejection carried by Checked<T>.
struct Rejection {
    std::string reason;
};

// Minimal expected-like carrier for validate/extract style operations that
// must report *why* an input was refused instead of throwing.
template <typename T>
class Checked {
public:
    Checked(T value) : v_(std::move(value)) {}
    Checked(Rejection r) : v_(std::move(r)) {}

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    const T& value() const {
        if (!ok()) throw domain_error(reason());
        return std::get<T>(v_);
    }
    T& value() {
        if (!ok()) throw domain_error(reason());
        return std::get<T>(v_);
    }

    const std::string& reason() const {
        static const std::string none = "(no rejection)";
        if (ok()) return none;
        return std::get<Rejection>(v_).reason;
    }

private:
    std::variant<T, Rejection> v_;
};

} // namespace tangles

#endif
