#ifndef HOMOPS_ERRORS_HPP
#define HOMOPS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace homops {

// Domain errors carry a stable kind tag so front ends can report them as data.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

  private:
    std::string kind_;
};

class DegreeTooSmall : public Error {
  public:
    explicit DegreeTooSmall(const std::string& what) : Error("DegreeTooSmall", what) {}
};

class Unsupported2Torsion : public Error {
  public:
    explicit Unsupported2Torsion(const std::string& what) : Error("Unsupported2Torsion", what) {}
};

class BoundExceeded : public Error {
  public:
    explicit BoundExceeded(const std::string& what) : Error("BoundExceeded", what) {}
};

class ParseError : public Error {
  public:
    ParseError(std::size_t position, const std::string& what)
        : Error("ParseError", what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

class ValueError : public Error {
  public:
    explicit ValueError(const std::string& what) : Error("ValueError", what) {}
};

// A value that may legitimately be undetermined (e.g. a homotopy group whose
// stem is not tabulated). Distinct from an error: Unknown is an answer.
template <class T>
class Maybe {
  public:
    Maybe(T value) : v_(std::move(value)) {}  // NOLINT: implicit by design

    static Maybe unknown(std::string reason) { return Maybe(Tag{}, std::move(reason)); }

    bool known() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return known(); }

    const T& value() const {
        if (!known()) throw std::logic_error("Maybe::value() on unknown: " + reason());
        return std::get<T>(v_);
    }
    T& value() {
        if (!known()) throw std::logic_error("Maybe::value() on unknown: " + reason());
        return std::get<T>(v_);
    }

    const std::string& reason() const {
        static const std::string empty;
        return known() ? empty : std::get<std::string>(v_);
    }

  private:
    struct Tag {};
    Maybe(Tag, std::string reason) : v_(std::move(reason)) {}
    std::variant<T, std::string> v_;
};

}  // namespace homops

#endif
