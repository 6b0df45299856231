#pragma once

#include <stdexcept>
#include <string>

namespace geozeta {

// Error taxonomy. Each class maps to one process exit code in the CLI:
// parse 2, validation 3, numeric 4, precondition 5.

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation of a regularized product at one of its listed points.
// Carries the order so callers can report the pole/zero structure.
class pole_error : public numeric_error {
public:
    pole_error(const std::string& msg, int order)
        : numeric_error(msg), order_(order) {}
    int order() const { return order_; }

private:
    int order_;
};

} // namespace geozeta
