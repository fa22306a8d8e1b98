#pragma once

#include <string>
#include <vector>

namespace certsolve::fixtures {

struct SystemText {
    std::vector<std::string> vars;
    std::vector<std::string> eqs;
    bool zero_dimensional;
};

/// Groebner corpus; the zero-dimensional entries double as solver fixtures.
inline const std::vector<SystemText>& systems() {
    static const std::vector<SystemText> f{
        {{"X", "Y"}, {"X^2 - 1", "Y - X"}, true},
        {{"X", "Y"}, {"X^2 - 1", "Y^2 - 1"}, true},
        {{"X", "Y", "Z"}, {"X + Y + Z", "X*Y + Y*Z + Z*X", "X*Y*Z - 1"}, true},
        {{"X", "Y"}, {"X^2 + Y^2 - 4", "X*Y - 1"}, true},
        {{"X", "Y", "Z"}, {"X^2 + Y + Z - 1", "X + Y^2 + Z - 1", "X + Y + Z^2 - 1"}, true},
        {{"a", "b"}, {"a*b - 1", "a^3 - b^2"}, true},
        {{"X", "Y"}, {"X^3 - 2*X*Y + 1/3", "Y^2 - X - 1"}, true},
        {{"X", "Y"}, {"X*Y - 1"}, false},
    };
    return f;
}

}  // namespace certsolve::fixtures
