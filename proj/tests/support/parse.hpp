#pragma once

#include <span>
#include <string>
#include <vector>

#include "cbid/text_format.hpp"

namespace testkit {

inline const std::vector<std::string>& xyz()
{
    static const std::vector<std::string> names{"x", "y", "z"};
    return names;
}

/// A rational function in x (arity 1), x, y (arity 2) or x, y, z (arity 3).
inline cbid::RationalFunction R(const char* text, std::size_t arity = 2)
{
    return cbid::parse_rf(text, std::span(xyz()).first(arity));
}

inline std::vector<cbid::RationalFunction> Rs(std::initializer_list<const char*> texts, std::size_t arity)
{
    std::vector<cbid::RationalFunction> out;
    for (const char* t : texts)
        out.push_back(R(t, arity));
    return out;
}

} // namespace testkit
