#pragma once

#include "gapforge/error.hpp"

#include <doctest.h>

#include <string>

#define CHECK_CODE(expr, expected)                                                                                   \
    do {                                                                                                             \
        bool thrown_ = false;                                                                                        \
        try {                                                                                                        \
            (void)(expr);                                                                                            \
        }                                                                                                            \
        catch (const gapforge::Error& e_) {                                                                          \
            thrown_ = true;                                                                                          \
            CHECK_MESSAGE(e_.code() == (expected), "got " << std::string(gapforge::to_string(e_.code())));           \
        }                                                                                                            \
        CHECK_MESSAGE(thrown_, "expected " << std::string(gapforge::to_string(expected)));                           \
    } while (false)

inline std::string fixture_path(const std::string& name)
{
    return std::string(GAPFORGE_FIXTURE_DIR) + "/" + name + ".json";
}
