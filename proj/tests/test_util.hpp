#pragma once

// Shared GoogleTest helpers for the unit suites.

#include <gtest/gtest.h>

#include <graphdot/error.hpp>

/// Asserts that evaluating the expression throws graphdot::error with the
/// given category.
#define EXPECT_FAILS(kind_, ...)                              \
    do {                                                      \
        bool thrown_ = false;                                 \
        try {                                                 \
            (void)(__VA_ARGS__);                              \
        } catch (const graphdot::error& e_) {                 \
            thrown_ = true;                                   \
            EXPECT_EQ(e_.kind(), kind_) << e_.what();         \
        }                                                     \
        EXPECT_TRUE(thrown_) << "expected " #__VA_ARGS__      \
                                " to throw graphdot::error";  \
    } while (0)
