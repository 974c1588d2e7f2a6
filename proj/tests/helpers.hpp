// Shared test helpers.

#ifndef NUMGAME_TESTS_HELPERS_HPP_
#define NUMGAME_TESTS_HELPERS_HPP_

#include <gtest/gtest.h>

#include "numgame/numgame.hpp"

// Expects `expr` to throw numgame::Error carrying `want`.
#define EXPECT_ERRC(expr, want)                                                \
  do {                                                                         \
    try {                                                                      \
      (void)(expr);                                                            \
      ADD_FAILURE() << "expected " << numgame::errc_name(want) << ", nothing thrown"; \
    } catch (const numgame::Error& e_) {                                       \
      EXPECT_EQ(e_.code(), want) << e_.what();                                 \
    }                                                                          \
  } while (0)

inline void expect_position(const numgame::Position& got, const numgame::Position& want, double tol = 1e-9) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "node " << i + 1;
}

inline void expect_root(const numgame::RootVector& got, const std::vector<double>& want, double tol = 1e-9) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "coefficient " << i + 1;
}

#endif
