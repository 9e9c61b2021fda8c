#pragma once

#include <stdexcept>
#include <string>

namespace qw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A column of an operation table is not a permutation of the carrier.
struct NotBijective : Error {
  int column;
  explicit NotBijective(int col)
      : Error("column " + std::to_string(col) + " is not a bijection"), column(col) {}
};

struct OrderTooLarge : Error {
  explicit OrderTooLarge(int order, int bound)
      : Error("order " + std::to_string(order) + " exceeds bound " + std::to_string(bound)) {}
};

struct OrderMismatch : Error {
  OrderMismatch() : Error("operation tables have different orders") {}
};

struct NotTwoReductive : Error {
  NotTwoReductive() : Error("input quandle is not 2-reductive") {}
};

struct NotOsq : Error {
  NotOsq() : Error("input bundle is not an oriented singquandle") {}
};

}  // namespace qw
