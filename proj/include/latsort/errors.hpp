#pragma once

#include <stdexcept>
#include <string>

namespace latsort {

/** Base class for failures while building or validating a lattice. */
struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** The cover graph contains a cycle. */
struct CycleError : LatticeError {
  explicit CycleError(std::string element_name)
      : LatticeError("cover graph has a cycle through '" + element_name + "'"),
        element(std::move(element_name)) {}
  std::string element;
};

/** Some pair of elements lacks a greatest lower bound or least upper bound. */
struct NotALatticeError : LatticeError {
  NotALatticeError(std::string op, std::string lhs_name, std::string rhs_name)
      : LatticeError("pair ('" + lhs_name + "', '" + rhs_name + "') has no " +
                     (op == "meet" ? std::string("greatest lower bound")
                                   : std::string("least upper bound"))),
        op(std::move(op)), lhs(std::move(lhs_name)), rhs(std::move(rhs_name)) {}
  std::string op;  // "meet" or "join"
  std::string lhs, rhs;
};

/** The order has no unique bottom or top element. */
struct NoBoundsError : LatticeError {
  explicit NoBoundsError(std::string which_bound)
      : LatticeError("order has no " + which_bound + " element"),
        which(std::move(which_bound)) {}
  std::string which;  // "bottom" or "top"
};

/** A caller violated a documented precondition. */
struct PreconditionViolated : std::logic_error {
  using std::logic_error::logic_error;
};

/** Malformed input text (lattice files, sequence tokens). */
struct ParseError : std::runtime_error {
  ParseError(std::string message, int line_number = 0)
      : std::runtime_error(line_number > 0
                               ? "line " + std::to_string(line_number) + ": " + message
                               : message),
        line(line_number) {}
  int line;
};

}  // namespace latsort
