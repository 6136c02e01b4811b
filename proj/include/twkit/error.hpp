#pragma once

#include <stdexcept>
#include <string>

namespace twkit {

/// Base class of every error thrown by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its contract (unknown vertex, missing
/// edge, target out of range, ...).
struct PreconditionError : Error {
  using Error::Error;
};

/// Input data (edge lists, graph/decomposition files, newick text) violates
/// the expected format or an input invariant.
struct MalformedInputError : Error {
  using Error::Error;
};

/// A rewrite was refused because it would not preserve treewidth.
struct GuardedError : Error {
  using Error::Error;
};

/// A reduction or truncation policy violates one of its hard floors.
struct PolicyError : Error {
  using Error::Error;
};

/// The bag graph handed to the validator is not a tree.  Kept distinct from
/// axiom violations: a report is only issued for well-formed decompositions.
struct StructureError : Error {
  using Error::Error;
};

}  // namespace twkit
