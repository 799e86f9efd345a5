#pragma once

#include <stdexcept>
#include <string>

namespace recon {

// Error hierarchy shared by all modules. Everything surfaced to the CLI
// derives from Error so main() can print one diagnostic and exit nonzero.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched, undersized or otherwise incompatible grids.
struct ShapeError : Error {
  using Error::Error;
};

// Invalid numeric parameter (gamma out of range, non-positive step, ...).
struct ParamError : Error {
  using Error::Error;
};

// Evaluation outside a fidelity's domain (e.g. KL with z + r <= 0).
struct DomainError : Error {
  using Error::Error;
};

// Bad configuration file; message names the offending field.
struct ConfigError : Error {
  using Error::Error;
};

// A required input file is absent; message names the path.
struct MissingArtifact : Error {
  using Error::Error;
};

// Backtracking line search hit the halving limit. Usually indicates a
// gradient bug or an infeasible point for the KL fidelity.
struct BacktrackExhausted : Error {
  using Error::Error;
};

}  // namespace recon
