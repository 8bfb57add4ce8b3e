#pragma once

// Exception hierarchy shared by every module. All toolkit failures derive
// from zipftk::Error so callers can separate them from std exceptions; each
// leaf type matches one documented failure mode of the public operations.

#include <stdexcept>
#include <string>

namespace zipftk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric-domain precondition violated (zeta pole guard, B <= 1, bad gamma...).
struct DomainError : Error {
  using Error::Error;
};

// solve_exponent: zeta(B, 1+k0) = 1 has no root at or below b_max.
struct NoRootError : Error {
  using Error::Error;
};

// Empty token stream / empty table where at least one element is required.
struct EmptyInput : Error {
  using Error::Error;
};

// Regression window holds fewer usable points than the estimator needs.
struct InsufficientData : Error {
  using Error::Error;
};

// Requested rank lies outside 1..n for the covering at hand.
struct RankOutOfRange : Error {
  using Error::Error;
};

// hierarchical_covering depth beyond the supported maximum.
struct DepthTooLarge : Error {
  using Error::Error;
};

// choose_rho: remaining tail mass cannot reach the space measure.
struct InsufficientMass : Error {
  using Error::Error;
};

// Covering with no positive-length intervals.
struct EmptyCovering : Error {
  using Error::Error;
};

// Iterative solver exhausted max_iters; message reports the residual.
struct NoConvergence : Error {
  using Error::Error;
};

// Distribution carries no entropy (or no mass) where a ratio needs one.
struct DegenerateDistribution : Error {
  using Error::Error;
};

// Compatibility matrix has fewer than two usable rows or columns.
struct DegenerateMatrix : Error {
  using Error::Error;
};

// Hyponym table with an empty head or hyponym section.
struct EmptyTable : Error {
  using Error::Error;
};

// Token stream too short for the requested measurement window.
struct StreamTooShort : Error {
  using Error::Error;
};

// Fixture id not present in the catalog.
struct UnknownFixture : Error {
  using Error::Error;
};

// Fixture file bytes do not match the checksum recorded in the catalog.
struct ChecksumMismatch : Error {
  using Error::Error;
};

// Malformed CSV/JSON input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace zipftk
