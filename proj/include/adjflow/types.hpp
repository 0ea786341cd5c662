#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace adjflow {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntMatrix = Eigen::MatrixXi;

/** Base class of every exception thrown by this library. */
struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/** Ill-formed input: parse failures and violated preconditions. */
struct InputError : Error {
	using Error::Error;
};

/** A computation was refused because it would leave double range. */
struct OverflowError : Error {
	using Error::Error;
};

} // namespace adjflow
