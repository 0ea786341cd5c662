#include "adjflow/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

namespace adjflow {

namespace {

constexpr int kMaxSweeps = 50;
constexpr double kOffTolFactor = 1e-12;
constexpr double kMaxExponent = 700.0;

double off_diagonal_norm(const Matrix& a) {
	double sum = 0;
	for (int i = 0; i < a.rows(); ++i)
		for (int j = i + 1; j < a.cols(); ++j)
			sum += 2 * a(i, j) * a(i, j);
	return std::sqrt(sum);
}

void rotate(Matrix& a, Matrix& v, int p, int q) {
	double apq = a(p, q);
	if (apq == 0.0)
		return;
	int n = static_cast<int>(a.rows());
	double app = a(p, p);
	double aqq = a(q, q);
	double theta = (aqq - app) / (2 * apq);
	double t = (theta >= 0 ? 1.0 : -1.0) /
	           (std::abs(theta) + std::sqrt(theta * theta + 1));
	double c = 1 / std::sqrt(t * t + 1);
	double s = t * c;
	for (int r = 0; r < n; ++r) {
		if (r == p || r == q)
			continue;
		double arp = a(r, p);
		double arq = a(r, q);
		a(r, p) = a(p, r) = c * arp - s * arq;
		a(r, q) = a(q, r) = s * arp + c * arq;
	}
	a(p, p) = app - t * apq;
	a(q, q) = aqq + t * apq;
	a(p, q) = a(q, p) = 0.0;
	for (int r = 0; r < n; ++r) {
		double vrp = v(r, p);
		double vrq = v(r, q);
		v(r, p) = c * vrp - s * vrq;
		v(r, q) = s * vrp + c * vrq;
	}
}

void fix_sign(Matrix& vectors, int col) {
	for (int i = 0; i < vectors.rows(); ++i) {
		double x = vectors(i, col);
		if (std::abs(x) > 1e-12) {
			if (x < 0)
				vectors.col(col) *= -1.0;
			return;
		}
	}
}

} // namespace

EigenDecomposition sym_eigen(const Matrix& m) {
	int n = static_cast<int>(m.rows());
	if (n < 1 || m.cols() != n)
		throw InputError("sym_eigen requires a square matrix of size >= 1");
	if (!m.allFinite())
		throw InputError("sym_eigen: non-finite entry");
	double scale = m.cwiseAbs().maxCoeff();
	if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1 + scale))
		throw InputError("sym_eigen: matrix is not symmetric");

	Matrix a = 0.5 * (m + m.transpose());
	Matrix v = Matrix::Identity(n, n);
	double threshold = kOffTolFactor * a.norm();
	for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
		if (off_diagonal_norm(a) <= threshold)
			break;
		for (int p = 0; p < n - 1; ++p)
			for (int q = p + 1; q < n; ++q)
				rotate(a, v, p, q);
	}

	std::vector<int> order(n);
	std::iota(order.begin(), order.end(), 0);
	std::stable_sort(order.begin(), order.end(),
	                 [&a](int i, int j) { return a(i, i) < a(j, j); });

	EigenDecomposition d;
	d.values = Vector(n);
	d.vectors = Matrix(n, n);
	for (int k = 0; k < n; ++k) {
		d.values[k] = a(order[k], order[k]);
		d.vectors.col(k) = v.col(order[k]);
		fix_sign(d.vectors, k);
	}

	// Contract checks; these fire only if the sweep loop above is broken.
	double ortho = (d.vectors.transpose() * d.vectors - Matrix::Identity(n, n))
	                   .cwiseAbs()
	                   .maxCoeff();
	if (ortho > 1e-10)
		throw Error("sym_eigen: eigenvector orthonormality lost");
	double resid = (0.5 * (m + m.transpose()) * d.vectors -
	                d.vectors * d.values.asDiagonal().toDenseMatrix())
	                   .cwiseAbs()
	                   .maxCoeff();
	double row_norm = operator_norm(m, Norm::Inf);
	if (resid > 1e-9 * (1 + row_norm))
		throw Error("sym_eigen: eigenpair residual too large");
	return d;
}

Matrix expm_sym(const Matrix& m, double t) {
	return expm_sym(sym_eigen(m), t);
}

Matrix expm_sym(const EigenDecomposition& d, double t) {
	return shifted_propagator(d, t, 0.0);
}

Matrix shifted_propagator(const EigenDecomposition& d, double t, double shift) {
	if (!std::isfinite(t))
		throw InputError("non-finite time");
	int n = static_cast<int>(d.values.size());
	Vector exps(n);
	double worst = -std::numeric_limits<double>::infinity();
	for (int i = 0; i < n; ++i) {
		exps[i] = t * (d.values[i] - shift);
		worst = std::max(worst, exps[i]);
	}
	if (worst > kMaxExponent) {
		double extreme = 0;
		for (int i = 0; i < n; ++i)
			extreme = std::max(extreme, std::abs(d.values[i] - shift));
		std::ostringstream msg;
		msg << "matrix exponential overflow: exponent " << worst
		    << " exceeds " << kMaxExponent << "; safe range |t| <= "
		    << kMaxExponent / extreme;
		throw OverflowError(msg.str());
	}
	Matrix e = d.vectors * exps.array().exp().matrix().asDiagonal() *
	           d.vectors.transpose();
	return 0.5 * (e + e.transpose());
}

Matrix eigenprojector(const EigenDecomposition& d, double target, double tol) {
	if (!(tol > 0))
		throw InputError("eigenprojector: tolerance must be positive");
	int n = static_cast<int>(d.values.size());
	Matrix p = Matrix::Zero(n, n);
	for (int k = 0; k < n; ++k)
		if (std::abs(d.values[k] - target) <= tol)
			p += d.vectors.col(k) * d.vectors.col(k).transpose();
	return 0.5 * (p + p.transpose());
}

int cluster_size(const EigenDecomposition& d, double target, double tol) {
	int count = 0;
	for (int k = 0; k < d.values.size(); ++k)
		if (std::abs(d.values[k] - target) <= tol)
			++count;
	return count;
}

double operator_norm(const Matrix& m, Norm p) {
	if (m.size() == 0)
		return 0.0;
	switch (p) {
	case Norm::One:
		return m.cwiseAbs().colwise().sum().maxCoeff();
	case Norm::Inf:
		return m.cwiseAbs().rowwise().sum().maxCoeff();
	case Norm::Two: {
		EigenDecomposition d = sym_eigen(m.transpose() * m);
		return std::sqrt(std::max(0.0, d.values[d.values.size() - 1]));
	}
	}
	throw InputError("unknown norm");
}

} // namespace adjflow
