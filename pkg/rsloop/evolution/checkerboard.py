# -*- coding: utf-8 -*-
"""Checkerboard structure, eigenvalue pairing and the zero-detuning closed form

A matrix is odd-checkerboard when entries with even index sum vanish and
even-checkerboard when entries with odd index sum vanish. Products follow
parity addition; J = diag(1, -1, 1, ...) anticommutes with any
odd-checkerboard matrix, which pairs eigenvalues as +lambda, -lambda and
makes diagonal populations even in time.

Copyright (c) 2021-2026 RadiaSoft LLC. All rights reserved
"""
import numpy
from pykern.pkdebug import pkdc
from rsloop.core import operator
from rsloop.core.operator import StateVector
from rsloop.drive import model
from rsloop.evolution.dynamics import DynamicsError


def analytic_deltazero_state(d, t):
    """State at t from |1> for a diamond drive with all detunings zero

    Built from the two positive-eigenvalue eigenvectors c, c' (canonical
    gauge) and their J partners, with mixing chi = -c_3 / c'_3 so the
    initial state has no |3> component.

    Args:
        d (DiamondDrive): all deltas zero
        t (float): time
    Returns:
        StateVector: natural basis state
    """
    if d.delta_1 != 0.0 or d.delta_3 != 0.0 or d.delta_4 != 0.0:
        raise DynamicsError(
            f"detunings must be zero, got delta_1={d.delta_1} delta_3={d.delta_3} delta_4={d.delta_4}"
        )
    h = model.build_diamond(d)
    e = operator.eig_hermitian(h)
    tol = operator.config().dark_tol_scale * (1.0 + e.spectral_radius())
    if e.eigenvalues[2] < tol:
        raise DynamicsError(f"zero eigenvalue pair {e.eigenvalues}; J partners are not orthogonal")
    l2, l1 = e.eigenvalues[2], e.eigenvalues[3]
    c2 = operator.canonical_gauge(e.vectors[:, 2])
    c1 = operator.canonical_gauge(e.vectors[:, 3])
    if abs(c2[2]) < operator.config().structural_tol:
        raise DynamicsError(f"c'_3={c2[2]} vanishes, mixing ratio undefined")
    chi = -c1[2] / c2[2]
    pkdc("lambda=({}, {}) chi={}", l1, l2, chi)
    return StateVector(
        numpy.conj(c1[0]) * (_branch(c1, l1, t) + chi * _branch(c2, l2, t)),
        normalize=True,
    )


def checkerboard_class(M, tol=0.0):
    """"odd", "even" or "neither"; a zero matrix is "even"

    Args:
        M (array-like or HermitianOperator): square matrix
        tol (float): magnitude treated as zero
    Returns:
        str: class
    """
    m = numpy.abs(_matrix(M))
    e = _parity_mask(m.shape[0])
    if (m[~e] <= tol).all():
        return "even"
    if (m[e] <= tol).all():
        return "odd"
    return "neither"


def diagonal_time_symmetry_check(H, rho0, grid, tol=None):
    """diag rho(t) == diag rho(-t) over the grid for an odd-checkerboard H

    Args:
        H (HermitianOperator): odd-checkerboard Hamiltonian
        rho0 (array-like): diagonal entries or a diagonal density matrix
        grid (TimeGrid): times
        tol (float): comparison tolerance [default: derived_tol]
    Returns:
        bool: populations are even in time
    """
    if checkerboard_class(H, operator.config().structural_tol) != "odd":
        raise DynamicsError("Hamiltonian is not odd-checkerboard")
    p = _diagonal_density(rho0, H.dim)
    if tol is None:
        tol = operator.config().derived_tol
    for t in grid.times:
        a = numpy.diag(operator.density_evolve(H, p, t)).real
        b = numpy.diag(operator.density_evolve(H, p, -t)).real
        if numpy.abs(a - b).max() > tol:
            pkdc("t={} diag(+t)={} diag(-t)={}", t, a, b)
            return False
    return True


def eigenvalue_pairing_check(H, tol=None):
    """Spectrum symmetric about zero, and HJ = -JH when H is odd-checkerboard"""
    if tol is None:
        tol = operator.config().derived_tol
    w = operator.eig_hermitian(H).eigenvalues
    if numpy.abs(w + w[::-1]).max() > tol * (1.0 + numpy.abs(w).max()):
        return False
    if checkerboard_class(H, operator.config().structural_tol) == "odd":
        return j_anticommutator_residual(H) <= tol
    return True


def j_anticommutator_residual(H):
    m = _matrix(H)
    j = j_matrix(m.shape[0])
    return float(numpy.abs(m @ j + j @ m).max())


def j_matrix(n):
    """diag((-1)**(j+1)), j = 1..n"""
    return numpy.diag([(-1.0) ** k for k in range(n)])


def _branch(c, l, t):
    s = numpy.array([1.0, -1j, 1.0, -1j])
    f = numpy.array([numpy.cos(l * t), numpy.sin(l * t)] * 2)
    return 2.0 * s * f * c


def _diagonal_density(rho0, dim):
    r = numpy.asarray(rho0, dtype=complex)
    if r.ndim == 1:
        r = numpy.diag(r)
    if r.shape != (dim, dim):
        raise DynamicsError(f"density shape={r.shape} does not match dim={dim}")
    d = numpy.diag(r)
    if (
        numpy.abs(r - numpy.diag(d)).max() > 0.0
        or numpy.abs(d.imag).max() > 0.0
        or d.real.min() < 0.0
        or abs(d.real.sum() - 1.0) > operator.config().structural_tol
    ):
        raise DynamicsError("initial density must be diagonal, real, nonnegative with unit trace")
    return r


def _matrix(M):
    return M.matrix if hasattr(M, "matrix") else numpy.asarray(M)


def _parity_mask(n):
    i = numpy.arange(n)
    return (i[:, None] + i[None, :]) % 2 == 0
