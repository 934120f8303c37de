# -*- coding: utf-8 -*-
"""Casimir invariants, dark-state conditions and null-space extraction

A dark state here is a zero-eigenvalue eigenvector of the rotating-frame
Hamiltonian, so existence is det H = 0. The trace identities relating the
Casimir set to the eigenvalue products hold only for traceless H; the
closed-form residuals below are the determinant up to a constant.

Copyright (c) 2021-2026 RadiaSoft LLC. All rights reserved
"""
import math
import numpy
from pykern.pkcollections import PKDict
from pykern.pkdebug import pkdc, pkdlog
from rsloop.core import operator
from rsloop.core.operator import NumericalError, StateVector
from rsloop.drive import model, presets
from rsloop.states import cpt

# 2**n det H of the builders' half-Rabi matrices
_RESIDUAL_SCALE = PKDict({3: 4.0, 4: 16.0})


class DarkStateError(NumericalError):
    pass


class CasimirSet:
    """c[k-1] = Tr(H**k) for k = 1..n"""

    def __init__(self, values):
        self.c = numpy.asarray(values, dtype=float)
        self.n = self.c.size

    def __getitem__(self, k):
        return self.c[k - 1]


class DarkStateReport:
    def __init__(self, exists, residual, dark_states, bright_states, eigenvalues):
        self.exists = exists
        self.residual = residual
        self.dark_states = dark_states
        self.bright_states = bright_states
        self.degeneracy = len(dark_states)
        self.eigenvalues = eigenvalues

    def as_pkdict(self):
        return PKDict(
            exists=self.exists,
            residual=self.residual,
            degeneracy=self.degeneracy,
            eigenvalues=self.eigenvalues.tolist(),
            dark_states=[_pairs(v) for v in self.dark_states],
            bright_states=[_pairs(v) for v in self.bright_states],
        )


def casimir_dark_residual(H):
    """(C2**2 - 2 C4)/8 for n=4, C3/3 for n=3

    Equals det H only when Tr H = 0.
    """
    c = casimir_invariants(H)
    if c.n == 3:
        return c[3] / 3.0
    if c.n == 4:
        return (c[2] ** 2 - 2.0 * c[4]) / 8.0
    raise DarkStateError(f"casimir residual defined for n=3,4 not n={c.n}")


def casimir_invariants(H):
    """Traces of H**k, k = 1..n

    Args:
        H (HermitianOperator): operator
    Returns:
        CasimirSet: real traces
    """
    res = []
    p = numpy.eye(H.dim, dtype=complex)
    s = 1.0 + numpy.abs(H.matrix).max()
    for k in range(1, H.dim + 1):
        p = p @ H.matrix
        t = numpy.trace(p)
        if abs(t.imag) > operator.config().derived_tol * s**k:
            raise DarkStateError(f"Tr(H**{k}) has imaginary part {t.imag}")
        res.append(t.real)
    return CasimirSet(res)


def characteristic_coefficients(H):
    """Coefficients a_0..a_n of det(x - H) = sum_k a_k x**(n - k)

    Elementary symmetric functions from the Casimir set by Newton's
    identities; a_n = (-1)**n det H.
    """
    c = casimir_invariants(H)
    e = [1.0]
    for k in range(1, c.n + 1):
        e.append(sum((-1) ** (i - 1) * e[k - i] * c[i] for i in range(1, k + 1)) / k)
    return numpy.array([(-1) ** k * e[k] for k in range(c.n + 1)])


def dark_residual_diamond(d):
    c = d.phase_factor().real
    return (
        -4.0 * d.omega_12**2 * d.delta_3 * d.delta_4
        - 4.0 * d.omega_23**2 * d.delta_1 * d.delta_4
        + d.omega_12**2 * d.omega_34**2
        + d.omega_23**2 * d.omega_41**2
        - 2.0 * d.omega_12 * d.omega_23 * d.omega_34 * d.omega_41 * c
    )


def dark_residual_triangle(d):
    return (
        d.delta_1 * d.omega_23**2
        + d.delta_3 * d.omega_12**2
        + d.omega_12 * d.omega_23 * d.omega_31 * d.phase_factor().real
    )


def dark_state_closed_form(case, drive=None, index=0):
    """Analytic dark state for a case that has one

    Args:
        case (str): preset name
        drive (TriangleDrive or DoubleLambdaAltDrive): overrides the preset
            drive for Δ-D-3 (any phi) and DΛ-D-4
        index (int): 0 or 1, selects the DΛ-D-4 dark state
    Returns:
        StateVector: normalized dark state
    """
    n = presets.canonical_name(case)
    p = presets.preset(n)
    d = drive or p.config.params
    if n == "Δ-D-3":
        s = d.phase_factor().imag
        return StateVector(
            numpy.array([2.0, 3j * s, -1.0]) / math.sqrt(5.0 + 9.0 * s * s)
        )
    if n == "DΛ-D-4":
        b = cpt.double_dark_basis(d)
        return (b.dark1, b.dark2)[index]
    if "D" in p.states and n in ("Δ-D-1", "Δ-D-2", "DΛ-D-1", "DΛ-D-2"):
        return p.states.D
    raise DarkStateError(f"case={case} has no closed-form dark state")


def find_dark_states(H, tol=None):
    """Zero-eigenvalue eigenvectors and their orthonormal complement

    Args:
        H (HermitianOperator): operator
        tol (float): zero threshold [default: dark_tol_scale * (1 + spectral radius)]
    Returns:
        DarkStateReport: dark states in canonical gauge, bright states ascending
    """
    e = operator.eig_hermitian(H)
    if tol is None:
        tol = operator.config().dark_tol_scale * (1.0 + e.spectral_radius())
    z = numpy.abs(e.eigenvalues) < tol
    dark = [v for v, k in zip(e.eigenvectors, z) if k]
    bright = [v for v, k in zip(e.eigenvectors, z) if not k]
    pkdc("eigenvalues={} dark count={}", e.eigenvalues, len(dark))
    return DarkStateReport(
        exists=bool(dark),
        residual=_RESIDUAL_SCALE.get(H.dim, 1.0) * float(numpy.linalg.det(H.matrix).real),
        dark_states=dark,
        bright_states=bright,
        eigenvalues=e.eigenvalues,
    )


def solve_dark_detunings_triangle(omega_12, omega_23, omega_31, phi, ratio=1.0):
    """Detunings on the dark manifold with delta_3 = ratio * delta_1

    ratio=1 is the equal detuning family.

    Returns:
        tuple: (delta_1, delta_3)
    """
    q = omega_23**2 + ratio * omega_12**2
    if abs(q) <= operator.config().structural_tol * (1.0 + omega_12**2 + omega_23**2):
        raise DarkStateError(
            f"constraint ratio={ratio} is degenerate for omega_12={omega_12} omega_23={omega_23}"
        )
    d1 = -omega_12 * omega_23 * omega_31 * model.phase_factor(model.reduce_phase(phi)).real / q
    return d1, ratio * d1


def unbalanced_lambda_dark(d):
    """Unbalanced Lambda dark eigenstate of a real triangle Hamiltonian

    Args:
        d (TriangleDrive): phi 0 or pi, omega_12 and omega_23 positive
    Returns:
        PKDict: detuning_difference, eigenvalue, dark, eigen_residual (None
        unless delta_1 - delta_3 equals detuning_difference)
    """
    if d.omega_12 <= 0.0 or d.omega_23 <= 0.0:
        raise DarkStateError(
            f"omega_12={d.omega_12} and omega_23={d.omega_23} must be positive"
        )
    c = d.phase_factor()
    if c.imag != 0.0:
        raise DarkStateError(f"phi={d.phi} must be 0 or pi")
    c = c.real
    res = PKDict(
        detuning_difference=c
        * d.omega_31
        * (d.omega_23**2 - d.omega_12**2)
        / (2.0 * d.omega_12 * d.omega_23),
        eigenvalue=-d.delta_1 - c * d.omega_31 * d.omega_12 / (2.0 * d.omega_23),
        dark=cpt.CptBasis3(d.omega_12, d.omega_23).dark,
        eigen_residual=None,
    )
    s = model.scale(model.DriveConfig("triangle", d))
    if abs(d.delta_1 - d.delta_3 - res.detuning_difference) <= operator.config().structural_tol * s:
        v = res.dark.amplitudes
        res.eigen_residual = float(
            numpy.linalg.norm(model.build_triangle(d).matrix @ v - res.eigenvalue * v)
        )
        if res.eigen_residual > operator.config().derived_tol * s:
            pkdlog("unbalanced dark residual={} for {}", res.eigen_residual, d)
            raise DarkStateError(
                f"dark state is not an eigenvector, residual={res.eigen_residual}"
            )
    return res


def _pairs(state):
    return [[float(a.real), float(a.imag)] for a in state.amplitudes]
