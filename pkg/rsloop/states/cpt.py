# -*- coding: utf-8 -*-
"""Bright/dark (CPT) bases and the closed-to-open loop transforms

Copyright (c) 2021-2026 RadiaSoft LLC. All rights reserved
"""
import math
import numpy
import scipy.sparse
import scipy.sparse.csgraph
from pykern.pkdebug import pkdc
from rsloop.core import operator
from rsloop.core.operator import HermitianOperator, NumericalError, StateVector
from rsloop.drive import model


class CptBasisError(NumericalError):
    pass


class CptBasis3:
    """Bright, excited and dark states of the 1-2-3 Lambda

    Args:
        omega_12 (float): 1-2 Rabi frequency
        omega_23 (float): 2-3 Rabi frequency
        dim (int): 3, or 4 to embed in the diamond
    """

    def __init__(self, omega_12, omega_23, dim=3):
        self.omega_cpt = math.hypot(omega_12, omega_23)
        if self.omega_cpt == 0.0:
            raise CptBasisError("omega_12 and omega_23 are both zero")
        b = numpy.zeros(dim)
        b[0] = omega_12
        b[2] = omega_23
        d = numpy.zeros(dim)
        d[0] = omega_23
        d[2] = -omega_12
        self.bright = StateVector(b / self.omega_cpt)
        self.dark = StateVector(d / self.omega_cpt)
        self.excited = operator.natural_basis(dim)[1]

    def vectors(self):
        return [self.bright, self.excited, self.dark]


class CptBasis4(CptBasis3):
    """(B, 2, D, 4) ordering for the diamond"""

    def __init__(self, omega_12, omega_23):
        super().__init__(omega_12, omega_23, dim=4)
        self.excited2 = self.excited
        self.state4 = operator.natural_basis(4)[3]

    def vectors(self):
        return [self.bright, self.excited2, self.dark, self.state4]


class DoubleDarkBasis:
    """Bright and two dark states of the alternate double-Lambda"""

    def __init__(self, bright, dark1, dark2, theta, omega_dl):
        self.bright = bright
        self.dark1 = dark1
        self.dark2 = dark2
        self.theta = theta
        self.omega_dl = omega_dl


def bkp_hamiltonian_3(d):
    """Printed (B, 2, D) matrix for the balanced triangle, Omega_12 = Omega_23"""
    _assert_equal_deltas(d.delta_1, d.delta_3)
    if d.omega_12 != d.omega_23:
        raise CptBasisError(
            f"omega_12={d.omega_12} != omega_23={d.omega_23}; use to_cpt_hamiltonian_3"
        )
    f = d.phase_factor()
    h = numpy.zeros((3, 3), dtype=complex)
    h[0, 0] = -d.delta_1 + d.omega_31 / 2 * f.real
    h[2, 2] = -d.delta_1 - d.omega_31 / 2 * f.real
    h[0, 1] = h[1, 0] = d.omega_12 / math.sqrt(2)
    h[0, 2] = -0.5j * d.omega_31 * f.imag
    h[2, 0] = numpy.conj(h[0, 2])
    return HermitianOperator(h, basis_tag="cpt3")


def bkp_hamiltonian_4(d):
    """Printed (B, 2, D, 4) matrix for the diamond with delta_1 = delta_3"""
    _assert_equal_deltas(d.delta_1, d.delta_3)
    b = CptBasis4(d.omega_12, d.omega_23)
    f = d.phase_factor()
    h = numpy.zeros((4, 4), dtype=complex)
    h[0, 0] = -d.delta_1
    h[2, 2] = -d.delta_1
    h[3, 3] = -d.delta_4
    h[0, 1] = h[1, 0] = b.omega_cpt / 2
    h[0, 3] = (d.omega_12 * d.omega_41 * f + d.omega_23 * d.omega_34) / (2 * b.omega_cpt)
    h[2, 3] = (d.omega_23 * d.omega_41 * f - d.omega_12 * d.omega_34) / (2 * b.omega_cpt)
    h[3, 0] = numpy.conj(h[0, 3])
    h[3, 2] = numpy.conj(h[2, 3])
    return HermitianOperator(h, basis_tag="cpt4")


def coupling_graph_is_open(H, tol=None):
    """True if the off-diagonal couplings above tol form no cycle"""
    a, _ = _adjacency(H, tol)
    n, _ = scipy.sparse.csgraph.connected_components(a, directed=False)
    # a forest has exactly dim - components edges
    return a.nnz // 2 == H.dim - n


def cpt_states(omega_12, omega_23):
    return CptBasis3(omega_12, omega_23)


def decoupled_blocks(H, tol=None):
    """Connected components of the coupling graph, each a sorted index list"""
    a, _ = _adjacency(H, tol)
    n, labels = scipy.sparse.csgraph.connected_components(a, directed=False)
    return [sorted(numpy.flatnonzero(labels == k).tolist()) for k in range(n)]


def double_dark_basis(d):
    """Bright, first and second dark states for DoubleLambdaAltDrive

    Both dark states are zero eigenvectors of ``build_double_lambda_alt(d)``;
    the bright state is the {1, 3} partner of the first dark state.
    """
    o2 = d.omega_p**2 + d.omega_s**2
    if o2 == 0.0:
        raise CptBasisError("omega_p and omega_s are both zero")
    o = math.sqrt(o2)
    f = d.phase_factor()
    theta = o * math.sqrt(4 * d.delta**2 + 2 * o2)
    res = DoubleDarkBasis(
        bright=StateVector([d.omega_p * f, 0, d.omega_s, 0], normalize=True),
        dark1=StateVector([d.omega_s * f, 0, -d.omega_p, 0], normalize=True),
        dark2=StateVector(
            numpy.array(
                [2 * d.delta * d.omega_p * f, o2, 2 * d.delta * d.omega_s, -o2]
            )
            / theta
        ),
        theta=theta,
        omega_dl=o,
    )
    h = model.build_double_lambda_alt(d).matrix
    for k in ("dark1", "dark2"):
        r = numpy.linalg.norm(h @ getattr(res, k).amplitudes)
        if r > operator.config().dark_tol_scale * (1.0 + o2):
            raise CptBasisError(f"{k} is not a zero eigenvector, residual={r}")
    return res


def to_cpt_hamiltonian_3(d):
    """Triangle Hamiltonian in the (B, 2, D) basis; requires delta_1 = delta_3"""
    _assert_equal_deltas(d.delta_1, d.delta_3)
    return operator.change_basis(
        model.build_triangle(d),
        CptBasis3(d.omega_12, d.omega_23).vectors(),
        basis_tag="cpt3",
    )


def to_cpt_hamiltonian_4(d):
    """Diamond Hamiltonian in the (B, 2, D, 4) basis; requires delta_1 = delta_3"""
    _assert_equal_deltas(d.delta_1, d.delta_3)
    return operator.change_basis(
        model.build_diamond(d),
        CptBasis4(d.omega_12, d.omega_23).vectors(),
        basis_tag="cpt4",
    )


def _adjacency(H, tol):
    m = numpy.abs(H.matrix)
    if tol is None:
        tol = operator.config().derived_tol * (1.0 + m.max())
    a = m > tol
    numpy.fill_diagonal(a, False)
    pkdc("coupling graph edges={}", numpy.argwhere(numpy.triu(a)).tolist())
    return scipy.sparse.csr_matrix(a.astype(float)), tol


def _assert_equal_deltas(delta_1, delta_3):
    if abs(delta_1 - delta_3) > operator.config().structural_tol * (
        1.0 + abs(delta_1)
    ):
        raise CptBasisError(
            f"delta_1={delta_1} != delta_3={delta_3}; the CPT transform requires equal detunings"
        )
