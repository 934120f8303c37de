# -*- coding: utf-8 -*-
"""Dense Hermitian operators, state vectors, spectral propagators

Copyright (c) 2021-2026 RadiaSoft LLC. All rights reserved
"""
import numpy
import scipy.linalg
from pykern import pkconfig
from pykern.pkdebug import pkdc

_cfg = pkconfig.init(
    structural_tol=(1e-12, float, "Hermiticity, norm and unitarity tolerance"),
    derived_tol=(1e-10, float, "tolerance for derived quantities (Gram residuals)"),
    dark_tol_scale=(1e-9, float, "zero eigenvalue threshold per unit spectral radius"),
    phase_threshold=(1e-9, float, "population deviation for phase symmetry"),
)

_GAUGE_TOL = 1e-9


class NumericalError(Exception):
    """A numerical precondition is not met"""

    pass


class OperatorError(NumericalError):
    pass


def config():
    return _cfg


class StateVector:
    """Normalized complex amplitudes in a declared basis

    Args:
        amplitudes (array-like): complex amplitudes, dim >= 2
        basis_tag (str): basis the amplitudes are expressed in
        normalize (bool): divide by the norm instead of checking it
    """

    def __init__(self, amplitudes, basis_tag="natural", normalize=False):
        a = numpy.array(amplitudes, dtype=complex)
        if a.ndim != 1 or a.size < 2:
            raise OperatorError(f"state shape={a.shape} is not a vector of dim >= 2")
        n = numpy.linalg.norm(a)
        if normalize:
            if n < _cfg.structural_tol:
                raise OperatorError(f"state norm={n} is too small to normalize")
            a = a / n
        elif abs(n * n - 1.0) > _cfg.structural_tol:
            raise OperatorError(f"state is not normalized, norm**2={n * n}")
        a.flags.writeable = False
        self.amplitudes = a
        self.basis_tag = basis_tag

    @property
    def dim(self):
        return self.amplitudes.size

    def conj(self):
        return StateVector(self.amplitudes.conj(), basis_tag=self.basis_tag)

    def overlap(self, other):
        """<self|other>"""
        _assert_dims(self, other)
        return numpy.vdot(self.amplitudes, other.amplitudes)

    def __repr__(self):
        return f"StateVector({self.basis_tag}, {self.amplitudes})"


class HermitianOperator:
    """Rotating-frame Hamiltonian (hbar = 1)

    Input within the structural tolerance of Hermitian is completed to
    exactly Hermitian; anything further off is rejected.
    """

    def __init__(self, matrix, basis_tag="natural"):
        m = numpy.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 2:
            raise OperatorError(f"matrix shape={m.shape} is not square with dim >= 2")
        r = hermiticity_residual(m)
        if r > _cfg.structural_tol * (1.0 + numpy.abs(m).max()):
            raise OperatorError(f"matrix is not Hermitian, residual={r}")
        m = (m + m.conj().T) / 2.0
        m.flags.writeable = False
        self.matrix = m
        self.basis_tag = basis_tag

    @property
    def dim(self):
        return self.matrix.shape[0]

    def norm(self):
        return numpy.linalg.norm(self.matrix, 2)


class SpectralDecomposition:
    def __init__(self, eigenvalues, vectors, basis_tag):
        self.eigenvalues = eigenvalues
        # columns are eigenvectors
        self.vectors = vectors
        self.eigenvectors = [
            StateVector(vectors[:, i], basis_tag=basis_tag)
            for i in range(vectors.shape[1])
        ]

    def spectral_radius(self):
        return float(numpy.abs(self.eigenvalues).max())


def canonical_gauge(vector, tol=_GAUGE_TOL):
    """Rotate the global phase so the first significant component is real positive

    Args:
        vector (array-like): complex amplitudes
        tol (float): magnitude below which a component is skipped
    Returns:
        numpy.ndarray: rephased copy
    """
    v = numpy.array(vector, dtype=complex)
    for a in v:
        if abs(a) > tol:
            return v * (abs(a) / a)
    return v


def change_basis(H, basis, basis_tag="transformed"):
    """Matrix of H in an orthonormal basis: entries <b_i|H|b_j>"""
    b = basis_matrix(basis, H.dim)
    return HermitianOperator(b.conj().T @ H.matrix @ b, basis_tag=basis_tag)


def basis_matrix(basis, dim):
    """Columns of an orthonormal complete basis

    Args:
        basis (list): StateVector, one per dimension
        dim (int): expected dimension
    Returns:
        numpy.ndarray: dim x dim with basis vectors as columns
    """
    if len(basis) != dim:
        raise OperatorError(f"basis has {len(basis)} vectors, expecting {dim}")
    for v in basis:
        if v.dim != dim:
            raise OperatorError(f"basis vector dim={v.dim} does not match dim={dim}")
    b = numpy.column_stack([v.amplitudes for v in basis])
    r = gram_residual(b)
    if r > _cfg.derived_tol:
        raise OperatorError(f"basis is not orthonormal, Gram residual={r}")
    return b


def density_evolve(H, rho0, t):
    """U(t) rho0 U(t)^dagger"""
    r = numpy.asarray(rho0, dtype=complex)
    if r.shape != (H.dim, H.dim):
        raise OperatorError(f"density shape={r.shape} does not match dim={H.dim}")
    u = propagator(H, t)
    return u @ r @ u.conj().T


def eig_hermitian(H, degeneracy_tol=None):
    """Eigenvalues ascending, eigenvectors in canonical gauge

    Degenerate groups are re-orthonormalized with modified Gram-Schmidt
    after gauge fixing.

    Args:
        H (HermitianOperator): operator
        degeneracy_tol (float): eigenvalue gap treated as degenerate
    Returns:
        SpectralDecomposition: decomposition of H
    """
    w, v = scipy.linalg.eigh(H.matrix)
    i = numpy.argsort(w, kind="stable")
    w = w[i]
    v = v[:, i]
    if degeneracy_tol is None:
        degeneracy_tol = _cfg.dark_tol_scale * (1.0 + numpy.abs(w).max())
    res = numpy.empty_like(v)
    for g in _degenerate_groups(w, degeneracy_tol):
        if len(g) > 1:
            pkdc("degenerate eigenvalues {} at indices {}", w[g], g)
        q = orthonormalize([canonical_gauge(v[:, k]) for k in g])
        res[:, g] = numpy.column_stack([canonical_gauge(q[:, k]) for k in range(len(g))])
    return SpectralDecomposition(w, res, H.basis_tag)


def evolve_amplitudes(H, psi0, times, decomposition=None):
    """Amplitudes of U(t) psi0 for each t, one row per time"""
    _assert_dims(H, psi0)
    if psi0.basis_tag != H.basis_tag:
        raise OperatorError(
            f"state basis={psi0.basis_tag} does not match operator basis={H.basis_tag}"
        )
    d = decomposition or eig_hermitian(H)
    c = d.vectors.conj().T @ psi0.amplitudes
    p = numpy.exp(-1j * numpy.outer(numpy.asarray(times, dtype=float), d.eigenvalues))
    return (p * c) @ d.vectors.T


def gram_residual(columns):
    return float(numpy.abs(columns.conj().T @ columns - numpy.eye(columns.shape[1])).max())


def hermiticity_residual(matrix):
    m = numpy.asarray(matrix)
    return float(numpy.abs(m - m.conj().T).max())


def matrix_element(bra, O, ket):
    """<bra|O|ket>

    Args:
        bra (StateVector): left state
        O (HermitianOperator or array-like): operator
        ket (StateVector): right state
    Returns:
        complex: matrix element
    """
    m = O.matrix if isinstance(O, HermitianOperator) else numpy.asarray(O)
    if m.shape != (bra.dim, ket.dim):
        raise OperatorError(
            f"operator shape={m.shape} does not match bra dim={bra.dim} ket dim={ket.dim}"
        )
    return complex(numpy.vdot(bra.amplitudes, m @ ket.amplitudes))


def natural_basis(n, basis_tag="natural"):
    return [StateVector(numpy.eye(n)[i], basis_tag=basis_tag) for i in range(n)]


def orthonormalize(vectors):
    """Modified Gram-Schmidt; returns columns"""
    res = []
    for v in vectors:
        u = numpy.array(v, dtype=complex)
        for q in res:
            u = u - numpy.vdot(q, u) * q
        n = numpy.linalg.norm(u)
        if n < _cfg.derived_tol:
            raise OperatorError("vectors are linearly dependent")
        res.append(u / n)
    return numpy.column_stack(res)


def populations(psi, basis):
    """|<b_i|psi>|^2 for each basis vector"""
    b = basis_matrix(basis, psi.dim)
    return numpy.abs(b.conj().T @ psi.amplitudes) ** 2


def propagator(H, t, decomposition=None):
    """U(t) = sum_k exp(-i lambda_k t) |v_k><v_k|"""
    d = decomposition or eig_hermitian(H)
    return (d.vectors * numpy.exp(-1j * d.eigenvalues * t)) @ d.vectors.conj().T


def rk4_evolve(H, psi0, times, step=1e-5):
    """Fixed-step fourth order Runge-Kutta for i dpsi/dt = H psi

    Each interval between consecutive output times is split into equal
    steps no longer than ``step``.

    Args:
        H (HermitianOperator): Hamiltonian
        psi0 (StateVector): initial state at t=0
        times (array-like): nondecreasing output times >= 0
        step (float): maximum step
    Returns:
        numpy.ndarray: amplitudes, one row per time
    """
    _assert_dims(H, psi0)
    a = -1j * H.matrix
    y = psi0.amplitudes.copy()
    t0 = 0.0
    res = []
    for t in numpy.asarray(times, dtype=float):
        if t < t0:
            raise OperatorError(f"times must be nondecreasing from 0, got t={t}")
        n = int(numpy.ceil((t - t0) / step - 1e-9))
        if n > 0:
            h = (t - t0) / n
            for _ in range(n):
                k1 = a @ y
                k2 = a @ (y + 0.5 * h * k1)
                k3 = a @ (y + 0.5 * h * k2)
                k4 = a @ (y + h * k3)
                y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        t0 = t
        res.append(y.copy())
    return numpy.array(res)


def _assert_dims(a, b):
    if a.dim != b.dim:
        raise OperatorError(f"dimension mismatch: {a.dim} != {b.dim}")


def _degenerate_groups(eigenvalues, tol):
    res = [[0]]
    for i in range(1, len(eigenvalues)):
        if eigenvalues[i] - eigenvalues[i - 1] < tol:
            res[-1].append(i)
        else:
            res.append([i])
    return res
