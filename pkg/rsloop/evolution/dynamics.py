# -*- coding: utf-8 -*-
"""Population trajectories, phase symmetry, fidelity and coherence

Copyright (c) 2021-2026 RadiaSoft LLC. All rights reserved
"""
import numpy
import scipy.optimize
from pykern.pkcollections import PKDict
from pykern.pkdebug import pkdc, pkdlog
from rsloop.core import operator
from rsloop.core.operator import NumericalError
from rsloop.drive import model
from rsloop.utils.validator import ValidatorBase

_TIME_GRID_DEFAULTS = PKDict(
    t_start=0.0,
    t_end=0.5,
    n_points=1001,
)


class DynamicsError(NumericalError):
    pass


class InvalidTimeGridError(Exception):
    pass


class TimeGrid(ValidatorBase):
    """Uniform grid including both endpoints

    Args:
        params (PKDict):
            t_start (float): first time
            t_end (float): last time, > t_start
            n_points (int): number of points, >= 2
    """

    _DEFAULTS = _TIME_GRID_DEFAULTS
    _INPUT_ERROR = InvalidTimeGridError

    def __init__(self, params=None):
        p = self._get_params(params)
        self._validate_params(p)
        self.t_start = self._validate_real(p.t_start, "t_start")
        self.t_end = self._validate_real(p.t_end, "t_end")
        if not self.t_end > self.t_start:
            raise self._INPUT_ERROR(f"t_end={self.t_end} must exceed t_start={self.t_start}")
        if isinstance(p.n_points, bool) or int(p.n_points) != p.n_points or p.n_points < 2:
            raise self._INPUT_ERROR(f"n_points={p.n_points} must be an integer >= 2")
        self.n_points = int(p.n_points)
        self.times = numpy.linspace(self.t_start, self.t_end, self.n_points)

    def params(self):
        return PKDict(t_start=self.t_start, t_end=self.t_end, n_points=self.n_points)


class Trajectory:
    """Populations per time in a measurement basis

    Args:
        grid (TimeGrid): times
        basis_labels (list): one label per basis vector
        populations (numpy.ndarray): n_points x dim
        amplitudes (numpy.ndarray): n_points x dim projections, optional
    """

    def __init__(self, grid, basis_labels, populations, amplitudes=None):
        if populations.shape != (grid.n_points, len(basis_labels)):
            raise DynamicsError(
                f"populations shape={populations.shape} does not match grid and labels"
            )
        r = numpy.abs(populations.sum(axis=1) - 1.0).max()
        if r > operator.config().derived_tol:
            raise DynamicsError(f"population rows do not sum to 1, residual={r}")
        self.grid = grid
        self.basis_labels = list(basis_labels)
        self.populations = populations
        self.amplitudes = amplitudes


class PhaseSymmetryReport(PKDict):
    """Keys: max_pop_deviation, symmetric, per_state_deviation, threshold, plus, minus"""

    pass


class FidelitySeries:
    def __init__(self, grid, values):
        self.grid = grid
        self.values = values


def chirality_sequence(trajectory):
    """Labels of the most populated state in time order, repeats removed"""
    res = []
    for i in numpy.argmax(trajectory.populations, axis=1):
        if not res or res[-1] != trajectory.basis_labels[i]:
            res.append(trajectory.basis_labels[i])
    return res


def coherence_series(c, psi0, grid, bra, ket):
    """<bra|rho|ket> + <ket|rho|bra> for rho = |psi(t)><psi(t)|"""
    x = density_element_series(c, psi0, grid, bra, ket)
    return x + x.conj()


def density_element_series(c, psi0, grid, bra, ket):
    """<bra|psi(t)><psi(t)|ket> over the grid"""
    h = model.build(c)
    for s in (psi0, bra, ket):
        if s.dim != h.dim:
            raise DynamicsError(f"state dim={s.dim} does not match Hamiltonian dim={h.dim}")
    a = operator.evolve_amplitudes(h, psi0, grid.times)
    return (a @ bra.amplitudes.conj()) * (a @ ket.amplitudes.conj()).conj()


def evolve(H, psi0, grid, basis, labels=None, keep_amplitudes=False):
    """Populations of U(t) psi0 in an orthonormal basis

    Args:
        H (HermitianOperator): Hamiltonian
        psi0 (StateVector): initial state in H's frame
        grid (TimeGrid): times
        basis (list): orthonormal StateVector
        labels (list): basis labels [default: 1..n]
        keep_amplitudes (bool): retain the basis projections
    Returns:
        Trajectory: populations
    """
    if psi0.dim != H.dim:
        raise DynamicsError(f"state dim={psi0.dim} does not match Hamiltonian dim={H.dim}")
    b = operator.basis_matrix(basis, H.dim)
    a = operator.evolve_amplitudes(H, psi0, grid.times) @ b.conj()
    return Trajectory(
        grid,
        labels or [str(i + 1) for i in range(H.dim)],
        numpy.abs(a) ** 2,
        amplitudes=a if keep_amplitudes else None,
    )


def fidelity_revival(c, psi0, grid):
    """Time and value of the largest fidelity after its first dip

    The maximum must be interior to the grid and above the dip. It is
    refined with a bounded scalar search over the neighboring grid
    interval.

    Returns:
        PKDict: time, value
    """
    f = fidelity_series(c, psi0, grid).values
    t = grid.times
    k = numpy.flatnonzero(f < f[0] - operator.config().structural_tol)
    if not k.size:
        raise DynamicsError("fidelity has no dip within the time grid")
    k = int(k[0])
    while k + 1 < len(f) and f[k + 1] < f[k]:
        k += 1
    j = k + int(numpy.argmax(f[k:]))
    if j == len(f) - 1 or not f[j] > f[k] + operator.config().structural_tol:
        raise DynamicsError(
            f"fidelity has no revival within the time grid, minimum={f[k]} at t={t[k]}"
        )
    h = model.build(c)
    hm = model.build(model.conjugate_phase(c))
    dp = operator.eig_hermitian(h)
    dm = operator.eig_hermitian(hm)

    def _loss(x):
        return -_fidelity(h, hm, psi0, numpy.array([x]), dp, dm)[0]

    r = scipy.optimize.minimize_scalar(
        _loss,
        bounds=(t[max(j - 1, 0)], t[min(j + 1, len(t) - 1)]),
        method="bounded",
        options=PKDict(xatol=1e-12),
    )
    pkdc("revival grid t={} F={} refined t={} F={}", t[j], f[j], r.x, -r.fun)
    if -r.fun < f[j]:
        return PKDict(time=float(t[j]), value=float(f[j]))
    return PKDict(time=float(r.x), value=float(-r.fun))


def fidelity_series(c, psi0, grid):
    """|<psi(-phi, t)|psi(+phi, t)>|**2 from the same initial state"""
    h = model.build(c)
    return FidelitySeries(
        grid,
        _fidelity(h, model.build(model.conjugate_phase(c)), psi0, grid.times),
    )


def mirrored(psi0, vectors, mirror_frame=True):
    """Initial state and measurement vectors for the -phi run

    A complex frame is attached to the +phi Hamiltonian, so the -phi run
    uses its conjugate and starts from conj(psi0). Real frames are
    shared by both runs and psi0 is used as given.

    Returns:
        tuple: (StateVector, list of StateVector)
    """
    if mirror_frame and any(numpy.any(v.amplitudes.imag != 0.0) for v in vectors):
        return psi0.conj(), [v.conj() for v in vectors]
    return psi0, list(vectors)


def phase_pair(c, psi0, grid, basis, labels=None, mirror_frame=True):
    """Trajectories under c and conjugate_phase(c)

    The -phi run is set up by ``mirrored``. Identical Hamiltonians
    share one trajectory.
    """
    h = model.build(c)
    hm = model.build(model.conjugate_phase(c))
    p = evolve(h, psi0, grid, basis, labels=labels)
    if numpy.array_equal(h.matrix, hm.matrix):
        return p, p
    psi0, basis = mirrored(psi0, basis, mirror_frame=mirror_frame)
    return p, evolve(hm, psi0, grid, basis, labels=labels)


def phase_symmetry_check(c, psi0, grid, basis, threshold=None, labels=None, mirror_frame=True):
    """Compare populations under +phi and -phi

    Args:
        c (DriveConfig): drive
        psi0 (StateVector): initial state
        grid (TimeGrid): times
        basis (list): measurement basis
        threshold (float): symmetric below this [default: config phase_threshold]
        mirror_frame (bool): see phase_pair
    Returns:
        PhaseSymmetryReport: deviations and both trajectories
    """
    if threshold is None:
        threshold = operator.config().phase_threshold
    p, m = phase_pair(c, psi0, grid, basis, labels=labels, mirror_frame=mirror_frame)
    d = numpy.abs(p.populations - m.populations).max(axis=0)
    res = PhaseSymmetryReport(
        max_pop_deviation=float(d.max()),
        per_state_deviation=d,
        threshold=float(threshold),
        plus=p,
        minus=m,
    )
    res.symmetric = bool(res.max_pop_deviation < threshold)
    pkdlog(
        "{} deviation={} symmetric={}",
        c.label or c.topology,
        res.max_pop_deviation,
        res.symmetric,
    )
    return res


def _fidelity(h, hm, psi0, times, dp=None, dm=None):
    a = operator.evolve_amplitudes(h, psi0, times, decomposition=dp)
    b = operator.evolve_amplitudes(hm, psi0, times, decomposition=dm)
    return numpy.abs(numpy.sum(b.conj() * a, axis=1)) ** 2
