# -*- coding: utf-8 -*-
"""Drive parameter sets and rotating-frame Hamiltonian builders

Copyright (c) 2021-2026 RadiaSoft LLC. All rights reserved
"""
import math
import numpy
from pykern.pkcollections import PKDict
from rsloop.core.operator import HermitianOperator
from rsloop.utils.validator import ValidatorBase

_TRIANGLE_DEFAULTS = PKDict(
    omega_12=1.0,
    omega_23=1.0,
    omega_31=1.0,
    delta_1=0.0,
    delta_3=0.0,
    phi=0.0,
)

_DIAMOND_DEFAULTS = PKDict(
    omega_12=1.0,
    omega_23=1.0,
    omega_34=1.0,
    omega_41=1.0,
    delta_1=0.0,
    delta_3=0.0,
    delta_4=0.0,
    phi=0.0,
)

_DOUBLE_LAMBDA_ALT_DEFAULTS = PKDict(
    omega_p=1.0,
    omega_s=1.0,
    delta=0.0,
    phi_small=0.0,
)

# phases whose exponential is represented exactly
_EXACT_PHASE = {
    0.0: 1.0 + 0.0j,
    math.pi: -1.0 + 0.0j,
    math.pi / 2: 1j,
    -math.pi / 2: -1j,
}


class InvalidDriveInputError(Exception):
    pass


class _Drive(ValidatorBase):
    _INPUT_ERROR = InvalidDriveInputError
    _PHASE = "phi"

    def __init__(self, params=None):
        p = self._get_params(params)
        self._validate_params(p)
        for k in self._DEFAULTS:
            v = self._validate_real(p[k], k, nonnegative=k.startswith("omega"))
            setattr(self, k, reduce_phase(v) if k == self._PHASE else v)

    def conjugate_phase(self):
        p = self.params()
        p[self._PHASE] = -p[self._PHASE]
        return self.__class__(p)

    def params(self):
        return PKDict({k: getattr(self, k) for k in self._DEFAULTS})

    def phase_factor(self):
        return phase_factor(getattr(self, self._PHASE))

    def __repr__(self):
        return "{}({})".format(
            self.__class__.__name__,
            ", ".join(f"{k}={getattr(self, k):.12g}" for k in self._DEFAULTS),
        )


class TriangleDrive(_Drive):
    """Three-level closed loop: Rabi frequencies (>= 0), detunings and global phase

    Args:
        params (PKDict):
            omega_12 (float): 1-2 Rabi frequency
            omega_23 (float): 2-3 Rabi frequency
            omega_31 (float): 3-1 Rabi frequency, carries the loop phase
            delta_1 (float): detuning of level 1
            delta_3 (float): detuning of level 3
            phi (float): global phase [rad], stored in (-pi, pi]
    """

    _DEFAULTS = _TRIANGLE_DEFAULTS


class DiamondDrive(_Drive):
    """Four-level closed loop 1-2-3-4-1 with the global phase on 4-1"""

    _DEFAULTS = _DIAMOND_DEFAULTS


class DoubleLambdaAltDrive(_Drive):
    """Double-Lambda with the phase on both couplings from level 1

    Levels 1 and 3 are the zero of energy.
    """

    _DEFAULTS = _DOUBLE_LAMBDA_ALT_DEFAULTS
    _PHASE = "phi_small"


_TOPOLOGY = PKDict(
    triangle=TriangleDrive,
    diamond=DiamondDrive,
    double_lambda_alt=DoubleLambdaAltDrive,
)


class DriveConfig:
    """Topology tag, its drive parameters and an optional case name"""

    def __init__(self, topology, params, label=None):
        if topology not in _TOPOLOGY:
            raise InvalidDriveInputError(
                f"topology={topology} must be one of {', '.join(_TOPOLOGY)}"
            )
        if not isinstance(params, _TOPOLOGY[topology]):
            raise InvalidDriveInputError(
                f"topology={topology} requires {_TOPOLOGY[topology].__name__} params"
            )
        self.topology = topology
        self.params = params
        self.label = label

    @classmethod
    def from_params(cls, topology, params=None, label=None):
        if topology not in _TOPOLOGY:
            raise InvalidDriveInputError(
                f"topology={topology} must be one of {', '.join(_TOPOLOGY)}"
            )
        return cls(topology, _TOPOLOGY[topology](params), label=label)

    def phase(self):
        return getattr(self.params, self.params._PHASE)

    def __repr__(self):
        return f"DriveConfig({self.topology}, {self.params!r}, label={self.label})"


def build(c):
    return _BUILDERS[c.topology](c.params)


def build_diamond(d):
    h = numpy.zeros((4, 4), dtype=complex)
    h[0, 0] = -d.delta_1
    h[2, 2] = -d.delta_3
    h[3, 3] = -d.delta_4
    _couple(h, 0, 1, d.omega_12 / 2)
    _couple(h, 1, 2, d.omega_23 / 2)
    _couple(h, 2, 3, d.omega_34 / 2)
    _couple(h, 0, 3, d.omega_41 / 2 * d.phase_factor())
    return HermitianOperator(h)


def build_double_lambda_alt(d):
    h = numpy.zeros((4, 4), dtype=complex)
    h[1, 1] = -d.delta
    h[3, 3] = d.delta
    f = d.phase_factor()
    _couple(h, 0, 1, d.omega_p / 2 * f)
    _couple(h, 0, 3, d.omega_p / 2 * f)
    _couple(h, 1, 2, d.omega_s / 2)
    _couple(h, 2, 3, d.omega_s / 2)
    return HermitianOperator(h)


def build_triangle(d):
    h = numpy.zeros((3, 3), dtype=complex)
    h[0, 0] = -d.delta_1
    h[2, 2] = -d.delta_3
    _couple(h, 0, 1, d.omega_12 / 2)
    _couple(h, 1, 2, d.omega_23 / 2)
    _couple(h, 0, 2, d.omega_31 / 2 * d.phase_factor())
    return HermitianOperator(h)


def conjugate_phase(c):
    """Same drive with the global phase negated; builds conj(build(c))"""
    return DriveConfig(c.topology, c.params.conjugate_phase(), label=c.label)


def phase_factor(phi):
    """exp(i phi), exact at multiples of pi/2"""
    if phi in _EXACT_PHASE:
        return _EXACT_PHASE[phi]
    return complex(math.cos(phi), math.sin(phi))


def reduce_phase(phi):
    """Map to (-pi, pi]; values already in range are kept bit for bit"""
    if -math.pi < phi <= math.pi:
        return phi
    return math.pi - (math.pi - phi) % (2 * math.pi)


def scale(c):
    """Largest Rabi frequency or detuning magnitude, at least 1"""
    return max([1.0] + [abs(v) for k, v in c.params.params().items() if k != c.params._PHASE])


def _couple(h, i, j, value):
    h[i, j] = value
    h[j, i] = numpy.conj(value)


_BUILDERS = PKDict(
    triangle=build_triangle,
    diamond=build_diamond,
    double_lambda_alt=build_double_lambda_alt,
)
