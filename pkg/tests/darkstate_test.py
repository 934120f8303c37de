# -*- coding: utf-8 -*-
"""Tests for Casimir invariants, dark-state conditions and extraction
"""
import math
from hypothesis import given, settings, strategies as st
import numpy
from pykern.pkcollections import PKDict
import pykern.pkunit
import pytest
from rsloop.core import operator
from rsloop.drive import model, presets
from rsloop.states import darkstate

_RABI = st.floats(0.5, 3.0)
_DETUNING = st.floats(0.5, 2.0)
_PHASE = st.floats(-3.1, 3.1)


def _det(H):
    return float(numpy.linalg.det(H.matrix).real)


def _random_triangle(rng, traceless=False):
    d1 = rng.uniform(-3, 3)
    return model.TriangleDrive(
        PKDict(
            omega_12=rng.uniform(0, 5),
            omega_23=rng.uniform(0, 5),
            omega_31=rng.uniform(0, 5),
            delta_1=d1,
            delta_3=-d1 if traceless else rng.uniform(-3, 3),
            phi=rng.uniform(-math.pi, math.pi),
        )
    )


def _random_diamond(rng, traceless=False):
    d1 = rng.uniform(-3, 3)
    d3 = rng.uniform(-3, 3)
    return model.DiamondDrive(
        PKDict(
            omega_12=rng.uniform(0, 5),
            omega_23=rng.uniform(0, 5),
            omega_34=rng.uniform(0, 5),
            omega_41=rng.uniform(0, 5),
            delta_1=d1,
            delta_3=d3,
            delta_4=-d1 - d3 if traceless else rng.uniform(-3, 3),
            phi=rng.uniform(-math.pi, math.pi),
        )
    )


def test_casimir_power_sums():
    rng = numpy.random.default_rng(23)
    for _ in range(50):
        for h in (
            model.build_triangle(_random_triangle(rng)),
            model.build_diamond(_random_diamond(rng)),
        ):
            c = darkstate.casimir_invariants(h)
            e = operator.eig_hermitian(h).eigenvalues
            pykern.pkunit.pkeq(h.dim, c.n)
            for k in range(1, c.n + 1):
                x = numpy.sum(e**k)
                pykern.pkunit.pkok(
                    abs(c[k] - x) < 1e-9 * (1 + abs(x)), "C{}={} sum={}", k, c[k], x
                )


def test_dark_residual_is_scaled_determinant():
    rng = numpy.random.default_rng(29)
    for _ in range(1000):
        d = _random_triangle(rng)
        r = darkstate.dark_residual_triangle(d)
        x = 4.0 * _det(model.build_triangle(d))
        pykern.pkunit.pkok(abs(r - x) < 1e-9 * (1 + abs(x)), "triangle {} {} {}", d, r, x)
        d = _random_diamond(rng)
        r = darkstate.dark_residual_diamond(d)
        x = 16.0 * _det(model.build_diamond(d))
        pykern.pkunit.pkok(abs(r - x) < 1e-9 * (1 + abs(x)), "diamond {} {} {}", d, r, x)


def test_casimir_residual_traceless():
    rng = numpy.random.default_rng(31)
    for _ in range(200):
        for h in (
            model.build_triangle(_random_triangle(rng, traceless=True)),
            model.build_diamond(_random_diamond(rng, traceless=True)),
        ):
            r = darkstate.casimir_dark_residual(h)
            x = _det(h)
            pykern.pkunit.pkok(abs(r - x) < 1e-9 * (1 + abs(x)), "{} {} {}", h, r, x)


def test_characteristic_coefficients():
    rng = numpy.random.default_rng(37)
    for _ in range(20):
        h = model.build_diamond(_random_diamond(rng))
        a = darkstate.characteristic_coefficients(h)
        x = numpy.poly(h.matrix)
        pykern.pkunit.pkok(
            numpy.abs(a - x).max() < 1e-8 * (1 + numpy.abs(x).max()),
            "coefficients={} poly={}",
            a,
            x,
        )
        pykern.pkunit.pkok(abs(a[-1] - _det(h)) < 1e-8 * (1 + abs(a[-1])), "det")


def test_tabulated_dark_states():
    for n in ("Δ-D-1", "Δ-D-2", "DΛ-D-1", "DΛ-D-2"):
        p = presets.preset(n)
        h = model.build(p.config)
        r = darkstate.find_dark_states(h)
        pykern.pkunit.pkok(r.exists, "{} has no dark state {}", n, r.eigenvalues)
        pykern.pkunit.pkeq(1, r.degeneracy)
        o = abs(r.dark_states[0].overlap(p.state("D"))) ** 2
        pykern.pkunit.pkok(o > 1 - 1e-10, "{} overlap={}", n, o)
        pykern.pkunit.pkok(abs(r.residual) < 1e-12, "{} residual={}", n, r.residual)
        pykern.pkunit.pkeq(h.dim - 1, len(r.bright_states))
        for b in r.bright_states:
            x = abs(b.overlap(r.dark_states[0]))
            pykern.pkunit.pkok(x < 1e-12, "{} bright-dark overlap={}", n, x)


def test_closed_form_residuals():
    for n in ("Δ-D-1", "Δ-D-2", "Δ-D-3", "DΛ-D-1", "DΛ-D-2", "fig2c"):
        c = presets.preset(n).config
        f = (
            darkstate.dark_residual_triangle
            if c.topology == "triangle"
            else darkstate.dark_residual_diamond
        )
        r = f(c.params)
        pykern.pkunit.pkok(abs(r) < 1e-13 * model.scale(c) ** 4, "{} residual={}", n, r)
    r = darkstate.dark_residual_diamond(presets.preset("DΛ-D-3").config.params)
    pykern.pkunit.pkok(abs(r) > 1.0, "DΛ-D-3 residual={}", r)


def test_no_dark_state():
    for n in ("DΛ-D-3", "fig5"):
        r = darkstate.find_dark_states(model.build(presets.preset(n).config))
        pykern.pkunit.pkeq(False, r.exists)
        pykern.pkunit.pkeq(0, r.degeneracy)
        pykern.pkunit.pkeq(4, len(r.bright_states))


def test_dark_state_closed_form():
    v = darkstate.dark_state_closed_form("Δ-D-3")
    h = model.build(presets.preset("Δ-D-3").config)
    pykern.pkunit.pkok(
        numpy.linalg.norm(h.matrix @ v.amplitudes) < 1e-12, "Δ-D-3 not dark {}", v
    )
    for phi in (0.3, 1.0, 2.5, -2.0):
        c = math.cos(phi)
        d = model.TriangleDrive(
            PKDict(
                omega_12=1.0,
                omega_23=2.0,
                omega_31=3.0,
                delta_1=-0.75 * c,
                delta_3=-3.0 * c,
                phi=phi,
            )
        )
        v = darkstate.dark_state_closed_form("Delta-D-3", drive=d)
        r = numpy.linalg.norm(model.build_triangle(d).matrix @ v.amplitudes)
        pykern.pkunit.pkok(r < 1e-12, "phi={} residual={}", phi, r)
    h = model.build(presets.preset("DΛ-D-4").config)
    a = darkstate.dark_state_closed_form("DΛ-D-4", index=0)
    b = darkstate.dark_state_closed_form("DΛ-D-4", index=1)
    for v in (a, b):
        pykern.pkunit.pkok(
            numpy.linalg.norm(h.matrix @ v.amplitudes) < 1e-12, "DΛ-D-4 not dark {}", v
        )
    r = darkstate.find_dark_states(h)
    pykern.pkunit.pkeq(2, r.degeneracy)
    pykern.pkunit.pkeq(
        presets.preset("Δ-D-1").state("D").amplitudes.tolist(),
        darkstate.dark_state_closed_form("Δ-D-1").amplitudes.tolist(),
    )
    with pykern.pkunit.pkexcept(darkstate.DarkStateError):
        darkstate.dark_state_closed_form("fig5")


def test_solve_dark_detunings():
    for ratio in (1.0, 4.0, -0.5):
        for phi in (0.0, math.pi / 3, 2.0):
            d1, d3 = darkstate.solve_dark_detunings_triangle(1.0, 2.0, 1.5, phi, ratio=ratio)
            pykern.pkunit.pkok(abs(d3 - ratio * d1) < 1e-15, "ratio {} {}", d1, d3)
            d = model.TriangleDrive(
                PKDict(
                    omega_12=1.0,
                    omega_23=2.0,
                    omega_31=1.5,
                    delta_1=d1,
                    delta_3=d3,
                    phi=phi,
                )
            )
            r = darkstate.find_dark_states(model.build_triangle(d))
            pykern.pkunit.pkok(r.exists, "ratio={} phi={} no dark state", ratio, phi)
    d1, d3 = darkstate.solve_dark_detunings_triangle(1.0, 1.0, 1.0, math.pi / 3)
    pykern.pkunit.pkok(abs(d1 + 0.25) < 1e-15 and d1 == d3, "Δ-D-2 detunings {}", d1)
    with pykern.pkunit.pkexcept(darkstate.DarkStateError):
        darkstate.solve_dark_detunings_triangle(1.0, 2.0, 1.0, 0.0, ratio=-4.0)


def test_unbalanced_lambda_dark():
    d = model.TriangleDrive(
        PKDict(omega_12=1.0, omega_23=2.0, omega_31=1.0, delta_1=0.0, delta_3=-0.75)
    )
    r = darkstate.unbalanced_lambda_dark(d)
    pykern.pkunit.pkeq(0.75, r.detuning_difference)
    pykern.pkunit.pkeq(-0.25, r.eigenvalue)
    pykern.pkunit.pkok(r.eigen_residual < 1e-12, "residual={}", r.eigen_residual)
    x = numpy.array([2.0, 0.0, -1.0]) / math.sqrt(5.0)
    pykern.pkunit.pkok(
        numpy.abs(r.dark.amplitudes - x).max() < 1e-15, "dark={}", r.dark
    )
    r = darkstate.unbalanced_lambda_dark(presets.preset("Δ-0Φ-2").config.params)
    pykern.pkunit.pkok(abs(r.eigenvalue) < 1e-15, "eigenvalue={}", r.eigenvalue)
    pykern.pkunit.pkok(r.eigen_residual < 1e-12, "residual={}", r.eigen_residual)
    d = model.TriangleDrive(
        PKDict(omega_12=1.0, omega_23=2.0, omega_31=1.0, delta_1=0.0, delta_3=0.0)
    )
    pykern.pkunit.pkeq(None, darkstate.unbalanced_lambda_dark(d).eigen_residual)
    with pykern.pkunit.pkexcept(darkstate.DarkStateError):
        darkstate.unbalanced_lambda_dark(model.TriangleDrive(PKDict(phi=math.pi / 2)))
    with pykern.pkunit.pkexcept(darkstate.DarkStateError):
        darkstate.unbalanced_lambda_dark(model.TriangleDrive(PKDict(omega_12=0.0)))


def test_report_as_pkdict():
    r = darkstate.find_dark_states(model.build(presets.preset("Δ-D-1").config))
    p = r.as_pkdict()
    pykern.pkunit.pkeq(True, p.exists)
    pykern.pkunit.pkeq(1, p.degeneracy)
    pykern.pkunit.pkeq(3, len(p.dark_states[0]))
    x = [complex(*a) for a in p.dark_states[0]]
    d = presets.preset("Δ-D-1").state("D").amplitudes
    pykern.pkunit.pkok(
        abs(abs(numpy.vdot(d, x)) - 1) < 1e-10, "dark state pairs={}", p.dark_states
    )


@settings(max_examples=200, deadline=None)
@given(_RABI, _RABI, _RABI, _PHASE)
def test_triangle_dark_manifold(omega_12, omega_23, omega_31, phi):
    d1, d3 = darkstate.solve_dark_detunings_triangle(omega_12, omega_23, omega_31, phi)
    p = PKDict(
        omega_12=omega_12,
        omega_23=omega_23,
        omega_31=omega_31,
        delta_1=d1,
        delta_3=d3,
        phi=phi,
    )
    d = model.TriangleDrive(p)
    s = model.scale(model.DriveConfig.from_params("triangle", p))
    r = darkstate.dark_residual_triangle(d)
    pykern.pkunit.pkok(abs(r) < 1e-9 * s**3, "on manifold residual={}", r)
    pykern.pkunit.pkeq(True, darkstate.find_dark_states(model.build_triangle(d)).exists)
    d = model.TriangleDrive(p.copy().pkupdate(delta_1=d1 + 0.2))
    r = darkstate.dark_residual_triangle(d)
    pykern.pkunit.pkok(abs(r) > 1e-3, "perturbed residual={}", r)
    pykern.pkunit.pkeq(False, darkstate.find_dark_states(model.build_triangle(d)).exists)


@settings(max_examples=200, deadline=None)
@given(_RABI, _RABI, _RABI, _RABI, _DETUNING, _DETUNING, _PHASE)
def test_diamond_dark_manifold(omega_12, omega_23, omega_34, omega_41, delta_1, delta_3, phi):
    c = model.phase_factor(model.reduce_phase(phi)).real
    p = PKDict(
        omega_12=omega_12,
        omega_23=omega_23,
        omega_34=omega_34,
        omega_41=omega_41,
        delta_1=delta_1,
        delta_3=delta_3,
        # solves the residual for delta_4
        delta_4=(
            (omega_12 * omega_34) ** 2
            + (omega_23 * omega_41) ** 2
            - 2 * omega_12 * omega_23 * omega_34 * omega_41 * c
        )
        / (4 * (omega_12**2 * delta_3 + omega_23**2 * delta_1)),
        phi=phi,
    )
    d = model.DiamondDrive(p)
    s = model.scale(model.DriveConfig.from_params("diamond", p))
    r = darkstate.dark_residual_diamond(d)
    pykern.pkunit.pkok(abs(r) < 1e-9 * s**4, "on manifold residual={}", r)
    pykern.pkunit.pkeq(True, darkstate.find_dark_states(model.build_diamond(d)).exists)
    d = model.DiamondDrive(p.copy().pkupdate(delta_4=p.delta_4 + 0.2))
    r = darkstate.dark_residual_diamond(d)
    pykern.pkunit.pkok(abs(r) > 1e-3, "perturbed residual={}", r)
    pykern.pkunit.pkeq(False, darkstate.find_dark_states(model.build_diamond(d)).exists)
