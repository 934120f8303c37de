# -*- coding: utf-8 -*-
"""Scenario files: parse, run tasks, write trajectories and reports

A scenario is a YAML file::

    preset: fig5
    tasks: [evolve, phase_check]
    grid: {t_start: 0, t_end: 0.5, n_points: 1001}

or with an explicit drive and states given as (re, im) pairs::

    drive:
      topology: triangle
      params: {omega_12: 20, omega_23: 20, omega_31: 20, phi: 1.0471975511965976}
    initial_state: [[0, 0], [1, 0], [0, 0]]
    measurement_basis: cpt
    tasks: [fidelity]

Copyright (c) 2021-2026 RadiaSoft LLC. All rights reserved
"""
import numpy
import pkg_resources
from pykern import pkio, pkjson, pkyaml
from pykern.pkcollections import PKDict
from pykern.pkdebug import pkdc, pkdlog
from rsloop.core import operator
from rsloop.core.operator import StateVector
from rsloop.drive import model, presets
from rsloop.drive.model import DriveConfig
from rsloop.evolution import checkerboard, dynamics
from rsloop.states import darkstate
from rsloop.utils.validator import ValidatorBase

_SCENARIO_DEFAULTS = PKDict(
    preset=None,
    drive=None,
    initial_state=None,
    grid=None,
    measurement_basis=None,
    tasks=None,
    coherence=None,
    threshold=None,
    mirror_frame=True,
    output=None,
)

_OUTPUT_DEFAULTS = PKDict(
    directory=".",
    format="csv",
)

_FORMATS = ("csv", "json")


class ScenarioError(Exception):
    pass


class CheckFailedError(Exception):
    pass


class Scenario(ValidatorBase):
    """Validated scenario: drive, initial state, grid, basis and tasks

    Args:
        params (PKDict): parsed scenario file
        points (int): overrides grid.n_points
        tolerance (float): overrides threshold
    """

    _DEFAULTS = _SCENARIO_DEFAULTS
    _INPUT_ERROR = ScenarioError

    def __init__(self, params, points=None, tolerance=None):
        p = self._get_params(params)
        self._validate_params(p)
        self.preset = self._preset(p)
        self.config = self.preset.config if self.preset else self._drive(p.drive)
        self.states = (
            self.preset.states if self.preset else presets.named_states(self.config)
        )
        self.bases = self.preset.bases if self.preset else presets.bases(self.config)
        self.dim = model.build(self.config).dim
        self.initial = self._state(
            p.initial_state or (self.preset.initial if self.preset else "1"),
            "initial_state",
        )
        self.grid = self._grid(p.grid, points)
        self.basis_labels, self.basis = self._basis(
            p.measurement_basis or (self.preset.basis if self.preset else "natural")
        )
        self.tasks = self._tasks(p.tasks)
        self.coherence = self._coherence(p.coherence)
        t = p.threshold if tolerance is None else tolerance
        self.threshold = self._validate_real(
            operator.config().phase_threshold if t is None else t,
            "threshold",
            nonnegative=True,
        )
        self.mirror_frame = bool(p.mirror_frame)
        self.output = self._output(p.output)

    @classmethod
    def from_file(cls, path, **kwargs):
        try:
            p = pkyaml.load_file(pkio.py_path(path))
        except Exception as e:
            raise ScenarioError(f"scenario file={path} unreadable: {e}")
        if not isinstance(p, dict):
            raise ScenarioError(f"scenario file={path} is not a mapping")
        return cls(PKDict(p), **kwargs)

    def label(self):
        return self.config.label or self.config.topology

    def _basis(self, value):
        if isinstance(value, str):
            if value not in self.bases:
                raise self._INPUT_ERROR(
                    f"measurement_basis={value} not available; valid: {', '.join(self.bases)}"
                )
            return self.bases[value].labels, self.bases[value].vectors
        if not isinstance(value, (list, tuple)) or len(value) != self.dim:
            raise self._INPUT_ERROR(f"measurement_basis must name a basis or list {self.dim} vectors")
        v = [self._vector(x, f"measurement_basis[{i}]") for i, x in enumerate(value)]
        try:
            operator.basis_matrix(v, self.dim)
        except operator.OperatorError as e:
            raise self._INPUT_ERROR(f"measurement_basis: {e}")
        return [f"b{i + 1}" for i in range(self.dim)], v

    def _coherence(self, value):
        if value is None:
            value = self.preset.coherence if self.preset else ("1", "2")
        if isinstance(value, dict):
            value = (value.get("bra"), value.get("ket"))
        if not isinstance(value, (list, tuple)) or len(value) != 2:
            raise self._INPUT_ERROR("coherence must be a bra, ket pair")
        return PKDict(
            labels=[x if isinstance(x, str) else "explicit" for x in value],
            bra=self._state(value[0], "coherence.bra"),
            ket=self._state(value[1], "coherence.ket"),
        )

    def _drive(self, value):
        if not isinstance(value, dict) or "topology" not in value:
            raise self._INPUT_ERROR("either preset or drive with topology is required")
        u = set(value) - {"topology", "params", "label"}
        if u:
            raise self._INPUT_ERROR(f"invalid inputs: drive.{u.pop()} is not a drive field")
        return DriveConfig.from_params(
            value["topology"],
            PKDict(value.get("params") or {}),
            label=value.get("label"),
        )

    def _grid(self, value, points):
        p = PKDict(value or {})
        if points is not None:
            p.n_points = points
        try:
            return dynamics.TimeGrid(p)
        except dynamics.InvalidTimeGridError as e:
            raise self._INPUT_ERROR(f"grid: {e}")

    def _output(self, value):
        p = PKDict(value or {})
        self._validate_subset(p, _OUTPUT_DEFAULTS, "output")
        p = PKDict(_OUTPUT_DEFAULTS, **p)
        if p.format not in _FORMATS:
            raise self._INPUT_ERROR(f"output.format={p.format} must be one of {_FORMATS}")
        return p

    def _preset(self, p):
        if p.preset is None:
            return None
        if p.drive is not None:
            raise self._INPUT_ERROR("preset and drive are mutually exclusive")
        return presets.preset(p.preset)

    def _state(self, value, field):
        if isinstance(value, int) and not isinstance(value, bool):
            value = str(value)
        if isinstance(value, str):
            if value not in self.states:
                raise self._INPUT_ERROR(
                    f"{field}={value} is not a named state; valid: {', '.join(self.states)}"
                )
            return self.states[value]
        return self._vector(value, field)

    def _tasks(self, value):
        if not value or not isinstance(value, (list, tuple)):
            raise self._INPUT_ERROR("tasks must be a nonempty list")
        for t in value:
            if t not in _TASKS:
                raise self._INPUT_ERROR(f"tasks: {t} is not one of {', '.join(_TASKS)}")
        return list(value)

    def _validate_subset(self, value, defaults, field):
        for k in value:
            if k not in defaults:
                raise self._INPUT_ERROR(f"invalid inputs: {field}.{k} is not a parameter")

    def _vector(self, value, field):
        if not isinstance(value, (list, tuple)) or len(value) != self.dim:
            raise self._INPUT_ERROR(f"{field} must have {self.dim} components")
        a = []
        for x in value:
            if isinstance(x, (list, tuple)):
                if len(x) != 2:
                    raise self._INPUT_ERROR(f"{field} component={x} is not an (re, im) pair")
                a.append(complex(self._validate_real(x[0], field), self._validate_real(x[1], field)))
            else:
                a.append(complex(self._validate_real(x, field)))
        if numpy.linalg.norm(a) < operator.config().structural_tol:
            raise self._INPUT_ERROR(f"{field} has zero norm")
        return StateVector(a, normalize=True)


def package_scenario(name):
    """Path of a scenario shipped in package_data/scenarios"""
    return pkio.py_path(
        pkg_resources.resource_filename("rsloop", f"package_data/scenarios/{name}.yml")
    )


def read_csv(path):
    """Header labels and series of a written trajectory"""
    p = pkio.py_path(path)
    return PKDict(
        labels=pkio.read_text(p).split("\n", 1)[0].split(","),
        series=numpy.loadtxt(str(p), delimiter=",", skiprows=1, ndmin=2),
    )


def run(path, out=None, points=None, tolerance=None, assert_symmetric=False):
    """Run a scenario file, writing one output per task

    Args:
        path (str): scenario file
        out (str): output directory override
        points (int): grid override
        tolerance (float): phase symmetry threshold override
        assert_symmetric (bool): raise CheckFailedError on a failed phase_check
    Returns:
        PKDict: task name to written files and summary
    """
    return run_scenario(
        Scenario.from_file(path, points=points, tolerance=tolerance),
        out=out,
        assert_symmetric=assert_symmetric,
    )


def run_scenario(scenario, out=None, assert_symmetric=False):
    d = pkio.mkdir_parent(pkio.py_path(out or scenario.output.directory))
    pkdlog("scenario={} tasks={} out={}", scenario.label(), scenario.tasks, d)
    res = PKDict()
    for t in scenario.tasks:
        res[t] = _TASKS[t](scenario, d)
        pkdlog("{} done: {}", t, res[t].summary)
    if assert_symmetric and "phase_check" in res and not res.phase_check.symmetric:
        raise CheckFailedError(
            f"phase_check deviation={res.phase_check.deviation} >= threshold={scenario.threshold}"
        )
    return res


def _pairs(vector):
    return [[float(a.real), float(a.imag)] for a in vector]


def _task_coherence(s, out):
    c = dynamics.coherence_series(s.config, s.initial, s.grid, s.coherence.bra, s.coherence.ket)
    p, (b, k) = dynamics.mirrored(
        s.initial, [s.coherence.bra, s.coherence.ket], mirror_frame=s.mirror_frame
    )
    m = dynamics.coherence_series(model.conjugate_phase(s.config), p, s.grid, b, k)
    r = PKDict(
        bra=s.coherence.labels[0],
        ket=s.coherence.labels[1],
        antisymmetry_deviation=float(numpy.abs(c + m).max()),
        symmetry_deviation=float(numpy.abs(c - m).max()),
    )
    return _write(
        s,
        out,
        "coherence",
        ["plus", "minus"],
        numpy.column_stack([c.real, m.real]),
        report=r,
        summary=f"antisymmetry deviation={r.antisymmetry_deviation:.3g}",
    )


def _task_dark_report(s, out):
    h = model.build(s.config)
    r = darkstate.find_dark_states(h).as_pkdict()
    if s.config.topology == "triangle":
        r.closed_form_residual = darkstate.dark_residual_triangle(s.config.params)
    elif s.config.topology == "diamond":
        r.closed_form_residual = darkstate.dark_residual_diamond(s.config.params)
    return _write(
        s,
        out,
        "dark_report",
        report=r,
        summary=f"exists={r.exists} degeneracy={r.degeneracy}",
    )


def _task_evolve(s, out):
    t = dynamics.evolve(
        model.build(s.config), s.initial, s.grid, s.basis, labels=s.basis_labels
    )
    return _write(
        s,
        out,
        "evolve",
        t.basis_labels,
        t.populations,
        summary="chirality=" + "".join(dynamics.chirality_sequence(t)[:12]),
    )


def _task_fidelity(s, out):
    f = dynamics.fidelity_series(s.config, s.initial, s.grid)
    r = PKDict(initial=float(f.values[0]), minimum=float(f.values.min()), revival=None)
    try:
        r.revival = dynamics.fidelity_revival(s.config, s.initial, s.grid)
    except dynamics.DynamicsError as e:
        pkdc("no revival: {}", e)
    return _write(
        s,
        out,
        "fidelity",
        ["F"],
        f.values[:, None],
        report=r,
        summary=f"minimum={r.minimum:.6g} revival={r.revival}",
    )


def _task_pairing_check(s, out):
    h = model.build(s.config)
    r = PKDict(
        paired=checkerboard.eigenvalue_pairing_check(h),
        checkerboard=checkerboard.checkerboard_class(h, operator.config().structural_tol),
        eigenvalues=operator.eig_hermitian(h).eigenvalues.tolist(),
    )
    return _write(
        s,
        out,
        "pairing_check",
        report=r,
        summary=f"paired={r.paired} checkerboard={r.checkerboard}",
    )


def _task_phase_check(s, out):
    p = dynamics.phase_symmetry_check(
        s.config,
        s.initial,
        s.grid,
        s.basis,
        threshold=s.threshold,
        labels=s.basis_labels,
        mirror_frame=s.mirror_frame,
    )
    k = []
    for l in s.basis_labels:
        k.extend([f"{l}+", f"{l}-"])
    v = numpy.empty((s.grid.n_points, 2 * s.dim))
    v[:, 0::2] = p.plus.populations
    v[:, 1::2] = p.minus.populations
    r = PKDict(
        deviation=p.max_pop_deviation,
        symmetric=p.symmetric,
        threshold=p.threshold,
        per_state_deviation=PKDict(zip(s.basis_labels, p.per_state_deviation.tolist())),
    )
    res = _write(
        s,
        out,
        "phase_check",
        k,
        v,
        report=r,
        summary=f"deviation={r.deviation:.3g} symmetric={r.symmetric}",
    )
    return res.pkupdate(symmetric=r.symmetric, deviation=r.deviation)


def _write(s, out, name, labels=None, values=None, report=None, summary=""):
    res = PKDict(files=[], summary=summary)
    if values is not None:
        if s.output.format == "csv":
            f = out.join(f"{name}.csv")
            numpy.savetxt(
                str(f),
                numpy.column_stack([s.grid.times, values]),
                delimiter=",",
                fmt="%.17g",
                header=",".join(["t"] + list(labels)),
                comments="",
            )
        else:
            f = out.join(f"{name}_series.json")
            pkio.write_text(
                f,
                pkjson.dump_pretty(
                    PKDict(t=s.grid.times.tolist(), labels=list(labels), series=values.tolist())
                ),
            )
        res.files.append(str(f))
    if report is not None:
        f = out.join(f"{name}.json")
        pkio.write_text(
            f,
            pkjson.dump_pretty(
                report.pkupdate(
                    scenario=s.label(),
                    initial_state=_pairs(s.initial.amplitudes),
                    grid=s.grid.params(),
                )
            ),
        )
        res.files.append(str(f))
    return res


_TASKS = PKDict(
    evolve=_task_evolve,
    phase_check=_task_phase_check,
    fidelity=_task_fidelity,
    coherence=_task_coherence,
    dark_report=_task_dark_report,
    pairing_check=_task_pairing_check,
)
