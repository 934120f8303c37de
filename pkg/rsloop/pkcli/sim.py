# -*- coding: utf-8 -*-
"""Run scenarios, list presets and check a preset from the command line

Exit status: 2 for scenario or drive input errors, 3 when a numerical
precondition fails, 4 when ``--assert-symmetric`` finds a phase asymmetry.

:copyright: Copyright (c) 2021-2026 RadiaSoft LLC.  All Rights Reserved.
:license: http://www.apache.org/licenses/LICENSE-2.0.html
"""
from pykern.pkcollections import PKDict
from pykern.pkdebug import pkdlog
from rsloop.core.operator import NumericalError
from rsloop.drive import presets
from rsloop.drive.model import InvalidDriveInputError
from rsloop.evolution.dynamics import InvalidTimeGridError
from rsloop.scenario import runner

_EXIT = (
    (runner.CheckFailedError, 4),
    ((runner.ScenarioError, InvalidDriveInputError, InvalidTimeGridError), 2),
    (NumericalError, 3),
)


def check(preset, task="phase_check", out=None, points=None, tolerance=None):
    """Run one task on a preset with its documented state and basis

    Args:
        preset (str): preset name, e.g. fig5 or Delta-D-1
        task (str): evolve, phase_check, fidelity, coherence, dark_report, pairing_check
        out (str): output directory [default: current]
        points (int): override grid n_points
        tolerance (float): override the phase symmetry threshold
    Returns:
        str: summary line
    """
    return _call(
        lambda: _summary(
            runner.run_scenario(
                runner.Scenario(
                    PKDict(preset=preset, tasks=[task]),
                    **_overrides(points, tolerance),
                ),
                out=out,
            )
        )
    )


def list_presets():
    """All case and figure presets with parameters and description

    Returns:
        str: one block per preset
    """
    res = []
    for n in presets.names():
        p = presets.preset(n)
        res.append(
            f"{n} [{p.config.topology}] {p.anchor}\n"
            + "    "
            + " ".join(f"{k}={v:.12g}" for k, v in p.config.params.params().items())
            + f"\n    initial={p.initial} basis={p.basis}"
        )
    return "\n".join(res)


def run(scenario_file, out=None, points=None, tolerance=None, assert_symmetric=False):
    """Run every task of a scenario file

    Args:
        scenario_file (str): YAML scenario
        out (str): output directory [default: scenario output.directory]
        points (int): override grid n_points
        tolerance (float): override the phase symmetry threshold
        assert_symmetric (bool): exit 4 if phase_check is not symmetric
    Returns:
        str: one summary line per task
    """
    return _call(
        lambda: _summary(
            runner.run(
                scenario_file,
                out=out,
                **_overrides(points, tolerance),
                assert_symmetric=assert_symmetric,
            )
        )
    )


def _call(op):
    try:
        return op()
    except Exception as e:
        for c, code in _EXIT:
            if isinstance(e, c):
                pkdlog("{}: {}", e.__class__.__name__, e)
                raise SystemExit(code)
        raise


def _number(kind, value, name):
    try:
        return kind(value)
    except ValueError:
        raise runner.ScenarioError(f"{name}={value} is not a valid {kind.__name__}")


def _overrides(points, tolerance):
    return PKDict(
        points=None if points is None else _number(int, points, "points"),
        tolerance=None if tolerance is None else _number(float, tolerance, "tolerance"),
    )


def _summary(result):
    return "\n".join(
        f"{k}: {v.summary} -> {', '.join(v.files)}" for k, v in result.items()
    )
