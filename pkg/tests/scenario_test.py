# -*- coding: utf-8 -*-
"""Tests for scenario files, task outputs and the sim command line
"""
import numpy
from pykern import pkio, pkjson
from pykern.pkcollections import PKDict
import pykern.pkunit
import pytest


def _exit_code(op):
    try:
        op()
    except SystemExit as e:
        return e.code
    pykern.pkunit.pkfail("expected SystemExit")


def test_phase_check_csv():
    from rsloop.drive import model, presets
    from rsloop.evolution import dynamics
    from rsloop.scenario import runner

    d = pykern.pkunit.empty_work_dir()
    r = runner.run(pykern.pkunit.data_dir().join("fig5_small.yml"), out=str(d))
    pykern.pkunit.pkeq(True, r.phase_check.symmetric)
    c = runner.read_csv(d.join("phase_check.csv"))
    pykern.pkunit.pkeq(
        ["t", "1+", "1-", "2+", "2-", "3+", "3-", "4+", "4-"], c.labels
    )
    pykern.pkunit.pkeq((101, 9), c.series.shape)
    j = pkjson.load_any(pkio.read_text(d.join("phase_check.json")))
    pykern.pkunit.pkeq(True, j.symmetric)
    pykern.pkunit.pkeq(1e-9, j.threshold)
    pykern.pkunit.pkeq(["1", "2", "3", "4"], list(j.per_state_deviation.keys()))
    pykern.pkunit.pkeq("fig5", j.scenario)
    p = presets.preset("fig5")
    g = dynamics.TimeGrid(PKDict(t_end=0.5, n_points=101))
    t = dynamics.evolve(model.build(p.config), p.initial_state(), g, p.basis_vectors())
    c = runner.read_csv(d.join("evolve.csv"))
    pykern.pkunit.pkeq(["t", "1", "2", "3", "4"], c.labels)
    # %.17g round trips doubles exactly
    pykern.pkunit.pkeq(g.times.tolist(), c.series[:, 0].tolist())
    pykern.pkunit.pkeq(t.populations.tolist(), c.series[:, 1:].tolist())


def test_deterministic_output():
    from rsloop.scenario import runner

    d = pykern.pkunit.empty_work_dir()
    f = pykern.pkunit.data_dir().join("fig5_small.yml")
    runner.run(f, out=str(d.join("a")))
    runner.run(f, out=str(d.join("b")))
    for n in ("evolve.csv", "phase_check.csv", "phase_check.json"):
        pykern.pkunit.pkeq(
            pkio.read_text(d.join("a", n)), pkio.read_text(d.join("b", n))
        )


def test_dark_report():
    from rsloop.drive import presets
    from rsloop.scenario import runner

    d = pykern.pkunit.empty_work_dir()
    r = runner.run(pykern.pkunit.data_dir().join("delta_d1_dark.yml"), out=str(d))
    pykern.pkunit.pkeq(["dark_report", "pairing_check"], list(r.keys()))
    j = pkjson.load_any(pkio.read_text(d.join("dark_report.json")))
    pykern.pkunit.pkeq(True, j.exists)
    pykern.pkunit.pkeq(1, j.degeneracy)
    pykern.pkunit.pkeq("Δ-D-1", j.scenario)
    pykern.pkunit.pkok(abs(j.closed_form_residual) < 1e-12, "residual={}", j.closed_form_residual)
    v = numpy.array([complex(*a) for a in j.dark_states[0]])
    o = abs(numpy.vdot(presets.preset("Δ-D-1").state("D").amplitudes, v))
    pykern.pkunit.pkok(abs(o - 1.0) < 1e-10, "dark overlap={}", o)
    j = pkjson.load_any(pkio.read_text(d.join("pairing_check.json")))
    pykern.pkunit.pkeq("neither", j.checkerboard)


def test_explicit_drive_json():
    from rsloop.scenario import runner

    d = pykern.pkunit.empty_work_dir()
    r = runner.run(pykern.pkunit.data_dir().join("explicit_drive.yml"), out=str(d))
    pykern.pkunit.pkeq(["evolve", "fidelity", "coherence"], list(r.keys()))
    j = pkjson.load_any(pkio.read_text(d.join("evolve_series.json")))
    pykern.pkunit.pkeq(["B_L", "2", "D_L"], j.labels)
    pykern.pkunit.pkeq(51, len(j.t))
    pykern.pkunit.pkeq([0.0, 1.0, 0.0], [round(x, 15) for x in j.series[0]])
    j = pkjson.load_any(pkio.read_text(d.join("fidelity.json")))
    pykern.pkunit.pkok(abs(j.initial - 1.0) < 1e-12, "F(0)={}", j.initial)
    pykern.pkunit.pkeq("explicit-fig4b", j.scenario)
    j = pkjson.load_any(pkio.read_text(d.join("coherence.json")))
    pykern.pkunit.pkeq(["B_L", "D_L"], [j.bra, j.ket])
    pykern.pkunit.pkok(
        j.antisymmetry_deviation < 1e-10, "antisymmetry={}", j.antisymmetry_deviation
    )
    pykern.pkunit.pkok(j.symmetry_deviation > 1e-3, "symmetry={}", j.symmetry_deviation)


def test_scenario_schema():
    from rsloop.scenario import runner

    for p, m in (
        (PKDict(tasks=["evolve"]), "preset or drive"),
        (PKDict(preset="fig5"), "tasks"),
        (PKDict(preset="fig5", tasks=["plot"]), "plot"),
        (PKDict(preset="fig5", tasks=["evolve"], colour=1), "colour"),
        (PKDict(preset="fig5", tasks=["evolve"], initial_state="B1"), "initial_state"),
        (PKDict(preset="fig5", tasks=["evolve"], measurement_basis="table1"), "measurement_basis"),
        (PKDict(preset="fig5", tasks=["evolve"], grid=PKDict(n_points=1)), "grid"),
        (PKDict(preset="fig5", tasks=["evolve"], output=PKDict(format="xml")), "format"),
        (
            PKDict(preset="fig5", drive=PKDict(topology="diamond"), tasks=["evolve"]),
            "mutually exclusive",
        ),
        (PKDict(preset="fig5", tasks=["evolve"], initial_state=[1, 0]), "4 components"),
    ):
        with pykern.pkunit.pkexcept(m):
            runner.Scenario(p)
    s = runner.Scenario(
        PKDict(preset="fig5", tasks=["evolve"], initial_state=[[1, 0], [0, 1], 0, 0]),
        points=11,
        tolerance=0.5,
    )
    pykern.pkunit.pkeq(11, s.grid.n_points)
    pykern.pkunit.pkeq(0.5, s.threshold)
    pykern.pkunit.pkok(
        abs(s.initial.amplitudes[1] - 1j / numpy.sqrt(2)) < 1e-15, "initial={}", s.initial
    )
    s = runner.Scenario(PKDict(preset="fig5", tasks=["evolve"], initial_state=2))
    pykern.pkunit.pkeq(1.0, s.initial.amplitudes[1].real)


def test_cli_exit_codes():
    from rsloop.pkcli import sim

    d = pykern.pkunit.empty_work_dir()
    data = pykern.pkunit.data_dir()
    pykern.pkunit.pkeq(
        2, _exit_code(lambda: sim.run(str(data.join("bad_grid.yml")), out=str(d)))
    )
    pykern.pkunit.pkeq(
        2, _exit_code(lambda: sim.run(str(data.join("unknown_preset.yml")), out=str(d)))
    )
    pykern.pkunit.pkeq(
        2, _exit_code(lambda: sim.run(str(data.join("missing.yml")), out=str(d)))
    )
    pykern.pkunit.pkeq(
        2,
        _exit_code(
            lambda: sim.run(str(data.join("fig5_small.yml")), out=str(d), points="many")
        ),
    )
    pykern.pkunit.pkeq(
        4,
        _exit_code(
            lambda: sim.run(
                str(data.join("fig2a_small.yml")), out=str(d), assert_symmetric=True
            )
        ),
    )
    pykern.pkunit.pkeq(2, _exit_code(lambda: sim.check("fig9", out=str(d))))
    pykern.pkunit.pkeq(2, _exit_code(lambda: sim.check("fig5", task="plot", out=str(d))))
    s = sim.run(
        str(data.join("fig2a_small.yml")),
        out=str(d),
        tolerance="1.5",
        assert_symmetric=True,
    )
    pykern.pkunit.pkok("symmetric=True" in s, "summary={}", s)


def test_cli_check_and_list():
    from rsloop.pkcli import sim

    d = pykern.pkunit.empty_work_dir()
    s = sim.check("fig5", out=str(d))
    pykern.pkunit.pkok(s.startswith("phase_check: "), "summary={}", s)
    pykern.pkunit.pkok("symmetric=True" in s, "summary={}", s)
    pykern.pkunit.pkok(d.join("phase_check.csv").check(), "missing phase_check.csv")
    s = sim.check("DLambda-D-3", task="pairing_check", out=str(d))
    pykern.pkunit.pkok("paired=True checkerboard=odd" in s, "summary={}", s)
    s = sim.list_presets()
    for n in ("Δ-D-1", "DΛ-0Φ-2", "fig4c", "fig5 [diamond]"):
        pykern.pkunit.pkok(n in s, "list_presets missing {}", n)
    pykern.pkunit.pkeq(20, s.count(" initial="))


def test_package_scenarios():
    from rsloop.pkcli import sim
    from rsloop.scenario import runner

    d = pykern.pkunit.empty_work_dir()
    for n in ("fig2a", "fig2b", "fig2c", "fig3a", "fig3b", "fig4a", "fig4b", "fig4c", "fig5"):
        p = runner.package_scenario(n)
        pykern.pkunit.pkok(p.check(), "missing scenario {}", n)
        s = runner.Scenario.from_file(p, points=21)
        pykern.pkunit.pkeq(n, s.label())
    s = sim.run(str(runner.package_scenario("fig5")), out=str(d), points="51")
    pykern.pkunit.pkeq(3, len(s.split("\n")))
    pykern.pkunit.pkok(d.join("pairing_check.json").check(), "missing pairing_check.json")


def test_cli_check_overrides():
    from rsloop.pkcli import sim
    from rsloop.scenario import runner

    d = pykern.pkunit.empty_work_dir()
    s = sim.check("fig2a", out=str(d), points="51", tolerance="2.0")
    pykern.pkunit.pkok("symmetric=True" in s, "summary={}", s)
    c = runner.read_csv(d.join("phase_check.csv"))
    pykern.pkunit.pkeq((51, 7), c.series.shape)
    s = sim.check("fig2a", out=str(d), points="51")
    pykern.pkunit.pkok("symmetric=False" in s, "summary={}", s)
    pykern.pkunit.pkeq(2, _exit_code(lambda: sim.check("fig2a", out=str(d), points="x")))
    pykern.pkunit.pkeq(
        2, _exit_code(lambda: sim.check("fig2a", out=str(d), tolerance="tight"))
    )
