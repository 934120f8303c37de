# -*- coding: utf-8 -*-
"""Named drive cases and figure presets with their documented states

Copyright (c) 2021-2026 RadiaSoft LLC. All rights reserved
"""
import math
from pykern.pkcollections import PKDict
from rsloop.core import operator
from rsloop.core.operator import StateVector
from rsloop.drive import model
from rsloop.drive.model import DriveConfig, InvalidDriveInputError
from rsloop.states import cpt

_PI = math.pi
_SQRT2 = math.sqrt(2)
_SQRT3 = math.sqrt(3)


def _delta_d1_table():
    return PKDict(
        D=[1, 1j, -1],
        B1=[1, 0, 1],
        # printed [1, 2i, -1] is not orthogonal to D
        B2=[1, -2j, -1],
    )


def _delta_d2_table():
    return PKDict(
        D=[2, 1j * _SQRT3, -2],
        B1=[_SQRT3, -2j, 0],
        B2=[4, 2j * _SQRT3, 7],
    )


def _dlambda_d1_table():
    return PKDict(
        D=[1, 2j * _SQRT3, -1, -2 * (1 + 1j * _SQRT3)],
        B1=[0, 2, 0, 1 + model.phase_factor(-_PI / 3)],
        B2=[1, 0, 1, 0],
        B3=[
            7 * model.phase_factor(2 * _PI / 3),
            1 + model.phase_factor(_PI / 3),
            -7 * model.phase_factor(2 * _PI / 3),
            -2,
        ],
    )


def _dlambda_d2_table():
    return PKDict(D=[1, 1j, -1, -1j])


def _delta_d3_table():
    s = math.sin(_PI / 3)
    return PKDict(D=[2, 3j * s, -1])


def _triangle(omega, phi, delta_1=0.0, delta_3=0.0, ratios=(1, 1, 1)):
    return PKDict(
        topology="triangle",
        params=PKDict(
            omega_12=ratios[0] * omega,
            omega_23=ratios[1] * omega,
            omega_31=ratios[2] * omega,
            delta_1=delta_1,
            delta_3=delta_3,
            phi=phi,
        ),
    )


def _diamond(omegas, phi, delta_1=0.0, delta_3=0.0, delta_4=0.0):
    return PKDict(
        topology="diamond",
        params=PKDict(
            omega_12=omegas[0],
            omega_23=omegas[1],
            omega_34=omegas[2],
            omega_41=omegas[3],
            delta_1=delta_1,
            delta_3=delta_3,
            delta_4=delta_4,
            phi=phi,
        ),
    )


def _entry(drive, anchor, initial="1", basis="natural", table=None, coherence=("1", "2")):
    return drive.pkupdate(
        anchor=anchor,
        initial=initial,
        basis=basis,
        table=table,
        coherence=coherence,
    )


_CATALOG = PKDict(
    {
        "Δ-D-1": _entry(
            _triangle(1.0, _PI / 2),
            "Ω12=Ω23=Ω31=Ω, δ1=δ3=0, Φ=π/2; tabulated dark and bright states",
            initial="D_L",
            basis="cpt",
            table=_delta_d1_table,
        ),
        "Δ-D-2": _entry(
            _triangle(1.0, _PI / 3, -0.25, -0.25),
            "Ω12=Ω23=Ω31=Ω, δ1=δ3=-Ωcos(Φ)/2, Φ=π/3; tabulated states, bright-dark coherence",
            initial="2",
            basis="cpt",
            table=_delta_d2_table,
            coherence=("B_L", "D_L"),
        ),
        "Δ-D-3": _entry(
            _triangle(1.0, _PI / 3, -0.375, -1.5, ratios=(1, 2, 3)),
            "Ω12:Ω23:Ω31=1:2:3, δ1=-(3/4)Ωcos(Φ), δ3=-3Ωcos(Φ), Φ=π/3",
            table=_delta_d3_table,
        ),
        "DΛ-D-1": _entry(
            _diamond((1.0, 1.0, 1.0, 1.0), _PI / 3, 1.0, 1.0, 0.125),
            "Ω12=Ω23=Ω34=Ω41=Ω, δ1=δ3=Ω, δ4=Ω/8, Φ=π/3; tabulated dark and bright states",
            initial="B1",
            basis="table1",
            table=_dlambda_d1_table,
        ),
        "DΛ-D-2": _entry(
            _diamond((1.0, 1.0, 1.0, _SQRT2), _PI / 4, 0.5, 0.0, 0.5),
            "Ω12=Ω23=Ω34=Ω, Ω41=√2Ω, δ1=δ4=Ω/2, δ3=0, Φ=π/4; dark state [1,i,-1,-i]/2",
            table=_dlambda_d2_table,
        ),
        "DΛ-D-3": _entry(
            _diamond((1.0, 2.0, 3.0, 4.0), _PI / 2),
            "Ω=(1,2,3,4)Ω, all δ=0, Φ=π/2; no dark state, paired eigenvalues",
        ),
        "DΛ-D-4": PKDict(
            topology="double_lambda_alt",
            params=PKDict(omega_p=1.0, omega_s=1.0, delta=0.5, phi_small=_PI / 4),
        ).pkupdate(
            anchor="Ωp=Ωs=Ω, δ=Ω/2, φ=π/4; alternate double-Λ with a double-dark state",
            initial="1",
            basis="natural",
            table=None,
            coherence=("1", "2"),
        ),
        "Δ-0Φ-1": _entry(
            _triangle(1.0, 0.0, -0.5, -0.5),
            "Ω12=Ω23=Ω31=Ω, Φ=0, δ1=δ3=-Ω/2; balanced Λ dark state decoupled",
            initial="D_L",
            basis="cpt",
        ),
        "Δ-0Φ-2": _entry(
            _triangle(1.0, 0.0, -0.25, -1.0, ratios=(1, 2, 1)),
            "Ω12=Ω, Ω23=2Ω, Ω31=Ω, Φ=0, δ1-δ3=3Ω/4; unbalanced Λ dark eigenstate",
            initial="D_L",
            basis="cpt",
        ),
        "DΛ-0Φ-1": _entry(
            _diamond((1.0, 2.0, 2.0, 1.0), 0.0, 0.0, 0.0, 0.5),
            "Ω=(1,2,2,1)Ω, Φ=0, δ1=δ3=0, δ4=Ω/2; Ω12Ω34=Ω23Ω41 decouples D",
            basis="cpt",
        ),
        "DΛ-0Φ-2": _entry(
            _diamond((1.0, 2.0, 1.0, 2.0), _PI, 0.5, 0.5, -0.3),
            "Ω=(1,2,1,2)Ω, Φ=π, δ1=δ3=Ω/2, δ4=-3Ω/10; Ω23Ω34=Ω12Ω41 gives two SU(2) blocks",
            basis="cpt",
        ),
        "fig2a": _entry(
            _triangle(20.0, _PI / 2),
            "Ω=20, δ1=δ3=0, Φ=±π/2, initial |1>; chiral circulation, no phase symmetry",
        ),
        "fig2b": _entry(
            _triangle(20.0, _PI / 3, -5.0, -5.0),
            "Ω=20, δ1=δ3=-5, Φ=±π/3, initial |2>; no phase symmetry",
            initial="2",
            table=_delta_d2_table,
        ),
        "fig2c": _entry(
            _diamond((10.0, 10.0, 10.0, 10.0 * _SQRT2), _PI / 4, 5.0, 0.0, 5.0),
            "Ω12=Ω23=Ω34=10, Ω41=10√2, δ1=δ4=5, δ3=0, Φ=±π/4, initial |1>",
        ),
        "fig3a": _entry(
            _triangle(20.0, _PI / 3, -5.0, -5.0),
            "Δ-D-2 with Ω=20, δ1=δ3=-5, Φ=±π/3, initial |B1>; dark/bright basis",
            initial="B1",
            basis="table1",
            table=_delta_d2_table,
            coherence=("B_L", "D_L"),
        ),
        "fig3b": _entry(
            _diamond((16.0, 16.0, 16.0, 16.0), _PI / 3, 16.0, 16.0, 2.0),
            "DΛ-D-1 with Ω=16, δ1=δ3=16, δ4=2, Φ=±π/3, initial |B1>; dark/bright basis",
            initial="B1",
            basis="table1",
            table=_dlambda_d1_table,
        ),
        "fig4a": _entry(
            _triangle(20.0, _PI / 2),
            "Δ-D-1 with Ω=20, δ1=δ3=0, Φ=±π/2, initial |D>_Λ; CPT basis",
            initial="D_L",
            basis="cpt",
            table=_delta_d1_table,
            coherence=("B_L", "D_L"),
        ),
        "fig4b": _entry(
            _triangle(20.0, _PI / 3, -5.0, -5.0),
            "Δ-D-2 with Ω=20, δ1=δ3=-5, Φ=±π/3, initial |2>; CPT basis",
            initial="2",
            basis="cpt",
            table=_delta_d2_table,
            coherence=("B_L", "D_L"),
        ),
        "fig4c": _entry(
            _diamond((16.0, 16.0, 16.0, 16.0), _PI / 3, 16.0, 16.0, 2.0),
            "DΛ-D-1 with Ω=16, δ1=δ3=16, δ4=2, Φ=±π/3, initial |B>_Λ; CPT basis",
            initial="B_L",
            basis="cpt",
            table=_dlambda_d1_table,
        ),
        "fig5": _entry(
            _diamond((10.0, 20.0, 30.0, 40.0), _PI / 2),
            "Ω=(10,20,30,40), all δ=0, Φ=±π/2, initial |1>; phase symmetry without dark states",
        ),
    }
)

_ALIASES = PKDict({"DΛ": "DLambda", "Δ": "Delta", "Φ": "Phi"})


class Preset(PKDict):
    """Drive config plus named states and measurement bases

    Keys: name, config, anchor, initial, basis, coherence, states, bases.
    ``bases`` maps a basis name to PKDict(labels, vectors).
    """

    def basis_vectors(self, name=None):
        return self._basis(name).vectors

    def basis_labels(self, name=None):
        return self._basis(name).labels

    def initial_state(self):
        return self.state(self.initial)

    def state(self, name):
        if name not in self.states:
            raise InvalidDriveInputError(
                f"state={name} not defined for {self.name}; valid: {', '.join(self.states)}"
            )
        return self.states[name]

    def _basis(self, name):
        n = name or self.basis
        if n not in self.bases:
            raise InvalidDriveInputError(
                f"basis={n} not defined for {self.name}; valid: {', '.join(self.bases)}"
            )
        return self.bases[n]


def bases(config, table=None):
    """Named orthonormal measurement bases available for a drive"""
    n = model.build(config).dim
    res = PKDict(
        natural=PKDict(
            labels=[str(i + 1) for i in range(n)],
            vectors=operator.natural_basis(n),
        )
    )
    b = _cpt(config)
    if b:
        res.cpt = PKDict(
            labels=["B_L", "2", "D_L", "4"][:n],
            vectors=b.vectors(),
        )
    if table and "B1" in table:
        k = ["D", "B1", "B2", "B3"][:n]
        res.table1 = PKDict(labels=k, vectors=[table[x] for x in k])
    return res


def canonical_name(name):
    """Accept the ASCII spelling (Delta-D-1, DLambda-0Phi-2) of a case name"""
    if name in _CATALOG:
        return name
    for k in _CATALOG:
        a = k
        for g, s in _ALIASES.items():
            a = a.replace(g, s)
        if a.lower() == str(name).lower():
            return k
    raise InvalidDriveInputError(
        f"unknown preset={name}; valid presets: {', '.join(_CATALOG)}"
    )


def named_states(config, table=None):
    """Natural kets, CPT or double-dark states, plus any tabulated states"""
    n = model.build(config).dim
    res = PKDict()
    for i, v in enumerate(operator.natural_basis(n)):
        res[str(i + 1)] = v
    b = _cpt(config)
    if b:
        res.B_L = b.bright
        res.D_L = b.dark
    if config.topology == "double_lambda_alt":
        d = cpt.double_dark_basis(config.params)
        res.B_DL = d.bright
        res.D1_DL = d.dark1
        res.D2_DL = d.dark2
    if table:
        res.update(table)
    return res


def names():
    return list(_CATALOG.keys())


def preset(name):
    """Case or figure preset by name

    Args:
        name (str): catalog name, Greek or ASCII spelling
    Returns:
        Preset: config, anchor text, named states and bases
    """
    n = canonical_name(name)
    e = _CATALOG[n]
    c = DriveConfig.from_params(e.topology, e.params.copy(), label=n)
    t = PKDict({k: StateVector(v, normalize=True) for k, v in e.table().items()}) if e.table else None
    return Preset(
        name=n,
        config=c,
        anchor=e.anchor,
        initial=e.initial,
        basis=e.basis,
        coherence=e.coherence,
        states=named_states(c, t),
        bases=bases(c, t),
    )


def _cpt(config):
    p = config.params
    if config.topology not in ("triangle", "diamond") or math.hypot(p.omega_12, p.omega_23) == 0.0:
        return None
    if config.topology == "triangle":
        return cpt.CptBasis3(p.omega_12, p.omega_23)
    return cpt.CptBasis4(p.omega_12, p.omega_23)
