"""Builders for every checked identity, one (tag, lhs, rhs) triple per equation.

Formulas are transcribed in classical order: ``P(f, g, h)`` is f∘g∘h with h
applied first, a tuple inside a stage is a tensor product of blocks.  Reports
refer to equations by these tags, so the tags are part of the tool's output
contract.
"""

from __future__ import annotations

from typing import Sequence

from .category import braiding, convolution, convolution_unit, unit_map
from .linmap import LinMap, compose as C, identity, pipeline as P, tensor as T
from .structures import (
    LEFT,
    HopfQuasigroupData,
    QuasimoduleAction,
    diagonal_action,
    tensor_delta,
    tensor_eps,
    tensor_eta,
    tensor_mu,
)

Equation = tuple[str, LinMap, LinMap]


def _parts(s: HopfQuasigroupData):
    i = identity(s.field, (s.obj,))
    c = braiding(s.field, s.obj, s.obj)
    return i, c


# ---------------------------------------------------------------------------
# single-structure axiom systems


def unital_magma_equations(s: HopfQuasigroupData) -> list[Equation]:
    i, _ = _parts(s)
    return [
        ("unit-r", P(s.mu, (i, s.eta)), i),
        ("unit-l", P(s.mu, (s.eta, i)), i),
    ]


def comonoid_equations(s: HopfQuasigroupData) -> list[Equation]:
    i, _ = _parts(s)
    return [
        ("counit-l", P((s.eps, i), s.delta), i),
        ("counit-r", P((i, s.eps), s.delta), i),
        ("coassoc", P((s.delta, i), s.delta), P((i, s.delta), s.delta)),
    ]


def bimonoid_equations(s: HopfQuasigroupData) -> list[Equation]:
    i, _ = _parts(s)
    return [
        ("eta-eps", C(s.eps, s.eta), unit_map(s.field)),
        ("mu-eps", C(s.eps, s.mu), T(s.eps, s.eps)),
        ("delta-eta", C(s.delta, s.eta), T(s.eta, s.eta)),
        ("delta-mu", C(s.delta, s.mu), P((s.mu, s.mu), tensor_delta((s, s)))),
    ]


def hopf_equations(s: HopfQuasigroupData) -> list[Equation]:
    i, _ = _parts(s)
    left_unit = T(s.eps, i)
    right_unit = T(i, s.eps)
    conv_unit = convolution_unit(s.eps, s.eta)
    return [
        ("lH1", P(s.mu, (s.lam, s.mu), (s.delta, i)), left_unit),
        ("lH2", P(s.mu, (i, s.mu), (i, s.lam, i), (s.delta, i)), left_unit),
        ("rH1", P(s.mu, (s.mu, i), (i, s.lam, i), (i, s.delta)), right_unit),
        ("rH2", P(s.mu, (s.mu, s.lam), (i, s.delta)), right_unit),
        ("1-conv", convolution(s.lam, i, s.delta, s.mu), conv_unit),
        ("2-conv", convolution(i, s.lam, s.delta, s.mu), conv_unit),
    ]


def antipode_equations(s: HopfQuasigroupData) -> list[Equation]:
    i, c = _parts(s)
    return [
        ("antimu", C(s.lam, s.mu), P(s.mu, (s.lam, s.lam), c)),
        ("anticm", C(s.delta, s.lam), P((s.lam, s.lam), c, s.delta)),
        ("inv-eta", C(s.lam, s.eta), s.eta),
        ("inv-eps", C(s.eps, s.lam), s.eps),
    ]


def flag_equations(s: HopfQuasigroupData) -> list[Equation]:
    i, c = _parts(s)
    return [
        ("assoc", P(s.mu, (s.mu, i)), P(s.mu, (i, s.mu))),
        ("coassoc", P((s.delta, i), s.delta), P((i, s.delta), s.delta)),
        ("comm", s.mu, C(s.mu, c)),
        ("cocomm", s.delta, C(c, s.delta)),
    ]


def morphism_equations(f: LinMap, src: HopfQuasigroupData, dst: HopfQuasigroupData) -> list[Equation]:
    return [
        ("mor-eta", C(f, src.eta), dst.eta),
        ("mor-mu", C(f, src.mu), P(dst.mu, (f, f))),
        ("mor-eps", C(dst.eps, f), src.eps),
        ("mor-delta", C(dst.delta, f), P((f, f), src.delta)),
        ("antipode-morphism", C(dst.lam, f), C(f, src.lam)),
    ]


# ---------------------------------------------------------------------------
# quasimodules


def quasimodule_equations(act: QuasimoduleAction) -> list[Equation]:
    h = act.hopf
    ih, _ = _parts(h)
    im = identity(h.field, (act.module_obj,))
    if act.side == LEFT:
        return [
            ("uq", P(act.phi, (h.eta, im)), im),
            (
                "pq1",
                P(act.phi, (ih, act.phi), (C(T(ih, h.lam), h.delta), im)),
                T(h.eps, im),
            ),
            ("pq2", P(act.phi, (h.lam, act.phi), (h.delta, im)), T(h.eps, im)),
        ]
    return [
        ("uq", P(act.phi, (im, h.eta)), im),
        (
            "pq1",
            P(act.phi, (act.phi, ih), (im, C(T(h.lam, ih), h.delta))),
            T(im, h.eps),
        ),
        ("pq2", P(act.phi, (act.phi, h.lam), (im, h.delta)), T(im, h.eps)),
    ]


def module_equations(act: QuasimoduleAction) -> list[Equation]:
    h = act.hopf
    ih, _ = _parts(h)
    im = identity(h.field, (act.module_obj,))
    if act.side == LEFT:
        return [
            ("uq", P(act.phi, (h.eta, im)), im),
            ("pqmod", P(act.phi, (ih, act.phi)), P(act.phi, (h.mu, im))),
        ]
    return [
        ("uq", P(act.phi, (im, h.eta)), im),
        ("pqmod", P(act.phi, (act.phi, ih)), P(act.phi, (im, h.mu))),
    ]


def quasimodule_magma_equations(act: QuasimoduleAction) -> list[Equation]:
    h = act.hopf
    m = act.module_structure
    ih = identity(h.field, (h.obj,))
    diag = diagonal_action(act)
    if act.side == LEFT:
        return [
            ("etaq", P(act.phi, (ih, m.eta)), T(h.eps, m.eta)),
            ("muq", C(m.mu, diag), P(act.phi, (ih, m.mu))),
        ]
    return [
        ("etaq", P(act.phi, (m.eta, ih)), T(m.eta, h.eps)),
        ("muq", C(m.mu, diag), P(act.phi, (m.mu, ih))),
    ]


def quasimodule_comonoid_equations(act: QuasimoduleAction) -> list[Equation]:
    h = act.hopf
    m = act.module_structure
    ih = identity(h.field, (h.obj,))
    diag = diagonal_action(act)
    if act.side == LEFT:
        return [
            ("eq", C(m.eps, act.phi), T(h.eps, m.eps)),
            ("dq", C(m.delta, act.phi), P(diag, (ih, m.delta))),
        ]
    return [
        ("eq", C(m.eps, act.phi), T(m.eps, h.eps)),
        ("dq", C(m.delta, act.phi), P(diag, (m.delta, ih))),
    ]


QUASIMODULE_LEVELS = ("quasimodule", "module", "quasimodule-magma", "quasimodule-comonoid")


def quasimodule_level_equations(act: QuasimoduleAction, level: str) -> list[Equation]:
    if level == "quasimodule":
        return quasimodule_equations(act)
    if level == "module":
        return module_equations(act)
    if level == "quasimodule-magma":
        return quasimodule_equations(act) + quasimodule_magma_equations(act)
    if level == "quasimodule-comonoid":
        return quasimodule_equations(act) + quasimodule_comonoid_equations(act)
    raise ValueError(f"unknown quasimodule level {level!r}; expected one of {QUASIMODULE_LEVELS}")


# ---------------------------------------------------------------------------
# distributive laws


def _dl_parts(h: HopfQuasigroupData, a: HopfQuasigroupData):
    ih = identity(h.field, (h.obj,))
    ia = identity(a.field, (a.obj,))
    return ih, ia


def distributive_law_equations(h, a, psi) -> list[Equation]:
    ih, ia = _dl_parts(h, a)
    return [
        (
            "dl1",
            P(psi, (ih, a.mu), (h.lam, a.lam, ia)),
            P((a.mu, ih), (ia, psi), (psi, ia), (h.lam, a.lam, ia)),
        ),
        (
            "dl2",
            P(psi, (h.mu, ia), (ih, h.lam, a.lam)),
            P((ia, h.mu), (psi, ih), (ih, psi), (ih, h.lam, a.lam)),
        ),
        ("dl3", P(psi, (ih, a.eta)), T(a.eta, ih)),
        ("dl4", P(psi, (h.eta, ia)), T(ia, h.eta)),
    ]


def strong_form_equations(h, a, psi) -> list[Equation]:
    ih, ia = _dl_parts(h, a)
    return [
        ("dl1-1", P(psi, (ih, a.mu)), P((a.mu, ih), (ia, psi), (psi, ia))),
        ("dl2-1", P(psi, (h.mu, ia)), P((ia, h.mu), (psi, ih), (ih, psi))),
    ]


def hybrid_dl2_equation(h, a, psi) -> Equation:
    # the antipode-on-H-only variant of dl2 satisfied by smash-type laws
    ih, ia = _dl_parts(h, a)
    return (
        "dl21",
        P(psi, (h.mu, ia), (ih, h.lam, ia)),
        P((ia, h.mu), (psi, ih), (ih, psi), (ih, h.lam, ia)),
    )


def comonoidal_equations(h, a, psi) -> list[Equation]:
    return [
        ("cdl1", C(tensor_delta((a, h)), psi), P((psi, psi), tensor_delta((h, a)))),
        ("cdl2", P(T(a.eps, h.eps), psi), T(h.eps, a.eps)),
    ]


def a_comonoidal_equations(h, a, psi) -> list[Equation]:
    ih, ia = _dl_parts(h, a)
    lam_delta_h1 = C(T(h.lam, ih), h.delta)
    lam_delta_h2 = C(T(ih, h.lam), h.delta)
    lam_delta_a1 = C(T(a.lam, ia), a.delta)
    lam_delta_a2 = C(T(ia, a.lam), a.delta)
    rhs_h = T(h.eps, ia, ih)
    rhs_a = T(ia, ih, a.eps)
    return [
        ("adl1", P((ia, h.mu), (psi, h.mu), (ih, psi, ih), (lam_delta_h1, ia, ih)), rhs_h),
        ("adl2", P((ia, h.mu), (psi, h.mu), (ih, psi, ih), (lam_delta_h2, ia, ih)), rhs_h),
        ("adl3", P((a.mu, ih), (a.mu, psi), (ia, psi, ia), (ia, ih, lam_delta_a1)), rhs_a),
        ("adl4", P((a.mu, ih), (a.mu, psi), (ia, psi, ia), (ia, ih, lam_delta_a2)), rhs_a),
    ]


def l_con_equation(h, a, psi) -> Equation:
    ih, ia = _dl_parts(h, a)
    return ("l-con", P((a.eps, ih), psi), T(ih, a.eps))


def cesp3_equation(h, a, psi) -> Equation:
    ih, ia = _dl_parts(h, a)
    return ("cesp3", P(psi, (ih, a.lam)), P((a.lam, ih), psi))


def r_smash_equation(h, a, psi) -> Equation:
    ih, ia = _dl_parts(h, a)
    c_ah = braiding(h.field, a.obj, h.obj)
    return (
        "r-smash",
        P((ia, h.eps), psi, c_ah, (ia, h.lam), psi),
        T(h.eps, ia),
    )


# ---------------------------------------------------------------------------
# skew pairings


def skew_pairing_equations(a, h, tau, tau_inv) -> list[Equation]:
    ih, ia = _dl_parts(h, a)
    c_ah = braiding(h.field, a.obj, h.obj)
    c_aa = braiding(h.field, a.obj, a.obj)
    c_hh = braiding(h.field, h.obj, h.obj)
    delta_ah = tensor_delta((a, h))
    k_unit = unit_map(h.field)
    conv_unit = T(a.eps, h.eps)
    return [
        (
            "skw1",
            P(tau, (a.mu, ih)),
            P((tau, tau), (ia, c_ah, ih), (ia, ia, h.delta)),
        ),
        (
            "skw2",
            P(tau, (ia, h.mu)),
            P((tau, tau), (ia, c_ah, ih), (C(c_aa, a.delta), ih, ih)),
        ),
        ("skw3", P(tau, (ia, h.eta)), a.eps),
        ("skw4", P(tau, (a.eta, ih)), h.eps),
        (
            "skw5",
            P(tau_inv, (ia, h.mu)),
            P((tau_inv, tau_inv), (ia, c_ah, ih), (a.delta, ih, ih)),
        ),
        (
            "skw6",
            P(tau_inv, (a.mu, ih)),
            P((tau_inv, tau_inv), (ia, c_ah, ih), (ia, ia, C(c_hh, h.delta))),
        ),
        ("tau-conv1", convolution(tau, tau_inv, delta_ah, k_unit), conv_unit),
        ("tau-conv2", convolution(tau_inv, tau, delta_ah, k_unit), conv_unit),
        ("tau-inv", tau, P(tau_inv, (ia, h.lam))),
    ]


# ---------------------------------------------------------------------------
# double cross products


def double_cross_equations(h, a, phi_a, phi_h, psi) -> list[Equation]:
    ih, ia = _dl_parts(h, a)
    c_ah = braiding(h.field, a.obj, h.obj)
    psi_ll = C(psi, T(h.lam, a.lam))
    return [
        ("d1", P(phi_a, (ih, a.eta)), T(h.eps, a.eta)),
        ("d2", P(phi_h, (h.eta, ia)), T(h.eta, a.eps)),
        ("d3", P((phi_h, phi_a), tensor_delta((h, a))), C(c_ah, psi)),
        (
            "d4",
            P(phi_a, (ih, a.mu), (h.lam, a.lam, ia)),
            P(a.mu, (ia, phi_a), (psi_ll, ia)),
        ),
        (
            "d5",
            P(h.mu, (phi_h, h.mu), (h.lam, psi, ih), (h.delta, ia, ih)),
            T(h.eps, a.eps, ih),
        ),
        (
            "d6",
            P(h.mu, (phi_h, h.mu), (ih, psi, ih), (C(T(ih, h.lam), h.delta), ia, ih)),
            T(h.eps, a.eps, ih),
        ),
        (
            "d7",
            P(phi_h, (h.mu, ia), (ih, h.lam, a.lam)),
            P(h.mu, (phi_h, ih), (ih, psi_ll)),
        ),
        (
            "d8",
            P(a.mu, (a.mu, phi_a), (ia, psi, a.lam), (ia, ih, a.delta)),
            T(ia, h.eps, a.eps),
        ),
        (
            "d9",
            P(a.mu, (a.mu, phi_a), (ia, psi, ia), (ia, ih, C(T(a.lam, ia), a.delta))),
            T(ia, h.eps, a.eps),
        ),
    ]


# ---------------------------------------------------------------------------
# smash / two-action / twisted-smash side conditions


def cesp1_equation(act: QuasimoduleAction, tag: str = "cesp1") -> Equation:
    h = act.hopf
    ih = identity(h.field, (h.obj,))
    ia = identity(h.field, (act.module_obj,))
    c_hh = braiding(h.field, h.obj, h.obj)
    return (
        tag,
        P((ih, act.phi), (C(c_hh, h.delta), ia)),
        P((ih, act.phi), (h.delta, ia)),
    )


def cesp2_equation(act: QuasimoduleAction, tag: str = "cesp2") -> Equation:
    h = act.hopf
    ih = identity(h.field, (h.obj,))
    ia = identity(h.field, (act.module_obj,))
    return (
        tag,
        P(act.phi, (ih, C(act.phi, T(h.lam, ia)))),
        P(act.phi, (C(h.mu, T(ih, h.lam)), ia)),
    )


def cesp4_equation(phi: QuasimoduleAction, phi_hat: QuasimoduleAction, tag: str = "cesp4") -> Equation:
    h = phi.hopf
    ih = identity(h.field, (h.obj,))
    ia = identity(h.field, (phi.module_obj,))
    c_hh = braiding(h.field, h.obj, h.obj)
    return (
        tag,
        P(phi_hat.phi, (ih, phi.phi)),
        P(phi.phi, (ih, phi_hat.phi), (c_hh, ia)),
    )


def two_action_internal_equations(h, a, phi, t_map, gamma) -> list[Equation]:
    """Consistency identities satisfied by T and Γ of the two-action recipe."""
    ih, ia = _dl_parts(h, a)
    c_ha = braiding(h.field, h.obj, a.obj)
    c_hh = braiding(h.field, h.obj, h.obj)
    return [
        (
            "R3",
            C(T(ia, h.delta), t_map),
            P((t_map, ih), (ih, c_ha), (h.delta, ia)),
        ),
        (
            "R4",
            C(t_map, T(ih, phi)),
            P((phi, ih), (ih, t_map), (c_hh, ia)),
        ),
        (
            "R5",
            P((c_ha, ih), (ih, t_map), (h.delta, ia)),
            P((t_map, ih), (ih, c_ha), (h.delta, ia)),
        ),
        (
            "R6",
            C(T(a.delta, ih), t_map),
            P((ia, t_map), (t_map, ia), (ih, a.delta)),
        ),
        (
            "R7",
            C(T(a.delta, ih), gamma),
            P((ia, gamma), (gamma, ia), (ih, a.delta)),
        ),
    ]


def biquasimodule_equations(phi: QuasimoduleAction, phi_right: QuasimoduleAction) -> list[Equation]:
    """Compatibility of a left action with a right action on the same module."""
    h = phi.hopf
    ih = identity(h.field, (h.obj,))
    ia = identity(h.field, (phi.module_obj,))
    c_hh = braiding(h.field, h.obj, h.obj)
    lam_cd = C(T(h.lam, ih), c_hh, h.delta)
    lam_d = C(T(h.lam, ih), h.delta)
    return [
        ("61", P(phi.phi, (ih, phi_right.phi)), P(phi_right.phi, (phi.phi, ih))),
        (
            "62",
            P(phi_right.phi, (C(phi_right.phi, T(ia, h.lam)), ih)),
            P(phi_right.phi, (ia, C(h.mu, T(h.lam, ih)))),
        ),
        (
            "65",
            P((phi_right.phi, ih), (ia, lam_cd)),
            P((phi_right.phi, ih), (ia, lam_d)),
        ),
    ]
