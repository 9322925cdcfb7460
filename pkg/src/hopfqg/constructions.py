"""Builders for the concrete structures: loop and group algebras, the
4-dimensional Taft algebra, skew pairings and their distributive law, double
cross products, smash products, two-action laws, and twisted smash products.

Builders with preconditions verify them exactly and raise PreconditionError
carrying the failing report; the returned DistLaw keeps the full verification
report in its ``provenance`` field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import equations as eq
from .category import braiding
from .checks import check_quasimodule
from .distlaw import DistLaw
from .fields import QQ, FieldSpec, PrimeField
from .linmap import LinMap, Obj, compose as C, identity, pipeline as P, tensor as T
from .loops import FiniteLoop, NotIPLoopError, check_ip_loop, group_inverses
from .reports import AxiomEntry, AxiomReport, compare_maps, evaluate
from .structures import HopfQuasigroupData, QuasimoduleAction, tensor_delta


class CharTwoError(ValueError):
    pass


class PreconditionError(ValueError):
    """A builder's exact preconditions failed; carries the offending report."""

    def __init__(self, what: str, report: AxiomReport) -> None:
        self.report = report
        tags = ", ".join(e.name for e in report.failures())
        super().__init__(f"{what}: failing equations: {tags}")


# ---------------------------------------------------------------------------
# algebras from loops


def loop_algebra(loop: FiniteLoop, field: FieldSpec = QQ, name: Optional[str] = None) -> HopfQuasigroupData:
    """The loop algebra of an IP loop: basis the loop, group-like coproduct,
    antipode u ↦ u⁻¹."""
    ip = check_ip_loop(loop)
    if not ip.passed:
        raise NotIPLoopError(f"{loop.name} is not an IP loop: {ip.witness}")
    obj = Obj(name or loop.name, loop.elements)
    one = field.one()
    n = loop.order
    return HopfQuasigroupData(
        obj=obj,
        eta=LinMap(field, (), (obj,), {(): {(loop.identity,): one}}),
        mu=LinMap(
            field,
            (obj, obj),
            (obj,),
            {(i, j): {(loop.mul(i, j),): one} for i in range(n) for j in range(n)},
        ),
        eps=LinMap(field, (obj,), (), {(i,): {(): one} for i in range(n)}),
        delta=LinMap(field, (obj,), (obj, obj), {(i,): {(i, i): one} for i in range(n)}),
        lam=LinMap(field, (obj,), (obj,), {(i,): {(ip.inverses[i],): one} for i in range(n)}),
    )


def group_algebra(group: FiniteLoop, field: FieldSpec = QQ, name: Optional[str] = None) -> HopfQuasigroupData:
    """loop_algebra of a group; associativity of the table is verified first."""
    group_inverses(group)  # raises NotAGroupError with a witness triple
    return loop_algebra(group, field, name)


def taft_h4(field: FieldSpec = QQ) -> HopfQuasigroupData:
    """The 4-dimensional Taft Hopf algebra on {1, x, y, w = xy}.

    Requires a coefficient field of characteristic ≠ 2.
    """
    if isinstance(field, PrimeField) and field.p == 2:
        raise CharTwoError("the 4-dimensional Taft algebra needs characteristic != 2")
    obj = Obj("H4", ("1", "x", "y", "w"))
    one = field.one()
    neg = field.neg(one)
    U, X, Y, W = 0, 1, 2, 3
    mu_entries = {
        (U, U): {(U,): one},
        (U, X): {(X,): one},
        (U, Y): {(Y,): one},
        (U, W): {(W,): one},
        (X, U): {(X,): one},
        (Y, U): {(Y,): one},
        (W, U): {(W,): one},
        (X, X): {(U,): one},
        (X, Y): {(W,): one},
        (X, W): {(Y,): one},
        (Y, X): {(W,): neg},
        (W, X): {(Y,): neg},
        # y·y = y·w = w·y = w·w = 0
    }
    delta_entries = {
        (U,): {(U, U): one},
        (X,): {(X, X): one},
        (Y,): {(Y, X): one, (U, Y): one},
        (W,): {(W, U): one, (X, W): one},
    }
    return HopfQuasigroupData(
        obj=obj,
        eta=LinMap(field, (), (obj,), {(): {(U,): one}}),
        mu=LinMap(field, (obj, obj), (obj,), mu_entries),
        eps=LinMap(field, (obj,), (), {(U,): {(): one}, (X,): {(): one}}),
        delta=LinMap(field, (obj,), (obj, obj), delta_entries),
        lam=LinMap(
            field,
            (obj,),
            (obj,),
            {(U,): {(U,): one}, (X,): {(X,): one}, (Y,): {(W,): one}, (W,): {(Y,): neg}},
        ),
    )


# ---------------------------------------------------------------------------
# skew pairings


@dataclass(frozen=True)
class SkewPairing:
    """A bilinear form τ: A⊗H → K; semantic validity is check_skew_pairing's verdict."""

    a: HopfQuasigroupData
    h: HopfQuasigroupData
    tau: LinMap

    def __post_init__(self) -> None:
        if self.tau.domain != (self.a.obj, self.h.obj) or self.tau.codomain != ():
            raise ValueError("tau must map A⊗H to the unit object")


def tau_inverse(p: SkewPairing) -> LinMap:
    """The convolution inverse τ⁻¹ = τ∘(λ_A⊗H)."""
    ih = identity(p.h.field, (p.h.obj,))
    return P(p.tau, (p.a.lam, ih))


def check_skew_pairing(p: SkewPairing) -> AxiomReport:
    """skw1-skw4, plus the τ⁻¹ identities skw5, skw6 and both convolution
    inverse laws for τ⁻¹ = τ∘(λ_A⊗H)."""
    return evaluate(eq.skew_pairing_equations(p.a, p.h, p.tau, tau_inverse(p)))


def example_tau(field: FieldSpec = QQ) -> SkewPairing:
    """The pairing of the Chein-double/Taft example: τ(σᵢu^α ⊗ 1) = 1,
    τ(σᵢu^α ⊗ x) = (-1)^α, τ(σᵢu^α ⊗ y) = τ(σᵢu^α ⊗ w) = 0."""
    from .loops import chein_double, symmetric_s3

    loop = chein_double(symmetric_s3())
    a = loop_algebra(loop, field)
    h = taft_h4(field)
    one = field.one()
    half = loop.order // 2
    entries = {}
    for i in range(loop.order):
        alpha = i // half
        entries[(i, 0)] = {(): one}
        entries[(i, 1)] = {(): one if alpha == 0 else field.neg(one)}
    return SkewPairing(a, h, LinMap(field, (a.obj, h.obj), (), entries))


def psi_from_skew_pairing(p: SkewPairing) -> DistLaw:
    """Ψ = (τ⊗A⊗H⊗τ⁻¹) ∘ (A⊗H⊗δ_{A⊗H}) ∘ δ_{A⊗H} ∘ c_{H,A}."""
    a, h = p.a, p.h
    f = a.field
    ia = identity(f, (a.obj,))
    ih = identity(f, (h.obj,))
    d_ah = tensor_delta((a, h))
    taui = tau_inverse(p)
    psi = P((p.tau, ia, ih, taui), (ia, ih, d_ah), d_ah, braiding(f, h.obj, a.obj))
    return DistLaw(h, a, psi)


# ---------------------------------------------------------------------------
# double cross products


@dataclass
class ActionBundle:
    """The named actions a recipe consumes; unused slots stay None."""

    phi_a: Optional[QuasimoduleAction] = None  # left action of H on A
    phi_a_hat: Optional[QuasimoduleAction] = None  # second left action of H on A
    phi_h: Optional[QuasimoduleAction] = None  # right action of A on H
    phi_a_right: Optional[QuasimoduleAction] = None  # right action of H on A
    report: Optional[AxiomReport] = None


def skew_pairing_actions(p: SkewPairing) -> ActionBundle:
    """The module actions induced by a skew pairing:
    φ_A(h⊗a) = τ(a₁⊗h₁) a₂ τ⁻¹(a₃⊗h₂) and φ_H(h⊗a) = τ(a₁⊗h₁) h₂ τ⁻¹(a₂⊗h₃).

    The bundle's report verifies the module-comonoid level of both actions.
    """
    a, h = p.a, p.h
    f = a.field
    ia = identity(f, (a.obj,))
    ih = identity(f, (h.obj,))
    d_ah = tensor_delta((a, h))
    c_ha = braiding(f, h.obj, a.obj)
    taui = tau_inverse(p)
    phi_a = P((p.tau, ia, taui), (ia, ih, a.delta, ih), d_ah, c_ha)
    phi_h = P(
        (p.tau, ih, taui),
        (ia, ih, braiding(f, a.obj, h.obj), ih),
        (ia, ih, ia, h.delta),
        d_ah,
        c_ha,
    )
    act_a = QuasimoduleAction(hopf=h, module=a, phi=phi_a, side="left")
    act_h = QuasimoduleAction(hopf=a, module=h, phi=phi_h, side="right")
    entries = []
    for label, act in (("phi-a", act_a), ("phi-h", act_h)):
        for level in ("module", "quasimodule-comonoid"):
            rep = check_quasimodule(act, level)
            entries.extend(
                AxiomEntry(f"{e.name}[{label}]", e.passed, e.witness, e.lhs, e.rhs)
                for e in rep.entries
            )
    return ActionBundle(phi_a=act_a, phi_h=act_h, report=AxiomReport(tuple(entries)))


def double_cross_psi(b: ActionBundle) -> DistLaw:
    """Ψ = (φ_A⊗φ_H) ∘ δ_{H⊗A} from a left action on A and a right action on H."""
    if b.phi_a is None or b.phi_h is None:
        raise ValueError("double cross product needs phi_a (left) and phi_h (right)")
    h = b.phi_a.hopf
    a = b.phi_a.module_structure
    psi = P((b.phi_a.phi, b.phi_h.phi), tensor_delta((h, a)))
    return DistLaw(h, a, psi)


def check_double_cross(b: ActionBundle) -> AxiomReport:
    """The nine double-cross-product conditions d1-d9.

    When all nine pass, the induced Ψ is cross-checked to be an a-comonoidal
    distributive law (dl, cdl and adl entries are appended to the report).
    """
    from .distlaw import check_a_comonoidal, check_comonoidal, check_distributive_law

    d = double_cross_psi(b)
    h, a = d.h, d.a
    entries = list(
        evaluate(eq.double_cross_equations(h, a, b.phi_a.phi, b.phi_h.phi, d.psi)).entries
    )
    if all(e.passed for e in entries):
        for rep in (check_distributive_law(d), check_comonoidal(d), check_a_comonoidal(d)):
            entries.extend(rep.entries)
    return AxiomReport(tuple(entries))


# ---------------------------------------------------------------------------
# smash products


def smash_form(act: QuasimoduleAction) -> LinMap:
    """The raw smash map (φ_A⊗H) ∘ (H⊗c_{H,A}) ∘ (δ_H⊗A); no checks."""
    h = act.hopf
    f = h.field
    ih = identity(f, (h.obj,))
    ia = identity(f, (act.module_obj,))
    return P((act.phi, ih), (ih, braiding(f, h.obj, act.module_obj)), (h.delta, ia))


def _action_precondition_entries(act: QuasimoduleAction, suffix: str = "") -> list[AxiomEntry]:
    eqs = (
        eq.quasimodule_equations(act)
        + eq.quasimodule_magma_equations(act)
        + eq.quasimodule_comonoid_equations(act)
        + [eq.cesp1_equation(act), eq.cesp2_equation(act)]
    )
    rep = evaluate(eqs)
    if not suffix:
        return list(rep.entries)
    return [AxiomEntry(f"{e.name}[{suffix}]", e.passed, e.witness, e.lhs, e.rhs) for e in rep.entries]


def smash_psi(act: QuasimoduleAction) -> DistLaw:
    """The smash law Ψ from a left quasimodule magma-comonoid action that
    satisfies cesp1 and cesp2.

    The provenance report also verifies the strong form dl1-1, the hybrid
    dl21, dl3, dl4, comonoidality, l-con and cesp3.
    """
    if act.side != "left":
        raise ValueError("smash_psi expects a left action")
    h = act.hopf
    a = act.module_structure
    pre = _action_precondition_entries(act)
    if not all(e.passed for e in pre):
        raise PreconditionError("smash action preconditions failed", AxiomReport(tuple(pre)))
    psi = smash_form(act)
    d = DistLaw(h, a, psi)
    derived = eq.strong_form_equations(h, a, psi)[:1]
    derived.append(eq.hybrid_dl2_equation(h, a, psi))
    derived.extend(eq.distributive_law_equations(h, a, psi)[2:])
    derived.extend(eq.comonoidal_equations(h, a, psi))
    derived.append(eq.l_con_equation(h, a, psi))
    derived.append(eq.cesp3_equation(h, a, psi))
    d.provenance = AxiomReport(tuple(pre) + evaluate(derived).entries)
    return d


def check_r_smash_condition(d: DistLaw) -> AxiomReport:
    """The extra condition characterizing R-smash product Hopf quasigroups:
    (A⊗ε_H)∘R∘c_{A,H}∘(A⊗λ_H)∘R = ε_H⊗A."""
    return evaluate([eq.r_smash_equation(d.h, d.a, d.psi)])


# ---------------------------------------------------------------------------
# two-action laws and twisted smash products


def gamma_two_actions(phi: QuasimoduleAction, phi_hat: QuasimoduleAction) -> DistLaw:
    """Γ = (φ_A⊗H) ∘ (H⊗T) ∘ (δ_H⊗A) with T the smash map of φ̂_A.

    Both actions must be left quasimodule magma-comonoid actions of the same
    H on the same A satisfying cesp1 and cesp2, and jointly cesp4; the
    provenance report also verifies the internal identities R3-R7.
    """
    if phi.side != "left" or phi_hat.side != "left":
        raise ValueError("gamma_two_actions expects two left actions")
    if phi.hopf is not phi_hat.hopf and phi.hopf != phi_hat.hopf:
        raise ValueError("the two actions must share the acting structure")
    if phi.module_obj != phi_hat.module_obj:
        raise ValueError("the two actions must share the module")
    h = phi.hopf
    a = phi.module_structure
    pre = _action_precondition_entries(phi, "phi") + _action_precondition_entries(phi_hat, "phi-hat")
    pre.extend(evaluate([eq.cesp4_equation(phi, phi_hat)]).entries)
    if not all(e.passed for e in pre):
        raise PreconditionError("two-action preconditions failed", AxiomReport(tuple(pre)))
    f = h.field
    ih = identity(f, (h.obj,))
    ia = identity(f, (a.obj,))
    t_map = smash_form(phi_hat)
    gamma = P((phi.phi, ih), (ih, t_map), (h.delta, ia))
    d = DistLaw(h, a, gamma)
    internal = evaluate(eq.two_action_internal_equations(h, a, phi.phi, t_map, gamma))
    d.provenance = AxiomReport(tuple(pre) + internal.entries)
    return d


def twisted_hat_action(phi_right: QuasimoduleAction) -> QuasimoduleAction:
    """The left action φ̂_A = φ_A-right ∘ (A⊗λ_H) ∘ c_{H,A} induced by a right action."""
    h = phi_right.hopf
    f = h.field
    ih = identity(f, (h.obj,))
    ia = identity(f, (phi_right.module_obj,))
    phi_hat = P(phi_right.phi, (ia, h.lam), braiding(f, h.obj, phi_right.module_obj))
    return QuasimoduleAction(hopf=h, module=phi_right.module, phi=phi_hat, side="left")


def twisted_smash_gamma(phi: QuasimoduleAction, phi_right: QuasimoduleAction) -> DistLaw:
    """The twisted-smash law Γ = (φ_r⊗H) ∘ (A⊗((λ_H⊗H)∘c_{H,H}∘δ_H)) ∘ (φ_A⊗H)
    ∘ (H⊗c_{H,A}) ∘ (δ_H⊗A) for a biquasimodule (φ left, φ_r right).

    Preconditions: both actions are quasimodule magma-comonoid actions and
    the compatibilities 61, cesp2, 62, cesp1, 65 hold.  The provenance report
    asserts that Γ equals gamma_two_actions(φ, φ̂) for φ̂ = φ_r∘(A⊗λ_H)∘c_{H,A}
    (entry "gamma-eq").
    """
    if phi.side != "left" or phi_right.side != "right":
        raise ValueError("twisted smash expects a left action and a right action")
    if phi.module_obj != phi_right.module_obj:
        raise ValueError("both actions must act on the same module")
    h = phi.hopf
    a = phi.module_structure
    f = h.field
    ih = identity(f, (h.obj,))
    ia = identity(f, (a.obj,))
    level_eqs = (
        eq.quasimodule_equations(phi)
        + eq.quasimodule_magma_equations(phi)
        + eq.quasimodule_comonoid_equations(phi)
    )
    pre = [
        AxiomEntry(f"{e.name}[phi]", e.passed, e.witness, e.lhs, e.rhs)
        for e in evaluate(level_eqs).entries
    ]
    level_r = (
        eq.quasimodule_equations(phi_right)
        + eq.quasimodule_magma_equations(phi_right)
        + eq.quasimodule_comonoid_equations(phi_right)
    )
    pre += [
        AxiomEntry(f"{e.name}[phi-r]", e.passed, e.witness, e.lhs, e.rhs)
        for e in evaluate(level_r).entries
    ]
    compat = eq.biquasimodule_equations(phi, phi_right)
    compat.insert(1, eq.cesp2_equation(phi, "cesp2"))
    compat.append(eq.cesp1_equation(phi, "cesp1"))
    pre += list(evaluate(compat).entries)
    if not all(e.passed for e in pre):
        raise PreconditionError("twisted smash preconditions failed", AxiomReport(tuple(pre)))
    lam_cd = C(T(h.lam, ih), C(braiding(f, h.obj, h.obj), h.delta))
    gamma = P(
        (phi_right.phi, ih),
        (ia, lam_cd),
        (phi.phi, ih),
        (ih, braiding(f, h.obj, a.obj)),
        (h.delta, ia),
    )
    d = DistLaw(h, a, gamma)
    reference = gamma_two_actions(phi, twisted_hat_action(phi_right))
    extra = compare_maps("gamma-eq", gamma, reference.psi)
    d.provenance = AxiomReport(tuple(pre) + (extra,))
    return d
