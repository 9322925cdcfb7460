"""Distributive laws between Hopf quasigroups and the wreath product.

A DistLaw only fixes the shape Ψ: H⊗A → A⊗H at construction; the three
strength levels (plain, comonoidal, a-comonoidal) are checker verdicts.
wreath_product never gates on verification, so broken laws can be built and
then shown to fail the theorem-level properties.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import equations as eq
from .category import braiding, is_linear_iso
from .checks import check_flags
from .fields import FieldSpec
from .linmap import LinMap, ShapeError, identity, lin_tensor, pipeline, regroup
from .reports import AxiomReport, evaluate
from .structures import HopfQuasigroupData, product_obj, tensor_delta


@dataclass
class DistLaw:
    """A candidate distributive law Ψ: H⊗A → A⊗H between two Hopf quasigroups."""

    h: HopfQuasigroupData
    a: HopfQuasigroupData
    psi: LinMap
    provenance: Optional[AxiomReport] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        want_dom = (self.h.obj, self.a.obj)
        want_cod = (self.a.obj, self.h.obj)
        if self.psi.domain != want_dom or self.psi.codomain != want_cod:
            raise ShapeError(
                f"psi must map {self.h.obj.name}⊗{self.a.obj.name} -> "
                f"{self.a.obj.name}⊗{self.h.obj.name}"
            )


def flip_law(h: HopfQuasigroupData, a: HopfQuasigroupData) -> DistLaw:
    """The canonical law Ψ = c_{H,A}; passes every check level."""
    return DistLaw(h, a, braiding(h.field, h.obj, a.obj))


def check_distributive_law(d: DistLaw) -> AxiomReport:
    """The four defining identities dl1-dl4."""
    return evaluate(eq.distributive_law_equations(d.h, d.a, d.psi))


def check_strong_form(d: DistLaw) -> AxiomReport:
    """The antipode-free forms dl1-1 and dl2-1.

    The report flags whether both antipodes are linear isomorphisms, the
    hypothesis under which the strong forms are equivalent to dl1/dl2.
    """
    flags = {
        "lambda-h-invertible": is_linear_iso(d.h.lam),
        "lambda-a-invertible": is_linear_iso(d.a.lam),
    }
    return evaluate(eq.strong_form_equations(d.h, d.a, d.psi), flags)


def check_comonoidal(d: DistLaw) -> AxiomReport:
    """Ψ as a comonoid morphism: cdl1 and cdl2."""
    return evaluate(eq.comonoidal_equations(d.h, d.a, d.psi))


def check_a_comonoidal(d: DistLaw) -> AxiomReport:
    """The four antipode-cancellation identities adl1-adl4.

    Flags record whether each factor is (co)associative: for a pair of Hopf
    algebras these identities hold for any distributive law.
    """
    fh = check_flags(d.h)
    fa = check_flags(d.a)
    flags = {
        "h-associative": fh.associative,
        "h-coassociative": fh.coassociative,
        "a-associative": fa.associative,
        "a-coassociative": fa.coassociative,
    }
    return evaluate(eq.a_comonoidal_equations(d.h, d.a, d.psi), flags)


DISTLAW_LEVELS = ("dl", "strong", "comonoidal", "acomonoidal")


def check_distlaw_level(d: DistLaw, level: str) -> AxiomReport:
    if level == "dl":
        return check_distributive_law(d)
    if level == "strong":
        return check_strong_form(d)
    if level == "comonoidal":
        return check_comonoidal(d)
    if level == "acomonoidal":
        return check_a_comonoidal(d)
    raise ValueError(f"unknown level {level!r}; expected one of {DISTLAW_LEVELS}")


def wreath_product(d: DistLaw, name: Optional[str] = None) -> HopfQuasigroupData:
    """The structure on A⊗H with μ = (μ_A⊗μ_H)∘(A⊗Ψ⊗H), tensor counit and
    coproduct, and λ = Ψ∘(λ_H⊗λ_A)∘c_{A,H}.

    The product basis is lexicographic with the A index major; no axioms are
    verified here (run the checkers on the result).
    """
    a, h, psi = d.a, d.h, d.psi
    f: FieldSpec = a.field
    obj = product_obj(name or f"{a.obj.name}*{h.obj.name}", (a.obj, h.obj))
    ia = identity(f, (a.obj,))
    ih = identity(f, (h.obj,))
    mu_raw = pipeline((a.mu, h.mu), (ia, psi, ih))
    lam_raw = pipeline(psi, (h.lam, a.lam), braiding(f, a.obj, h.obj))
    pair = (a.obj, h.obj)
    return HopfQuasigroupData(
        obj=obj,
        eta=regroup(lin_tensor(a.eta, h.eta), (), (obj,)),
        mu=regroup(mu_raw, (obj, obj), (obj,)),
        eps=regroup(lin_tensor(a.eps, h.eps), (obj,), ()),
        delta=regroup(tensor_delta((a, h)), (obj,), (obj, obj)),
        lam=regroup(lam_raw, (obj,), (obj,)),
    )
