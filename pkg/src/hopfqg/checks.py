"""Executable axiom checkers for structures, actions, and morphisms.

Every checker evaluates all of its equations (no short-circuit across
axioms) and reports one entry per equation, tagged with the identity name.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import equations as eq
from .linmap import LinMap
from .reports import AxiomReport, evaluate
from .structures import HopfQuasigroupData, QuasimoduleAction


def check_unital_magma(s: HopfQuasigroupData) -> AxiomReport:
    """μ∘(A⊗η) = id = μ∘(η⊗A)."""
    return evaluate(eq.unital_magma_equations(s))


def check_comonoid(s: HopfQuasigroupData) -> AxiomReport:
    """Counit laws and coassociativity."""
    return evaluate(eq.comonoid_equations(s))


def check_nonassoc_bimonoid(s: HopfQuasigroupData) -> AxiomReport:
    """The four unit/counit/product/coproduct compatibilities of a bimonoid."""
    return evaluate(eq.bimonoid_equations(s))


def check_hopf_quasigroup(s: HopfQuasigroupData) -> AxiomReport:
    """The four antipode composites plus the derived convolution identities."""
    return evaluate(eq.hopf_equations(s))


def check_antipode_properties(s: HopfQuasigroupData) -> AxiomReport:
    """Antimultiplicativity, anticomultiplicativity, unit/counit invariance."""
    return evaluate(eq.antipode_equations(s))


@dataclass(frozen=True)
class StructureFlags:
    associative: bool
    coassociative: bool
    commutative: bool
    cocommutative: bool
    report: AxiomReport


def check_flags(s: HopfQuasigroupData) -> StructureFlags:
    """(Co)associativity and (co)commutativity, with witness triples on failure."""
    rep = evaluate(eq.flag_equations(s))
    return StructureFlags(
        associative=rep.entry("assoc").passed,
        coassociative=rep.entry("coassoc").passed,
        commutative=rep.entry("comm").passed,
        cocommutative=rep.entry("cocomm").passed,
        report=rep,
    )


def check_quasimodule(act: QuasimoduleAction, level: str = "quasimodule") -> AxiomReport:
    """Check an action at one of the levels in equations.QUASIMODULE_LEVELS."""
    return evaluate(eq.quasimodule_level_equations(act, level))


def check_hopf_morphism(f: LinMap, src: HopfQuasigroupData, dst: HopfQuasigroupData) -> AxiomReport:
    """Unit/product/counit/coproduct preservation, and antipode compatibility."""
    return evaluate(eq.morphism_equations(f, src, dst))
