"""Structure-constant bundles: Hopf quasigroup data and quasimodule actions.

Construction validates shapes only; the semantic axioms are the business of
the checkers, so deliberately broken structures remain representable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Sequence, Union

from .category import braiding
from .fields import FieldSpec
from .linmap import (
    LinMap,
    Obj,
    ShapeError,
    identity,
    lin_compose,
    perm_map,
    pipeline,
    tensor,
)


@dataclass(frozen=True)
class HopfQuasigroupData:
    """Structure constants (η, μ, ε, δ, λ) on one based space.

    λ is carried even by structures that are only used as bimonoids; pass a
    zero map if no antipode candidate is intended.
    """

    obj: Obj
    eta: LinMap
    mu: LinMap
    eps: LinMap
    delta: LinMap
    lam: LinMap

    def __post_init__(self) -> None:
        x = (self.obj,)
        shapes = {
            "eta": (self.eta, (), x),
            "mu": (self.mu, x + x, x),
            "eps": (self.eps, x, ()),
            "delta": (self.delta, x, x + x),
            "lambda": (self.lam, x, x),
        }
        field = self.eta.field
        for name, (m, dom, cod) in shapes.items():
            if m.domain != dom or m.codomain != cod:
                raise ShapeError(
                    f"{name} must map {[o.name for o in dom]} -> {[o.name for o in cod]} "
                    f"on object {self.obj.name!r}"
                )
            if m.field != field:
                raise ShapeError(f"{name} uses a different field than eta")

    @property
    def field(self) -> FieldSpec:
        return self.eta.field

    @property
    def dim(self) -> int:
        return self.obj.dim


def op(s: HopfQuasigroupData) -> HopfQuasigroupData:
    """The opposite magma: μ is precomposed with the swap."""
    c = braiding(s.field, s.obj, s.obj)
    return replace(s, mu=lin_compose(s.mu, c))


def cop(s: HopfQuasigroupData) -> HopfQuasigroupData:
    """The co-opposite comonoid: δ is postcomposed with the swap."""
    c = braiding(s.field, s.obj, s.obj)
    return replace(s, delta=lin_compose(c, s.delta))


def trivial_structure(field: FieldSpec, name: str = "K") -> HopfQuasigroupData:
    """The one-dimensional structure on K itself; passes every axiom."""
    obj = Obj(name, ("1",))
    one = field.one()
    return HopfQuasigroupData(
        obj=obj,
        eta=LinMap(field, (), (obj,), {(): {(0,): one}}),
        mu=LinMap(field, (obj, obj), (obj,), {(0, 0): {(0,): one}}),
        eps=LinMap(field, (obj,), (), {(0,): {(): one}}),
        delta=LinMap(field, (obj,), (obj, obj), {(0,): {(0, 0): one}}),
        lam=identity(field, (obj,)),
    )


def product_obj(name: str, objs: Sequence[Obj]) -> Obj:
    """The flattened tensor-product object; labels join with '*', first factor major."""
    basis = tuple("*".join(p) for p in itertools.product(*(o.basis for o in objs)))
    return Obj(name, basis)


def tensor_delta(structs: Sequence[HopfQuasigroupData]) -> LinMap:
    """δ of the tensor-product comonoid: the factor coproducts followed by the
    interleaving symmetry, built directly so no dense swap is materialized."""
    structs = tuple(structs)
    if not structs:
        raise ShapeError("tensor_delta needs at least one factor")
    field = structs[0].field
    objs = tuple(s.obj for s in structs)
    entries = {}
    for din in itertools.product(*(range(o.dim) for o in objs)):
        cols = [s.delta.entries.get((i,)) for s, i in zip(structs, din)]
        if any(not c for c in cols):
            continue
        col = {}
        for combo in itertools.product(*(c.items() for c in cols)):
            firsts = tuple(k[0] for k, _ in combo)
            seconds = tuple(k[1] for k, _ in combo)
            val = field.one()
            for _, v in combo:
                val = field.mul(val, v)
            col[firsts + seconds] = val
        entries[din] = col
    return LinMap(field, objs, objs + objs, entries)


def tensor_mu(structs: Sequence[HopfQuasigroupData]) -> LinMap:
    """μ of the tensor-product magma: the de-interleaving symmetry followed by
    the factor products, built directly so no dense swap is materialized."""
    structs = tuple(structs)
    if not structs:
        raise ShapeError("tensor_mu needs at least one factor")
    field = structs[0].field
    objs = tuple(s.obj for s in structs)
    n = len(structs)
    entries = {}
    for din in itertools.product(*(range(o.dim) for o in objs + objs)):
        cols = [s.mu.entries.get((din[k], din[n + k])) for k, s in enumerate(structs)]
        if any(not c for c in cols):
            continue
        col = {}
        for combo in itertools.product(*(c.items() for c in cols)):
            out = tuple(k[0] for k, _ in combo)
            val = field.one()
            for _, v in combo:
                val = field.mul(val, v)
            col[out] = val
        entries[din] = col
    return LinMap(field, objs + objs, objs, entries)


def tensor_eta(structs: Sequence[HopfQuasigroupData]) -> LinMap:
    return tensor(*(s.eta for s in structs))


def tensor_eps(structs: Sequence[HopfQuasigroupData]) -> LinMap:
    return tensor(*(s.eps for s in structs))


Module = Union[HopfQuasigroupData, Obj]

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class QuasimoduleAction:
    """An action φ of a Hopf quasigroup on a module object.

    side="left": φ: H⊗M → M.  side="right": φ: M⊗H → M.  The module may be a
    bare Obj, or a HopfQuasigroupData when magma/comonoid axioms are needed.
    """

    hopf: HopfQuasigroupData
    module: Module
    phi: LinMap
    side: str = LEFT

    def __post_init__(self) -> None:
        if self.side not in (LEFT, RIGHT):
            raise ShapeError(f"side must be 'left' or 'right', got {self.side!r}")
        m = (self.module_obj,)
        h = (self.hopf.obj,)
        want = h + m if self.side == LEFT else m + h
        if self.phi.domain != want or self.phi.codomain != m:
            raise ShapeError(
                f"{self.side} action must map {[o.name for o in want]} -> {self.module_obj.name!r}"
            )

    @property
    def module_obj(self) -> Obj:
        return self.module if isinstance(self.module, Obj) else self.module.obj

    @property
    def module_structure(self) -> HopfQuasigroupData:
        if isinstance(self.module, Obj):
            raise ShapeError("this action carries a bare object, not a structured module")
        return self.module


def diagonal_action(act: QuasimoduleAction) -> LinMap:
    """The action of H on M⊗M induced through δ_H and the symmetry."""
    h = act.hopf
    m = act.module_obj
    im = identity(h.field, (m,))
    if act.side == LEFT:
        c = braiding(h.field, h.obj, m)
        middle = (identity(h.field, (h.obj,)), c, im)
        first = (h.delta, im, im)
    else:
        c = braiding(h.field, m, h.obj)
        middle = (im, c, identity(h.field, (h.obj,)))
        first = (im, im, h.delta)
    return pipeline((act.phi, act.phi), middle, first)
