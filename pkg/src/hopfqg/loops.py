"""Finite loops: validated multiplication tables, divisions, the inverse
property, and the Chein double of a group."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence


class NotALoopError(ValueError):
    pass


class NotAGroupError(ValueError):
    pass


class NotIPLoopError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteLoop:
    """A loop presented by its index table; rows and columns are permutations."""

    name: str
    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def label(self, i: int) -> str:
        return self.elements[i]

    def index(self, label: str) -> int:
        return self.elements.index(label)

    def left_div(self, v: int, u: int) -> int:
        """The unique x with v·x = u."""
        return self.table[v].index(u)

    def right_div(self, u: int, v: int) -> int:
        """The unique x with x·v = u."""
        for x in range(self.order):
            if self.table[x][v] == u:
                return x
        raise NotALoopError(f"column {v} of {self.name} is not a permutation")


def loop_from_table(
    labels: Sequence[str], table: Sequence[Sequence[int]], identity: int = 0, name: str = "L"
) -> FiniteLoop:
    """Validate identity and Latin-square laws, then freeze the loop."""
    labels = tuple(labels)
    n = len(labels)
    if len(set(labels)) != n or n == 0:
        raise NotALoopError("element labels must be nonempty and unique")
    tab = tuple(tuple(row) for row in table)
    if len(tab) != n or any(len(row) != n for row in tab):
        raise NotALoopError(f"table must be {n}x{n}")
    for row in tab:
        if any(not 0 <= x < n for x in row):
            raise NotALoopError("table entries must be element indices")
    if not 0 <= identity < n:
        raise NotALoopError(f"identity index {identity} out of range")
    for x in range(n):
        if tab[identity][x] != x or tab[x][identity] != x:
            raise NotALoopError(f"{labels[identity]!r} is not a two-sided identity at {labels[x]!r}")
    full = set(range(n))
    for i, row in enumerate(tab):
        if set(row) != full:
            raise NotALoopError(f"row {labels[i]!r} is not a permutation (Latin-square violation)")
    for j in range(n):
        if {tab[i][j] for i in range(n)} != full:
            raise NotALoopError(f"column {labels[j]!r} is not a permutation (Latin-square violation)")
    return FiniteLoop(name, labels, tab, identity)


def associativity_witness(loop: FiniteLoop) -> Optional[tuple[int, int, int]]:
    """The first triple (i,j,k) with (ij)k ≠ i(jk), or None if associative."""
    n = loop.order
    t = loop.table
    for i in range(n):
        for j in range(n):
            tij = t[i][j]
            row_j = t[j]
            for k in range(n):
                if t[tij][k] != t[i][row_j[k]]:
                    return (i, j, k)
    return None


@dataclass(frozen=True)
class IPLoopReport:
    passed: bool
    inverses: Optional[tuple[int, ...]]
    witness: Optional[str]


def check_ip_loop(loop: FiniteLoop) -> IPLoopReport:
    """Find the unique two-sided inverses and verify the inverse property.

    Verifies u⁻¹(uv) = v = (vu)u⁻¹ for all v, uniqueness of u⁻¹,
    u⁻¹u = e = uu⁻¹, and the antiautomorphism law (uv)⁻¹ = v⁻¹u⁻¹.
    """
    n = loop.order
    t = loop.table
    e = loop.identity
    inverses = []
    for u in range(n):
        candidates = [
            k
            for k in range(n)
            if all(t[k][t[u][v]] == v and t[t[v][u]][k] == v for v in range(n))
        ]
        if len(candidates) != 1:
            kind = "no" if not candidates else "several"
            return IPLoopReport(False, None, f"{kind} two-sided IP inverse for {loop.label(u)!r}")
        inverses.append(candidates[0])
    for u in range(n):
        k = inverses[u]
        if t[k][u] != e or t[u][k] != e:
            return IPLoopReport(False, None, f"inverse of {loop.label(u)!r} is not two-sided at e")
    for u in range(n):
        for v in range(n):
            if inverses[t[u][v]] != t[inverses[v]][inverses[u]]:
                return IPLoopReport(
                    False, None, f"(uv)^-1 != v^-1 u^-1 at ({loop.label(u)!r}, {loop.label(v)!r})"
                )
    return IPLoopReport(True, tuple(inverses), None)


def group_inverses(loop: FiniteLoop) -> tuple[int, ...]:
    """Inverses of an associative loop; raises NotAGroupError otherwise."""
    wit = associativity_witness(loop)
    if wit is not None:
        i, j, k = wit
        raise NotAGroupError(
            f"{loop.name} is not associative at "
            f"({loop.label(i)!r}, {loop.label(j)!r}, {loop.label(k)!r})"
        )
    e = loop.identity
    return tuple(loop.table[i].index(e) for i in range(loop.order))


def chein_double(group: FiniteLoop, name: Optional[str] = None) -> FiniteLoop:
    """The loop M(G,2) on G × {1,u}: (g,α)(h,β) = ((g^ν h^μ)^ν, α+β) with
    ν = (-1)^β, μ = (-1)^(α+β); exponent -1 is group inversion, u² = 1.
    """
    inv = group_inverses(group)
    n = group.order
    labels = tuple(group.elements) + tuple(f"{x}u" for x in group.elements)

    def power(i: int, sign: int) -> int:
        return i if sign > 0 else inv[i]

    table = []
    for idx1 in range(2 * n):
        i, alpha = idx1 % n, idx1 // n
        row = []
        for idx2 in range(2 * n):
            j, beta = idx2 % n, idx2 // n
            nu = -1 if beta else 1
            mu = -1 if (alpha + beta) % 2 else 1
            k = power(group.mul(power(i, nu), power(j, mu)), nu)
            row.append(k + n * ((alpha + beta) % 2))
        table.append(tuple(row))
    return FiniteLoop(name or f"M({group.name},2)", labels, tuple(table), group.identity)


def cyclic_group(n: int, labels: Optional[Sequence[str]] = None, name: Optional[str] = None) -> FiniteLoop:
    if n < 1:
        raise NotALoopError("cyclic group order must be positive")
    if labels is None:
        labels = ("e",) + tuple("g" if k == 1 else f"g{k}" for k in range(1, n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return loop_from_table(labels, table, 0, name or f"C{n}")


_S3_PERMS = (
    (0, 1, 2),  # s0 = e
    (1, 0, 2),  # s1 = (12)
    (2, 1, 0),  # s2 = (13)
    (0, 2, 1),  # s3 = (23)
    (1, 2, 0),  # s4 = (123)
    (2, 0, 1),  # s5 = (132)
)


def symmetric_s3(name: str = "S3") -> FiniteLoop:
    """S₃ with s0 = e, s1..s3 the transpositions, s4,s5 the 3-cycles.

    Products compose right-to-left: (p·q)(x) = p(q(x)).
    """

    def compose(p, q):
        return tuple(p[q[x]] for x in range(3))

    idx = {p: i for i, p in enumerate(_S3_PERMS)}
    table = tuple(
        tuple(idx[compose(p, q)] for q in _S3_PERMS) for p in _S3_PERMS
    )
    labels = tuple(f"s{i}" for i in range(6))
    return loop_from_table(labels, table, 0, name)


def direct_product(l1: FiniteLoop, l2: FiniteLoop, name: Optional[str] = None) -> FiniteLoop:
    """The product loop on pairs, first factor major, labels joined with '*'."""
    n2 = l2.order
    labels = tuple(f"{x}*{y}" for x in l1.elements for y in l2.elements)
    table = []
    for i1 in range(l1.order):
        for i2 in range(n2):
            row = []
            for j1 in range(l1.order):
                for j2 in range(n2):
                    row.append(l1.mul(i1, j1) * n2 + l2.mul(i2, j2))
            table.append(tuple(row))
    e = l1.identity * n2 + l2.identity
    return loop_from_table(labels, tuple(table), e, name or f"{l1.name}*{l2.name}")
