"""Shipped DSL encodings of every checked identity, keyed by equation tag.

Binding conventions (the names the encodings expect in the evaluation
context):

* single-structure identities: ``H``
* distributive-law identities: ``H``, ``A`` and the law ``PSI``
* left-action identities: ``H``, ``A`` (the module) and the action ``PHI``;
  a second left action binds as ``PHIHAT``
* double-cross identities: additionally the right action ``PHIH`` on H
* twisted-smash identities: the right action on A binds as ``PHIR``
* pairing identities: ``A``, ``H``, ``TAU`` and ``TAUINV``
* two-action internals: the maps ``T`` and ``GAMMA``

Each value is a (lhs, rhs) pair of expression strings whose evaluations are
exactly the maps the corresponding checker compares.
"""

from __future__ import annotations

ENCODINGS: dict[str, tuple[str, str]] = {
    # unital magma / comonoid
    "unit-r": ("mu[H] . (id[H] # eta[H])", "id[H]"),
    "unit-l": ("mu[H] . (eta[H] # id[H])", "id[H]"),
    "counit-l": ("(eps[H] # id[H]) . delta[H]", "id[H]"),
    "counit-r": ("(id[H] # eps[H]) . delta[H]", "id[H]"),
    "coassoc": ("(delta[H] # id[H]) . delta[H]", "(id[H] # delta[H]) . delta[H]"),
    # bimonoid compatibilities
    "eta-eps": ("eps[H] . eta[H]", "id[I]"),
    "mu-eps": ("eps[H] . mu[H]", "eps[H] # eps[H]"),
    "delta-eta": ("delta[H] . eta[H]", "eta[H] # eta[H]"),
    "delta-mu": ("delta[H] . mu[H]", "(mu[H] # mu[H]) . delta[H#H]"),
    # antipode composites and derived convolution identities
    "lH1": ("mu[H] . (lam[H] # mu[H]) . (delta[H] # id[H])", "eps[H] # id[H]"),
    "lH2": (
        "mu[H] . (id[H] # mu[H]) . (id[H] # lam[H] # id[H]) . (delta[H] # id[H])",
        "eps[H] # id[H]",
    ),
    "rH1": (
        "mu[H] . (mu[H] # id[H]) . (id[H] # lam[H] # id[H]) . (id[H] # delta[H])",
        "id[H] # eps[H]",
    ),
    "rH2": ("mu[H] . (mu[H] # lam[H]) . (id[H] # delta[H])", "id[H] # eps[H]"),
    "1-conv": ("mu[H] . (lam[H] # id[H]) . delta[H]", "eta[H] . eps[H]"),
    "2-conv": ("mu[H] . (id[H] # lam[H]) . delta[H]", "eta[H] . eps[H]"),
    # antipode properties
    "antimu": ("lam[H] . mu[H]", "mu[H] . (lam[H] # lam[H]) . c[H,H]"),
    "anticm": ("delta[H] . lam[H]", "(lam[H] # lam[H]) . c[H,H] . delta[H]"),
    "inv-eta": ("lam[H] . eta[H]", "eta[H]"),
    "inv-eps": ("eps[H] . lam[H]", "eps[H]"),
    # flags
    "assoc": ("mu[H] . (mu[H] # id[H])", "mu[H] . (id[H] # mu[H])"),
    "comm": ("mu[H]", "mu[H] . c[H,H]"),
    "cocomm": ("delta[H]", "c[H,H] . delta[H]"),
    # quasimodule axioms (left action PHI of H on A)
    "uq": ("PHI . (eta[H] # id[A])", "id[A]"),
    "pq1": (
        "PHI . (id[H] # PHI) . (((id[H] # lam[H]) . delta[H]) # id[A])",
        "eps[H] # id[A]",
    ),
    "pq2": ("PHI . (lam[H] # PHI) . (delta[H] # id[A])", "eps[H] # id[A]"),
    "pqmod": ("PHI . (id[H] # PHI)", "PHI . (mu[H] # id[A])"),
    "etaq": ("PHI . (id[H] # eta[A])", "eps[H] # eta[A]"),
    "muq": (
        "mu[A] . (PHI # PHI) . (id[H] # c[H,A] # id[A]) . (delta[H] # id[A] # id[A])",
        "PHI . (id[H] # mu[A])",
    ),
    "eq": ("eps[A] . PHI", "eps[H] # eps[A]"),
    "dq": (
        "delta[A] . PHI",
        "(PHI # PHI) . (id[H] # c[H,A] # id[A]) . (delta[H] # id[A] # id[A]) . (id[H] # delta[A])",
    ),
    # distributive laws
    "dl1": (
        "PSI . (id[H] # mu[A]) . (lam[H] # lam[A] # id[A])",
        "(mu[A] # id[H]) . (id[A] # PSI) . (PSI # id[A]) . (lam[H] # lam[A] # id[A])",
    ),
    "dl2": (
        "PSI . (mu[H] # id[A]) . (id[H] # lam[H] # lam[A])",
        "(id[A] # mu[H]) . (PSI # id[H]) . (id[H] # PSI) . (id[H] # lam[H] # lam[A])",
    ),
    "dl3": ("PSI . (id[H] # eta[A])", "eta[A] # id[H]"),
    "dl4": ("PSI . (eta[H] # id[A])", "id[A] # eta[H]"),
    "dl1-1": (
        "PSI . (id[H] # mu[A])",
        "(mu[A] # id[H]) . (id[A] # PSI) . (PSI # id[A])",
    ),
    "dl2-1": (
        "PSI . (mu[H] # id[A])",
        "(id[A] # mu[H]) . (PSI # id[H]) . (id[H] # PSI)",
    ),
    "dl21": (
        "PSI . (mu[H] # id[A]) . (id[H] # lam[H] # id[A])",
        "(id[A] # mu[H]) . (PSI # id[H]) . (id[H] # PSI) . (id[H] # lam[H] # id[A])",
    ),
    "cdl1": ("delta[A#H] . PSI", "(PSI # PSI) . delta[H#A]"),
    "cdl2": ("(eps[A] # eps[H]) . PSI", "eps[H] # eps[A]"),
    "adl1": (
        "(id[A] # mu[H]) . (PSI # mu[H]) . (id[H] # PSI # id[H])"
        " . (((lam[H] # id[H]) . delta[H]) # id[A] # id[H])",
        "eps[H] # id[A] # id[H]",
    ),
    "adl2": (
        "(id[A] # mu[H]) . (PSI # mu[H]) . (id[H] # PSI # id[H])"
        " . (((id[H] # lam[H]) . delta[H]) # id[A] # id[H])",
        "eps[H] # id[A] # id[H]",
    ),
    "adl3": (
        "(mu[A] # id[H]) . (mu[A] # PSI) . (id[A] # PSI # id[A])"
        " . (id[A] # id[H] # ((lam[A] # id[A]) . delta[A]))",
        "id[A] # id[H] # eps[A]",
    ),
    "adl4": (
        "(mu[A] # id[H]) . (mu[A] # PSI) . (id[A] # PSI # id[A])"
        " . (id[A] # id[H] # ((id[A] # lam[A]) . delta[A]))",
        "id[A] # id[H] # eps[A]",
    ),
    "l-con": ("(eps[A] # id[H]) . PSI", "id[H] # eps[A]"),
    "cesp3": ("PSI . (id[H] # lam[A])", "(lam[A] # id[H]) . PSI"),
    "r-smash": (
        "(id[A] # eps[H]) . PSI . c[A,H] . (id[A] # lam[H]) . PSI",
        "eps[H] # id[A]",
    ),
    # skew pairings (TAU, TAUINV: A⊗H → K)
    "skw1": (
        "TAU . (mu[A] # id[H])",
        "(TAU # TAU) . (id[A] # c[A,H] # id[H]) . (id[A] # id[A] # delta[H])",
    ),
    "skw2": (
        "TAU . (id[A] # mu[H])",
        "(TAU # TAU) . (id[A] # c[A,H] # id[H]) . ((c[A,A] . delta[A]) # id[H] # id[H])",
    ),
    "skw3": ("TAU . (id[A] # eta[H])", "eps[A]"),
    "skw4": ("TAU . (eta[A] # id[H])", "eps[H]"),
    "skw5": (
        "TAUINV . (id[A] # mu[H])",
        "(TAUINV # TAUINV) . (id[A] # c[A,H] # id[H]) . (delta[A] # id[H] # id[H])",
    ),
    "skw6": (
        "TAUINV . (mu[A] # id[H])",
        "(TAUINV # TAUINV) . (id[A] # c[A,H] # id[H]) . (id[A] # id[A] # (c[H,H] . delta[H]))",
    ),
    "tau-conv1": ("(TAU # TAUINV) . delta[A#H]", "eps[A] # eps[H]"),
    "tau-conv2": ("(TAUINV # TAU) . delta[A#H]", "eps[A] # eps[H]"),
    "tau-inv": ("TAU", "TAUINV . (id[A] # lam[H])"),
    # double cross products (PHI left on A, PHIH right on H)
    "d1": ("PHI . (id[H] # eta[A])", "eps[H] # eta[A]"),
    "d2": ("PHIH . (eta[H] # id[A])", "eta[H] # eps[A]"),
    "d3": ("(PHIH # PHI) . delta[H#A]", "c[A,H] . PSI"),
    "d4": (
        "PHI . (id[H] # mu[A]) . (lam[H] # lam[A] # id[A])",
        "mu[A] . (id[A] # PHI) . ((PSI . (lam[H] # lam[A])) # id[A])",
    ),
    "d5": (
        "mu[H] . (PHIH # mu[H]) . (lam[H] # PSI # id[H]) . (delta[H] # id[A] # id[H])",
        "eps[H] # eps[A] # id[H]",
    ),
    "d6": (
        "mu[H] . (PHIH # mu[H]) . (id[H] # PSI # id[H])"
        " . (((id[H] # lam[H]) . delta[H]) # id[A] # id[H])",
        "eps[H] # eps[A] # id[H]",
    ),
    "d7": (
        "PHIH . (mu[H] # id[A]) . (id[H] # lam[H] # lam[A])",
        "mu[H] . (PHIH # id[H]) . (id[H] # (PSI . (lam[H] # lam[A])))",
    ),
    "d8": (
        "mu[A] . (mu[A] # PHI) . (id[A] # PSI # lam[A]) . (id[A] # id[H] # delta[A])",
        "id[A] # eps[H] # eps[A]",
    ),
    "d9": (
        "mu[A] . (mu[A] # PHI) . (id[A] # PSI # id[A])"
        " . (id[A] # id[H] # ((lam[A] # id[A]) . delta[A]))",
        "id[A] # eps[H] # eps[A]",
    ),
    # smash / two-action side conditions (PHI, PHIHAT left actions on A)
    "cesp1": (
        "(id[H] # PHI) . ((c[H,H] . delta[H]) # id[A])",
        "(id[H] # PHI) . (delta[H] # id[A])",
    ),
    "cesp2": (
        "PHI . (id[H] # (PHI . (lam[H] # id[A])))",
        "PHI . ((mu[H] . (id[H] # lam[H])) # id[A])",
    ),
    "cesp4": (
        "PHIHAT . (id[H] # PHI)",
        "PHI . (id[H] # PHIHAT) . (c[H,H] # id[A])",
    ),
    # two-action internal identities (T, GAMMA: H⊗A → A⊗H)
    "R3": (
        "(id[A] # delta[H]) . T",
        "(T # id[H]) . (id[H] # c[H,A]) . (delta[H] # id[A])",
    ),
    "R4": (
        "T . (id[H] # PHI)",
        "(PHI # id[H]) . (id[H] # T) . (c[H,H] # id[A])",
    ),
    "R5": (
        "(c[H,A] # id[H]) . (id[H] # T) . (delta[H] # id[A])",
        "(T # id[H]) . (id[H] # c[H,A]) . (delta[H] # id[A])",
    ),
    "R6": (
        "(delta[A] # id[H]) . T",
        "(id[A] # T) . (T # id[A]) . (id[H] # delta[A])",
    ),
    "R7": (
        "(delta[A] # id[H]) . GAMMA",
        "(id[A] # GAMMA) . (GAMMA # id[A]) . (id[H] # delta[A])",
    ),
    # biquasimodule compatibilities (PHI left, PHIR right, both on A)
    "61": ("PHI . (id[H] # PHIR)", "PHIR . (PHI # id[H])"),
    "62": (
        "PHIR . ((PHIR . (id[A] # lam[H])) # id[H])",
        "PHIR . (id[A] # (mu[H] . (lam[H] # id[H])))",
    ),
    "65": (
        "(PHIR # id[H]) . (id[A] # ((lam[H] # id[H]) . c[H,H] . delta[H]))",
        "(PHIR # id[H]) . (id[A] # ((lam[H] # id[H]) . delta[H]))",
    ),
}
