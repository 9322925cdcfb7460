import pytest

import hopfqg as hq
from hopfqg.linmap import LinMap

# frozen by exhaustive search over reduced 5x5 Latin squares: the first one
# already fails the inverse property, and its element b has right inverse c
# but left inverse d
NON_IP_TABLE_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


@pytest.fixture(scope="session")
def qc2():
    return hq.group_algebra(hq.cyclic_group(2))


@pytest.fixture(scope="session")
def qc3():
    return hq.group_algebra(hq.cyclic_group(3))


@pytest.fixture(scope="session")
def qs3():
    return hq.group_algebra(hq.symmetric_s3())


@pytest.fixture(scope="session")
def h4():
    return hq.taft_h4()


@pytest.fixture(scope="session")
def ms32():
    return hq.chein_double(hq.symmetric_s3())


@pytest.fixture(scope="session")
def fl(ms32):
    return hq.loop_algebra(ms32)


@pytest.fixture(scope="session")
def tau():
    return hq.example_tau()


@pytest.fixture(scope="session")
def psi_tau(tau):
    return hq.psi_from_skew_pairing(tau)


@pytest.fixture(scope="session")
def corpus(qc2, qc3, qs3, h4, fl):
    return {"QC2": qc2, "QC3": qc3, "QS3": qs3, "H4": h4, "FL": fl}


def make_inversion_action(h, a, a_loop):
    """The action of the 2-element group algebra on a group algebra where the
    non-identity element acts by inversion."""
    F = h.field
    inv = hq.check_ip_loop(a_loop).inverses
    one = F.one()
    entries = {(0, j): {(j,): one} for j in range(a.dim)}
    entries.update({(1, j): {(inv[j],): one} for j in range(a.dim)})
    return hq.QuasimoduleAction(
        hopf=h, module=a, phi=LinMap(F, (h.obj, a.obj), (a.obj,), entries), side="left"
    )


@pytest.fixture(scope="session")
def c2_on_qc3():
    h = hq.group_algebra(hq.cyclic_group(2, labels=("e", "s")))
    loop = hq.cyclic_group(3, labels=("e", "r", "rr"))
    a = hq.group_algebra(loop)
    return make_inversion_action(h, a, loop)


def same_structure_constants(s, t):
    """Structure-constant equality on matching bases, object names ignored."""
    if s.obj.basis != t.obj.basis or s.field != t.field:
        return False
    return all(
        getattr(s, k).entries == getattr(t, k).entries
        for k in ("eta", "mu", "eps", "delta", "lam")
    )
