from fractions import Fraction

import pytest

import hopfqg as hq
from hopfqg.category import (
    NotInvertibleError,
    braiding,
    convolution,
    convolution_inverse,
    convolution_unit,
    is_linear_iso,
    linear_kernel_vector,
)
from hopfqg.fields import QQ
from hopfqg.linmap import LinMap, Obj, identity, lin_compose, lin_tensor, zero_map

from conftest import NON_IP_TABLE_5

M = Obj("M", ("a", "b"))
N = Obj("N", ("p", "q", "r"))
P = Obj("P", ("u", "v"))


def test_braiding_with_unit_is_identity():
    assert braiding(QQ, (), (M,)) == identity(QQ, (M,))
    assert braiding(QQ, (M,), ()) == identity(QQ, (M,))


def test_braiding_involution():
    c = braiding(QQ, M, N)
    c_back = braiding(QQ, N, M)
    assert lin_compose(c_back, c) == identity(QQ, (M, N))


def test_braiding_naturality_sample():
    f = LinMap(QQ, (M,), (N,), {(0,): {(1,): Fraction(2)}, (1,): {(0,): Fraction(-1), (2,): Fraction(1, 3)}})
    g = LinMap(QQ, (N,), (P,), {(0,): {(0,): Fraction(5)}, (2,): {(1,): Fraction(1)}})
    lhs = lin_compose(lin_tensor(g, f), braiding(QQ, M, N))
    rhs = lin_compose(braiding(QQ, N, P), lin_tensor(f, g))
    assert lhs == rhs


def test_hexagons():
    c_m_np = braiding(QQ, (M,), (N, P))
    first = lin_compose(
        lin_tensor(identity(QQ, (N,)), braiding(QQ, M, P)),
        lin_tensor(braiding(QQ, M, N), identity(QQ, (P,))),
    )
    assert c_m_np == first
    c_mn_p = braiding(QQ, (M, N), (P,))
    second = lin_compose(
        lin_tensor(braiding(QQ, M, P), identity(QQ, (N,))),
        lin_tensor(identity(QQ, (M,)), braiding(QQ, N, P)),
    )
    assert c_mn_p == second


def test_convolution_unit_neutral(h4):
    u = convolution_unit(h4.eps, h4.eta)
    lam = h4.lam
    assert convolution(u, lam, h4.delta, h4.mu) == lam
    assert convolution(lam, u, h4.delta, h4.mu) == lam


def test_antipode_convolution_identities(h4):
    # λ∗id = η∘ε on the Taft algebra
    i = identity(h4.field, (h4.obj,))
    u = convolution_unit(h4.eps, h4.eta)
    assert convolution(h4.lam, i, h4.delta, h4.mu) == u
    assert convolution(i, h4.lam, h4.delta, h4.mu) == u


def test_convolution_id_with_id_on_qc2(qc2):
    sq = convolution(identity(QQ, (qc2.obj,)), identity(QQ, (qc2.obj,)), qc2.delta, qc2.mu)
    # u ↦ u² collapses everything onto e
    assert sq.entries == {(0,): {(0,): Fraction(1)}, (1,): {(0,): Fraction(1)}}


def test_convolution_associative_on_h4(h4):
    f, g, h = h4.lam, identity(QQ, (h4.obj,)), h4.lam
    left = convolution(convolution(f, g, h4.delta, h4.mu), h, h4.delta, h4.mu)
    right = convolution(f, convolution(g, h, h4.delta, h4.mu), h4.delta, h4.mu)
    assert left == right


def test_convolution_inverse_of_antipode_is_identity(h4, fl):
    for s in (h4, fl):
        inv = convolution_inverse(s.lam, s.delta, s.eps, s.mu, s.eta)
        assert inv == identity(s.field, (s.obj,))


def test_convolution_inverse_of_identity_is_group_inverse(qc3):
    inv = convolution_inverse(identity(QQ, (qc3.obj,)), qc3.delta, qc3.eps, qc3.mu, qc3.eta)
    assert inv == qc3.lam


def test_convolution_inverse_of_unit_is_unit(h4):
    u = convolution_unit(h4.eps, h4.eta)
    assert convolution_inverse(u, h4.delta, h4.eps, h4.mu, h4.eta) == u


def test_convolution_inverse_cross_checks(qc2):
    g = convolution_inverse(qc2.lam, qc2.delta, qc2.eps, qc2.mu, qc2.eta)
    u = convolution_unit(qc2.eps, qc2.eta)
    assert convolution(qc2.lam, g, qc2.delta, qc2.mu) == u
    assert convolution(g, qc2.lam, qc2.delta, qc2.mu) == u


def test_zero_map_not_invertible(h4):
    z = zero_map(QQ, (h4.obj,), (h4.obj,))
    with pytest.raises(NotInvertibleError) as err:
        convolution_inverse(z, h4.delta, h4.eps, h4.mu, h4.eta)
    assert err.value.reason == "no-solution"


def test_one_sided_inverses_differ():
    # in the frozen 5-element loop, b has right inverse c but left inverse d;
    # K→A convolution against the basis vector b exposes the mismatch
    loop = hq.loop_from_table(["e", "a", "b", "c", "d"], NON_IP_TABLE_5, 0)
    assert loop.left_div(2, 0) == 3 and loop.right_div(0, 2) == 4
    F = QQ
    obj = Obj("L5", loop.elements)
    one = F.one()
    mu = LinMap(F, (obj, obj), (obj,), {
        (i, j): {(loop.mul(i, j),): one} for i in range(5) for j in range(5)
    })
    eta = LinMap(F, (), (obj,), {(): {(0,): one}})
    delta_k = identity(F, ())
    eps_k = identity(F, ())
    f = LinMap(F, (), (obj,), {(): {(2,): one}})  # the basis vector b
    with pytest.raises(NotInvertibleError) as err:
        convolution_inverse(f, delta_k, eps_k, mu, eta)
    assert err.value.reason == "one-sided-differ"


def test_linear_iso_checks(h4, fl):
    assert is_linear_iso(h4.lam)
    assert is_linear_iso(fl.lam)
    z = zero_map(QQ, (h4.obj,), (h4.obj,))
    assert not is_linear_iso(z)
    k = linear_kernel_vector(z)
    assert k and all(v != 0 for v in k.values())
    assert linear_kernel_vector(h4.lam) is None
