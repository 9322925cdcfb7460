from fractions import Fraction

import pytest

from hopfqg.fields import QQ
from hopfqg.linmap import (
    CompositionError,
    LinMap,
    Obj,
    ShapeError,
    identity,
    lin_apply,
    lin_compose,
    lin_tensor,
    perm_map,
    pipeline,
    regroup,
    zero_map,
)

M3 = Obj("M", ("a", "b", "c"))
N2 = Obj("N", ("p", "q"))


def test_obj_validation():
    with pytest.raises(ShapeError):
        Obj("X", ())
    with pytest.raises(ShapeError):
        Obj("X", ("a", "a"))


def test_identity_apply_basis_vector():
    i = identity(QQ, (M3,))
    assert lin_apply(i, {(1,): Fraction(1)}) == {(1,): Fraction(1)}


def test_zero_map_applies_to_empty():
    z = zero_map(QQ, (M3,), (N2,))
    assert lin_apply(z, {(0,): Fraction(2)}) == {}


def test_apply_mu_of_group_algebra_c2(qc2):
    g = (1, 1)  # g ⊗ g
    out = lin_apply(qc2.mu, {g: Fraction(1)})
    assert out == {(0,): Fraction(1)}  # g·g = e


def test_apply_strips_cancellation():
    f = LinMap(QQ, (N2,), (M3,), {(0,): {(0,): Fraction(1)}, (1,): {(0,): Fraction(-1)}})
    out = lin_apply(f, {(0,): Fraction(1), (1,): Fraction(1)})
    assert out == {}


def test_apply_arity_mismatch():
    i = identity(QQ, (M3,))
    with pytest.raises(ShapeError):
        lin_apply(i, {(0, 0): Fraction(1)})


def test_compose_identity_neutral():
    f = LinMap(QQ, (N2,), (M3,), {(0,): {(2,): Fraction(3, 2)}})
    assert lin_compose(identity(QQ, (M3,)), f) == f
    assert lin_compose(f, identity(QQ, (N2,))) == f


def test_compose_counit_coproduct_is_identity(h4):
    eps_id = lin_tensor(h4.eps, identity(h4.field, (h4.obj,)))
    assert lin_compose(eps_id, h4.delta) == identity(h4.field, (h4.obj,))


def test_compose_mu_delta_on_qc2(qc2):
    sq = lin_compose(qc2.mu, qc2.delta)  # u ↦ u·u
    assert sq.entries == {(0,): {(0,): Fraction(1)}, (1,): {(0,): Fraction(1)}}


def test_compose_shape_mismatch_message():
    f = identity(QQ, (M3,))
    g = identity(QQ, (N2,))
    with pytest.raises(CompositionError) as err:
        lin_compose(f, g)
    assert "M" in str(err.value) and "N" in str(err.value)


def test_tensor_of_identities_is_identity():
    assert lin_tensor(identity(QQ, (M3,)), identity(QQ, (N2,))) == identity(QQ, (M3, N2))


def test_tensor_entry_count_multiplies(qc2, h4):
    t = lin_tensor(qc2.mu, h4.delta)
    assert t.entry_count() == qc2.mu.entry_count() * h4.delta.entry_count()


def test_tensor_mu_componentwise_on_all_pairs(qc2):
    # oracle: brute-force both ways over the 16 basis pairs of (A⊗A)⊗(A⊗A)
    t = lin_tensor(qc2.mu, qc2.mu)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    out = lin_apply(t, {(i, j, k, l): Fraction(1)})
                    left = qc2.mu.entries[(i, j)]
                    right = qc2.mu.entries[(k, l)]
                    expected = {
                        (a[0], b[0]): va * vb
                        for a, va in left.items()
                        for b, vb in right.items()
                    }
                    assert out == expected


def test_perm_identity():
    assert perm_map(QQ, (M3, N2), (0, 1)) == identity(QQ, (M3, N2))


def test_perm_swap_involution():
    s1 = perm_map(QQ, (N2, M3), (1, 0))
    s2 = perm_map(QQ, (M3, N2), (1, 0))
    assert lin_compose(s1, s2) == identity(QQ, (M3, N2))


def test_perm_three_cycle_order_three():
    o2 = Obj("P", ("0", "1"))
    cyc = perm_map(QQ, (o2, o2, o2), (1, 2, 0))
    composed = lin_compose(cyc, lin_compose(cyc, cyc))
    assert composed == identity(QQ, (o2, o2, o2))
    assert lin_compose(cyc, cyc) != identity(QQ, (o2, o2, o2))


def test_perm_invalid():
    with pytest.raises(ShapeError):
        perm_map(QQ, (M3, N2), (0, 0))


def test_rationals_stay_reduced_through_ops():
    f = LinMap(QQ, (N2,), (N2,), {(0,): {(0,): Fraction(2, 4)}, (1,): {(1,): Fraction(9, 6)}})
    g = lin_compose(f, f)
    for col in g.entries.values():
        for v in col.values():
            from math import gcd

            assert gcd(v.numerator, v.denominator) == 1
            assert v.denominator > 0


def test_pipeline_matches_materialized_composition(h4):
    i = identity(h4.field, (h4.obj,))
    lazy = pipeline(h4.mu, (h4.lam, h4.mu), (h4.delta, i))
    eager = lin_compose(
        h4.mu, lin_compose(lin_tensor(h4.lam, h4.mu), lin_tensor(h4.delta, i))
    )
    assert lazy == eager


def test_regroup_round_trip(h4, qc2):
    from hopfqg.structures import product_obj

    t = lin_tensor(qc2.mu, h4.lam)
    w = product_obj("W", (qc2.obj, qc2.obj))
    with pytest.raises(CompositionError):
        regroup(t, (w,), t.codomain)  # wrong flattened space
    w2 = product_obj("P", (qc2.obj, qc2.obj, h4.obj))
    grouped = regroup(t, (w2,), t.codomain)
    assert regroup(grouped, t.domain, t.codomain) == t
