import numpy as np
import pytest
from hypothesis import given

from xmodcat.crossed_module import (
    coker_action_on_K,
    crossed_module,
    drinfeld_double,
    group_GX,
    quotient_xbar,
    restricted_xprime,
    transport_to_double,
    trivial_crossed_module,
)
from xmodcat.exceptions import (
    EquivarianceViolation,
    InvariantFailure,
    NotAnAction,
    NotAutomorphism,
    NotAHomomorphism,
    PeifferViolation,
)
from xmodcat.group_core import cyclic_group, direct_product, find_isomorphism, is_abelian, symmetric_group

from tests.strategies import crossed_modules


def test_drinfeld_double(d_z2, d_s3):
    assert d_z2.is_boundary_bijective()
    assert d_z2.sub.K == (0,)
    assert d_z2.sub.I == (0, 1)
    assert d_z2.sub.C.order == 1
    assert d_z2.sub.D == 1
    assert d_z2.order == 2

    assert d_s3.is_boundary_bijective()
    assert d_s3.act(1, 3) == d_s3.x1.conjugate(1, 3)


def test_double_cover_subquotients(x4):
    sub = x4.sub
    assert sub.K == (0, 2)
    assert sub.I == (0, 2)
    assert sub.C.order == 2
    assert sub.D == 4
    assert x4.order == 8
    assert not x4.is_boundary_bijective()


def test_peiffer_witness():
    z2, z4 = cyclic_group(2), cyclic_group(4)
    with pytest.raises(PeifferViolation) as info:
        crossed_module(z2, z4, [[0, 1, 2, 3], [0, 3, 2, 1]], [0, 1, 0, 1])
    assert info.value.witness == {"m": 1, "n": 1}
    assert info.value.axiom == "Peiffer"


def test_equivariance_witness():
    # Z2 swaps the factors of Z2 × Z2 but ∂ projects onto the first one
    klein = direct_product(cyclic_group(2), cyclic_group(2))
    with pytest.raises(EquivarianceViolation) as info:
        crossed_module(cyclic_group(2), klein, [[0, 1, 2, 3], [0, 2, 1, 3]], [0, 1, 0, 1])
    assert info.value.witness == {"m": 1, "g": 1}


def test_malformed_components():
    z2, z3 = cyclic_group(2), cyclic_group(3)
    with pytest.raises(NotAnAction):
        crossed_module(z2, z3, [[0, 1, 2], [0, 1, 1]], [0, 0, 0])
    with pytest.raises(NotAutomorphism):
        crossed_module(z2, z3, [[0, 1, 2], [1, 0, 2]], [0, 0, 0])
    with pytest.raises(NotAHomomorphism):
        crossed_module(z2, z3, [[0, 1, 2], [0, 2, 1]], [0, 1, 1])


def test_trivial_crossed_module():
    x = trivial_crossed_module()
    assert x.order == 1
    assert x.is_boundary_bijective()
    gx, labeling = group_GX(x)
    assert gx.order == 1
    assert labeling.labels == ((0, 0),)


def test_coker_action(z3_inversion):
    action = coker_action_on_K(z3_inversion)
    assert action.perm.tolist() == [[0, 1, 2], [0, 2, 1]]


def test_gx_of_inversion_is_s3(z3_inversion):
    gx, labeling = group_GX(z3_inversion)
    assert gx.order == 6
    assert not is_abelian(gx)
    assert find_isomorphism(gx, symmetric_group(3)) is not None
    assert labeling.labels == tuple((i % 3, i // 3) for i in range(6))
    assert labeling(4) == (1, 1)
    assert labeling.index(1, 1) == 4


def test_gx_of_double_cover(x4, d_s3):
    gx, _ = group_GX(x4)
    assert gx.order == 4
    assert is_abelian(gx)
    assert find_isomorphism(gx, direct_product(cyclic_group(2), cyclic_group(2))) is not None

    gx, _ = group_GX(d_s3)
    assert gx.order == 1


def test_xbar_of_double_cover(x4):
    xbar, maps = quotient_xbar(x4)
    assert xbar.is_boundary_bijective()
    assert xbar.x1.order == 2
    assert xbar.x2.order == 2
    assert maps.projection.map.tolist() == [0, 1, 0, 1]
    assert maps.inclusion.map.tolist() == [0, 2]

    double, boundary = transport_to_double(xbar)
    assert np.array_equal(double.x1.table, xbar.x1.table)
    assert np.array_equal(boundary.map[xbar.mu.perm], double.mu.perm[:, boundary.map])


def test_xprime(x4):
    xprime = restricted_xprime(x4)
    assert xprime.x1.order == 2
    assert xprime.x2 is x4.x2
    assert xprime.boundary.is_surjective()
    assert xprime.sub.K == x4.sub.K
    assert xprime.sub.C.order == 1


def test_transport_requires_bijection(x4):
    with pytest.raises(InvariantFailure):
        transport_to_double(x4)


@given(crossed_modules)
def test_subquotient_bookkeeping(x):
    sub = x.sub
    assert len(sub.K) * len(sub.I) == x.x2.order
    assert len(sub.I) * sub.C.order == x.x1.order
    assert sub.abs_x == x.x2.order * sub.C.order
    assert sub.D == len(sub.K) * sub.C.order

    gx, labeling = group_GX(x)
    assert gx.order == sub.D
    assert len(labeling.labels) == gx.order

    xbar, _ = quotient_xbar(x)
    assert xbar.is_boundary_bijective()
    assert xbar.x1.order == len(sub.I)


def test_double_of_nonabelian_group():
    x = drinfeld_double(symmetric_group(3), name="d")
    assert x.name == "d"
    gx, _ = group_GX(x)
    assert gx.order == 1
    xbar, _ = quotient_xbar(x)
    assert xbar.x1.order == 6
