import collections
import dataclasses

import numpy as np
import pytest
from hypothesis import given

from xmodcat.crossed_module import group_GX
from xmodcat.exceptions import InvariantFailure
from xmodcat.group_core import (
    character_table,
    irreducible_representations,
    left_regular_representation,
    orbits,
    stabilizer,
    subgroup,
)
from xmodcat.rep_theory import (
    braiding,
    char_forms,
    character,
    check_frobenius,
    decompose,
    double_braiding_transparent,
    dual_object,
    functor_F_from_GX,
    gram_matrices,
    is_modular,
    is_modularizable,
    regular_object,
    rep_object,
    s_matrix,
    simple_objects,
    split_object,
    tensor_character,
    tensor_object,
    transparent_simples,
    twist_matrix,
    unit_object,
    vacuum_multiplicities,
    vacuum_object,
)
from xmodcat.rep_theory import _induced_simple
from xmodcat.settings import with_flag

from tests.strategies import crossed_modules


D_Z2_S = 0.5 * np.array(
    [
        [1, 1, 1, 1],
        [1, 1, -1, -1],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
    ]
)


def test_d_z2_modular_data(d_z2):
    table = simple_objects(d_z2)
    assert table.labels == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert table.dims == (1, 1, 1, 1)
    assert np.allclose(table.twists, [1, 1, 1, -1])

    md = s_matrix(table)
    assert np.allclose(md.S, D_Z2_S)
    assert md.transparent == (True, False, False, False)
    assert is_modular(md)
    assert transparent_simples(md) == (0,)


def test_d_s3_simples(d_s3):
    table = simple_objects(d_s3)
    assert table.dims == (1, 1, 2, 3, 3, 2, 2, 2)
    assert sum(d * d for d in table.dims) == 36
    rounded = collections.Counter(
        (round(t.real, 6) + 0.0, round(t.imag, 6) + 0.0) for t in np.asarray(table.twists, dtype=complex)
    )
    assert rounded[(1.0, 0.0)] == 5
    assert rounded[(-1.0, 0.0)] == 1
    assert rounded[(-0.5, round(np.sqrt(3) / 2, 6))] == 1
    assert rounded[(-0.5, -round(np.sqrt(3) / 2, 6))] == 1

    md = s_matrix(table)
    assert is_modular(md)
    assert np.allclose(md.S @ md.S.conj().T, np.eye(8))


def test_double_cover_transparency(x4):
    table = simple_objects(x4)
    assert len(table) == 16
    md = s_matrix(table)
    transparent = transparent_simples(md)
    assert len(transparent) == 4
    assert sum(table.dims[p] ** 2 for p in transparent) == x4.sub.D
    assert not is_modular(md)
    assert is_modularizable(md)
    assert double_braiding_transparent(table) == md.transparent


def test_trivial_boundary_is_symmetric(trivial_boundary_z2, z3_inversion):
    md = s_matrix(simple_objects(trivial_boundary_z2))
    assert np.allclose(md.S, 0.5)
    assert md.transparent == (True, True)
    assert vacuum_multiplicities(md).tolist() == [1, 1]

    table = simple_objects(z3_inversion)
    assert table.dims == (1, 1, 2)
    md = s_matrix(table)
    assert all(md.transparent)
    assert vacuum_multiplicities(md).tolist() == [1, 1, 2]


def test_vacuum_multiplicities(x4):
    md = s_matrix(simple_objects(x4))
    expected = [d if flag else 0 for d, flag in zip(md.dims, md.transparent)]
    assert vacuum_multiplicities(md).tolist() == expected


def test_character_forms(d_s3):
    table = simple_objects(d_s3)
    bilinear, hermitian = gram_matrices(d_s3, table.characters)
    assert np.allclose(bilinear, np.eye(len(table)))
    assert np.allclose(hermitian, np.eye(len(table)))
    assert np.allclose(char_forms(table.characters[3], table.characters[3], d_s3), (1, 1))
    assert np.allclose(char_forms(table.characters[3], table.characters[4], d_s3), (0, 0))


def test_twist_matrix_is_scalar(d_s3):
    table = simple_objects(d_s3)
    for obj, twist in zip(table.objects, table.twists):
        assert np.allclose(twist_matrix(obj), twist * np.eye(obj.dim))


def test_tensor_character_and_fusion(d_s3):
    table = simple_objects(d_s3)
    left, right = table.objects[2], table.objects[5]
    product = tensor_object(left, right)
    assert np.allclose(character(product), tensor_character(table.characters[2], table.characters[5], d_s3))

    md = s_matrix(table)
    assert np.array_equal(decompose(product, table), md.fusion[2, 5])
    assert int(md.fusion[2, 5] @ np.asarray(table.dims)) == 4


def test_d_z2_fusion_is_klein(d_z2):
    fusion = s_matrix(simple_objects(d_z2)).fusion
    assert np.array_equal(fusion.sum(axis=2), np.ones((4, 4), dtype=np.int64))
    for p in range(4):
        assert fusion[p, p, 0] == 1


def test_duals(d_s3):
    table = simple_objects(d_s3)
    fusion = s_matrix(table).fusion
    for p, obj in enumerate(table.objects):
        multiplicities = decompose(dual_object(obj), table)
        (q,) = np.flatnonzero(multiplicities)
        assert fusion[p, q, 0] == 1


def test_regular_object(x4):
    table = simple_objects(x4)
    assert decompose(regular_object(x4), table).tolist() == list(table.dims)
    assert decompose(unit_object(x4), table).tolist() == [1] + [0] * (len(table) - 1)


def test_braiding_naturality(d_s3):
    table = simple_objects(d_s3)
    left, right = table.objects[3], table.objects[6]
    product, swapped = tensor_object(left, right), tensor_object(right, left)
    R = braiding(left, right)
    assert np.allclose(R @ product.Q, swapped.Q @ R)
    assert np.allclose(R @ product.P, swapped.P @ R)


def test_rep_object_validation(d_z2):
    P = np.ones((2, 1, 1))
    Q = np.ones((2, 1, 1))
    with pytest.raises(InvariantFailure):
        rep_object(d_z2, P, Q)


def test_vacuum_frobenius(x4, z3_inversion):
    for x in (x4, z3_inversion):
        algebra = vacuum_object(x)
        assert algebra.dim == x.sub.D
        report = check_frobenius(algebra)
        assert report.passed, report.failed()
        assert np.isclose(report.beta_one, 1)
        assert np.isclose(report.beta_a, x.sub.D)


def test_functor_from_gx(x4):
    gx, _ = group_GX(x4)
    unit = functor_F_from_GX(x4, np.ones((gx.order, 1, 1)))
    assert np.allclose(character(unit), character(unit_object(x4)))

    regular = functor_F_from_GX(x4, left_regular_representation(gx))
    assert np.allclose(character(regular), character(vacuum_object(x4).obj))


@given(crossed_modules)
def test_transparent_subcategory(x):
    table = simple_objects(x)
    assert sum(d * d for d in table.dims) == x.x1.order * x.x2.order
    md = s_matrix(table)
    transparent = transparent_simples(md)
    assert sum(table.dims[p] ** 2 for p in transparent) == x.sub.D
    assert is_modular(md) == x.is_boundary_bijective()
    assert check_frobenius(vacuum_object(x)).passed


def test_split_regular_object(d_z2):
    table = simple_objects(d_z2)
    summands = split_object(regular_object(d_z2))
    assert len(summands) == 4
    found = sorted(int(np.argmax(decompose(summand, table))) for summand in summands)
    assert found == [0, 1, 2, 3]


def test_double_braiding_trace_is_s(d_z2, d_s3, x4):
    for x in (d_z2, d_s3, x4):
        table = simple_objects(x)
        md = s_matrix(table)
        for p, left in enumerate(table.objects):
            for q, right in enumerate(table.objects):
                trace = np.trace(braiding(right, left) @ braiding(left, right))
                assert np.isclose(trace, x.order * md.S[p, q])


def test_frobenius_detects_corrupted_multiplication(x4):
    algebra = vacuum_object(x4)
    m = algebra.m.copy()
    m[0, 1] += 1.0
    report = check_frobenius(dataclasses.replace(algebra, m=m))
    assert not report.passed
    assert "commutativity" in [law.name for law in report.failed()]


def test_characters_do_not_depend_on_transversal(d_s3):
    table = simple_objects(d_s3)
    p = 0
    for orbit in orbits(d_s3.mu):
        m0 = orbit[0]
        stab_group, embedding = subgroup(d_s3.x1, stabilizer(d_s3.mu, m0))
        largest = {}
        for g in reversed(d_s3.x1.elements):
            largest.setdefault(d_s3.act(m0, g), g)
        for matrices in irreducible_representations(stab_group, character_table(stab_group)):
            obj = _induced_simple(d_s3, orbit, largest, embedding, matrices)
            assert np.allclose(character(obj), table.characters[p])
            p += 1
    assert p == len(table)


def test_cached_results_follow_settings(d_z2):
    first = simple_objects(d_z2)
    assert simple_objects(d_z2) is first
    with with_flag("seed", 5):
        reseeded = simple_objects(d_z2)
    assert reseeded is not first
    assert reseeded.seed == 5
    assert simple_objects(d_z2) is first

    algebra = vacuum_object(d_z2)
    with with_flag("tolerance", 1e-9):
        assert vacuum_object(d_z2) is not algebra
    assert vacuum_object(d_z2) is algebra
