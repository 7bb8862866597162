import logging

import numpy as np
import pytest
from hypothesis import given

from xmodcat.exceptions import (
    NotAGroup,
    NotNormal,
    NotAbelian,
    NotAHomomorphism,
    NotAnAction,
    NotAutomorphism,
    NumericalDegeneracy,
)
from xmodcat.group_core import (
    character_table,
    conjugacy_classes,
    cyclic_group,
    direct_product,
    dual_group,
    find_isomorphism,
    group_action,
    group_from_table,
    group_hom,
    irreducible_representations,
    is_abelian,
    is_isomorphic_by_statistics,
    image,
    kernel,
    order_statistics,
    orbits,
    conjugation_action,
    quotient,
    semidirect_product,
    stabilizer,
    subgroup,
    symmetric_group,
)
from xmodcat.settings import with_flag

from tests.strategies import small_groups, relabeled


# An order-5 loop: every row and column is a permutation but 1·1 = 0 contradicts Lagrange.
LOOP5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def test_identity_violation_witness():
    with pytest.raises(NotAGroup) as info:
        group_from_table([[1, 0], [0, 1]])
    assert info.value.witness == (0, 0, 1)


def test_latin_square_violation():
    with pytest.raises(NotAGroup) as info:
        group_from_table([[0, 1], [1, 1]])
    assert info.value.witness == (1,)


def test_associativity_violation_witness():
    with pytest.raises(NotAGroup) as info:
        group_from_table(LOOP5)
    a, b, c = info.value.witness
    table = np.asarray(LOOP5)
    assert table[table[a, b], c] != table[a, table[b, c]]


def test_malformed_tables():
    with pytest.raises(NotAGroup):
        group_from_table([])
    with pytest.raises(NotAGroup):
        group_from_table([[0, 1, 2], [1, 0, 2]])
    with pytest.raises(NotAGroup):
        group_from_table([[0, 5], [5, 0]])


def test_symmetric_group():
    s3 = symmetric_group(3)
    assert s3.order == 6
    assert not is_abelian(s3)
    classes = conjugacy_classes(s3)
    assert classes.classes == ((0,), (1, 2, 5), (3, 4))
    assert classes.representatives == (0, 1, 3)
    assert classes.sizes == (1, 3, 2)
    for g in s3.elements:
        assert s3.mul(g, s3.inv(g)) == 0


def test_character_table_s3():
    table = character_table(symmetric_group(3))
    assert table.degrees == (1, 1, 2)
    assert np.allclose(table.chars[0], 1)
    assert np.allclose(table.chars[1], [1, -1, 1])
    assert np.allclose(table.chars[2], [2, 0, -1])


def test_character_table_is_seed_independent():
    first = character_table(symmetric_group(3), seed=0)
    second = character_table(symmetric_group(3), seed=7)
    assert first.degrees == second.degrees
    assert np.allclose(first.chars, second.chars)
    assert second.seed == 7


def test_character_table_degeneracy(monkeypatch):
    class FlatGenerator:
        def standard_normal(self, size):
            return np.zeros(size)

    monkeypatch.setattr("xmodcat.group_core.make_rng", lambda seed: FlatGenerator())
    with with_flag("retry_budget", 3):
        with pytest.raises(NumericalDegeneracy):
            character_table(cyclic_group(3))


def test_character_table_resamples_on_collision(monkeypatch, caplog):
    class FirstSampleFlat:
        def __init__(self):
            self.rng = np.random.default_rng(0)
            self.calls = 0

        def standard_normal(self, size):
            self.calls += 1
            return np.zeros(size) if self.calls == 1 else self.rng.standard_normal(size)

    monkeypatch.setattr("xmodcat.group_core.make_rng", lambda seed: FirstSampleFlat())
    with caplog.at_level(logging.DEBUG, logger="xmodcat.group_core"):
        table = character_table(cyclic_group(3))
    assert "eigenvalue collision on attempt 0" in caplog.text
    assert "attempt 0 rejected" not in caplog.text
    assert table.degrees == (1, 1, 1)


@given(small_groups)
def test_character_orthogonality(group):
    table = character_table(group)
    sizes = np.asarray(table.classes.sizes)
    assert sum(d * d for d in table.degrees) == group.order
    gram = (table.chars * sizes[None, :]) @ table.chars.conj().T / group.order
    assert np.allclose(gram, np.eye(len(table)))
    assert np.allclose(table.chars[0], 1)


@given(small_groups.flatmap(lambda group: relabeled(group).map(lambda other: (group, other))))
def test_relabeling_is_isomorphic(groups):
    group, other = groups
    assert order_statistics(group) == order_statistics(other)
    iso = find_isomorphism(group, other)
    assert iso is not None and iso.is_bijective()


def test_non_isomorphic():
    assert find_isomorphism(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))) is None
    assert find_isomorphism(cyclic_group(6), symmetric_group(3)) is None


def test_semidirect_product_is_s3():
    z2, z3 = cyclic_group(2), cyclic_group(3)
    inversion = group_action(z2, [[0, 1, 2], [0, 2, 1]], on=z3)
    product = semidirect_product(z3, z2, inversion)
    assert product.order == 6
    assert not is_abelian(product)
    assert find_isomorphism(product, symmetric_group(3)) is not None


def test_direct_product():
    product = direct_product(cyclic_group(2), cyclic_group(3))
    assert is_abelian(product)
    assert find_isomorphism(product, cyclic_group(6)) is not None


def test_quotient_and_subgroup():
    z4 = cyclic_group(4)
    coset, projection = quotient(z4, [0, 2])
    assert coset.order == 2
    assert projection.map.tolist() == [0, 1, 0, 1]

    sub, embedding = subgroup(z4, [0, 2])
    assert sub.order == 2
    assert embedding.map.tolist() == [0, 2]

    s3 = symmetric_group(3)
    with pytest.raises(NotNormal):
        quotient(s3, [0, 1])
    with pytest.raises(NotAGroup):
        subgroup(s3, [0, 3])


def test_dual_group():
    dual, pairing = dual_group(cyclic_group(4))
    assert dual.order == 4
    assert np.allclose(pairing[0], 1)
    assert find_isomorphism(dual, cyclic_group(4)) is not None
    with pytest.raises(NotAbelian):
        dual_group(symmetric_group(3))


def test_homomorphism_and_action_validation():
    with pytest.raises(NotAHomomorphism):
        group_hom(cyclic_group(2), cyclic_group(3), [0, 1])
    with pytest.raises(NotAHomomorphism):
        group_hom(cyclic_group(2), cyclic_group(2), [1, 0])
    with pytest.raises(NotAnAction):
        group_action(cyclic_group(2), [[0, 1, 2], [0, 1, 1]])
    with pytest.raises(NotAutomorphism):
        group_action(cyclic_group(2), [[0, 1, 2], [1, 0, 2]], on=cyclic_group(3))


def test_orbits_and_stabilizers():
    s3 = symmetric_group(3)
    action = conjugation_action(s3)
    assert orbits(action) == [(0,), (1, 2, 5), (3, 4)]
    assert stabilizer(action, 0) == tuple(range(6))
    assert len(stabilizer(action, 1)) == 2
    assert len(stabilizer(action, 3)) == 3


def test_irreducible_representations():
    s3 = symmetric_group(3)
    table = character_table(s3)
    irreps = irreducible_representations(s3, table)
    for row, matrices in enumerate(irreps):
        degree = table.degrees[row]
        assert matrices.shape == (6, degree, degree)
        assert np.allclose(np.trace(matrices, axis1=1, axis2=2), table.values(row))
        assert np.allclose(matrices @ np.conj(np.transpose(matrices, (0, 2, 1))), np.eye(degree))
        assert np.allclose(matrices[:, None] @ matrices[None, :], matrices[s3.table])


def test_kernel_and_image():
    doubling = group_hom(cyclic_group(4), cyclic_group(4), [0, 2, 0, 2])
    assert kernel(doubling) == (0, 2)
    assert image(doubling) == (0, 2)
    assert not doubling.is_injective()
    assert not doubling.is_surjective()


def test_isomorphism_statistics():
    assert is_isomorphic_by_statistics(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3)))
    assert not is_isomorphic_by_statistics(cyclic_group(6), symmetric_group(3))
    assert not is_isomorphic_by_statistics(cyclic_group(4), cyclic_group(5))
