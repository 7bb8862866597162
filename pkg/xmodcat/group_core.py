"""
Finite groups given by explicit Cayley tables, together with the small amount of computational group theory the
rest of the package is built on: homomorphisms, actions, orbits, quotients, semidirect products, character tables
and explicit unitary irreducible representations.

Conventions:

- Element ``0`` is the identity of every group constructed here, including subgroups, quotients, duals and
  semidirect products.
- ``table[a, b]`` is the product ``a·b``.
- Actions are right actions stored as ``perm[g, m] = m^g`` so that ``(m^g)^h = m^{gh}``.
"""
from __future__ import annotations

import dataclasses
import itertools
import logging
import math
import typing

import numpy as np

from xmodcat.exceptions import (
    NotAGroup,
    NotNormal,
    NotAbelian,
    NotAutomorphism,
    NotAHomomorphism,
    NotAnAction,
    NumericalDegeneracy,
    InvariantFailure,
)
from xmodcat.settings import Settings
from xmodcat.utils import round_guarded, complex_key, make_rng, random_hermitian, max_residual

logger = logging.getLogger(__name__)


def _readonly(array, dtype) -> np.ndarray:
    ret = np.array(array, dtype=dtype)
    ret.setflags(write=False)
    return ret


# ------------------------------------------
# Data types
# ------------------------------------------
@dataclasses.dataclass(frozen=True, eq=False)
class FiniteGroup:
    """
    Attributes:
        table (np.ndarray): ``n × n`` Cayley table of element indices.
        inverse (np.ndarray): ``inverse[a]`` is the index of ``a⁻¹``.
        name (str): Optional human readable name.
    """

    table: np.ndarray
    inverse: np.ndarray
    name: str = ""

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conjugate(self, m: int, g: int) -> int:
        """Returns ``g⁻¹ m g``."""
        return int(self.table[self.table[self.inverse[g], m], g])

    def __repr__(self) -> str:
        name = f"'{self.name}', " if self.name else ""
        return f"{self.__class__.__name__}({name}order={self.order})"


@dataclasses.dataclass(frozen=True, eq=False)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    map: np.ndarray

    def __call__(self, a: int) -> int:
        return int(self.map[a])

    def is_injective(self) -> bool:
        return len(set(self.map.tolist())) == self.source.order

    def is_surjective(self) -> bool:
        return len(set(self.map.tolist())) == self.target.order

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()


@dataclasses.dataclass(frozen=True, eq=False)
class GroupAction:
    """
    A right action of :attr:`group` on ``range(set_size)``.

    Attributes:
        group (FiniteGroup): The acting group.
        perm (np.ndarray): ``perm[g, m] = m^g``.
    """

    group: FiniteGroup
    perm: np.ndarray

    @property
    def set_size(self) -> int:
        return int(self.perm.shape[1])

    def __call__(self, m: int, g: int) -> int:
        return int(self.perm[g, m])

    def is_trivial(self) -> bool:
        return bool(np.all(self.perm == np.arange(self.set_size)[None, :]))


@dataclasses.dataclass(frozen=True, eq=False)
class ConjugacyClasses:
    """
    Attributes:
        classes (tuple[tuple[int, ...], ...]): Classes ordered by their smallest member, members sorted.
        representatives (tuple[int, ...]): The smallest member of each class.
        class_of (np.ndarray): ``class_of[g]`` is the index of the class containing ``g``.
    """

    classes: tuple
    representatives: tuple
    class_of: np.ndarray

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple:
        return tuple(len(cls) for cls in self.classes)


@dataclasses.dataclass(frozen=True, eq=False)
class CharacterTable:
    """
    Attributes:
        group (FiniteGroup): The group.
        classes (ConjugacyClasses): Column labels.
        chars (np.ndarray): ``chars[i, j]`` is the value of the i-th irreducible character on class j.
        degrees (tuple[int, ...]): ``chars[i, 0]`` rounded.
        seed (int): Seed that produced the simultaneous diagonalisation.
    """

    group: FiniteGroup
    classes: ConjugacyClasses
    chars: np.ndarray
    degrees: tuple
    seed: int = 0

    def __len__(self) -> int:
        return len(self.degrees)

    def values(self, index: int) -> np.ndarray:
        """The i-th character as a function on group elements."""
        return self.chars[index, self.classes.class_of]


# ------------------------------------------
# Construction and validation
# ------------------------------------------
def group_from_table(table: typing.Sequence[typing.Sequence[int]], name: str = "") -> FiniteGroup:
    """
    Arguments:
        table (array-like): Square array with ``table[i][j]`` the index of ``i·j``; index 0 must be the identity.
        name (str): Optional name carried along for reports.
    Returns:
        FiniteGroup: The validated group with inverses computed.
    Raises:
        NotAGroup: On the first identity, Latin-square or associativity failure; :attr:`NotAGroup.witness`
            names the offending entries.
    """
    try:
        array = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as err:
        raise NotAGroup("Cayley table is not an integer array") from err

    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise NotAGroup(f"Cayley table must be a non-empty square array, got shape {array.shape}")
    n = array.shape[0]
    if np.any(array < 0) or np.any(array >= n):
        bad = tuple(int(i) for i in np.argwhere((array < 0) | (array >= n))[0])
        raise NotAGroup(f"entry at {bad} is not an element index below {n}", witness=bad)

    for j in range(n):
        if array[0, j] != j:
            raise NotAGroup(f"0·{j} = {array[0, j]}, index 0 is not a left identity", witness=(0, j, int(array[0, j])))
        if array[j, 0] != j:
            raise NotAGroup(f"{j}·0 = {array[j, 0]}, index 0 is not a right identity", witness=(j, 0, int(array[j, 0])))

    expected = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(array[i]), expected):
            raise NotAGroup(f"row {i} is not a permutation", witness=(i,))
        if not np.array_equal(np.sort(array[:, i]), expected):
            raise NotAGroup(f"column {i} is not a permutation", witness=(i,))

    index = np.arange(n)
    left = array[array[:, :, None], index[None, None, :]]
    right = array[index[:, None, None], array[None, :, :]]
    failures = np.argwhere(left != right)
    if len(failures):
        a, b, c = (int(value) for value in failures[0])
        raise NotAGroup(f"({a}·{b})·{c} ≠ {a}·({b}·{c})", witness=(a, b, c))

    inverse = np.argmax(array == 0, axis=1)
    return FiniteGroup(table=_readonly(array, np.int64), inverse=_readonly(inverse, np.int64), name=name)


def group_hom(source: FiniteGroup, target: FiniteGroup, mapping: typing.Sequence[int]) -> GroupHom:
    """
    Raises:
        NotAHomomorphism: If ``mapping`` does not have one entry per source element, misses the identity or
            fails ``map[x·y] = map[x]·map[y]``.
    """
    mapping = np.asarray(mapping, dtype=np.int64)
    if mapping.shape != (source.order,) or np.any(mapping < 0) or np.any(mapping >= target.order):
        raise NotAHomomorphism(f"map must be {source.order} indices below {target.order}")
    if mapping[0] != 0:
        raise NotAHomomorphism("identity is not mapped to identity")
    failures = np.argwhere(mapping[source.table] != target.table[mapping[:, None], mapping[None, :]])
    if len(failures):
        x, y = (int(value) for value in failures[0])
        raise NotAHomomorphism(f"map({x}·{y}) ≠ map({x})·map({y})")
    return GroupHom(source=source, target=target, map=_readonly(mapping, np.int64))


def group_action(
    group: FiniteGroup, perm: typing.Sequence[typing.Sequence[int]], on: FiniteGroup = None
) -> GroupAction:
    """
    Arguments:
        group (FiniteGroup): The acting group.
        perm (array-like): ``perm[g][m] = m^g``.
        on (FiniteGroup | None): If given, the acted-on set is this group and every ``m ↦ m^g`` must be an
            automorphism.
    Raises:
        NotAnAction: If the rows are not permutations or the right-action law fails.
        NotAutomorphism: If ``on`` is given and some ``m ↦ m^g`` is not an automorphism.
    """
    perm = np.asarray(perm, dtype=np.int64)
    if perm.ndim != 2 or perm.shape[0] != group.order:
        raise NotAnAction(f"action needs one row per element of the acting group ({group.order})")
    size = perm.shape[1]
    expected = np.arange(size)
    for g in group.elements:
        if not np.array_equal(np.sort(perm[g]), expected):
            raise NotAnAction(f"m ↦ m^{g} is not a permutation")
    if not np.array_equal(perm[0], expected):
        raise NotAnAction("the identity does not act trivially")

    composed = perm[np.arange(group.order)[None, :, None], perm[:, None, :]]
    failures = np.argwhere(perm[group.table] != composed)
    if len(failures):
        g, h, m = (int(value) for value in failures[0])
        raise NotAnAction(f"(m^g)^h ≠ m^(gh) at g={g}, h={h}, m={m}")

    if on is not None:
        if on.order != size:
            raise NotAutomorphism(f"action is on {size} points but the group has order {on.order}")
        images = perm[:, on.table]
        products = on.table[perm[:, :, None], perm[:, None, :]]
        failures = np.argwhere(images != products)
        if len(failures):
            g = int(failures[0][0])
            raise NotAutomorphism(f"m ↦ m^{g} is not an automorphism")

    return GroupAction(group=group, perm=_readonly(perm, np.int64))


def trivial_action(group: FiniteGroup, set_size: int) -> GroupAction:
    return group_action(group, np.tile(np.arange(set_size), (group.order, 1)))


def conjugation_action(group: FiniteGroup) -> GroupAction:
    """The right action ``m^g = g⁻¹ m g`` of a group on itself."""
    table, inverse = group.table, group.inverse
    perm = table[table[inverse[:, None], np.arange(group.order)[None, :]], np.arange(group.order)[:, None]]
    return group_action(group, perm, on=group)


# ------------------------------------------
# Standard groups
# ------------------------------------------
def cyclic_group(n: int) -> FiniteGroup:
    index = np.arange(n)
    return group_from_table((index[:, None] + index[None, :]) % n, name=f"Z{n}")


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def symmetric_group(n: int) -> FiniteGroup:
    """Permutations of ``range(n)`` in lexicographic order, multiplied as ``(p·q)(i) = p(q(i))``."""
    perms = list(itertools.permutations(range(n)))
    lookup = {perm: index for index, perm in enumerate(perms)}
    table = [[lookup[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return group_from_table(table, name=f"S{n}")


def direct_product(left: FiniteGroup, right: FiniteGroup) -> FiniteGroup:
    return semidirect_product(left, right, trivial_action(right, left.order))


# ------------------------------------------
# Elementary structure
# ------------------------------------------
def is_abelian(group: FiniteGroup) -> bool:
    return bool(np.array_equal(group.table, group.table.T))


def element_order(group: FiniteGroup, g: int) -> int:
    order, power = 1, g
    while power != 0:
        power = group.mul(power, g)
        order += 1
    return order


def order_statistics(group: FiniteGroup) -> tuple:
    """Sorted multiset of element orders together with the conjugacy class sizes."""
    orders = tuple(sorted(element_order(group, g) for g in group.elements))
    return orders, tuple(sorted(conjugacy_classes(group).sizes))


def is_isomorphic_by_statistics(left: FiniteGroup, right: FiniteGroup) -> bool:
    """Compares element-order multisets and class sizes, a necessary condition for isomorphism."""
    return left.order == right.order and order_statistics(left) == order_statistics(right)


def generated_subgroup(group: FiniteGroup, generators: typing.Iterable[int]) -> tuple:
    members = {0}
    frontier = [0]
    generators = list(generators)
    while frontier:
        a = frontier.pop()
        for g in generators:
            b = group.mul(a, g)
            if b not in members:
                members.add(b)
                frontier.append(b)
    return tuple(sorted(members))


def is_subgroup(group: FiniteGroup, elements: typing.Iterable[int]) -> bool:
    elements = np.asarray(sorted(set(elements)), dtype=np.int64)
    if len(elements) == 0 or elements[0] != 0:
        return False
    members = np.zeros(group.order, dtype=bool)
    members[elements] = True
    return bool(np.all(members[group.table[elements[:, None], elements[None, :]]]))


def is_normal(group: FiniteGroup, elements: typing.Iterable[int]) -> bool:
    elements = np.asarray(sorted(set(elements)), dtype=np.int64)
    members = np.zeros(group.order, dtype=bool)
    members[elements] = True
    table, inverse = group.table, group.inverse
    conjugates = table[table[inverse[:, None], elements[None, :]], np.arange(group.order)[:, None]]
    return bool(np.all(members[conjugates]))


def conjugacy_classes(group: FiniteGroup) -> ConjugacyClasses:
    """
    Returns:
        ConjugacyClasses: Classes ordered by smallest member, the identity class first.
    """
    classes = orbits(conjugation_action(group))
    class_of = np.empty(group.order, dtype=np.int64)
    for index, members in enumerate(classes):
        class_of[list(members)] = index
    return ConjugacyClasses(
        classes=tuple(classes),
        representatives=tuple(members[0] for members in classes),
        class_of=_readonly(class_of, np.int64),
    )


def orbits(action: GroupAction) -> list[tuple]:
    """
    Returns:
        list[tuple[int, ...]]: The orbits, each sorted, ordered by smallest member.
    """
    seen = np.zeros(action.set_size, dtype=bool)
    ret = []
    for point in range(action.set_size):
        if seen[point]:
            continue
        members = np.unique(action.perm[:, point])
        seen[members] = True
        ret.append(tuple(int(m) for m in members))
    return ret


def stabilizer(action: GroupAction, point: int) -> tuple:
    return tuple(int(g) for g in np.flatnonzero(action.perm[:, point] == point))


def kernel(hom: GroupHom) -> tuple:
    return tuple(int(x) for x in np.flatnonzero(hom.map == 0))


def image(hom: GroupHom) -> tuple:
    return tuple(int(x) for x in np.unique(hom.map))


def subgroup(group: FiniteGroup, elements: typing.Iterable[int], name: str = "") -> tuple[FiniteGroup, GroupHom]:
    """
    Arguments:
        group (FiniteGroup): The ambient group.
        elements (Iterable[int]): The members; must contain 0 and be closed under multiplication.
    Returns:
        tuple[FiniteGroup, GroupHom]: The subgroup re-indexed in increasing order of ambient index, and its
        embedding into ``group``.
    Raises:
        NotAGroup: If ``elements`` is not a subgroup.
    """
    members = sorted(set(int(x) for x in elements))
    if not is_subgroup(group, members):
        raise NotAGroup(f"{members} is not a subgroup")
    lookup = np.full(group.order, -1, dtype=np.int64)
    lookup[members] = np.arange(len(members))
    members = np.asarray(members, dtype=np.int64)
    sub = group_from_table(lookup[group.table[members[:, None], members[None, :]]], name=name)
    return sub, group_hom(sub, group, members)


def quotient(group: FiniteGroup, normal: typing.Iterable[int], name: str = "") -> tuple[FiniteGroup, GroupHom]:
    """
    Returns:
        tuple[FiniteGroup, GroupHom]: The quotient, its cosets indexed in order of their smallest member (so the
        identity coset is 0), and the surjective projection.
    Raises:
        NotAGroup: If ``normal`` is not a subgroup.
        NotNormal: If it is a subgroup but not normal.
    """
    normal = sorted(set(int(x) for x in normal))
    if not is_subgroup(group, normal):
        raise NotAGroup(f"{normal} is not a subgroup")
    if not is_normal(group, normal):
        raise NotNormal(f"{normal} is not a normal subgroup")

    projection = np.full(group.order, -1, dtype=np.int64)
    representatives = []
    for g in group.elements:
        if projection[g] >= 0:
            continue
        projection[group.table[g, normal]] = len(representatives)
        representatives.append(g)
    representatives = np.asarray(representatives, dtype=np.int64)
    table = projection[group.table[representatives[:, None], representatives[None, :]]]
    quotient_group = group_from_table(table, name=name)
    return quotient_group, group_hom(group, quotient_group, projection)


def semidirect_product(normal: FiniteGroup, acting: FiniteGroup, action: GroupAction, name: str = "") -> FiniteGroup:
    """
    Elements ``(n, h)`` are indexed ``n + |N|·h`` and multiply as

    .. math:: (n_1, h_1)(n_2, h_2) = (n_1 \\cdot n_2^{h_1^{-1}},\\ h_1 h_2)

    i.e. the stored right action is turned into the left action ``h ▷ n = n^{h⁻¹}``. With a trivial action this is
    the direct product.

    Raises:
        NotAutomorphism: If some ``n ↦ n^h`` is not an automorphism of ``normal``.
    """
    if action.group is not acting and action.group.order != acting.order:
        raise NotAutomorphism("action is not by the acting group")
    action = group_action(acting, action.perm, on=normal)

    n_order, h_order = normal.order, acting.order
    n_index = np.arange(n_order * h_order) % n_order
    h_index = np.arange(n_order * h_order) // n_order
    twisted = action.perm[acting.inverse[h_index][:, None], n_index[None, :]]
    n_part = normal.table[n_index[:, None], twisted]
    h_part = acting.table[h_index[:, None], h_index[None, :]]
    return group_from_table(n_part + n_order * h_part, name=name)


def dual_group(group: FiniteGroup, seed: int = None) -> tuple[FiniteGroup, np.ndarray]:
    """
    Arguments:
        group (FiniteGroup): An abelian group A.
    Returns:
        tuple[FiniteGroup, np.ndarray]: The character group A* (index 0 is the trivial character) and the pairing
        matrix with ``pairing[χ, a] = χ(a)``.
    Raises:
        NotAbelian: If the group is not abelian.
    """
    if not is_abelian(group):
        raise NotAbelian(f"{group!r} is not abelian")
    settings = Settings(seed=seed)
    table = character_table(group, seed=settings["seed"])
    pairing = table.chars[:, table.classes.class_of]
    count = pairing.shape[0]

    products = pairing[:, None, :] * pairing[None, :, :]
    distances = np.max(np.abs(products[:, :, None, :] - pairing[None, None, :, :]), axis=3)
    law = np.argmin(distances, axis=2)
    worst = float(np.max(np.min(distances, axis=2))) if count else 0.0
    if worst > settings["tolerance"]:
        raise InvariantFailure(f"pointwise product of characters leaves the character table (residual {worst})")

    pairing = pairing.copy()
    pairing.setflags(write=False)
    return group_from_table(law, name=f"{group.name}*" if group.name else ""), pairing


def find_isomorphism(source: FiniteGroup, target: FiniteGroup) -> typing.Optional[GroupHom]:
    """
    Brute force over images of a greedy generating set; intended for desk-scale groups.

    Returns:
        GroupHom | None: An isomorphism, or None if the groups are not isomorphic.
    """
    if not is_isomorphic_by_statistics(source, target):
        return None

    generators = []
    span = (0,)
    for g in source.elements:
        if g not in span:
            generators.append(g)
            span = generated_subgroup(source, generators)

    candidates = [
        [h for h in target.elements if element_order(target, h) == element_order(source, g)] for g in generators
    ]
    for images in itertools.product(*candidates):
        mapping = _extend_to_hom(source, target, generators, images)
        if mapping is None or len(set(mapping)) != target.order:
            continue
        try:
            return group_hom(source, target, mapping)
        except NotAHomomorphism:
            continue
    return None


def _extend_to_hom(source, target, generators, images) -> typing.Optional[list]:
    mapping = [-1] * source.order
    mapping[0] = 0
    frontier = [0]
    while frontier:
        a = frontier.pop()
        for g, h in zip(generators, images):
            b, image_b = source.mul(a, g), target.mul(mapping[a], h)
            if mapping[b] < 0:
                mapping[b] = image_b
                frontier.append(b)
            elif mapping[b] != image_b:
                return None
    return mapping


# ------------------------------------------
# Characters and representations
# ------------------------------------------
def class_structure_constants(group: FiniteGroup, classes: ConjugacyClasses = None) -> np.ndarray:
    """
    Returns:
        np.ndarray: ``a[j, i, k]``, the number of ways to write a fixed element of class k as ``x·y`` with ``x`` in
        class j and ``y`` in class i.
    """
    classes = classes if classes else conjugacy_classes(group)
    count = len(classes)
    constants = np.zeros((count, count, count))
    elements = np.arange(group.order)
    for k, z in enumerate(classes.representatives):
        quotients = group.table[group.inverse[elements], z]
        np.add.at(constants, (classes.class_of[elements], classes.class_of[quotients], k), 1)
    return constants


def character_table(group: FiniteGroup, seed: int = None, retry_budget: int = None) -> CharacterTable:
    """
    Burnside's class-sum method: the central characters are the common eigenvectors of the class multiplication
    matrices, separated by diagonalising a random real combination of them.

    Arguments:
        group (FiniteGroup): The group.
        seed (int | None): RNG seed (default: the :code:`seed` setting).
        retry_budget (int | None): Resamples before giving up (default: the :code:`retry_budget` setting).
    Returns:
        CharacterTable: Rows sorted by degree, then lexicographically by value with larger real parts first so the
        trivial character is row 0.
    Raises:
        NumericalDegeneracy: If no sample separated the eigenvalues within the retry budget.
    """
    settings = Settings(seed=seed, retry_budget=retry_budget)
    classes = conjugacy_classes(group)
    sizes = np.asarray(classes.sizes, dtype=float)
    constants = class_structure_constants(group, classes)
    rng = make_rng(settings["seed"])

    for attempt in range(settings["retry_budget"]):
        weights = rng.standard_normal(len(classes))
        combination = np.einsum("j,jik->ik", weights, constants)
        eigenvalues, eigenvectors = np.linalg.eig(combination)

        if len(eigenvalues) > 1:
            gaps = np.abs(eigenvalues[:, None] - eigenvalues[None, :])
            np.fill_diagonal(gaps, np.inf)
            scale = max(1.0, float(np.max(np.abs(eigenvalues))))
            if float(np.min(gaps)) < settings["rounding_guard"] * scale:
                logger.debug("character table of %r: eigenvalue collision on attempt %d", group, attempt)
                continue

        try:
            chars, degrees = _normalize_central_characters(eigenvectors, sizes, group.order, settings)
        except InvariantFailure as err:
            logger.debug("character table of %r: attempt %d rejected (%s)", group, attempt, err)
            continue
        chars.setflags(write=False)
        return CharacterTable(
            group=group, classes=classes, chars=chars, degrees=tuple(degrees), seed=settings["seed"]
        )

    raise NumericalDegeneracy(
        f"character table of {group!r}: eigenvalues not separated after {settings['retry_budget']} attempts"
    )


def _normalize_central_characters(eigenvectors, sizes, order, settings) -> tuple[np.ndarray, list]:
    rows = []
    for column in eigenvectors.T:
        if abs(column[0]) < settings["rounding_guard"]:
            raise InvariantFailure("central character vanishes on the identity class")
        central = column / column[0]
        norm = float(np.sum(np.abs(central) ** 2 / sizes))
        degree = round_guarded(math.sqrt(order / norm), settings["rounding_guard"], error=InvariantFailure)
        rows.append((degree, degree * central / sizes))

    rows.sort(key=lambda row: (row[0], tuple(complex_key(value) for value in row[1])))
    chars = np.array([row[1] for row in rows], dtype=complex)
    degrees = [row[0] for row in rows]

    if sum(degree**2 for degree in degrees) != order:
        raise InvariantFailure(f"sum of squared degrees {sum(d * d for d in degrees)} ≠ {order}")
    gram = (chars * sizes[None, :]) @ chars.conj().T / order
    if max_residual(gram, np.eye(len(degrees))) > settings["tolerance"]:
        raise InvariantFailure("row orthogonality fails")
    columns = chars.conj().T @ chars
    if max_residual(columns, np.diag(order / sizes)) > settings["tolerance"] * order:
        raise InvariantFailure("column orthogonality fails")
    return chars, degrees


def left_regular_representation(group: FiniteGroup) -> np.ndarray:
    """
    Returns:
        np.ndarray: ``L[g]`` the permutation matrix sending basis vector ``h`` to ``g·h``.
    """
    order = group.order
    matrices = np.zeros((order, order, order), dtype=complex)
    g_index, h_index = np.meshgrid(np.arange(order), np.arange(order), indexing="ij")
    matrices[g_index, group.table, h_index] = 1.0
    return matrices


def split_representation(
    unitaries: np.ndarray,
    projectors: np.ndarray = None,
    seed: int = None,
    retry_budget: int = None,
) -> list[np.ndarray]:
    """
    Splits a unitary representation into irreducible summands by diagonalising a random Hermitian element of its
    commutant. With ``projectors`` the commutant is also required to commute with the given orthogonal projectors,
    which splits objects graded by those projectors.

    Arguments:
        unitaries (np.ndarray): ``(|G|, d, d)`` unitary matrices of a representation.
        projectors (np.ndarray | None): ``(k, d, d)`` orthogonal projectors summing to the identity.
    Returns:
        list[np.ndarray]: Isometries ``U`` (``d × d_i``) whose ranges are irreducible summands, in order of
        increasing commutant eigenvalue.
    Raises:
        NumericalDegeneracy: If no sample produced an irreducible splitting within the retry budget.
    """
    settings = Settings(seed=seed, retry_budget=retry_budget)
    unitaries = np.asarray(unitaries, dtype=complex)
    dim = unitaries.shape[1]
    if projectors is None:
        projectors = np.eye(dim, dtype=complex)[None, :, :]
    projectors = np.asarray(projectors, dtype=complex)
    characters_norm = 1.0 / unitaries.shape[0]
    rng = make_rng(settings["seed"])

    for attempt in range(settings["retry_budget"]):
        hermitian = np.einsum("mij,jk,mkl->il", projectors, random_hermitian(rng, dim), projectors)
        commutant = np.einsum("gij,jk,glk->il", unitaries, hermitian, unitaries.conj()) / unitaries.shape[0]
        commutant = (commutant + commutant.conj().T) / 2
        eigenvalues, eigenvectors = np.linalg.eigh(commutant)

        breaks = np.flatnonzero(np.diff(eigenvalues) > settings["rounding_guard"]) + 1
        bounds = [0, *breaks.tolist(), dim]
        components = [eigenvectors[:, start:stop] for start, stop in zip(bounds, bounds[1:])]

        if all(_is_irreducible_summand(U, unitaries, projectors, characters_norm, settings) for U in components):
            return components
        logger.debug("commutant splitting: attempt %d produced a reducible summand", attempt)

    raise NumericalDegeneracy(f"could not split a {dim}-dimensional representation into irreducibles")


def _is_irreducible_summand(isometry, unitaries, projectors, norm, settings) -> bool:
    complement = np.eye(isometry.shape[0]) - isometry @ isometry.conj().T
    if max_residual(complement @ unitaries @ isometry) > settings["rounding_guard"]:
        return False
    if max_residual(complement @ projectors @ isometry) > settings["rounding_guard"]:
        return False
    restricted_q = isometry.conj().T @ unitaries @ isometry
    restricted_p = isometry.conj().T @ projectors @ isometry
    values = np.einsum("mij,gji->mg", restricted_p, restricted_q)
    return abs(norm * float(np.sum(np.abs(values) ** 2)) - 1.0) < settings["rounding_guard"]


def irreducible_representations(group: FiniteGroup, table: CharacterTable = None, seed: int = None) -> list:
    """
    Arguments:
        group (FiniteGroup): The group.
        table (CharacterTable | None): The table whose row order the result follows.
    Returns:
        list[np.ndarray]: For each character-table row, unitary matrices ``(|G|, d, d)`` affording it.
    Raises:
        InvariantFailure: If some row is not afforded by a summand of the regular representation.
    """
    settings = Settings(seed=seed)
    table = table if table else character_table(group, seed=settings["seed"])
    regular = left_regular_representation(group)
    components = split_representation(regular, seed=settings["seed"])

    found = [None] * len(table)
    for isometry in components:
        matrices = isometry.conj().T @ regular @ isometry
        values = np.trace(matrices, axis1=1, axis2=2)
        for row in range(len(table)):
            if found[row] is None and max_residual(values, table.values(row)) < settings["rounding_guard"]:
                found[row] = matrices
                break
    missing = [row for row, matrices in enumerate(found) if matrices is None]
    if missing:
        raise InvariantFailure(f"no irreducible summand affords character rows {missing}")
    return found
