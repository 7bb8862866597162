"""
Finite crossed modules ``X = (X₁, X₂, μ, ∂)`` and the groups derived from them.

The action ``μ`` is a right action of ``X₁`` on ``X₂`` by automorphisms, written ``m^g``, and ``∂: X₂ → X₁`` is a
homomorphism subject to

- equivariance: ``∂(m^g) = g⁻¹ ∂(m) g``
- the Peiffer identity: ``m^{∂n} = n⁻¹ m n``

Derived structures (coker action, G(X), X̄, X′) are cached per crossed-module instance. They are exact index tables,
so the numeric settings do not change them.
"""
from __future__ import annotations

import dataclasses
import functools
import logging
import typing

import numpy as np

from xmodcat.exceptions import EquivarianceViolation, PeifferViolation, IllDefined, InvariantFailure
from xmodcat.group_core import (
    FiniteGroup,
    GroupHom,
    GroupAction,
    group_action,
    group_hom,
    conjugation_action,
    trivial_action,
    trivial_group,
    kernel,
    image,
    quotient,
    subgroup,
    is_normal,
    dual_group,
    semidirect_product,
)

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class Subquotients:
    """
    Attributes:
        K (tuple[int, ...]): ``ker ∂`` as sorted elements of X₂.
        I (tuple[int, ...]): ``Im ∂`` as sorted elements of X₁.
        C (FiniteGroup): ``coker ∂ = X₁/I``.
        projection (GroupHom): ``π: X₁ → C``.
        k_group (FiniteGroup): ``K`` re-indexed in the order of :attr:`K`.
        i_group (FiniteGroup): ``I`` re-indexed in the order of :attr:`I`.
        D (int): ``|K|·|C|``.
        abs_x (int): ``|X| = |X₁|·|K| = |X₂|·|C|``.
    """

    K: tuple
    I: tuple
    C: FiniteGroup
    projection: GroupHom
    k_group: FiniteGroup
    i_group: FiniteGroup
    D: int
    abs_x: int

    def k_index(self, m: int) -> int:
        """Position of ``m ∈ K`` in :attr:`K`."""
        return self.K.index(m)

    def i_index(self, g: int) -> int:
        """Position of ``g ∈ I`` in :attr:`I`."""
        return self.I.index(g)


@dataclasses.dataclass(frozen=True, eq=False)
class CrossedModule:
    x1: FiniteGroup
    x2: FiniteGroup
    mu: GroupAction
    boundary: GroupHom
    sub: Subquotients
    name: str = ""

    @property
    def order(self) -> int:
        """``|X| = |X₁|·|ker ∂|``, the normalisation of the S-matrix."""
        return self.sub.abs_x

    def act(self, m: int, g: int) -> int:
        return int(self.mu.perm[g, m])

    def d(self, m: int) -> int:
        return int(self.boundary.map[m])

    def is_boundary_bijective(self) -> bool:
        return self.boundary.is_bijective()

    def __repr__(self) -> str:
        name = f"'{self.name}', " if self.name else ""
        return f"{self.__class__.__name__}({name}|X1|={self.x1.order}, |X2|={self.x2.order})"


@dataclasses.dataclass(frozen=True, eq=False)
class GXLabeling:
    """
    Attributes:
        labels (tuple[tuple[int, int], ...]): ``labels[i] = (χ, c)`` for element ``i = χ + |K*|·c`` of G(X).
        pairing (np.ndarray): ``pairing[χ, k] = χ(K[k])``.
        k_dual (FiniteGroup): The character group ``K*``.
        dual_action (GroupAction): ``χ^c(k) = χ(k^{c⁻¹})``.
    """

    labels: tuple
    pairing: np.ndarray
    k_dual: FiniteGroup
    dual_action: GroupAction

    def __call__(self, element: int) -> tuple[int, int]:
        return self.labels[element]

    def index(self, chi: int, c: int) -> int:
        return chi + self.k_dual.order * c


@dataclasses.dataclass(frozen=True, eq=False)
class XbarMaps:
    """
    Attributes:
        projection (GroupHom): ``X₂ → X₂/K``.
        inclusion (GroupHom): ``I ↪ X₁``.
    """

    projection: GroupHom
    inclusion: GroupHom


def crossed_module(
    x1: FiniteGroup,
    x2: FiniteGroup,
    mu: typing.Union[GroupAction, typing.Sequence[typing.Sequence[int]]],
    boundary: typing.Union[GroupHom, typing.Sequence[int]],
    name: str = "",
) -> CrossedModule:
    """
    Arguments:
        x1 (FiniteGroup): The acting group.
        x2 (FiniteGroup): The group acted on.
        mu (GroupAction | array-like): ``mu[g][m] = m^g``.
        boundary (GroupHom | array-like): ``boundary[m] = ∂m``.
        name (str): Optional name.
    Returns:
        CrossedModule: With :attr:`CrossedModule.sub` computed.
    Raises:
        NotAnAction, NotAutomorphism, NotAHomomorphism: If a component is malformed.
        EquivarianceViolation: With witness ``(m, g)``, the first failure with ``m`` outermost.
        PeifferViolation: With witness ``(m, n)``, the first failure with ``m`` outermost.
    """
    perm = mu.perm if isinstance(mu, GroupAction) else mu
    mu = group_action(x1, perm, on=x2)
    boundary = group_hom(x2, x1, boundary.map if isinstance(boundary, GroupHom) else boundary)
    bmap, perm = boundary.map, mu.perm

    # equivariance[m, g]: ∂(m^g) against g⁻¹ ∂(m) g
    elements = np.arange(x1.order)
    lhs = bmap[perm.T]
    rhs = x1.table[x1.table[x1.inverse[elements][None, :], bmap[:, None]], elements[None, :]]
    failures = np.argwhere(lhs != rhs)
    if len(failures):
        m, g = (int(value) for value in failures[0])
        raise EquivarianceViolation(m=m, g=g)

    # peiffer[m, n]: m^{∂n} against n⁻¹ m n
    points = np.arange(x2.order)
    lhs = perm[bmap[None, :], points[:, None]]
    rhs = x2.table[x2.table[x2.inverse[points][None, :], points[:, None]], points[None, :]]
    failures = np.argwhere(lhs != rhs)
    if len(failures):
        m, n = (int(value) for value in failures[0])
        raise PeifferViolation(m=m, n=n)

    sub = _subquotients(x1, x2, boundary)
    logger.debug("validated crossed module %s: |K|=%d, |I|=%d, |C|=%d", name, len(sub.K), len(sub.I), sub.C.order)
    return CrossedModule(x1=x1, x2=x2, mu=mu, boundary=boundary, sub=sub, name=name)


def _subquotients(x1: FiniteGroup, x2: FiniteGroup, boundary: GroupHom) -> Subquotients:
    k, i = kernel(boundary), image(boundary)
    center = all(x2.mul(m, n) == x2.mul(n, m) for m in k for n in x2.elements)
    if not center:
        raise InvariantFailure("ker ∂ is not central in X2")
    if not is_normal(x1, i):
        raise InvariantFailure("Im ∂ is not normal in X1")

    coker, projection = quotient(x1, i)
    k_group, _ = subgroup(x2, k)
    i_group, _ = subgroup(x1, i)
    sub = Subquotients(
        K=k,
        I=i,
        C=coker,
        projection=projection,
        k_group=k_group,
        i_group=i_group,
        D=len(k) * coker.order,
        abs_x=x1.order * len(k),
    )
    if len(k) * len(i) != x2.order or len(i) * coker.order != x1.order or sub.abs_x != x2.order * coker.order:
        raise InvariantFailure("subquotient orders violate Lagrange bookkeeping")
    return sub


def drinfeld_double(group: FiniteGroup, name: str = "") -> CrossedModule:
    """``(G, G, conjugation, id)``, whose category M(X) is the representation category of D(G)."""
    name = name or (f"D({group.name})" if group.name else "")
    return crossed_module(group, group, conjugation_action(group), np.arange(group.order), name=name)


def trivial_crossed_module() -> CrossedModule:
    group = trivial_group()
    return crossed_module(group, group, trivial_action(group, 1), [0], name="trivial")


@functools.lru_cache(maxsize=128)
def coker_action_on_K(x: CrossedModule) -> GroupAction:
    """
    The induced action of ``C = coker ∂`` on ``K = ker ∂``, ``k^{Ig} := k^g``, on positions in :attr:`Subquotients.K`.

    Raises:
        IllDefined: If two representatives of a coset act differently on K.
    """
    sub = x.sub
    lookup = np.full(x.x2.order, -1, dtype=np.int64)
    lookup[list(sub.K)] = np.arange(len(sub.K))
    k = np.asarray(sub.K, dtype=np.int64)

    perm = np.full((sub.C.order, len(k)), -1, dtype=np.int64)
    for g in x.x1.elements:
        c = sub.projection(g)
        images = lookup[x.mu.perm[g, k]]
        if np.any(images < 0):
            raise IllDefined(f"X1 element {g} does not preserve ker ∂")
        if perm[c, 0] < 0:
            perm[c] = images
        elif not np.array_equal(perm[c], images):
            raise IllDefined(f"representatives of coset {c} act differently on ker ∂")
    return group_action(sub.C, perm, on=sub.k_group)


@functools.lru_cache(maxsize=128)
def group_GX(x: CrossedModule) -> tuple[FiniteGroup, GXLabeling]:
    """
    The group ``G(X) = K* ⋊ C`` whose representation category is the transparent subcategory of M(X).

    The dual action is ``χ^c(k) = χ(k^{c⁻¹})``; multiplication follows :func:`~xmodcat.group_core.semidirect_product`.

    Returns:
        tuple[FiniteGroup, GXLabeling]: The group and the map from its elements to pairs ``(χ, c)``.
    """
    sub = x.sub
    k_dual, pairing = dual_group(sub.k_group)
    on_k = coker_action_on_K(x)

    perm = np.empty((sub.C.order, k_dual.order), dtype=np.int64)
    for c in sub.C.elements:
        moved = on_k.perm[sub.C.inv(c)]
        for chi in k_dual.elements:
            target = pairing[chi, moved]
            matches = np.flatnonzero(np.max(np.abs(pairing - target[None, :]), axis=1) < 1e-6)
            if len(matches) != 1:
                raise InvariantFailure(f"dual action of coset {c} does not permute the characters of ker ∂")
            perm[c, chi] = matches[0]
    dual_action = group_action(sub.C, perm, on=k_dual)

    gx = semidirect_product(k_dual, sub.C, dual_action, name=f"G({x.name})" if x.name else "G(X)")
    labels = tuple((chi, c) for c in sub.C.elements for chi in k_dual.elements)
    return gx, GXLabeling(labels=labels, pairing=pairing, k_dual=k_dual, dual_action=dual_action)


@functools.lru_cache(maxsize=128)
def quotient_xbar(x: CrossedModule) -> tuple[CrossedModule, XbarMaps]:
    """
    ``X̄ = (I, X₂/K, μ̄, ∂̄)`` with ``μ̄(g, Km) = K(m^g)`` and ``∂̄(Km) = ∂m``.

    Raises:
        IllDefined: If μ̄ or ∂̄ depends on the coset representative.
        InvariantFailure: If ∂̄ is not a bijection.
    """
    sub = x.sub
    x2_bar, projection = quotient(x.x2, sub.K)
    _, inclusion = subgroup(x.x1, sub.I)

    perm = np.full((len(sub.I), x2_bar.order), -1, dtype=np.int64)
    boundary = np.full(x2_bar.order, -1, dtype=np.int64)
    for m in x.x2.elements:
        c = projection(m)
        d = sub.i_index(x.d(m))
        if boundary[c] < 0:
            boundary[c] = d
        elif boundary[c] != d:
            raise IllDefined(f"∂ is not constant on the coset of {m}")
        for position, g in enumerate(sub.I):
            image_c = projection(x.act(m, g))
            if perm[position, c] < 0:
                perm[position, c] = image_c
            elif perm[position, c] != image_c:
                raise IllDefined(f"action of {g} is not constant on the coset of {m}")

    name = f"{x.name}/K" if x.name else ""
    xbar = crossed_module(sub.i_group, x2_bar, perm, boundary, name=name)
    if not xbar.is_boundary_bijective():
        raise InvariantFailure("quotient boundary is not a bijection")
    return xbar, XbarMaps(projection=projection, inclusion=inclusion)


@functools.lru_cache(maxsize=128)
def restricted_xprime(x: CrossedModule) -> CrossedModule:
    """``X′ = (I, X₂, μ|_I, ∂)``, the crossed module with surjective boundary over the same X₂."""
    sub = x.sub
    perm = x.mu.perm[list(sub.I)]
    boundary = [sub.i_index(x.d(m)) for m in x.x2.elements]
    return crossed_module(sub.i_group, x.x2, perm, boundary, name=f"{x.name}'" if x.name else "")


def transport_to_double(xbar: CrossedModule) -> tuple[CrossedModule, GroupHom]:
    """
    For a crossed module with bijective boundary, ∂ transports the action to conjugation.

    Returns:
        tuple[CrossedModule, GroupHom]: ``D(X₁)`` and the isomorphism ``∂: X₂ → X₁`` intertwining the actions.
    Raises:
        InvariantFailure: If the boundary is not bijective or does not intertwine the actions.
    """
    if not xbar.is_boundary_bijective():
        raise InvariantFailure("transport requires a bijective boundary")
    double = drinfeld_double(xbar.x1, name=f"D({xbar.x1.name})" if xbar.x1.name else "")
    bmap = xbar.boundary.map
    if not np.array_equal(bmap[xbar.mu.perm], double.mu.perm[:, bmap]):
        raise InvariantFailure("boundary does not intertwine the action with conjugation")
    return double, xbar.boundary
