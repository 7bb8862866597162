"""
The premodular category M(X) of a finite crossed module: X₂-graded vector spaces with a compatible X₁-action.

An object is stored as explicit matrices: orthogonal projectors ``P[m]`` onto the grade-``m`` subspace and unitary
``Q[g]`` for the X₁-action, subject to ``P(m) Q(g) = Q(g) P(m^g)``. Tensor products use the Kronecker basis with the
left factor outermost.
"""
from __future__ import annotations

import dataclasses
import functools
import logging
import typing

import numpy as np

from xmodcat.crossed_module import CrossedModule, coker_action_on_K, group_GX
from xmodcat.exceptions import InvariantFailure, NonIntegerMultiplicity, CriterionMismatch
from xmodcat.group_core import (
    orbits,
    stabilizer,
    subgroup,
    character_table,
    irreducible_representations,
    split_representation,
)
from xmodcat.settings import Settings
from xmodcat.utils import flip, max_residual, round_guarded, CheckResult

logger = logging.getLogger(__name__)

CharacterX = np.ndarray
""" A ``|X₂| × |X₁|`` complex array ``ψ(m, g) = tr(P(m) Q(g))``. """

DET_THRESHOLD = 1e-6
""" ``|det S|`` above which the S-matrix counts as invertible. """


# ------------------------------------------
# Objects
# ------------------------------------------
@dataclasses.dataclass(frozen=True, eq=False)
class RepObject:
    """
    Attributes:
        x (CrossedModule): The crossed module.
        P (np.ndarray): ``(|X₂|, d, d)`` grading projectors.
        Q (np.ndarray): ``(|X₁|, d, d)`` action matrices.
    """

    x: CrossedModule
    P: np.ndarray
    Q: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.P.shape[1])


def check_rep_object(obj: RepObject, tol: float = None) -> list[CheckResult]:
    """Residuals of the projector, representation and compatibility laws."""
    tol = Settings(tolerance=tol)["tolerance"]
    x, P, Q = obj.x, obj.P, obj.Q
    eye = np.eye(obj.dim)

    products = np.einsum("mij,njk->mnik", P, P)
    expected = np.einsum("mn,mik->mnik", np.eye(x.x2.order), P)
    compat_lhs = np.einsum("mij,gjk->mgik", P, Q)
    compat_rhs = np.einsum("gij,gmjk->mgik", Q, P[x.mu.perm])
    return [
        CheckResult.from_residual("projectors sum to identity", max_residual(P.sum(axis=0), eye), tol),
        CheckResult.from_residual("orthogonal idempotents", max_residual(products, expected), tol),
        CheckResult.from_residual("action unit", max_residual(Q[0], eye), tol),
        CheckResult.from_residual(
            "action law", max_residual(Q[:, None] @ Q[None, :], Q[x.x1.table]) if obj.dim else 0.0, tol
        ),
        CheckResult.from_residual("P(m)Q(g) = Q(g)P(m^g)", max_residual(compat_lhs, compat_rhs), tol),
    ]


def rep_object(x: CrossedModule, P: np.ndarray, Q: np.ndarray, check: bool = True) -> RepObject:
    """
    Raises:
        InvariantFailure: If ``check`` and some object law fails.
    """
    P, Q = np.asarray(P, dtype=complex), np.asarray(Q, dtype=complex)
    if P.shape[0] != x.x2.order or Q.shape[0] != x.x1.order or P.shape[1:] != Q.shape[1:]:
        raise InvariantFailure(f"object matrices have shapes {P.shape} and {Q.shape}")
    obj = RepObject(x=x, P=P, Q=Q)
    if check:
        failed = [result for result in check_rep_object(obj) if not result.passed]
        if failed:
            raise InvariantFailure(f"{failed[0].name} fails (residual {failed[0].residual:.3g})")
    return obj


def unit_object(x: CrossedModule) -> RepObject:
    P = np.zeros((x.x2.order, 1, 1), dtype=complex)
    P[0] = 1.0
    return RepObject(x=x, P=P, Q=np.ones((x.x1.order, 1, 1), dtype=complex))


def character(obj: RepObject) -> CharacterX:
    return np.einsum("mij,gji->mg", obj.P, obj.Q)


def tensor_object(left: RepObject, right: RepObject) -> RepObject:
    """``(V ⊗ W)_m = ⊕_{nl=m} V_n ⊗ W_l`` with the diagonal X₁-action."""
    x = left.x
    dim = left.dim * right.dim
    P = np.zeros((x.x2.order, dim, dim), dtype=complex)
    for n in x.x2.elements:
        for l in x.x2.elements:
            P[x.x2.table[n, l]] += np.kron(left.P[n], right.P[l])
    Q = np.einsum("gij,gkl->gikjl", left.Q, right.Q).reshape(x.x1.order, dim, dim)
    return RepObject(x=x, P=P, Q=Q)


def dual_object(obj: RepObject) -> RepObject:
    """``P*(m) = P(m⁻¹)ᵀ`` and ``Q*(g) = Q(g⁻¹)ᵀ``."""
    x = obj.x
    return RepObject(
        x=x,
        P=np.transpose(obj.P[x.x2.inverse], (0, 2, 1)).copy(),
        Q=np.transpose(obj.Q[x.x1.inverse], (0, 2, 1)).copy(),
    )


def braiding(left: RepObject, right: RepObject) -> np.ndarray:
    """
    ``R_{V,W}: V ⊗ W → W ⊗ V``, ``v ⊗ w ↦ Q_W(∂m) w ⊗ v`` for ``v`` of grade ``m``.

    Returns:
        np.ndarray: A ``dim(V)·dim(W)`` square matrix.
    """
    dv, dw = left.dim, right.dim
    grade_op = np.einsum("mij,mkl->ikjl", right.Q[left.x.boundary.map], left.P).reshape(dw * dv, dw * dv)
    return grade_op @ flip(dv, dw)


def twist_matrix(obj: RepObject) -> np.ndarray:
    """``θ_V = Σ_m Q(∂m) P(m)``."""
    return np.einsum("mij,mjk->ik", obj.Q[obj.x.boundary.map], obj.P)


def regular_object(x: CrossedModule) -> RepObject:
    """
    ``k(X₂) ⊗ k[X₁]`` with basis ``(n, h)`` at index ``n·|X₁| + h``, ``P(m) = δ(m, n)`` and
    ``Q(g)(n, h) = (n^{g⁻¹}, gh)``. Every simple ``p`` occurs in it ``d_p`` times.
    """
    n1, n2 = x.x1.order, x.x2.order
    dim = n1 * n2
    index = np.arange(dim)
    n, h = index // n1, index % n1
    P = np.zeros((n2, dim, dim), dtype=complex)
    P[n, index, index] = 1.0
    Q = np.zeros((n1, dim, dim), dtype=complex)
    for g in x.x1.elements:
        target = x.mu.perm[x.x1.inverse[g], n] * n1 + x.x1.table[g, h]
        Q[g, target, index] = 1.0
    return RepObject(x=x, P=P, Q=Q)


def split_object(obj: RepObject, seed: int = None) -> list[RepObject]:
    """Splits an object into simple summands through its commutant."""
    isometries = split_representation(obj.Q, obj.P, seed=seed)
    return [
        RepObject(x=obj.x, P=U.conj().T @ obj.P @ U, Q=U.conj().T @ obj.Q @ U)
        for U in isometries
    ]


# ------------------------------------------
# Simple objects and characters
# ------------------------------------------
@dataclasses.dataclass(frozen=True, eq=False)
class SimpleTable:
    """
    Attributes:
        x (CrossedModule): The crossed module.
        labels (tuple[tuple[int, int], ...]): ``(m₀, σ)`` with ``m₀`` the smallest member of an orbit and ``σ`` a
            character-table row of its stabilizer.
        dims (tuple[int, ...]): ``d_p``.
        characters (np.ndarray): ``(r, |X₂|, |X₁|)`` characters ``ψ_p``.
        twists (np.ndarray): ``ω_p``.
        objects (tuple[RepObject, ...]): Explicit unitary realisations.
        unit (int): Index of the tensor unit.
        seed (int): Seed used for the stabilizer character tables.
    """

    x: CrossedModule
    labels: tuple
    dims: tuple
    characters: np.ndarray
    twists: np.ndarray
    objects: tuple
    unit: int = 0
    seed: int = 0

    def __len__(self) -> int:
        return len(self.labels)


def _transversal(x: CrossedModule, m0: int, orbit: tuple) -> dict:
    """``h_m`` is the smallest element of X₁ with ``m₀^{h_m} = m``."""
    ret = {}
    for g in x.x1.elements:
        ret.setdefault(x.act(m0, g), g)
        if len(ret) == len(orbit):
            break
    return ret


def _induced_simple(x, orbit, transversal, embedding, matrices) -> RepObject:
    degree = matrices.shape[1]
    dim = degree * len(orbit)
    position = {m: i for i, m in enumerate(orbit)}
    stab_index = {int(g): i for i, g in enumerate(embedding.map)}

    P = np.zeros((x.x2.order, dim, dim), dtype=complex)
    for i, m in enumerate(orbit):
        P[m, i * degree : (i + 1) * degree, i * degree : (i + 1) * degree] = np.eye(degree)

    Q = np.zeros((x.x1.order, dim, dim), dtype=complex)
    for g in x.x1.elements:
        g_inv = x.x1.inv(g)
        for j, n in enumerate(orbit):
            m = x.act(n, g_inv)
            i = position[m]
            element = x.x1.mul(x.x1.mul(transversal[m], g), x.x1.inv(transversal[n]))
            Q[g, i * degree : (i + 1) * degree, j * degree : (j + 1) * degree] = matrices[stab_index[element]]
    return RepObject(x=x, P=P, Q=Q)


def twist_law_residual(x: CrossedModule, characters: np.ndarray, twists: np.ndarray) -> float:
    """``max |ψ_p(m, g·∂m) − ω_p ψ_p(m, g)|``."""
    shifted_g = x.x1.table[np.arange(x.x1.order)[None, :], x.boundary.map[:, None]]
    shifted = characters[:, np.arange(x.x2.order)[:, None], shifted_g]
    return max_residual(shifted, twists[:, None, None] * characters)


def simple_objects(x: CrossedModule, seed: int = None) -> SimpleTable:
    """
    Classifies the simple objects of M(X) by orbit and stabilizer representation, realises each one as explicit
    matrices, and validates the table.

    Arguments:
        x (CrossedModule): The crossed module.
        seed (int | None): RNG seed (default: the :code:`seed` setting).
    Returns:
        SimpleTable: Labels ordered by orbit (smallest member first), then by stabilizer character row.
    Raises:
        InvariantFailure: If orthogonality, the Burnside sum or the twist law fails.
    """
    settings = Settings(seed=seed)
    return _simple_objects(
        x, settings["seed"], settings["tolerance"], settings["rounding_guard"], settings["retry_budget"]
    )


# Cache key: the crossed module plus every setting the classification reads.
@functools.lru_cache(maxsize=64)
def _simple_objects(x, seed, tolerance, rounding_guard, retry_budget) -> SimpleTable:
    settings = Settings(seed=seed, tolerance=tolerance, rounding_guard=rounding_guard, retry_budget=retry_budget)
    labels, objects = [], []
    for orbit in orbits(x.mu):
        m0 = orbit[0]
        stab_group, embedding = subgroup(x.x1, stabilizer(x.mu, m0))
        table = character_table(stab_group, seed=seed, retry_budget=retry_budget)
        irreps = irreducible_representations(stab_group, table, seed=seed)
        transversal = _transversal(x, m0, orbit)
        for sigma, matrices in enumerate(irreps):
            labels.append((m0, sigma))
            objects.append(_induced_simple(x, orbit, transversal, embedding, matrices))

    characters = np.array([character(obj) for obj in objects])
    dims = tuple(obj.dim for obj in objects)
    boundary_values = characters[:, np.arange(x.x2.order), x.boundary.map]
    twists = boundary_values.sum(axis=1) / np.asarray(dims)

    _validate_simples(x, characters, dims, twists, settings)
    logger.info("%r has %d simple objects", x, len(labels))
    return SimpleTable(
        x=x,
        labels=tuple(labels),
        dims=dims,
        characters=characters,
        twists=twists,
        objects=tuple(objects),
        seed=settings["seed"],
    )


def _validate_simples(x, characters, dims, twists, settings):
    total = sum(d * d for d in dims)
    if total != x.x1.order * x.x2.order:
        raise InvariantFailure(f"Σ d_p² = {total} ≠ |X1|·|X2| = {x.x1.order * x.x2.order}")
    bilinear, hermitian = gram_matrices(x, characters)
    eye = np.eye(len(dims))
    if max_residual(hermitian, eye) > settings["tolerance"]:
        raise InvariantFailure("simple characters are not orthonormal under the hermitian form")
    if max_residual(bilinear, eye) > settings["tolerance"]:
        raise InvariantFailure("simple characters are not orthonormal under the bilinear form")
    if twist_law_residual(x, characters, twists) > settings["tolerance"]:
        raise InvariantFailure("ψ_p(m, g∂m) = ω_p ψ_p(m, g) fails")


def char_forms(psi1: CharacterX, psi2: CharacterX, x: CrossedModule) -> tuple[complex, complex]:
    """
    Returns:
        tuple[complex, complex]: ``(1/|X₁|) Σ ψ₁(m, g⁻¹) ψ₂(m, g)`` and ``(1/|X₁|) Σ conj(ψ₁(m, g)) ψ₂(m, g)``.
    """
    bilinear = np.sum(psi1[:, x.x1.inverse] * psi2) / x.x1.order
    hermitian = np.sum(psi1.conj() * psi2) / x.x1.order
    return complex(bilinear), complex(hermitian)


def gram_matrices(x: CrossedModule, characters: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    bilinear = np.einsum("pmg,qmg->pq", characters[:, :, x.x1.inverse], characters) / x.x1.order
    hermitian = np.einsum("pmg,qmg->pq", characters.conj(), characters) / x.x1.order
    return bilinear, hermitian


def _left_division(x: CrossedModule) -> np.ndarray:
    """``div[n, m] = n⁻¹ m``."""
    return x.x2.table[x.x2.inverse[:, None], np.arange(x.x2.order)[None, :]]


def tensor_character(psi_p: CharacterX, psi_q: CharacterX, x: CrossedModule) -> CharacterX:
    """``ψ(m, g) = Σ_{nl=m} ψ_p(n, g) ψ_q(l, g)``."""
    return np.einsum("ng,nmg->mg", psi_p, psi_q[_left_division(x)])


def decompose(obj: typing.Union[RepObject, CharacterX], table: SimpleTable) -> np.ndarray:
    """
    Arguments:
        obj (RepObject | np.ndarray): An object or its character.
        table (SimpleTable): The simples of the same crossed module.
    Returns:
        np.ndarray: Multiplicities ``m_p`` as integers.
    Raises:
        NonIntegerMultiplicity: If some multiplicity is not a nonnegative integer within the rounding guard.
    """
    settings = Settings()
    psi = character(obj) if isinstance(obj, RepObject) else np.asarray(obj)
    raw = np.einsum("pmg,mg->p", table.characters.conj(), psi) / table.x.x1.order
    ret = np.array([round_guarded(value, settings["rounding_guard"]) for value in raw], dtype=np.int64)
    if np.any(ret < 0):
        raise NonIntegerMultiplicity(f"negative multiplicity in {ret.tolist()}")
    dim = round_guarded(psi[:, 0].sum(), settings["rounding_guard"])
    if int(ret @ np.asarray(table.dims)) != dim:
        raise NonIntegerMultiplicity(f"multiplicities {ret.tolist()} do not account for dimension {dim}")
    return ret


def fusion(table: SimpleTable) -> np.ndarray:
    """
    Returns:
        np.ndarray: ``N[p, q, r]``, the multiplicity of simple r in ``p ⊗ q``.
    Raises:
        NonIntegerMultiplicity: If some multiplicity is not a nonnegative integer within the rounding guard.
        InvariantFailure: If the unit row or the dimension sum rule fails.
    """
    settings = Settings()
    x, psi = table.x, table.characters
    products = np.einsum("png,qnmg->pqmg", psi, psi[:, _left_division(x)])
    raw = np.einsum("rmg,pqmg->pqr", psi.conj(), products) / x.x1.order

    rounded = np.rint(raw.real)
    worst = max_residual(raw, rounded)
    if worst > settings["rounding_guard"] or np.any(rounded < 0):
        raise NonIntegerMultiplicity(f"fusion multiplicities are not nonnegative integers (residual {worst:.3g})")
    ret = rounded.astype(np.int64)

    size = len(table)
    if not np.array_equal(ret[table.unit], np.eye(size, dtype=np.int64)):
        raise InvariantFailure("tensoring with the unit is not the identity on simples")
    dims = np.asarray(table.dims)
    if not np.array_equal(ret @ dims, np.outer(dims, dims)):
        raise InvariantFailure("Σ_r N_pq^r d_r ≠ d_p d_q")
    return ret


# ------------------------------------------
# Modular data and transparency
# ------------------------------------------
@dataclasses.dataclass(frozen=True, eq=False)
class ModularData:
    """
    Attributes:
        labels (tuple): Simple labels.
        dims (tuple[int, ...]): Dimensions ``d_p``.
        twists (np.ndarray): Twists ``ω_p``.
        S (np.ndarray): ``S_pq = s_pq / |X|``.
        fusion (np.ndarray): ``N[p, q, r]``.
        transparent (tuple[bool, ...]): Collinearity test per simple.
        unit (int): Index of the tensor unit.
        abs_x (int): ``|X|``.
        vacuum_dim (int): ``D = |ker ∂|·|coker ∂|``.
        name (str): Name of the crossed module.
    """

    labels: tuple
    dims: tuple
    twists: np.ndarray
    S: np.ndarray
    fusion: np.ndarray
    transparent: tuple
    unit: int = 0
    abs_x: int = 1
    vacuum_dim: int = 1
    name: str = ""

    def __len__(self) -> int:
        return len(self.dims)


def s_matrix(table: SimpleTable, tol: float = None) -> ModularData:
    """
    ``S_pq = (1/|X|) Σ_{m,n} ψ_p(m, ∂n) ψ_q(n, ∂m)`` together with the rest of the modular data.

    Raises:
        InvariantFailure: If S is not symmetric or its unit row is not ``d_q/|X|``.
    """
    tol = Settings(tolerance=tol)["tolerance"]
    x = table.x
    at_boundary = table.characters[:, :, x.boundary.map]
    S = np.einsum("pmn,qnm->pq", at_boundary, at_boundary) / x.order

    dims = np.asarray(table.dims, dtype=float)
    if max_residual(S, S.T) > tol:
        raise InvariantFailure("S-matrix is not symmetric")
    if max_residual(S[table.unit], dims / x.order) > tol:
        raise InvariantFailure("S-matrix unit row is not d_q/|X|")

    transparent = tuple(bool(max_residual(S[p], dims[p] * S[table.unit]) < tol) for p in range(len(table)))
    return ModularData(
        labels=table.labels,
        dims=table.dims,
        twists=table.twists,
        S=S,
        fusion=fusion(table),
        transparent=transparent,
        unit=table.unit,
        abs_x=x.order,
        vacuum_dim=x.sub.D,
        name=x.name,
    )


def vacuum_multiplicities(md: ModularData) -> np.ndarray:
    """``μ_p = D·[S²]_{1p}``, the multiplicity of each simple in the vacuum object."""
    guard = Settings()["rounding_guard"]
    raw = md.vacuum_dim * (md.S @ md.S)[md.unit]
    return np.array([round_guarded(value, guard) for value in raw], dtype=np.int64)


def transparent_simples(md: ModularData) -> tuple:
    """
    Returns:
        tuple[int, ...]: The simples whose S-row is collinear to the unit row.
    Raises:
        CriterionMismatch: If the vacuum multiplicities disagree with the collinearity test, or a transparent
            simple has a nontrivial twist.
    """
    tol = Settings()["tolerance"]
    ret = tuple(p for p, flag in enumerate(md.transparent) if flag)
    expected = np.array([md.dims[p] if flag else 0 for p, flag in enumerate(md.transparent)])
    mu = vacuum_multiplicities(md)
    if not np.array_equal(mu, expected):
        raise CriterionMismatch(f"vacuum multiplicities {mu.tolist()} disagree with collinearity {expected.tolist()}")
    for p in ret:
        if abs(md.twists[p] - 1) > tol:
            raise CriterionMismatch(f"transparent simple {md.labels[p]} has twist {md.twists[p]}")
    return ret


def double_braiding_transparent(table: SimpleTable, tol: float = None) -> tuple:
    """Matrix test: ``p`` is transparent iff ``R_{q,p} R_{p,q} = id`` for every simple ``q``."""
    tol = Settings(tolerance=tol)["tolerance"]
    ret = []
    for p in table.objects:
        ret.append(
            all(
                max_residual(braiding(q, p) @ braiding(p, q), np.eye(p.dim * q.dim)) < tol
                for q in table.objects
            )
        )
    return tuple(ret)


def is_modular(md: ModularData) -> bool:
    return bool(abs(np.linalg.det(md.S)) > DET_THRESHOLD)


def is_modularizable(md: ModularData) -> bool:
    """Every transparent simple has trivial twist and integer dimension."""
    tol = Settings()["tolerance"]
    return all(
        abs(md.twists[p] - 1) < tol and float(md.dims[p]).is_integer()
        for p, flag in enumerate(md.transparent)
        if flag
    )


# ------------------------------------------
# The vacuum algebra
# ------------------------------------------
@dataclasses.dataclass(frozen=True, eq=False)
class VacuumAlgebra:
    """
    ``V_K = k[ker ∂] ⊗ k(coker ∂)`` with basis ``(k, c)`` at index ``c·|K| + k``.

    Attributes:
        obj (RepObject): The underlying object.
        m (np.ndarray): Multiplication ``A ⊗ A → A`` as a ``d × d²`` matrix.
        eta (np.ndarray): Unit vector ``Σ_c (e, c)``.
        delta (np.ndarray): Comultiplication ``A → A ⊗ A``.
        eps (np.ndarray): Counit row ``ε(k, c) = δ(k, e)/|C|``.
    """

    obj: RepObject
    m: np.ndarray
    eta: np.ndarray
    delta: np.ndarray
    eps: np.ndarray

    @property
    def x(self) -> CrossedModule:
        return self.obj.x

    @property
    def dim(self) -> int:
        return self.obj.dim


@dataclasses.dataclass(frozen=True)
class FrobeniusReport:
    laws: tuple
    beta_one: complex
    beta_a: complex

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)

    def failed(self) -> list[CheckResult]:
        return [law for law in self.laws if not law.passed]


def vacuum_object(x: CrossedModule) -> VacuumAlgebra:
    """
    The vacuum algebra. ``(k, c)`` has grade ``k^{c⁻¹}`` and ``Q(g)(k, c) = (k, π(g)c)``; multiplication is
    ``(k, c)(k̃, c̃) = δ(c, c̃)(kk̃, c)``. The Frobenius structure is normalised so that ``ε∘η = 1`` and
    ``m∘Δ = |K||C|·id``.
    """
    return _vacuum_object(x, Settings()["tolerance"])


@functools.lru_cache(maxsize=64)
def _vacuum_object(x: CrossedModule, tolerance: float) -> VacuumAlgebra:
    sub = x.sub
    kg, cg = sub.k_group, sub.C
    nk, nc = kg.order, cg.order
    dim = nk * nc
    on_k = coker_action_on_K(x)

    def index(k, c):
        return c * nk + k

    P = np.zeros((x.x2.order, dim, dim), dtype=complex)
    Q = np.zeros((x.x1.order, dim, dim), dtype=complex)
    m = np.zeros((dim, dim * dim), dtype=complex)
    delta = np.zeros((dim * dim, dim), dtype=complex)
    eta = np.zeros(dim, dtype=complex)
    eps = np.zeros(dim, dtype=complex)

    for c in cg.elements:
        eta[index(0, c)] = 1.0
        eps[index(0, c)] = 1.0 / nc
        for k in kg.elements:
            a = index(k, c)
            grade = sub.K[on_k.perm[cg.inv(c), k]]
            P[grade, a, a] = 1.0
            for k2 in kg.elements:
                m[index(kg.mul(k, k2), c), a * dim + index(k2, c)] = 1.0
                delta[index(kg.mul(k, k2), c) * dim + index(kg.inv(k2), c), a] += nc

    for g in x.x1.elements:
        pg = sub.projection(g)
        for c in cg.elements:
            for k in kg.elements:
                Q[g, index(k, cg.mul(pg, c)), index(k, c)] = 1.0

    obj = rep_object(x, P, Q)
    psi = character(obj)
    expected = np.zeros((x.x2.order, x.x1.order))
    expected[np.ix_(list(sub.K), list(sub.I))] = nc
    if max_residual(psi, expected) > tolerance:
        raise InvariantFailure("vacuum character is not |C|·[m∈K]·[g∈I]")
    return VacuumAlgebra(obj=obj, m=m, eta=eta, delta=delta, eps=eps)


def check_frobenius(algebra: VacuumAlgebra, tol: float = None) -> FrobeniusReport:
    """Checks the seven laws of a commutative special symmetric Frobenius algebra."""
    tol = Settings(tolerance=tol)["tolerance"]
    m, eta, delta, eps = algebra.m, algebra.eta[:, None], algebra.delta, algebra.eps[None, :]
    dim = algebra.dim
    eye = np.eye(dim)

    beta_one = complex((eps @ eta)[0, 0])
    m_delta = m @ delta
    beta_a = complex(np.trace(m_delta) / dim) if dim else 0j
    pairing = (eps @ m).reshape(dim, dim)

    laws = (
        CheckResult.from_residual("associativity", max_residual(m @ np.kron(m, eye), m @ np.kron(eye, m)), tol),
        CheckResult.from_residual(
            "unitality", max(max_residual(m @ np.kron(eta, eye), eye), max_residual(m @ np.kron(eye, eta), eye)), tol
        ),
        CheckResult.from_residual("commutativity", max_residual(m @ braiding(algebra.obj, algebra.obj), m), tol),
        CheckResult.from_residual(
            "frobenius_left", max_residual(delta @ m, np.kron(m, eye) @ np.kron(eye, delta)), tol
        ),
        CheckResult.from_residual(
            "frobenius_right", max_residual(delta @ m, np.kron(eye, m) @ np.kron(delta, eye)), tol
        ),
        CheckResult.from_residual("special", max_residual(m_delta, beta_a * eye), tol),
        CheckResult.from_residual("symmetric", max_residual(pairing, pairing.T), tol),
    )
    report = FrobeniusReport(laws=laws, beta_one=beta_one, beta_a=beta_a)
    for law in report.failed():
        logger.warning("Frobenius law %s fails with residual %.3g", law.name, law.residual)
    return report


def functor_F_from_GX(x: CrossedModule, rep: np.ndarray) -> RepObject:
    """
    Sends a unitary representation ``ρ`` of G(X) to the transparent object with
    ``P(m) = (1/|K|) Σ_χ χ(m) ρ(χ, 1)`` for ``m ∈ K`` (zero elsewhere) and ``Q(g) = ρ(1, π(g))``.

    Arguments:
        x (CrossedModule): The crossed module.
        rep (np.ndarray): ``(|G(X)|, d, d)`` matrices indexed as in :func:`~xmodcat.crossed_module.group_GX`.
    """
    _, labeling = group_GX(x)
    sub = x.sub
    rep = np.asarray(rep, dtype=complex)
    n_chars = labeling.k_dual.order
    dim = rep.shape[1]

    P = np.zeros((x.x2.order, dim, dim), dtype=complex)
    for position, m in enumerate(sub.K):
        P[m] = np.einsum("c,cij->ij", labeling.pairing[:, position], rep[:n_chars]) / len(sub.K)
    Q = rep[n_chars * sub.projection.map]
    return rep_object(x, P, Q)
