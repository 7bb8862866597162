"""
Modularization of M(X) by induction to modules over the vacuum algebra.

The pipeline is

.. code-block:: text

    V  ──induce──▶  V_K ⊗ V  ──F──▶  module over the vacuum of X′  ──F′──▶  object of M(X̄)

where ``F`` cuts out the ``δ_I`` component and ``F′`` takes coinvariants under ``ker ∂``. All functors work on
explicit matrices: subspaces are given by orthonormal bases and induced operators by compression.
"""
from __future__ import annotations

import dataclasses
import logging
import typing

import numpy as np

from xmodcat.crossed_module import CrossedModule, quotient_xbar, restricted_xprime, transport_to_double
from xmodcat.exceptions import ProjectorRankMismatch, IllDefinedQuotient, InvariantFailure
from xmodcat.rep_theory import (
    RepObject,
    VacuumAlgebra,
    ModularData,
    vacuum_object,
    tensor_object,
    braiding,
    rep_object,
    simple_objects,
    s_matrix,
    decompose,
    transparent_simples,
    is_modular,
)
from xmodcat.settings import Settings
from xmodcat.utils import max_residual, orthonormal_range, orthonormal_cokernel, CheckResult

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class VacModule:
    """
    Attributes:
        obj (RepObject): The underlying object.
        rho (np.ndarray): The action ``A ⊗ V → V`` as a ``d × (dim A · d)`` matrix.
        algebra (VacuumAlgebra): The vacuum algebra acting.
    """

    obj: RepObject
    rho: np.ndarray
    algebra: VacuumAlgebra

    @property
    def x(self) -> CrossedModule:
        return self.obj.x

    @property
    def dim(self) -> int:
        return self.obj.dim

    def action(self, a: int) -> np.ndarray:
        """``ρ(e_a ⊗ −)`` for basis vector ``a`` of the algebra."""
        return self.rho[:, a * self.dim : (a + 1) * self.dim]


@dataclasses.dataclass(frozen=True)
class MatchReport:
    """
    Attributes:
        permutation (tuple[int, ...] | None): ``permutation[p]`` is the simple of the second category matched to
            simple ``p`` of the first.
        residuals (dict[str, float]): Largest deviations of dims, twists, S and fusion under the permutation.
    """

    permutation: typing.Optional[tuple]
    residuals: dict = dataclasses.field(default_factory=dict)

    @property
    def matched(self) -> bool:
        return self.permutation is not None


@dataclasses.dataclass(frozen=True)
class ModularizationReport:
    name: str
    legs: tuple
    n_simples: int
    match: MatchReport
    covered: tuple

    @property
    def passed(self) -> bool:
        return all(leg.passed for leg in self.legs)


# ------------------------------------------
# Modules over the vacuum
# ------------------------------------------
def induce(x: CrossedModule, obj: RepObject) -> VacModule:
    """The free module ``V_K ⊗ V`` with action ``m ⊗ id_V``."""
    algebra = vacuum_object(x)
    return VacModule(
        obj=tensor_object(algebra.obj, obj),
        rho=np.kron(algebra.m, np.eye(obj.dim)),
        algebra=algebra,
    )


def regular_module(algebra: VacuumAlgebra) -> VacModule:
    return VacModule(obj=algebra.obj, rho=algebra.m, algebra=algebra)


def check_module(module: VacModule, tol: float = None) -> list[CheckResult]:
    """Residuals of associativity, unit, the morphism property and locality."""
    tol = Settings(tolerance=tol)["tolerance"]
    algebra, rho = module.algebra, module.rho
    eye_a, eye_m = np.eye(algebra.dim), np.eye(module.dim)
    paired = tensor_object(algebra.obj, module.obj)
    double_braid = braiding(module.obj, algebra.obj) @ braiding(algebra.obj, module.obj)

    return [
        CheckResult.from_residual(
            "associativity", max_residual(rho @ np.kron(algebra.m, eye_m), rho @ np.kron(eye_a, rho)), tol
        ),
        CheckResult.from_residual("unit", max_residual(rho @ np.kron(algebra.eta[:, None], eye_m), eye_m), tol),
        CheckResult.from_residual("grading", max_residual(rho @ paired.P, module.obj.P @ rho), tol),
        CheckResult.from_residual("equivariance", max_residual(rho @ paired.Q, module.obj.Q @ rho), tol),
        CheckResult.from_residual("locality", max_residual(rho @ double_braid, rho), tol),
    ]


def module_character(module: VacModule) -> np.ndarray:
    """
    Returns:
        np.ndarray: ``χ[a, m, g] = tr(ρ(e_a ⊗ −) P(m) Q(g))``, an isomorphism invariant of the module.
    """
    dim = module.dim
    actions = module.rho.reshape(dim, module.algebra.dim, dim).transpose(1, 0, 2)
    return np.einsum("aij,mjk,gki->amg", actions, module.obj.P, module.obj.Q)


def tensor_over_A(left: VacModule, right: VacModule) -> VacModule:
    """
    ``M ⊗_A N = coker(ρ_M ∘ R_{M,A} ⊗ id_N − id_M ⊗ ρ_N)``, realised on the orthogonal complement of the image.
    """
    tol = Settings()["tolerance"]
    algebra = left.algebra
    eye_m, eye_n, eye_a = np.eye(left.dim), np.eye(right.dim), np.eye(algebra.dim)

    relations = np.kron(left.rho @ braiding(left.obj, algebra.obj), eye_n) - np.kron(eye_m, right.rho)
    U = orthonormal_cokernel(relations, tol)
    product = tensor_object(left.obj, right.obj)
    Uh = U.conj().T
    obj = RepObject(x=left.x, P=Uh @ product.P @ U, Q=Uh @ product.Q @ U)
    rho = Uh @ np.kron(left.rho, eye_n) @ np.kron(eye_a, U)
    return VacModule(obj=obj, rho=rho, algebra=algebra)


# ------------------------------------------
# The functors
# ------------------------------------------
def functor_F_restrict(module: VacModule) -> VacModule:
    """
    Cuts a module over the vacuum of X down to the image of ``ρ((e, I) ⊗ −)``, a module over the vacuum of
    ``X′ = (I, X₂, μ|_I, ∂)``.

    Raises:
        ProjectorRankMismatch: If the image does not have dimension ``dim / |C|``.
    """
    tol = Settings()["tolerance"]
    x = module.x
    sub = x.sub
    xprime = restricted_xprime(x)
    target_algebra = vacuum_object(xprime)

    U = orthonormal_range(module.action(0), tol)
    if U.shape[1] * sub.C.order != module.dim:
        raise ProjectorRankMismatch(f"δ_I component has rank {U.shape[1]}, expected {module.dim}/{sub.C.order}")

    Uh = U.conj().T
    embedding = np.eye(module.algebra.dim)[:, : len(sub.K)]
    obj = rep_object(xprime, Uh @ module.obj.P @ U, Uh @ module.obj.Q[list(sub.I)] @ U)
    rho = Uh @ module.rho @ np.kron(embedding, U)
    logger.debug("restricted a %d-dimensional module to %d dimensions", module.dim, obj.dim)
    return VacModule(obj=obj, rho=rho, algebra=target_algebra)


def functor_Fprime_coinv(module: VacModule, target: CrossedModule = None) -> RepObject:
    """
    Coinvariants ``W/(x.w − w)`` under ``ker ∂``, realised as the image of the averaging idempotent
    ``E = (1/|K|) Σ_x ρ(x ⊗ −)``. The grade of a coset ``Km`` is the compression of ``Σ_{n ∈ Km} P(n)``.

    Arguments:
        module (VacModule): A module over the vacuum of a crossed module with surjective boundary.
        target (CrossedModule | None): The quotient crossed module to land in (default: computed from the module).
    Raises:
        ProjectorRankMismatch: If the coinvariants do not have dimension ``dim / |K|``.
        IllDefinedQuotient: If a grade depends on the coset representative.
    """
    tol = Settings()["tolerance"]
    x = module.x
    xbar, maps = quotient_xbar(x)
    if target is not None:
        _check_same_crossed_module(target, xbar)
        xbar = target

    n_k = len(x.sub.K)
    averaging = sum(module.action(a) for a in range(n_k)) / n_k
    U = orthonormal_range(averaging, tol)
    if U.shape[1] * n_k != module.dim:
        raise ProjectorRankMismatch(f"coinvariants have dimension {U.shape[1]}, expected {module.dim}/{n_k}")
    Uh = U.conj().T

    P = np.zeros((xbar.x2.order, U.shape[1], U.shape[1]), dtype=complex)
    for coset in xbar.x2.elements:
        members = np.flatnonzero(maps.projection.map == coset)
        P[coset] = Uh @ module.obj.P[members].sum(axis=0) @ U
    for n in x.x2.elements:
        single = n_k * (Uh @ averaging @ module.obj.P[n] @ U)
        if max_residual(single, P[maps.projection(n)]) > tol:
            raise IllDefinedQuotient(f"grade of the coset of {n} depends on the representative")

    return rep_object(xbar, P, Uh @ module.obj.Q @ U)


def _check_same_crossed_module(left: CrossedModule, right: CrossedModule):
    same = (
        np.array_equal(left.x1.table, right.x1.table)
        and np.array_equal(left.x2.table, right.x2.table)
        and np.array_equal(left.mu.perm, right.mu.perm)
        and np.array_equal(left.boundary.map, right.boundary.map)
    )
    if not same:
        raise InvariantFailure(f"{left!r} and {right!r} are not the same crossed module")


def modularize_object(x: CrossedModule, obj: RepObject) -> RepObject:
    """``F′ ∘ F ∘ induce``, landing in M(X̄) for ``X̄ = quotient_xbar(x)``."""
    xbar, _ = quotient_xbar(x)
    return functor_Fprime_coinv(functor_F_restrict(induce(x, obj)), target=xbar)


# ------------------------------------------
# Verification
# ------------------------------------------
def match_modular_data(left: ModularData, right: ModularData, tol: float = None) -> MatchReport:
    """
    Depth-first search over relabelings constrained by ``(d, θ)``, checking S incrementally and fusion at the
    leaves. Candidates are tried in increasing index so the first match is canonical.
    """
    tol = Settings(tolerance=tol)["tolerance"]
    size = len(left)
    if size != len(right):
        return MatchReport(permutation=None)

    def compatible(p, q):
        return left.dims[p] == right.dims[q] and abs(complex(left.twists[p]) - complex(right.twists[q])) < tol

    candidates = [[q for q in range(size) if compatible(p, q)] for p in range(size)]
    assignment, used = [], set()

    def consistent(p, q):
        return all(abs(left.S[p, r] - right.S[q, assignment[r]]) < tol for r in range(p)) and (
            abs(left.S[p, p] - right.S[q, q]) < tol
        )

    def search(p) -> bool:
        if p == size:
            perm = np.asarray(assignment)
            return np.array_equal(left.fusion, right.fusion[np.ix_(perm, perm, perm)])
        for q in candidates[p]:
            if q in used or not consistent(p, q):
                continue
            assignment.append(q)
            used.add(q)
            if search(p + 1):
                return True
            assignment.pop()
            used.discard(q)
        return False

    if not search(0):
        logger.info("no relabeling matches %s to %s", left.name, right.name)
        return MatchReport(permutation=None)

    perm = np.asarray(assignment)
    residuals = {
        "dims": max_residual(np.asarray(left.dims), np.asarray(right.dims)[perm]),
        "twists": max_residual(left.twists, right.twists[perm]),
        "S": max_residual(left.S, right.S[np.ix_(perm, perm)]),
        "fusion": max_residual(left.fusion, right.fusion[np.ix_(perm, perm, perm)]),
    }
    return MatchReport(permutation=tuple(int(q) for q in perm), residuals=residuals)


def verlinde_fusion(md: ModularData) -> np.ndarray:
    """``N_pq^r = Σ_s S_ps S_qs conj(S_rs) / S_1s``."""
    S = md.S
    return np.einsum("ps,qs,rs,s->pqr", S, S, S.conj(), 1.0 / S[md.unit])


def modularized_images(x: CrossedModule, seed: int = None) -> list[np.ndarray]:
    """Multiplicity vectors over the simples of X̄ of the images of all simples of X."""
    xbar, _ = quotient_xbar(x)
    table, table_bar = simple_objects(x, seed), simple_objects(xbar, seed)
    return [decompose(modularize_object(x, obj), table_bar) for obj in table.objects]


def dominance(x: CrossedModule, seed: int = None) -> tuple:
    """
    Returns:
        tuple[bool, ...]: For each simple of M(X̄), whether it occurs in the image of some simple of M(X).
    """
    images = modularized_images(x, seed)
    return tuple(bool(flag) for flag in np.any(np.asarray(images) > 0, axis=0))


def verify_modularization(x: CrossedModule, seed: int = None) -> ModularizationReport:
    """
    Checks that M(X̄) is modular, that it matches the Drinfeld double of ``Im ∂``, the Verlinde formula, the
    simple count, that transparent simples modularize to copies of the unit, and dominance.
    """
    settings = Settings(seed=seed)
    seed = settings["seed"]
    xbar, _ = quotient_xbar(x)
    table_bar = simple_objects(xbar, seed)
    md_bar = s_matrix(table_bar)
    n_i = len(x.sub.I)

    det = abs(complex(np.linalg.det(md_bar.S)))
    transparent = transparent_simples(md_bar)
    modular = CheckResult(
        name="quotient is modular",
        passed=is_modular(md_bar) and transparent == (md_bar.unit,),
        residual=det,
        detail=f"|det S| = {det:.6g}, transparent = {list(transparent)}",
    )

    double, _ = transport_to_double(xbar)
    match = match_modular_data(md_bar, s_matrix(simple_objects(double, seed)))
    matched = CheckResult(
        name="matches Drinfeld double of Im ∂",
        passed=match.matched,
        residual=max(match.residuals.values(), default=0.0),
        detail=f"permutation = {list(match.permutation) if match.matched else None}",
    )

    verlinde = CheckResult.from_residual(
        "Verlinde formula", max_residual(verlinde_fusion(md_bar), md_bar.fusion), Settings()["rounding_guard"]
    )

    total = sum(d * d for d in md_bar.dims)
    counts = CheckResult(
        name="simple count",
        passed=total == n_i * n_i,
        detail=f"{len(md_bar)} simples, Σd² = {total}, |Im ∂|² = {n_i * n_i}",
    )

    table = simple_objects(x, seed)
    images = modularized_images(x, seed)
    md = s_matrix(table)
    unit_row = np.zeros(len(table_bar), dtype=np.int64)
    unit_row[table_bar.unit] = 1
    transparent_to_unit = CheckResult(
        name="transparent simples map to copies of the unit",
        passed=all(np.array_equal(images[p], table.dims[p] * unit_row) for p in transparent_simples(md)),
    )
    preserved = CheckResult(
        name="dimension preserved",
        passed=all(int(images[p] @ np.asarray(table_bar.dims)) == table.dims[p] for p in range(len(table))),
    )
    covered = tuple(bool(flag) for flag in np.any(np.asarray(images) > 0, axis=0))
    dominant = CheckResult(name="dominance", passed=all(covered), detail=f"{sum(covered)}/{len(covered)} covered")

    legs = (modular, matched, verlinde, counts, transparent_to_unit, preserved, dominant)
    for leg in legs:
        if not leg.passed:
            logger.warning("%r: %s fails (%s)", x, leg.name, leg.detail or leg.residual)
    return ModularizationReport(name=x.name, legs=legs, n_simples=len(md_bar), match=match, covered=covered)
