"""
Machine-readable reports and the invariant suite run by ``xmodcat verify``.

Reports are plain dictionaries serialized with sorted keys; complex numbers become ``[re, im]`` pairs rounded to
15 significant digits so two runs with the same seed produce byte-identical output.
"""
from __future__ import annotations

import collections
import json
import logging
import typing

import numpy as np

from xmodcat.crossed_module import CrossedModule, group_GX, quotient_xbar
from xmodcat.document import from_crossed_module, input_hash
from xmodcat.exceptions import CriterionMismatch
from xmodcat.group_core import character_table, irreducible_representations, left_regular_representation
from xmodcat.modularization import verify_modularization, MatchReport
from xmodcat.rep_theory import (
    SimpleTable,
    ModularData,
    simple_objects,
    s_matrix,
    gram_matrices,
    transparent_simples,
    double_braiding_transparent,
    vacuum_multiplicities,
    vacuum_object,
    check_frobenius,
    functor_F_from_GX,
    character,
    is_modular,
    twist_law_residual,
)
from xmodcat.settings import Settings
from xmodcat.utils import CheckResult, max_residual

logger = logging.getLogger(__name__)

_SNAP = 1e-13


def _real(value: float) -> float:
    value = float(value)
    if abs(value) < _SNAP:
        return 0.0
    return float(f"{value:.15g}")


def serialize_complex(value: complex) -> list[float]:
    value = complex(value)
    return [_real(value.real), _real(value.imag)]


def serialize_check(check: CheckResult) -> dict:
    return {"name": check.name, "passed": check.passed, "residual": _real(check.residual), "detail": check.detail}


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


# ------------------------------------------
# Invariant suite
# ------------------------------------------
def invariant_suite(x: CrossedModule, seed: int = None) -> list[CheckResult]:
    """Runs every invariant of M(X) and its modularization, returning one result per check."""
    settings = Settings(seed=seed)
    seed, tol = settings["seed"], settings["tolerance"]
    table = simple_objects(x, seed)
    md = s_matrix(table)
    results = [CheckResult(name="crossed module axioms", passed=True)]

    total = sum(d * d for d in table.dims)
    results.append(
        CheckResult(
            name="Burnside sum",
            passed=total == x.x1.order * x.x2.order,
            detail=f"Σd² = {total}, |X1|·|X2| = {x.x1.order * x.x2.order}",
        )
    )

    bilinear, hermitian = gram_matrices(x, table.characters)
    eye = np.eye(len(table))
    results.append(
        CheckResult.from_residual("orthogonality", max(max_residual(bilinear, eye), max_residual(hermitian, eye)), tol)
    )
    results.append(CheckResult.from_residual("twist law", twist_law_residual(x, table.characters, table.twists), tol))
    results.append(_transparency_concordance(table, md))

    results.append(
        CheckResult(
            name="modularity criterion",
            passed=is_modular(md) == x.is_boundary_bijective(),
            residual=abs(complex(np.linalg.det(md.S))),
            detail=f"boundary bijective: {x.is_boundary_bijective()}",
        )
    )
    results.extend(_tannakian_checks(x, table, md, seed, tol))

    frobenius = check_frobenius(vacuum_object(x))
    results.append(
        CheckResult(
            name="Frobenius laws",
            passed=frobenius.passed,
            residual=max(law.residual for law in frobenius.laws),
            detail=f"β1 = {_real(frobenius.beta_one.real)}, βA = {_real(frobenius.beta_a.real)}",
        )
    )

    modularization = verify_modularization(x, seed)
    results.extend(modularization.legs)
    for result in results:
        logger.debug("%s: %s (%.3g)", result.name, "ok" if result.passed else "FAILED", result.residual)
    return results


def _transparency_concordance(table: SimpleTable, md: ModularData) -> CheckResult:
    matrix_test = double_braiding_transparent(table)
    try:
        transparent_simples(md)
    except CriterionMismatch as err:
        return CheckResult(name="transparency concordance", passed=False, detail=str(err))
    return CheckResult(
        name="transparency concordance",
        passed=matrix_test == md.transparent,
        detail=f"|T| = {sum(md.transparent)}",
    )


def _tannakian_checks(x, table, md, seed, tol) -> list[CheckResult]:
    transparent = [p for p, flag in enumerate(md.transparent) if flag]
    sub = x.sub
    sum_squares = sum(table.dims[p] ** 2 for p in transparent)
    twists = max((abs(md.twists[p] - 1) for p in transparent), default=0.0)

    gx, _ = group_GX(x)
    gx_table = character_table(gx, seed=seed)
    degrees_match = collections.Counter(gx_table.degrees) == collections.Counter(table.dims[p] for p in transparent)
    regular = functor_F_from_GX(x, left_regular_representation(gx))
    vacuum_character = character(vacuum_object(x).obj)

    irreps = irreducible_representations(gx, gx_table, seed=seed)
    images = [character(functor_F_from_GX(x, rep)) for rep in irreps]
    hermitian = np.einsum("pmg,qmg->pq", table.characters.conj(), np.asarray(images)) / x.x1.order
    hits = sorted(int(np.argmax(np.abs(hermitian[:, i]))) for i in range(len(images)))

    return [
        CheckResult(
            name="transparent dimensions",
            passed=sum_squares == sub.D and twists < tol,
            residual=float(twists),
            detail=f"Σ_T d² = {sum_squares}, |K||C| = {sub.D}",
        ),
        CheckResult(
            name="G(X) realizes the transparent simples",
            passed=len(gx_table) == len(transparent) and degrees_match and hits == transparent,
            detail=f"|G(X)| = {gx.order}, {len(gx_table)} irreducibles",
        ),
        CheckResult.from_residual(
            "regular representation maps to the vacuum", max_residual(character(regular), vacuum_character), tol
        ),
    ]


# ------------------------------------------
# Reports
# ------------------------------------------
def simples_report(table: SimpleTable) -> list[dict]:
    return [
        {"label": list(label), "dim": dim, "twist": serialize_complex(twist)}
        for label, dim, twist in zip(table.labels, table.dims, table.twists)
    ]


def modular_data_report(md: ModularData) -> dict:
    fusion = [
        [int(p), int(q), int(r), int(md.fusion[p, q, r])] for p, q, r in zip(*np.nonzero(md.fusion))
    ]
    return {
        "S": [[serialize_complex(value) for value in row] for row in md.S],
        "fusion": fusion,
        "transparent": list(md.transparent),
        "vacuum_multiplicities": vacuum_multiplicities(md).tolist(),
        "unit": md.unit,
    }


def gx_report(x: CrossedModule, seed: int = None) -> dict:
    gx, labeling = group_GX(x)
    degrees = character_table(gx, seed=Settings(seed=seed)["seed"]).degrees
    return {
        "order": gx.order,
        "table": gx.table.tolist(),
        "labels": [list(label) for label in labeling.labels],
        "degrees": list(degrees),
    }


def match_report(match: MatchReport) -> dict:
    return {
        "permutation": list(match.permutation) if match.matched else None,
        "residuals": {key: _real(value) for key, value in match.residuals.items()},
    }


def data_report(
    x: CrossedModule, text: str, seed: int = None, checks: typing.Optional[list[CheckResult]] = None
) -> dict:
    """
    Arguments:
        x (CrossedModule): The crossed module.
        text (str): The document it was read from, hashed into the report.
        seed (int | None): RNG seed (default: the :code:`seed` setting).
        checks (list[CheckResult] | None): Verification results (default: :func:`invariant_suite`).
    """
    from xmodcat import __version__  # pylint: disable=import-outside-toplevel

    settings = Settings(seed=seed)
    table = simple_objects(x, settings["seed"])
    md = s_matrix(table)
    xbar, _ = quotient_xbar(x)
    checks = invariant_suite(x, settings["seed"]) if checks is None else checks
    return {
        "tool": {"name": "xmodcat", "version": __version__},
        "input_sha256": input_hash(text),
        "name": x.name,
        "seed": settings["seed"],
        "tolerance": settings["tolerance"],
        "simples": simples_report(table),
        **modular_data_report(md),
        "gx": gx_report(x, settings["seed"]),
        "xbar": from_crossed_module(xbar).to_dict(),
        "verification": [serialize_check(check) for check in checks],
    }
