from __future__ import annotations

import dataclasses
import functools
import typing

import numpy as np
import scipy.linalg

from xmodcat.exceptions import NonIntegerMultiplicity


empty = object()
""" An object to use when None is a valid value for an argument """


def maybe_decorator(func: typing.Callable):
    """Let a keyword-configurable decorator be used both bare (``@deco``) and called (``@deco(name=...)``)."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        if not args:
            return maybe_decorator(functools.partial(func, **kwargs))
        return func(*args, **kwargs)

    return wrapper


def round_guarded(value: complex, guard: float, error: typing.Type[Exception] = NonIntegerMultiplicity) -> int:
    """
    Arguments:
        value (complex): A number expected to be an integer up to rounding noise.
        guard (float): Largest accepted distance to the nearest integer.
        error (type[Exception]): Raised when the guard is breached.
    Returns:
        int: The nearest integer.
    """
    value = complex(value)
    nearest = round(value.real)
    if abs(value - nearest) > guard:
        raise error(f"{value} is not within {guard} of an integer")
    return int(nearest)


def max_residual(left, right=0.0) -> float:
    difference = np.abs(np.asarray(left) - np.asarray(right))
    if difference.size == 0:
        return 0.0
    return float(np.max(difference))


def flip(dim_v: int, dim_w: int) -> np.ndarray:
    """
    Returns:
        np.ndarray: The transposition V ⊗ W → W ⊗ V in the Kronecker basis (V index outermost on the source).
    """
    ret = np.zeros((dim_w * dim_v, dim_v * dim_w), dtype=complex)
    for i in range(dim_v):
        for j in range(dim_w):
            ret[j * dim_v + i, i * dim_w + j] = 1.0
    return ret


def orthonormal_range(matrix: np.ndarray, tol: float) -> np.ndarray:
    """Orthonormal basis (as columns) of the column space of ``matrix``; singular values below ``tol`` are dropped."""
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.size == 0:
        return np.zeros((matrix.shape[0], 0), dtype=complex)
    scale = max(1.0, float(np.max(np.abs(matrix))))
    return scipy.linalg.orth(matrix, rcond=tol / scale)


def orthonormal_cokernel(matrix: np.ndarray, tol: float) -> np.ndarray:
    """Orthonormal basis of the orthogonal complement of the column space of ``matrix``."""
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.size == 0:
        return np.eye(matrix.shape[0], dtype=complex)
    scale = max(1.0, float(np.max(np.abs(matrix))))
    return scipy.linalg.null_space(matrix.conj().T, rcond=tol / scale)


def complex_key(value: complex, digits: int = 8) -> tuple[float, float]:
    """Sort key placing larger real parts (then larger imaginary parts) first; rounding absorbs float noise."""
    value = complex(value)
    return (-round(value.real, digits) + 0.0, -round(value.imag, digits) + 0.0)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_hermitian(rng: np.random.Generator, dim: int) -> np.ndarray:
    raw = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (raw + raw.conj().T) / 2


@dataclasses.dataclass(frozen=True)
class CheckResult:
    """
    Attributes:
        name (str): Short name of the checked law or invariant.
        passed (bool): Whether the check held.
        residual (float): Largest deviation observed (0 for exact checks).
        detail (str): Optional human readable note.
    """

    name: str
    passed: bool
    residual: float = 0.0
    detail: str = ""

    @classmethod
    def from_residual(cls, name: str, residual: float, tol: float, detail: str = "") -> CheckResult:
        return cls(name=name, passed=bool(residual < tol), residual=float(residual), detail=detail)
