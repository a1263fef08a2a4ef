"""Dense complex matrices, the Hermitian subtype, and the triple product A·B·A.

Hermitian matrices are stored fully and kept *exactly* conjugate-symmetric:
construction symmetrizes through (M + M*)/2, which makes diagonal imaginary
parts exactly zero and lets downstream algorithms mirror entries instead of
recomputing them.  All values are immutable after construction (the backing
arrays are marked read-only), so everything here is safe to share across
threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import AsymmetryTooLarge, DimensionMismatch, InputError


@dataclass(frozen=True)
class ToleranceConfig:
    """Relative tolerances used throughout the package.

    herm_tol:  max allowed asymmetry before hermitization rejects the input
    zero_tol:  relative threshold below which an eigenvalue/pivot counts as 0
    resid_tol: residual threshold for identity and convergence checks
    """

    herm_tol: float = 1e-9
    zero_tol: float = 1e-8
    resid_tol: float = 1e-9

    def __post_init__(self):
        for name in ("herm_tol", "zero_tol", "resid_tol"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v >= 0.0):
                raise InputError(f"{name} must be finite and nonnegative, got {v!r}")


DEFAULT_TOL = ToleranceConfig()


def _as_array(m) -> np.ndarray:
    if isinstance(m, HermitianMatrix):
        return m.data
    return np.asarray(m, dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """An n×n complex matrix with A = A* enforced exactly."""

    data: np.ndarray

    def __post_init__(self):
        a = np.array(self.data, dtype=np.complex128, order="C", copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise InputError("matrix entries must be finite")
        if not np.array_equal(a, a.conj().T):
            raise InputError("matrix is not exactly Hermitian; construct via hermitize()")
        a.setflags(write=False)
        object.__setattr__(self, "data", a)

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @classmethod
    def identity(cls, n: int) -> "HermitianMatrix":
        return cls(np.eye(n, dtype=np.complex128))

    @classmethod
    def zeros(cls, n: int) -> "HermitianMatrix":
        return cls(np.zeros((n, n), dtype=np.complex128))

    @classmethod
    def from_diag(cls, values) -> "HermitianMatrix":
        d = np.asarray(values, dtype=np.float64)
        return cls(np.diag(d).astype(np.complex128))

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"HermitianMatrix(n={self.n})"


def _symmetrized(m: np.ndarray) -> HermitianMatrix:
    """Wrap (M + M*)/2 without an asymmetry gate (for internal exact results)."""
    return HermitianMatrix((m + m.conj().T) / 2.0)


def hermitize(m, cfg: ToleranceConfig = DEFAULT_TOL) -> HermitianMatrix:
    """Symmetrize a square complex matrix into a HermitianMatrix.

    Raises AsymmetryTooLarge when max |M - M*| exceeds herm_tol * (1 + max|M|).
    """
    a = _as_array(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InputError("matrix entries must be finite")
    asym = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    scale = 1.0 + (float(np.max(np.abs(a))) if a.size else 0.0)
    if asym > cfg.herm_tol * scale:
        raise AsymmetryTooLarge(
            f"max asymmetry {asym:.3e} exceeds {cfg.herm_tol:.1e} * {scale:.3e}"
        )
    return _symmetrized(a)


def jtp(a: HermitianMatrix, b: HermitianMatrix) -> HermitianMatrix:
    """The Jordan triple product A·B·A, re-symmetrized exactly.

    A·B·A is Hermitian in exact arithmetic since (ABA)* = A*B*A* = ABA.
    """
    if a.n != b.n:
        raise DimensionMismatch(f"size mismatch: {a.n} vs {b.n}")
    return _symmetrized(a.data @ b.data @ a.data)


def exchange_matrix(n: int) -> HermitianMatrix:
    """Anti-diagonal ones; an exact involution (E·E = I)."""
    if n < 1:
        raise DimensionMismatch("n must be >= 1")
    return HermitianMatrix(np.fliplr(np.eye(n, dtype=np.complex128)))


def direct_sum(a: HermitianMatrix, b: HermitianMatrix) -> HermitianMatrix:
    """Block-diagonal A ⊕ B of size a.n + b.n."""
    n, m = a.n, b.n
    out = np.zeros((n + m, n + m), dtype=np.complex128)
    out[:n, :n] = a.data
    out[n:, n:] = b.data
    return HermitianMatrix(out)


# -- generic dense plumbing (totals on matching shapes) ----------------------

def mat_mul(a, b) -> np.ndarray:
    x, y = _as_array(a), _as_array(b)
    if x.shape[1] != y.shape[0]:
        raise DimensionMismatch(f"cannot multiply {x.shape} by {y.shape}")
    return x @ y


def adjoint(m) -> np.ndarray:
    return _as_array(m).conj().T


def matrix_sub(a, b) -> np.ndarray:
    x, y = _as_array(a), _as_array(b)
    if x.shape != y.shape:
        raise DimensionMismatch(f"shape mismatch: {x.shape} vs {y.shape}")
    return x - y


def frobenius_norm(m) -> float:
    return float(np.linalg.norm(_as_array(m)))


def max_abs_entry(m) -> float:
    a = _as_array(m)
    return float(np.max(np.abs(a))) if a.size else 0.0


# -- matrix file format (shared with the CLI) --------------------------------
#
# {"n": N, "entries": [[re, im], ...]} with N*N pairs, row-major.  Writers
# emit 17 significant digits (lossless for float64); readers hermitize with
# the configured herm_tol.

def _f17(x: float) -> float:
    return float(f"{x:.17g}")


def matrix_to_doc(a: HermitianMatrix) -> dict:
    flat = a.data.reshape(-1)
    return {
        "n": a.n,
        "entries": [[_f17(z.real), _f17(z.imag)] for z in flat],
    }


def matrix_from_doc(doc: dict, cfg: ToleranceConfig = DEFAULT_TOL) -> HermitianMatrix:
    try:
        n = int(doc["n"])
        entries = doc["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed matrix document: {exc}") from exc
    if n < 1 or len(entries) != n * n:
        raise InputError(f"matrix document needs n>=1 and n*n entries, got n={n}, {len(entries)} entries")
    try:
        flat = np.array([complex(re, im) for re, im in entries], dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InputError(f"malformed matrix entries: {exc}") from exc
    return hermitize(flat.reshape(n, n), cfg)


def save_matrix(a: HermitianMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_doc(a), fh)
        fh.write("\n")


def load_matrix(path, cfg: ToleranceConfig = DEFAULT_TOL) -> HermitianMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read matrix file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc
    return matrix_from_doc(doc, cfg)
