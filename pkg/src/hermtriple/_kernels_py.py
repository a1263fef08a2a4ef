"""Numpy implementations of the three numerical kernels.

Same contracts as the compiled module ``_kernels_cy``:

* ``jacobi_eigh_kernel``  - cyclic (row-sweep) complex Jacobi eigensolver
* ``ldl_inertia_kernel``  - symmetric-pivoted LDL* inertia counter
* ``lu_det_kernel``       - determinant via LU with partial pivoting

All three mutate the matrix argument in place; callers pass a fresh
writable C-contiguous complex128 copy.  Everything is deterministic:
fixed sweep order, fixed rotation-angle convention (angle in (-pi/4, pi/4]),
first-maximum pivot selection.
"""

import math

import numpy as np

BACKEND = "python"

# Bunch-Kaufman pivot-selection constant.
_BK_ALPHA = (1.0 + math.sqrt(17.0)) / 8.0


def _offdiag_norm(a: np.ndarray) -> float:
    a2 = np.abs(a) ** 2
    np.fill_diagonal(a2, 0.0)
    return math.sqrt(float(a2.sum()))


def jacobi_eigh_kernel(a: np.ndarray, tol: float, max_sweeps: int):
    """Diagonalize Hermitian ``a`` in place.

    Returns (diag, vectors, off_norm, sweeps, converged): the unsorted real
    diagonal, the accumulated unitary (column i pairs with diag[i]), the
    final off-diagonal Frobenius mass, the sweep count, and a convergence
    flag (off mass <= tol * ||a||_F).
    """
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    thresh = tol * float(np.linalg.norm(a))
    sweeps = 0
    while True:
        off = _offdiag_norm(a)
        if off <= thresh:
            return a.diagonal().real.copy(), v, off, sweeps, True
        if sweeps >= max_sweeps:
            return a.diagonal().real.copy(), v, off, sweeps, False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                b = abs(apq)
                if b == 0.0:
                    continue
                alpha = a[p, p].real
                gamma = a[q, q].real
                # Real rotation angle for the phase-factored 2x2 block:
                # tan(2*phi) = 2|apq| / (app - aqq), |t| <= 1.
                tau = (alpha - gamma) / (2.0 * b)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(tau * tau + 1.0))
                else:
                    t = 1.0 / (tau - math.sqrt(tau * tau + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = (t * c) * (apq / b).conjugate()
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap + s * aq
                a[:, q] = (-s.conjugate()) * ap + c * aq
                a[p, p] = alpha + t * b
                a[q, q] = gamma - t * b
                a[p, q] = 0.0
                a[q, p] = 0.0
                # Hermitian mirror keeps the matrix exactly conjugate-symmetric.
                a[p, :] = a[:, p].conj()
                a[q, :] = a[:, q].conj()
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp + s * vq
                v[:, q] = (-s.conjugate()) * vp + c * vq
        sweeps += 1


def _swap_sym(a: np.ndarray, i: int, j: int) -> None:
    if i == j:
        return
    a[[i, j], :] = a[[j, i], :]
    a[:, [i, j]] = a[:, [j, i]]


def ldl_inertia_kernel(a: np.ndarray, zero_thr: float):
    """Inertia of Hermitian ``a`` via pivoted LDL* with 1x1 and 2x2 blocks.

    Pivot selection follows the Bunch-Kaufman partial strategy with
    alpha = (1+sqrt(17))/8.  Returns (n_plus, n_minus, n_zero, ok); ok is
    False only on a pivot breakdown, which the selection rules make
    unreachable for finite Hermitian input (2x2 pivots have det < 0).
    """
    n = a.shape[0]
    n_plus = n_minus = n_zero = 0

    def classify(d: float):
        nonlocal n_plus, n_minus, n_zero
        if d > zero_thr:
            n_plus += 1
        elif d < -zero_thr:
            n_minus += 1
        else:
            n_zero += 1

    k = 0
    while k < n:
        if k == n - 1:
            classify(a[k, k].real)
            k += 1
            continue
        col = np.abs(a[k + 1 :, k])
        r_off = int(np.argmax(col))
        lam = float(col[r_off])
        r = k + 1 + r_off
        akk = a[k, k].real
        if max(abs(akk), lam) <= zero_thr:
            # Numerically zero row/column: split off one zero eigenvalue.
            n_zero += 1
            k += 1
            continue
        use_2x2 = False
        if abs(akk) >= _BK_ALPHA * lam:
            pass  # 1x1 pivot at k
        else:
            colr = np.abs(a[k:, r]).copy()
            colr[r - k] = 0.0
            sigma = float(colr.max())
            if abs(akk) * sigma >= _BK_ALPHA * lam * lam:
                pass  # 1x1 pivot at k
            elif abs(a[r, r].real) >= _BK_ALPHA * sigma:
                _swap_sym(a, k, r)  # 1x1 pivot, brought to position k
            else:
                _swap_sym(a, k + 1, r)
                use_2x2 = True
        if not use_2x2:
            d = a[k, k].real
            classify(d)
            if d != 0.0 and k + 1 < n:
                colv = a[k + 1 :, k].copy()
                a[k + 1 :, k + 1 :] -= np.outer(colv, colv.conj()) / d
            k += 1
            continue
        d1 = a[k, k].real
        d2 = a[k + 1, k + 1].real
        e = a[k, k + 1]
        det_e = d1 * d2 - (e.real * e.real + e.imag * e.imag)
        if det_e >= 0.0:
            return n_plus, n_minus, n_zero, False
        # An indefinite 2x2 block contributes one eigenvalue of each sign.
        n_plus += 1
        n_minus += 1
        if k + 2 < n:
            c0 = a[k + 2 :, k].copy()
            c1 = a[k + 2 :, k + 1].copy()
            w0 = (c0 * d2 - c1 * e.conjugate()) / det_e
            w1 = (c1 * d1 - c0 * e) / det_e
            block = a[k + 2 :, k + 2 :] - (
                np.outer(w0, c0.conj()) + np.outer(w1, c1.conj())
            )
            a[k + 2 :, k + 2 :] = (block + block.conj().T) / 2.0
        k += 2
    return n_plus, n_minus, n_zero, True


def lu_det_kernel(a: np.ndarray) -> complex:
    """Determinant of ``a`` via LU with partial pivoting (in place)."""
    n = a.shape[0]
    det = complex(1.0, 0.0)
    for col in range(n):
        piv = np.abs(a[col:, col])
        i = int(np.argmax(piv))
        if piv[i] == 0.0:
            return complex(0.0, 0.0)
        ip = col + i
        if ip != col:
            a[[col, ip], :] = a[[ip, col], :]
            det = -det
        akk = a[col, col]
        det *= complex(akk)
        if col + 1 < n:
            l = a[col + 1 :, col] / akk
            a[col + 1 :, col + 1 :] -= np.outer(l, a[col, col + 1 :])
    return det
