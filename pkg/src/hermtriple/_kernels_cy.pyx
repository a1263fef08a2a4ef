# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled implementations of the three numerical kernels.

Mirrors ``_kernels_py`` operation for operation: cyclic complex Jacobi
eigensolver, Bunch-Kaufman pivoted LDL* inertia, LU determinant with
partial pivoting.  Inputs are mutated in place; callers pass fresh
writable C-contiguous complex128 copies.
"""

import numpy as np

from libc.math cimport fabs, hypot, sqrt

ctypedef double complex cplx

BACKEND = "cython"

cdef double _BK_ALPHA = (1.0 + sqrt(17.0)) / 8.0


cdef inline cplx C(double re, double im) noexcept nogil:
    return re + 1j * im


cdef inline double _cabs(cplx z) noexcept nogil:
    return hypot(z.real, z.imag)


cdef double _offdiag_norm(cplx[:, ::1] a) noexcept nogil:
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j
    cdef double acc = 0.0, m
    for i in range(n):
        for j in range(n):
            if i != j:
                m = _cabs(a[i, j])
                acc += m * m
    return sqrt(acc)


cdef double _fnorm(cplx[:, ::1] a) noexcept nogil:
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j
    cdef double acc = 0.0, m
    for i in range(n):
        for j in range(n):
            m = _cabs(a[i, j])
            acc += m * m
    return sqrt(acc)


def jacobi_eigh_kernel(cplx[:, ::1] a, double tol, int max_sweeps):
    """Diagonalize Hermitian ``a`` in place; see _kernels_py for the contract."""
    cdef Py_ssize_t n = a.shape[0]
    v_arr = np.eye(n, dtype=np.complex128)
    cdef cplx[:, ::1] v = v_arr
    cdef double thresh = tol * _fnorm(a)
    cdef Py_ssize_t sweeps = 0
    cdef Py_ssize_t p, q, i
    cdef double off, b, alpha, gamma, tau, t, c
    cdef cplx apq, s, sconj, aip, aiq, nip, niq, vip, viq
    cdef bint converged = False

    while True:
        off = _offdiag_norm(a)
        if off <= thresh:
            converged = True
            break
        if sweeps >= max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                b = _cabs(apq)
                if b == 0.0:
                    continue
                alpha = a[p, p].real
                gamma = a[q, q].real
                tau = (alpha - gamma) / (2.0 * b)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(tau * tau + 1.0))
                else:
                    t = 1.0 / (tau - sqrt(tau * tau + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                # s = (t*c) * conj(apq/b)
                s = C((t * c) * (apq.real / b), (t * c) * (-apq.imag / b))
                sconj = C(s.real, -s.imag)
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i, p]
                    aiq = a[i, q]
                    nip = C(c * aip.real, c * aip.imag) + s * aiq
                    niq = -(sconj * aip) + C(c * aiq.real, c * aiq.imag)
                    a[i, p] = nip
                    a[p, i] = C(nip.real, -nip.imag)
                    a[i, q] = niq
                    a[q, i] = C(niq.real, -niq.imag)
                a[p, p] = C(alpha + t * b, 0.0)
                a[q, q] = C(gamma - t * b, 0.0)
                a[p, q] = C(0.0, 0.0)
                a[q, p] = C(0.0, 0.0)
                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = C(c * vip.real, c * vip.imag) + s * viq
                    v[i, q] = -(sconj * vip) + C(c * viq.real, c * viq.imag)
        sweeps += 1

    d_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] d = d_arr
    for i in range(n):
        d[i] = a[i, i].real
    return d_arr, v_arr, off, sweeps, converged


cdef void _swap_sym(cplx[:, ::1] a, Py_ssize_t i, Py_ssize_t j) noexcept nogil:
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t k
    cdef cplx tmp
    if i == j:
        return
    for k in range(n):
        tmp = a[i, k]
        a[i, k] = a[j, k]
        a[j, k] = tmp
    for k in range(n):
        tmp = a[k, i]
        a[k, i] = a[k, j]
        a[k, j] = tmp


def ldl_inertia_kernel(cplx[:, ::1] a, double zero_thr):
    """Inertia via pivoted LDL*; see _kernels_py for the contract."""
    cdef Py_ssize_t n = a.shape[0]
    cdef long n_plus = 0, n_minus = 0, n_zero = 0
    cdef Py_ssize_t k = 0, i, j, r, r_off
    cdef double lam, akk, sigma, m, d, d1, d2, det_e
    cdef cplx e, econj, ci0, ci1, cj0, cj1, w0, w1, upd, nv
    cdef bint use_2x2

    while k < n:
        if k == n - 1:
            d = a[k, k].real
            if d > zero_thr:
                n_plus += 1
            elif d < -zero_thr:
                n_minus += 1
            else:
                n_zero += 1
            k += 1
            continue
        lam = 0.0
        r = k + 1
        for i in range(k + 1, n):
            m = _cabs(a[i, k])
            if m > lam:
                lam = m
                r = i
        akk = a[k, k].real
        if fabs(akk) <= zero_thr and lam <= zero_thr:
            n_zero += 1
            k += 1
            continue
        use_2x2 = False
        if fabs(akk) >= _BK_ALPHA * lam:
            pass
        else:
            sigma = 0.0
            for i in range(k, n):
                if i == r:
                    continue
                m = _cabs(a[i, r])
                if m > sigma:
                    sigma = m
            if fabs(akk) * sigma >= _BK_ALPHA * lam * lam:
                pass
            elif fabs(a[r, r].real) >= _BK_ALPHA * sigma:
                _swap_sym(a, k, r)
            else:
                _swap_sym(a, k + 1, r)
                use_2x2 = True
        if not use_2x2:
            d = a[k, k].real
            if d > zero_thr:
                n_plus += 1
            elif d < -zero_thr:
                n_minus += 1
            else:
                n_zero += 1
            if d != 0.0 and k + 1 < n:
                for i in range(k + 1, n):
                    ci0 = a[i, k]
                    for j in range(k + 1, n):
                        e = a[j, k]
                        a[i, j] = a[i, j] - (ci0 * C(e.real, -e.imag)) / C(d, 0.0)
            k += 1
            continue
        d1 = a[k, k].real
        d2 = a[k + 1, k + 1].real
        e = a[k, k + 1]
        det_e = d1 * d2 - (e.real * e.real + e.imag * e.imag)
        if det_e >= 0.0:
            return n_plus, n_minus, n_zero, False
        n_plus += 1
        n_minus += 1
        econj = C(e.real, -e.imag)
        if k + 2 < n:
            for i in range(k + 2, n):
                ci0 = a[i, k]
                ci1 = a[i, k + 1]
                w0 = (ci0 * C(d2, 0.0) - ci1 * econj) / C(det_e, 0.0)
                w1 = (ci1 * C(d1, 0.0) - ci0 * e) / C(det_e, 0.0)
                for j in range(k + 2, n):
                    cj0 = a[j, k]
                    cj1 = a[j, k + 1]
                    upd = w0 * C(cj0.real, -cj0.imag) + w1 * C(cj1.real, -cj1.imag)
                    a[i, j] = a[i, j] - upd
            # symmetrize the updated trailing block
            for i in range(k + 2, n):
                a[i, i] = C(a[i, i].real, 0.0)
                for j in range(k + 2, i):
                    nv = (a[i, j] + C(a[j, i].real, -a[j, i].imag)) / C(2.0, 0.0)
                    a[i, j] = nv
                    a[j, i] = C(nv.real, -nv.imag)
        k += 2
    return n_plus, n_minus, n_zero, True


def lu_det_kernel(cplx[:, ::1] a):
    """Determinant via LU with partial pivoting; see _kernels_py."""
    cdef Py_ssize_t n = a.shape[0]
    cdef cplx det = C(1.0, 0.0)
    cdef Py_ssize_t col, i, j, ip
    cdef double mx, m
    cdef cplx akk, l, tmp
    for col in range(n):
        mx = 0.0
        ip = col
        for i in range(col, n):
            m = _cabs(a[i, col])
            if m > mx:
                mx = m
                ip = i
        if mx == 0.0:
            return complex(0.0, 0.0)
        if ip != col:
            for j in range(n):
                tmp = a[col, j]
                a[col, j] = a[ip, j]
                a[ip, j] = tmp
            det = -det
        akk = a[col, col]
        det = det * akk
        for i in range(col + 1, n):
            l = a[i, col] / akk
            for j in range(col + 1, n):
                a[i, j] = a[i, j] - l * a[col, j]
    return complex(det)
