"""Dense complex matrix helpers shared by the chart and frame modules.

All arithmetic is double precision.  Inverses and determinants go through a
pivoted LU factorization so that near-singular input is detected and
reported instead of silently amplified.  Matrix exponentials of
anti-Hermitian input go through a Hermitian eigendecomposition, which keeps
the result unitary to round-off.
"""

import warnings

import numpy as np
import scipy.linalg

# Pivots below PIVOT_RTOL times the largest row norm count as singular.
PIVOT_RTOL = 1e-12


class SingularMatrixError(ArithmeticError):
    """Matrix is singular to working tolerance.

    ``pivot`` holds the magnitude of the offending pivot from the LU
    factorization.
    """

    def __init__(self, message, pivot):
        super().__init__(message)
        self.pivot = pivot


def as_matrix(a):
    """Coerce to a 2-d complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got ndim={m.ndim}")
    return m


def _require_square(m, what):
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"{what} requires a square matrix, got shape {m.shape}")


def multiply(a, b):
    """Matrix product with an explicit inner-dimension check."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(
            f"dimension mismatch in product: {a.shape} x {b.shape}"
        )
    return a @ b


def adjoint(a):
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def frobenius(a):
    return float(np.linalg.norm(np.asarray(a)))


def _lu_factor(a):
    # scipy warns when a pivot is exactly zero; a zero determinant is a
    # legitimate result here, so the warning is suppressed.
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        return scipy.linalg.lu_factor(a, check_finite=True)


def determinant(a):
    """Determinant via pivoted LU; exact for diagonal/upper-triangular input."""
    a = as_matrix(a)
    _require_square(a, "determinant")
    if a.shape[0] == 0:
        return complex(1.0)
    lu, piv = _lu_factor(a)
    sign = 1 if np.count_nonzero(piv != np.arange(a.shape[0])) % 2 == 0 else -1
    return complex(sign * np.prod(np.diag(lu)))


def inverse(a, pivot_rtol=PIVOT_RTOL):
    """Inverse via pivoted LU.

    Raises :class:`SingularMatrixError` when the smallest pivot magnitude
    falls at or below ``pivot_rtol`` times the largest row norm.
    """
    a = as_matrix(a)
    _require_square(a, "inverse")
    n = a.shape[0]
    lu, piv = _lu_factor(a)
    pivots = np.abs(np.diag(lu))
    threshold = pivot_rtol * float(np.max(np.linalg.norm(a, axis=1), initial=0.0))
    smallest = float(pivots.min(initial=np.inf))
    if n > 0 and (not np.isfinite(smallest) or smallest <= threshold):
        raise SingularMatrixError(
            f"matrix singular to tolerance: pivot {smallest:.3e} "
            f"<= threshold {threshold:.3e}",
            pivot=smallest,
        )
    return scipy.linalg.lu_solve((lu, piv), np.eye(n, dtype=np.complex128))


def expm_antihermitian(h, herm_rtol=1e-10):
    """Exponential of an anti-Hermitian matrix, unitary by construction.

    Writes h = i H with H Hermitian, diagonalizes H, and exponentiates the
    (real) eigenvalues on the unit circle.
    """
    h = as_matrix(h)
    _require_square(h, "expm_antihermitian")
    defect = frobenius(h + h.conj().T)
    if defect > herm_rtol * max(frobenius(h), 1.0):
        raise ValueError(
            f"matrix is not anti-Hermitian: ||h + h^dag|| = {defect:.3e}"
        )
    w, v = np.linalg.eigh(-1j * h)
    return (v * np.exp(1j * w)) @ v.conj().T
