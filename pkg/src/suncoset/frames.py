"""Frame matrices, invariant vector fields, and invariant one-forms.

For each coordinate theta_alpha the derivative of the group element factors
through an algebra-valued tangent matrix,

    dU/dtheta_alpha = U T_alpha   (left)      dU/dtheta_alpha = T~_alpha U   (right)

Expanding every tangent matrix over the generator basis gives the square
frame matrix (rows = coordinates, columns = generators; entries purely
imaginary).  Rows of the frame inverse are the coefficient rows of the
invariant vector fields; rows of the frame transpose are the coefficient
rows of the invariant one-forms.
"""

from dataclasses import dataclass

import numpy as np

from . import chart, linalg
from .algebra import block_of, build_basis, dimension, project
from .chart import _cos_minus_one_over_sq, _one_minus_sinc_over_sq, _sinc

SIDES = ("left", "right")

# Frames with a worse condition estimate than this are treated as sitting
# on a chart boundary and refused.
MAX_CONDITION = 1e12


class SingularFrameError(linalg.SingularMatrixError):
    """Frame matrix is singular at the given chart point."""

    def __init__(self, message, pivot, coords):
        super().__init__(message, pivot)
        self.coords = coords


@dataclass(frozen=True, eq=False)
class Frame:
    """Frame matrix at one chart point; row alpha expands tangent alpha."""

    side: str
    coords: chart.CosetCoordinates
    entries: np.ndarray


@dataclass(frozen=True, eq=False)
class FrameResult:
    """Frame together with its inverse (vector fields) and transpose (one-forms)."""

    frame: Frame
    inverse: np.ndarray
    transpose: np.ndarray
    condition: float

    @property
    def field_rows(self):
        return self.inverse

    @property
    def oneform_rows(self):
        return self.transpose


def _check_side(side):
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")


def d_coset_d_gamma(m, alpha, coords):
    """Derivative of the block-m coset factor along gamma_alpha, times its
    adjoint: an anti-Hermitian matrix supported on rows/columns 1..m.

    The gamma -> 0 limit is built in: the (alpha, m) entry tends to the unit
    phase e^{i xi_alpha} and everything else vanishes.
    """
    n = coords.n
    if not 2 <= m <= n:
        raise ValueError(f"block index out of range: m={m}")
    if not 1 <= alpha <= m - 1:
        raise ValueError(f"gamma index out of range in block {m}: {alpha}")
    g = coords.gamma(m)
    xi = coords.xi(m)
    radius = float(np.linalg.norm(g))
    c2 = _cos_minus_one_over_sq(radius)  # (cos g - 1)/g^2
    s1 = _sinc(radius)                   # sin(g)/g
    d2 = _one_minus_sinc_over_sq(radius)  # (1 - sin(g)/g)/g^2
    a = alpha - 1
    out = np.zeros((n, n), dtype=np.complex128)
    for r in range(m - 1):
        for s in range(m - 1):
            amp = (g[r] * (1.0 if s == a else 0.0) - g[s] * (1.0 if r == a else 0.0)) * c2
            if amp != 0.0:
                out[r, s] = amp * np.exp(1j * (xi[r] - xi[s]))
        col = g[r] * g[a] * d2 + (s1 if r == a else 0.0)
        out[r, m - 1] = col * np.exp(1j * xi[r])
        out[m - 1, r] = -np.conj(out[r, m - 1])
    return out


def d_coset_d_xi(m, alpha, coords):
    """Derivative of the block-m coset factor along xi_alpha, times its
    adjoint: i (e_alpha e_alpha^T - (R e_alpha)(R e_alpha)^T dressed with the
    block phases), with R the rotation factor of the block.
    """
    n = coords.n
    if not 2 <= m <= n:
        raise ValueError(f"block index out of range: m={m}")
    if not 1 <= alpha <= m - 1:
        raise ValueError(f"xi index out of range in block {m}: {alpha}")
    r = chart.rotation_factor(m, coords).real
    xi = np.zeros(n)
    xi[: m - 1] = coords.xi(m)
    a = alpha - 1
    col = r[:, a]
    out = -1j * np.outer(col * np.exp(1j * xi), col * np.exp(-1j * xi))
    out[a, a] += 1j
    return out


def _coset_derivative(m, alpha, coords):
    # Block coordinate alpha in 1..2(m-1): gammas first, then xis.
    if alpha <= m - 1:
        return d_coset_d_gamma(m, alpha, coords)
    return d_coset_d_xi(m, alpha - (m - 1), coords)


def left_tangents(coords):
    """All left tangent matrices in coordinate order (one pass)."""
    n = coords.n
    basis = build_basis(n)
    fs = chart.factors(coords)
    # Cumulative products of factors for blocks m..1.
    partial = [None] * (n + 1)
    acc = fs[0]
    partial[1] = acc
    for m in range(2, n + 1):
        acc = fs[m - 1] @ acc
        partial[m] = acc
    out = []
    for flat in range(dimension(n)):
        m, alpha = block_of(n, flat)
        if m == 1:
            out.append(1j * basis[flat])
        else:
            d = _coset_derivative(m, alpha, coords)
            w = partial[m]
            out.append(w.conj().T @ d @ w)
    return out


def right_tangents(coords):
    """All right tangent matrices in coordinate order (one pass)."""
    n = coords.n
    basis = build_basis(n)
    fs = chart.factors(coords)
    # partial[k] = product of factors for blocks n..k+1 (identity at k = n).
    partial = [None] * (n + 1)
    partial[n] = np.eye(n, dtype=np.complex128)
    for k in range(n - 1, 0, -1):
        partial[k] = partial[k + 1] @ fs[k]
    out = []
    for flat in range(dimension(n)):
        m, alpha = block_of(n, flat)
        if m == 1:
            w = partial[1]
            out.append(w @ (1j * basis[flat]) @ w.conj().T)
        else:
            d = _coset_derivative(m, alpha, coords)
            w = partial[m]
            out.append(w @ d @ w.conj().T)
    return out


def left_tangent(flat, coords):
    """Left tangent matrix for one flat coordinate index."""
    return left_tangents(coords)[flat]


def right_tangent(flat, coords):
    """Right tangent matrix for one flat coordinate index."""
    return right_tangents(coords)[flat]


def assemble_frame(side, coords):
    """Frame matrix: row alpha is the expansion of tangent matrix alpha."""
    _check_side(side)
    basis = build_basis(coords.n)
    tangents = left_tangents(coords) if side == "left" else right_tangents(coords)
    entries = np.vstack([project(t, basis) for t in tangents])
    entries.setflags(write=False)
    return Frame(side=side, coords=coords, entries=entries)


def frame_result(side, coords, max_condition=MAX_CONDITION):
    """Frame with inverse and transpose; refuses chart-boundary points.

    Raises :class:`SingularFrameError` when the frame cannot be inverted or
    its condition estimate exceeds ``max_condition`` (for example gamma = 0
    at n = 2, where the xi tangent vanishes).
    """
    frame = assemble_frame(side, coords)
    try:
        inv = linalg.inverse(frame.entries)
    except linalg.SingularMatrixError as err:
        raise SingularFrameError(
            f"{side} frame singular at {coords}: {err}", err.pivot, coords
        ) from err
    condition = linalg.frobenius(frame.entries) * linalg.frobenius(inv)
    if not np.isfinite(condition) or condition > max_condition:
        raise SingularFrameError(
            f"{side} frame ill-conditioned at {coords}: "
            f"condition estimate {condition:.3e}",
            float(np.abs(np.diag(frame.entries)).min(initial=0.0)),
            coords,
        )
    inv.setflags(write=False)
    transpose = frame.entries.T.copy()
    transpose.setflags(write=False)
    return FrameResult(
        frame=frame, inverse=inv, transpose=transpose, condition=float(condition)
    )


def apply_field(field_coefficients, gradient):
    """Apply a vector-field coefficient row to a coordinate gradient."""
    c = np.asarray(field_coefficients, dtype=np.complex128).reshape(-1)
    g = np.asarray(gradient, dtype=np.complex128).reshape(-1)
    if c.size != g.size:
        raise ValueError(
            f"length mismatch: {c.size} coefficients vs {g.size} gradient entries"
        )
    return complex(np.dot(c, g))
