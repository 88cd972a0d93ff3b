"""Canonical coset chart on SU(N).

A group element is synthesized as the ordered product of one factor per
block, applied torus-first:

    U = F_N F_{N-1} ... F_2 F_1

where F_1 is a diagonal torus element built from the Cartan angles eta and
each F_m (m >= 2) is a coset representative of SU(m)/U(m-1) embedded in the
upper-left m x m corner.  Each coset factor splits as X R X^dag with X a
diagonal phase matrix (angles xi) and R a real rotation (angles gamma).

Coordinates are packed flat in the block order: eta_1..eta_{N-1}, then for
m = 2..N the gammas of block m followed by the xis of block m.  This is the
same flat order used for the algebra basis, so frame rows and columns line
up by construction.

All maps are entire in the coordinates; gamma is treated as a polar radius
and the gamma -> 0 limits are built into the formulas (no removable
singularities are exposed to callers).
"""

import numpy as np

from . import algebra
from .algebra import block_of, dimension, flat_index


def _sinc(x):
    # sin(x)/x with the limit value 1 at x = 0.
    return float(np.sinc(x / np.pi))


def _cos_minus_one_over_sq(x):
    # (cos x - 1)/x^2, computed as -sin^2(x/2)/(2 (x/2)^2); stable for all x.
    half = _sinc(0.5 * x)
    return -0.5 * half * half


def _one_minus_sinc_over_sq(x):
    # (1 - sin(x)/x)/x^2 with a series branch where cancellation bites.
    if abs(x) < 1e-3:
        x2 = x * x
        return 1.0 / 6.0 - x2 / 120.0 + x2 * x2 / 5040.0
    return (1.0 - _sinc(x)) / (x * x)


class CosetCoordinates:
    """The n^2 - 1 real chart parameters in canonical flat order."""

    __slots__ = ("n", "_values")

    def __init__(self, n, values):
        if n < 2:
            raise ValueError(f"n must be >= 2, got {n}")
        vals = np.array(values, dtype=np.float64).reshape(-1)
        if vals.size != dimension(n):
            raise ValueError(
                f"expected {dimension(n)} coordinates for n={n}, got {vals.size}"
            )
        vals.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("CosetCoordinates is immutable")

    def __repr__(self):
        body = ", ".join(f"{v:.6g}" for v in self._values)
        return f"CosetCoordinates(n={self.n}, [{body}])"

    @classmethod
    def from_flat(cls, n, values):
        return cls(n, values)

    @classmethod
    def from_parts(cls, n, eta, gammas, xis):
        """Build from named parts; gammas/xis are sequences for m = 2..n."""
        parts = [np.asarray(eta, dtype=np.float64).reshape(-1)]
        if parts[0].size != n - 1:
            raise ValueError(f"expected {n - 1} eta angles, got {parts[0].size}")
        if len(gammas) != n - 1 or len(xis) != n - 1:
            raise ValueError(f"expected {n - 1} gamma/xi blocks for n={n}")
        for m in range(2, n + 1):
            g = np.asarray(gammas[m - 2], dtype=np.float64).reshape(-1)
            x = np.asarray(xis[m - 2], dtype=np.float64).reshape(-1)
            if g.size != m - 1 or x.size != m - 1:
                raise ValueError(f"block m={m} needs {m - 1} gammas and xis")
            parts.extend([g, x])
        return cls(n, np.concatenate(parts))

    @classmethod
    def zero(cls, n):
        return cls(n, np.zeros(dimension(n)))

    def flat(self):
        return self._values.copy()

    @property
    def eta(self):
        return self._values[: self.n - 1]

    def _block_start(self, m):
        return (self.n - 1) + (m - 2) * (m - 1)

    def gamma(self, m):
        if not 2 <= m <= self.n:
            raise ValueError(f"block index out of range: m={m}")
        s = self._block_start(m)
        return self._values[s : s + m - 1]

    def xi(self, m):
        if not 2 <= m <= self.n:
            raise ValueError(f"block index out of range: m={m}")
        s = self._block_start(m) + (m - 1)
        return self._values[s : s + m - 1]

    def gamma_radius(self, m):
        return float(np.linalg.norm(self.gamma(m)))

    def shifted(self, flat, delta):
        """Copy with one coordinate displaced; used by finite differencing."""
        vals = self._values.copy()
        vals[flat] += delta
        return CosetCoordinates(self.n, vals)


def torus_element(coords):
    """Diagonal torus factor from the Cartan angles.

    Entry k carries the phase accumulated from the Cartan generators:
    exp(-i sqrt((k-1)/(2k)) eta_{k-1} + i sum_{j>=k} eta_j / sqrt(2j(j+1))).
    """
    n = coords.n
    eta = coords.eta
    phases = np.zeros(n)
    for k in range(1, n + 1):
        p = 0.0
        if k >= 2:
            p -= np.sqrt((k - 1) / (2.0 * k)) * eta[k - 2]
        for j in range(k, n):
            p += eta[j - 1] / np.sqrt(2.0 * j * (j + 1))
        phases[k - 1] = p
    return np.diag(np.exp(1j * phases))


def rotation_factor(m, coords):
    """Real orthogonal factor of block m (determinant +1).

    Rotates the plane spanned by axis m and the unit vector along the
    block's gamma parameters by the polar radius gamma; the identity on
    axes above m.
    """
    n = coords.n
    if not 2 <= m <= n:
        raise ValueError(f"block index out of range: m={m}")
    g = coords.gamma(m)
    radius = float(np.linalg.norm(g))
    c2 = _cos_minus_one_over_sq(radius)
    s1 = _sinc(radius)
    r = np.eye(n, dtype=np.complex128)
    for i in range(m - 1):
        for j in range(m - 1):
            r[i, j] += g[i] * g[j] * c2
        r[i, m - 1] = g[i] * s1
        r[m - 1, i] = -g[i] * s1
    r[m - 1, m - 1] = np.cos(radius)
    return r


def phase_factor(m, coords):
    """Diagonal phase factor of block m; entries m..n are 1."""
    n = coords.n
    if not 2 <= m <= n:
        raise ValueError(f"block index out of range: m={m}")
    phases = np.zeros(n)
    phases[: m - 1] = coords.xi(m)
    return np.diag(np.exp(1j * phases))


def coset_factor(m, coords):
    """Coset representative of block m: X R X^dag."""
    x = phase_factor(m, coords)
    r = rotation_factor(m, coords)
    return x @ r @ x.conj().T


def factors(coords):
    """All factors, index i holding the block m = i + 1 factor."""
    out = [torus_element(coords)]
    for m in range(2, coords.n + 1):
        out.append(coset_factor(m, coords))
    return out


def group_element(coords):
    """Full element: block-N factor down to the torus factor."""
    fs = factors(coords)
    u = fs[0]
    for f in fs[1:]:
        u = f @ u
    return u


def partial_product_left(m, coords):
    """Product of factors for blocks m down to 1 (torus applied first)."""
    n = coords.n
    if not 1 <= m <= n:
        raise ValueError(f"block index out of range: m={m}")
    fs = factors(coords)
    w = fs[0]
    for i in range(1, m):
        w = fs[i] @ w
    return w


def partial_product_right(k, coords):
    """Product of factors for blocks N down to k+1; identity when k = n."""
    n = coords.n
    if not 1 <= k <= n:
        raise ValueError(f"block index out of range: k={k}")
    fs = factors(coords)
    w = np.eye(n, dtype=np.complex128)
    for i in range(n - 1, k - 1, -1):
        w = w @ fs[i]
    return w


def random_coordinates(n, rng, gamma_low=0.1, gamma_high=1.2):
    """Sample a chart point away from the gamma = 0 boundary.

    Angles (eta, xi) are uniform on [0, 2 pi); each gamma parameter is
    uniform on [gamma_low, gamma_high].
    """
    vals = np.zeros(dimension(n))
    for flat in range(vals.size):
        m, alpha = block_of(n, flat)
        if m >= 2 and alpha <= m - 1:
            vals[flat] = rng.uniform(gamma_low, gamma_high)
        else:
            vals[flat] = rng.uniform(0.0, 2.0 * np.pi)
    return CosetCoordinates(n, vals)
