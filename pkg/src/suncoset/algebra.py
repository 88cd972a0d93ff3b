"""Generalized Gell-Mann basis of su(N) and coefficient extraction.

The basis consists of the N-1 diagonal (Cartan) generators followed, for
each m = 2..N, by the 2(m-1) generators that mix row/column m with the
rows above it: first the m-1 real symmetric ones, then the m-1 imaginary
antisymmetric ones.  Everything downstream (coordinates, frame rows and
columns) shares this flat ordering, implemented by :func:`flat_index` /
:func:`block_of`.

All generators are Hermitian, traceless, and normalized so that
Tr(L_i L_j) = delta_ij / 2.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

TRACELESS_ATOL = 1e-10


def dimension(n):
    """Number of basis elements (and coordinates) for SU(n)."""
    return n * n - 1


def block_sizes(n):
    """Sizes of the index blocks: Cartan block, then one per m = 2..n."""
    return [n - 1] + [2 * (m - 1) for m in range(2, n + 1)]


def flat_index(n, m, alpha):
    """Map a block label (m, alpha) to the flat index, 0-based.

    m = 1 addresses the Cartan block with alpha in 1..n-1; m >= 2 addresses
    block m with alpha in 1..2(m-1).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if m == 1:
        if not 1 <= alpha <= n - 1:
            raise ValueError(f"Cartan index out of range: alpha={alpha}")
        return alpha - 1
    if not 2 <= m <= n:
        raise ValueError(f"block index out of range: m={m}")
    if not 1 <= alpha <= 2 * (m - 1):
        raise ValueError(f"index out of range in block {m}: alpha={alpha}")
    return (n - 1) + (m - 2) * (m - 1) + alpha - 1


def block_of(n, flat):
    """Inverse of :func:`flat_index`."""
    if not 0 <= flat < dimension(n):
        raise ValueError(f"flat index out of range: {flat}")
    if flat < n - 1:
        return 1, flat + 1
    rest = flat - (n - 1)
    for m in range(2, n + 1):
        size = 2 * (m - 1)
        if rest < size:
            return m, rest + 1
        rest -= size
    raise AssertionError("unreachable")


@dataclass(frozen=True, eq=False)
class AlgebraBasis:
    """Ordered generator basis of su(n) in the flat index order."""

    n: int
    generators: tuple

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, flat):
        return self.generators[flat]

    def __iter__(self):
        return iter(self.generators)

    def flat_index(self, m, alpha):
        return flat_index(self.n, m, alpha)

    def block_of(self, flat):
        return block_of(self.n, flat)


@dataclass(frozen=True, eq=False)
class StructureConstants:
    """Real antisymmetric table c with [L_i, L_j] = i sum_k c[i,j,k] L_k."""

    n: int
    c: np.ndarray


@lru_cache(maxsize=None)
def build_basis(n):
    """Construct the generator basis of su(n)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    gens = []
    # Cartan generators: weighted diagonal matrices.
    for a in range(1, n):
        w = 1.0 / np.sqrt(2.0 * a * (a + 1))
        g = np.zeros((n, n), dtype=np.complex128)
        for j in range(a):
            g[j, j] = w
        g[a, a] = -a * w
        gens.append(g)
    # Off-diagonal generators mixing row/column m with rows 1..m-1.
    for m in range(2, n + 1):
        for alpha in range(1, m):
            g = np.zeros((n, n), dtype=np.complex128)
            g[alpha - 1, m - 1] = 0.5
            g[m - 1, alpha - 1] = 0.5
            gens.append(g)
        for alpha in range(m, 2 * (m - 1) + 1):
            r = alpha - m + 1
            g = np.zeros((n, n), dtype=np.complex128)
            g[r - 1, m - 1] = -0.5j
            g[m - 1, r - 1] = 0.5j
            gens.append(g)
    for g in gens:
        g.setflags(write=False)
    return AlgebraBasis(n=n, generators=tuple(gens))


def project(x, basis):
    """Expand a traceless matrix over the basis, x = sum_k v[k] L_k.

    Uses the closed-form coefficient extraction: weighted partial diagonal
    sums for the Cartan block, symmetric/antisymmetric element pairs for
    the off-diagonal blocks.  Equivalent to v[k] = 2 Tr(x L_k).
    """
    n = basis.n
    x = np.asarray(x, dtype=np.complex128)
    if x.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix, got shape {x.shape}")
    trace = complex(np.trace(x))
    if abs(trace) > TRACELESS_ATOL:
        raise ValueError(f"matrix is not traceless: |Tr| = {abs(trace):.3e}")

    v = np.zeros(dimension(n), dtype=np.complex128)
    diag = np.diag(x)
    for b in range(1, n):
        w = 2.0 / np.sqrt(2.0 * b * (b + 1))
        v[flat_index(n, 1, b)] = w * (diag[:b].sum() - b * diag[b])
    for mp in range(2, n + 1):
        for b in range(1, mp):
            v[flat_index(n, mp, b)] = x[mp - 1, b - 1] + x[b - 1, mp - 1]
        for b in range(mp, 2 * (mp - 1) + 1):
            r = b - mp + 1
            v[flat_index(n, mp, b)] = -1j * (x[mp - 1, r - 1] - x[r - 1, mp - 1])
    return v


def structure_constants(basis):
    """Structure constants c[i,j,k] = -2i Tr([L_i, L_j] L_k).

    The table must come out real; a nonzero imaginary part means the basis
    is broken, so it is checked before being discarded.
    """
    d = len(basis)
    c = np.zeros((d, d, d), dtype=np.complex128)
    for i in range(d):
        li = basis[i]
        for j in range(i + 1, d):
            comm = li @ basis[j] - basis[j] @ li
            for k in range(d):
                val = -2j * np.trace(comm @ basis[k])
                c[i, j, k] = val
                c[j, i, k] = -val
    imag_max = float(np.abs(c.imag).max())
    if imag_max > 1e-12:
        raise ArithmeticError(
            f"structure constants are not real: max imag {imag_max:.3e}"
        )
    out = np.ascontiguousarray(c.real)
    out.setflags(write=False)
    return StructureConstants(n=basis.n, c=out)
