"""Invariant (Haar) measure density and desk-scale SU(2) integration.

The measure density with respect to the flat coordinate volume element is
|det A| for the frame matrix A.  Left and right frames give the same
density; both are computed and cross-checked on every call.

Integration is offered for SU(2) only, over the fundamental domain

    eta in [0, 4 pi),  gamma in [0, pi/2],  xi in [0, 2 pi),

on which the chart covers the group exactly once.  For larger N the chart's
fundamental domain is not pinned down, so only the pointwise density is
exposed.  Monte Carlo streams are sharded deterministically from the seed,
so results are reproducible bit for bit regardless of how shards are
scheduled.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import frames, linalg
from .chart import CosetCoordinates

# Samples per deterministic RNG shard.
SHARD_SIZE = 1 << 16

SU2_ETA_RANGE = (0.0, 4.0 * math.pi)
SU2_GAMMA_RANGE = (0.0, 0.5 * math.pi)
SU2_XI_RANGE = (0.0, 2.0 * math.pi)


@dataclass(frozen=True)
class IntegrationDomain:
    """Coordinate box, sample count, and RNG seed for one integral."""

    bounds: tuple
    samples: int
    seed: int

    def __post_init__(self):
        for lo, hi in self.bounds:
            if not lo < hi:
                raise ValueError(f"empty interval in domain: [{lo}, {hi}]")

    @property
    def volume(self):
        return float(np.prod([hi - lo for lo, hi in self.bounds]))


def su2_domain(samples=1_000_000, seed=0):
    """Default SU(2) fundamental domain."""
    return IntegrationDomain(
        bounds=(SU2_ETA_RANGE, SU2_GAMMA_RANGE, SU2_XI_RANGE),
        samples=samples,
        seed=seed,
    )


@dataclass(frozen=True, eq=False)
class HaarDensity:
    """Measure density |det A| at one chart point."""

    value: float
    abs_det_left: float
    abs_det_right: float
    coords: CosetCoordinates


def density(coords):
    """Haar density at a chart point (zero on chart boundaries is valid)."""
    left = abs(linalg.determinant(frames.assemble_frame("left", coords).entries))
    right = abs(linalg.determinant(frames.assemble_frame("right", coords).entries))
    if abs(left - right) > 1e-9 * max(left, right) + 1e-12:
        raise ArithmeticError(
            f"left/right densities disagree at {coords}: {left!r} vs {right!r}"
        )
    return HaarDensity(
        value=left, abs_det_left=left, abs_det_right=right, coords=coords
    )


def _su2_elements(theta):
    """Batched SU(2) elements for chart points theta = (eta, gamma, xi) rows.

    Closed form of the two-factor product for n = 2; agrees with
    chart.group_element entrywise (covered by tests).
    """
    eta, gam, xi = theta[:, 0], theta[:, 1], theta[:, 2]
    u = np.empty(theta.shape[:1] + (2, 2), dtype=np.complex128)
    cg, sg = np.cos(gam), np.sin(gam)
    u[:, 0, 0] = cg * np.exp(0.5j * eta)
    u[:, 0, 1] = sg * np.exp(1j * (xi - 0.5 * eta))
    u[:, 1, 0] = -sg * np.exp(-1j * (xi - 0.5 * eta))
    u[:, 1, 1] = cg * np.exp(-0.5j * eta)
    return u


def _su2_density(theta):
    # Closed form of |det A| for n = 2; cross-checked against density().
    return 2.0 * np.abs(np.sin(2.0 * theta[:, 1]))


def _evaluate(f, elements):
    values = None
    try:
        values = np.asarray(f(elements))
    except Exception:
        values = None
    if values is None or values.shape != elements.shape[:1]:
        values = np.asarray([f(u) for u in elements])
    return values.astype(np.float64)


@dataclass(frozen=True)
class IntegralEstimate:
    value: float
    stderr: float
    samples: int
    seed: int


def integrate_su2(f, domain, transform=None):
    """Monte Carlo integral of f(U) against the Haar density over a box.

    ``f`` may accept a stacked (S, 2, 2) array (fast path) or a single 2x2
    element.  ``transform``, when given, maps each sampled element before
    ``f`` is applied (used for translation-invariance checks with common
    random numbers).  Deterministic for a fixed (domain, seed).
    """
    if len(domain.bounds) != 3:
        raise ValueError("integrate_su2 needs a 3-coordinate domain (n=2)")
    if domain.samples <= 0:
        raise ValueError(f"sample count must be positive, got {domain.samples}")
    lo = np.array([b[0] for b in domain.bounds])
    hi = np.array([b[1] for b in domain.bounds])
    n_shards = (domain.samples + SHARD_SIZE - 1) // SHARD_SIZE
    children = np.random.SeedSequence(domain.seed).spawn(n_shards)
    total = 0.0
    total_sq = 0.0
    remaining = domain.samples
    for child in children:
        count = min(SHARD_SIZE, remaining)
        remaining -= count
        rng = np.random.default_rng(child)
        theta = rng.uniform(lo, hi, size=(count, 3))
        elements = _su2_elements(theta)
        if transform is not None:
            elements = transform(elements)
        w = _evaluate(f, elements) * _su2_density(theta)
        total += float(w.sum())
        total_sq += float((w * w).sum())
    s = domain.samples
    mean = total / s
    var = max(total_sq / s - mean * mean, 0.0)
    if s > 1:
        var *= s / (s - 1.0)
    return IntegralEstimate(
        value=domain.volume * mean,
        stderr=domain.volume * math.sqrt(var / s),
        samples=s,
        seed=domain.seed,
    )


def invariance_check(g, f, domain):
    """Relative deviation of the integral under left translation by g.

    Both integrals share the same sample stream (common random numbers), so
    g = identity gives exactly zero.
    """
    g = np.asarray(g, dtype=np.complex128)
    if g.shape != (2, 2) or linalg.frobenius(g.conj().T @ g - np.eye(2)) > 1e-10:
        raise ValueError("translation element must be a 2x2 unitary matrix")
    plain = integrate_su2(f, domain)
    translated = integrate_su2(f, domain, transform=lambda u: np.matmul(g, u))
    denom = max(abs(plain.value), np.finfo(float).tiny)
    return abs(translated.value - plain.value) / denom


def _f_const(u):
    return np.ones(u.shape[0]) if u.ndim == 3 else 1.0


def _f_retrace(u):
    tr = np.trace(u, axis1=-2, axis2=-1)
    return 0.5 * tr.real


def _f_abstrace2(u):
    tr = np.trace(u, axis1=-2, axis2=-1)
    return np.abs(tr) ** 2


INTEGRANDS = {
    "const": _f_const,
    "retrace": _f_retrace,
    "abstrace2": _f_abstrace2,
}
