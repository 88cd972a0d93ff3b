"""Verification suite: closed-form SU(2) checks plus generic oracles.

Three check families:

* ``check_su2_golden``   -- every n = 2 pipeline object against its closed
  form (factors, element, tangents, frames, inverses, field and one-form
  rows, density).
* ``check_derivatives``  -- central finite differences of the group element
  against both tangent factorizations, any n.
* ``check_duality_and_bridge`` -- frame-inverse duality, the conjugation
  bridge between left and right tangents, and pure imaginarity of frame
  entries, any n.

Each check returns a :class:`VerificationReport`; singular chart points are
reported as skipped, never as silent passes.
"""

from dataclasses import dataclass, field

import numpy as np

from . import chart, frames, haar, linalg, su2_reference
from .algebra import dimension
from .chart import CosetCoordinates

DEFAULT_FD_STEP = 1e-6
DEFAULT_GOLDEN_TOL = 1e-10
DEFAULT_DERIVATIVE_TOL = 1e-5
DEFAULT_DUALITY_TOL = 1e-9


@dataclass(frozen=True)
class CheckRow:
    name: str
    n: int
    point: tuple
    metric: float
    tolerance: float
    status: str  # PASS | FAIL | SKIP
    note: str = ""


@dataclass
class VerificationReport:
    seed: int = 0
    rows: list = field(default_factory=list)

    @property
    def passed(self):
        return all(row.status != "FAIL" for row in self.rows)

    def add(self, name, n, point, metric, tolerance, note=""):
        status = "PASS" if metric <= tolerance else "FAIL"
        self.rows.append(
            CheckRow(name, n, tuple(point), float(metric), float(tolerance), status, note)
        )

    def skip(self, name, n, point, note):
        self.rows.append(CheckRow(name, n, tuple(point), 0.0, 0.0, "SKIP", note))

    def extend(self, other):
        self.rows.extend(other.rows)

    def to_lines(self):
        lines = []
        for r in self.rows:
            point = ",".join(f"{v:.6g}" for v in r.point)
            lines.append(
                f"{r.name} n={r.n} point=({point}) metric={r.metric:.3e} "
                f"tol={r.tolerance:.1e} {r.status}"
                + (f" [{r.note}]" if r.note else "")
            )
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'} "
                     f"({len(self.rows)} checks, seed={self.seed})")
        return lines

    def to_dict(self):
        return {
            "seed": self.seed,
            "passed": self.passed,
            "checks": [
                {
                    "name": r.name,
                    "n": r.n,
                    "point": list(r.point),
                    "metric": r.metric,
                    "tolerance": r.tolerance,
                    "status": r.status,
                    "note": r.note,
                }
                for r in self.rows
            ],
        }


def _maxabs(a):
    return float(np.abs(np.asarray(a)).max(initial=0.0))


def sample_su2_points(count, seed, gamma_margin=0.05):
    """Random (eta, gamma, xi) triples with gamma clear of the chart ends."""
    rng = np.random.default_rng(seed)
    points = []
    for _ in range(count):
        eta = rng.uniform(0.0, 2.0 * np.pi)
        gamma = rng.uniform(gamma_margin, 0.5 * np.pi - gamma_margin)
        xi = rng.uniform(0.0, 2.0 * np.pi)
        points.append((eta, gamma, xi))
    return points


def sample_coords(n, count, seed, gamma_low=0.1, gamma_high=1.2):
    """Random chart points for general n, away from gamma = 0."""
    rng = np.random.default_rng(seed)
    return [
        chart.random_coordinates(n, rng, gamma_low, gamma_high)
        for _ in range(count)
    ]


def sample_nonsingular_coords(n, count, seed, max_condition=1e8):
    """Random chart points at which both frames invert comfortably."""
    rng = np.random.default_rng(seed)
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 100 * count:
            raise RuntimeError(f"could not sample nonsingular points for n={n}")
        point = chart.random_coordinates(n, rng)
        try:
            left = frames.frame_result("left", point, max_condition=max_condition)
            right = frames.frame_result("right", point, max_condition=max_condition)
        except frames.SingularFrameError:
            continue
        if max(left.condition, right.condition) <= max_condition:
            out.append(point)
    return out


def check_su2_golden(points, tol=DEFAULT_GOLDEN_TOL):
    """Compare every n = 2 pipeline object with its closed form."""
    report = VerificationReport()
    for eta, gamma, xi in points:
        if min(abs(gamma), abs(gamma - 0.5 * np.pi)) < 1e-3:
            raise ValueError(
                f"gamma={gamma!r} is within 1e-3 of a chart boundary; "
                "golden forms are not comparable there"
            )
        point = (eta, gamma, xi)
        coords = CosetCoordinates.from_flat(2, point)
        u = chart.group_element(coords)
        lt = frames.left_tangents(coords)
        rt = frames.right_tangents(coords)
        left = frames.frame_result("left", coords)
        right = frames.frame_result("right", coords)
        pairs = [
            ("torus_factor", chart.torus_element(coords),
             su2_reference.torus_factor(*point)),
            ("coset_factor", chart.coset_factor(2, coords),
             su2_reference.coset_factor(*point)),
            ("element", u, su2_reference.element(*point)),
            ("tangent_left_eta", lt[0], su2_reference.left_tangent_eta(*point)),
            ("tangent_left_gamma", lt[1], su2_reference.left_tangent_gamma(*point)),
            ("tangent_left_xi", lt[2], su2_reference.left_tangent_xi(*point)),
            ("tangent_right_eta", rt[0], su2_reference.right_tangent_eta(*point)),
            ("tangent_right_gamma", rt[1], su2_reference.right_tangent_gamma(*point)),
            ("tangent_right_xi", rt[2], su2_reference.right_tangent_xi(*point)),
            ("frame_left", left.frame.entries, su2_reference.left_frame(*point)),
            ("frame_right", right.frame.entries, su2_reference.right_frame(*point)),
            ("inverse_left", left.inverse, su2_reference.left_frame_inverse(*point)),
            ("inverse_right", right.inverse, su2_reference.right_frame_inverse(*point)),
        ]
        golden_left_fields = su2_reference.left_field_rows(*point)
        golden_right_fields = su2_reference.right_field_rows(*point)
        golden_left_forms = su2_reference.left_oneform_rows(*point)
        golden_right_forms = su2_reference.right_oneform_rows(*point)
        for k in range(3):
            pairs.append((f"field_left[{k}]", left.field_rows[k], golden_left_fields[k]))
            pairs.append((f"field_right[{k}]", right.field_rows[k], golden_right_fields[k]))
            pairs.append((f"oneform_left[{k}]", left.oneform_rows[k], golden_left_forms[k]))
            pairs.append((f"oneform_right[{k}]", right.oneform_rows[k], golden_right_forms[k]))
        for name, got, want in pairs:
            report.add(name, 2, point, _maxabs(got - want), tol)
        report.add(
            "density", 2, point,
            abs(haar.density(coords).value - su2_reference.haar_density(*point)),
            tol,
        )
    return report


def check_derivatives(n, points, step=DEFAULT_FD_STEP, tol=DEFAULT_DERIVATIVE_TOL):
    """Central-difference check of both tangent factorizations.

    Metric per coordinate direction: the Frobenius residual of
    dU - U T (left) and dU - T~ U (right), scaled by max(1, ||T||).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if step <= 0:
        raise ValueError(f"step must be positive, got {step}")
    report = VerificationReport()
    for coords in points:
        point = tuple(coords.flat())
        u = chart.group_element(coords)
        lt = frames.left_tangents(coords)
        rt = frames.right_tangents(coords)
        worst_left = 0.0
        worst_right = 0.0
        for alpha in range(dimension(n)):
            du = (
                chart.group_element(coords.shifted(alpha, step))
                - chart.group_element(coords.shifted(alpha, -step))
            ) / (2.0 * step)
            res_left = linalg.frobenius(du - u @ lt[alpha]) / max(
                1.0, linalg.frobenius(lt[alpha])
            )
            res_right = linalg.frobenius(du - rt[alpha] @ u) / max(
                1.0, linalg.frobenius(rt[alpha])
            )
            worst_left = max(worst_left, res_left)
            worst_right = max(worst_right, res_right)
        report.add("derivative_left", n, point, worst_left, tol)
        report.add("derivative_right", n, point, worst_right, tol)
    return report


def check_duality_and_bridge(n, points, tol=DEFAULT_DUALITY_TOL):
    """Frame duality, tangent conjugation bridge, and imaginarity checks."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    report = VerificationReport()
    eye = np.eye(dimension(n))
    for coords in points:
        point = tuple(coords.flat())
        try:
            left = frames.frame_result("left", coords)
            right = frames.frame_result("right", coords)
        except frames.SingularFrameError as err:
            report.skip("duality", n, point, f"singular frame: pivot {err.pivot:.3e}")
            continue
        report.add(
            "duality_left", n, point,
            linalg.frobenius(left.inverse @ left.frame.entries - eye), tol,
        )
        report.add(
            "duality_right", n, point,
            linalg.frobenius(right.inverse @ right.frame.entries - eye), tol,
        )
        u = chart.group_element(coords)
        lt = frames.left_tangents(coords)
        rt = frames.right_tangents(coords)
        bridge = max(
            linalg.frobenius(rt[a] - u @ lt[a] @ u.conj().T)
            for a in range(dimension(n))
        )
        report.add("bridge", n, point, bridge, tol)
        imag = max(
            _maxabs(left.frame.entries.real), _maxabs(right.frame.entries.real)
        )
        report.add("imaginarity", n, point, imag, tol)
    return report


def run_suite(n_values=(2, 3, 4), seed=0, golden_points=20, derivative_points=8,
              duality_points=6, golden_tol=DEFAULT_GOLDEN_TOL,
              derivative_tol=DEFAULT_DERIVATIVE_TOL, duality_tol=DEFAULT_DUALITY_TOL):
    """Run the full suite; deterministic for a fixed seed."""
    report = VerificationReport(seed=seed)
    if 2 in n_values:
        report.extend(
            check_su2_golden(sample_su2_points(golden_points, seed), tol=golden_tol)
        )
    for n in n_values:
        report.extend(
            check_derivatives(
                n, sample_coords(n, derivative_points, seed + n), tol=derivative_tol
            )
        )
    for n in n_values:
        if n > 3:
            continue  # duality at every n costs little but the suite stays quick
        report.extend(
            check_duality_and_bridge(
                n, sample_coords(n, duality_points, seed + 10 * n), tol=duality_tol
            )
        )
    return report
