"""Projective-plane primitives: canonical points, chordal metric, map evaluation.

Points live in canonical form: the largest-modulus coordinate is exactly 1
(ties broken by lowest index).  All operations are pure; points are frozen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IndeterminateImage, ZeroVector

#: chordal-distance tolerance for projective equality
EQUALITY_TOL = 1e-9

#: coordinates below this absolute size count as the zero vector
ZERO_THRESHOLD = 1e-300


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of the complex projective plane in canonical form."""

    coords: tuple

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, idx):
        return self.coords[idx]

    def is_close(self, other: "ProjectivePoint", tol: float = EQUALITY_TOL) -> bool:
        return fs_distance(self, other) <= tol

    def affine(self):
        """Chart coordinates (x/z, y/z); raises if the point is on z = 0."""
        x, y, z = self.coords
        if abs(z) < 1e-14:
            raise ZeroDivisionError("point lies on the line z = 0")
        return (x / z, y / z)

    @classmethod
    def from_affine(cls, x, y) -> "ProjectivePoint":
        return normalize((x, y, 1.0))

    def __repr__(self):
        x, y, z = self.coords
        return f"({x:.6g} : {y:.6g} : {z:.6g})"


def normalize(raw) -> ProjectivePoint:
    """Canonical representative: divide by the largest-modulus coordinate.

    Ties go to the lowest index, so the pivot coordinate is exactly 1 and the
    map is idempotent and scale-invariant.
    """
    v = [complex(c) for c in raw]
    if len(v) != 3:
        raise ValueError("expected a complex triple")
    mods = [abs(c) for c in v]
    m = max(mods)
    if not math.isfinite(m) or m < ZERO_THRESHOLD:
        raise ZeroVector(f"cannot normalize {raw!r}")
    pivot = mods.index(m)  # lowest index among ties
    d = v[pivot]
    out = tuple(c / d for c in v)
    out = out[:pivot] + (1.0 + 0.0j,) + out[pivot + 1:]
    return ProjectivePoint(out)


def fs_distance(p: ProjectivePoint, q: ProjectivePoint) -> float:
    """Chordal Fubini-Study distance sqrt(1 - |<p,q>|^2 / (|p|^2 |q|^2)).

    Computed through the Lagrange identity |p|^2|q|^2 - |<p,q>|^2 =
    sum_{i<j} |p_i q_j - p_j q_i|^2, which stays accurate for nearly equal
    points where the textbook formula loses all significant digits.
    """
    pc = p.coords if isinstance(p, ProjectivePoint) else tuple(complex(c) for c in p)
    qc = q.coords if isinstance(q, ProjectivePoint) else tuple(complex(c) for c in q)
    cross = 0.0
    for i in range(3):
        for j in range(i + 1, 3):
            cross += abs(pc[i] * qc[j] - pc[j] * qc[i]) ** 2
    np2 = sum(abs(a) ** 2 for a in pc)
    nq2 = sum(abs(b) ** 2 for b in qc)
    val = cross / (np2 * nq2)
    if val > 1.0:
        val = 1.0
    return math.sqrt(val)


class PointSet:
    """Finite multiset of projective points, deduplicated under canonical equality."""

    def __init__(self, points=(), multiplicities=None, tol: float = EQUALITY_TOL):
        self.points: list[ProjectivePoint] = []
        self.multiplicities: list[int] = []
        self.tol = tol
        mults = multiplicities if multiplicities is not None else [1] * len(list(points))
        for p, m in zip(points, mults):
            self.add(p, m)

    def add(self, p: ProjectivePoint, multiplicity: int = 1):
        if multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        for idx, q in enumerate(self.points):
            if p.is_close(q, self.tol):
                self.multiplicities[idx] += multiplicity
                return
        self.points.append(p)
        self.multiplicities.append(multiplicity)

    def distance_to(self, p: ProjectivePoint) -> float:
        """Minimum chordal distance from p to the set; inf when empty."""
        if not self.points:
            return math.inf
        return min(fs_distance(p, q) for q in self.points)

    def contains(self, p: ProjectivePoint, tol=None) -> bool:
        return self.distance_to(p) <= (self.tol if tol is None else tol)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __repr__(self):
        return f"PointSet({self.points!r})"


# ---------------------------------------------------------------------------
# Numeric evaluation of exact homogeneous maps.
# ---------------------------------------------------------------------------

class CompiledMap:
    """Double-precision view of an exact homogeneous map, cached per map."""

    def __init__(self, mapping):
        self.degree = mapping.degree
        self.components = []
        self.scales = []
        for comp in mapping.components:
            expos = []
            coeffs = []
            for (i, j, k), q in comp.coeff_items():
                expos.append((i, j, k))
                coeffs.append(q.to_complex())
            self.components.append((expos, coeffs))
            self.scales.append(sum(abs(c) for c in coeffs) or 1.0)
        # vectorized form: exponent arrays and coefficient arrays per component
        self._vec = []
        for expos, coeffs in self.components:
            e = np.array(expos, dtype=np.int64).reshape(-1, 3)
            c = np.array(coeffs, dtype=np.complex128)
            self._vec.append((e, c))

    def eval_point(self, v):
        """Evaluate the three components at one complex triple (Kahan summed)."""
        out = []
        for expos, coeffs in self.components:
            acc = 0.0 + 0.0j
            comp_err = 0.0 + 0.0j
            for (i, j, k), c in zip(expos, coeffs):
                term = c * (v[0] ** i) * (v[1] ** j) * (v[2] ** k)
                yk = term - comp_err
                t = acc + yk
                comp_err = (t - acc) - yk
                acc = t
            out.append(acc)
        return out

    def eval_batch(self, pts: np.ndarray) -> np.ndarray:
        """Evaluate at an (n, 3) complex array; returns (n, 3)."""
        n = pts.shape[0]
        deg = self.degree
        powers = []
        for col in range(3):
            p = np.empty((deg + 1, n), dtype=np.complex128)
            p[0] = 1.0
            for e in range(1, deg + 1):
                p[e] = p[e - 1] * pts[:, col]
            powers.append(p)
        out = np.empty((n, 3), dtype=np.complex128)
        for comp_idx, (e, c) in enumerate(self._vec):
            acc = np.zeros(n, dtype=np.complex128)
            for row in range(e.shape[0]):
                i, j, k = e[row]
                acc += c[row] * powers[0][i] * powers[1][j] * powers[2][k]
            out[:, comp_idx] = acc
        return out


def compiled(mapping) -> CompiledMap:
    cm = getattr(mapping, "_compiled_cache", None)
    if cm is None:
        cm = CompiledMap(mapping)
        try:
            mapping._compiled_cache = cm
        except AttributeError:
            pass
    return cm


def evaluate(mapping, p: ProjectivePoint, rel_tol: float = 1e-12) -> ProjectivePoint:
    """Image of p under the map, renormalized to canonical form.

    Raises IndeterminateImage when all three component values fall below the
    relative threshold, i.e. p sits numerically on the indeterminacy set.
    """
    cm = compiled(mapping)
    vals = cm.eval_point(p.coords if isinstance(p, ProjectivePoint) else tuple(p))
    scale = max(s for s in cm.scales)
    if max(abs(v) for v in vals) < rel_tol * scale:
        raise IndeterminateImage(f"map is indeterminate at {p!r}")
    return normalize(vals)


def orbit(mapping, p: ProjectivePoint, steps: int, rel_tol: float = 1e-12):
    """Forward orbit [p, f(p), ..., f^steps(p)] with renormalization each step."""
    pts = [p if isinstance(p, ProjectivePoint) else normalize(p)]
    for _ in range(steps):
        pts.append(evaluate(mapping, pts[-1], rel_tol=rel_tol))
    return pts
