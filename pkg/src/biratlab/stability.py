"""Algebraic-stability and indeterminacy-orbit summability diagnostics.

Two complementary tests: the exact degree test (iterate degrees multiply for
maps with no indeterminacy collisions on the plane) and the orbit test
(forward images of the inverse map's indeterminacy points must stay away from
the map's own indeterminacy points).  The summability report accumulates the
weighted series sum_n lambda^-n |log dist(f^n(I(f^-1)), I(f))| whose
convergence makes the invariant-current intersection measure well defined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import IndeterminateImage, OrbitThroughIndeterminacy, TermBlowup
from .gaussian import GQ
from .projective import PointSet, ProjectivePoint, evaluate, fs_distance, normalize
from .ratmap import (DegreeReport, HomogeneousMap, degree_sequence,
                     indeterminacy_points, inverse_check)

#: chordal distance below which an orbit point counts as hitting a locus
HIT_TOL = 1e-10


@dataclass
class OrbitRecord:
    """Forward orbit of one seed with its distance to a target point set."""

    seed: ProjectivePoint
    points: list
    distances: list
    hit_index: int | None = None

    def __post_init__(self):
        if len(self.points) != len(self.distances):
            raise ValueError("points and distances must align")


def track_orbit(f: HomogeneousMap, seed: ProjectivePoint, target: PointSet,
                steps: int, hit_tol: float = HIT_TOL) -> OrbitRecord:
    """Iterate seed under f, recording chordal distances to the target set.

    Evaluation failures (numerically indeterminate images) terminate the
    orbit and count as a hit at that step.
    """
    pts = [seed]
    dists = [target.distance_to(seed)]
    hit = 0 if dists[0] < hit_tol else None
    for k in range(1, steps + 1):
        if hit is not None:
            break
        try:
            nxt = evaluate(f, pts[-1])
        except IndeterminateImage:
            hit = k
            break
        pts.append(nxt)
        d = target.distance_to(nxt)
        dists.append(d)
        if d < hit_tol:
            hit = k
            break
    return OrbitRecord(seed, pts, dists, hit)


@dataclass
class StabilityReport:
    stable: bool
    multiplicative: bool | None
    degrees: list | None
    degree_test_partial: bool
    orbit_records: list
    hits: list              # (seed index, step) pairs
    hit_tol: float
    indeterminacy_forward: PointSet
    indeterminacy_backward: PointSet

    def summary(self) -> str:
        verdict = "stable" if self.stable else "NOT stable"
        deg = ("degrees " + "x".join(str(d) for d in (self.degrees or []))
               if self.degrees else "degree test unavailable")
        return f"{verdict}; {deg}; hits={self.hits}"


def algebraic_stability(f: HomogeneousMap, g: HomogeneousMap, N: int = 20,
                        degree_horizon: int = 6, hit_tol: float = HIT_TOL,
                        certify_inverse: bool = True,
                        seed: int = 0) -> StabilityReport:
    """Combined degree and indeterminacy-orbit stability test on the plane."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if certify_inverse:
        inverse_check(f, g)
    i_f = indeterminacy_points(f, seed=seed)
    i_g = indeterminacy_points(g, seed=seed)

    degrees = None
    multiplicative = None
    partial = False
    try:
        rep = degree_sequence(f, degree_horizon)
        degrees = rep.degrees
        multiplicative = rep.multiplicative
    except TermBlowup as exc:
        degrees = exc.degrees or None
        partial = True
        if degrees:
            multiplicative = all(d == f.degree ** (i + 1)
                                 for i, d in enumerate(degrees))

    records = []
    hits = []
    for idx, seed_pt in enumerate(i_g):
        rec = track_orbit(f, seed_pt, i_f, N, hit_tol)
        records.append(rec)
        if rec.hit_index is not None:
            hits.append((idx, rec.hit_index))

    stable = (not hits) and (multiplicative is not False)
    return StabilityReport(stable=stable, multiplicative=multiplicative,
                           degrees=degrees, degree_test_partial=partial,
                           orbit_records=records, hits=hits, hit_tol=hit_tol,
                           indeterminacy_forward=i_f, indeterminacy_backward=i_g)


@dataclass
class BDSeriesReport:
    """Partial sums of the indeterminacy-orbit summability series."""

    terms: list
    partial_sums: list
    diverged: bool
    stabilized_at: int | None
    lam: float
    hit_tol: float
    tail_bound: float | None
    distances: list = field(default_factory=list)
    vacuous: bool = False
    note: str = ""

    def table_rows(self):
        """(n, distance, term, partial sum) rows for the numeric table."""
        return [(n, self.distances[n], t, self.partial_sums[n])
                for n, t in enumerate(self.terms)]


def bd_partial_sums(f: HomogeneousMap, g: HomogeneousMap, lam: float, N: int = 50,
                    hit_tol: float = HIT_TOL, seed: int = 0) -> BDSeriesReport:
    """Accumulate lambda^-n |log dist(f^n(I(g)), I(f))| for n = 0..N.

    An orbit point landing on I(f) (within hit tolerance, or exactly) makes
    the series diverge; this is recorded, not raised.
    """
    if lam <= 1:
        raise ValueError("the weight lambda must exceed 1")
    i_f = indeterminacy_points(f, seed=seed)
    i_g = indeterminacy_points(g, seed=seed)
    if len(i_f) == 0 or len(i_g) == 0:
        return BDSeriesReport(terms=[], partial_sums=[], diverged=False,
                              stabilized_at=0, lam=lam, hit_tol=hit_tol,
                              tail_bound=0.0, vacuous=True,
                              note="empty indeterminacy locus; series is vacuous")

    records = [track_orbit(f, p, i_f, N, hit_tol) for p in i_g]
    terms = []
    distances = []
    diverged = False
    for n in range(N + 1):
        dist_n = math.inf
        for rec in records:
            if n < len(rec.distances):
                dist_n = min(dist_n, rec.distances[n])
            elif rec.hit_index is not None and n >= rec.hit_index:
                dist_n = 0.0
        distances.append(dist_n)
        if dist_n <= hit_tol:
            diverged = True
            terms.append(math.inf)
            break
        terms.append(abs(math.log(dist_n)) / lam ** n)

    sums = []
    acc = 0.0
    for t in terms:
        acc += t
        sums.append(acc)

    stabilized_at = None
    for n in range(1, len(sums)):
        if abs(sums[n] - sums[n - 1]) < 1e-12:
            stabilized_at = n
            break

    tail_bound = None
    if not diverged and terms:
        worst = max(abs(math.log(d)) for d in distances if d > 0)
        tail_bound = ((worst + abs(math.log(hit_tol)))
                      * lam ** (-N) / (1.0 - 1.0 / lam))

    return BDSeriesReport(terms=terms, partial_sums=sums, diverged=diverged,
                          stabilized_at=stabilized_at, lam=lam, hit_tol=hit_tol,
                          tail_bound=tail_bound, distances=distances)


# ---------------------------------------------------------------------------
# Exact-rational orbit mode.
# ---------------------------------------------------------------------------

EXACT_HORIZON = 30


def exact_orbit(f: HomogeneousMap, seed, steps: int):
    """Orbit of an exact Gaussian-rational seed, renormalized exactly each step.

    The horizon is capped to keep coefficient growth bounded; seeds are
    triples of GQ values (or anything GQ.coerce accepts).
    """
    if steps > EXACT_HORIZON:
        raise ValueError(f"exact orbits are capped at {EXACT_HORIZON} steps")
    point = tuple(GQ.coerce(c) for c in seed)
    if all(c.is_zero() for c in point):
        raise ValueError("seed is the zero vector")
    out = [_exact_normalize(point)]
    for k in range(steps):
        vals = tuple(comp.evaluate_exact(out[-1]) for comp in f.components)
        if all(v.is_zero() for v in vals):
            raise OrbitThroughIndeterminacy(
                f"orbit landed exactly on the indeterminacy set at step {k + 1}",
                step=k + 1)
        out.append(_exact_normalize(vals))
    return out


def _exact_normalize(triple):
    norms = [c.norm2() for c in triple]
    best = max(range(3), key=lambda i: (norms[i], -i))
    # ties by lowest index: max of (norm, -index) picks the lowest index
    pivot = triple[best]
    return tuple(c / pivot for c in triple)
