"""Exact algebra of homogeneous polynomial self-maps of the projective plane.

Composition, primitive reduction by exact gcd, iterate degree sequences,
indeterminacy loci by resultant elimination, critical determinants, and
inverse certification.  Everything symbolic here is exact over the Gaussian
rationals; floating point only enters through univariate root extraction,
and every extracted point is re-verified (exactly when it snaps to rational
coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (DegenerateComposition, NotInverse,
                     PositiveDimensionalLocus, TermBlowup)
from .gaussian import GQ
from .hompoly import HomPoly, hom_gcd3
from .modp import certify_trivial_gcd
from .projective import PointSet, ProjectivePoint, normalize

#: default cap on monomials during exact composition
TERM_CAP = 200_000


class HomogeneousMap:
    """Primitive triple of equal-degree homogeneous polynomials."""

    def __init__(self, components, name: str = "", _assume_primitive: bool = False):
        comps = tuple(components)
        if len(comps) != 3:
            raise ValueError("a map needs exactly three components")
        if all(c.is_zero() for c in comps):
            raise ValueError("all components are zero")
        degs = {c.degree for c in comps if not c.is_zero()}
        if len(degs) != 1:
            raise ValueError("components must share one degree")
        self.components = comps
        self.degree = degs.pop()
        self.name = name
        if not _assume_primitive:
            g = hom_gcd3(*comps)
            if g.degree > 0:
                raise ValueError("components share a nonconstant factor; "
                                 "use reduce_primitive")

    @classmethod
    def from_polys(cls, p1: HomPoly, p2: HomPoly, p3: HomPoly, name: str = ""):
        return reduce_primitive((p1, p2, p3), name=name)

    def __repr__(self):
        label = self.name or "map"
        return f"HomogeneousMap<{label}, degree {self.degree}>"

    def is_identity_up_to_scalar(self) -> bool:
        if self.degree != 1:
            return False
        x = HomPoly.variable("x")
        y = HomPoly.variable("y")
        z = HomPoly.variable("z")
        c = None
        for comp, var in zip(self.components, (x, y, z)):
            if comp.term_count() != 1:
                return False
            expo = next(iter(comp.terms))
            if expo != next(iter(var.terms)):
                return False
            q = comp.coeff(*expo)
            if c is None:
                c = q
            elif q != c:
                return False
        return True


def reduce_primitive(components, name: str = "") -> HomogeneousMap:
    """Divide out the exact gcd of the three components."""
    comps = tuple(components)
    if all(c.is_zero() for c in comps):
        raise ValueError("all components are zero")
    g = hom_gcd3(*comps)
    if g.degree > 0:
        comps = tuple(c.divexact(g) if not c.is_zero() else
                      HomPoly.zero(c.degree - g.degree) for c in comps)
    return HomogeneousMap(comps, name=name, _assume_primitive=True)


def compose(f: HomogeneousMap, g: HomogeneousMap,
            term_cap: int = TERM_CAP, name: str = "") -> HomogeneousMap:
    """Exact composition f o g, reduced to its primitive representative."""
    a, b, c = g.components
    inner = g.degree
    cache_a = {0: HomPoly.monomial(1, 0, 0, 0)}
    cache_b = {0: HomPoly.monomial(1, 0, 0, 0)}
    cache_c = {0: HomPoly.monomial(1, 0, 0, 0)}

    def power(base, cache, k):
        while k not in cache:
            top = max(cache)
            nxt = cache[top] * base
            if term_cap is not None and nxt.term_count() > term_cap:
                raise TermBlowup(f"composition exceeded {term_cap} monomials")
            cache[top + 1] = nxt
        return cache[k]

    composed = []
    for comp in f.components:
        acc = HomPoly.zero(comp.degree * inner)
        for (i, j, k), q in comp.coeff_items():
            piece = power(a, cache_a, i) * power(b, cache_b, j) * power(c, cache_c, k)
            acc = acc + piece.scaled(q)
            if term_cap is not None and acc.term_count() > term_cap:
                raise TermBlowup(f"composition exceeded {term_cap} monomials")
        composed.append(acc)
    if all(p.is_zero() for p in composed):
        raise DegenerateComposition(
            "composition is identically zero (image of g lies in I(f))")
    return reduce_primitive(composed, name=name or f"{f.name}*{g.name}")


@dataclass
class DegreeReport:
    """Exact degrees of the reduced iterates and the growth-rate estimate."""

    degrees: list[int]
    lambda_estimate: float
    multiplicative: bool

    def check_submultiplicative(self) -> bool:
        d = self.degrees
        n = len(d)
        for i in range(1, n + 1):
            for j in range(1, n + 1 - i):
                if d[i + j - 1] > d[i - 1] * d[j - 1]:
                    return False
        return True


def degree_sequence(f: HomogeneousMap, N: int, term_cap: int = TERM_CAP) -> DegreeReport:
    """Degrees of the reduced iterates f, f^2, ..., f^N, all exact.

    Raises TermBlowup carrying the completed prefix when the monomial cap is
    hit mid-sequence.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    degrees = [f.degree]
    current = f
    for n in range(2, N + 1):
        try:
            current = compose(f, current, term_cap=term_cap)
        except TermBlowup as exc:
            raise TermBlowup(str(exc), degrees=degrees, last_index=n - 1) from None
        degrees.append(current.degree)
    lam = degrees[-1] ** (1.0 / N)
    multiplicative = all(d == f.degree ** (i + 1) for i, d in enumerate(degrees))
    return DegreeReport(degrees, lam, multiplicative)


def critical_determinant(f: HomogeneousMap) -> HomPoly:
    """Exact 3x3 Jacobian determinant of the lift, degree 3(d-1)."""
    rows = [[comp.partial(v) for v in range(3)] for comp in f.components]
    def m2(a, b, c, d):
        return a * d - b * c
    det = (rows[0][0] * m2(rows[1][1], rows[1][2], rows[2][1], rows[2][2])
           - rows[0][1] * m2(rows[1][0], rows[1][2], rows[2][0], rows[2][2])
           + rows[0][2] * m2(rows[1][0], rows[1][1], rows[2][0], rows[2][1]))
    return det


@dataclass
class InverseReport:
    certified: bool
    fg: HomogeneousMap
    gf: HomogeneousMap


def inverse_check(f: HomogeneousMap, g: HomogeneousMap,
                  term_cap: int = TERM_CAP) -> InverseReport:
    """Certify that g is the birational inverse of f by exact composition."""
    fg = compose(f, g, term_cap=term_cap, name="f*g")
    gf = compose(g, f, term_cap=term_cap, name="g*f")
    for label, comp in (("f o g", fg), ("g o f", gf)):
        if not comp.is_identity_up_to_scalar():
            raise NotInverse(f"{label} does not reduce to the identity",
                             composition=comp)
    return InverseReport(True, fg, gf)


# ---------------------------------------------------------------------------
# Indeterminacy locus by resultant elimination.
# ---------------------------------------------------------------------------

_COORDINATE_POINTS = (
    (GQ(1), GQ(0), GQ(0)),
    (GQ(0), GQ(1), GQ(0)),
    (GQ(0), GQ(0), GQ(1)),
)


def _biv_add(a, b):
    out = dict(a)
    for e, q in b.items():
        s = out.get(e, GQ(0)) + q
        if s.is_zero():
            out.pop(e, None)
        else:
            out[e] = s
    return out


def _biv_mul(a, b):
    out = {}
    for (i1, j1), q1 in a.items():
        for (i2, j2), q2 in b.items():
            e = (i1 + i2, j1 + j2)
            s = out.get(e, GQ(0)) + q1 * q2
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
    return out


def _x_tower(p: HomPoly):
    """Polynomial in x with bivariate (y,z) dict coefficients."""
    tower = {}
    for (i, j, k), q in p.coeff_items():
        tower.setdefault(i, {})[(j, k)] = q
    return tower


def _sylvester_resultant_x(p: HomPoly, q: HomPoly):
    """Res_x(p, q) as a bivariate {(j,k): GQ} dict; requires full x-degrees."""
    tp, tq = _x_tower(p), _x_tower(q)
    dp, dq = max(tp), max(tq)
    size = dp + dq
    # Sylvester rows: dq shifted copies of p's coefficients, dp of q's
    rows = []
    for s in range(dq):
        row = [tp.get(dp - (c - s), {}) if 0 <= c - s <= dp else {} for c in range(size)]
        rows.append(row)
    for s in range(dp):
        row = [tq.get(dq - (c - s), {}) if 0 <= c - s <= dq else {} for c in range(size)]
        rows.append(row)
    return _poly_det(rows)


def _poly_det(rows):
    """Determinant of a matrix of bivariate dicts via column-subset DP."""
    n = len(rows)
    if n == 0:
        return {(0, 0): GQ(1)}
    current = {0: {(0, 0): GQ(1)}}  # bitmask of used columns -> value
    for r in range(n):
        nxt = {}
        for mask, val in current.items():
            if not val:
                continue
            used_below = 0
            for c in range(n):
                bit = 1 << c
                if mask & bit:
                    used_below += 1
                    continue
                entry = rows[r][c]
                if not entry:
                    continue
                term = _biv_mul(val, entry)
                # permutation sign: parity of used columns above c
                if (r - used_below) % 2:
                    term = {e: -q for e, q in term.items()}
                key = mask | bit
                nxt[key] = _biv_add(nxt.get(key, {}), term)
        current = nxt
    return current.get((1 << n) - 1, {})


def _random_gl3(rng) -> list[list[GQ]]:
    while True:
        m = [[GQ(int(rng.integers(-5, 6))) for _ in range(3)] for _ in range(3)]
        if not _det3(m).is_zero():
            return m


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def matrix_inverse_gq(m):
    """Exact inverse of a 3x3 Gaussian-rational matrix (adjugate / det)."""
    d = _det3(m)
    if d.is_zero():
        raise ValueError("matrix is singular")
    cof = [[None] * 3 for _ in range(3)]
    for r in range(3):
        for c in range(3):
            sub = [[m[i][j] for j in range(3) if j != c] for i in range(3) if i != r]
            minor = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
            sign = GQ(1) if (r + c) % 2 == 0 else GQ(-1)
            cof[c][r] = sign * minor / d  # transposed in place
    return cof


def linear_map_from_matrix(m, name: str = "") -> HomogeneousMap:
    """The degree-1 map whose components are the rows of the matrix."""
    comps = []
    for row in m:
        comps.append(HomPoly(1, {(1, 0, 0): row[0], (0, 1, 0): row[1],
                                 (0, 0, 1): row[2]}))
    return HomogeneousMap(comps, name=name, _assume_primitive=True)


def _apply_matrix_point(m, pt):
    return tuple(sum((m[r][c] * pt[c] for c in range(3)), GQ(0)) for r in range(3))


def _snap_to_gq(value: complex, max_den: int = 1_000_000) -> GQ | None:
    """Try to see a float complex number as a small Gaussian rational.

    A generous snap distance is safe here: every snapped candidate is verified
    by exact evaluation afterwards, so a wrong snap is rejected, not kept.
    """
    re = Fraction(value.real).limit_denominator(max_den)
    im = Fraction(value.imag).limit_denominator(max_den)
    if abs(float(re) - value.real) < 1e-7 and abs(float(im) - value.imag) < 1e-7:
        return GQ(re, im)
    return None


def _verify_candidate(f: HomogeneousMap, triple, residual_tol: float):
    """Check a candidate common zero; returns (point, exact) or None."""
    vec = np.array([complex(c) for c in triple], dtype=complex)
    m = np.max(np.abs(vec))
    if m == 0 or not np.isfinite(m):
        return None
    vec = vec / m
    # exact verification when the normalized candidate snaps to rationals
    snapped = [_snap_to_gq(c) for c in vec]
    if all(s is not None for s in snapped):
        if all(comp.evaluate_exact(snapped).is_zero() for comp in f.components
               if not comp.is_zero()):
            return normalize([s.to_complex() for s in snapped]), True
    residual = 0.0
    for comp, scale in zip(f.components, _component_scales(f)):
        expos, coeffs = [], []
        val = 0.0 + 0.0j
        for (i, j, k), q in comp.coeff_items():
            val += q.to_complex() * vec[0] ** i * vec[1] ** j * vec[2] ** k
        residual = max(residual, abs(val) / scale)
    if residual < residual_tol:
        return normalize(vec), False
    return None


def _component_scales(f: HomogeneousMap):
    scales = []
    for comp in f.components:
        s = sum(abs(q.to_complex()) for _, q in comp.coeff_items())
        scales.append(s or 1.0)
    return scales


def indeterminacy_points(f: HomogeneousMap, residual_tol: float = 1e-8,
                         seed: int = 0, max_retries: int = 5) -> PointSet:
    """All common projective zeros of the three components.

    Elimination runs in generic coordinates when the given ones degenerate
    (component missing full x-degree, or an identically-zero resultant); the
    random change of coordinates is seeded and inverted on output.  A locus
    that stays degenerate through all retries is reported as positive
    dimensional.
    """
    rng = np.random.default_rng(seed)
    # dedup radius covers the root-cluster smear of multiple intersection
    # points (multiplicity m splits a float root into a cluster ~ eps^(1/m))
    found = PointSet(tol=1e-4)

    # exact sweep of the coordinate points first; they are the usual suspects
    for pt in _COORDINATE_POINTS:
        if all(c.evaluate_exact(pt).is_zero() for c in f.components if not c.is_zero()):
            found.add(normalize([q.to_complex() for q in pt]))

    attempt = 0
    while attempt <= max_retries:
        if attempt == 0:
            m = [[GQ(1 if r == c else 0) for c in range(3)] for r in range(3)]
            comps = list(f.components)
        else:
            # generic coordinates give every component full x-degree; mixing the
            # components (zero set unchanged) kills pairwise common factors
            m = _random_gl3(rng)
            transform = linear_map_from_matrix(m)
            comps = [c.compose(*transform.components) for c in f.components]
            mix = _random_gl3(rng)
            comps = [_mix_components(mix[r], comps) for r in range(3)]
        candidates = _eliminate(comps)
        if candidates is None:
            attempt += 1
            continue
        for cand in candidates:
            orig = _apply_matrix_triple(m, cand)
            res = _verify_candidate(f, orig, residual_tol)
            if res is not None:
                found.add(res[0])
        return found
    raise PositiveDimensionalLocus(
        "resultants vanish identically in every tried coordinate frame; "
        "the common zero set contains a curve")


def _mix_components(weights, comps):
    acc = HomPoly.zero(comps[0].degree)
    for w, c in zip(weights, comps):
        if not w.is_zero() and not c.is_zero():
            acc = acc + c.scaled(w)
    return acc


def _apply_matrix_triple(m, cand):
    out = []
    for r in range(3):
        acc = 0j
        for c in range(3):
            acc += m[r][c].to_complex() * cand[c]
        out.append(acc)
    return tuple(out)


def _eliminate(comps):
    """Candidate common zeros in generic coordinates, or None on degeneracy."""
    nonzero = [c for c in comps if not c.is_zero()]
    if len(nonzero) < 2:
        return None
    d = nonzero[0].degree
    # full x-degree in every component keeps the Sylvester rows honest and
    # excludes common zeros escaping to x-infinity
    for c in nonzero:
        if (d, 0, 0) not in c.terms:
            return None
    res = _sylvester_resultant_x(nonzero[0], nonzero[1])
    if not res:
        return None  # identically-zero resultant: shared factor in this frame
    # univariate in y at z = 1, plus the z = 0 root when the top coefficient drops
    total = max(j + k for (j, k) in res)
    coeffs = np.zeros(total + 1, dtype=complex)
    for (j, k), q in res.items():
        coeffs[j] += q.to_complex()
    yz_pairs = []
    top = max(idx for idx in range(total + 1))
    trimmed = np.trim_zeros(coeffs, "b")
    if len(trimmed) == 0:
        return None
    if len(trimmed) - 1 < total:
        yz_pairs.append((1.0 + 0j, 0.0 + 0j))  # root at z = 0
    if len(trimmed) > 1:
        roots = np.roots(trimmed[::-1])
        yz_pairs.extend((r, 1.0 + 0j) for r in roots)
    candidates = []
    for (y0, z0) in yz_pairs:
        scale = max(abs(y0), abs(z0))
        y0, z0 = y0 / scale, z0 / scale
        # back-substitute: x-roots of the first component restricted to (y0, z0)
        tower = _x_tower(nonzero[0])
        poly = np.zeros(max(tower) + 1, dtype=complex)
        for i, biv in tower.items():
            poly[i] = sum(q.to_complex() * (y0 ** j) * (z0 ** k)
                          for (j, k), q in biv.items())
        trimmed_x = np.trim_zeros(poly, "b")
        if len(trimmed_x) <= 1:
            continue
        for x0 in np.roots(trimmed_x[::-1]):
            candidates.append((x0, y0, z0))
    return candidates
