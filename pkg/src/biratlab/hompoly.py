"""Exact homogeneous polynomials in three variables over the Gaussian rationals.

Internal representation: a term map (i, j, k) -> (a, b) of Python integers
plus one shared positive denominator, encoding the coefficient (a + b*i)/den.
Keeping coefficients as scaled Gaussian integers makes the composition
convolutions pure integer arithmetic, which is what the iterate-degree
computations spend their time on.

The gcd machinery follows content/primitive-part recursion: trivariate
homogeneous gcds reduce to bivariate gcds after stripping monomial content,
bivariate gcds run a primitive pseudo-remainder sequence in one variable over
exact univariate arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd

from .errors import TermBlowup
from .gaussian import GQ

VARS = ("x", "y", "z")

_MONO_X = (1, 0, 0)
_MONO_Y = (0, 1, 0)
_MONO_Z = (0, 0, 1)


def _gcd_many(values):
    g = 0
    for v in values:
        g = _igcd(g, v)
        if g == 1:
            return 1
    return g


class HomPoly:
    """Immutable homogeneous polynomial with exact Gaussian-rational coefficients."""

    __slots__ = ("degree", "den", "terms")

    def __init__(self, degree: int, terms=None, den: int = 1, _raw: bool = False):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.degree = degree
        if _raw:
            self.den = den
            self.terms = terms or {}
            return
        # public path: terms maps exponent triples to GQ/Fraction/int values
        den_acc = 1
        staged = {}
        for expo, coeff in (terms or {}).items():
            i, j, k = expo
            if i < 0 or j < 0 or k < 0 or i + j + k != degree:
                raise ValueError(f"exponent triple {expo} does not sum to degree {degree}")
            q = GQ.coerce(coeff)
            if q.is_zero():
                continue
            staged[expo] = q
            den_acc = den_acc * q.re.denominator // _igcd(den_acc, q.re.denominator)
            den_acc = den_acc * q.im.denominator // _igcd(den_acc, q.im.denominator)
        raw = {}
        for expo, q in staged.items():
            raw[expo] = (int(q.re * den_acc), int(q.im * den_acc))
        self.den, self.terms = _normalized(den_acc, raw)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, degree: int = 0) -> "HomPoly":
        return cls(degree, {}, 1, _raw=True)

    @classmethod
    def monomial(cls, coeff, i: int, j: int, k: int) -> "HomPoly":
        return cls(i + j + k, {(i, j, k): coeff})

    @classmethod
    def variable(cls, name: str) -> "HomPoly":
        expo = {"x": _MONO_X, "y": _MONO_Y, "z": _MONO_Z}[name]
        return cls(1, {expo: 1})

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, i: int, j: int, k: int) -> GQ:
        a, b = self.terms.get((i, j, k), (0, 0))
        return GQ(Fraction(a, self.den), Fraction(b, self.den))

    def coeff_items(self):
        """Deterministic (exponent, GQ) iteration in sorted exponent order."""
        for expo in sorted(self.terms):
            a, b = self.terms[expo]
            yield expo, GQ(Fraction(a, self.den), Fraction(b, self.den))

    def term_count(self) -> int:
        return len(self.terms)

    def min_exponents(self):
        """Per-variable minimum exponent over all terms (monomial content)."""
        if not self.terms:
            return (0, 0, 0)
        mi = mj = mk = None
        for (i, j, k) in self.terms:
            mi = i if mi is None else min(mi, i)
            mj = j if mj is None else min(mj, j)
            mk = k if mk is None else min(mk, k)
        return (mi, mj, mk)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "HomPoly") -> "HomPoly":
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError("cannot add homogeneous polynomials of different degrees")
        degree = self.degree if self.terms else other.degree
        l = self.den * other.den // _igcd(self.den, other.den)
        m1 = l // self.den
        m2 = l // other.den
        out = {e: (a * m1, b * m1) for e, (a, b) in self.terms.items()}
        for e, (a, b) in other.terms.items():
            if e in out:
                pa, pb = out[e]
                out[e] = (pa + a * m2, pb + b * m2)
            else:
                out[e] = (a * m2, b * m2)
        den, terms = _normalized(l, out)
        return HomPoly(degree, terms, den, _raw=True)

    def __neg__(self) -> "HomPoly":
        return HomPoly(self.degree, {e: (-a, -b) for e, (a, b) in self.terms.items()},
                       self.den, _raw=True)

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        return self + (-other)

    def __mul__(self, other: "HomPoly") -> "HomPoly":
        out = {}
        for (i1, j1, k1), (a1, b1) in self.terms.items():
            for (i2, j2, k2), (a2, b2) in other.terms.items():
                e = (i1 + i2, j1 + j2, k1 + k2)
                ra = a1 * a2 - b1 * b2
                rb = a1 * b2 + b1 * a2
                if e in out:
                    pa, pb = out[e]
                    out[e] = (pa + ra, pb + rb)
                else:
                    out[e] = (ra, rb)
        den, terms = _normalized(self.den * other.den, out)
        return HomPoly(self.degree + other.degree, terms, den, _raw=True)

    def scaled(self, q) -> "HomPoly":
        q = GQ.coerce(q)
        if q.is_zero():
            return HomPoly.zero(self.degree)
        qden = q.re.denominator
        qden = qden * q.im.denominator // _igcd(qden, q.im.denominator)
        qa = int(q.re * qden)
        qb = int(q.im * qden)
        out = {}
        for e, (a, b) in self.terms.items():
            out[e] = (a * qa - b * qb, a * qb + b * qa)
        den, terms = _normalized(self.den * qden, out)
        return HomPoly(self.degree, terms, den, _raw=True)

    def pow(self, k: int) -> "HomPoly":
        if k < 0:
            raise ValueError("negative power")
        out = HomPoly.monomial(1, 0, 0, 0)
        for _ in range(k):
            out = out * self
        return out

    def partial(self, var: int) -> "HomPoly":
        """Exact partial derivative with respect to variable index 0, 1 or 2."""
        out = {}
        for e, (a, b) in self.terms.items():
            n = e[var]
            if n == 0:
                continue
            ne = list(e)
            ne[var] = n - 1
            out[tuple(ne)] = (a * n, b * n)
        den, terms = _normalized(self.den, out)
        return HomPoly(max(self.degree - 1, 0), terms, den, _raw=True)

    # -- evaluation ----------------------------------------------------------

    def evaluate_exact(self, point) -> GQ:
        """Evaluate at a triple of GQ values, exactly."""
        px, py, pz = (GQ.coerce(c) for c in point)
        xp = _gq_powers(px, self.degree)
        yp = _gq_powers(py, self.degree)
        zp = _gq_powers(pz, self.degree)
        acc = GQ(0)
        for (i, j, k), q in self.coeff_items():
            acc = acc + q * xp[i] * yp[j] * zp[k]
        return acc

    # -- composition -----------------------------------------------------------

    def compose(self, a: "HomPoly", b: "HomPoly", c: "HomPoly",
                term_cap: int | None = None) -> "HomPoly":
        """Substitute (a, b, c) for (x, y, z); exact, degree multiplies."""
        inner = a.degree if a.terms else (b.degree if b.terms else c.degree)
        cache_a = {0: HomPoly.monomial(1, 0, 0, 0)}
        cache_b = {0: HomPoly.monomial(1, 0, 0, 0)}
        cache_c = {0: HomPoly.monomial(1, 0, 0, 0)}

        def power(base, cache, k):
            while k not in cache:
                top = max(cache)
                nxt = cache[top] * base
                cache[top + 1] = nxt
                if term_cap is not None and nxt.term_count() > term_cap:
                    raise TermBlowup(f"composition exceeded {term_cap} monomials")
            return cache[k]

        acc = HomPoly.zero(self.degree * inner)
        for (i, j, k), q in self.coeff_items():
            piece = power(a, cache_a, i) * power(b, cache_b, j) * power(c, cache_c, k)
            acc = acc + piece.scaled(q)
            if term_cap is not None and acc.term_count() > term_cap:
                raise TermBlowup(f"composition exceeded {term_cap} monomials")
        return acc

    # -- structure ----------------------------------------------------------------

    def shift_down(self, di: int, dj: int, dk: int) -> "HomPoly":
        """Divide by the monomial x^di y^dj z^dk (must divide every term)."""
        out = {}
        for (i, j, k), v in self.terms.items():
            if i < di or j < dj or k < dk:
                raise ValueError("monomial does not divide polynomial")
            out[(i - di, j - dj, k - dk)] = v
        return HomPoly(self.degree - di - dj - dk, out, self.den, _raw=True)

    def divexact(self, g: "HomPoly") -> "HomPoly":
        """Exact division self / g; raises ValueError if g does not divide."""
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return HomPoly.zero(max(self.degree - g.degree, 0))
        quo, rem = _divmod_single(self, g)
        if not rem.is_zero():
            raise ValueError("polynomial division is not exact")
        return quo

    def divides(self, other: "HomPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        if other.is_zero():
            return True
        if other.degree < self.degree:
            return False
        _, rem = _divmod_single(other, self)
        return rem.is_zero()

    def monic_normalized(self) -> "HomPoly":
        """Scale so the lexicographically largest monomial has coefficient 1."""
        if self.is_zero():
            return self
        lead = max(self.terms)
        a, b = self.terms[lead]
        lead_q = GQ(Fraction(a, self.den), Fraction(b, self.den))
        return self.scaled(GQ(1) / lead_q)

    def proportional_to(self, other: "HomPoly") -> bool:
        """True if self = q * other for some nonzero Gaussian-rational q."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.degree != other.degree or set(self.terms) != set(other.terms):
            return False
        return self.monic_normalized() == other.monic_normalized()

    # -- dunder plumbing ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return (self.degree == other.degree and self.den == other.den
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.degree, self.den, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if self.is_zero():
            return f"HomPoly(0; degree={self.degree})"
        bits = []
        for (i, j, k), q in self.coeff_items():
            mono = "".join(f"{v}^{e}" if e > 1 else (v if e == 1 else "")
                           for v, e in zip(VARS, (i, j, k)))
            bits.append(f"{q}*{mono}" if mono else str(q))
        return "HomPoly(" + " + ".join(bits) + ")"


def _normalized(den: int, raw: dict):
    """Drop zero terms, pull out the integer content shared with the denominator."""
    clean = {e: ab for e, ab in raw.items() if ab[0] or ab[1]}
    if not clean:
        return 1, {}
    if den < 0:
        den = -den
        clean = {e: (-a, -b) for e, (a, b) in clean.items()}
    g = den
    for a, b in clean.values():
        g = _igcd(g, _igcd(abs(a), abs(b)))
        if g == 1:
            return den, clean
    return den // g, {e: (a // g, b // g) for e, (a, b) in clean.items()}


def _gq_powers(v: GQ, n: int):
    out = [GQ(1)]
    for _ in range(n):
        out.append(out[-1] * v)
    return out


def _divmod_single(a: HomPoly, g: HomPoly):
    """Division of a by the single divisor g under graded-lex order.

    Returns (quotient, remainder); remainder has no term divisible by g's
    leading monomial, so remainder == 0 certifies exact divisibility.
    """
    lead_g = max(g.terms)
    ga, gb = g.terms[lead_g]
    lead_gq = GQ(Fraction(ga, g.den), Fraction(gb, g.den))
    quo = HomPoly.zero(max(a.degree - g.degree, 0))
    rem = HomPoly.zero(a.degree)
    work = a
    while not work.is_zero():
        lead_w = max(work.terms)
        wa, wb = work.terms[lead_w]
        wq = GQ(Fraction(wa, work.den), Fraction(wb, work.den))
        di = lead_w[0] - lead_g[0]
        dj = lead_w[1] - lead_g[1]
        dk = lead_w[2] - lead_g[2]
        if di >= 0 and dj >= 0 and dk >= 0:
            factor = HomPoly.monomial(wq / lead_gq, di, dj, dk)
            quo = quo + factor
            work = work - g * factor
        else:
            mono = HomPoly.monomial(wq, *lead_w)
            rem = rem + mono
            work = work - mono
    return quo, rem


# ---------------------------------------------------------------------------
# Univariate exact arithmetic over the Gaussian rationals (coefficient lists).
# ---------------------------------------------------------------------------

def p1_trim(p):
    while p and p[-1].is_zero():
        p.pop()
    return p

def p1_deg(p):
    return len(p) - 1

def p1_is_zero(p):
    return not p

def p1_add(p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else GQ(0)
        b = q[i] if i < len(q) else GQ(0)
        out.append(a + b)
    return p1_trim(out)

def p1_neg(p):
    return [-c for c in p]

def p1_mul(p, q):
    if not p or not q:
        return []
    out = [GQ(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return p1_trim(out)

def p1_scale(p, q):
    return p1_trim([c * q for c in p])

def p1_divmod(p, q):
    """Exact field division with remainder; q nonzero."""
    if p1_is_zero(q):
        raise ZeroDivisionError("univariate division by zero")
    rem = list(p)
    quo = [GQ(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(rem) >= len(q) and rem:
        factor = rem[-1] / lead
        shift = len(rem) - len(q)
        quo[shift] = factor
        for i, c in enumerate(q):
            rem[shift + i] = rem[shift + i] - factor * c
        p1_trim(rem)
    return p1_trim(quo), rem

def p1_gcd(p, q):
    """Monic gcd via the Euclidean algorithm."""
    a, b = list(p), list(q)
    while not p1_is_zero(b):
        _, r = p1_divmod(a, b)
        a, b = b, r
    if p1_is_zero(a):
        return []
    return p1_scale(a, GQ(1) / a[-1])

def p1_divexact(p, q):
    quo, rem = p1_divmod(p, q)
    if not p1_is_zero(rem):
        raise ValueError("univariate division not exact")
    return quo


# ---------------------------------------------------------------------------
# Bivariate gcd: polynomials in y over GQ[x], primitive PRS recursion.
# Bivariate values are dicts {(i, j): GQ} for x^i y^j.
# ---------------------------------------------------------------------------

def _p2_tower(p2):
    """dict{(i,j): GQ} -> dict{j: coefficient list in x}."""
    tower = {}
    for (i, j), q in p2.items():
        col = tower.setdefault(j, {})
        col[i] = q
    out = {}
    for j, col in tower.items():
        coeffs = [GQ(0)] * (max(col) + 1)
        for i, q in col.items():
            coeffs[i] = q
        out[j] = p1_trim(coeffs)
    return {j: c for j, c in out.items() if c}

def _tower_p2(tower):
    out = {}
    for j, coeffs in tower.items():
        for i, q in enumerate(coeffs):
            if not q.is_zero():
                out[(i, j)] = q
    return out

def _tower_content(tower):
    cont = []
    for j in sorted(tower):
        cont = p1_gcd(cont, tower[j]) if cont else p1_scale(tower[j], GQ(1) / tower[j][-1])
        if p1_deg(cont) == 0:
            return [GQ(1)]
    return cont if cont else [GQ(1)]

def _tower_primitive(tower):
    cont = _tower_content(tower)
    if p1_deg(cont) == 0:
        return cont, tower
    return cont, {j: p1_divexact(c, cont) for j, c in tower.items()}

def _tower_mul_p1(tower, p1):
    return {j: p1_mul(c, p1) for j, c in tower.items()}

def _tower_sub(t1, t2):
    out = dict(t1)
    for j, c in t2.items():
        out[j] = p1_add(out.get(j, []), p1_neg(c))
    return {j: c for j, c in out.items() if c}

def _tower_shift_y(tower, s):
    return {j + s: c for j, c in tower.items()}

def _tower_pseudo_rem(p, q):
    """Pseudo-remainder of p by q as polynomials in y over GQ[x]."""
    dp, dq = max(p), max(q)
    lead_q = q[dq]
    rem = dict(p)
    while rem and max(rem) >= dq:
        dr = max(rem)
        lead_r = rem[dr]
        rem = _tower_mul_p1(rem, lead_q)
        sub = _tower_mul_p1(_tower_shift_y(q, dr - dq), lead_r)
        rem = _tower_sub(rem, sub)
    return rem

def p2_gcd(a2, b2):
    """Gcd of bivariate polynomials given as {(i,j): GQ} dicts, normalized."""
    if not a2:
        return dict(b2)
    if not b2:
        return dict(a2)
    ta, tb = _p2_tower(a2), _p2_tower(b2)
    ca, pa = _tower_primitive(ta)
    cb, pb = _tower_primitive(tb)
    cg = p1_gcd(ca, cb)
    # Euclid on primitive parts in y
    if max(pa) < max(pb):
        pa, pb = pb, pa
    while True:
        if max(pb) == 0:
            g = {0: [GQ(1)]}
            break
        rem = _tower_pseudo_rem(pa, pb)
        if not rem:
            g = pb
            break
        _, rem = _tower_primitive(rem)
        pa, pb = pb, rem
        if max(pa) < max(pb):
            pa, pb = pb, pa
    g = _tower_mul_p1(g, cg) if p1_deg(cg) > 0 else g
    out = _tower_p2(g)
    # normalize so the lexicographically largest monomial has coefficient 1
    lead = max(out)
    scale = GQ(1) / out[lead]
    return {e: q * scale for e, q in out.items()}


# ---------------------------------------------------------------------------
# Trivariate homogeneous gcd.
# ---------------------------------------------------------------------------

def _dehomogenize_z(p: HomPoly):
    out = {}
    for (i, j, _k), q in p.coeff_items():
        key = (i, j)
        out[key] = out.get(key, GQ(0)) + q
    return {e: q for e, q in out.items() if not q.is_zero()}

def _homogenize_z(p2, degree):
    terms = {}
    for (i, j), q in p2.items():
        terms[(i, j, degree - i - j)] = q
    return HomPoly(degree, terms)

def hom_gcd(a: HomPoly, b: HomPoly) -> HomPoly:
    """Exact gcd of two homogeneous trivariate polynomials, monic-normalized."""
    if a.is_zero():
        return b.monic_normalized()
    if b.is_zero():
        return a.monic_normalized()
    ma = a.min_exponents()
    mb = b.min_exponents()
    common = tuple(min(x, y) for x, y in zip(ma, mb))
    mono = HomPoly.monomial(1, *common)
    # strip each poly's full monomial content; anything beyond the shared part
    # cannot divide the other polynomial, so the gcd is unaffected
    a1 = a.shift_down(*a.min_exponents())
    b1 = b.shift_down(*b.min_exponents())
    if a1.degree == 0 or b1.degree == 0:
        return mono
    # fast certificate: no common root on a generic line means the gcd is constant
    from .modp import certify_trivial_gcd
    if certify_trivial_gcd((a1, b1)):
        return mono
    g2 = p2_gcd(_dehomogenize_z(a1), _dehomogenize_z(b1))
    gdeg = max(i + j for (i, j) in g2)
    if gdeg == 0:
        return mono
    g = _homogenize_z(g2, gdeg)
    return (mono * g).monic_normalized()

def hom_gcd3(a: HomPoly, b: HomPoly, c: HomPoly) -> HomPoly:
    return hom_gcd(hom_gcd(a, b), c)
