"""Modular certificates for the exact polynomial algebra.

A nonconstant common factor of a homogeneous triple forces a common projective
root on every line.  Restricting the components to a fixed rational line and
taking a univariate gcd modulo a prime p (chosen with sqrt(-1) available so
Gaussian coefficients embed) gives a one-sided test: if the modular gcd is
constant and no degeneracy occurred, the true gcd is constant.  The test never
certifies a nontrivial gcd; callers fall back to the exact routine.
"""

from __future__ import annotations

# 31-bit primes congruent to 1 mod 4, so GF(p) contains a square root of -1
# and products of reduced coefficients stay below 2**62.
_PRIMES = (2147483629, 2147483489, 2147483477)


def _sqrt_minus_one(p: int) -> int:
    for a in range(2, 1000):
        if pow(a, (p - 1) // 2, p) == p - 1:
            return pow(a, (p - 1) // 4, p)
    raise RuntimeError("no quadratic nonresidue found")


_I0 = {p: _sqrt_minus_one(p) for p in _PRIMES}


def _poly_eval_powers(poly, coords, p, i0):
    """Evaluate poly at integer coordinates mod p; returns int in [0, p)."""
    if poly.den % p == 0:
        return None
    den_inv = pow(poly.den % p, p - 2, p)
    d = poly.degree
    pw = []
    for c in coords:
        row = [1] * (d + 1)
        c %= p
        for e in range(1, d + 1):
            row[e] = row[e - 1] * c % p
        pw.append(row)
    acc = 0
    for (i, j, k), (a, b) in poly.terms.items():
        coeff = (a + b * i0) % p
        acc = (acc + coeff * pw[0][i] % p * pw[1][j] % p * pw[2][k]) % p
    return acc * den_inv % p


def _line_restriction_modp(poly, u, v, p, i0):
    """Coefficient list of s -> poly(s*u + v) mod p, or None on degeneracy."""
    if poly.den % p == 0:
        return None
    d = poly.degree
    values = []
    for s in range(d + 1):
        coords = tuple(s * cu + cv for cu, cv in zip(u, v))
        val = _poly_eval_powers(poly, coords, p, i0)
        if val is None:
            return None
        values.append(val)
    return _lagrange_interp_modp(values, p)


def _lagrange_interp_modp(values, p):
    """Interpolate coefficients from values at s = 0..d, all mod p."""
    d = len(values) - 1
    coeffs = [0] * (d + 1)
    # Newton's divided differences over GF(p) with nodes 0..d
    table = list(values)
    newton = [table[0]]
    for level in range(1, d + 1):
        inv = pow(level, p - 2, p)
        nxt = [(table[i + 1] - table[i]) * inv % p for i in range(len(table) - 1)]
        table = nxt
        newton.append(table[0])
    # expand the Newton form into monomial coefficients
    acc = [0] * (d + 1)
    basis = [1]  # product (s - 0)(s - 1)...(s - (k-1))
    for k, ck in enumerate(newton):
        for idx, bc in enumerate(basis):
            acc[idx] = (acc[idx] + ck * bc) % p
        if k < d:
            new_basis = [0] * (len(basis) + 1)
            for idx, bc in enumerate(basis):
                new_basis[idx] = (new_basis[idx] - bc * k) % p
                new_basis[idx + 1] = (new_basis[idx + 1] + bc) % p
            basis = new_basis
    for idx in range(d + 1):
        coeffs[idx] = acc[idx] % p
    return coeffs


def _gcd_modp(a, b, p):
    """Monic gcd of coefficient lists mod p (index = degree)."""
    def trim(c):
        while c and c[-1] % p == 0:
            c.pop()
        return c

    a, b = trim(list(a)), trim(list(b))
    while b:
        inv = pow(b[-1], p - 2, p)
        db, da = len(b) - 1, len(a) - 1
        r = list(a)
        while len(r) - 1 >= db and r:
            shift = len(r) - 1 - db
            f = r[-1] * inv % p
            for i2, c in enumerate(b):
                r[shift + i2] = (r[shift + i2] - f * c) % p
            trim(r)
        a, b = b, r
    return a


_LINES = (
    ((1, 2, 3), (5, 1, -2)),
    ((2, -1, 1), (1, 3, 4)),
)


def certify_trivial_gcd(polys) -> bool:
    """True only when the homogeneous polynomials provably share no factor.

    False means "inconclusive": the caller must run the exact gcd.
    """
    polys = [q for q in polys if not q.is_zero()]
    if len(polys) < 2:
        return False
    for u, v in _LINES:
        for p in _PRIMES[:2]:
            i0 = _I0[p]
            rests = []
            ok = True
            for q in polys:
                r = _line_restriction_modp(q, u, v, p, i0)
                if r is None:
                    ok = False
                    break
                # a degree drop mod p or an identically-zero restriction is a
                # degeneracy; this prime/line pair proves nothing
                while r and r[-1] == 0:
                    r.pop()
                if len(r) - 1 != q.degree:
                    ok = False
                    break
                rests.append(r)
            if not ok:
                continue
            g = rests[0]
            for r in rests[1:]:
                g = _gcd_modp(g, r, p)
                if len(g) == 1:
                    break
            if len(g) == 1:
                return True
    return False
