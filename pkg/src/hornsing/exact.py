"""Exact rational and polynomial arithmetic.

Everything downstream (series expansion, operator algebra, elimination,
curve normalization) runs on the types in this module: arbitrary-precision
rationals from the stdlib, sparse multivariate polynomials with a graded
lexicographic term order, and rational functions kept in lowest terms.
No floats, no rounding, anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product as _iproduct


class DegreeZero(ValueError):
    """Resultant input has degree zero in the elimination variable."""


class DegreeTooLow(ValueError):
    """Discriminant input has degree below two in the chosen variable."""


class ZeroInput(ValueError):
    """Operation is undefined for the zero polynomial."""


def frac_gcd(a: Fraction, b: Fraction) -> Fraction:
    """gcd on rationals: gcd of numerators over lcm of denominators, >= 0."""
    if a == 0 and b == 0:
        return Fraction(0)
    num = math.gcd(a.numerator, b.numerator)
    den = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
    return Fraction(num, den)


def _glex_key(exps):
    return (sum(exps), exps)


class MPoly:
    """Sparse multivariate polynomial over Q.

    `vars` is an ordered tuple of variable names; `terms` maps exponent
    tuples to nonzero Fraction coefficients.  Two polynomials interoperate
    only when their variable tuples agree (use with_vars to embed).
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        clean = {}
        for exps, c in terms.items():
            c = Fraction(c)
            if c:
                t = tuple(int(e) for e in exps)
                if len(t) != len(self.vars) or any(e < 0 for e in t):
                    raise ValueError("bad exponent tuple %r" % (t,))
                clean[t] = clean.get(t, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def const(cls, vars, c):
        c = Fraction(c)
        if not c:
            return cls.zero(vars)
        return cls(vars, {(0,) * len(tuple(vars)): c})

    @classmethod
    def variable(cls, vars, name):
        vars = tuple(vars)
        i = vars.index(name)
        e = [0] * len(vars)
        e[i] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    # ---- basic queries -------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()), Fraction(0))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, var):
        if not self.terms:
            return -1
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def leading_exps(self):
        if not self.terms:
            raise ZeroInput("zero polynomial has no leading term")
        return max(self.terms, key=_glex_key)

    def leading_coeff(self) -> Fraction:
        return self.terms[self.leading_exps()]

    def coeff(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    # ---- arithmetic ----------------------------------------------------

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError("variable mismatch: %r vs %r" % (self.vars, other.vars))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.vars, other)
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, Fraction(0)) + c
        return MPoly(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MPoly.zero(self.vars)
            return MPoly(self.vars, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, Fraction(0)) + c1 * c2
        return MPoly(self.vars, t)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            if isinstance(other, (int, Fraction)):
                other = MPoly.const(self.vars, other)
            else:
                return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # ---- calculus and substitution --------------------------------------

    def derivative(self, var):
        i = self.vars.index(var)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                t[tuple(ne)] = t.get(tuple(ne), Fraction(0)) + c * e[i]
        return MPoly(self.vars, t)

    def evaluate(self, env) -> Fraction:
        total = Fraction(0)
        vals = [Fraction(env[v]) for v in self.vars]
        for e, c in self.terms.items():
            term = c
            for val, k in zip(vals, e):
                if k:
                    term *= val**k
            total += term
        return total

    def substitute(self, mapping, target_vars=None):
        """Map variables to polynomials (identity for unmapped names)."""
        if target_vars is None:
            sample = next(iter(mapping.values()), None)
            target_vars = sample.vars if sample is not None else self.vars
        target_vars = tuple(target_vars)
        images = []
        for v in self.vars:
            if v in mapping:
                img = mapping[v]
                if img.vars != target_vars:
                    raise ValueError("substitution image in wrong variables")
                images.append(img)
            else:
                images.append(MPoly.variable(target_vars, v))
        out = MPoly.zero(target_vars)
        cache = [{0: MPoly.const(target_vars, 1)} for _ in images]
        for e, c in self.terms.items():
            term = MPoly.const(target_vars, c)
            for i, k in enumerate(e):
                if k:
                    if k not in cache[i]:
                        cache[i][k] = images[i] ** k
                    term = term * cache[i][k]
            out = out + term
        return out

    def shift(self, var, delta):
        """Substitute var -> var + delta for an integer delta."""
        img = MPoly.variable(self.vars, var) + MPoly.const(self.vars, delta)
        return self.substitute({var: img}, self.vars)

    def with_vars(self, newvars):
        """Embed into (or project onto) another variable tuple.

        Dropping a variable the polynomial actually uses is an error.
        """
        newvars = tuple(newvars)
        pos = {}
        for i, v in enumerate(self.vars):
            pos[i] = newvars.index(v) if v in newvars else None
        t = {}
        for e, c in self.terms.items():
            ne = [0] * len(newvars)
            for i, k in enumerate(e):
                if k:
                    if pos[i] is None:
                        raise ValueError("cannot drop used variable %r" % self.vars[i])
                    ne[pos[i]] = k
            t[tuple(ne)] = t.get(tuple(ne), Fraction(0)) + c
        return MPoly(newvars, t)

    # ---- univariate views ------------------------------------------------

    def as_univar(self, var):
        """Coefficient list [c0, c1, ...] w.r.t. var; entries are MPoly."""
        i = self.vars.index(var)
        d = self.degree(var)
        coeffs = [MPoly.zero(self.vars) for _ in range(max(d, 0) + 1)]
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            coeffs[k] = coeffs[k] + MPoly(self.vars, {tuple(ne): c})
        return coeffs

    @classmethod
    def from_univar(cls, var, coeffs):
        if not coeffs:
            raise ValueError("empty coefficient list")
        vars = coeffs[0].vars
        i = vars.index(var)
        out = cls.zero(vars)
        x = cls.variable(vars, var)
        for k, c in enumerate(coeffs):
            if not c.is_zero():
                out = out + c * x**k
        return out

    # ---- normalization ----------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational content (0 for the zero polynomial)."""
        c = Fraction(0)
        for v in self.terms.values():
            c = frac_gcd(c, v)
        return c

    def primitive_positive(self):
        """Divide out the content and fix a positive graded-lex leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        p = self * (1 / c)
        if p.leading_coeff() < 0:
            p = -p
        return p

    # ---- printing ----------------------------------------------------------

    def _render(self, coeff_of):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_glex_key, reverse=True):
            c = coeff_of(e)
            mon = "*".join(
                v if k == 1 else "%s^%d" % (v, k)
                for v, k in zip(self.vars, e)
                if k
            )
            mag = abs(c)
            if not mon:
                body = str(mag)
            elif mag == 1:
                body = mon
            else:
                body = "%s*%s" % (mag, mon)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def to_str(self):
        return self._render(lambda e: self.terms[e])

    def canonical_str(self):
        """Unique rendering: content-free, positive leading coefficient."""
        p = self.primitive_positive()
        return p._render(lambda e: p.terms[e])

    def __repr__(self):
        return "MPoly[%s](%s)" % (",".join(self.vars), self.to_str())


def divexact(a: MPoly, b: MPoly) -> MPoly:
    """Exact polynomial quotient a/b; raises if b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return a
    a._check(b)
    if b.is_constant():
        return a * (1 / b.constant_value())
    rem = a
    q = {}
    lb = b.leading_exps()
    cb = b.terms[lb]
    while not rem.is_zero():
        la = rem.leading_exps()
        diff = tuple(x - y for x, y in zip(la, lb))
        if any(d < 0 for d in diff):
            raise ValueError("inexact polynomial division")
        c = rem.terms[la] / cb
        q[diff] = c
        rem = rem - MPoly(a.vars, {diff: c}) * b
    return MPoly(a.vars, q)


def _list_primitive(coeffs):
    """Split a univariate-view coefficient list into (content, primitive list)."""
    cont = MPoly.zero(coeffs[0].vars)
    for c in coeffs:
        cont = poly_gcd(cont, c)
    if cont.is_zero():
        return cont, coeffs
    prim = [divexact(c, cont) for c in coeffs]
    fc = Fraction(0)
    for c in prim:
        fc = frac_gcd(fc, c.content())
    if fc and fc != 1:
        prim = [c * (1 / fc) for c in prim]
    return cont, prim


def _list_degree(coeffs):
    d = len(coeffs) - 1
    while d >= 0 and coeffs[d].is_zero():
        d -= 1
    return d


def _pseudo_rem(A, B):
    """Pseudo-remainder of coefficient lists (univariate view, same vars)."""
    dA, dB = _list_degree(A), _list_degree(B)
    lb = B[dB]
    R = list(A)
    while True:
        dR = _list_degree(R)
        if dR < dB:
            return R[: max(dR + 1, 1)]
        lr = R[dR]
        shift = dR - dB
        R = [c * lb for c in R]
        for j in range(dB + 1):
            R[j + shift] = R[j + shift] - lr * B[j]
        R[dR] = MPoly.zero(lb.vars)


def poly_gcd(a: MPoly, b: MPoly) -> MPoly:
    """Primitive positive gcd; poly_gcd(0, 0) = 0."""
    if a.is_zero() and b.is_zero():
        return a
    if a.is_zero():
        return b.primitive_positive()
    if b.is_zero():
        return a.primitive_positive()
    a._check(b)
    main = None
    for v in a.vars:
        if a.degree(v) > 0 or b.degree(v) > 0:
            main = v
            break
    if main is None:
        return MPoly.const(a.vars, 1)
    A = a.as_univar(main)
    B = b.as_univar(main)
    contA, A = _list_primitive(A)
    contB, B = _list_primitive(B)
    gc = poly_gcd(contA, contB)
    if _list_degree(A) == 0 or _list_degree(B) == 0:
        return gc.primitive_positive() if not gc.is_zero() else MPoly.const(a.vars, 1)
    if _list_degree(A) < _list_degree(B):
        A, B = B, A
    while True:
        R = _pseudo_rem(A, B)
        if _list_degree(R) < 0:
            break
        _, R = _list_primitive(R)
        A, B = B, R
    pp = MPoly.from_univar(main, B)
    return (gc * pp).primitive_positive()


def resultant(a: MPoly, b: MPoly, var: str) -> MPoly:
    """Sylvester resultant in var, by fraction-free elimination.

    Rows built from a come first.  Both inputs must have positive degree
    in var.
    """
    a._check(b)
    m = a.degree(var)
    n = b.degree(var)
    if m <= 0 or n <= 0:
        raise DegreeZero("resultant needs positive degree in %r" % var)
    ca = a.as_univar(var)
    cb = b.as_univar(var)
    size = m + n
    zero = MPoly.zero(a.vars)
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(ca):
            row[i + (m - j)] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(cb):
            row[i + (n - j)] = c
        rows.append(row)
    return _bareiss_det(rows)


def _bareiss_det(rows):
    """Fraction-free determinant of a square MPoly matrix."""
    n = len(rows)
    vars = rows[0][0].vars
    M = [list(r) for r in rows]
    sign = 1
    prev = MPoly.const(vars, 1)
    for k in range(n - 1):
        if M[k][k].is_zero():
            pivot_row = None
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                return MPoly.zero(vars)
            M[k], M[pivot_row] = M[pivot_row], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[k][k] * M[i][j] - M[i][k] * M[k][j]
                M[i][j] = divexact(num, prev)
            M[i][k] = MPoly.zero(vars)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def discriminant(a: MPoly, var: str) -> MPoly:
    """Discriminant in var: (-1)^(n(n-1)/2) resultant(a, a', var) / lc.

    The sign factor makes deg-2 inputs come out as b^2 - 4ac.
    """
    d = a.degree(var)
    if d < 2:
        raise DegreeTooLow("discriminant needs degree >= 2 in %r" % var)
    da = a.derivative(var)
    res = resultant(a, da, var)
    lc = a.as_univar(var)[d]
    out = divexact(res, lc)
    if (d * (d - 1) // 2) % 2:
        out = -out
    return out


def squarefree_primitive(p: MPoly) -> MPoly:
    """Radical of p, content-free with positive leading coefficient."""
    if p.is_zero():
        raise ZeroInput("squarefree part of the zero polynomial")
    if p.is_constant():
        return MPoly.const(p.vars, 1)
    g = p
    for v in p.vars:
        if p.degree(v) > 0:
            g = poly_gcd(g, p.derivative(v))
    rad = divexact(p, g)
    return rad.primitive_positive()


def strip_monomials(p: MPoly):
    """Split p into (exponents, rest) with p = monomial(exponents) * rest.

    The exponent tuple is the largest monomial dividing every term; rest
    has a nonzero term of exponent 0 in each variable.
    """
    if p.is_zero():
        return (0,) * len(p.vars), p
    mins = None
    for e in p.terms:
        mins = e if mins is None else tuple(min(a, b) for a, b in zip(mins, e))
    if not any(mins):
        return mins, p
    t = {tuple(a - b for a, b in zip(e, mins)): c for e, c in p.terms.items()}
    return mins, MPoly(p.vars, t)


# ---- exact linear algebra ---------------------------------------------------


def nullspace(matrix):
    """Right-nullspace basis of a rational matrix (list of row lists).

    Returns a list of Fraction vectors; empty iff the matrix has full
    column rank.  Basis vectors follow the unit-free-variable convention.
    """
    if not matrix:
        return []
    rows = [[Fraction(x) for x in row] for row in matrix]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        basis.append(vec)
    return basis


def solve_linear(matrix, rhs):
    """One exact solution of matrix * x = rhs, or None if inconsistent."""
    rows = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0]) if matrix else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][ncols]
    return x


# ---- univariate factorization ------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factor_int(n, bound=10**6):
    """Trial-division factorization; returns (factors dict, complete flag)."""
    n = abs(n)
    factors = {}
    if n <= 1:
        return factors, True
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n and f <= bound:
        for p in (f, f + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        f += 6
    if n == 1:
        return factors, True
    if _is_probable_prime(n):
        factors[n] = factors.get(n, 0) + 1
        return factors, True
    return factors, False


def _divisors_from_factors(factors, limit=200000):
    divs = [1]
    for p, e in factors.items():
        new = []
        pk = 1
        for _ in range(e + 1):
            new.extend(d * pk for d in divs)
            pk *= p
            if len(new) > limit:
                return None
        divs = new
    return sorted(divs)


class FactorizationResult:
    """Outcome of univariate factoring over Q.

    unit * prod(factor^mult) * remainder reproduces the input; remainder
    is None when the split is complete and proved irreducible piecewise.
    """

    def __init__(self, unit, factors, remainder):
        self.unit = unit
        self.factors = factors
        self.remainder = remainder

    @property
    def complete(self):
        return self.remainder is None

    def __repr__(self):
        parts = ["%r^%d" % (f.to_str(), m) for f, m in self.factors]
        tail = "" if self.complete else " * [%s]" % self.remainder.to_str()
        return "Factorization(%s * %s%s)" % (self.unit, " * ".join(parts) or "1", tail)


def _uni_coeff_ints(p, var):
    cont = p.content()
    prim = p * (1 / cont)
    coeffs = [c.constant_value() for c in prim.as_univar(var)]
    return cont, [int(c) for c in coeffs]


def _eval_int(coeffs, x):
    v = 0
    for c in reversed(coeffs):
        v = v * x + c
    return v


def _deflate(coeffs, p, q):
    """Divide by (q*x - p) when p/q is a root; coeffs are ints."""
    n = len(coeffs) - 1
    out = [0] * n
    carry = coeffs[n]
    for k in range(n - 1, -1, -1):
        out[k], rem = divmod(carry, q)
        if rem:
            return None
        carry = coeffs[k] + out[k] * p
    if carry != 0:
        return None
    return out


def _rational_roots(coeffs):
    """All rational roots with multiplicity of a primitive integer coefficient list."""
    roots = []
    while len(coeffs) > 1:
        lead, trail = coeffs[-1], coeffs[0]
        fl, okl = _factor_int(lead)
        ft, okt = _factor_int(trail)
        dl = _divisors_from_factors(fl)
        dt = _divisors_from_factors(ft)
        if dl is None or dt is None or not (okl and okt):
            break
        found = None
        for q in dl:
            for p in dt:
                for sp in (p, -p):
                    if math.gcd(abs(sp), q) != 1:
                        continue
                    if _eval_int(coeffs, Fraction(sp, q)) == 0:
                        found = (sp, q)
                        break
                if found:
                    break
            if found:
                break
        if not found:
            return roots, coeffs, True
        mult = 0
        while True:
            nxt = _deflate(coeffs, *found)
            if nxt is None:
                break
            coeffs = nxt
            mult += 1
            if len(coeffs) == 1 or _eval_int(coeffs, Fraction(*found)) != 0:
                break
        if mult == 0:
            break
        roots.append((Fraction(*found), mult))
    return roots, coeffs, len(coeffs) == 1


def _kronecker_split(coeffs, max_coeff=10**8, max_combos=200000):
    """Try to find a nontrivial factor of degree <= 3; ints in, ints out."""
    deg = len(coeffs) - 1
    if deg < 4 or deg > 6 or max(abs(c) for c in coeffs) > max_coeff:
        return None
    for g in range(2, deg // 2 + 1):
        pts = list(range(-(g // 2), g - (g // 2) + 1))
        vals = [_eval_int(coeffs, x) for x in pts]
        if any(v == 0 for v in vals):
            return None
        div_sets = []
        total = 1
        for v in vals:
            fs, ok = _factor_int(abs(v))
            if not ok:
                return None
            ds = _divisors_from_factors(fs)
            if ds is None:
                return None
            signed = [d for d0 in ds for d in (d0, -d0)]
            div_sets.append(signed)
            total *= len(signed)
            if total > max_combos:
                return None
        for combo in _iproduct(*div_sets):
            cand = _interp_int(pts, combo, g)
            if cand is None or cand[-1] == 0:
                continue
            quo = _poly_divmod_int(coeffs, cand)
            if quo is not None:
                return cand, quo
    return None


def _interp_int(xs, ys, deg):
    """Integer Lagrange interpolation of degree deg, or None."""
    n = deg + 1
    mat = [[Fraction(x) ** k for k in range(n)] for x in xs]
    sol = solve_linear(mat, [Fraction(y) for y in ys])
    if sol is None or any(s.denominator != 1 for s in sol):
        return None
    return [int(s) for s in sol]


def _poly_divmod_int(a, b):
    """Quotient of integer coefficient lists if division is exact, else None."""
    a = list(a)
    db = len(b) - 1
    da = len(a) - 1
    if da < db:
        return None
    out = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        lead = a[k + db]
        if lead % b[db]:
            return None
        out[k] = lead // b[db]
        for j in range(db + 1):
            a[k + j] -= out[k] * b[j]
    if any(a):
        return None
    return out


def factor_univariate(p: MPoly, var: str) -> FactorizationResult:
    """Factor over Q: content, var powers, rational roots, small Kronecker splits.

    Residual quadratics and cubics without rational roots are irreducible and
    land in `factors`; anything the bounded search cannot split is returned as
    `remainder` (the UnfactoredRemainder case).
    """
    if p.is_zero():
        raise ZeroInput("cannot factor the zero polynomial")
    for v in p.vars:
        if v != var and p.degree(v) > 0:
            raise ValueError("factor_univariate got a multivariate input")
    unit = p.content()
    if p.leading_coeff() < 0:
        unit = -unit
    work = p * (1 / unit)
    factors = []
    x = MPoly.variable(p.vars, var)
    k = min((e[p.vars.index(var)] for e in work.terms), default=0)
    if k:
        factors.append((x, k))
        work = divexact(work, x**k)
    if work.is_constant():
        unit = unit * work.constant_value()
        return FactorizationResult(unit, factors, None)

    # squarefree split first so roots/Kronecker run on squarefree pieces
    sqf_parts = squarefree_decomposition(work, var)
    remainder = None
    for piece, mult in sqf_parts:
        cont, coeffs = _uni_coeff_ints(piece, var)
        if piece.leading_coeff() < 0:
            cont = -cont
            coeffs = [-c for c in coeffs]
        unit = unit * cont**mult
        roots, rest, roots_complete = _rational_roots(coeffs)
        for root, rmult in roots:
            lin = x * root.denominator - root.numerator
            factors.append((lin, rmult * mult))
        stack = [rest]
        while stack:
            cur = stack.pop()
            deg = len(cur) - 1
            if deg <= 0:
                if cur[0] != 1:
                    unit = unit * Fraction(cur[0]) ** mult
                continue
            poly = _ints_to_poly(cur, p.vars, var)
            if poly.leading_coeff() < 0:
                poly = -poly
                cur = [-c for c in cur]
                unit = unit * Fraction(-1) ** mult
            if deg <= 3 and roots_complete:
                # no rational root was missed, so degree 2 or 3 here is irreducible
                factors.append((poly, mult))
                continue
            split = _kronecker_split(cur) if deg >= 4 else None
            if split is None:
                rem_piece = poly**mult
                remainder = rem_piece if remainder is None else remainder * rem_piece
            else:
                stack.extend(split)
    factors.sort(key=lambda fm: (fm[0].total_degree(), fm[0].canonical_str()))
    return FactorizationResult(unit, factors, remainder)


def _ints_to_poly(coeffs, vars, var):
    x = MPoly.variable(vars, var)
    out = MPoly.zero(vars)
    for k, c in enumerate(coeffs):
        if c:
            out = out + x**k * c
    return out


def squarefree_decomposition(p, var):
    """Squarefree decomposition: [(piece, multiplicity), ...], pieces pairwise coprime."""
    g = poly_gcd(p, p.derivative(var))
    if g.is_constant():
        return [(p, 1)]
    out = []
    w = divexact(p, g)
    i = 1
    while w.degree(var) > 0:
        y = poly_gcd(w, g)
        z = divexact(w, y)
        if z.degree(var) > 0:
            out.append((z, i))
        w = y
        g = divexact(g, y) if not y.is_constant() else g
        i += 1
    return out


class RatFun:
    """Rational function num/den in lowest terms.

    The denominator is primitive with positive leading coefficient; the
    numerator absorbs the rational scale.  Construction normalizes.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        num._check(den)
        if num.is_zero():
            den = MPoly.const(num.vars, 1)
        else:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = divexact(num, g)
                den = divexact(den, g)
            c = den.content()
            if den.leading_coeff() < 0:
                c = -c
            num = num * (1 / c)
            den = den * (1 / c)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: MPoly):
        return cls(p, MPoly.const(p.vars, 1))

    @classmethod
    def const(cls, vars, c):
        return cls.from_poly(MPoly.const(vars, c))

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den.is_constant()

    def __add__(self, other):
        other = self._coerce(other)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def inverse(self):
        return RatFun(self.den, self.num)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFun(self.num**n, self.den**n)

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, MPoly):
            return RatFun.from_poly(other)
        return RatFun.const(self.vars, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, env) -> Fraction:
        d = self.den.evaluate(env)
        if d == 0:
            raise ZeroDivisionError("pole at %r" % (env,))
        return self.num.evaluate(env) / d

    def substitute_ratfun(self, mapping):
        """Compose with rational functions: var -> RatFun (shared target vars)."""
        sample = next(iter(mapping.values()))
        tvars = sample.vars
        one = RatFun.const(tvars, 1)

        def poly_image(p):
            out = RatFun.const(tvars, 0)
            cache = {}
            for e, c in p.terms.items():
                term = one * c
                for v, k in zip(p.vars, e):
                    if k:
                        if (v, k) not in cache:
                            base = mapping.get(v)
                            if base is None:
                                raise ValueError("unmapped variable %r" % v)
                            cache[(v, k)] = base**k
                        term = term * cache[(v, k)]
                out = out + term
            return out

        return poly_image(self.num) / poly_image(self.den)

    def shift(self, var, delta):
        return RatFun(self.num.shift(var, delta), self.den.shift(var, delta))

    def to_str(self):
        if self.is_poly():
            scale = self.den.constant_value()
            if scale == 1:
                return self.num.to_str()
        return "(%s)/(%s)" % (self.num.to_str(), self.den.to_str())

    def __repr__(self):
        return "RatFun(%s)" % self.to_str()
