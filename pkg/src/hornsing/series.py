"""Truncated exact power series in one and two variables.

Double series come from two-direction term ratios (alpha1, alpha2) or from a
closed-form coefficient expression; they can be restricted along rational
curves t -> (x(t), y(t)) through the origin.  Univariate series support
Hadamard products and composition with rational maps fixing the origin.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import MPoly, RatFun
from .exprio import EvaluationError, eval_expr, expr_to_ratfun

NM = ("n", "m")


class IncompatibleSpec(Exception):
    """The two term ratios do not define a consistent double sequence."""


class RatioPole(Exception):
    """A term ratio has a vanishing denominator at a lattice point."""


class NonzeroAtOrigin(Exception):
    """A substitution map must vanish at t = 0."""


class InsufficientOrder(Exception):
    """The input series is too short for the requested output order."""


class OrderMismatch(Exception):
    """Termwise operations need operands of identical order."""


class UniSeries:
    """Coefficients a_0..a_N of a series known exactly through t^N."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if order < 0 or len(coeffs) != order + 1:
            raise ValueError("need exactly order+1 coefficients")
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order):
        return cls(order, [Fraction(0)] * (order + 1))

    @classmethod
    def geometric(cls, order):
        return cls(order, [Fraction(1)] * (order + 1))

    def coeff(self, k):
        if not 0 <= k <= self.order:
            raise ValueError("coefficient %d beyond order %d" % (k, self.order))
        return self.coeffs[k]

    def truncate(self, new_order):
        if new_order > self.order:
            raise InsufficientOrder(
                "have order %d, asked for %d" % (self.order, new_order)
            )
        return UniSeries(new_order, self.coeffs[: new_order + 1])

    def valuation(self):
        """Index of the first nonzero coefficient, None for the zero series."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def __eq__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, tuple(self.coeffs)))

    def __add__(self, other):
        n = min(self.order, other.order)
        return UniSeries(n, [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __sub__(self, other):
        n = min(self.order, other.order)
        return UniSeries(n, [self.coeffs[k] - other.coeffs[k] for k in range(n + 1)])

    def __mul__(self, other):
        if isinstance(other, UniSeries):
            n = min(self.order, other.order)
            return UniSeries(n, _mul_trunc(self.coeffs, other.coeffs, n))
        c = Fraction(other)
        return UniSeries(self.order, [a * c for a in self.coeffs])

    __rmul__ = __mul__

    def __neg__(self):
        return UniSeries(self.order, [-a for a in self.coeffs])

    def derivative(self):
        if self.order == 0:
            raise InsufficientOrder("cannot differentiate an order-0 series")
        return UniSeries(
            self.order - 1,
            [k * self.coeffs[k] for k in range(1, self.order + 1)],
        )

    def theta(self):
        """t * d/dt, which keeps the truncation order."""
        return UniSeries(self.order, [k * c for k, c in enumerate(self.coeffs)])

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return "UniSeries(order=%d; %s%s)" % (self.order, head, tail)


class BiSeries:
    """Coefficients c_{n,m} of a double series, exact for all n+m <= order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        if order < 0:
            raise ValueError("order must be nonnegative")
        clean = {}
        for (n, m), value in coeffs.items():
            if n < 0 or m < 0 or n + m > order:
                raise ValueError("index (%d, %d) outside order %d" % (n, m, order))
            value = Fraction(value)
            if value:
                clean[(n, m)] = value
        self.order = order
        self.coeffs = clean

    def coeff(self, n, m):
        if n < 0 or m < 0 or n + m > self.order:
            raise ValueError(
                "coefficient (%d, %d) beyond order %d" % (n, m, self.order)
            )
        return self.coeffs.get((n, m), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return "BiSeries(order=%d, %d nonzero terms)" % (
            self.order,
            len(self.coeffs),
        )


class HyperSpec:
    """Term ratios alpha1 = c_{n+1,m}/c_{n,m}, alpha2 = c_{n,m+1}/c_{n,m}.

    Both are rational functions in (n, m); the sequence is normalized by
    c_{0,0} = 1.
    """

    __slots__ = ("alpha1", "alpha2")

    def __init__(self, alpha1, alpha2):
        self.alpha1 = _rename_nm(alpha1)
        self.alpha2 = _rename_nm(alpha2)


def _rename_nm(r):
    if len(r.num.vars) != 2:
        raise ValueError("term ratios must be bivariate")
    if r.num.vars == NM:
        return r
    return RatFun(r.num.with_vars(NM), r.den.with_vars(NM))


def hyper_from_spec(spec):
    """Build a HyperSpec from a ratio-kind SpecFile, folding parameters."""
    if spec.kind != "ratio":
        raise ValueError("spec %r is not ratio-kind" % spec.name)
    a1 = expr_to_ratfun(spec.alpha1, spec.vars, spec.params)
    a2 = expr_to_ratfun(spec.alpha2, spec.vars, spec.params)
    return HyperSpec(a1, a2)


def check_compatibility(s):
    """True iff alpha2(n,m) alpha1(n,m+1) = alpha1(n,m) alpha2(n+1,m)."""
    left = s.alpha2 * s.alpha1.shift("m", 1)
    right = s.alpha1 * s.alpha2.shift("n", 1)
    return left == right


def _ratio_at(r, n, m):
    try:
        return r.evaluate({"n": Fraction(n), "m": Fraction(m)})
    except ZeroDivisionError:
        raise RatioPole(
            "ratio denominator vanishes at (n, m) = (%d, %d)" % (n, m)
        ) from None


def expand_from_ratios(s, order):
    """Walk (0,0) -> (n,0) -> (n,m), multiplying ratios along the way."""
    if not check_compatibility(s):
        raise IncompatibleSpec("the two term ratios fail the mixed-step identity")
    c = {(0, 0): Fraction(1)}
    for n in range(order):
        c[(n + 1, 0)] = c[(n, 0)] * _ratio_at(s.alpha1, n, 0)
    for n in range(order + 1):
        for m in range(order - n):
            c[(n, m + 1)] = c[(n, m)] * _ratio_at(s.alpha2, n, m)
    return BiSeries(order, c)


def expand_from_formula(f, order, consts=None, vars=NM):
    """Evaluate a closed-form coefficient expression on the triangle."""
    env = dict(consts or {})
    c = {}
    for n in range(order + 1):
        for m in range(order + 1 - n):
            env[vars[0]] = Fraction(n)
            env[vars[1]] = Fraction(m)
            c[(n, m)] = eval_expr(f, env)
    return BiSeries(order, c)


def expand_spec(spec, order):
    """Expand a SpecFile of either kind."""
    if spec.kind == "ratio":
        return expand_from_ratios(hyper_from_spec(spec), order)
    return expand_from_formula(spec.coeff, order, spec.params, spec.vars)


def _mul_trunc(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if i > order:
            break
        if not ai:
            continue
        top = order - i
        for j, bj in enumerate(b):
            if j > top:
                break
            if bj:
                out[i + j] += ai * bj
    return out


def ratfun_series(r, order):
    """Taylor coefficients of a univariate rational function at the origin."""
    if len(r.num.vars) != 1:
        raise ValueError("need a univariate rational function")
    var = r.num.vars[0]
    num = [p.constant_value() for p in r.num.as_univar(var)]
    den = [p.constant_value() for p in r.den.as_univar(var)]
    if den[0] == 0:
        raise NonzeroAtOrigin("map has a pole at the origin")
    num += [Fraction(0)] * (order + 1 - len(num))
    out = [Fraction(0)] * (order + 1)
    for k in range(order + 1):
        acc = num[k]
        for i in range(1, min(k, len(den) - 1) + 1):
            acc -= den[i] * out[k - i]
        out[k] = acc / den[0]
    return out


def _power_table(coeffs, order):
    """[map^0, map^1, ...] truncated at order, stopping once identically 0."""
    one = [Fraction(0)] * (order + 1)
    one[0] = Fraction(1)
    table = [one]
    val = next((k for k, c in enumerate(coeffs) if c), None)
    if val is None or val > order:
        return table
    power = list(coeffs)
    k = 1
    while k * val <= order:
        table.append(power)
        power = _mul_trunc(power, coeffs, order)
        k += 1
    return table


def restrict(b, xp, yp, order):
    """Coefficients of sum c_{n,m} xp(t)^n yp(t)^m through t^order.

    xp and yp are rational functions of one variable vanishing at 0.  The
    input order of b must cover every lattice point that can contribute:
    b.order >= ceil(order / min valuation), never silently truncated.
    """
    maps = []
    for r in (xp, yp):
        coeffs = ratfun_series(r, order)
        if coeffs[0] != 0:
            raise NonzeroAtOrigin("substitution map does not vanish at t = 0")
        maps.append(coeffs)
    vals = []
    for coeffs in maps:
        val = next((k for k, c in enumerate(coeffs) if c), None)
        if val is not None:
            vals.append(val)
    if vals:
        needed = -(-order // min(vals))
        if b.order < needed:
            raise InsufficientOrder(
                "restriction to t-order %d needs the double series through"
                " total degree %d, have %d" % (order, needed, b.order)
            )
    xpow = _power_table(maps[0], order)
    ypow = _power_table(maps[1], order)
    total = [Fraction(0)] * (order + 1)
    for n in range(len(xpow)):
        row = [Fraction(0)] * (order + 1)
        nonzero = False
        for m in range(len(ypow)):
            if n + m > b.order:
                break
            c = b.coeff(n, m)
            if not c:
                continue
            ym = ypow[m]
            for k in range(order + 1):
                if ym[k]:
                    row[k] += c * ym[k]
            nonzero = True
        if nonzero:
            xn = xpow[n]
            for k, value in enumerate(_mul_trunc(xn, row, order)):
                total[k] += value
    return UniSeries(order, total)


def hadamard(a, b):
    """Termwise product of two series of identical order."""
    if a.order != b.order:
        raise OrderMismatch("orders %d and %d differ" % (a.order, b.order))
    return UniSeries(a.order, [x * y for x, y in zip(a.coeffs, b.coeffs)])


def compose_rational(a, g, order):
    """a(g(t)) through t^order for a rational g with g(0) = 0."""
    gc = ratfun_series(g, order)
    if gc[0] != 0:
        raise NonzeroAtOrigin("inner map does not vanish at t = 0")
    val = next((k for k, c in enumerate(gc) if c), None)
    if val is None:
        out = [Fraction(0)] * (order + 1)
        out[0] = a.coeff(0)
        return UniSeries(order, out)
    kmax = order // val
    if a.order < kmax:
        raise InsufficientOrder(
            "composition to order %d needs %d outer coefficients, have %d"
            % (order, kmax, a.order)
        )
    acc = [Fraction(0)] * (order + 1)
    acc[0] = a.coeffs[kmax]
    for k in range(kmax - 1, -1, -1):
        acc = _mul_trunc(acc, gc, order)
        acc[0] += a.coeffs[k]
    return UniSeries(order, acc)


def diagonal(b):
    """The single-variable diagonal sums a_k = sum_{n+m=k} c_{n,m}."""
    out = [Fraction(0)] * (b.order + 1)
    for (n, m), c in b.coeffs.items():
        out[n + m] += c
    return UniSeries(b.order, out)


def uniseries_from_entries(entries):
    """Build from series-file entries with single-exponent keys."""
    order = max(e[0] for e in entries)
    out = [Fraction(0)] * (order + 1)
    for (k,), value in entries.items():
        out[k] = Fraction(value)
    return UniSeries(order, out)


def biseries_from_entries(entries):
    """Build from series-file entries with exponent-pair keys."""
    order = max(n + m for (n, m) in entries)
    return BiSeries(order, dict(entries))


def uniseries_entries(u):
    return {(k,): c for k, c in enumerate(u.coeffs)}
