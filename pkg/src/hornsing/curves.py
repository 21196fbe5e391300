"""Plane algebraic curves over the rationals.

A curve is the zero set of a polynomial, normalized on construction to its
squarefree primitive part so curve equality is polynomial equality.  The
toolkit checks rational parametrizations, compares curves pulled back through
rational changes of variables, locates affine singular points, certifies the
genus of curves quadratic in a chosen variable, and evaluates the j-invariant
of the two-cosine family of lattice singularity curves.
"""

from fractions import Fraction

from .exact import (
    MPoly,
    RatFun,
    ZeroInput,
    discriminant,
    divexact,
    factor_univariate,
    poly_gcd,
    resultant,
    squarefree_decomposition,
    squarefree_primitive,
)
from .exprio import expr_to_mpoly, expr_to_ratfun, parse_expr


class DegenerateMap(ValueError):
    """A substitution collapsed a curve to the zero polynomial."""


class NotQuadratic(ValueError):
    """Raised when a genus certificate needs degree two in the chosen variable."""


class Degenerate:
    """Marker for j-invariant arguments where the curve family degenerates."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Degenerate"


DEGENERATE = Degenerate()


class Curve:
    """Affine algebraic curve F = 0, stored squarefree and primitive."""

    __slots__ = ("poly",)

    def __init__(self, poly):
        if poly.is_zero():
            raise ZeroInput("the zero polynomial defines no curve")
        if poly.is_constant():
            raise ValueError("a nonzero constant defines no curve")
        self.poly = squarefree_primitive(poly)

    @classmethod
    def from_text(cls, text, vars):
        vars = tuple(vars)
        return cls(expr_to_mpoly(parse_expr(text, vars), vars))

    @property
    def vars(self):
        return self.poly.vars

    def __eq__(self, other):
        if not isinstance(other, Curve):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def to_str(self):
        return self.poly.to_str()

    def __repr__(self):
        return "Curve(%s)" % self.to_str()


def _is_constant_ratfun(r):
    return r.is_poly() and r.num.is_constant()


class Param:
    """Rational parametrization u -> (xp(u), yp(u)) of a plane curve."""

    __slots__ = ("xp", "yp")

    def __init__(self, xp, yp):
        if isinstance(xp, MPoly):
            xp = RatFun.from_poly(xp)
        if isinstance(yp, MPoly):
            yp = RatFun.from_poly(yp)
        xp.num._check(yp.num)
        if len(xp.vars) != 1:
            raise ValueError("parametrizations are univariate, got %r" % (xp.vars,))
        if _is_constant_ratfun(xp) and _is_constant_ratfun(yp):
            raise ValueError("a constant point is not a parametrization")
        self.xp = xp
        self.yp = yp

    @classmethod
    def from_text(cls, xtext, ytext, var="u"):
        vars = (var,)
        return cls(
            expr_to_ratfun(parse_expr(xtext, vars), vars),
            expr_to_ratfun(parse_expr(ytext, vars), vars),
        )

    @property
    def var(self):
        return self.xp.vars[0]

    def __repr__(self):
        return "Param(%s, %s)" % (self.xp.to_str(), self.yp.to_str())


def _plane_vars(curve):
    if len(curve.vars) != 2:
        raise ValueError("need a curve in two variables, got %r" % (curve.vars,))
    return curve.vars


def verify_parametrization(curve, param):
    """True when the parametrized point satisfies the curve identically."""
    x, y = _plane_vars(curve)
    image = RatFun.from_poly(curve.poly).substitute_ratfun({x: param.xp, y: param.yp})
    return image.is_zero()


def identity_map(vars):
    """Substitution sending each variable to itself."""
    vars = tuple(vars)
    return {v: RatFun.from_poly(MPoly.variable(vars, v)) for v in vars}


class MatchReport:
    """Outcome of comparing two curves pulled back to common variables.

    kind is "equal" (identical cleared numerators), "proportional"
    (left = constant * right), or "distinct" (common then holds the gcd of
    the squarefree parts).
    """

    __slots__ = ("kind", "constant", "common", "left", "right")

    def __init__(self, kind, constant, common, left, right):
        self.kind = kind
        self.constant = constant
        self.common = common
        self.left = left
        self.right = right

    def __repr__(self):
        if self.kind == "proportional":
            return "MatchReport(proportional, constant=%s)" % self.constant
        if self.kind == "distinct":
            return "MatchReport(distinct, gcd=%s)" % self.common.to_str()
        return "MatchReport(equal)"


def _pullback(curve, mapping):
    converted = {}
    for v, image in mapping.items():
        converted[v] = RatFun.from_poly(image) if isinstance(image, MPoly) else image
    image = RatFun.from_poly(curve.poly).substitute_ratfun(converted)
    if image.is_zero():
        raise DegenerateMap("substitution collapses %r to zero" % (curve,))
    return image.num


def substitute_compare(c1, map1, c2, map2):
    """Compare the numerators of two curves pulled back through rational maps."""
    n1 = _pullback(c1, map1)
    n2 = _pullback(c2, map2)
    if n1.vars != n2.vars:
        raise ValueError("substitutions target different variable sets")
    if n1 == n2:
        return MatchReport("equal", Fraction(1), squarefree_primitive(n1), n1, n2)
    if set(n1.terms) == set(n2.terms):
        c = n1.leading_coeff() / n2.leading_coeff()
        if n1 == n2 * c:
            return MatchReport("proportional", c, squarefree_primitive(n1), n1, n2)
    g = poly_gcd(squarefree_primitive(n1), squarefree_primitive(n2))
    return MatchReport("distinct", None, g, n1, n2)


def _rational_roots(p, var):
    """Rational roots of a polynomial in var: (roots, residual, complete)."""
    fr = factor_univariate(p, var)
    roots = set()
    residual = []
    for f, _mult in fr.factors:
        if f.degree(var) == 1:
            coeffs = f.as_univar(var)
            roots.add(-coeffs[0].constant_value() / coeffs[1].constant_value())
        else:
            residual.append(f)
    if not fr.complete:
        residual.append(fr.remainder)
    return roots, residual, fr.complete and not residual


def _coeff_content(p, var):
    """Gcd of the coefficients of p seen as a polynomial in var."""
    out = MPoly.zero(p.vars)
    for c in p.as_univar(var):
        out = poly_gcd(out, c)
        if out.is_constant() and not out.is_zero():
            break
    return out


class SingularPoints:
    """Rational affine singular points plus unresolved eliminant factors."""

    __slots__ = ("points", "residual", "complete")

    def __init__(self, points, residual, complete):
        self.points = tuple(points)
        self.residual = tuple(residual)
        self.complete = complete

    def __repr__(self):
        left = ", ".join("(%s, %s)" % p for p in self.points)
        tag = "complete" if self.complete else "partial"
        return "SingularPoints([%s], %s)" % (left, tag)


def _eliminant(G, parts, elim):
    """Gcd of the resultants of G with each part, eliminating elim."""
    pieces = []
    for h in parts:
        if h.is_zero():
            return None
        if h.degree(elim) == 0:
            pieces.append(h)
        else:
            pieces.append(resultant(G, h, elim))
    out = pieces[0]
    for h in pieces[1:]:
        out = poly_gcd(out, h)
    if out.is_zero():
        return None
    return out


def _core_singularities(G, x, y):
    """Singular points of a component with no x-only or y-only factors."""
    gx = G.derivative(x)
    gy = G.derivative(y)
    ex = _eliminant(G, (gx, gy), y)
    if ex is None:
        return set(), [G], False
    if ex.is_constant():
        return set(), [], True
    xs, residual, complete = _rational_roots(ex, x)
    points = set()
    for a in xs:
        sub = {x: MPoly.const(G.vars, a)}
        g = poly_gcd(poly_gcd(G.substitute(sub), gx.substitute(sub)), gy.substitute(sub))
        if g.is_constant():
            continue
        roots, res, ok = _rational_roots(g, y)
        residual += res
        complete = complete and ok
        points.update((a, b) for b in roots)
    return points, residual, complete


def affine_singular_points(curve):
    """Solve F = F_x = F_y = 0: rational points exactly, leftovers reported."""
    x, y = _plane_vars(curve)
    F = curve.poly
    cx = _coeff_content(F, y)
    rest = divexact(F, cx)
    cy = _coeff_content(rest, x)
    core = divexact(rest, cy)

    points = set()
    residual = []
    complete = True

    def line_roots(content, var):
        nonlocal complete
        if content.is_constant():
            return set()
        roots, res, ok = _rational_roots(content, var)
        residual.extend(res)
        complete = complete and ok
        return roots

    xs = line_roots(cx, x)
    ys = line_roots(cy, y)
    points.update((a, b) for a in xs for b in ys)

    if not core.is_constant():
        for a in xs:
            sect = core.substitute({x: MPoly.const(F.vars, a)})
            if not sect.is_constant():
                roots, res, ok = _rational_roots(sect, y)
                residual.extend(res)
                complete = complete and ok
                points.update((a, b) for b in roots)
        for b in ys:
            sect = core.substitute({y: MPoly.const(F.vars, b)})
            if not sect.is_constant():
                roots, res, ok = _rational_roots(sect, x)
                residual.extend(res)
                complete = complete and ok
                points.update((a, b) for a in roots)
        pts, res, ok = _core_singularities(core, x, y)
        points.update(pts)
        residual.extend(res)
        complete = complete and ok

    return SingularPoints(sorted(points), residual, complete)


class GenusCertificate:
    """Genus of a curve quadratic in one variable, from its fiber discriminant.

    The curve is birational to w^2 = odd_part, where odd_part collects the
    odd-multiplicity factors of the discriminant; the genus is read off the
    degree of odd_part.
    """

    __slots__ = ("genus", "var", "base_var", "discriminant", "odd_part")

    def __init__(self, genus, var, base_var, disc, odd_part):
        self.genus = genus
        self.var = var
        self.base_var = base_var
        self.discriminant = disc
        self.odd_part = odd_part

    def __repr__(self):
        return "GenusCertificate(genus=%d, %s^2 = %s)" % (
            self.genus,
            self.var,
            self.odd_part.to_str(),
        )


def genus_quadratic_fiber(curve, var):
    """Certify the genus of a curve of degree two in var."""
    names = _plane_vars(curve)
    if var not in names:
        raise ValueError("unknown variable %r" % var)
    F = curve.poly
    if F.degree(var) != 2:
        raise NotQuadratic("degree in %r is %d, not 2" % (var, F.degree(var)))
    base = names[0] if names[1] == var else names[1]
    D = discriminant(F, var)
    if D.is_zero():
        raise ValueError("squarefree curve with vanishing discriminant")
    odd = MPoly.const(F.vars, 1)
    if not D.is_constant():
        for piece, mult in squarefree_decomposition(D, base):
            if mult % 2:
                odd = odd * piece
        odd = odd.primitive_positive()
    deg = odd.degree(base)
    genus = 0 if deg <= 2 else (deg - 1) // 2
    return GenusCertificate(genus, var, base, D, odd)


def nickelian_j(u2, v2):
    """j-invariant at a cosine-squared pair; DEGENERATE where the family is not elliptic."""
    u2 = Fraction(u2)
    v2 = Fraction(v2)
    den = ((v2 - 1) * (u2 - 1) * (u2 - v2)) ** 2
    if den == 0:
        return DEGENERATE
    num = 256 * (u2 * u2 + v2 * v2 - u2 * v2 - u2 - v2 + 1) ** 3
    return num / den
