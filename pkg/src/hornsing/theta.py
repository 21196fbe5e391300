"""Theta-operator algebra on exact truncated series.

An operator is a sum of terms x^a y^b * Q(theta_x, theta_y) with the
monomial factors on the left (normal form); theta_v = v d/dv acts on
monomials as an eigenvalue and on powers of ln(v) by lowering.  The module
applies operators to series, converts them to lattice recurrences, converts
univariate operators between D-form and theta-form, and computes the finite
space of formal log-series solutions of a system.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exact import MPoly
from .exprio import format_operator_text, parse_operator_text
from .series import BiSeries, InsufficientOrder, UniSeries

NM = ("n", "m")


class ThetaOp:
    """Normal form sum of shift-monomial times theta-polynomial terms."""

    __slots__ = ("vars", "theta_vars", "terms")

    def __init__(self, vars, terms):
        vars = tuple(vars)
        if len(vars) not in (1, 2):
            raise ValueError("operators act on one or two variables")
        theta = tuple("t" + v for v in vars)
        merged = {}
        for exps, q in terms:
            exps = tuple(exps)
            if len(exps) != len(vars) or any(e < 0 for e in exps):
                raise ValueError("bad shift exponents %r" % (exps,))
            if q.vars != theta:
                q = q.with_vars(theta) if len(q.vars) == len(theta) else q
            if q.vars != theta:
                raise ValueError("theta polynomial must live in %r" % (theta,))
            merged[exps] = merged.get(exps, MPoly.zero(theta)) + q
        self.vars = vars
        self.theta_vars = theta
        self.terms = tuple(
            (exps, q)
            for exps, q in sorted(merged.items(), key=lambda kv: (sum(kv[0]), kv[0]))
            if not q.is_zero()
        )

    @classmethod
    def from_text(cls, text):
        vars, terms = parse_operator_text(text)
        return cls(vars, terms)

    def to_text(self):
        return format_operator_text(self.vars, list(self.terms))

    @property
    def max_shift(self):
        return max((sum(e) for e, _ in self.terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, ThetaOp):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, self.terms))

    def __repr__(self):
        return "ThetaOp(%r, %d terms)" % (self.vars, len(self.terms))


class PdeSystem:
    """A nonempty family of operators in the same variables."""

    __slots__ = ("ops",)

    def __init__(self, ops):
        ops = tuple(ops)
        if not ops:
            raise ValueError("a system needs at least one operator")
        if len({op.vars for op in ops}) != 1:
            raise ValueError("all operators must share their variables")
        self.ops = ops

    @property
    def vars(self):
        return self.ops[0].vars

    @property
    def max_shift(self):
        return max(op.max_shift for op in self.ops)


class LogSeries:
    """Sum of series coefficients times products of log powers.

    parts maps a log-power tuple (one entry per variable) to the series
    multiplying ln(x)^i [* ln(y)^j]; all parts share one truncation order.
    """

    __slots__ = ("order", "parts")

    def __init__(self, order, parts):
        self.order = order
        self.parts = {
            tuple(idx): s for idx, s in parts.items() if not _series_is_zero(s)
        }

    def part(self, *idx):
        key = tuple(idx)
        if key in self.parts:
            return self.parts[key]
        width = len(next(iter(self.parts))) if self.parts else len(key)
        if len(key) != width:
            raise ValueError("log index %r has the wrong arity" % (key,))
        return None

    def analytic_part(self):
        width = len(next(iter(self.parts))) if self.parts else 1
        return self.parts.get((0,) * width)

    def log_support(self):
        return sorted(self.parts)

    def __eq__(self, other):
        if not isinstance(other, LogSeries):
            return NotImplemented
        return self.order == other.order and self.parts == other.parts

    def __repr__(self):
        return "LogSeries(order=%d, logs=%s)" % (self.order, sorted(self.parts))


def _series_is_zero(s):
    if isinstance(s, BiSeries):
        return not s.coeffs
    return all(c == 0 for c in s.coeffs)


def _theta_env(theta_vars, point):
    return {tv: Fraction(p) for tv, p in zip(theta_vars, point)}


def apply(op, s):
    """Apply op to a plain series; the result order shrinks by max shift."""
    if len(op.vars) == 2:
        if not isinstance(s, BiSeries):
            raise TypeError("two-variable operator needs a BiSeries")
        out_order = s.order - op.max_shift
        if out_order < 0:
            raise InsufficientOrder("series order below the operator shift")
        out = {}
        for exps, q in op.terms:
            a, b = exps
            for (n, m), c in s.coeffs.items():
                p, r = n + a, m + b
                if p + r > out_order:
                    continue
                w = q.evaluate(_theta_env(op.theta_vars, (n, m)))
                if w:
                    key = (p, r)
                    out[key] = out.get(key, Fraction(0)) + w * c
        return BiSeries(out_order, out)
    if not isinstance(s, UniSeries):
        raise TypeError("one-variable operator needs a UniSeries")
    out_order = s.order - op.max_shift
    if out_order < 0:
        raise InsufficientOrder("series order below the operator shift")
    out = [Fraction(0)] * (out_order + 1)
    for exps, q in op.terms:
        a = exps[0]
        for n, c in enumerate(s.coeffs):
            if not c or n + a > out_order:
                continue
            w = q.evaluate(_theta_env(op.theta_vars, (n,)))
            if w:
                out[n + a] += w * c
    return UniSeries(out_order, out)


def annihilates(sys, s):
    """True iff every operator sends s to zero through its validity order.

    Requires at least ten checked orders beyond the largest shift.
    """
    if s.order < 10 + sys.max_shift:
        raise InsufficientOrder(
            "need series order >= %d for a trustworthy annihilation check"
            % (10 + sys.max_shift)
        )
    return all(_series_is_zero(apply(op, s)) for op in sys.ops)


def to_recurrence(op):
    """Lattice relation sum Q_{a,b}(n-a, m-b) c_{n-a,m-b} = 0 equivalent to op."""
    if len(op.vars) == 2:
        idx = tuple(MPoly.variable(NM, v) for v in NM)
        out = []
        for (a, b), q in op.terms:
            mapping = {
                op.theta_vars[0]: idx[0] - a,
                op.theta_vars[1]: idx[1] - b,
            }
            out.append((a, b, q.substitute(mapping, NM)))
        return out
    nvar = ("n",)
    n = MPoly.variable(nvar, "n")
    out = []
    for (a,), q in op.terms:
        out.append((a, q.substitute({op.theta_vars[0]: n - a}, nvar)))
    return out


# ---------------------------------------------------------------------------
# D-form conversions (univariate)


def _falling(i, s):
    out = Fraction(1)
    for r in range(s):
        out *= i - r
    return out


def _falling_poly(theta, count):
    out = MPoly.const(theta.vars, 1)
    for r in range(count):
        out = out * (theta - r)
    return out


def theta_from_dform(var, coeffs):
    """Normal form of sum p_j(t) D^j via t^k D^k = theta(theta-1)...(theta-k+1).

    The operator is premultiplied by the smallest power of t making every
    shift nonnegative, which does not change what it annihilates.
    """
    tvar = ("t" + var,)
    theta = MPoly.variable(tvar, "t" + var)
    raw = []
    for j, p in enumerate(coeffs):
        if p.is_zero():
            continue
        for exps, c in p.terms.items():
            raw.append((exps[0] - j, j, c))
    if not raw:
        raise ValueError("zero operator")
    lift = max(0, -min(e for e, _, _ in raw))
    acc = {}
    for e, j, c in raw:
        a = (e + lift,)
        q = _falling_poly(theta, j) * c
        acc[a] = acc.get(a, MPoly.zero(tvar)) + q
    return ThetaOp((var,), list(acc.items()))


def _stirling2(rows):
    table = [[Fraction(1)]]
    for r in range(1, rows + 1):
        prev = table[-1]
        row = [Fraction(0)] * (r + 1)
        for j in range(r):
            row[j] += j * prev[j]
            row[j + 1] += prev[j]
        table.append(row)
    return table


def dform_from_theta(op):
    """Coefficient list [p_0..p_r] with sum p_j(t) D^j equal to op."""
    if len(op.vars) != 1:
        raise ValueError("D-form conversion is univariate")
    var = op.vars[0]
    uv = (var,)
    t = MPoly.variable(uv, var)
    rmax = max(q.total_degree() for _, q in op.terms)
    s2 = _stirling2(rmax)
    out = [MPoly.zero(uv) for _ in range(rmax + 1)]
    for (a,), q in op.terms:
        for r, qr in enumerate(q.as_univar(op.theta_vars[0])):
            c = qr.constant_value() if not qr.is_zero() else Fraction(0)
            if not c:
                continue
            for j in range(r + 1):
                w = s2[r][j]
                if w:
                    out[j] = out[j] + c * w * t ** (a + j)
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    return var, out


# ---------------------------------------------------------------------------
# Formal log-series solutions


def _log_indices(width, max_log):
    """Log powers up to max_log in each variable separately."""
    if width == 1:
        return [(i,) for i in range(max_log + 1)]
    return [
        (i, j)
        for i in range(max_log + 1)
        for j in range(max_log + 1)
    ]


def _monos(width, degree):
    if width == 1:
        return [(degree,)]
    return [(n, degree - n) for n in range(degree, -1, -1)]


def _scaled_partials(q, theta_vars, max_log):
    """{(s, t): d^s d^t q / (s! t!)} up to max_log in each direction."""
    out = {}
    width = len(theta_vars)
    base = {(0,) * width: q}
    out.update(base)
    frontier = dict(base)
    # Breadth-first differentiation; each step raises one component.
    changed = True
    while changed:
        changed = False
        new = {}
        for idx, poly in frontier.items():
            for axis in range(width):
                nidx = tuple(v + (1 if k == axis else 0) for k, v in enumerate(idx))
                if max(nidx) > max_log or nidx in out or nidx in new:
                    continue
                d = poly.derivative(theta_vars[axis]) * Fraction(1, nidx[axis])
                new[nidx] = d
                changed = True
        out.update(new)
        frontier = new
    return {idx: poly for idx, poly in out.items() if not poly.is_zero()}


def _vec_sub_everywhere(store_list, pivot, rhs):
    for store in store_list:
        for vec in store.values():
            if pivot in vec:
                c = vec.pop(pivot)
                for q, w in rhs.items():
                    nv = vec.get(q, Fraction(0)) + c * w
                    if nv:
                        vec[q] = nv
                    elif q in vec:
                        del vec[q]


def log_basis(sys, order, max_log):
    """Dimension and echelonized basis of formal log-series solutions.

    Substitutes sum H_{i,j} ln(x)^i ln(y)^j with series coefficients unknown
    through total degree `order`, solves degree by degree, and requires the
    dimension to be unchanged over the last three degrees.
    """
    if max_log < 0:
        raise ValueError("max_log must be nonnegative")
    width = len(sys.vars)
    theta_vars = sys.ops[0].theta_vars
    logidx = _log_indices(width, max_log)
    logset = set(logidx)
    partials = [
        [(exps, _scaled_partials(q, theta_vars, max_log)) for exps, q in op.terms]
        for op in sys.ops
    ]

    coeffs = {}
    solved = {}
    free = []
    next_pid = 0
    dims = []

    for degree in range(order + 1):
        for li in logidx:
            for mono in _monos(width, degree):
                coeffs[(li, mono)] = {next_pid: Fraction(1)}
                free.append(next_pid)
                next_pid += 1
        for op_terms in partials:
            for li in logidx:
                for mono in _monos(width, degree):
                    vec = {}
                    for exps, table in op_terms:
                        src_mono = tuple(p - a for p, a in zip(mono, exps))
                        if any(v < 0 for v in src_mono):
                            continue
                        env = _theta_env(theta_vars, src_mono)
                        for sidx, poly in table.items():
                            src_log = tuple(l + s for l, s in zip(li, sidx))
                            if src_log not in logset:
                                continue
                            w = poly.evaluate(env)
                            if not w:
                                continue
                            for l, s in zip(src_log, sidx):
                                w *= _falling(l, s)
                            if not w:
                                continue
                            for pid, pc in coeffs[(src_log, src_mono)].items():
                                nv = vec.get(pid, Fraction(0)) + w * pc
                                if nv:
                                    vec[pid] = nv
                                elif pid in vec:
                                    del vec[pid]
                    if not vec:
                        continue
                    pivot = max(vec)
                    pc = vec.pop(pivot)
                    rhs = {q: -w / pc for q, w in vec.items()}
                    solved[pivot] = rhs
                    free.remove(pivot)
                    _vec_sub_everywhere((coeffs, solved), pivot, rhs)
        dims.append(len(free))

    if len(dims) < 3 or not dims[-1] == dims[-2] == dims[-3]:
        raise InsufficientOrder(
            "solution dimension still moving at order %d: %s"
            % (order, dims[-3:])
        )

    # Canonical basis: echelonize with log monomials ordered by
    # (total log degree, first log power) descending, series monomials
    # by graded order ascending inside each log block.
    li_order = sorted(logidx, key=lambda li: (sum(li), li), reverse=True)
    columns = [
        (li, mono)
        for li in li_order
        for d in range(order + 1)
        for mono in sorted(_monos(width, d))
    ]
    rows = []
    for pid in free:
        rows.append([coeffs[key].get(pid, Fraction(0)) for key in columns])
    rows = _rref(rows)

    basis = []
    for row in rows:
        parts = {}
        for value, (li, mono) in zip(row, columns):
            if value:
                parts.setdefault(li, {})[mono] = value
        built = {}
        for li, data in parts.items():
            if width == 2:
                built[li] = BiSeries(order, data)
            else:
                coeff_list = [Fraction(0)] * (order + 1)
                for (k,), v in data.items():
                    coeff_list[k] = v
                built[li] = UniSeries(order, coeff_list)
        basis.append(LogSeries(order, built))
    return len(basis), basis


def _rref(rows):
    rows = [list(r) for r in rows if any(r)]
    pivot_cols = []
    out = []
    for row in rows:
        for prow, pcol in zip(out, pivot_cols):
            if row[pcol]:
                c = row[pcol]
                row = [a - c * b for a, b in zip(row, prow)]
        col = next((j for j, v in enumerate(row) if v), None)
        if col is None:
            continue
        inv = row[col]
        row = [v / inv for v in row]
        out.append(row)
        pivot_cols.append(col)
    # Back-substitute to clear pivots above, then order by pivot column.
    for i in range(len(out)):
        for j in range(len(out)):
            if i != j and out[j][pivot_cols[i]]:
                c = out[j][pivot_cols[i]]
                out[j] = [a - c * b for a, b in zip(out[j], out[i])]
    paired = sorted(zip(pivot_cols, out))
    return [row for _, row in paired]
