"""Sparse multivariate polynomials over an exact coefficient field.

A ring is a (field, variable names) descriptor; a polynomial is a map from
exponent tuples to nonzero coefficients.  The module also provides the
monomial orders used by the Groebner and local-standard-basis engines, the
power substitution x_i -> x_i^k, affine chart translation, Hessians, and a
text grammar with a canonical formatter.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .exactnum import (
    QQ,
    FieldMismatchError,
    NumberFieldElement,
    RationalField,
)


class PolySyntaxError(ValueError):
    """Parse failure, carrying the offending position."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class UnknownVariableError(ValueError):
    def __init__(self, name: str, position: int = -1):
        self.name = name
        self.position = position
        super().__init__(f"unknown variable {name!r}")


class ChartCoordinateZeroError(ValueError):
    """Raised when dehomogenizing at a chart where the center vanishes."""


class SingularMatrixError(ValueError):
    """Raised by linear_change for a non-invertible substitution matrix."""


class PolyRing:
    """Descriptor for field + named variables; polynomials carry one."""

    __slots__ = ("field", "names", "nvars", "_vars", "_index")

    def __init__(self, field, names):
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)
        self._index = {n: i for i, n in enumerate(self.names)}
        self._vars = None

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.names == other.names)

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {', '.join(self.names)})"

    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def one(self) -> "MPoly":
        return MPoly(self, {(0,) * self.nvars: self.field.one})

    def constant(self, c) -> "MPoly":
        c = self.field.coerce(c)
        if not c:
            return self.zero()
        return MPoly(self, {(0,) * self.nvars: c})

    def variables(self):
        if self._vars is None:
            vs = []
            for i in range(self.nvars):
                e = [0] * self.nvars
                e[i] = 1
                vs.append(MPoly(self, {tuple(e): self.field.one}))
            self._vars = tuple(vs)
        return self._vars

    def monomial(self, exps, coeff=1) -> "MPoly":
        c = self.field.coerce(coeff)
        if not c:
            return self.zero()
        return MPoly(self, {tuple(exps): c})

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(name) from None


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """Total order on exponent tuples exposed as a sort key function.

    ``is_global`` marks well-orders (1 smallest); the local order ranks 1
    above every variable, as the tangent-cone algorithm requires.
    """

    name = "order"
    is_global = True

    def key(self, exps):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class Grevlex(MonomialOrder):
    name = "grevlex"

    def key(self, exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))


class Lex(MonomialOrder):
    name = "lex"

    def key(self, exps):
        return tuple(exps)


class BlockElim(MonomialOrder):
    """Eliminate the first ``nfirst`` variables: grevlex on the block, then
    grevlex on the rest."""

    def __init__(self, nfirst: int):
        self.nfirst = nfirst
        self.name = f"block-elim({nfirst})"

    def key(self, exps):
        a, b = exps[: self.nfirst], exps[self.nfirst:]
        return (sum(a), tuple(-e for e in reversed(a)),
                sum(b), tuple(-e for e in reversed(b)))


class LocalNegGrevlex(MonomialOrder):
    """Negative-degree grevlex; the leading term has lowest total degree."""

    name = "local-negative-grevlex"
    is_global = False

    def key(self, exps):
        return (-sum(exps), tuple(-e for e in reversed(exps)))


GREVLEX = Grevlex()
LEX = Lex()
LOCAL_ORDER = LocalNegGrevlex()


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class MPoly:
    """Immutable sparse polynomial: {exponent tuple: nonzero coefficient}."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict, _clean: bool = False):
        self.ring = ring
        if _clean:
            self.terms = terms
        else:
            self.terms = {e: c for e, c in terms.items() if c}

    # -- basics ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.ring == other.ring and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def total_degree(self) -> int:
        """-1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def num_terms(self) -> int:
        return len(self.terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def leading(self, order: MonomialOrder = GREVLEX):
        """(exponent tuple, coefficient) of the order-leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    # -- arithmetic ----------------------------------------------------------

    def _check_ring(self, other: "MPoly"):
        if self.ring != other.ring:
            raise FieldMismatchError("polynomials from different rings")

    def __add__(self, other):
        if not isinstance(other, MPoly):
            return self + self.ring.constant(other)
        self._check_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            return self - self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = self.ring.field.coerce(other)
            if not c:
                return self.ring.zero()
            return MPoly(self.ring, {e: co * c for e, co in self.terms.items()},
                         _clean=True)
        self._check_ring(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e)
                out[e] = ca * cb if s is None else s + ca * cb
        return MPoly(self.ring, {e: c for e, c in out.items() if c}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def map_coefficients(self, fn, ring=None) -> "MPoly":
        ring = ring or self.ring
        return MPoly(ring, {e: fn(c) for e, c in self.terms.items()})

    def truncate_degree(self, maxdeg: int) -> "MPoly":
        """Drop all terms of total degree greater than maxdeg."""
        return MPoly(self.ring,
                     {e: c for e, c in self.terms.items() if sum(e) <= maxdeg},
                     _clean=True)

    # -- calculus and substitutions ------------------------------------------

    def partial_derivative(self, i: int) -> "MPoly":
        """Formal derivative with respect to the i-th variable (0-based)."""
        if not 0 <= i < self.ring.nvars:
            raise IndexError(f"variable index {i} out of range")
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1:]
                out[e2] = c * k
        return MPoly(self.ring, out)

    def substitute_powers(self, k: int) -> "MPoly":
        """f(x_1^k, ..., x_n^k); multiplies every exponent by k."""
        if k < 1:
            raise ValueError("power substitution requires k >= 1")
        if k == 1:
            return self
        return MPoly(self.ring,
                     {tuple(x * k for x in e): c for e, c in self.terms.items()},
                     _clean=True)

    def evaluate(self, point):
        """Exact value at a point with coordinates in a common field."""
        if len(point) != self.ring.nvars:
            raise ValueError("coordinate count does not match the ring")
        field = _field_of_point(point, self.ring)
        zero = field.zero if not isinstance(field, RationalField) else Fraction(0)
        pows = [{} for _ in range(self.ring.nvars)]
        acc = zero
        for e, c in self.terms.items():
            val = field.coerce(c) if isinstance(field, RationalField) else field.coerce(c)
            term = val
            for i, k in enumerate(e):
                if k:
                    pk = pows[i].get(k)
                    if pk is None:
                        pk = point[i] ** k
                        pows[i][k] = pk
                    term = term * pk
            acc = acc + term
        return acc

    def substitute(self, assignment: dict, max_degree: int | None = None) -> "MPoly":
        """Substitute polynomials for variables (indices -> MPoly).

        Unlisted variables stay themselves.  If max_degree is given, the
        result is truncated beyond that total degree throughout.
        """
        ring = None
        for v in assignment.values():
            ring = v.ring
            break
        ring = ring or self.ring
        vars_ = ring.variables()
        images = []
        for i in range(self.ring.nvars):
            if i in assignment:
                images.append(assignment[i])
            else:
                images.append(vars_[i])
        out = ring.zero()
        powcache = [dict() for _ in range(self.ring.nvars)]
        for e, c in self.terms.items():
            term = ring.constant(c)
            for i, k in enumerate(e):
                if not k:
                    continue
                pk = powcache[i].get(k)
                if pk is None:
                    pk = images[i] ** k
                    if max_degree is not None:
                        pk = pk.truncate_degree(max_degree)
                    powcache[i][k] = pk
                term = term * pk
                if max_degree is not None:
                    term = term.truncate_degree(max_degree)
                if term.is_zero():
                    break
            out = out + term
        return out

    def graded_component(self, d: int) -> "MPoly":
        return MPoly(self.ring,
                     {e: c for e, c in self.terms.items() if sum(e) == d},
                     _clean=True)

    def linear_change(self, matrix) -> "MPoly":
        """Compose with x -> M x; the matrix must be invertible."""
        n = self.ring.nvars
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("matrix shape does not match the ring")
        coerced = [[self.ring.field.coerce(x) for x in row] for row in matrix]
        if not _det_nonzero(coerced, self.ring.field):
            raise SingularMatrixError("substitution matrix is singular")
        vars_ = self.ring.variables()
        images = {}
        for i in range(n):
            form = self.ring.zero()
            for j in range(n):
                if coerced[i][j]:
                    form = form + vars_[j] * coerced[i][j]
            images[i] = form
        return self.substitute(images)

    def local_chart(self, chart: int, center, max_degree: int | None = None,
                    names=("x", "y", "z")) -> "MPoly":
        """Dehomogenize at the chart variable and translate the center to 0.

        ``center`` is a projective point (sequence of field elements) whose
        chart coordinate must be nonzero.  The result lives in a ring with
        one fewer variable; its constant term vanishes exactly when the
        center lies on the hypersurface.
        """
        n = self.ring.nvars
        if not 0 <= chart < n:
            raise IndexError("chart index out of range")
        field = _field_of_point(center, self.ring)
        cc = [field.coerce(x) for x in center]
        if not cc[chart]:
            raise ChartCoordinateZeroError(
                f"center has zero coordinate in chart {chart}")
        inv = (Fraction(1) / cc[chart]) if isinstance(cc[chart], Fraction) \
            else cc[chart].inverse()
        affine_center = [cc[j] * inv for j in range(n) if j != chart]
        local_names = tuple(names[: n - 1]) if len(names) >= n - 1 else tuple(
            f"y{i+1}" for i in range(n - 1))
        target = PolyRing(field, local_names)
        tvars = target.variables()
        # shifted images: variable j -> y_j + c_j, chart variable -> 1
        images = []
        k = 0
        for j in range(n):
            if j == chart:
                images.append(None)
            else:
                images.append(tvars[k] + target.constant(affine_center[k]))
                k += 1
        out = target.zero()
        powcache = [dict() for _ in range(n)]
        for e, c in self.terms.items():
            term = target.constant(c)
            for j, kexp in enumerate(e):
                if not kexp or j == chart:
                    continue
                pk = powcache[j].get(kexp)
                if pk is None:
                    pk = images[j] ** kexp
                    if max_degree is not None:
                        pk = pk.truncate_degree(max_degree)
                    powcache[j][kexp] = pk
                term = term * pk
                if max_degree is not None:
                    term = term.truncate_degree(max_degree)
                if term.is_zero():
                    break
            out = out + term
        return out

    def hessian(self):
        """Symmetric matrix of second partials, as polynomials."""
        n = self.ring.nvars
        rows = []
        for i in range(n):
            di = self.partial_derivative(i)
            rows.append([di.partial_derivative(j) for j in range(n)])
        return rows

    def hessian_at_origin(self):
        """Hessian evaluated at 0, read off the quadratic part directly."""
        n = self.ring.nvars
        f = self.ring.field
        H = [[f.zero for _ in range(n)] for _ in range(n)]
        for e, c in self.terms.items():
            if sum(e) != 2:
                continue
            support = [i for i, k in enumerate(e) if k]
            if len(support) == 1:
                i = support[0]
                H[i][i] = c * 2
            else:
                i, j = support
                H[i][j] = c
                H[j][i] = c
        return H

    # -- text form -----------------------------------------------------------

    def format(self) -> str:
        return format_poly(self)

    def __repr__(self):
        s = format_poly(self)
        return s if len(s) <= 120 else s[:117] + "..."


def _field_of_point(point, ring):
    for x in point:
        if isinstance(x, NumberFieldElement):
            return x.parent
    return ring.field


def _det_nonzero(matrix, field) -> bool:
    n = len(matrix)
    m = [row[:] for row in matrix]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            return False
        m[col], m[piv] = m[piv], m[col]
        inv = (Fraction(1) / m[col][col]) if isinstance(m[col][col], Fraction) \
            else m[col][col].inverse()
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return True


# ---------------------------------------------------------------------------
# Parsing and canonical formatting
# ---------------------------------------------------------------------------
#
# Grammar:  poly  = term ((" + " | " - ") term)*   with optional leading "-"
#           term  = [coeff "*"]? factor ("*" factor)*   |   coeff
#           factor = var ("^" exponent)?
#           coeff = integer | integer "/" integer | "(" nf-poly ")"
# Whitespace around operators is optional on input; the formatter emits the
# canonical spacing with terms in descending grevlex order.

def parse_poly(text: str, ring: PolyRing) -> MPoly:
    parser = _Parser(text, ring)
    return parser.parse()


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.pos = 0

    def error(self, msg):
        raise PolySyntaxError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\n":
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> MPoly:
        acc = self.ring.zero()
        sign = 1
        ch = self.peek()
        if ch == "-":
            sign = -1
            self.pos += 1
        elif ch == "+":
            self.pos += 1
        while True:
            term = self.parse_term()
            acc = acc + term * sign if sign < 0 else acc + term
            ch = self.peek()
            if not ch:
                break
            if ch == "+":
                sign = 1
                self.pos += 1
            elif ch == "-":
                sign = -1
                self.pos += 1
            else:
                self.error(f"expected '+' or '-', found {ch!r}")
        return acc

    def parse_term(self) -> MPoly:
        coeff = None
        exps = [0] * self.ring.nvars
        saw_factor = False
        while True:
            ch = self.peek()
            if ch.isdigit():
                if saw_factor or coeff is not None:
                    self.error("unexpected number")
                coeff = self.parse_rational()
            elif ch == "(":
                if saw_factor or coeff is not None:
                    self.error("unexpected coefficient group")
                coeff = self.parse_nf_coeff()
            elif ch.isalpha() or ch == "_":
                name, exp = self.parse_factor()
                try:
                    idx = self.ring.index_of(name)
                except UnknownVariableError:
                    raise UnknownVariableError(name, self.pos) from None
                exps[idx] += exp
                saw_factor = True
            else:
                self.error(f"expected a term, found {ch!r}")
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                continue
            break
        if coeff is None:
            coeff = 1
        if not saw_factor and coeff is None:
            self.error("empty term")
        return self.ring.monomial(exps, coeff)

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse_rational(self) -> Fraction:
        num = self.parse_int()
        if self.peek() == "/":
            self.pos += 1
            den = self.parse_int()
            if den == 0:
                self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def parse_factor(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        name = self.text[start:self.pos]
        # names like x1 end at the digit run; trim a trailing '^' exponent
        exp = 1
        if self.peek() == "^":
            self.pos += 1
            exp = self.parse_int()
        return name, exp

    def parse_nf_coeff(self):
        """A parenthesized polynomial in the field generator symbol."""
        field = self.ring.field
        if isinstance(field, RationalField):
            self.error("parenthesized coefficients need a number-field ring")
        assert self.peek() == "("
        self.pos += 1
        depth = 1
        start = self.pos
        while self.pos < len(self.text) and depth:
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            self.pos += 1
        if depth:
            self.error("unbalanced parenthesis")
        inner = self.text[start:self.pos - 1]
        sub = PolyRing(QQ, (field.symbol,))
        try:
            p = parse_poly(inner, sub)
        except UnknownVariableError as exc:
            raise PolySyntaxError(f"bad coefficient: {exc}", start) from None
        coords = [Fraction(0)] * field.degree
        from .exactnum import UPoly
        up = UPoly([p.terms.get((i,), Fraction(0)) for i in range(p.total_degree() + 1)])
        return field.from_upoly(up)


def format_poly(p: MPoly) -> str:
    """Canonical text: grevlex-descending terms, explicit signs."""
    if not p.terms:
        return "0"
    items = sorted(p.terms.items(), key=lambda ec: GREVLEX.key(ec[0]), reverse=True)
    parts = []
    for e, c in items:
        body = _coeff_text(c)
        neg = body.startswith("-") and not body.startswith("-(")
        if neg:
            body = body[1:]
        monos = []
        for i, k in enumerate(e):
            if k == 1:
                monos.append(p.ring.names[i])
            elif k > 1:
                monos.append(f"{p.ring.names[i]}^{k}")
        mono = "*".join(monos)
        if mono and body == "1":
            text = mono
        elif mono:
            text = f"{body}*{mono}"
        else:
            text = body
        if not parts:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append((" - " if neg else " + ") + text)
    return "".join(parts)


def _coeff_text(c) -> str:
    if isinstance(c, NumberFieldElement):
        coords = c.coords
        nonzero = [i for i, x in enumerate(coords) if x]
        if len(nonzero) == 1 and nonzero[0] == 0:
            return str(coords[0])
        return "(" + c.to_str() + ")"
    return str(c)


def euler_check(f: MPoly) -> bool:
    """Euler identity sum x_i df/dx_i = deg(f) * f for homogeneous f."""
    d = f.total_degree()
    vars_ = f.ring.variables()
    acc = f.ring.zero()
    for i in range(f.ring.nvars):
        acc = acc + vars_[i] * f.partial_derivative(i)
    return acc == f * d
