"""Exact coefficient arithmetic: rationals, univariate polynomials over Q,
number fields Q[t]/(f), and univariate factorization over Q.

All values are immutable after construction and every operation is a pure
function, so they can be shared freely between workers.  Rationals are
``fractions.Fraction``; a univariate polynomial is a dense coefficient
tuple (constant term first); a number field is presented abstractly by its
monic irreducible modulus, with elements stored in the power basis.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, isqrt

Rat = Fraction

FACTOR_SEED = 0x5EED


class ZeroPolynomialError(ValueError):
    """Raised when an operation requires a nonzero polynomial."""


class ReduciblePolynomialError(ValueError):
    """Raised by nf_construct when the proposed modulus factors over Q."""

    def __init__(self, factors):
        self.factors = factors
        super().__init__(
            "modulus is reducible: " + " * ".join(str(f) for f in factors)
        )


class FieldMismatchError(ValueError):
    """Raised when elements of distinct fields are combined."""


class DivisionByZeroError(ZeroDivisionError):
    """Raised on inversion of zero in a field."""


# ---------------------------------------------------------------------------
# Univariate polynomials (dense, coefficients in Q or in a number field)
# ---------------------------------------------------------------------------

class UPoly:
    """Dense univariate polynomial, lowest-degree coefficient first.

    Coefficients are Fractions or NumberFieldElements of one common field;
    the leading coefficient is nonzero unless the polynomial is zero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def from_ints(ints) -> "UPoly":
        return UPoly([Fraction(c) for c in ints])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "UPoly":
        lc = self.lc()
        if lc == 1:
            return self
        inv = _coeff_inverse(lc)
        return UPoly([c * inv for c in self.coeffs])

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __add__(self, other):
        a, b = self.coeffs, _upoly_coeffs(other)
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_upoly(other))

    def __rsub__(self, other):
        return _as_upoly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) or not isinstance(other, UPoly):
            return UPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly(())
        out = [a[0] * b[0] * 0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UPoly([self.coeffs[0] * 0 + 1]) if self.coeffs else UPoly([Fraction(1)])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = _as_upoly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return UPoly(()), self
        inv = _coeff_inverse(other.lc())
        rem = list(self.coeffs)
        db = other.degree
        quo = [rem[0] * 0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c * inv
            quo[i - db] = q
            for j, cb in enumerate(other.coeffs):
                rem[i - db + j] = rem[i - db + j] - q * cb
        return UPoly(quo), UPoly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "UPoly":
        return UPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, g: "UPoly") -> "UPoly":
        acc = UPoly(())
        for c in reversed(self.coeffs):
            acc = acc * g + UPoly([c])
        return acc

    def shift_scale(self, k: int) -> "UPoly":
        """Return f(k*t) for an integer k."""
        return UPoly([c * k**i for i, c in enumerate(self.coeffs)])

    def to_str(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            body = _coeff_str(c)
            neg = body.startswith("-")
            if neg:
                body = body[1:]
            if mono and body == "1":
                body = ""
            lead = f"{body}*{mono}" if body and mono else (body or mono)
            if not parts:
                parts.append(("-" if neg else "") + lead)
            else:
                parts.append((" - " if neg else " + ") + lead)
        return "".join(parts)

    def __repr__(self):
        return f"UPoly({self.to_str()})"


def _coeff_str(c) -> str:
    if isinstance(c, NumberFieldElement):
        return "(" + c.to_str() + ")"
    return str(c)


def _coeff_inverse(c):
    if isinstance(c, NumberFieldElement):
        return c.inverse()
    return Fraction(1) / c


def _as_upoly(x) -> UPoly:
    if isinstance(x, UPoly):
        return x
    return UPoly([Fraction(x)]) if not isinstance(x, NumberFieldElement) else UPoly([x])


def _upoly_coeffs(x):
    return x.coeffs if isinstance(x, UPoly) else _as_upoly(x).coeffs


def upoly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def upoly_ext_gcd(f: UPoly, g: UPoly):
    """Return (d, s, t) with s*f + t*g = d, d monic (or zero)."""
    a, b = f, g
    sa, sb = _as_upoly(1), _as_upoly(0)
    ta, tb = _as_upoly(0), _as_upoly(1)
    while not b.is_zero():
        q, r = divmod(a, b)
        a, b = b, r
        sa, sb = sb, sa - q * sb
        ta, tb = tb, ta - q * tb
    if a.is_zero():
        return a, sa, ta
    inv = _coeff_inverse(a.lc())
    return a.monic(), sa * inv, ta * inv


def squarefree_part(f: UPoly) -> UPoly:
    """Monic product of the distinct irreducible factors of f."""
    if f.is_zero():
        raise ZeroPolynomialError("squarefree part of zero polynomial")
    if f.degree == 0:
        return _as_upoly(1)
    d = upoly_gcd(f, f.derivative())
    return (f // d).monic()


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> UPoly:
    """The n-th cyclotomic polynomial, monic with integer coefficients."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = UPoly.from_ints([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            poly //= cyclotomic_polynomial(d)
    return poly


# ---------------------------------------------------------------------------
# Integer-coefficient helpers for factorization
# ---------------------------------------------------------------------------

def _zx_content(cs) -> int:
    g = 0
    for c in cs:
        g = gcd(g, abs(c))
        if g == 1:
            break
    return g or 1


def _zx_primitive(cs):
    g = _zx_content(cs)
    return [c // g for c in cs]


def _zx_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _zx_divmod_exact(a, b):
    """Divide integer polynomials, requiring an integer-coefficient quotient."""
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    quo = [0] * max(0, len(a) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        if rem[i] == 0:
            continue
        if rem[i] % lead:
            return None, None
        q = rem[i] // lead
        quo[i - db] = q
        for j, cb in enumerate(b):
            rem[i - db + j] -= q * cb
    return quo, rem[:db]


def _fp_normalize(a, p):
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return out


def _fp_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    quo = [0] * max(0, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if not c:
            a[i] = 0
            continue
        q = c * inv % p
        quo[i - db] = q
        for j, cb in enumerate(b):
            a[i - db + j] = (a[i - db + j] - q * cb) % p
    return quo, _fp_normalize(a[:db], p)


def _fp_gcd(a, b, p):
    a, b = _fp_normalize(a, p), _fp_normalize(b, p)
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _fp_pow_mod(base, e, mod, p):
    result = [1]
    base = _fp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _fp_divmod(_fp_mul(result, base, p), mod, p)[1]
        base = _fp_divmod(_fp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _fp_deriv(a, p):
    return _fp_normalize([i * c % p for i, c in enumerate(a)][1:], p)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


def next_prime(n: int) -> int:
    n += 1
    while not _is_probable_prime(n):
        n += 1
    return n


def _factor_fp_squarefree(f, p, rng):
    """Cantor-Zassenhaus factorization of a squarefree monic poly mod p."""
    factors = []
    # distinct-degree splitting
    stack = []
    g = list(f)
    h = [0, 1]
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        h = _fp_pow_mod(h, p, g, p)
        diff = _fp_normalize([(c - (1 if i == 1 else 0)) % p for i, c in enumerate(h + [0, 0])], p)
        u = _fp_gcd(diff, g, p)
        if len(u) > 1:
            stack.append((u, d))
            g = _fp_divmod(g, u, p)[0]
            h = _fp_divmod(h, g, p)[1]
    if len(g) > 1:
        stack.append((g, len(g) - 1))
    # equal-degree splitting
    for poly, d in stack:
        parts = [poly]
        while parts:
            u = parts.pop()
            k = len(u) - 1
            if k == d:
                factors.append(u)
                continue
            while True:
                r = [rng.randrange(p) for _ in range(k)]
                r = _fp_normalize(r, p)
                if len(r) < 2:
                    continue
                s = _fp_pow_mod(r, (p**d - 1) // 2, u, p)
                s = _fp_normalize([(c - (1 if i == 0 else 0)) % p for i, c in enumerate(s)], p)
                w = _fp_gcd(s, u, p)
                if 0 < len(w) - 1 < k:
                    parts.append(w)
                    parts.append(_fp_divmod(u, w, p)[0])
                    break
    return factors


def _zx_add(a, b):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return [x + y for x, y in zip(a, b)]


def _zx_sub(a, b):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _zx_trim_mod(a, m):
    a = [c % m for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step: from f = g*h (mod m) to (mod m^2).

    Requires s*g + t*h = 1 (mod m), h monic, deg s < deg h, deg t < deg g.
    """
    m2 = m * m
    e = _zx_trim_mod(_zx_sub(f, _zx_mul(g, h)), m2)
    if e:
        q, r = _zx_divmod_mod(_zx_mul(s, e), h, m2)
        g = _zx_trim_mod(_zx_add(g, _zx_add(_zx_mul(t, e), _zx_mul(q, g))), m2)
        h = _zx_trim_mod(_zx_add(h, r), m2)
    b = _zx_trim_mod(_zx_sub(_zx_add(_zx_mul(s, g), _zx_mul(t, h)), [1]), m2)
    if b:
        c, d = _zx_divmod_mod(_zx_mul(s, b), h, m2)
        s = _zx_trim_mod(_zx_sub(s, d), m2)
        t = _zx_trim_mod(_zx_sub(t, _zx_add(_zx_mul(t, b), _zx_mul(c, g))), m2)
    return g, h, s, t


def _zx_divmod_mod(a, b, m):
    """Division with remainder of integer polys modulo m (b monic mod m)."""
    a = [c % m for c in a]
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    inv = pow(b[-1] % m, -1, m)
    quo = [0] * max(0, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % m
        if not c:
            continue
        q = c * inv % m
        quo[i - db] = q
        for j, cb in enumerate(b):
            a[i - db + j] = (a[i - db + j] - q * cb) % m
    rem = a[:db]
    while rem and rem[-1] == 0:
        rem.pop()
    return quo, rem


def _hensel_lift_tree(f, factors, p, target):
    """Lift the monic factorization f = lc(f) * prod(factors) mod p to a
    modulus m = p^(2^k) >= target; returns (monic lifted factors, m)."""
    m = p
    while m < target:
        m = m * m

    def lift(fpoly, facs):
        if len(facs) == 1:
            inv = pow(fpoly[-1] % m, -1, m)
            return [_zx_trim_mod([c * inv for c in fpoly], m)]
        half = len(facs) // 2
        left, right = facs[:half], facs[half:]
        gl = [fpoly[-1] % p]
        for u in left:
            gl = _fp_mul(gl, u, p)
        gr = [1]
        for u in right:
            gr = _fp_mul(gr, u, p)
        d, s, t = _fp_ext_gcd(gl, gr, p)
        assert len(d) == 1, "halves of a squarefree factorization must be coprime"
        inv = pow(d[0], p - 2, p)
        s = [c * inv % p for c in s]
        t = [c * inv % p for c in t]
        # enforce deg s < deg gr, then fix t to keep the Bezout identity
        q, s = _fp_divmod(s, gr, p)
        t = _fp_normalize(_zx_add(t, _fp_mul(q, gl, p)), p)
        g, h = list(gl), list(gr)
        mod = p
        while mod < m:
            g, h, s, t = _hensel_step([c % (mod * mod) for c in fpoly], g, h, s, t, mod)
            mod *= mod
        return lift(g, left) + lift(h, right)

    return lift(f, factors), m


def _fp_ext_gcd(a, b, p):
    a0, b0 = _fp_normalize(a, p), _fp_normalize(b, p)
    sa, sb = [1], []
    ta, tb = [], [1]
    while b0:
        q, r = _fp_divmod(a0, b0, p)
        a0, b0 = b0, r
        sa, sb = sb, _fp_normalize(_zx_sub(sa, _fp_mul(q, sb, p)), p)
        ta, tb = tb, _fp_normalize(_zx_sub(ta, _fp_mul(q, tb, p)), p)
    return a0, sa, ta


def _symmetric(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _factor_zx_squarefree(f):
    """Factor a primitive squarefree integer polynomial into irreducibles.

    Zassenhaus: factor modulo a good prime, Hensel lift past the Mignotte
    bound, then recombine subsets.  Prime search starts at 101 and walks
    upward deterministically.
    """
    n = len(f) - 1
    if n <= 1:
        return [f]
    # prime selection: p >= 101, p coprime to lc, f squarefree mod p
    p = 100
    while True:
        p = next_prime(p)
        if f[-1] % p == 0:
            continue
        fp = _fp_normalize(f, p)
        if len(fp) - 1 != n:
            continue
        if len(_fp_gcd(fp, _fp_deriv(fp, p), p)) == 1:
            break
    inv = pow(fp[-1], p - 2, p)
    fp_monic = [c * inv % p for c in fp]
    rng = random.Random(FACTOR_SEED ^ p)
    modular = _factor_fp_squarefree(fp_monic, p, rng)
    modular.sort()
    if len(modular) == 1:
        return [f]
    # Mignotte-style bound on factor coefficients, times the leading coefficient
    norm2 = isqrt(sum(c * c for c in f)) + 1
    bound = 2 ** (n + 1) * norm2 * abs(f[-1])
    lifted, m = _hensel_lift_tree(f, modular, p, 2 * bound + 1)

    result = []
    remaining = list(range(len(lifted)))
    current = list(f)
    r = 1
    while 2 * r <= len(remaining):
        hit = False
        # constant-term pretest data
        lc = current[-1]
        c0 = current[0] * lc
        for subset in combinations(remaining, r):
            t0 = lc % m
            for i in subset:
                t0 = t0 * lifted[i][0] % m
            t0 = _symmetric(t0, m)
            if t0 != 0 and c0 % t0:
                continue
            prod_mod = [lc % m]
            for i in subset:
                prod_mod = [c % m for c in _zx_mul(prod_mod, lifted[i])]
            cand = [_symmetric(c, m) for c in prod_mod]
            while cand and cand[-1] == 0:
                cand.pop()
            if not cand:
                continue
            cand = _zx_primitive(cand)
            quo, rem = _zx_divmod_exact(current, cand)
            if quo is not None and not any(rem):
                result.append(cand)
                remaining = [i for i in remaining if i not in subset]
                current = _zx_primitive(quo)
                hit = True
                break
        if not hit:
            r += 1
    if len(current) > 1:
        result.append(current)
    return result


def factor_rational_upoly(f: UPoly):
    """Factor a nonzero rational polynomial into monic irreducibles.

    Returns a list of (factor, multiplicity); the product of the factors
    (with multiplicities) equals f up to its leading coefficient.
    """
    if f.is_zero():
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    if f.degree == 0:
        return []
    # Yun squarefree decomposition over Q
    parts = _yun_squarefree(f.monic())
    out = []
    for gpart, mult in parts:
        den = 1
        for c in gpart.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = _zx_primitive([int(c * den) for c in gpart.coeffs])
        for fac in _factor_zx_squarefree(ints):
            out.append((UPoly.from_ints(fac).monic(), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def _yun_squarefree(f: UPoly):
    """Yun's algorithm: f monic -> [(g, i)] with f = prod g^i, g squarefree."""
    df = f.derivative()
    a = upoly_gcd(f, df)
    if a.degree == 0:
        return [(f, 1)]
    out = []
    b = f // a
    c = df // a
    i = 1
    while b.degree > 0:
        d = c - b.derivative()
        g = upoly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b // g
        c = d // g
        i += 1
    return out


# ---------------------------------------------------------------------------
# Number fields Q[t]/(f)
# ---------------------------------------------------------------------------

class NumberField:
    """The field Q[t]/(modulus) with the power basis 1, t, ..., t^(d-1).

    The modulus must be monic and irreducible over Q; irreducibility is
    established at construction (see ``nf_construct``).  No complex
    embedding is ever chosen.
    """

    __slots__ = ("modulus", "degree", "label", "symbol", "_redrows", "_zero", "_one", "_gen")

    def __init__(self, modulus: UPoly, label: str = "", symbol: str = "t", _trusted: bool = False):
        if not modulus.is_monic():
            raise ValueError("number field modulus must be monic")
        if not _trusted:
            facs = factor_rational_upoly(modulus)
            if len(facs) != 1 or facs[0][1] != 1:
                raise ReduciblePolynomialError([fm[0] for fm in facs])
        self.modulus = modulus
        self.degree = modulus.degree
        self.symbol = symbol
        self.label = label or f"Q[{symbol}]/({modulus.to_str(symbol)})"
        d = self.degree
        # reduction rows: t^(d+i) mod modulus, for i = 0..d-2
        rows = [tuple(-c for c in modulus.coeffs[:-1])]
        for _ in range(max(0, d - 2)):
            prev = rows[-1]
            carry = prev[-1]
            shifted = [Fraction(0)] + list(prev[:-1])
            if carry:
                shifted = [a + carry * b for a, b in zip(shifted, rows[0])]
            rows.append(tuple(shifted))
        self._redrows = tuple(rows)
        self._zero = NumberFieldElement(self, (Fraction(0),) * d)
        self._one = NumberFieldElement(self, (Fraction(1),) + (Fraction(0),) * (d - 1))
        gen_coords = [Fraction(0)] * d
        if d > 1:
            gen_coords[1] = Fraction(1)
            self._gen = NumberFieldElement(self, tuple(gen_coords))
        else:
            self._gen = NumberFieldElement(self, tuple(self._redrows[0]) if d else ())

    def __repr__(self):
        return f"NumberField({self.label})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    @property
    def gen(self):
        return self._gen

    def element(self, coords) -> "NumberFieldElement":
        cs = tuple(Fraction(c) for c in coords)
        if len(cs) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(cs)}")
        return NumberFieldElement(self, cs)

    def from_rational(self, r) -> "NumberFieldElement":
        coords = [Fraction(r)] + [Fraction(0)] * (self.degree - 1)
        return NumberFieldElement(self, tuple(coords))

    def coerce(self, x) -> "NumberFieldElement":
        if isinstance(x, NumberFieldElement):
            if x.parent == self:
                return x
            if x.parent.degree == 1:
                return self.from_rational(x.coords[0])
            raise FieldMismatchError(f"cannot coerce element of {x.parent.label} into {self.label}")
        return self.from_rational(x)

    def from_upoly(self, f: UPoly) -> "NumberFieldElement":
        """Image of a rational polynomial in t under the quotient map."""
        rem = f % self.modulus
        coords = list(rem.coeffs) + [Fraction(0)] * (self.degree - len(rem.coeffs))
        return self.element(coords)

    def random_element(self, rng: random.Random, span: int = 20) -> "NumberFieldElement":
        return self.element([Fraction(rng.randint(-span, span),
                                      rng.randint(1, span)) for _ in range(self.degree)])

    def _reduce(self, prod):
        """Reduce a raw product coefficient list (length <= 2d-1)."""
        d = self.degree
        if len(prod) <= d:
            return tuple(prod) + (Fraction(0),) * (d - len(prod))
        out = list(prod[:d])
        rows = self._redrows
        for i, c in enumerate(prod[d:]):
            if c:
                row = rows[i]
                for j in range(d):
                    out[j] += c * row[j]
        return tuple(out)


class NumberFieldElement:
    """Element of a NumberField, stored by power-basis coordinates."""

    __slots__ = ("parent", "coords")

    def __init__(self, parent: NumberField, coords):
        self.parent = parent
        self.coords = coords

    def __bool__(self):
        return any(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other):
        if isinstance(other, NumberFieldElement):
            return self.parent == other.parent and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return (self.coords[0] == other
                    and not any(self.coords[1:]))
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def _coerce_other(self, other):
        if isinstance(other, NumberFieldElement):
            if other.parent != self.parent:
                raise FieldMismatchError(
                    f"mixing elements of {self.parent.label} and {other.parent.label}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.parent.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(self.parent,
                                  tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(self.parent,
                                  tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return NumberFieldElement(self.parent, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, NumberFieldElement):
            if other.parent != self.parent:
                raise FieldMismatchError(
                    f"mixing elements of {self.parent.label} and {other.parent.label}")
            a, b = self.coords, other.coords
            n = len(a)
            prod = [Fraction(0)] * (2 * n - 1)
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        if cb:
                            prod[i + j] += ca * cb
            return NumberFieldElement(self.parent, self.parent._reduce(prod))
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement(self.parent, tuple(a * other for a in self.coords))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.parent.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "NumberFieldElement":
        if self.is_zero():
            raise DivisionByZeroError(f"inverse of zero in {self.parent.label}")
        a = UPoly(self.coords)
        d, s, _ = upoly_ext_gcd(a, self.parent.modulus)
        if d.degree != 0:
            raise ArithmeticError("modulus not irreducible: gcd is " + str(d))
        inv = s * _coeff_inverse(d.coeffs[0])
        coords = list((inv % self.parent.modulus).coeffs)
        coords += [Fraction(0)] * (self.parent.degree - len(coords))
        return NumberFieldElement(self.parent, tuple(coords))

    def to_str(self) -> str:
        return UPoly(self.coords).to_str(self.parent.symbol)

    def __repr__(self):
        return f"<{self.to_str()} in {self.parent.label}>"


def nf_construct(modulus: UPoly, label: str = "", symbol: str = "t") -> NumberField:
    """Build Q[t]/(modulus) after verifying the modulus is irreducible."""
    return NumberField(modulus, label=label, symbol=symbol)


def nf_arith(op: str, x: NumberFieldElement, y: NumberFieldElement | None = None):
    """Uniform entry point for field arithmetic: add, mul, inv."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "inv":
        if y is not None:
            raise ValueError("inv takes a single operand")
        return x.inverse()
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# The rational field, duck-compatible with NumberField for ring descriptors
# ---------------------------------------------------------------------------

class RationalField:
    """Q itself, with the same element-handling surface as NumberField."""

    degree = 1
    label = "Q"
    symbol = "t"
    modulus = None

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, NumberFieldElement):
            if x.parent.degree == 1:
                return x.coords[0]
            raise FieldMismatchError("cannot coerce a proper number-field element into Q")
        return Fraction(x)

    def from_rational(self, r):
        return Fraction(r)

    def random_element(self, rng: random.Random, span: int = 20):
        return Fraction(rng.randint(-span, span), rng.randint(1, span))

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")


QQ = RationalField()


def cyclotomic_field(n: int, symbol: str = "z") -> NumberField:
    """Q(zeta_n), presented abstractly by the n-th cyclotomic polynomial."""
    return NumberField(cyclotomic_polynomial(n), label=f"Q(zeta_{n})",
                       symbol=symbol, _trusted=True)
