"""Dimension and degree of a homogeneous ideal from its leading terms.

The Hilbert series numerator N(t) of a monomial ideal is computed by the
pivot-splitting recursion N(I) = N(I + <x^a>) + t^deg * N(I : x^a); writing
the series as Q(t)/(1-t)^dim with Q(1) != 0 then yields the Krull dimension
of the quotient cone and, for projective dimension <= 0, the degree.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class HilbertData:
    """Projective dimension (-1 for empty) and scheme degree."""

    dimension: int
    degree: int

    def to_json(self):
        return {"dimension": self.dimension, "degree": self.degree}


def _minimalize(gens):
    """Drop monomials divisible by another generator."""
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(all(x >= y for x, y in zip(g, h)) for h in out):
            out.append(g)
    return out


def _poly_mul_t(num, shift):
    return {d + shift: c for d, c in num.items()}


def _poly_add(a, b):
    out = dict(a)
    for d, c in b.items():
        s = out.get(d, 0) + c
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    return out


def _poly_sub(a, b):
    return _poly_add(a, {d: -c for d, c in b.items()})


def hilbert_numerator(gens, nvars, _memo=None):
    """Numerator of the Hilbert series of R/I for a monomial ideal I.

    ``gens`` is an iterable of exponent tuples; returns {degree: coeff}.
    """
    if _memo is None:
        _memo = {}
    gens = _minimalize(gens)
    key = tuple(gens)
    hit = _memo.get(key)
    if hit is not None:
        return hit

    if not gens:
        result = {0: 1}
    elif gens[0] == (0,) * nvars:
        result = {}
    else:
        # split off generators that are pure powers of single variables
        pure = [g for g in gens if sum(1 for e in g if e) == 1]
        mixed = [g for g in gens if sum(1 for e in g if e) > 1]
        if not mixed:
            result = {0: 1}
            for g in pure:
                result = _poly_sub(result, _poly_mul_t(result, sum(g)))
        elif len(mixed) == 1 and not pure:
            result = _poly_sub({0: 1}, {sum(mixed[0]): 1})
        else:
            # pivot: a variable occurring in the most mixed generators,
            # raised to the median of its positive exponents
            counts = [0] * nvars
            for g in mixed:
                for i, e in enumerate(g):
                    if e:
                        counts[i] += 1
            piv = max(range(nvars), key=lambda i: counts[i])
            exps = sorted(g[piv] for g in mixed if g[piv])
            a = exps[len(exps) // 2]
            pivot = tuple(a if i == piv else 0 for i in range(nvars))
            plus = gens + [pivot]
            colon = [tuple(max(e - (a if i == piv else 0), 0)
                           for i, e in enumerate(g)) for g in gens]
            n_plus = hilbert_numerator(plus, nvars, _memo)
            n_colon = hilbert_numerator(colon, nvars, _memo)
            result = _poly_add(n_plus, _poly_mul_t(n_colon, a))

    _memo[key] = result
    return result


def hilbert_data_from_leads(lead_exps, nvars) -> HilbertData:
    """HilbertData of a homogeneous ideal given leading-term exponents."""
    num = hilbert_numerator(list(lead_exps), nvars)
    if not num:
        return HilbertData(dimension=-1, degree=0)
    # divide N(t) by (1 - t) as often as possible
    s = 0
    cur = num
    while True:
        total = sum(cur.values())
        if total != 0:
            break
        # quotient of N by (1 - t): q_d = sum_{e <= d} n_e
        maxd = max(cur)
        q = {}
        acc = 0
        for d in range(maxd + 1):
            acc += cur.get(d, 0)
            if acc:
                q[d] = acc
        cur = q
        s += 1
        if not cur:
            break
    q1 = sum(cur.values())
    cone_dim = nvars - s
    return HilbertData(dimension=cone_dim - 1, degree=abs(q1))
