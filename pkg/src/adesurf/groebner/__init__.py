"""Groebner bases over exact fields: Buchberger engine, Hilbert data,
elimination, zero-dimensional point extraction, and mod-p mirrors."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd

from ..exactnum import NumberFieldElement, QQ, RationalField
from ..mpoly import (
    GREVLEX,
    BlockElim,
    Grevlex,
    MPoly,
    MonomialOrder,
    PolyRing,
    format_poly,
)
from .engine import Packing, buchberger_engine, nf_field, nf_int, nf_modp
from .hilbert import HilbertData, hilbert_data_from_leads

__all__ = [
    "Ideal", "GroebnerBasis", "HilbertData", "ZeroDimSolution",
    "BadPrimeError", "NotHomogeneousError", "NotZeroDimensionalError",
    "ShapePositionFailedError", "buchberger", "normal_form",
    "hilbert_dim_deg", "eliminate", "modular_mirror", "zero_dim_points",
]


class BadPrimeError(ValueError):
    """The chosen prime divides a denominator or breaks the reduction."""


class NotHomogeneousError(ValueError):
    pass


class NotZeroDimensionalError(ValueError):
    pass


class ShapePositionFailedError(RuntimeError):
    pass


@dataclass(frozen=True)
class Ideal:
    ring: PolyRing
    generators: tuple

    def __init__(self, ring: PolyRing, generators):
        gens = tuple(g for g in generators if not g.is_zero())
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", gens)

    def digest(self) -> str:
        h = hashlib.sha256()
        for g in self.generators:
            h.update(format_poly(g).encode())
            h.update(b";")
        return h.hexdigest()[:16]

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)


class GroebnerBasis:
    """Reduced basis for a global order, with engine-form caching."""

    def __init__(self, ring: PolyRing, order: MonomialOrder, basis, provenance=""):
        self.ring = ring
        self.order = order
        self.basis = list(basis)
        self.provenance = provenance
        self._cache = {}

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def leading_exponents(self):
        return [g.leading(self.order)[0] for g in self.basis]

    def engine_form(self, mode: str, p: int = 0):
        key = (mode, p)
        hit = self._cache.get(key)
        if hit is None:
            pk = Packing(self.ring.nvars, self.order)
            dicts = [to_engine_dict(g, pk, mode, p) for g in self.basis]
            lms, lcs, preps, degs, tails = [], [], [], [], []
            for d in dicts:
                lm = max(d)
                lms.append(lm)
                lcs.append(d[lm])
                preps.append(pk.prep(lm))
                degs.append(pk.deg(lm))
                tails.append(sorted(((k, v) for k, v in d.items() if k != lm),
                                    reverse=True))
            hit = (pk, lms, lcs, preps, degs, tails)
            self._cache[key] = hit
        return hit


# ---------------------------------------------------------------------------
# Conversions between MPoly and engine dictionaries
# ---------------------------------------------------------------------------

def to_engine_dict(poly: MPoly, pk: Packing, mode: str, p: int = 0):
    if mode == "field":
        return {pk.pack(e): c for e, c in poly.terms.items()}
    if mode == "int":
        den = 1
        for c in poly.terms.values():
            d = c.denominator
            den = den * d // gcd(den, d)
        out = {pk.pack(e): int(c * den) for e, c in poly.terms.items()}
        g = 0
        for v in out.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            out = {k: v // g for k, v in out.items()}
        return out
    if mode == "modp":
        out = {}
        for e, c in poly.terms.items():
            v = _coeff_mod_p(c, p)
            if v:
                out[pk.pack(e)] = v
        return out
    raise ValueError(f"unknown mode {mode!r}")


def _coeff_mod_p(c, p, nf_root_cache={}):
    if isinstance(c, NumberFieldElement):
        K = c.parent
        root = nf_root_cache.get((K, p))
        if root is None:
            root = _modulus_root_mod_p(K, p)
            nf_root_cache[(K, p)] = root
        acc = 0
        for coord in reversed(c.coords):
            acc = (acc * root + _frac_mod_p(coord, p)) % p
        return acc
    return _frac_mod_p(c, p)


def _frac_mod_p(c: Fraction, p: int) -> int:
    den = c.denominator
    if den % p == 0:
        raise BadPrimeError(f"prime {p} divides a denominator")
    return c.numerator * pow(den, p - 2, p) % p


def _modulus_root_mod_p(K, p: int) -> int:
    """Smallest root of the field modulus mod p; BadPrime if none."""
    coeffs = []
    for c in K.modulus.coeffs:
        coeffs.append(_frac_mod_p(c, p))
    for r in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * r + c) % p
        if acc == 0:
            return r
    raise BadPrimeError(f"field modulus has no root mod {p}")


def from_engine_dict(d, ring: PolyRing, pk: Packing, mode: str):
    if mode == "int":
        terms = {pk.unpack(k): Fraction(v) for k, v in d.items()}
    else:
        terms = {pk.unpack(k): v for k, v in d.items()}
    return MPoly(ring, terms)


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def buchberger(ideal: Ideal, order: MonomialOrder = GREVLEX,
               progress=None) -> GroebnerBasis:
    """Reduced Groebner basis; exact over Q or over a number field."""
    ring = ideal.ring
    pk = Packing(ring.nvars, order)
    rational = isinstance(ring.field, RationalField)
    mode = "int" if rational else "field"
    gens = [to_engine_dict(g, pk, mode) for g in ideal.generators]
    basis, stats = buchberger_engine(gens, pk, mode, progress=progress)
    polys = []
    for d in basis:
        poly = from_engine_dict(d, ring, pk, mode)
        lm, lc = poly.leading(order)
        if lc != 1:
            poly = poly * (Fraction(1) / lc if rational else lc.inverse())
        polys.append(poly)
    return GroebnerBasis(ring, order, polys, provenance=ideal.digest())


def normal_form(f: MPoly, gb: GroebnerBasis) -> MPoly:
    """Remainder of f modulo the basis: no term divisible by a leading term."""
    if f.ring != gb.ring:
        raise ValueError("polynomial and basis from different rings")
    if f.is_zero():
        return f
    rational = isinstance(gb.ring.field, RationalField)
    mode = "int" if rational else "field"
    pk, lms, lcs, preps, degs, tails = gb.engine_form(mode)
    if mode == "int":
        den = 1
        for c in f.terms.values():
            d = c.denominator
            den = den * d // gcd(den, d)
        fd = {pk.pack(e): int(c * den) for e, c in f.terms.items()}
        out, mult = nf_int(fd, lms, lcs, preps, degs, tails, pk, track_scale=True)
        scale = Fraction(1, den * mult)
        return MPoly(gb.ring, {pk.unpack(k): v * scale for k, v in out.items()})
    fd = {pk.pack(e): c for e, c in f.terms.items()}
    out = nf_field(fd, lms, preps, degs, tails, pk)
    return MPoly(gb.ring, {pk.unpack(k): v for k, v in out.items()})


def hilbert_dim_deg(gb: GroebnerBasis) -> HilbertData:
    """Projective dimension and degree from the leading-term ideal."""
    for g in gb.basis:
        if not g.is_homogeneous():
            raise NotHomogeneousError("Hilbert data needs a homogeneous ideal")
    leads = gb.leading_exponents()
    return hilbert_data_from_leads(leads, gb.ring.nvars)


def eliminate(ideal: Ideal, keep) -> Ideal:
    """Generators of the contraction to the subring in the kept variables."""
    ring = ideal.ring
    keep = sorted(keep)
    drop = [i for i in range(ring.nvars) if i not in keep]
    if not drop:
        gb = buchberger(ideal, GREVLEX)
        return Ideal(ring, tuple(gb.basis))
    perm = drop + keep  # eliminated block first
    permuted = PolyRing(ring.field, tuple(ring.names[i] for i in perm))
    gens = [
        MPoly(permuted, {tuple(e[perm[j]] for j in range(ring.nvars)): c
                         for e, c in g.terms.items()})
        for g in ideal.generators
    ]
    gb = buchberger(Ideal(permuted, gens), BlockElim(len(drop)))
    kept_ring = PolyRing(ring.field, tuple(ring.names[i] for i in keep))
    out = []
    nd = len(drop)
    for g in gb.basis:
        if all(all(e[j] == 0 for j in range(nd)) for e in g.terms):
            out.append(MPoly(kept_ring,
                             {e[nd:]: c for e, c in g.terms.items()}))
    return Ideal(kept_ring, out)


def modular_mirror(ideal: Ideal, p: int, order: MonomialOrder = GREVLEX,
                   progress=None):
    """Hilbert data of the ideal reduced mod p (for K-coefficients the
    field generator is sent to the smallest root of the modulus mod p)."""
    ring = ideal.ring
    pk = Packing(ring.nvars, order)
    gens = [to_engine_dict(g, pk, "modp", p) for g in ideal.generators]
    if any(not g for g, orig in zip(gens, ideal.generators) if orig):
        raise BadPrimeError(f"a generator vanishes mod {p}")
    basis, stats = buchberger_engine(gens, pk, "modp", p=p, progress=progress)
    leads = [pk.unpack(max(d)) for d in basis]
    data = hilbert_data_from_leads(leads, ring.nvars)
    return data


def gb_mod_p(ideal: Ideal, p: int, order: MonomialOrder = GREVLEX,
             progress=None):
    """Mod-p Groebner basis in engine form: (packing, basis dicts)."""
    ring = ideal.ring
    pk = Packing(ring.nvars, order)
    gens = [to_engine_dict(g, pk, "modp", p) for g in ideal.generators]
    basis, _ = buchberger_engine(gens, pk, "modp", p=p, progress=progress)
    return pk, basis


from .points import ZeroDimSolution, zero_dim_points  # noqa: E402  (cycle-free)
