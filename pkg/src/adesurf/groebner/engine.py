"""Buchberger engine on packed-integer monomials.

A monomial is encoded as a single Python int whose bit-fields are arranged
so that integer comparison realizes the monomial order and monomial
multiplication is integer addition (up to a constant).  Divisibility is a
single guard-bit mask test.  Three coefficient backends share the driver:
exact integers (primitive pseudo-reduction over Q), ints mod p, and generic
field elements (Fraction or NumberFieldElement) kept monic.

The pair queue uses the sugar-degree strategy with the Gebauer-Moeller
criteria; reductions run over a lazy max-heap of pending terms.
"""
from __future__ import annotations

from heapq import heapify, heappop, heappush
from math import gcd

from ..mpoly import BlockElim, Grevlex, Lex, LocalNegGrevlex, MonomialOrder

BITS = 16
EMAX = (1 << (BITS - 1)) - 1  # max exponent/degree a field can hold


class ExponentOverflowError(OverflowError):
    pass


class Packing:
    """Order-aware monomial codec for a fixed variable count."""

    __slots__ = ("nvars", "order", "gmask", "gsub", "key_one", "ksign",
                 "_degshift", "_invmask", "_is_local", "_fieldmask",
                 "_lexlike", "_block")

    def __init__(self, nvars: int, order: MonomialOrder):
        self.nvars = nvars
        self.order = order
        n = nvars
        self._fieldmask = (1 << BITS) - 1
        self._degshift = n * BITS
        self._invmask = sum(EMAX << (i * BITS) for i in range(n))
        self._is_local = isinstance(order, LocalNegGrevlex)
        self._lexlike = isinstance(order, Lex)
        self._block = order.nfirst if isinstance(order, BlockElim) else None
        if self._block is not None:
            k = self._block
            nb = n - k
            # exponent fields sit at 0..nb-1 (second block) and nb+1..n
            # (first block); the inner degree field at nb needs a guard so
            # borrows cannot cross between the groups.
            self.gmask = (sum(1 << (i * BITS + BITS - 1) for i in range(nb))
                          + sum(1 << ((nb + 1 + i) * BITS + BITS - 1)
                                for i in range(k)))
            self.gsub = self.gmask | (1 << (nb * BITS + BITS - 1))
        else:
            self.gmask = sum(1 << (i * BITS + BITS - 1) for i in range(n))
            self.gsub = self.gmask
        if self._lexlike:
            # fields hold the exponents themselves, first variable on top
            self.key_one = 0
            self.ksign = +1
        elif self._block is not None:
            k = self._block
            self.key_one = (sum(EMAX << ((n - k + 1 + i) * BITS) for i in range(k))
                            + sum(EMAX << (i * BITS) for i in range(n - k)))
            self.ksign = -1
        elif isinstance(order, (Grevlex, LocalNegGrevlex)):
            base = self._invmask
            if self._is_local:
                base |= EMAX << self._degshift
            self.key_one = base
            self.ksign = -1
        else:
            raise ValueError(f"unsupported order {order!r}")

    # -- encode / decode -----------------------------------------------------

    def pack(self, exps) -> int:
        n = self.nvars
        d = sum(exps)
        if d > EMAX or any(e > EMAX for e in exps):
            raise ExponentOverflowError(f"degree {d} exceeds packing capacity")
        if self._lexlike:
            key = 0
            for i, e in enumerate(exps):
                key |= e << ((n - 1 - i) * BITS)
            return key
        if self._block is not None:
            k = self._block
            a, b = exps[:k], exps[k:]
            key = sum(a) << ((self.nvars + 1) * BITS)
            for i, e in enumerate(a):
                key |= (EMAX - e) << ((len(b) + 1 + i) * BITS)
            key |= sum(b) << (len(b) * BITS)
            for i, e in enumerate(b):
                key |= (EMAX - e) << (i * BITS)
            return key
        dfield = (EMAX - d) if self._is_local else d
        key = dfield << self._degshift
        for i, e in enumerate(exps):
            key |= (EMAX - e) << (i * BITS)
        return key

    def unpack(self, key: int):
        n = self.nvars
        fm = self._fieldmask
        if self._lexlike:
            return tuple((key >> ((n - 1 - i) * BITS)) & fm for i in range(n))
        if self._block is not None:
            k = self._block
            nb = n - k
            a = tuple(EMAX - ((key >> ((nb + 1 + i) * BITS)) & fm) for i in range(k))
            b = tuple(EMAX - ((key >> (i * BITS)) & fm) for i in range(nb))
            return a + b
        return tuple(EMAX - ((key >> (i * BITS)) & fm) for i in range(n))

    def deg(self, key: int) -> int:
        if self._lexlike:
            return sum(self.unpack(key))
        if self._block is not None:
            e = self.unpack(key)
            return sum(e)
        d = key >> self._degshift
        return (EMAX - d) if self._is_local else d

    def mul(self, a: int, b: int) -> int:
        return a + b - self.key_one

    def quot(self, a: int, b: int) -> int:
        """Key of a/b; caller must know b divides a."""
        return a - b + self.key_one

    def divides(self, a: int, b: int) -> bool:
        """True when monomial a divides monomial b."""
        G = self.gmask
        if self._lexlike:
            return ((b + self.gsub) - a) & G == G
        return ((a + self.gsub) - b) & G == G

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.unpack(a), self.unpack(b)
        return self.pack(tuple(max(x, y) for x, y in zip(ea, eb)))

    def coprime(self, a: int, b: int) -> bool:
        ea, eb = self.unpack(a), self.unpack(b)
        return all(x == 0 or y == 0 for x, y in zip(ea, eb))

    def prep(self, lm: int) -> int:
        """Precomputed operand so the reducer test is one add+mask."""
        return (self.gsub - lm) if self._lexlike else (self.gsub + lm)


# ---------------------------------------------------------------------------
# Normal-form cores.  A basis entry is (lm_key, lead_coeff, tail_items) with
# tail_items a list of (key, coeff) pairs.
# ---------------------------------------------------------------------------

def nf_modp(fdict, lms, preps, degs, tails, pk, p, skip=-1):
    """Full normal form of f (dict key->coeff) mod p; basis is monic."""
    G = pk.gmask
    ks = pk.ksign
    degf = pk.deg
    work = dict(fdict)
    heap = [-k for k in work]
    heapify(heap)
    out = {}
    nred = len(lms)
    while heap:
        k = -heappop(heap)
        c = work.pop(k, None)
        if not c:
            continue
        kd = degf(k)
        kk = k * ks
        red = -1
        for i in range(nred):
            if i != skip and degs[i] <= kd and ((preps[i] + kk) & G) == G:
                red = i
                break
        if red < 0:
            out[k] = c
            continue
        shift = k - lms[red]
        for tk, tc in tails[red]:
            nk = tk + shift
            prev = work.get(nk)
            if prev is None:
                v = (-c * tc) % p
                if v:
                    work[nk] = v
                    heappush(heap, -nk)
            else:
                v = (prev - c * tc) % p
                if v:
                    work[nk] = v
                else:
                    del work[nk]
    return out


def nf_int(fdict, lms, lcs, preps, degs, tails, pk, skip=-1, track_scale=False):
    """Pseudo normal form over Z: scales the polynomial as needed so every
    cancellation stays integral.  Returns (out, mult): out represents
    mult * f modulo the ideal.  Without track_scale the output is
    content-reduced and mult is 1 (only the direction of f is meaningful).
    """
    G = pk.gmask
    ks = pk.ksign
    degf = pk.deg
    work = dict(fdict)
    heap = [-k for k in work]
    heapify(heap)
    out = {}
    nred = len(lms)
    mult = 1
    while heap:
        k = -heappop(heap)
        c = work.pop(k, None)
        if not c:
            continue
        kd = degf(k)
        kk = k * ks
        red = -1
        for i in range(nred):
            if i != skip and degs[i] <= kd and ((preps[i] + kk) & G) == G:
                red = i
                break
        if red < 0:
            out[k] = c
            continue
        # pseudo-reduction: scale the whole polynomial so the cancellation
        # against the (positive, primitive) reducer lead stays integral
        b = lcs[red]
        m = gcd(c, b)
        u = b // m
        factor = c // m
        if u != 1:
            for kk2 in work:
                work[kk2] *= u
            for kk2 in out:
                out[kk2] *= u
            if track_scale:
                mult *= u
        shift = k - lms[red]
        for tk, tc in tails[red]:
            nk = tk + shift
            prev = work.get(nk)
            if prev is None:
                v = -factor * tc
                if v:
                    work[nk] = v
                    heappush(heap, -nk)
            else:
                v = prev - factor * tc
                if v:
                    work[nk] = v
                else:
                    del work[nk]
    if out and not track_scale:
        g = 0
        for v in out.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            out = {k: v // g for k, v in out.items()}
    return out, mult


def nf_field(fdict, lms, preps, degs, tails, pk, skip=-1):
    """Full normal form over a field; basis entries are monic."""
    G = pk.gmask
    ks = pk.ksign
    degf = pk.deg
    work = dict(fdict)
    heap = [-k for k in work]
    heapify(heap)
    out = {}
    nred = len(lms)
    while heap:
        k = -heappop(heap)
        c = work.pop(k, None)
        if c is None or not c:
            continue
        kd = degf(k)
        kk = k * ks
        red = -1
        for i in range(nred):
            if i != skip and degs[i] <= kd and ((preps[i] + kk) & G) == G:
                red = i
                break
        if red < 0:
            out[k] = c
            continue
        shift = k - lms[red]
        for tk, tc in tails[red]:
            nk = tk + shift
            prev = work.get(nk)
            if prev is None:
                v = -(c * tc)
                if v:
                    work[nk] = v
                    heappush(heap, -nk)
            else:
                v = prev - c * tc
                if v:
                    work[nk] = v
                else:
                    del work[nk]
    return out


# ---------------------------------------------------------------------------
# Buchberger driver
# ---------------------------------------------------------------------------

class GBStats:
    __slots__ = ("pairs_considered", "pairs_reduced", "zero_reductions", "basis_size")

    def __init__(self):
        self.pairs_considered = 0
        self.pairs_reduced = 0
        self.zero_reductions = 0
        self.basis_size = 0


def buchberger_engine(gens, pk: Packing, mode: str, p: int = 0,
                      progress=None):
    """Compute a reduced Groebner basis of ``gens``.

    gens: list of dicts {packed key: coeff}; mode: "modp" | "int" | "field".
    Returns (basis, stats) with basis a list of dicts in ascending lm order,
    each monic (mode field/modp) or primitive with positive lead (mode int).
    """
    if not pk.order.is_global:
        raise ValueError("Buchberger requires a global order; use the Mora engine")
    lms, lcs, preps, degs, tails, sugars = [], [], [], [], [], []
    redundant = []
    pairs = []          # heap of (sugar, lcm_key, i, j)
    alive = {}          # (i, j) -> lcm_key
    stats = GBStats()

    def normalize(d):
        if not d:
            return d
        if mode == "modp":
            lm = max(d)
            inv = pow(d[lm], p - 2, p)
            if inv != 1:
                return {k: (v * inv) % p for k, v in d.items()}
            return d
        if mode == "int":
            g = 0
            for v in d.values():
                g = gcd(g, v)
                if g == 1:
                    break
            lm = max(d)
            if d[lm] < 0:
                g = -g
            if g != 1:
                return {k: v // g for k, v in d.items()}
            return d
        lm = max(d)
        lc = d[lm]
        if lc != 1:
            inv = 1 / lc if not hasattr(lc, "inverse") else lc.inverse()
            return {k: v * inv for k, v in d.items()}
        return d

    def nf(d, skip=-1):
        if mode == "modp":
            return nf_modp(d, lms, preps, degs, tails, pk, p, skip)
        if mode == "int":
            return nf_int(d, lms, lcs, preps, degs, tails, pk, skip)[0]
        return nf_field(d, lms, preps, degs, tails, pk, skip)

    def spoly(i, j, L):
        si = L - lms[i]
        sj = L - lms[j]
        if mode == "int":
            a, b = lcs[i], lcs[j]
            m = gcd(a, b)
            ci, cj = b // m, a // m
            out = {}
            for k, v in tails[i]:
                out[k + si] = v * ci
            for k, v in tails[j]:
                nk = k + sj
                prev = out.get(nk)
                w = v * cj
                if prev is None:
                    out[nk] = -w
                else:
                    r = prev - w
                    if r:
                        out[nk] = r
                    else:
                        del out[nk]
            return out
        # monic modes: plain difference of shifted tails
        out = {}
        for k, v in tails[i]:
            out[k + si] = v
        for k, v in tails[j]:
            nk = k + sj
            prev = out.get(nk)
            if prev is None:
                out[nk] = -v
            else:
                r = prev - v
                if r:
                    out[nk] = (r % p) if mode == "modp" else r
                    if not out[nk]:
                        del out[nk]
                else:
                    del out[nk]
        if mode == "modp":
            return {k: v % p for k, v in out.items() if v % p}
        return out

    def insert(d, sugar):
        t = len(lms)
        lm = max(d)
        lmdeg = pk.deg(lm)
        lc = d.pop(lm)
        tail = sorted(d.items(), reverse=True)
        lms.append(lm)
        lcs.append(lc)
        preps.append(pk.prep(lm))
        degs.append(lmdeg)
        tails.append(tail)
        sugars.append(max(sugar, lmdeg))
        redundant.append(False)
        for i in range(t):
            if not redundant[i] and pk.divides(lm, lms[i]):
                redundant[i] = True
        # Gebauer-Moeller update
        cand = []
        for i in range(t):
            L = pk.lcm(lms[i], lm)
            cand.append((i, L))
        kept = []
        for i, L in cand:
            dominated = False
            for j, Lj in cand:
                if Lj != L and pk.divides(Lj, L):
                    dominated = True
                    break
            if not dominated:
                kept.append((i, L))
        by_lcm = {}
        for i, L in kept:
            by_lcm.setdefault(L, []).append(i)
        for L, idxs in sorted(by_lcm.items()):
            if any(pk.coprime(lms[i], lm) for i in idxs):
                continue
            i = idxs[0]
            s = max(sugars[i] + pk.deg(L) - degs[i],
                    sugars[t] + pk.deg(L) - lmdeg)
            alive[(i, t)] = L
            heappush(pairs, (s, L, i, t))
        # chain criterion against the new leading monomial
        for (i, j), L in list(alive.items()):
            if j == t:
                continue
            if (pk.divides(lm, L)
                    and pk.lcm(lms[i], lm) != L
                    and pk.lcm(lms[j], lm) != L):
                del alive[(i, j)]

    # seed with the generators, smallest leading monomials first
    seeds = [d for d in gens if d]
    seeds.sort(key=max)
    for d in seeds:
        d = normalize(dict(d))
        r = nf(d)
        if r:
            r = normalize(r)
            insert(r, max(pk.deg(k) for k in r))

    while pairs:
        s, L, i, j = heappop(pairs)
        if alive.get((i, j)) != L:
            continue
        del alive[(i, j)]
        stats.pairs_considered += 1
        sp = spoly(i, j, L)
        r = nf(sp)
        stats.pairs_reduced += 1
        if r:
            insert(normalize(r), s)
        else:
            stats.zero_reductions += 1
        if progress is not None and stats.pairs_reduced % 64 == 0:
            stats.basis_size = len(lms)
            progress(stats)

    # minimal basis: drop redundant, then tail-reduce the survivors
    keep = [t for t in range(len(lms)) if not redundant[t]]
    final = []
    for t in keep:
        d = {k: v for k, v in tails[t]}
        if mode == "int":
            reduced_tail, mult = nf_int(d, lms, lcs, preps, degs, tails, pk,
                                        track_scale=True)
            full = dict(reduced_tail)
            full[lms[t]] = lcs[t] * mult
        else:
            full = dict(nf(d))
            full[lms[t]] = lcs[t]
        final.append(normalize(full))
    final.sort(key=max)
    stats.basis_size = len(final)
    return final, stats
