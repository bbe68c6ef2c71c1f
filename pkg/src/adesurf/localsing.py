"""Local analysis at a surface singularity: Mora standard bases, Milnor and
Tjurina numbers, Hessian corank, splitting-lemma reduction, and the
classification of ADE (simple) singularities.

Everything is exact over an abstract field (Q or Q[t]/(q)); no embedding or
floating point anywhere.  Local colengths are computed with the
tangent-cone (Mora) algorithm under the negative-degree grevlex order; the
Milnor routine works modulo increasing powers of the maximal ideal and
stops at the first stabilization, which Nakayama's lemma certifies as the
true colength.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import NumberFieldElement, RationalField, UPoly, squarefree_part, upoly_gcd
from .mpoly import GREVLEX, LOCAL_ORDER, MPoly, PolyRing
from .groebner.engine import Packing

MILNOR_CAP = 30
JET_CAP = 16

NOT_ISOLATED = "NotIsolated"


class CorankThreeError(ValueError):
    """splitting_residual is only defined for corank <= 2."""


class NotCentredError(ValueError):
    """The local function must vanish at the origin with zero gradient."""


@dataclass(frozen=True)
class LocalFunction:
    """Origin-centred local equation in three variables."""

    poly: MPoly

    def __post_init__(self):
        f = self.poly
        if f.constant_term():
            raise NotCentredError("nonzero constant term at the origin")
        for e, c in f.terms.items():
            if sum(e) == 1 and c:
                raise NotCentredError("nonzero gradient at the origin")

    @property
    def ring(self):
        return self.poly.ring


@dataclass(frozen=True)
class SingularityReport:
    corank: int
    milnor: int | str
    tjurina: int | str
    type_: str
    evidence: str = ""

    def is_simple(self) -> bool:
        return self.type_ not in ("NotSimple", NOT_ISOLATED)

    def to_json(self):
        return {
            "corank": self.corank,
            "milnor": self.milnor,
            "tjurina": self.tjurina,
            "type": self.type_,
            "evidence": self.evidence,
        }


# ---------------------------------------------------------------------------
# Mora standard bases (weak normal form with ecart control)
# ---------------------------------------------------------------------------

def _to_local_dict(p: MPoly, pk: Packing, trunc: int | None):
    out = {}
    for e, c in p.terms.items():
        if trunc is not None and sum(e) >= trunc:
            continue
        out[pk.pack(e)] = c
    return out


def _monic_local(d: dict, pk: Packing):
    lm = max(d)
    lc = d[lm]
    if lc == 1:
        return dict(d)
    inv = (Fraction(1) / lc) if isinstance(lc, (int, Fraction)) else lc.inverse()
    return {k: v * inv for k, v in d.items()}


def _ecart(d: dict, pk: Packing) -> int:
    lead = pk.deg(max(d))
    top = max(pk.deg(k) for k in d)
    return top - lead


def mora_weak_normal_form(fdict, reducers, pk: Packing, trunc: int | None):
    """Weak normal form of f against the reducer list (each monic).

    Mora's rule: reduce by a divisor of the lead with minimal ecart; if its
    ecart exceeds the current ecart, remember the current polynomial as a
    new reducer first.  With a truncation bound all arithmetic stays inside
    the finite-dimensional quotient by m^trunc.
    """
    T_lms = [max(d) for d in reducers]
    T_ecarts = [_ecart(d, pk) for d in reducers]
    T_tails = [[(k, v) for k, v in sorted(d.items(), reverse=True) if k != max(d)]
               for d in reducers]
    h = dict(fdict)
    G = pk.gmask
    gsub = pk.gsub
    while h:
        lm_h = max(h)
        cands = [i for i in range(len(T_lms))
                 if ((T_lms[i] + gsub) - lm_h) & G == G]
        if not cands:
            return h
        e_h = _ecart(h, pk)
        best = min(cands, key=lambda i: (T_ecarts[i], i))
        if T_ecarts[best] > e_h:
            hm = _monic_local(h, pk)
            T_lms.append(max(hm))
            T_ecarts.append(e_h)
            T_tails.append([(k, v) for k, v in sorted(hm.items(), reverse=True)
                            if k != max(hm)])
        c = h.pop(lm_h)
        shift = lm_h - T_lms[best]
        for tk, tv in T_tails[best]:
            nk = tk + shift
            if trunc is not None and pk.deg(nk) >= trunc:
                continue
            prev = h.get(nk)
            if prev is None:
                v = -(c * tv)
                if v:
                    h[nk] = v
            else:
                v = prev - c * tv
                if v:
                    h[nk] = v
                else:
                    del h[nk]
    return h


def mora_standard_basis_dicts(gens, pk: Packing, trunc: int | None):
    """Standard basis as engine dicts (monic, deterministic order)."""
    G = []
    for d in gens:
        if d:
            G.append(_monic_local(d, pk))
    G.sort(key=max, reverse=True)
    pairs = []

    def add_pairs(t):
        for i in range(t):
            L = pk.lcm(max(G[i]), max(G[t]))
            pairs.append((-L, i, t))
        pairs.sort()

    for t in range(len(G)):
        add_pairs(t)
    while pairs:
        negL, i, j = pairs.pop(0)
        L = -negL
        lmi, lmj = max(G[i]), max(G[j])
        si, sj = L - lmi, L - lmj
        s = {}
        for k, v in G[i].items():
            if k != lmi:
                nk = k + si
                if trunc is None or pk.deg(nk) < trunc:
                    s[nk] = v
        for k, v in G[j].items():
            if k != lmj:
                nk = k + sj
                if trunc is not None and pk.deg(nk) >= trunc:
                    continue
                prev = s.get(nk)
                if prev is None:
                    s[nk] = -v
                else:
                    r = prev - v
                    if r:
                        s[nk] = r
                    else:
                        del s[nk]
        h = mora_weak_normal_form(s, G, pk, trunc)
        if h:
            G.append(_monic_local(h, pk))
            add_pairs(len(G) - 1)
    return G


def mora_standard_basis(gens, trunc: int | None = None):
    """Public entry: standard basis of a list of MPoly for the local order."""
    if not gens:
        return []
    ring = gens[0].ring
    pk = Packing(ring.nvars, LOCAL_ORDER)
    dicts = [_to_local_dict(g, pk, trunc) for g in gens]
    basis = mora_standard_basis_dicts(dicts, pk, trunc)
    return [MPoly(ring, {pk.unpack(k): v for k, v in d.items()}) for d in basis]


def _local_colength(lead_exps, nvars, bound: int):
    """Number of monomials of degree < bound outside the staircase."""
    count = 0
    stack = [(0,) * nvars]
    seen = {(0,) * nvars}
    order = []
    # enumerate all monomials of degree < bound (bound is small here)
    def rec(prefix, rem, idx):
        if idx == nvars - 1:
            yield prefix + (rem,)
            return
        for k in range(rem + 1):
            yield from rec(prefix + (k,), rem - k, idx + 1)
    for d in range(bound):
        for mono in rec((), d, 0):
            if not any(all(x >= y for x, y in zip(mono, lead)) for lead in lead_exps):
                count += 1
    return count


def local_colength_of_ideal(gens, trunc: int) -> int:
    """Colength of (gens) + m^trunc in the local ring at the origin."""
    ring = gens[0].ring
    pk = Packing(ring.nvars, LOCAL_ORDER)
    dicts = [_to_local_dict(g, pk, trunc) for g in gens]
    dicts = [d for d in dicts if d]
    if not dicts:
        # the ideal is m^trunc itself
        return _local_colength([], ring.nvars, trunc)
    basis = mora_standard_basis_dicts(dicts, pk, trunc)
    leads = [pk.unpack(max(d)) for d in basis]
    return _local_colength(leads, ring.nvars, trunc)


def _stabilized_colength(gens, start: int = 3, cap: int = MILNOR_CAP):
    prev = None
    k = start
    while k <= cap:
        cur = local_colength_of_ideal(gens, k)
        if prev is not None and cur == prev:
            return cur
        # once the colength is strictly below the full truncation dimension
        # it can still grow, so only equality of consecutive bounds stops
        prev = cur
        k += 1
    return None


def milnor_number(f: LocalFunction):
    """Local colength of the Jacobian ideal; NotIsolated when infinite."""
    jac = [f.poly.partial_derivative(i) for i in range(f.ring.nvars)]
    jac = [p for p in jac if not p.is_zero()]
    if not jac:
        return NOT_ISOLATED
    mu = _stabilized_colength(jac)
    return NOT_ISOLATED if mu is None else mu


def tjurina_number(f: LocalFunction):
    """Local colength of <f, df/dx, df/dy, df/dz>."""
    gens = [f.poly] + [f.poly.partial_derivative(i) for i in range(f.ring.nvars)]
    gens = [p for p in gens if not p.is_zero()]
    if not gens:
        return NOT_ISOLATED
    tau = _stabilized_colength(gens)
    return NOT_ISOLATED if tau is None else tau


# ---------------------------------------------------------------------------
# Hessian corank and the splitting lemma
# ---------------------------------------------------------------------------

def _inv(c):
    return (Fraction(1) / c) if isinstance(c, (int, Fraction)) else c.inverse()


def hessian_corank(f: LocalFunction) -> int:
    n = f.ring.nvars
    H = f.poly.hessian_at_origin()
    rank = _symmetric_rank(H, f.ring.field)
    return n - rank


def _symmetric_rank(H, field) -> int:
    n = len(H)
    m = [row[:] for row in H]
    rank = 0
    rows = list(range(n))
    for col in range(n):
        piv = None
        for r in range(rank, n):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = _inv(m[rank][col])
        for r in range(n):
            if r != rank and m[r][col]:
                fac = m[r][col] * inv
                m[r] = [a - fac * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _congruence_diagonalize(H, field):
    """P with P^T H P diagonal; rank columns first.  Returns (P, diag)."""
    n = len(H)
    A = [row[:] for row in H]
    P = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]

    def add_col(dst, src, c):
        # column operation on A (both sides, keeping symmetry) and on P
        for r in range(n):
            A[r][dst] = A[r][dst] + c * A[r][src]
        for r in range(n):
            A[dst][r] = A[dst][r] + c * A[src][r]
        for r in range(n):
            P[r][dst] = P[r][dst] + c * P[r][src]

    def swap_col(i, j):
        for r in range(n):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(n):
            A[i][r], A[j][r] = A[j][r], A[i][r]
        for r in range(n):
            P[r][i], P[r][j] = P[r][j], P[r][i]

    k = 0
    while k < n:
        if not A[k][k]:
            # bring a nonzero diagonal entry to position k
            found = False
            for j in range(k + 1, n):
                if A[j][j]:
                    swap_col(k, j)
                    found = True
                    break
            if not found:
                # all remaining diagonal entries vanish; use an off-diagonal
                pair = None
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if A[i][j]:
                            pair = (i, j)
                            break
                    if pair:
                        break
                if pair is None:
                    break  # remaining block is zero
                i, j = pair
                add_col(i, j, field.one)  # now A[i][i] = 2*A[i][j] != 0
                if i != k:
                    swap_col(k, i)
        d = A[k][k]
        inv = _inv(d)
        for j in range(k + 1, n):
            if A[k][j]:
                add_col(j, k, -(A[k][j] * inv))
        k += 1
    diag = [A[i][i] for i in range(n)]
    return P, diag


def splitting_residual(f: LocalFunction, jet: int | None = None) -> MPoly:
    """Residual series in the kernel variables after completing squares.

    A linear change diagonalizes the quadratic part; mixed terms of total
    degree <= jet are then removed variable by variable.  Only corank <= 2
    inputs are accepted.
    """
    ring = f.ring
    field = ring.field
    n = ring.nvars
    corank = hessian_corank(f)
    if corank > 2:
        raise CorankThreeError("corank 3 inputs are not simple")
    if jet is None:
        mu = milnor_number(f)
        jet = (mu + 2) if isinstance(mu, int) else JET_CAP
    jet = min(jet, JET_CAP)

    H = f.poly.hessian_at_origin()
    P, diag = _congruence_diagonalize(H, field)
    # order columns so the rank block comes first
    rank_cols = [i for i in range(n) if diag[i]]
    kern_cols = [i for i in range(n) if not diag[i]]
    perm = rank_cols + kern_cols
    M = [[P[r][perm[c]] for c in range(n)] for r in range(n)]
    g = f.poly.linear_change(M).truncate_degree(jet)
    lam = [diag[i] for i in rank_cols]
    r = len(rank_cols)

    vars_ = ring.variables()
    while True:
        mixed = [(sum(e), GREVLEX.key(e), e) for e in g.terms
                 if sum(e) >= 3 and any(e[i] for i in range(r))]
        if not mixed:
            break
        mixed.sort()
        _, _, e = mixed[0]
        c = g.terms[e]
        i = next(i for i in range(r) if e[i])
        rest = list(e)
        rest[i] -= 1
        eps_coeff = c * _inv(lam[i] * 2)
        eps = ring.monomial(tuple(rest), eps_coeff)
        subs = {i: vars_[i] - eps}
        g = g.substitute(subs, max_degree=jet)
    kern_names = tuple(ring.names[j] for j in range(r, n))
    out_ring = PolyRing(field, kern_names) if kern_names else PolyRing(field, ("u",))
    out = {}
    for e, c in g.terms.items():
        if sum(e) < 3:
            continue
        if any(e[i] for i in range(r)):
            raise AssertionError("mixed term survived the splitting loop")
        out[tuple(e[r:]) if kern_names else (0,)] = c
    return MPoly(out_ring, out)


def binary_cubic_root_type(cubic: MPoly) -> str:
    """Projective root-multiplicity pattern of a binary cubic form.

    Returns one of "three-distinct", "one-double", "triple", "zero".  The
    pattern is read off gcd degrees over the coefficient field, never by
    extracting roots.
    """
    if cubic.is_zero():
        return "zero"
    if cubic.ring.nvars != 2 or cubic.total_degree() != 3 or not cubic.is_homogeneous():
        raise ValueError("expected a binary cubic form")
    field = cubic.ring.field
    zero = field.zero
    # dehomogenize at the second variable
    coeffs = [zero, zero, zero, zero]
    for e, c in cubic.terms.items():
        coeffs[e[0]] = c
    p = UPoly(coeffs)
    inf_mult = 3 - p.degree
    dp = p.derivative()
    if p.degree >= 1 and not dp.is_zero():
        gc = upoly_gcd(p, dp)
        distinct_affine = p.degree - gc.degree
    else:
        distinct_affine = p.degree
    total_distinct = distinct_affine + (1 if inf_mult > 0 else 0)
    if total_distinct == 3:
        return "three-distinct"
    if total_distinct == 2:
        return "one-double"
    return "triple"


# ---------------------------------------------------------------------------
# ADE classification (Arnold determinator)
# ---------------------------------------------------------------------------

def classify_ade(f: LocalFunction) -> SingularityReport:
    """Determine the simple-singularity type of an isolated hypersurface
    singularity in three variables."""
    mu = milnor_number(f)
    if mu == NOT_ISOLATED:
        return SingularityReport(corank=-1, milnor=NOT_ISOLATED,
                                 tjurina=NOT_ISOLATED, type_=NOT_ISOLATED)
    tau = tjurina_number(f)
    c = hessian_corank(f)
    if c == 0:
        assert mu == 1, f"corank 0 forces an A1 point, got milnor {mu}"
        return SingularityReport(c, mu, tau, "A1")
    if c == 1:
        return SingularityReport(c, mu, tau, f"A{mu}")
    if c == 3:
        return SingularityReport(c, mu, tau, "NotSimple")
    residual = splitting_residual(f, jet=min(mu + 2, JET_CAP))
    cubic = residual.graded_component(3)
    if residual.ring.nvars != 2:
        return SingularityReport(c, mu, tau, "NotSimple", evidence="bad-kernel")
    rt = binary_cubic_root_type(cubic)
    if rt == "three-distinct":
        assert mu == 4, f"three distinct cubic roots force D4, got milnor {mu}"
        return SingularityReport(c, mu, tau, "D4", evidence=rt)
    if rt == "one-double":
        assert mu >= 5, f"a double root needs milnor >= 5, got {mu}"
        return SingularityReport(c, mu, tau, f"D{mu}", evidence=rt)
    if rt == "triple":
        if mu in (6, 7, 8):
            return SingularityReport(c, mu, tau, f"E{mu}", evidence=rt)
        return SingularityReport(c, mu, tau, "NotSimple", evidence=rt)
    return SingularityReport(c, mu, tau, "NotSimple", evidence=rt)


def tau_of_type(type_: str) -> int:
    """Tjurina number of an ADE normal form (quasi-homogeneous: tau = mu)."""
    return int(type_[1:])
