"""Certified point extraction for zero-dimensional affine ideals over Q.

Strategy: pick a deterministic random linear form u (the shape-position
change of coordinates), compute the minimal polynomial h of multiplication
by u on the quotient algebra by a multi-modular Krylov computation, factor
the squarefree part of h over Q, and then solve the fiber system over each
residue field exactly.  The run is self-certifying: every returned point is
verified against the original generators, and the colength accounting

    sum over factors q of  deg(q) * (fiber colength over Q[t]/(q))

must equal the Q-dimension of the quotient algebra, which proves no point
was missed.  If a fiber fails to be a single rational point over its
residue field, the linear form was not separating and a fresh one is tried
(up to 16 attempts).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import random

from ..exactnum import (
    NumberField,
    NumberFieldElement,
    QQ,
    RationalField,
    UPoly,
    factor_rational_upoly,
    next_prime,
    squarefree_part,
)
from ..mpoly import GREVLEX, MPoly, PolyRing
from .engine import Packing, buchberger_engine, nf_modp

SHAPE_SEED = 0x5EED
_PRIME_FLOOR = 1 << 59


@dataclass(frozen=True)
class PointComponent:
    """One Q-irreducible family of points, given by a residue field and the
    coordinates of the distinguished point over it."""

    residue_field: NumberField
    coords: tuple
    eliminant_multiplicity: int
    local_colength: int

    @property
    def degree(self) -> int:
        return self.residue_field.degree


@dataclass
class ZeroDimSolution:
    components: list
    total_point_count: int
    quotient_dimension: int
    separating_form: tuple
    eliminant: UPoly

    def counts_by_degree(self):
        out = {}
        for c in self.components:
            out[c.degree] = out.get(c.degree, 0) + 1
        return out


class _ModularData:
    """Per-prime Groebner data for the quotient algebra."""

    def __init__(self, ideal, pk, staircase, p):
        from . import to_engine_dict
        gens = [to_engine_dict(g, pk, "modp", p) for g in ideal.generators]
        basis, _ = buchberger_engine(gens, pk, "modp", p=p)
        self.leads = sorted(pk.unpack(max(d)) for d in basis)
        self.p = p
        self.basis = basis
        self.lms = []
        self.preps = []
        self.degs = []
        self.tails = []
        for d in basis:
            lm = max(d)
            self.lms.append(lm)
            self.preps.append(pk.prep(lm))
            self.degs.append(pk.deg(lm))
            self.tails.append(sorted(((k, v) for k, v in d.items() if k != lm),
                                     reverse=True))
        self.pk = pk
        # staircase must match the exact one for the prime to be usable
        self.matches = (self._staircase() == staircase)
        self._nf_cache = {}

    def _staircase(self):
        return _staircase_from_leads(self.leads, self.pk.nvars)

    def nf_monomial(self, exps):
        hit = self._nf_cache.get(exps)
        if hit is None:
            key = self.pk.pack(exps)
            hit = nf_modp({key: 1}, self.lms, self.preps, self.degs,
                          self.tails, self.pk, self.p)
            self._nf_cache[exps] = hit
        return hit


def _staircase_from_leads(leads, nvars):
    """Monomials under the staircase, or None if infinite."""
    caps = []
    for i in range(nvars):
        pures = [e[i] for e in leads if all(x == 0 for j, x in enumerate(e) if j != i)]
        if not pures:
            return None
        caps.append(min(pures))
    box = [[]]
    for i in range(nvars):
        box = [b + [k] for b in box for k in range(caps[i])]
    out = []
    for exps in box:
        t = tuple(exps)
        if not any(all(x >= y for x, y in zip(t, lead)) for lead in leads):
            out.append(t)
    out.sort(key=GREVLEX.key)
    return out


def _minpoly_mod_p(mat_columns, dim, p, start_index):
    """Monic minimal annihilator of the Krylov sequence of e_start."""
    v = [0] * dim
    v[start_index] = 1
    echelon = []  # (pivot, vector, combo)
    vectors = [v]
    k = 0
    while True:
        # reduce vectors[k] against the echelon
        red = list(vectors[k])
        comb = [0] * k + [1]
        for piv, evec, ecomb in echelon:
            c = red[piv]
            if c:
                for i in range(dim):
                    red[i] = (red[i] - c * evec[i]) % p
                for i, cc in enumerate(ecomb):
                    comb[i] = (comb[i] - c * cc) % p
        piv = next((i for i, c in enumerate(red) if c), None)
        if piv is None:
            # dependency found: comb gives sum comb[j] * v_j = 0
            while comb and comb[-1] == 0:
                comb.pop()
            inv = pow(comb[-1], p - 2, p)
            return [c * inv % p for c in comb]
        inv = pow(red[piv], p - 2, p)
        red = [c * inv % p for c in red]
        comb = [c * inv % p for c in comb]
        echelon.append((piv, red, comb))
        # next Krylov vector
        prev = vectors[k]
        nxt = [0] * dim
        for j, col in enumerate(mat_columns):
            c = prev[j]
            if c:
                for i, a in col:
                    nxt[i] = (nxt[i] + c * a) % p
        vectors.append(nxt)
        k += 1
        if k > dim:
            raise RuntimeError("Krylov sequence failed to terminate")


def _crt_pair(r1, m1, r2, m2):
    inv = pow(m1 % m2, -1, m2)
    t = ((r2 - r1) % m2) * inv % m2
    return r1 + m1 * t, m1 * m2


def _rational_reconstruct(r, m):
    """Wang reconstruction: a/b = r mod m with |a|, b <= sqrt(m/2)."""
    from math import isqrt
    bound = isqrt(m // 2)
    if bound < 1:
        bound = 1
    a0, a1 = m, r % m
    b0, b1 = 0, 1
    while a1 > bound:
        q = a0 // a1
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    if abs(b1) > bound or b1 == 0:
        return None
    from math import gcd
    if gcd(abs(b1), m) != 1:
        return None
    if b1 < 0:
        a1, b1 = -a1, -b1
    return Fraction(a1, b1)


def zero_dim_points(ideal, max_attempts: int = 16, progress=None) -> ZeroDimSolution:
    """Count and extract the points of a zero-dimensional affine ideal.

    The ideal must be over Q.  Returns one abstract point per Q-irreducible
    component, with coordinates in Q[t]/(factor); the certified
    total_point_count is the number of geometric points.
    """
    from . import Ideal, buchberger, NotZeroDimensionalError, ShapePositionFailedError

    ring = ideal.ring
    if not isinstance(ring.field, RationalField):
        raise ValueError("zero_dim_points expects an ideal over Q")
    n = ring.nvars
    if n == 1:
        return _univariate_points(ideal)
    pk = Packing(n, GREVLEX)
    gb = buchberger(ideal, GREVLEX)
    leads = [g.leading(GREVLEX)[0] for g in gb.basis]
    if leads and leads[0] == (0,) * n:
        return ZeroDimSolution([], 0, 0, (), UPoly([Fraction(1)]))
    staircase = _staircase_from_leads(leads, n)
    if staircase is None:
        raise NotZeroDimensionalError(
            "leading-term staircase is infinite; the ideal is not zero-dimensional")
    D = len(staircase)
    if D == 0:
        return ZeroDimSolution([], 0, 0, (), UPoly([Fraction(1)]))
    index = {m: i for i, m in enumerate(staircase)}
    one_index = index[(0,) * n]

    rng = random.Random(SHAPE_SEED)
    modular_cache = {}
    prime_list = []

    def get_modular(p):
        md = modular_cache.get(p)
        if md is None:
            md = _ModularData(ideal, pk, staircase, p)
            modular_cache[p] = md
        return md

    def next_usable_prime():
        p = prime_list[-1] if prime_list else _PRIME_FLOOR
        while True:
            p = next_prime(p)
            try:
                md = get_modular(p)
            except Exception:
                continue
            if md.matches:
                prime_list.append(p)
                return p

    attempt_errors = []
    for attempt in range(max_attempts):
        coeffs = tuple(rng.randint(-9, 9) for _ in range(n))
        if all(c == 0 for c in coeffs):
            continue

        got = _modular_eliminant(coeffs, staircase, index, one_index,
                                 get_modular, next_usable_prime, progress)
        if got is None:
            attempt_errors.append("eliminant reconstruction failed")
            continue
        sqf, mult_of = got
        if progress is not None:
            progress(f"factoring squarefree eliminant of degree {sqf.degree}")

        factors = factor_rational_upoly(sqf)
        if progress is not None:
            progress(f"eliminant factor degrees: {[q.degree for q, _ in factors]}")
        components = []
        covered = 0
        ok = True
        for q, _mult in factors:
            elim_mult = mult_of(q)
            got_comp = _solve_component(ideal, coeffs, q, elim_mult)
            if progress is not None:
                progress(f"component over degree-{q.degree} field: "
                         + ("certified" if isinstance(got_comp, tuple)
                            else str(got_comp)))
            if got_comp == "empty":
                continue  # spurious eliminant factor; accounting still decides
            if got_comp is None:
                ok = False
                break
            comp, dim_b = got_comp
            components.append(comp)
            covered += dim_b
        if not ok:
            attempt_errors.append("non-separating form " + str(coeffs))
            continue
        if covered != D:
            attempt_errors.append(
                f"accounting {covered} != quotient dimension {D}")
            continue
        components.sort(key=lambda c: (c.degree, c.residue_field.modulus.coeffs))
        total = sum(c.degree for c in components)
        return ZeroDimSolution(components, total, D, coeffs, sqf)

    raise ShapePositionFailedError(
        f"no separating form after {max_attempts} attempts: {attempt_errors[-3:]}")


def _univariate_points(ideal) -> ZeroDimSolution:
    from . import NotZeroDimensionalError
    from ..exactnum import upoly_gcd

    g = UPoly(())
    for gen in ideal.generators:
        up = UPoly([gen.terms.get((i,), Fraction(0))
                    for i in range(gen.total_degree() + 1)])
        g = upoly_gcd(g, up)
    if g.is_zero():
        raise NotZeroDimensionalError("univariate ideal is zero")
    if g.degree == 0:
        return ZeroDimSolution([], 0, 0, (1,), UPoly([Fraction(1)]))
    comps = []
    for q, _ in factor_rational_upoly(squarefree_part(g)):
        L = NumberField(q, symbol="t", _trusted=True)
        comps.append(PointComponent(L, (L.gen,), _multiplicity_in(g, q),
                                    _multiplicity_in(g, q)))
    comps.sort(key=lambda c: (c.degree, c.residue_field.modulus.coeffs))
    return ZeroDimSolution(comps, sum(c.degree for c in comps), g.degree,
                           (1,), g.monic())


def _multiplicity_in(h: UPoly, q: UPoly) -> int:
    m = 0
    cur = h
    while True:
        quo, rem = divmod(cur, q)
        if not rem.is_zero():
            return m
        m += 1
        cur = quo


def _modular_eliminant(coeffs, staircase, index, one_index, get_modular,
                       next_usable_prime, progress=None):
    """Squarefree eliminant of the separating form u by CRT.

    Per prime: minimal polynomial of multiplication by u on the quotient
    algebra via a Krylov sequence, then its squarefree part mod p.  Only
    the (much smaller) squarefree part is rationally reconstructed; the
    multiplicity metadata is read off a single good prime.  Downstream
    fiber accounting certifies the result exactly, so stabilization over
    two rounds suffices here.
    """
    from ..exactnum import _fp_deriv, _fp_gcd, _fp_divmod

    n = len(coeffs)
    D = len(staircase)
    residues = []  # (p, minpoly degree, squarefree coeff list, full minpoly)
    prev_candidate = None
    for round_ in range(64):
        p = next_usable_prime()
        md = get_modular(p)
        columns = []
        for mono in staircase:
            col = {}
            for i in range(n):
                c = coeffs[i] % p
                if not c:
                    continue
                up = list(mono)
                up[i] += 1
                up = tuple(up)
                j = index.get(up)
                if j is not None:
                    col[j] = (col.get(j, 0) + c) % p
                else:
                    for k, v in md.nf_monomial(up).items():
                        jj = index[md.pk.unpack(k)]
                        col[jj] = (col.get(jj, 0) + c * v) % p
            columns.append(sorted(col.items()))
        mp = _minpoly_mod_p(columns, D, p, one_index)
        gc = _fp_gcd(mp, _fp_deriv(mp, p), p)
        sqf_p = _fp_divmod(mp, gc, p)[0]
        residues.append((p, len(mp), sqf_p, mp))
        if progress is not None:
            progress(f"eliminant round {round_ + 1}: prime {p}, "
                     f"minpoly degree {len(mp) - 1}")
        best = max((r[1], len(r[2])) for r in residues)
        usable = [r for r in residues if (r[1], len(r[2])) == best]
        if len(usable) < 2:
            continue
        slen = best[1]
        cand = []
        good = True
        for j in range(slen):
            r = usable[0][2][j]
            m = usable[0][0]
            for p2, _, s2, _ in usable[1:]:
                r, m = _crt_pair(r, m, s2[j], p2)
            f = _rational_reconstruct(r, m)
            if f is None:
                good = False
                break
            cand.append(f)
        if not good:
            continue
        cand_poly = UPoly(cand)
        if prev_candidate is not None and cand_poly == prev_candidate:
            p0, _, _, mp0 = usable[0]

            def mult_of(q: UPoly, _p=p0, _mp=mp0):
                qp = [int(c.numerator) * pow(int(c.denominator), _p - 2, _p) % _p
                      for c in q.coeffs]
                m = 0
                cur = _mp
                while len(cur) >= len(qp):
                    quo, rem = _fp_divmod(cur, qp, _p)
                    if rem:
                        break
                    m += 1
                    cur = quo
                return max(m, 1)

            return cand_poly, mult_of
        prev_candidate = cand_poly
    return None


def _solve_component(ideal, coeffs, q: UPoly, elim_mult: int, chart_gb=None):
    """Certify the component of V(ideal) with u-values the roots of q.

    Exact route, no number-field Groebner bases:
      1. one rational Groebner basis of  ideal + (q(u)^N)  cuts out the
         candidate component algebra B; its Q-dimension is exact;
      2. candidate coordinate functions w_i(t) (coordinates as polynomials
         in the separating value) are interpolated from tiny mod-p fibers
         at completely-split primes and CRT-reconstructed;
      3. x_i - w_i(u) is verified nilpotent in B by exact normal-form
         squaring, which proves B is local with residue field Q[t]/(q) and
         pins the point's coordinates.

    Returns (PointComponent, dim_Q B); "empty" when B = 0; None when the
    separating form fails or reconstruction does not stabilize.
    """
    from . import Ideal, buchberger, normal_form

    ring = ideal.ring
    n = ring.nvars
    if any(c.denominator != 1 for c in q.coeffs):
        raise ValueError("eliminant factor must be integral and monic")

    # the separating linear form as a polynomial
    vars_ = ring.variables()
    u_poly = ring.zero()
    for i in range(n):
        if coeffs[i]:
            u_poly = u_poly + vars_[i] * coeffs[i]

    N = max(elim_mult, 1)
    for _ in range(4):
        qn = _compose_power(q, u_poly, N)
        gb_q = buchberger(Ideal(ring, list(ideal.generators) + [qn]))
        leads = [g.leading(GREVLEX)[0] for g in gb_q.basis]
        if leads and leads[0] == (0,) * n:
            return "empty"
        stair = _staircase_from_leads(leads, n)
        if stair is None:
            return None
        dim_b = len(stair)
        # candidate coordinate functions from split-prime fibers
        ws = _coordinate_functions(ideal, coeffs, q, n)
        if ws is None:
            return None
        # exact nilpotency certificates x_i - w_i(u) in B
        ok = True
        for i in range(n):
            wi_of_u = _compose_upoly(ws[i], u_poly, ring)
            z = vars_[i] - wi_of_u
            if not _nilpotent_in(z, gb_q, dim_b, normal_form):
                ok = False
                break
        if ok:
            L = NumberField(q, symbol="t", _trusted=True)
            alpha = L.gen if q.degree > 1 else L.from_rational(-q.coeffs[0])
            coords = tuple(_eval_upoly_at(w, alpha, L) for w in ws)
            for g in ideal.generators:
                if g.evaluate(coords):
                    return None
            comp = PointComponent(L, coords, elim_mult, dim_b // q.degree)
            return comp, dim_b
        # nilpotency failed: either N too small or u not separating
        N += 1
    return None


def _eval_upoly_at(w: UPoly, alpha, L):
    acc = L.zero
    for c in reversed(w.coeffs):
        acc = acc * alpha + c
    return acc


def _compose_power(q: UPoly, u_poly: MPoly, N: int) -> MPoly:
    """(q(u))^N as a polynomial in the ring of u_poly."""
    ring = u_poly.ring
    acc = ring.zero()
    for c in reversed(q.coeffs):
        acc = acc * u_poly + ring.constant(c)
    return acc ** N


def _compose_upoly(w: UPoly, u_poly: MPoly, ring) -> MPoly:
    acc = ring.zero()
    for c in reversed(w.coeffs):
        acc = acc * u_poly + ring.constant(c)
    return acc


def _nilpotent_in(z: MPoly, gb, dim_b: int, normal_form) -> bool:
    r = normal_form(z, gb)
    steps = 0
    bound = 1
    while bound < max(dim_b, 2):
        bound *= 2
        steps += 1
    for _ in range(steps + 1):
        if r.is_zero():
            return True
        r = normal_form(r * r, gb)
    return r.is_zero()


def _coordinate_functions(ideal, coeffs, q: UPoly, n, rounds_cap: int = 24):
    """w_i(t) with x_i = w_i(separating value) on the component of q.

    Interpolated from fibers at completely-split primes, CRT + rational
    reconstruction, stabilization over two consecutive rounds.  Soundness
    comes from the caller's exact nilpotency check, not from this routine.
    """
    d = q.degree
    qd = [int(c) for c in q.coeffs]
    prev = None
    residues = []  # (p, [w_i coeff lists mod p])
    p = _PRIME_FLOOR >> 24  # smaller primes: plenty for split search
    for _ in range(rounds_cap):
        found = None
        while found is None:
            p = next_prime(p)
            if qd[-1] % p == 0 or qd[0] % p == 0:
                continue
            roots = _split_roots(qd, p)
            if roots is None:
                continue
            fibers = []
            for rho in roots:
                pt = _fiber_point_mod_p(ideal, coeffs, rho, p, n)
                if pt is None:
                    fibers = None
                    break
                fibers.append(pt)
            if fibers is None:
                continue
            found = (roots, fibers)
        roots, fibers = found
        # Lagrange interpolation of each coordinate over F_p
        ws_p = []
        for i in range(n):
            vals = [f[i] for f in fibers]
            ws_p.append(_interpolate_mod_p(roots, vals, p))
        residues.append((p, ws_p))
        if len(residues) < 2:
            continue
        cand = []
        good = True
        for i in range(n):
            ci = []
            for j in range(d):
                r, m = residues[0][1][i][j], residues[0][0]
                for p2, ws2 in residues[1:]:
                    r, m = _crt_pair(r, m, ws2[i][j], p2)
                f = _rational_reconstruct(r, m)
                if f is None:
                    good = False
                    break
                ci.append(f)
            if not good:
                break
            cand.append(UPoly(ci))
        if not good:
            continue
        if prev is not None and cand == prev:
            return cand
        prev = cand
    return None


def _split_roots(qd, p):
    """All roots of q mod p when q splits completely and stays squarefree."""
    from ..exactnum import _fp_normalize, _fp_gcd, _fp_deriv, _fp_pow_mod

    from ..exactnum import _fp_divmod as _fpdm

    fp = _fp_normalize(qd, p)
    if len(fp) - 1 != len(qd) - 1:
        return None
    if len(fp) == 2:
        return [(-fp[0]) * pow(fp[1], p - 2, p) % p]
    if len(_fp_gcd(fp, _fp_deriv(fp, p), p)) != 1:
        return None
    # split test: x^p = x mod q
    xp = _fp_pow_mod([0, 1], p, fp, p)
    xred = _fpdm([0, 1], fp, p)[1]
    nmax = max(len(xp), len(xred))
    diff = [(a - b) % p for a, b in zip(xp + [0] * (nmax - len(xp)),
                                        xred + [0] * (nmax - len(xred)))]
    if _fp_normalize(diff, p):
        return None
    roots = []
    # find roots by splitting (degree is tiny, trial by factoring pairs)
    stack = [fp]
    import random as _random
    rng = _random.Random(SHAPE_SEED ^ p)
    while stack:
        f = stack.pop()
        deg = len(f) - 1
        if deg == 1:
            roots.append((-f[0]) * pow(f[1], p - 2, p) % p)
            continue
        while True:
            a = rng.randrange(p)
            h = _fp_pow_mod([a, 1], (p - 1) // 2, f, p)
            h = _fp_normalize([c - (1 if i == 0 else 0) for i, c in enumerate(h + [0])], p)
            g = _fp_gcd(h, f, p)
            if 0 < len(g) - 1 < deg:
                from ..exactnum import _fp_divmod
                stack.append(g)
                stack.append(_fp_divmod(f, g, p)[0])
                break
    roots.sort()
    return roots


def _fiber_point_mod_p(ideal, coeffs, rho, p, n):
    """Unique F_p-point of the fiber u = rho, or None."""
    from . import to_engine_dict

    ring = ideal.ring
    solve_var = max(range(n), key=lambda i: abs(coeffs[i]))
    rest = [i for i in range(n) if i != solve_var]
    pk = Packing(n - 1, GREVLEX)
    inv_c = pow(coeffs[solve_var] % p, p - 2, p)
    gens = []
    for g in ideal.generators:
        gd = {}
        for e, c in g.terms.items():
            num = c.numerator % p
            den = c.denominator % p
            if den == 0:
                return None
            v = num * pow(den, p - 2, p) % p
            if not v:
                continue
            # substitute x_solve = (rho - sum c_i x_i) * inv_c
            base = {tuple(e[i] for i in rest): v}
            k = e[solve_var]
            if k:
                lin = {(0,) * (n - 1): rho % p}
                for pos, i in enumerate(rest):
                    if coeffs[i] % p:
                        key = tuple(1 if j == pos else 0 for j in range(n - 1))
                        lin[key] = (-coeffs[i]) % p
                lin = {kk: vv * inv_c % p for kk, vv in lin.items()}
                powk = _poly_pow_mod_p(lin, k, p, n - 1)
                base = _poly_mul_mod_p(base, powk, p)
            for kk, vv in base.items():
                gd[kk] = (gd.get(kk, 0) + vv) % p
        d = {pk.pack(e): v for e, v in gd.items() if v}
        if d:
            gens.append(d)
    if not gens:
        return None
    basis, _ = buchberger_engine(gens, pk, "modp", p=p)
    if not basis:
        return None
    leads = [pk.unpack(max(dd)) for dd in basis]
    if min(sum(e) for e in leads) == 0:
        return None
    # expect leading ideal with a unique point: each variable's reduced
    # value is read from the squarefree part of its minimal polynomial
    stair = _staircase_from_leads(leads, n - 1)
    if stair is None:
        return None
    lms, preps, degs, tails = [], [], [], []
    for dd in basis:
        lm = max(dd)
        lms.append(lm)
        preps.append(pk.prep(lm))
        degs.append(pk.deg(lm))
        tails.append(sorted(((k, v) for k, v in dd.items() if k != lm),
                            reverse=True))
    vals = []
    sindex = {m: i for i, m in enumerate(stair)}
    dim = len(stair)
    for pos in range(n - 1):
        # Krylov of multiplication by the variable on the quotient
        cols = []
        for mono in stair:
            up = list(mono)
            up[pos] += 1
            up = tuple(up)
            j = sindex.get(up)
            if j is not None:
                cols.append([(j, 1)])
            else:
                red = nf_modp({pk.pack(up): 1}, lms, preps, degs, tails, pk, p)
                cols.append(sorted((sindex[pk.unpack(k)], v)
                                   for k, v in red.items()))
        mp = _minpoly_mod_p(cols, dim, p, sindex[(0,) * (n - 1)])
        from ..exactnum import _fp_deriv, _fp_gcd, _fp_divmod
        gc = _fp_gcd(mp, _fp_deriv(mp, p), p)
        sq = _fp_divmod(mp, gc, p)[0]
        if len(sq) != 2:
            return None
        vals.append((-sq[0]) * pow(sq[1], p - 2, p) % p)
    # recover the solved coordinate
    acc = rho % p
    for pos, i in enumerate(rest):
        acc = (acc - coeffs[i] * vals[pos]) % p
    solved = acc * inv_c % p
    out = []
    k = 0
    for i in range(n):
        if i == solve_var:
            out.append(solved)
        else:
            out.append(vals[k])
            k += 1
    return out


def _poly_mul_mod_p(a, b, p):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = (out.get(e, 0) + ca * cb) % p
    return {e: c for e, c in out.items() if c}


def _poly_pow_mod_p(a, k, p, nv):
    out = {(0,) * nv: 1}
    base = a
    while k:
        if k & 1:
            out = _poly_mul_mod_p(out, base, p)
        base = _poly_mul_mod_p(base, base, p)
        k >>= 1
    return out


def _interpolate_mod_p(nodes, vals, p):
    """Coefficients of the Lagrange interpolant mod p (degree < len(nodes))."""
    d = len(nodes)
    coeffs = [0] * d
    for i in range(d):
        # basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        num = [1]
        denom = 1
        for j in range(d):
            if j == i:
                continue
            num = _fp_lin_mul(num, (-nodes[j]) % p, p)
            denom = denom * (nodes[i] - nodes[j]) % p
        scale = vals[i] * pow(denom, p - 2, p) % p
        for k in range(len(num)):
            coeffs[k] = (coeffs[k] + scale * num[k]) % p
    return coeffs


def _fp_lin_mul(poly, c0, p):
    """poly * (x + c0) mod p."""
    out = [0] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i] = (out[i] + c * c0) % p
        out[i + 1] = (out[i + 1] + c) % p
    return out
