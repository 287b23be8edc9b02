"""Gröbner bases (global orders) and Mora standard bases (local orders).

Ideals and submodules of free modules share one engine. Internally an
element is a dict mapping a *label* ``(component, e_1, ..., e_n)`` to a
coefficient; ideals live in component 0. Over QQ the engine works with
primitive integer vectors (fraction-free reduction, content removed after
each step); over GF(p) it works with monic residues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from operator import add, le, sub
from typing import Sequence

from .orders import GREVLEX, NEG_GREVLEX, MonomialOrder, module_pot
from .polynomial import Polynomial, Ring, Vector

__all__ = [
    "INFINITE",
    "GroebnerBasis",
    "StandardBasis",
    "UncertifiedBasisError",
    "buchberger",
    "standard_basis",
    "normal_form",
    "mora_normal_form",
    "quotient_dimension",
    "standard_monomials",
    "radical_membership",
    "ideal_membership",
    "leading_ideal_dimension",
]

INFINITE = math.inf


class UncertifiedBasisError(ValueError):
    pass


class _KeyCache(dict):
    __slots__ = ("keyf",)

    def __init__(self, keyf):
        super().__init__()
        self.keyf = keyf

    def __missing__(self, lab):
        v = self[lab] = self.keyf(lab)
        return v


class _Entry:
    __slots__ = ("poly", "lm", "lc", "ecart", "deg")

    def __init__(self, poly: dict, lm: tuple, ecart: int = 0, deg: int = 0):
        self.poly = poly
        self.lm = lm
        self.lc = poly[lm]
        self.ecart = ecart
        self.deg = deg


def _divides(a: tuple, b: tuple) -> bool:
    return a[0] == b[0] and all(map(le, a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return (a[0],) + tuple(map(max, a[1:], b[1:]))


def _coprime(a: tuple, b: tuple) -> bool:
    return not any(x and y for x, y in zip(a[1:], b[1:]))


class _Engine:
    def __init__(self, order: MonomialOrder, p: int, is_ideal: bool, weights: Sequence[int] | None = None):
        self.order = order
        self.p = p
        self.is_ideal = is_ideal
        self.local = not order.is_global
        self.cache = _KeyCache(order.labeled_key())
        self.k = self.cache.__getitem__
        self.weights = tuple(weights) if weights else None

    # scalar helpers ----------------------------------------------------------
    def lm(self, h: dict) -> tuple:
        return max(h, key=self.k)

    def normalize(self, h: dict) -> dict:
        if not h:
            return h
        lc = h[self.lm(h)]
        p = self.p
        if p:
            if lc == 1:
                return h
            inv = pow(lc, -1, p)
            return {m: c * inv % p for m, c in h.items()}
        g = math.gcd(*h.values())
        if lc < 0:
            g = -g
        if g == 1:
            return h
        return {m: c // g for m, c in h.items()}

    def degree(self, lab: tuple) -> int:
        d = sum(lab) - lab[0]
        if self.weights:
            d += self.weights[lab[0]]
        return d

    def ecart(self, h: dict, lm: tuple) -> int:
        return max(sum(m) - m[0] for m in h) - (sum(lm) - lm[0])

    def entry(self, h: dict) -> _Entry:
        lm = self.lm(h)
        return _Entry(h, lm, self.ecart(h, lm) if self.local else 0, self.degree(lm))

    # reduction -----------------------------------------------------------------
    def _step(self, h: dict, c, q: tuple, g: _Entry, rem: dict | None):
        """Cancel the term ``c * x^(q + lm(g))`` of ``h`` using ``g``.

        Returns the multiplier applied to ``h`` (always 1 over GF(p)).
        """
        p = self.p
        if p:
            b = c * pow(g.lc, -1, p) % p
            for m, d in g.poly.items():
                lab = tuple(map(add, m, q))
                v = (h.get(lab, 0) - b * d) % p
                if v:
                    h[lab] = v
                else:
                    h.pop(lab, None)
            return 1
        gl = g.lc
        gg = math.gcd(c, gl)
        a, b = gl // gg, c // gg
        if a < 0:
            a, b = -a, -b
        if a != 1:
            for m in h:
                h[m] *= a
            if rem:
                for m in rem:
                    rem[m] *= a
        for m, d in g.poly.items():
            lab = tuple(map(add, m, q))
            v = h.get(lab, 0) - b * d
            if v:
                h[lab] = v
            else:
                h.pop(lab, None)
        return a

    def _strip_content(self, h: dict, rem: dict | None) -> int:
        if self.p:
            return 1
        vals = list(h.values())
        if rem:
            vals.extend(rem.values())
        if not vals:
            return 1
        g = math.gcd(*vals)
        if g > 1:
            for m in h:
                h[m] //= g
            if rem:
                for m in rem:
                    rem[m] //= g
        return g

    def reduce(self, f: dict, basis: Sequence[_Entry], full: bool = False, track: bool = False):
        """Division by ``basis`` under a global order.

        Returns ``(remainder, scale)`` where ``remainder = scale * r`` and
        ``f - r`` lies in the span of ``basis``. Without ``full`` only the
        leading term is reduced.
        """
        h = dict(f)
        rem: dict = {}
        scale = Fraction(1)
        k = self.k
        while h:
            lm = max(h, key=k)
            c = h[lm]
            for g in basis:
                if _divides(g.lm, lm):
                    break
            else:
                if not full:
                    break
                rem[lm] = h.pop(lm)
                continue
            q = (0,) + tuple(map(sub, lm[1:], g.lm[1:]))
            a = self._step(h, c, q, g, rem)
            if a != 1:
                scale *= a
            s = self._strip_content(h, rem)
            if s != 1:
                scale /= s
        rem.update(h)
        return rem, scale

    def mora_nf(self, f: dict, basis: Sequence[_Entry]) -> dict:
        """Mora's weak normal form with écart-minimal reducer selection."""
        h = dict(f)
        T = list(basis)
        k = self.k
        while h:
            lm = max(h, key=k)
            best = None
            for t in T:
                if _divides(t.lm, lm) and (best is None or t.ecart < best.ecart):
                    best = t
                    if best.ecart == 0:
                        break
            if best is None:
                return h
            eh = self.ecart(h, lm)
            if best.ecart > eh:
                T.append(_Entry(dict(h), lm, eh))
            q = (0,) + tuple(map(sub, lm[1:], best.lm[1:]))
            self._step(h, h[lm], q, best, None)
            self._strip_content(h, None)
        return h

    def spoly(self, a: _Entry, b: _Entry) -> dict:
        L = _lcm(a.lm, b.lm)
        qa = (0,) + tuple(map(sub, L[1:], a.lm[1:]))
        qb = (0,) + tuple(map(sub, L[1:], b.lm[1:]))
        p = self.p
        if p:
            ca, cb = b.lc, a.lc
        else:
            gg = math.gcd(a.lc, b.lc)
            ca, cb = b.lc // gg, a.lc // gg
        out: dict = {}
        for m, c in a.poly.items():
            out[tuple(map(add, m, qa))] = c * ca
        for m, c in b.poly.items():
            lab = tuple(map(add, m, qb))
            v = out.get(lab, 0) - c * cb
            if p:
                v %= p
            if v:
                out[lab] = v
            else:
                out.pop(lab, None)
        if p:
            out = {m: v % p for m, v in out.items() if v % p}
        return out

    # pair bookkeeping (Gebauer–Möller) -------------------------------------------
    def update(self, G: list, pairs: dict, h: _Entry) -> None:
        k = len(G)
        lmh = h.lm
        use_product = self.is_ideal
        C = []
        for i, g in enumerate(G):
            if g.lm[0] != lmh[0]:
                continue
            C.append((i, _lcm(g.lm, lmh), use_product and _coprime(g.lm, lmh)))
        D = []
        while C:
            i, L, cop = C.pop(0)
            if cop or (
                not any(_divides(L2, L) for _, L2, _ in C) and not any(_divides(L2, L) for _, L2, _ in D)
            ):
                D.append((i, L, cop))
        for key in list(pairs):
            L = pairs[key]
            i, j = key
            if (
                _divides(lmh, L)
                and _lcm(G[i].lm, lmh) != L
                and _lcm(G[j].lm, lmh) != L
            ):
                del pairs[key]
        for i, L, cop in D:
            if not cop:
                pairs[(i, k)] = L
        G.append(h)

    def select(self, pairs: dict) -> tuple:
        return min(pairs, key=lambda ij: (self.degree(pairs[ij]), ij[1], ij[0]))

    # main loops ------------------------------------------------------------------
    def groebner(self, F: Sequence[dict], stop_on_unit: bool = False) -> list[_Entry]:
        G: list[_Entry] = []
        pairs: dict = {}
        for f in F:
            if f:
                self.update(G, pairs, self.entry(self.normalize(dict(f))))
        if stop_on_unit and self._has_unit(G):
            return G
        while pairs:
            ij = self.select(pairs)
            del pairs[ij]
            s = self.spoly(G[ij[0]], G[ij[1]])
            if not s:
                continue
            if self.local:
                h = self.mora_nf(s, G)
            else:
                h, _ = self.reduce(s, G)
            if h:
                e = self.entry(self.normalize(h))
                self.update(G, pairs, e)
                if stop_on_unit and self.is_ideal and not any(e.lm[1:]):
                    return G
        return G

    def _has_unit(self, G) -> bool:
        return self.is_ideal and any(not any(g.lm[1:]) for g in G)

    def minimalize(self, G: Sequence[_Entry]) -> list[_Entry]:
        out: list[_Entry] = []
        for g in sorted(G, key=lambda e: self.k(e.lm)):
            if not any(_divides(o.lm, g.lm) for o in out):
                out.append(g)
        return out

    def interreduce(self, G: Sequence[_Entry]) -> list[_Entry]:
        G = self.minimalize(G)
        out = []
        for i, g in enumerate(G):
            others = G[:i] + G[i + 1 :]
            # leading term is irreducible by minimality; reduce the tail only
            tail = dict(g.poly)
            lc = tail.pop(g.lm)
            r, scale = self.reduce(tail, others, full=True)
            h = {m: c for m, c in r.items()}
            if self.p:
                h[g.lm] = lc
            else:
                # r = scale * true_tail; bring lc to the same scale
                num, den = scale.numerator, scale.denominator
                h = {m: c * den for m, c in h.items()}
                h[g.lm] = lc * num
            out.append(self.entry(self.normalize(h)))
        return out

    def certify(self, G: Sequence[_Entry]) -> bool:
        for a, b in combinations(G, 2):
            if a.lm[0] != b.lm[0]:
                continue
            s = self.spoly(a, b)
            if not s:
                continue
            r = self.mora_nf(s, G) if self.local else self.reduce(s, G)[0]
            if r:
                return False
        return True


# conversions ------------------------------------------------------------------------


def _to_internal(obj, p: int) -> dict:
    if isinstance(obj, Polynomial):
        raw = {(0,) + e: c for e, c in obj.as_dict().items()}
    elif isinstance(obj, Vector):
        raw = {}
        for i, comp in enumerate(obj):
            for e, c in comp.as_dict().items():
                raw[(i,) + e] = c
    else:
        raise TypeError(f"expected Polynomial or Vector, got {type(obj).__name__}")
    if p or not raw:
        return raw
    den = 1
    for c in raw.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = {m: int(c * den) for m, c in raw.items()}
    g = math.gcd(*ints.values())
    return {m: v // g for m, v in ints.items()}


def _from_internal(h: dict, ring: Ring, rank: int | None, lm: tuple | None = None, monic: bool = True):
    field = ring.field
    if monic and h:
        lc = h[lm]
        if field.characteristic:
            inv = field.inv(lc)
            h = {m: field.norm(c * inv) for m, c in h.items()}
        else:
            h = {m: Fraction(c, lc) for m, c in h.items()}
    elif not field.characteristic:
        h = {m: Fraction(c) for m, c in h.items()}
    if rank is None:
        return Polynomial(ring, {m[1:]: c for m, c in h.items()}, _trusted=True)
    comps: list[dict] = [{} for _ in range(rank)]
    for m, c in h.items():
        comps[m[0]][m[1:]] = c
    return Vector(ring, [Polynomial(ring, d, _trusted=True) for d in comps])


def _prepare(gens, order: MonomialOrder | None, default: MonomialOrder):
    gens = list(gens)
    ring = None
    rank = None
    for g in gens:
        if ring is None:
            ring = g.ring
        elif g.ring != ring:
            raise ValueError("generators must share a ring")
        if isinstance(g, Vector):
            if rank is None:
                rank = len(g)
            elif rank != len(g):
                raise ValueError("module generators must share a rank")
        elif rank is not None:
            raise ValueError("cannot mix polynomials and vectors")
    order = order or default
    if rank is not None and not order.is_module:
        order = module_pot(order)
    if rank is None and order.is_module:
        raise ValueError("module order given for an ideal")
    return gens, ring, rank, order


@dataclass(frozen=True)
class GroebnerBasis:
    """A certified-by-construction Gröbner basis.

    ``generators`` are monic; for a module basis they are :class:`Vector`
    objects and ``rank`` is the free-module rank (``None`` for ideals).
    """

    ring: Ring
    generators: tuple
    order: MonomialOrder
    rank: int | None = None
    reduced: bool = True
    leading_labels: tuple = field(default=(), repr=False)

    local = False

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    @property
    def leading_monomials(self) -> list:
        """Leading exponents (ideals) or ``(component, exponents)`` pairs (modules)."""
        if self.rank is None:
            return [lab[1:] for lab in self.leading_labels]
        return [(lab[0], lab[1:]) for lab in self.leading_labels]

    @property
    def is_unit(self) -> bool:
        return self.rank is None and any(not any(lab[1:]) for lab in self.leading_labels)

    def _engine(self) -> _Engine:
        return _Engine(self.order, self.ring.field.characteristic, self.rank is None)

    def _entries(self, eng: _Engine) -> list[_Entry]:
        p = self.ring.field.characteristic
        return [eng.entry(eng.normalize(_to_internal(g, p))) for g in self.generators]

    def certify(self) -> bool:
        """Re-reduce every S-pair; ``True`` iff all reduce to zero."""
        eng = self._engine()
        return eng.certify(self._entries(eng))

    def contains(self, f) -> bool:
        if self.local:
            return mora_normal_form(f, self).is_zero
        r = normal_form(f, self)
        return r.is_zero if isinstance(r, Polynomial) else r.is_zero


class StandardBasis(GroebnerBasis):
    """Standard basis for a local order (the ideal of the localization at 0)."""

    local = True


def _build(cls, eng: _Engine, G, ring, rank, order, reduced):
    gens = tuple(_from_internal(e.poly, ring, rank, e.lm) for e in G)
    labels = tuple(e.lm for e in G)
    return cls(ring, gens, order, rank, reduced, labels)


def buchberger(gens, order: MonomialOrder | None = None, *, weights: Sequence[int] | None = None,
               stop_on_unit: bool = False) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal or submodule generated by ``gens``.

    Pairs are selected by smallest lcm degree, ties broken by generator
    indices, so the output is deterministic. ``weights`` shifts the degree
    of each module component for pair selection. With ``stop_on_unit`` the
    computation returns ``{1}`` as soon as a unit appears.
    """
    gens, ring, rank, order = _prepare(gens, order, GREVLEX)
    if not order.is_global:
        raise ValueError("buchberger needs a global order; use standard_basis")
    if ring is None:
        raise ValueError("no generators and no ring")
    p = ring.field.characteristic
    eng = _Engine(order, p, rank is None, weights)
    G = eng.groebner([_to_internal(g, p) for g in gens], stop_on_unit=stop_on_unit)
    if eng._has_unit(G):
        one = {(0,) * (ring.nvars + 1): 1}
        return _build(GroebnerBasis, eng, [eng.entry(one)], ring, rank, order, True)
    G = eng.interreduce(G)
    G.sort(key=lambda e: eng.k(e.lm), reverse=True)
    return _build(GroebnerBasis, eng, G, ring, rank, order, True)


def standard_basis(gens, order: MonomialOrder = NEG_GREVLEX) -> StandardBasis:
    """Mora standard basis of the ideal generated by ``gens`` in the local ring at 0."""
    gens, ring, rank, order = _prepare(gens, order, NEG_GREVLEX)
    if order.is_global:
        raise ValueError("standard_basis needs a local order; use buchberger")
    if ring is None:
        raise ValueError("no generators and no ring")
    p = ring.field.characteristic
    eng = _Engine(order, p, rank is None)
    G = eng.minimalize(eng.groebner([_to_internal(g, p) for g in gens]))
    G.sort(key=lambda e: eng.k(e.lm), reverse=True)
    return _build(StandardBasis, eng, G, ring, rank, order, False)


def _basis_parts(basis, order, want_local: bool):
    if isinstance(basis, GroebnerBasis):
        order = order or basis.order
        gens = list(basis.generators)
    else:
        gens = list(basis)
    if order is not None and order.is_global == want_local:
        kind = "local" if want_local else "global"
        raise ValueError(f"this normal form needs a {kind} order")
    return gens, order


def normal_form(f, basis, order: MonomialOrder | None = None):
    """Fully reduced remainder of ``f`` modulo ``basis`` (global orders only).

    ``f - normal_form(f, basis)`` lies in the span of ``basis``; when
    ``basis`` is a Gröbner basis the remainder is zero iff ``f`` is a member.
    """
    gens, order = _basis_parts(basis, order, want_local=False)
    gens_all, ring, rank, order = _prepare([f] + gens, order, GREVLEX)
    p = ring.field.characteristic
    eng = _Engine(order, p, rank is None)
    entries = [eng.entry(eng.normalize(_to_internal(g, p))) for g in gens if not g.is_zero]
    raw = _to_internal(f, p)
    if p:
        r, _ = eng.reduce(raw, entries, full=True)
        return _from_internal(r, ring, rank, monic=False)
    # undo the content normalization of f and the fraction-free scaling
    r, scale = eng.reduce(raw, entries, full=True)
    if not r:
        return _from_internal({}, ring, rank, monic=False)
    fdict = f.as_dict() if isinstance(f, Polynomial) else {
        (i,) + e: c for i, comp in enumerate(f) for e, c in comp.as_dict().items()
    }
    some = next(iter(raw))
    key = some if isinstance(f, Vector) else some[1:]
    factor = Fraction(fdict[key]) / raw[some]
    return _from_internal({m: Fraction(c) * factor / scale for m, c in r.items()}, ring, rank, monic=False)


def mora_normal_form(f, basis, order: MonomialOrder | None = None):
    """Mora weak normal form for a local order.

    The result is ``u * f`` modulo the local ideal for some unit ``u``; it is
    zero iff ``f`` lies in the ideal of the localization when ``basis`` is a
    standard basis.
    """
    gens, order = _basis_parts(basis, order or NEG_GREVLEX, want_local=True)
    gens_all, ring, rank, order = _prepare([f] + gens, order, NEG_GREVLEX)
    p = ring.field.characteristic
    eng = _Engine(order, p, rank is None)
    entries = [eng.entry(eng.normalize(_to_internal(g, p))) for g in gens if not g.is_zero]
    h = eng.mora_nf(_to_internal(f, p), entries)
    if not h:
        return _from_internal({}, ring, rank, monic=False)
    return _from_internal(h, ring, rank, eng.lm(h), monic=True)


def _pure_powers(leading: Sequence[tuple], n: int) -> list:
    bounds: list = [None] * n
    for e in leading:
        support = [i for i, x in enumerate(e) if x]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or e[i] < bounds[i]:
                bounds[i] = e[i]
        elif not support:
            return [0] * n
    return bounds


def standard_monomials(basis: GroebnerBasis) -> list[tuple]:
    """Monomials outside the leading ideal (finite case only)."""
    if basis.rank is not None:
        raise ValueError("standard monomials are implemented for ideals only")
    n = basis.ring.nvars
    leading = basis.leading_monomials
    bounds = _pure_powers(leading, n)
    if any(b is None for b in bounds):
        raise ValueError("infinitely many standard monomials")
    out = []

    def rec(prefix):
        i = len(prefix)
        if i == n:
            e = tuple(prefix)
            if not any(all(map(le, m, e)) for m in leading):
                out.append(e)
            return
        for k in range(bounds[i]):
            rec(prefix + [k])

    rec([])
    return out


def quotient_dimension(basis: GroebnerBasis):
    """Number of standard monomials, or ``INFINITE``.

    For a :class:`StandardBasis` this is the dimension of the local
    quotient at the origin.
    """
    if not isinstance(basis, GroebnerBasis):
        raise UncertifiedBasisError("quotient_dimension needs a basis from buchberger or standard_basis")
    if basis.rank is not None:
        raise ValueError("quotient_dimension is implemented for ideals only")
    bounds = _pure_powers(basis.leading_monomials, basis.ring.nvars)
    if any(b is None for b in bounds):
        return INFINITE
    return len(standard_monomials(basis))


def leading_ideal_dimension(basis: GroebnerBasis) -> int:
    """Krull dimension read off the leading monomials.

    The largest set of variables ``S`` such that no leading monomial is
    supported inside ``S``. The unit ideal gets ``-1``.
    """
    if basis.rank is not None:
        raise ValueError("leading_ideal_dimension is implemented for ideals only")
    n = basis.ring.nvars
    supports = [frozenset(i for i, x in enumerate(e) if x) for e in basis.leading_monomials]
    if any(not s for s in supports):
        return -1
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            S = frozenset(S)
            if not any(s <= S for s in supports):
                return size
    return 0


def ideal_membership(g: Polynomial, gens: Sequence[Polynomial]) -> bool:
    if not gens:
        return g.is_zero
    return normal_form(g, buchberger(gens)).is_zero


def radical_membership(g: Polynomial, gens: Sequence[Polynomial], order: MonomialOrder | None = None) -> bool:
    """``True`` iff ``g`` vanishes on ``V(gens)`` over the algebraic closure.

    Rabinowitsch: adjoin a fresh variable ``t`` and test whether
    ``(gens, 1 - t*g)`` is the unit ideal.
    """
    ring = g.ring
    if g.is_zero:
        return True
    t = ring.fresh_name("t")
    big = ring.extend([t])
    pos = list(range(ring.nvars))
    lifted = [h.embed(big, pos) for h in gens if not h.is_zero]
    tvar = big.var(ring.nvars)
    lifted.append(big.one - tvar * g.embed(big, pos))
    basis = buchberger(lifted, order or GREVLEX, stop_on_unit=True)
    return basis.is_unit
