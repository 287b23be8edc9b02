"""Sparse exact multivariate polynomials over QQ or GF(p).

A :class:`Ring` fixes the variable names, the coefficient field and a
grading (standard, or a Picard grading assigning an integer vector to each
variable). :class:`Polynomial` values are immutable and always canonical:
no zero coefficients, one entry per monomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .fields import QQ, Field
from .orders import GREVLEX, MonomialOrder

__all__ = [
    "Ring",
    "Polynomial",
    "Vector",
    "Point",
    "DegreeData",
    "ExponentOverflowError",
    "RingMismatchError",
]

DEFAULT_MAX_EXPONENT = 2**16
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ExponentOverflowError(ArithmeticError):
    pass


class RingMismatchError(ValueError):
    pass


class Ring:
    """Polynomial ring ``field[names]`` with a grading.

    Parameters
    ----------
    names : sequence of str
        Distinct identifiers, one per variable.
    field : Field
        ``QQ`` (default) or a ``GF(p)``.
    grading : sequence of int vectors, optional
        Picard degrees of the variables. ``None`` means the standard grading.
    max_exponent : int
        Hard bound on any single exponent.
    """

    def __init__(
        self,
        names: Sequence[str],
        field: Field = QQ,
        grading: Sequence[Sequence[int]] | None = None,
        max_exponent: int = DEFAULT_MAX_EXPONENT,
    ):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        for name in names:
            if not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if grading is not None:
            grading = tuple(tuple(int(x) for x in deg) for deg in grading)
            if len(grading) != len(names):
                raise ValueError("one Picard degree per variable is required")
            widths = {len(deg) for deg in grading}
            if len(widths) > 1 or (widths and widths.pop() < 1):
                raise ValueError("Picard degrees must share a length r >= 1")
        self.names = names
        self.field = field
        self.grading = grading
        self.max_exponent = max_exponent
        self._key = (names, field, grading, max_exponent)

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def is_standard_graded(self) -> bool:
        return self.grading is None

    def __eq__(self, other):
        return isinstance(other, Ring) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        g = "" if self.grading is None else f", grading={list(map(list, self.grading))}"
        return f"Ring({list(self.names)}, field={self.field!r}{g})"

    # construction helpers -------------------------------------------------
    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value) -> "Polynomial":
        c = self.field(value)
        if c == 0:
            return self.zero
        return Polynomial(self, {(0,) * self.nvars: c}, _trusted=True)

    def monomial(self, exponents: Sequence[int], coeff=1) -> "Polynomial":
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.nvars:
            raise ValueError("monomial arity mismatch")
        return Polynomial(self, {exponents: coeff})

    def var(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range")
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one}, _trusted=True)

    @property
    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def __call__(self, value) -> "Polynomial":
        """Coerce a scalar, a polynomial of this ring, or polynomial text."""
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise RingMismatchError("polynomial belongs to a different ring")
            return value
        if isinstance(value, str):
            from .parsing import parse_polynomial

            return parse_polynomial(value, self)
        return self.constant(value)

    def variable_degree(self, i: int):
        if self.grading is None:
            return 1
        return self.grading[i]

    def monomial_degree(self, exponents: Sequence[int]):
        if self.grading is None:
            return sum(exponents)
        r = len(self.grading[0])
        out = [0] * r
        for i, e in enumerate(exponents):
            if e:
                deg = self.grading[i]
                for k in range(r):
                    out[k] += e * deg[k]
        return tuple(out)

    # derived rings ---------------------------------------------------------
    def with_field(self, field: Field) -> "Ring":
        return Ring(self.names, field, self.grading, self.max_exponent)

    def with_grading(self, grading) -> "Ring":
        return Ring(self.names, self.field, grading, self.max_exponent)

    def drop_variable(self, i: int) -> "Ring":
        names = self.names[:i] + self.names[i + 1 :]
        grading = None if self.grading is None else self.grading[:i] + self.grading[i + 1 :]
        return Ring(names, self.field, grading, self.max_exponent)

    def extend(self, names: Sequence[str]) -> "Ring":
        """Append new variables (standard grading only)."""
        if self.grading is not None:
            raise ValueError("cannot extend a Picard-graded ring")
        return Ring(self.names + tuple(names), self.field, None, self.max_exponent)

    def fresh_name(self, stem: str) -> str:
        name, k = stem, 0
        while name in self.names:
            k += 1
            name = f"{stem}{k}"
        return name


class Polynomial:
    """An immutable polynomial in a :class:`Ring`."""

    __slots__ = ("ring", "_terms", "_hash", "_maxexp")

    def __init__(self, ring: Ring, terms: Mapping, _trusted: bool = False):
        self.ring = ring
        if _trusted:
            self._terms = terms
        else:
            field = ring.field
            n = ring.nvars
            clean = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError("monomial arity mismatch")
                if any(x < 0 for x in e):
                    raise ValueError("negative exponent")
                c = field(c)
                if c != 0:
                    if e in clean:
                        c = field.norm(clean[e] + c)
                        if c == 0:
                            del clean[e]
                            continue
                    clean[e] = c
            self._terms = clean
        self._hash = None
        self._maxexp = None
        if not _trusted and self._terms and self.max_exponent() > ring.max_exponent:
            raise ExponentOverflowError(
                f"exponent {self.max_exponent()} exceeds the limit {ring.max_exponent}"
            )

    # basic access ----------------------------------------------------------
    def max_exponent(self) -> int:
        if self._maxexp is None:
            self._maxexp = max((max(e) for e in self._terms if e), default=0)
        return self._maxexp

    @property
    def terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in canonical order: descending grevlex."""
        return sorted(self._terms.items(), key=lambda t: GREVLEX.key(t[0]), reverse=True)

    def as_dict(self) -> dict:
        return dict(self._terms)

    def coefficient(self, exponents: Sequence[int]):
        return self._terms.get(tuple(exponents), self.ring.field.zero)

    def monomials(self) -> list[tuple[int, ...]]:
        return [e for e, _ in self.terms]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self):
        return self._terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def leading_term(self, order: MonomialOrder = GREVLEX):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=order.key)
        return e, self._terms[e]

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    # arithmetic ------------------------------------------------------------
    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError("polynomials belong to different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            a, b = other, self
        else:
            a, b = self, other
        out = dict(a._terms)
        norm = self.ring.field.norm
        for e, c in b._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = norm(v + c)
                if v == 0:
                    del out[e]
                else:
                    out[e] = v
        return Polynomial(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.field.norm
        return Polynomial(self.ring, {e: norm(-c) for e, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, scalar) -> "Polynomial":
        field = self.ring.field
        s = field(scalar)
        if s == 0:
            return self.ring.zero
        return Polynomial(self.ring, {e: field.norm(c * s) for e, c in self._terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ring = self.ring
        if ring.max_exponent < self.max_exponent() + other.max_exponent():
            bound = ring.max_exponent
            for e in self._terms:
                for f in other._terms:
                    if any(x + y > bound for x, y in zip(e, f)):
                        raise ExponentOverflowError(f"product exceeds the exponent limit {bound}")
        norm = ring.field.norm
        out: dict = {}
        for e, c in self._terms.items():
            for f, d in other._terms.items():
                m = tuple(x + y for x, y in zip(e, f))
                v = out.get(m)
                out[m] = c * d if v is None else v + c * d
        if ring.field.characteristic:
            out = {m: norm(v) for m, v in out.items()}
        out = {m: v for m, v in out.items() if v != 0}
        return Polynomial(ring, out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exponents: Sequence[int], coeff=1) -> "Polynomial":
        return self * self.ring.monomial(exponents, coeff)

    # comparison ------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            try:
                return self._terms == self.ring.constant(other)._terms
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # calculus and evaluation -------------------------------------------------
    def diff(self, i: int) -> "Polynomial":
        """Formal partial derivative with respect to variable ``i``.

        Over GF(p) a term whose ``i``-th exponent is a multiple of ``p``
        differentiates to zero.
        """
        if not 0 <= i < self.ring.nvars:
            raise IndexError(f"variable index {i} out of range")
        field = self.ring.field
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                v = field.norm(c * k)
                if v != 0:
                    out[e[:i] + (k - 1,) + e[i + 1 :]] = v
        return Polynomial(self.ring, out, _trusted=True)

    def gradient(self) -> tuple["Polynomial", ...]:
        return tuple(self.diff(i) for i in range(self.ring.nvars))

    def evaluate(self, point):
        """Exact value at a point (any sequence of field-coercible scalars)."""
        field = self.ring.field
        coords = [field(c) for c in point]
        if len(coords) != self.ring.nvars:
            raise ValueError(f"point has {len(coords)} coordinates, ring has {self.ring.nvars} variables")
        powers: list[dict] = [{} for _ in coords]
        total = field.zero
        for e, c in self._terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    pw = powers[i].get(k)
                    if pw is None:
                        pw = powers[i][k] = field.pow(coords[i], k)
                    v = v * pw
            total = total + v
        return field.norm(total)

    __call__ = evaluate

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Compose: replace variable ``i`` by ``images[i]`` (all in one target ring)."""
        if len(images) != self.ring.nvars:
            raise ValueError("one image per variable is required")
        target = images[0].ring if images else self.ring
        result = target.zero
        cache: list[dict] = [{} for _ in images]
        for e, c in self._terms.items():
            term = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    pw = cache[i].get(k)
                    if pw is None:
                        pw = cache[i][k] = images[i] ** k
                    term = term * pw
            result = result + term
        return result

    def degree_data(self) -> "DegreeData":
        if not self._terms:
            return DegreeData(True, None)
        degs = {self.ring.monomial_degree(e) for e in self._terms}
        if len(degs) == 1:
            return DegreeData(True, degs.pop())
        return DegreeData(False, None)

    @property
    def is_homogeneous(self) -> bool:
        return self.degree_data().homogeneous

    @property
    def degree(self):
        """Shared degree of a homogeneous polynomial (``None`` otherwise)."""
        return self.degree_data().degree

    def dehomogenize(self, chart: int) -> "Polynomial":
        """Set variable ``chart`` to 1; the result lives in the ring without it."""
        ring = self.ring
        if not 0 <= chart < ring.nvars:
            raise IndexError(f"chart index {chart} out of range")
        if ring.grading is None and not self.is_homogeneous:
            raise ValueError("dehomogenize needs a homogeneous polynomial")
        target = ring.drop_variable(chart)
        out: dict = {}
        norm = ring.field.norm
        for e, c in self._terms.items():
            m = e[:chart] + e[chart + 1 :]
            v = norm(out.get(m, 0) + c)
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
        return Polynomial(target, out, _trusted=True)

    def set_variables(self, values: Mapping[int, object]) -> "Polynomial":
        """Substitute scalars for some variables, dropping them from the ring."""
        ring = self.ring
        keep = [i for i in range(ring.nvars) if i not in values]
        names = [ring.names[i] for i in keep]
        grading = None if ring.grading is None else [ring.grading[i] for i in keep]
        target = Ring(names, ring.field, grading, ring.max_exponent)
        field = ring.field
        vals = {i: field(v) for i, v in values.items()}
        out: dict = {}
        for e, c in self._terms.items():
            v = c
            for i, x in vals.items():
                if e[i]:
                    v = v * field.pow(x, e[i])
            v = field.norm(v)
            if v == 0:
                continue
            m = tuple(e[i] for i in keep)
            w = field.norm(out.get(m, 0) + v)
            if w == 0:
                out.pop(m, None)
            else:
                out[m] = w
        return Polynomial(target, out, _trusted=True)

    def translate(self, q: Sequence) -> "Polynomial":
        """Return ``h`` with ``h(x) = self(x + q)``."""
        ring = self.ring
        if len(q) != ring.nvars:
            raise ValueError("translation vector arity mismatch")
        shifted = [ring.var(i) + ring.constant(c) for i, c in enumerate(q)]
        return self.substitute(shifted)

    def linear_change(self, matrix: Sequence[Sequence]) -> "Polynomial":
        """Return ``f(A x)`` for a square matrix ``A`` (rows index the old variables)."""
        ring = self.ring
        if len(matrix) != ring.nvars or any(len(row) != ring.nvars for row in matrix):
            raise ValueError("matrix must be square of size nvars")
        images = []
        for row in matrix:
            images.append(sum((ring.var(j).scale(a) for j, a in enumerate(row) if ring.field(a) != 0), ring.zero))
        return self.substitute(images)

    def embed(self, target: Ring, positions: Sequence[int]) -> "Polynomial":
        """Map into ``target`` sending variable ``i`` to variable ``positions[i]``."""
        if target.field != self.ring.field:
            raise RingMismatchError("cannot embed across fields")
        n = target.nvars
        out = {}
        for e, c in self._terms.items():
            m = [0] * n
            for i, k in enumerate(e):
                m[positions[i]] = k
            out[tuple(m)] = c
        return Polynomial(target, out, _trusted=True)

    def change_ring(self, target: Ring) -> "Polynomial":
        """Reinterpret in a ring with the same variable count (e.g. another field)."""
        if target.nvars != self.ring.nvars:
            raise RingMismatchError("variable count mismatch")
        return Polynomial(target, self._terms)

    # text ------------------------------------------------------------------
    def __str__(self):
        from .parsing import serialize_polynomial

        return serialize_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


@dataclass(frozen=True)
class DegreeData:
    homogeneous: bool
    degree: object = None


class Vector:
    """An element of a free module ``R^c``: a fixed-length tuple of polynomials."""

    __slots__ = ("ring", "components")

    def __init__(self, ring: Ring, components: Iterable):
        comps = tuple(ring(c) if not isinstance(c, Polynomial) else c for c in components)
        for c in comps:
            if c.ring != ring:
                raise RingMismatchError("vector components must share a ring")
        self.ring = ring
        self.components = comps

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components)

    def __add__(self, other: "Vector") -> "Vector":
        if len(other) != len(self):
            raise ValueError("rank mismatch")
        return Vector(self.ring, [a + b for a, b in zip(self, other)])

    def __sub__(self, other: "Vector") -> "Vector":
        if len(other) != len(self):
            raise ValueError("rank mismatch")
        return Vector(self.ring, [a - b for a, b in zip(self, other)])

    def __neg__(self):
        return Vector(self.ring, [-a for a in self])

    def __mul__(self, scalar) -> "Vector":
        return Vector(self.ring, [a * scalar for a in self])

    __rmul__ = __mul__

    def dot(self, gens: Sequence[Polynomial]) -> Polynomial:
        if len(gens) != len(self):
            raise ValueError("rank mismatch")
        total = self.ring.zero
        for a, g in zip(self, gens):
            if a and g:
                total = total + a * g
        return total

    def evaluate(self, point) -> tuple:
        return tuple(c.evaluate(point) for c in self)

    def __eq__(self, other):
        return isinstance(other, Vector) and self.ring == other.ring and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self) + ")"

    def __repr__(self):
        return f"Vector{self}"


_POINT_KINDS = ("affine", "projective", "cox")


@dataclass(frozen=True)
class Point:
    """A point given by exact coordinates.

    ``kind`` is ``"projective"`` for a representative of a point of P^n,
    ``"cox"`` for Cox coordinates of a toric variety and ``"affine"``
    otherwise. Coordinates are stored as ``Fraction`` (or prime-field
    residues) and coerced into a ring's field on evaluation.
    """

    coords: tuple
    kind: str = "projective"

    def __post_init__(self):
        if self.kind not in _POINT_KINDS:
            raise ValueError(f"unknown point kind {self.kind!r}")
        coords = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if self.kind == "projective" and all(c == 0 for c in coords):
            raise ValueError("the zero vector does not represent a projective point")

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def scaled(self, lam) -> "Point":
        lam = Fraction(lam)
        if lam == 0:
            raise ValueError("scaling factor must be nonzero")
        return Point(tuple(lam * c for c in self.coords), self.kind)

    def first_nonzero(self) -> int:
        for i, c in enumerate(self.coords):
            if c != 0:
                return i
        raise ValueError("zero vector")

    def __str__(self):
        body = [str(c) for c in self.coords]
        if self.kind == "projective":
            return "[" + ":".join(body) + "]"
        return "(" + ", ".join(body) + ")"
