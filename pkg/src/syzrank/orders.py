"""Monomial orders on exponent vectors and on free-module terms.

Every order exposes ``key(monomial)``: a tuple that sorts *ascending* in the
order, so the leading term of a polynomial is ``max(terms, key=order.key)``.
Module terms are pairs ``(component, exponents)``.
"""

from __future__ import annotations

import enum
from typing import Sequence

__all__ = [
    "Cmp",
    "MonomialOrder",
    "GREVLEX",
    "LEX",
    "NEG_GREVLEX",
    "block_order",
    "module_pot",
    "compare",
]


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _grevlex_key(e: Sequence[int]) -> tuple:
    return (sum(e),) + tuple(-x for x in reversed(e))


def _neg_grevlex_key(e: Sequence[int]) -> tuple:
    return (-sum(e),) + tuple(-x for x in reversed(e))


class MonomialOrder:
    """A monomial order.

    Parameters
    ----------
    kind : {"grevlex", "lex", "neg-grevlex", "block", "module-pot"}
    block : int, optional
        Size of the first variable block for ``kind="block"``.
    base : MonomialOrder, optional
        Order on exponent vectors used by ``kind="module-pot"``.
    """

    KINDS = ("grevlex", "lex", "neg-grevlex", "block", "module-pot")

    def __init__(self, kind: str, block: int | None = None, base: "MonomialOrder | None" = None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and (block is None or block < 0):
            raise ValueError("block order needs a non-negative block size")
        if kind == "module-pot":
            base = base or GREVLEX
            if base.kind == "module-pot":
                raise ValueError("module order cannot be nested")
        self.kind = kind
        self.block = block
        self.base = base
        if kind == "grevlex":
            self.key = _grevlex_key
        elif kind == "lex":
            self.key = tuple
        elif kind == "neg-grevlex":
            self.key = _neg_grevlex_key
        elif kind == "block":
            k = block

            def key(e, k=k):
                return _grevlex_key(e[:k]) + _grevlex_key(e[k:])

            self.key = key
        else:
            bkey = base.key

            # component 0 is the strongest position
            def key(m, bkey=bkey):
                return (-m[0],) + bkey(m[1])

            self.key = key

    @property
    def is_global(self) -> bool:
        if self.kind == "module-pot":
            return self.base.is_global
        return self.kind != "neg-grevlex"

    @property
    def is_module(self) -> bool:
        return self.kind == "module-pot"

    def labeled_key(self):
        """Key function on flat labels ``(component, e_1, ..., e_n)``."""
        base = self.base if self.is_module else self
        bkey = base.key
        return lambda lab: (-lab[0],) + bkey(lab[1:])

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and (self.kind, self.block, self.base) == (other.kind, other.block, other.base)
        )

    def __hash__(self):
        return hash((self.kind, self.block, self.base))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder('block', block={self.block})"
        if self.kind == "module-pot":
            return f"MonomialOrder('module-pot', base={self.base!r})"
        return f"MonomialOrder({self.kind!r})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")
NEG_GREVLEX = MonomialOrder("neg-grevlex")


def block_order(k: int) -> MonomialOrder:
    """Elimination order: grevlex on the first ``k`` variables, then grevlex on the rest."""
    return MonomialOrder("block", block=k)


def module_pot(base: MonomialOrder = GREVLEX) -> MonomialOrder:
    return MonomialOrder("module-pot", base=base)


def compare(m1, m2, order: MonomialOrder = GREVLEX) -> Cmp:
    """Compare two monomials (or two module terms for module orders)."""
    if order.is_module:
        m1, m2 = (m1[0], tuple(m1[1])), (m2[0], tuple(m2[1]))
        arity = len(m1[1]), len(m2[1])
    else:
        m1, m2 = tuple(m1), tuple(m2)
        arity = len(m1), len(m2)
    if arity[0] != arity[1]:
        raise ValueError("monomial arity mismatch")
    k1, k2 = order.key(m1), order.key(m2)
    if k1 == k2:
        return Cmp.EQ
    return Cmp.GT if k1 > k2 else Cmp.LT
