"""Random module combinations of syzygy columns."""

from syzrank import Vector
from syzrank.syzygy import monomials_of_degree


def random_polynomial(ring, rnd, max_degree=2, terms=3):
    out = ring.zero
    for _ in range(terms):
        e = rnd.choice([m for d in range(max_degree + 1) for m in monomials_of_degree(ring.nvars, d)])
        out = out + ring.monomial(e, rnd.randint(-5, 5))
    return out


def random_combination_columns(M, count, rnd):
    """``count`` columns, each a random polynomial combination of the columns of ``M``."""
    ring = M.ring
    cols = []
    for _ in range(count):
        acc = Vector(ring, [ring.zero] * M.nrows)
        for col in M.columns:
            c = random_polynomial(ring, rnd)
            acc = acc + Vector(ring, [c * e for e in col])
        cols.append(acc)
    return cols
