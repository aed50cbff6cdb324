"""From braid monodromy factorizations to fundamental group presentations.

A factorization lists one braid per singular fiber, in sweep order.  The
presentation has one generator per strand and, for each factor ``b``,
the relators ``b(x_k) = x_k``; the projective closure adds
``x_n ... x_1 = e``.

Factorizations can be assembled from a table of Lefschetz pairs: row
``j`` contributes the half-twist of its pair transported through the
composition of the previous rows' diffeomorphisms, raised to the row's
degree.
"""

from dataclasses import dataclass

from . import words
from .braids import (BraidWord, artin_apply, half_twist, identity_braid,
                     parse_braid, format_braid, standard_gbase)
from .errors import BadPair, ParseError, StrandMismatch
from .presentations import Presentation


@dataclass(frozen=True)
class Factorization:
    strands: int
    factors: tuple

    def __post_init__(self):
        for f in self.factors:
            if f.strands != self.strands:
                raise StrandMismatch("factor strand count differs from "
                                     "factorization")


@dataclass(frozen=True)
class MTRow:
    """One table row: a Lefschetz pair, its degree and diffeomorphism."""

    index: int
    pair: tuple        # (a, b), 1-based strand positions
    epsilon: int
    delta: BraidWord

    def __post_init__(self):
        a, b = self.pair
        if not 1 <= a < b:
            raise BadPair(f"bad Lefschetz pair {self.pair}")
        if self.epsilon < 1:
            raise BadPair(f"bad degree {self.epsilon}")


def assemble(rows, n):
    """Build the factorization of a sweep described by table rows.

    The half-twist of row ``j``'s pair is conjugated by the accumulated
    diffeomorphism ``delta_1 ... delta_{j-1}`` (applied first), so each
    skeleton is expressed in the base fiber.
    """
    history = identity_braid(n)
    factors = []
    for row in rows:
        a, b = row.pair
        if b > n:
            raise BadPair(f"pair {row.pair} does not fit on {n} strands")
        if row.delta.strands != n:
            raise StrandMismatch(f"row {row.index} delta is on "
                                 f"{row.delta.strands} strands, not {n}")
        local = half_twist(n, a, b) ** row.epsilon
        factors.append(history.inverse() * local * history)
        history = history * row.delta
    return Factorization(n, tuple(factors))


def present(f, projective=False):
    """The van Kampen presentation of a factorization."""
    n = f.strands
    relators = []
    base = standard_gbase(n)
    for factor in f.factors:
        image = artin_apply(factor, base)
        for k, e in enumerate(image.entries, 1):
            r = words.concat(e, (-k,))
            if r:
                relators.append(r)
    if projective:
        relators.append(tuple(range(n, 0, -1)))
    return Presentation(n, relators)


# -- plain-text forms -------------------------------------------------------

def format_factorization(f):
    lines = [f"strands: {f.strands}"]
    lines.extend(format_braid(b) for b in f.factors)
    return "\n".join(lines) + "\n"


def parse_factorization(text):
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("strands:"):
        raise ParseError("factorization must start with 'strands: n'")
    try:
        n = int(lines[0].split(":", 1)[1])
    except ValueError:
        raise ParseError("bad strand count") from None
    return Factorization(n, tuple(parse_braid(ln, n) for ln in lines[1:]))


def format_mt_table(rows, n):
    lines = [f"strands: {n}"]
    for r in rows:
        lines.append(f"{r.pair[0]} {r.pair[1]} {r.epsilon} "
                     + format_braid(r.delta))
    return "\n".join(lines) + "\n"


def parse_mt_table(text):
    """Rows of ``a b epsilon delta-braid``, after a ``strands: n`` line."""
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("strands:"):
        raise ParseError("table must start with 'strands: n'")
    try:
        n = int(lines[0].split(":", 1)[1])
    except ValueError:
        raise ParseError("bad strand count") from None
    rows = []
    for j, ln in enumerate(lines[1:], 1):
        parts = ln.split(None, 3)
        if len(parts) < 3:
            raise ParseError(f"bad table row {ln!r}")
        try:
            a, b, eps = (int(parts[0]), int(parts[1]), int(parts[2]))
        except ValueError:
            raise ParseError(f"bad table row {ln!r}") from None
        delta = (parse_braid(parts[3], n) if len(parts) == 4
                 else identity_braid(n))
        rows.append(MTRow(j, (a, b), eps, delta))
    return rows, n
