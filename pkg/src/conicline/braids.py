"""Braid words and their action on a geometric base of a free group.

A braid on ``n`` strands is a word in the Artin generators
``s_1 .. s_{n-1}``, stored as signed indices like free-group words.
Positive ``s_i`` is the counterclockwise half-twist of strands ``i`` and
``i+1``.

The action on a geometric base is arranged so that the descending
product ``e_n ... e_1`` of base entries is preserved; this is the
product that appears as the projective relator ``x_n ... x_1``.
"""

from . import words
from .errors import BadBlock, NonAdjacentMover, ParseError, StrandMismatch


class BraidWord:
    """A word in the Artin generators on a fixed number of strands."""

    __slots__ = ("strands", "letters")

    def __init__(self, strands, letters=()):
        if strands < 1:
            raise ValueError("need at least one strand")
        letters = tuple(letters)
        for a in letters:
            if not 1 <= abs(a) <= strands - 1:
                raise ValueError(f"generator s{abs(a)} out of range for "
                                 f"{strands} strands")
        object.__setattr__(self, "strands", strands)
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("BraidWord is immutable")

    def __eq__(self, other):
        return (isinstance(other, BraidWord)
                and self.strands == other.strands
                and self.letters == other.letters)

    def __hash__(self):
        return hash((self.strands, self.letters))

    def __mul__(self, other):
        """Concatenation; the left factor is applied first."""
        if self.strands != other.strands:
            raise StrandMismatch("cannot concatenate braids on different "
                                 "strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return BraidWord(self.strands, self.letters * n)

    def inverse(self):
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))

    def __repr__(self):
        return f"BraidWord({self.strands}, {format_braid(self)!r})"


def identity_braid(strands):
    return BraidWord(strands)


def braid_permutation(b):
    """Image in the symmetric group: position -> final position, 1-based."""
    perm = list(range(b.strands + 1))  # perm[start] = end, slot 0 unused
    for a in b.letters:
        i = abs(a)
        # strands currently at positions i, i+1 swap
        p = perm.index(i)
        q = perm.index(i + 1)
        perm[p], perm[q] = i + 1, i
    return tuple(perm[1:])


class GBase:
    """An ordered free basis acted on by braids.

    Entry ``k`` is the image of the ``k``-th standard geometric
    generator; every braid action fixes the descending ordered product
    of the entries.
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        object.__setattr__(self, "entries",
                           tuple(words.reduce(w) for w in entries))

    def __setattr__(self, name, value):
        raise AttributeError("GBase is immutable")

    @property
    def n(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, GBase) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = ", ".join(words.format_word(w) for w in self.entries)
        return f"GBase({body})"

    def ordered_product(self):
        """The fixed product ``e_n ... e_1`` (descending)."""
        return words.concat(*reversed(self.entries))


def standard_gbase(n):
    return GBase([(k,) for k in range(1, n + 1)])


def artin_apply(b, g):
    """Apply braid ``b`` to g-base ``g``, letters left to right.

    ``s_i`` sends entry ``i+1`` to ``e_{i+1} e_i e_{i+1}^-1`` and entry
    ``i`` to ``e_{i+1}``; the inverse letter undoes this.  Both fix the
    descending ordered product.
    """
    if b.strands != g.n:
        raise StrandMismatch(f"braid on {b.strands} strands applied to a "
                             f"base of {g.n}")
    entries = list(g.entries)
    for a in b.letters:
        i = abs(a) - 1  # 0-based position
        ei, ej = entries[i], entries[i + 1]
        if a > 0:
            entries[i] = ej
            entries[i + 1] = words.concat(ej, ei, words.inverse(ej))
        else:
            entries[i] = words.concat(words.inverse(ei), ej, ei)
            entries[i + 1] = ei
    return GBase(entries)


def action_equal(b1, b2):
    """Equality as automorphisms: same images of the standard base."""
    if b1.strands != b2.strands:
        return False
    base = standard_gbase(b1.strands)
    return artin_apply(b1, base) == artin_apply(b2, base)


# -- constructors for the composite braids used by the local models --------

def half_twist(n, i, j):
    """Half-twist of the block ``[i..j]``; 180-degree block rotation."""
    if not 1 <= i < j <= n:
        raise BadBlock(f"bad block [{i}..{j}] on {n} strands")
    letters = []
    for top in range(j - 1, i - 1, -1):
        letters.extend(range(i, top + 1))
    return BraidWord(n, letters)


def full_twist(n, i, j):
    """Full twist of the block ``[i..j]``; square of the half-twist.

    Realized as ``(s_i ... s_{j-1})^(j-i+1)``, the standard identity for
    the block full twist.
    """
    if not 1 <= i < j <= n:
        raise BadBlock(f"bad block [{i}..{j}] on {n} strands")
    run = list(range(i, j))
    return BraidWord(n, tuple(run * (j - i + 1)))


def block_around(n, mover, i, j, turns=1):
    """Strand ``mover`` travels ``turns`` full loops around block ``[i..j]``.

    The block's internal order is unchanged: the word is the merged
    block's full twist with the inner block's full twist cancelled.
    """
    if not 1 <= i <= j <= n:
        raise BadBlock(f"bad block [{i}..{j}] on {n} strands")
    if mover == i - 1:
        lo, hi = mover, j
    elif mover == j + 1:
        lo, hi = i, mover
    else:
        raise NonAdjacentMover(f"strand {mover} is not adjacent to "
                               f"[{i}..{j}]")
    if turns == 0:
        return identity_braid(n)
    if i == j:
        merged = full_twist(n, lo, hi)
        return merged ** turns
    one_turn = full_twist(n, lo, hi) * full_twist(n, i, j).inverse()
    return one_turn ** turns


def half_block_around(n, mover, i, j):
    """Strand ``mover`` passes over the block to its far side (half loop)."""
    if not 1 <= i <= j <= n:
        raise BadBlock(f"bad block [{i}..{j}] on {n} strands")
    if mover not in (i - 1, j + 1):
        raise NonAdjacentMover(f"strand {mover} is not adjacent to "
                               f"[{i}..{j}]")
    lo, hi = (mover, j) if mover == i - 1 else (i, mover)
    merged = half_twist(n, lo, hi)
    if i == j:
        return merged
    return merged * half_twist(n, i, j).inverse()


# -- text form -------------------------------------------------------------

def format_braid(b):
    """Serialize as ``s1 s2^-1 s1^4``; the empty braid prints as ``e``."""
    return words.format_word(b.letters,
                             [f"s{i}" for i in range(1, b.strands)])


def parse_braid(text, strands):
    names = [f"s{i}" for i in range(1, strands)]
    try:
        letters = words.parse_word(text, names)
    except ParseError:
        raise
    return BraidWord(strands, letters)
