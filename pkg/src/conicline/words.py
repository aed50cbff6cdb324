"""Freely reduced words in a free group.

A word is a tuple of nonzero integers: ``k`` stands for the generator
``x_k`` and ``-k`` for its inverse.  All public functions return freely
reduced tuples, so words compare with ``==``.
"""

import re

from .errors import ParseError

Word = tuple  # alias used in signatures for readability


def reduce(letters):
    """Freely reduce a sequence of signed letters.

    Idempotent and length-nonincreasing; the empty tuple is the identity.
    """
    out = []
    for a in letters:
        if a == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def concat(*words):
    return reduce([a for w in words for a in w])


def inverse(w):
    return tuple(-a for a in reversed(w))


def conjugate(w, c):
    """Return the reduced form of ``c w c^-1``."""
    return concat(c, w, inverse(c))


def power(w, n):
    if n < 0:
        return power(inverse(w), -n)
    return reduce(list(w) * n)


def cyclic_reduce(w):
    """Strip matching first/last letters; the result is cyclically reduced."""
    w = reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def cyclic_normal_form(w):
    """Least rotation of the cyclic reduction of ``w`` or its inverse.

    Used as a canonical representative of a relator up to cyclic
    permutation, inversion and free reduction.
    """
    w = cyclic_reduce(w)
    if not w:
        return w
    candidates = []
    for u in (w, inverse(w)):
        for r in range(len(u)):
            candidates.append(u[r:] + u[:r])
    return min(candidates)


def generators_of(w):
    return {abs(a) for a in w}


def max_generator(w):
    return max((abs(a) for a in w), default=0)


def substitute_letters(w, images):
    """Map each generator ``g`` to ``images[g]`` (a word) and reduce.

    ``images`` maps positive generator indices to words; inverses map to
    the inverse word automatically.
    """
    out = []
    for a in w:
        img = images[abs(a)]
        out.extend(img if a > 0 else inverse(img))
    return reduce(out)


_XGEN = re.compile(r"^x?(\d+)$")


def parse_word(text, names=None):
    """Parse the ``x1 x2^-1 x1^2`` syntax into a word.

    ``e`` (or an empty string) is the identity.  With ``names`` given,
    tokens are looked up there before falling back to the ``x<index>``
    form.
    """
    text = text.strip()
    if text in ("", "e", "1"):
        return ()
    letters = []
    for token in text.split():
        base, caret, exp_text = token.partition("^")
        if caret:
            try:
                exp = int(exp_text)
            except ValueError:
                raise ParseError(f"bad exponent in {token!r}") from None
        else:
            exp = 1
        if exp == 0:
            raise ParseError(f"zero exponent in {token!r}")
        if names is not None and base in names:
            idx = names.index(base) + 1
        else:
            m = _XGEN.match(base)
            if not m:
                raise ParseError(f"unknown generator {token!r}")
            idx = int(m.group(1))
        if idx < 1:
            raise ParseError(f"generator index must be >= 1 in {token!r}")
        letters.extend([idx if exp > 0 else -idx] * abs(exp))
    return reduce(letters)


def format_word(w, names=None):
    """Inverse of :func:`parse_word`; collapses runs into caret powers."""
    if not w:
        return "e"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        g = abs(w[i])
        name = names[g - 1] if names else f"x{g}"
        n = (j - i) * (1 if w[i] > 0 else -1)
        parts.append(name if n == 1 else f"{name}^{n}")
        i = j
    return " ".join(parts)
