"""Numerical braid monodromy: root continuation along a loop in x.

A curve ``p(x, y) = 0`` is tracked by sampling the fiber roots in ``y``
along ``x(t) = center + radius * exp(2 pi i t)``, matching consecutive
fibers by global nearest-neighbour assignment, and emitting an Artin
letter whenever two strands adjacent in the real-part order exchange
places.  Steps refine adaptively (bisection) whenever the matching is
ambiguous or several overlapping exchanges happen at once.

Strand order is by ``Re(y)`` with ties broken by ``Im(y)``; this is
implemented as the order of ``Re(exp(-i*delta) * y)`` for a tiny fixed
``delta``, which also resolves the fibers where several points share a
real part.
"""

import cmath
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.optimize import linear_sum_assignment

from .braids import BraidWord, braid_permutation
from .errors import (AmbiguousMatching, CollisionOnLoop,
                     LeadingCoefficientVanishes, NoConvergence, ParseError)

# order key rotation; breaks real-part ties by imaginary part
_TIE_DELTA = 1e-3
_COS_D = cmath.cos(_TIE_DELTA).real
_SIN_D = cmath.sin(_TIE_DELTA).real

RESIDUAL_TOL = 1e-10
MATCH_SAFETY = 5.0
MAX_REFINE = 20


def _order_key(z):
    return z.real * _COS_D + z.imag * _SIN_D


class CurvePoly:
    """A polynomial in x and y with exact rational coefficients."""

    def __init__(self, coeffs):
        # coeffs: {(i, j): Fraction} for x^i y^j
        self.coeffs = {k: Fraction(v) for k, v in coeffs.items() if v != 0}
        self.degy = max((j for _, j in self.coeffs), default=0)
        self.degx = max((i for i, _ in self.coeffs), default=0)
        # y-coefficient polynomials in x, constant term first
        self.ycoeffs = []
        for j in range(self.degy + 1):
            self.ycoeffs.append({i: c for (i, jj), c in self.coeffs.items()
                                 if jj == j})

    @classmethod
    def parse(cls, text):
        return cls(_parse_poly(text))

    def __repr__(self):
        return f"CurvePoly({format_poly(self)!r})"

    def _eval_xpoly(self, xpoly, x):
        return sum(complex(c) * x ** i for i, c in xpoly.items())

    def y_coefficients_at(self, x):
        """Coefficients of the fiber polynomial, constant term first."""
        return [self._eval_xpoly(c, x) for c in self.ycoeffs]

    def evaluate(self, x, y):
        return sum(complex(c) * x ** i * y ** j
                   for (i, j), c in self.coeffs.items())

    def roots_at(self, x, tol=RESIDUAL_TOL):
        """The ``degy`` fiber roots over ``x`` (companion-matrix solve)."""
        coeffs = self.y_coefficients_at(x)
        scale = max(abs(c) for c in coeffs) if coeffs else 0.0
        if scale == 0.0 or abs(coeffs[-1]) <= tol * scale:
            raise LeadingCoefficientVanishes(
                f"leading y-coefficient vanishes at x={x}")
        # numpy wants the highest degree first
        roots = np.roots(np.array(coeffs[::-1], dtype=complex))
        roots = [complex(r) for r in roots]
        for r in roots:
            res_scale = sum(abs(complex(c)) * max(1.0, abs(r)) ** j
                            for j, c in enumerate(coeffs))
            if abs(self.evaluate(x, r)) > 1e4 * tol * max(res_scale, 1.0):
                raise NoConvergence(f"root residual too large at x={x}")
        return sorted(roots, key=_order_key)

    def derivative_y(self):
        d = {}
        for (i, j), c in self.coeffs.items():
            if j >= 1:
                d[(i, j - 1)] = d.get((i, j - 1), 0) + c * j
        return CurvePoly(d)


def singular_x_values(p):
    """Approximate x where the fiber degenerates (discriminant roots).

    The discriminant in y is recovered by evaluating the Sylvester
    determinant of ``p`` and ``dp/dy`` at roots of unity and
    interpolating its coefficients, then solved numerically.
    """
    q = p.derivative_y()
    n, m = p.degy, q.degy
    if n < 1 or m < 0:
        return []
    deg_bound = p.degx * (n + m) + 1
    count = 1
    while count < deg_bound + 1:
        count *= 2
    xs = [cmath.exp(2j * cmath.pi * k / count) * 1.37 for k in range(count)]
    values = [_sylvester_det(p, q, x) for x in xs]
    # invert the evaluation at scaled roots of unity
    coeffs = np.fft.fft(np.array(values)) / count
    coeffs = coeffs / (1.37 ** np.arange(count))
    mags = np.abs(coeffs)
    top = mags.max()
    if top == 0:
        return []
    deg = max(i for i in range(count) if mags[i] > 1e-8 * top)
    poly = coeffs[:deg + 1][::-1]
    if deg == 0:
        return []
    return [complex(r) for r in np.roots(poly)]


def _sylvester_det(p, q, x):
    n, m = p.degy, q.degy
    a = p.y_coefficients_at(x)[::-1]  # leading first
    b = q.y_coefficients_at(x)[::-1]
    size = n + m
    mat = np.zeros((size, size), dtype=complex)
    for r in range(m):
        mat[r, r:r + n + 1] = a
    for r in range(n):
        mat[m + r, r:r + m + 1] = b
    return complex(np.linalg.det(mat))


@dataclass(frozen=True)
class LoopSpec:
    center: complex = 0j
    radius: Fraction = Fraction(1)
    samples: int = 256
    max_refine: int = MAX_REFINE

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if self.samples < 8:
            raise ValueError("need at least 8 samples")

    def point(self, t):
        return complex(self.center) + float(self.radius) * cmath.exp(2j * cmath.pi * t)


@dataclass
class TrackedBraid:
    braid: BraidWord
    permutation: tuple
    min_gap: float
    refinements: int
    basepoint_fiber: list = field(default_factory=list)


def track(p, loop, t0=0.0, t1=1.0):
    """Track the fiber roots over the loop arc ``[t0, t1]``.

    The full loop is ``[0, 1]``; the Lefschetz half-loop is ``[1/2, 1]``.
    Emits a positive Artin letter when the strand passing above (larger
    imaginary part) moves from right to left, the sign fixed by the
    branch-point calibration ``y^2 - x -> s1``.
    """
    if t1 <= t0:
        raise ValueError("need t1 > t0")
    for s in singular_x_values(p):
        d = abs(s - complex(loop.center))
        if abs(d - float(loop.radius)) < 1e-6 * max(1.0, float(loop.radius)):
            raise CollisionOnLoop(f"loop passes through singular x ~ {s}")
    return track_path(p, loop.point, t0, t1, loop.samples, loop.max_refine)


def track_path(p, xfun, t0=0.0, t1=1.0, samples=256, max_refine=MAX_REFINE):
    """Track the fiber roots along an arbitrary path ``t -> xfun(t)``."""
    if t1 <= t0:
        raise ValueError("need t1 > t0")
    n = p.degy
    state = _TrackState(p, xfun, max_refine)
    roots = p.roots_at(xfun(t0))
    state.note_gap(roots)
    basepoint = list(roots)
    letters = []
    for k in range(samples):
        ta = t0 + (t1 - t0) * k / samples
        tb = t0 + (t1 - t0) * (k + 1) / samples
        roots = state.advance(roots, ta, tb, letters, 0)
    braid = BraidWord(n, letters)
    perm = braid_permutation(braid)
    return TrackedBraid(braid, perm, state.min_gap, state.refinements,
                        basepoint)


class _TrackState:
    def __init__(self, p, xfun, max_refine=MAX_REFINE):
        self.p = p
        self.xfun = xfun
        self.max_refine = max_refine
        self.min_gap = float("inf")
        self.refinements = 0

    def note_gap(self, roots):
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                self.min_gap = min(self.min_gap, abs(roots[i] - roots[j]))

    def advance(self, roots, ta, tb, letters, depth):
        """Continue strands from ``ta`` to ``tb``, appending crossings."""
        new_roots = self.p.roots_at(self.xfun(tb))
        self.note_gap(new_roots)
        matched = _match(roots, new_roots)
        swaps = None
        if matched is not None:
            swaps = _adjacent_swaps(roots, matched)
        if matched is None or swaps is None:
            if depth >= self.max_refine:
                if matched is None:
                    raise AmbiguousMatching(
                        f"matching stayed ambiguous near t={ta}")
                return self._resolve_cluster(roots, matched, letters, ta)
            self.refinements += 1
            tm = (ta + tb) / 2
            mid = self.advance(roots, ta, tm, letters, depth + 1)
            return self.advance(mid, tm, tb, letters, depth + 1)
        return self._finish_step(roots, matched, swaps, letters)

    def _finish_step(self, roots, matched, swaps, letters):
        for i in sorted(swaps):
            # strand order positions i, i+1 (0-based) exchange
            upper_moves_left = (roots[i + 1].imag + matched[i + 1].imag
                                > roots[i].imag + matched[i].imag)
            letters.append(i + 1 if upper_moves_left else -(i + 1))
        order = sorted(range(len(matched)), key=lambda k: _order_key(matched[k]))
        return [matched[k] for k in order]

    def _resolve_cluster(self, roots, matched, letters, ta):
        """Handle an exactly simultaneous symmetric crossing.

        Curves whose fiber is symmetric about a strand (such as the
        rotation models, with roots in antipodal pairs) make several
        strands pass through one point's real part at the same instant;
        no amount of bisection separates the event.  When the step's
        permutation reverses contiguous blocks, the event is a
        half-twist of each block, oriented by which way the upper strand
        of the outermost pair travels.
        """
        n = len(matched)
        order = sorted(range(n), key=lambda k: _order_key(matched[k]))
        perm = [0] * n
        for pos, k in enumerate(order):
            perm[k] = pos
        k = 0
        while k < n:
            if perm[k] == k:
                k += 1
                continue
            j = perm[k]
            if j <= k or any(perm[i] != k + j - i for i in range(k, j + 1)):
                raise CollisionOnLoop(
                    f"unresolvable crossing cluster near t={ta}")
            upper_is_right = (roots[j].imag + matched[j].imag
                              > roots[k].imag + matched[k].imag)
            # the upper strand of the outer pair moves right-to-left
            # exactly when it starts on the right
            sign = 1 if upper_is_right else -1
            for top in range(j - 1, k - 1, -1):
                letters.extend(sign * s for s in range(k + 1, top + 2))
            k = j + 1
        return [matched[i] for i in order]


def _match(roots, new_roots):
    """Nearest-neighbour assignment; None when ambiguous."""
    n = len(roots)
    cost = np.empty((n, n))
    for i, a in enumerate(roots):
        for j, b in enumerate(new_roots):
            cost[i, j] = abs(a - b)
    rows, cols = linear_sum_assignment(cost)
    assign = [new_roots[c] for c in cols[np.argsort(rows)]]
    max_move = max(abs(a - b) for a, b in zip(roots, assign))
    gap = min(abs(assign[i] - assign[j])
              for i in range(n) for j in range(i + 1, n)) if n > 1 else float("inf")
    if max_move * MATCH_SAFETY > gap and max_move > 0:
        return None
    return assign


def _adjacent_swaps(roots, matched):
    """Positions whose strands swapped, if the step is a disjoint set of
    adjacent transpositions; otherwise None."""
    n = len(matched)
    order = sorted(range(n), key=lambda k: _order_key(matched[k]))
    # perm[k] = new position of the strand previously at position k
    perm = [0] * n
    for pos, k in enumerate(order):
        perm[k] = pos
    swaps = []
    k = 0
    while k < n:
        if perm[k] == k:
            k += 1
        elif k + 1 < n and perm[k] == k + 1 and perm[k + 1] == k:
            swaps.append(k)
            k += 2
        else:
            return None
    return swaps


# -- polynomial text syntax ------------------------------------------------

def _tokenize(text):
    out = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "+-*/^()xy":
            out.append(c)
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(text[i:j])
            i = j
        else:
            raise ParseError(f"unexpected character {c!r} in polynomial")
    return out


class _PolyParser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self):
        p = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input at token {self.peek()!r}")
        return p

    def expr(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        p = _scale(self.term(), sign)
        while self.peek() in ("+", "-"):
            op = self.take()
            q = self.term()
            p = _add(p, _scale(q, -1 if op == "-" else 1))
        return p

    def term(self):
        p = self.factor()
        while True:
            if self.peek() == "*":
                self.take()
                p = _mul(p, self.factor())
            elif self.peek() == "/":
                self.take()
                tok = self.take()
                if tok is None or not tok.isdigit():
                    raise ParseError("division only by integer constants")
                p = _scale(p, Fraction(1, int(tok)))
            elif self.peek() in ("(", "x", "y") or (
                    self.peek() or "").isdigit():
                p = _mul(p, self.factor())
            else:
                return p

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise ParseError("exponent must be a nonnegative integer")
            result = {(0, 0): Fraction(1)}
            for _ in range(int(tok)):
                result = _mul(result, base)
            return result
        return base

    def atom(self):
        tok = self.take()
        if tok == "(":
            p = self.expr()
            if self.take() != ")":
                raise ParseError("unbalanced parentheses")
            return p
        if tok == "x":
            return {(1, 0): Fraction(1)}
        if tok == "y":
            return {(0, 1): Fraction(1)}
        if tok == "-":
            return _scale(self.atom(), -1)
        if tok is not None and tok.isdigit():
            return {(0, 0): Fraction(int(tok))}
        raise ParseError(f"unexpected token {tok!r} in polynomial")


def _add(p, q):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v != 0}


def _scale(p, c):
    return {k: v * c for k, v in p.items() if v * c != 0}


def _mul(p, q):
    out = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: v for k, v in out.items() if v != 0}


def _parse_poly(text):
    coeffs = _PolyParser(_tokenize(text)).parse()
    if not coeffs:
        raise ParseError("zero polynomial")
    return coeffs


def format_poly(p):
    terms = []
    for (i, j) in sorted(p.coeffs, key=lambda k: (-k[1], -k[0])):
        c = p.coeffs[(i, j)]
        body = ""
        if i:
            body += "x" if i == 1 else f"x^{i}"
        if j:
            body += ("*" if body else "") + ("y" if j == 1 else f"y^{j}")
        if not body:
            terms.append(str(c))
        elif c == 1:
            terms.append(body)
        elif c == -1:
            terms.append(f"-{body}")
        else:
            terms.append(f"{c}*{body}")
    out = " + ".join(terms).replace("+ -", "- ")
    return out
