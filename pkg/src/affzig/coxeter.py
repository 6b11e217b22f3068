"""
Symmetric group combinatorics, polynomials in z_1..z_n and divided differences.

Permutations are tuples in one-line notation on {1..n}: `w[k-1]` is the image
of k.  Products compose as functions, `(w * u)(k) = w(u(k))`.  The left action
on words and tensor slots is by place permutation, `(w . v)_k = v_{w^{-1}(k)}`,
and on polynomials by `z_i -> z_{w(i)}`.

The divided difference `nabla_i(f) = (f - s_i f)/(z_i - z_{i+1})` is computed
by the exact closed form on monomials, so division never leaves the ring.
"""

from __future__ import annotations

from fractions import Fraction

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def simple_transposition(i: int, n: int) -> Perm:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def perm_mul(w: Perm, u: Perm) -> Perm:
    """(w * u)(k) = w(u(k))."""
    return tuple(w[u[k] - 1] for k in range(len(w)))


def perm_inv(w: Perm) -> Perm:
    out = [0] * len(w)
    for k, wk in enumerate(w, start=1):
        out[wk - 1] = k
    return tuple(out)


def perm_length(w: Perm) -> int:
    """Number of inversions; coincides with reduced-word length."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def left_mul_s(i: int, w: Perm) -> Perm:
    """s_i * w (swap the values i, i+1)."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def right_mul_s(w: Perm, i: int) -> Perm:
    """w * s_i (swap positions i, i+1)."""
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def left_descents(w: Perm) -> list[int]:
    """{i : length(s_i w) < length(w)} = {i : position of i is after i+1}."""
    inv = perm_inv(w)
    return [i for i in range(1, len(w)) if inv[i - 1] > inv[i]]


def min_left_descent(w: Perm) -> int | None:
    inv = perm_inv(w)
    for i in range(1, len(w)):
        if inv[i - 1] > inv[i]:
            return i
    return None


def reduced_word(w: Perm) -> tuple[int, ...]:
    """The lexicographically smallest reduced word for w.

    Greedily taking the smallest left descent at every step yields the
    lex-least word; its tail is again lex-least for the shortened element.
    """
    word = []
    while True:
        i = min_left_descent(w)
        if i is None:
            return tuple(word)
        word.append(i)
        w = left_mul_s(i, w)


def perm_from_word(word, n: int) -> Perm:
    w = identity_perm(n)
    for i in reversed(word):
        w = left_mul_s(i, w)
    return w


def act_on_tuple(w: Perm, tup: tuple) -> tuple:
    """Place permutation: (w . v)_k = v_{w^{-1}(k)}."""
    inv = perm_inv(w)
    return tuple(tup[inv[k] - 1] for k in range(len(tup)))


def min_coset_reps(n_blocks: int, block: int) -> list[Perm]:
    """Minimal-length representatives of S_{n*block} / (S_block)^n.

    These are the permutations increasing on each domain block of size
    `block`; each is determined by the ordered partition of values into the
    blocks, so there are (n*block)! / (block!)^n of them.
    """
    total = n_blocks * block
    reps: list[Perm] = []

    def fill(remaining: frozenset, acc: list[tuple[int, ...]]):
        if not acc and len(remaining) == 0:
            pass
        if len(acc) == n_blocks:
            w = tuple(v for blk in acc for v in blk)
            reps.append(w)
            return
        from itertools import combinations

        for blk in combinations(sorted(remaining), block):
            fill(remaining - set(blk), acc + [blk])

    fill(frozenset(range(1, total + 1)), [])
    return reps


def is_min_coset_rep(w: Perm, block: int) -> bool:
    """Increasing within each domain block of size `block`."""
    for a in range(len(w) - 1):
        if (a + 1) % block != 0 and w[a] > w[a + 1]:
            return False
    return True


# ---------------------------------------------------------------------------
# sparse polynomials in z_1..z_n


class ZPoly:
    """Sparse polynomial in z_1..z_n: exponent tuple -> coefficient.

    The generator degree (each z_i homogeneous of degree `gen_degree`) is
    bookkeeping carried by the caller; terms with coefficient 0 are dropped.
    Coefficients live in the ring supplied to the constructor helpers; the
    arithmetic here is plain `+`/`*` so int and Fraction both work.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[tuple[int, ...], object] | None = None):
        self.n = n
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @staticmethod
    def zero(n: int) -> "ZPoly":
        return ZPoly(n)

    @staticmethod
    def constant(n: int, c) -> "ZPoly":
        return ZPoly(n, {tuple([0] * n): c} if c != 0 else {})

    @staticmethod
    def gen(n: int, i: int) -> "ZPoly":
        e = [0] * n
        e[i - 1] = 1
        return ZPoly(n, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, ZPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: "ZPoly") -> "ZPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return ZPoly(self.n, out)

    def __neg__(self) -> "ZPoly":
        return ZPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        return self + (-other)

    def __mul__(self, other: "ZPoly") -> "ZPoly":
        out: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ZPoly(self.n, out)

    def scale(self, c) -> "ZPoly":
        if c == 0:
            return ZPoly.zero(self.n)
        return ZPoly(self.n, {e: c * v for e, v in self.terms.items()})

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def act(self, w: Perm) -> "ZPoly":
        """z_i -> z_{w(i)}: exponent at slot w(i) becomes old exponent at i."""
        out: dict[tuple[int, ...], object] = {}
        for e, c in self.terms.items():
            ne = [0] * self.n
            for i in range(self.n):
                ne[w[i] - 1] = e[i]
            key = tuple(ne)
            out[key] = out.get(key, 0) + c
        return ZPoly(self.n, out)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Graded lexicographic term order, for deterministic serialization."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]))


def _monomial_divdiff(e: tuple[int, ...], i: int, n: int) -> list[tuple[tuple[int, ...], int]]:
    """nabla_i of the monomial z^e, as (exponent, +-1) pairs (exact)."""
    a, b = e[i - 1], e[i]
    if a == b:
        return []
    out = []
    if a > b:
        rng, sign = range(b, a), 1
    else:
        rng, sign = range(a, b), -1
    for j in rng:
        ne = list(e)
        ne[i - 1] = j
        ne[i] = a + b - 1 - j
        out.append((tuple(ne), sign))
    return out


def divided_difference(i: int, f: ZPoly) -> ZPoly:
    """(f - s_i f)/(z_i - z_{i+1}); always exact for polynomial input."""
    out: dict[tuple[int, ...], object] = {}
    for e, c in f.terms.items():
        for ne, sign in _monomial_divdiff(e, i, f.n):
            out[ne] = out.get(ne, 0) + sign * c
    return ZPoly(f.n, out)


def divdiff_bruteforce(i: int, f: ZPoly) -> ZPoly:
    """Oracle: compute nabla_i by explicit polynomial division over Q."""
    g = f - f.act(simple_transposition(i, f.n))
    quot: dict[tuple[int, ...], Fraction] = {}
    terms = {e: Fraction(c) for e, c in g.terms.items()}

    def bump(d: dict, e: tuple[int, ...], c: Fraction):
        c = d.get(e, Fraction(0)) + c
        if c == 0:
            d.pop(e, None)
        else:
            d[e] = c

    while terms:
        e = max(terms, key=lambda e: (sum(e), e))
        c = terms[e]
        assert e[i - 1] > 0, "division by z_i - z_{i+1} not exact"
        qe = list(e)
        qe[i - 1] -= 1
        qe = tuple(qe)
        bump(quot, qe, c)
        # subtract c * z^qe * (z_i - z_{i+1}) from the remainder
        bump(terms, e, -c)
        lo = list(qe)
        lo[i] += 1
        bump(terms, tuple(lo), c)
    assert all(c.denominator == 1 for c in quot.values())
    return ZPoly(f.n, {e: int(c) for e, c in quot.items()})
