"""Verma modules M(lambda, c) for the lex triangular decomposition.

M(lambda, c) is induced from the one-dimensional module of the non-negative
part: lex-positive generators kill the vacuum, E(0) = d_mu acts by lambda and
the central symbol by c.  By PBW freeness a basis is given by normal-ordered
words of lex-negative generators applied to the vacuum.

Normal order convention: the lex-smallest generator is applied first.  Words
are stored in application order as non-decreasing tuples of lex-negative
lattice points, so a stored word (g_1 <= g_2 <= ... <= g_k) denotes the
operator product E(g_k) ... E(g_1) applied to the vacuum.

Straightening rewrites an arbitrary product into this basis with the bracket
relations.  Each swap of an out-of-order adjacent pair either reduces the
number of inversions at fixed length or shortens the word by one (the
bracket term merges two generators), so the rewriting terminates; weight
homogeneity is preserved because brackets respect the lattice grading.

Weight bookkeeping: a word with shift s = sum of its points spans a vector of
d_mu eigenvalue lambda + mu.s; shifts are lex-nonpositive, and the level of a
homogeneous vector at shift s is -s.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CENTRAL, AlgebraElement, lex_sign, vadd, vsub
from .errors import BoxOverflowError, NonHomogeneousError, RankMismatchError
from .scalars import LAMBDA, CCHARGE, ONE, ZERO, Scalar, is_simple_product, mu_poly, scalar_str


@dataclass(frozen=True)
class TruncationBox:
    """Coordinate bound N and word-length bound L for finite slices."""

    N: int
    L: int

    def __post_init__(self):
        if self.N < 1 or self.L < 1:
            raise ValueError("truncation box needs N >= 1 and L >= 1")

    def contains_word(self, word) -> bool:
        if len(word) > self.L:
            return False
        return all(abs(c) <= self.N for point in word for c in point)


class PBWMonomial:
    """Normal-ordered word of lex-negative points applied to the vacuum."""

    __slots__ = ("n", "word", "_hash")

    def __init__(self, n: int, word=()):
        word = tuple(sorted(tuple(p) for p in word))
        for point in word:
            if len(point) != n:
                raise RankMismatchError(f"point {point} in rank-{n} monomial")
            if lex_sign(point) >= 0:
                raise ValueError(f"PBW word entry {point} is not lex-negative")
        self.n = n
        self.word = word
        self._hash = hash((n, word))

    def weight_shift(self):
        shift = (0,) * self.n
        for point in self.word:
            shift = vadd(shift, point)
        return shift

    def __len__(self):
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, PBWMonomial) and self.n == other.n \
            and self.word == other.word

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.word < other.word

    def __str__(self):
        if not self.word:
            return "vac"
        ops = ["e[" + ",".join(str(c) for c in p) + "]"
               for p in reversed(self.word)]
        return "*".join(ops) + "*vac"

    def __repr__(self):
        return f"PBWMonomial({self.n}, {self})"


class VermaVector:
    """Finite Scalar combination of PBW monomials."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for mono, coef in terms.items():
                coef = coef if isinstance(coef, Scalar) else Scalar.from_rational(coef)
                if coef:
                    self.terms[mono] = coef

    def __add__(self, other):
        if self.n != other.n:
            raise RankMismatchError(f"rank {self.n} vs {other.n}")
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            v = out.get(mono)
            v = coef if v is None else v + coef
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        res = VermaVector(self.n)
        res.terms = out
        return res

    def __neg__(self):
        res = VermaVector(self.n)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = c if isinstance(c, Scalar) else Scalar.from_rational(c)
        if not c:
            return VermaVector(self.n)
        res = VermaVector(self.n)
        res.terms = {k: coef * c for k, coef in self.terms.items()}
        return res

    def __eq__(self, other):
        return isinstance(other, VermaVector) and self.n == other.n \
            and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, mono) -> Scalar:
        return self.terms.get(mono, ZERO)

    def weight_shift(self):
        """Common shift of a homogeneous vector; NonHomogeneousError otherwise."""
        shifts = {m.weight_shift() for m in self.terms}
        if len(shifts) > 1:
            raise NonHomogeneousError(f"mixed weight shifts {sorted(shifts)}")
        return shifts.pop() if shifts else None

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms):
            coef = self.terms[mono]
            cs = scalar_str(coef)
            if not is_simple_product(coef):
                cs = f"({cs})"
            pieces.append(str(mono) if cs == "1" else f"{cs}*{mono}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"VermaVector({self.n}, {self})"


def vacuum(n: int) -> VermaVector:
    return VermaVector(n, {PBWMonomial(n): ONE})


def _apply_generator(n, alpha, word, lam, c):
    """E(alpha) applied to a normal word; returns {word tuple: Scalar}.

    Words are application-ordered ascending tuples; applying a new generator
    appends at the end when in order and otherwise commutes past the last
    operator with a bracket correction.
    """
    sign = lex_sign(alpha)
    if sign == 0:
        eig = lam + Scalar(mu_poly(_word_shift(n, word)))
        return {word: eig} if eig else {}
    if sign < 0:
        if not word or alpha >= word[-1]:
            return {word + (alpha,): ONE}
        top = word[-1]
        rest = word[:-1]
        out = {}
        for w2, c2 in _apply_generator(n, alpha, rest, lam, c).items():
            for w3, c3 in _apply_generator(n, top, w2, lam, c).items():
                _acc(out, w3, c2 * c3)
        bracket = Scalar(mu_poly(vsub(top, alpha)))
        if bracket:
            for w4, c4 in _apply_generator(n, vadd(alpha, top), rest, lam, c).items():
                _acc(out, w4, bracket * c4)
        return out
    # lex-positive generator: annihilates the vacuum, pushes through the word
    if not word:
        return {}
    top = word[-1]
    rest = word[:-1]
    out = {}
    for w2, c2 in _apply_generator(n, alpha, rest, lam, c).items():
        for w3, c3 in _apply_generator(n, top, w2, lam, c).items():
            _acc(out, w3, c2 * c3)
    merged = vadd(alpha, top)
    bracket = Scalar(mu_poly(vsub(top, alpha)))
    if bracket:
        for w4, c4 in _apply_generator(n, merged, rest, lam, c).items():
            _acc(out, w4, bracket * c4)
    if not any(merged):
        # central part of [E(alpha), E(-alpha)]
        from .algebra import eta0

        central = eta0(alpha) * c
        if central:
            _acc(out, rest, central)
    return out


def _acc(store, key, value):
    v = store.get(key)
    v = value if v is None else v + value
    if v:
        store[key] = v
    else:
        store.pop(key, None)


def _word_shift(n, word):
    shift = (0,) * n
    for point in word:
        shift = vadd(shift, point)
    return shift


def verma_act(x: AlgebraElement, v: VermaVector, lam: Scalar = LAMBDA,
              c: Scalar = CCHARGE, box: TruncationBox | None = None) -> VermaVector:
    """Act by an algebra element, rewriting into the PBW basis.

    Exact and unboxed by default; with a box, any straightened monomial
    escaping it raises BoxOverflowError rather than being dropped.
    """
    if x.n != v.n:
        raise RankMismatchError(f"rank {x.n} vs {v.n}")
    n = x.n
    acc = {}
    for key, ce in x.terms.items():
        for mono, cv in v.terms.items():
            coef = ce * cv
            if key == CENTRAL:
                val = coef * c
                if val:
                    _acc(acc, mono.word, val)
                continue
            for word, cw in _apply_generator(n, key, mono.word, lam, c).items():
                val = coef * cw
                if val:
                    _acc(acc, word, val)
    out = VermaVector(n)
    for word, coef in acc.items():
        if box is not None and not box.contains_word(word):
            raise BoxOverflowError(PBWMonomial(n, word))
        out.terms[PBWMonomial(n, word)] = coef
    return out


def _negative_generators(n: int, radius: int):
    """Lex-negative points with coordinates in [-radius, radius], ascending."""
    from itertools import product

    pts = [p for p in product(range(-radius, radius + 1), repeat=n)
           if lex_sign(p) < 0]
    pts.sort()
    return pts


def pbw_enumerate(n: int, shift, box: TruncationBox):
    """All in-box normal words of lex-negative points summing to shift.

    Deterministic: depth-first over the ascending generator list, choosing
    non-decreasing words.  Sums of lex-negative points are lex-negative, so a
    branch closes exactly when its remaining target reaches zero, and dies
    when the target turns lex-positive or moves out of coordinate reach.
    """
    shift = tuple(shift)
    if len(shift) != n:
        raise RankMismatchError(f"shift {shift} in rank {n}")
    if lex_sign(shift) > 0:
        raise ValueError("shift must be lex-nonpositive")
    gens = _negative_generators(n, box.N)
    out = []

    def dfs(start, remaining, word):
        if not any(remaining):
            out.append(PBWMonomial(n, word))
            return
        if len(word) >= box.L:
            return
        if lex_sign(remaining) > 0:
            return
        rem = box.L - len(word)
        if any(abs(c) > rem * box.N for c in remaining):
            return
        if remaining[0] > 0:
            return
        for idx in range(start, len(gens)):
            g = gens[idx]
            # first coordinates of generators are <= 0, so a zero first
            # coordinate of the target rules out any g with g[0] < 0
            if remaining[0] == 0 and g[0] < 0:
                continue
            dfs(idx, vsub(remaining, g), word + (g,))

    dfs(0, shift, ())
    return out


def weight_space_dim_truncated(n: int, shift, box: TruncationBox) -> int:
    """Exact dimension of the in-box slice of the weight space at the shift."""
    return len(pbw_enumerate(n, shift, box))


def singular_residuals(v: VermaVector, box: TruncationBox, lam: Scalar = LAMBDA,
                       c: Scalar = CCHARGE):
    """Raising residuals E(gamma).v for lex-positive gamma in the box.

    Only raisings keeping the target shift lex-nonpositive are tested; an
    all-zero result certifies singularity relative to the tested raising set
    (a box certificate, never a global claim).
    """
    from itertools import product

    from .algebra import basis_element

    if v.is_zero():
        raise NonHomogeneousError("zero vector has no weight")
    beta = v.weight_shift()
    residuals = {}
    for gamma in product(range(-box.N, box.N + 1), repeat=v.n):
        if lex_sign(gamma) <= 0:
            continue
        if lex_sign(vadd(beta, gamma)) > 0:
            continue
        residuals[gamma] = verma_act(basis_element(v.n, gamma), v, lam, c)
    return residuals


def is_singular_within_box(v: VermaVector, box: TruncationBox,
                           lam: Scalar = LAMBDA, c: Scalar = CCHARGE) -> bool:
    return all(r.is_zero() for r in singular_residuals(v, box, lam, c).values())
