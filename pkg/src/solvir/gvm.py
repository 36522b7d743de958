"""Generalized Verma modules over the t_1-degree grading.

The algebra of rank n >= 2 is Z-graded by the first lattice coordinate; the
degree-zero part is a copy of the rank-(n-1) algebra (plus the center), and
the coefficient module is the rank-(n-1) density module T(a, b) with basis
v_kappa, kappa in Z^(n-1), on which

    E((0, gamma')) . v_kappa = (a + mu'.kappa + b (mu'.gamma')) v_{kappa+gamma'},
    C . v = 0,

writing mu'.gamma for the form sum_{j>=2} mu_j gamma_{j-1}.  Positive degrees
act by zero on the coefficient module and the negative part acts freely, so a
monomial is a normal-ordered word of pairs (i >= 1, gamma'), standing for the
generator E((-i, gamma')), applied to a base vector v_kappa.  The level of a
monomial is the sum of its i entries.

Quotient criterion (level 1).  Write W for the level-one weight slice at
total shift kappa, spanned by E((-1, gamma)) . v_{kappa-gamma}.  A vector w
in W generates a submodule meeting the coefficient module trivially exactly
when every degree-(+1) generator kills w: raisings of degree >= 2 land in
positive degrees (zero), the kernel of all raisings is stable under the
degree-zero action, and a single nonzero raising image generates the whole
coefficient module once T(a, b) is irreducible, which the formal parameters
guarantee.  The unique maximal submodule meeting T trivially therefore cuts
W along the kernel of the raising pairing, and the level-one weight space of
the irreducible quotient has dimension equal to the exact rank of the
pairing matrix.  The computation below reports that rank over increasing
truncation radii together with a two-consecutive-boxes stabilization flag;
the flag is evidence, not proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import CENTRAL, AlgebraElement, basis_element, lex_compare, vadd, vsub
from .density import DensityParams
from .errors import NotFormalParamsError, RankMismatchError
from .linalg import rank_scalar_matrix
from .scalars import A, B, ONE, ZERO, Scalar, mu_poly


def grade_of(x: AlgebraElement):
    """Split an element by t_1-degree; the central symbol sits in degree 0."""
    parts = {}
    for key, coef in x.terms.items():
        degree = 0 if key == CENTRAL else key[0]
        parts.setdefault(degree, {})[key] = coef
    return {degree: AlgebraElement(x.n, terms)
            for degree, terms in sorted(parts.items())}


def embedded_form(n: int, gamma) -> Scalar:
    """mu'.gamma as a rank-n scalar, i.e. mu.(0, gamma)."""
    return Scalar(mu_poly((0,) + tuple(gamma)))


class GvmMonomial:
    """Word of (i, gamma') pairs, normal-ordered, over a base vector."""

    __slots__ = ("n", "word", "base", "_hash")

    def __init__(self, n: int, word=(), base=None):
        if n < 2:
            raise ValueError("graded modules need rank n >= 2")
        base = tuple(base) if base is not None else (0,) * (n - 1)
        if len(base) != n - 1:
            raise RankMismatchError(f"base {base} in rank-{n} monomial")
        cleaned = []
        for i, gamma in word:
            gamma = tuple(gamma)
            if i < 1:
                raise ValueError(f"word entry ({i}, {gamma}) has level < 1")
            if len(gamma) != n - 1:
                raise RankMismatchError(f"word entry {gamma} in rank {n}")
            cleaned.append((i, gamma))
        cleaned.sort(key=lambda p: (-p[0],) + p[1])
        self.n = n
        self.word = tuple(cleaned)
        self.base = base
        self._hash = hash((n, self.word, base))

    def level(self) -> int:
        return sum(i for i, _ in self.word)

    def mu_shift(self):
        """Total mu'-index: base plus the word's gamma entries."""
        shift = self.base
        for _, gamma in self.word:
            shift = vadd(shift, gamma)
        return shift

    def full_vector(self, pair):
        i, gamma = pair
        return (-i,) + gamma

    def __eq__(self, other):
        return isinstance(other, GvmMonomial) and self.n == other.n \
            and self.word == other.word and self.base == other.base

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.word, self.base) < (other.word, other.base)

    def __str__(self):
        ops = ["e[" + ",".join(str(c) for c in (-i,) + gamma) + "]"
               for i, gamma in self.word]
        tail = "v[" + ",".join(str(c) for c in self.base) + "]"
        return "*".join(ops + [tail]) if ops else tail

    def __repr__(self):
        return f"GvmMonomial({self.n}, {self})"


class GvmVector:
    """Finite Scalar combination of GvmMonomials."""

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
        res = GvmVector(self.n)
        res.terms = out
        return res

    def __neg__(self):
        res = GvmVector(self.n)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = c if isinstance(c, Scalar) else Scalar.from_rational(c)
        if not c:
            return GvmVector(self.n)
        res = GvmVector(self.n)
        res.terms = {k: coef * c for k, coef in self.terms.items()}
        return res

    def __eq__(self, other):
        return isinstance(other, GvmVector) and self.n == other.n \
            and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, mono) -> Scalar:
        return self.terms.get(mono, ZERO)

    def __str__(self):
        if not self.terms:
            return "0"
        from .scalars import is_simple_product, scalar_str

        pieces = []
        for mono in sorted(self.terms):
            cs = scalar_str(self.terms[mono])
            if not is_simple_product(self.terms[mono]):
                cs = f"({cs})"
            pieces.append(str(mono) if cs == "1" else f"{cs}*{mono}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"GvmVector({self.n}, {self})"


def base_vector(n: int, kappa) -> GvmVector:
    return GvmVector(n, {GvmMonomial(n, (), kappa): ONE})


def _pair_key(pair):
    i, gamma = pair
    return (-i,) + gamma


def _apply(n, alpha, word, base, p: DensityParams):
    """E(alpha) applied to (word, base); returns {(word, base): Scalar}.

    Words are tuples of (i, gamma) pairs sorted ascending by the lex order of
    the embedded vectors (-i, gamma); the last pair is applied last.
    """
    degree = alpha[0]
    gamma_a = alpha[1:]
    if not word:
        if degree > 0:
            return {}
        if degree == 0:
            coef = p.a + embedded_form(n, base) + p.b * embedded_form(n, gamma_a)
            target = vadd(base, gamma_a)
            return {((), target): coef} if coef else {}
        return {(((-degree, gamma_a),), base): ONE}
    top = word[-1]
    top_vec = (-top[0],) + top[1]
    if degree < 0 and lex_compare(alpha, top_vec) >= 0:
        return {(word + ((-degree, gamma_a),), base): ONE}
    rest = word[:-1]
    out = {}
    for (w2, b2), c2 in _apply(n, alpha, rest, base, p).items():
        for (w3, b3), c3 in _apply(n, top_vec, w2, b2, p).items():
            _acc(out, (w3, b3), c2 * c3)
    bracket = Scalar(mu_poly(vsub(top_vec, alpha)))
    if bracket:
        merged = vadd(alpha, top_vec)
        for (w4, b4), c4 in _apply(n, merged, rest, base, p).items():
            _acc(out, (w4, b4), bracket * c4)
    # the central term of [E(alpha), E(top_vec)] acts by zero on the module
    return out


def _acc(store, key, value):
    v = store.get(key)
    v = value if v is None else v + value
    if v:
        store[key] = v
    else:
        store.pop(key, None)


def gvm_act(x: AlgebraElement, v: GvmVector, p: DensityParams) -> GvmVector:
    """Induced action: straighten negatives, act by degree zero, kill positives."""
    if x.n != v.n:
        raise RankMismatchError(f"rank {x.n} vs {v.n}")
    n = x.n
    acc = {}
    for key, ce in x.terms.items():
        if key == CENTRAL:
            continue
        for mono, cv in v.terms.items():
            coef = ce * cv
            for (word, base), cw in _apply(n, key, mono.word, mono.base, p).items():
                val = coef * cw
                if val:
                    _acc(acc, (word, base), val)
    out = GvmVector(n)
    for (word, base), coef in acc.items():
        out.terms[GvmMonomial(n, word, base)] = coef
    return out


def level_weight_basis(n: int, level: int, kappa, box: int):
    """In-box monomials of the given level whose total mu'-shift is kappa."""
    if level < 1:
        raise ValueError("level must be >= 1")
    kappa = tuple(kappa)
    gammas = [tuple(g) for g in product(range(-box, box + 1), repeat=n - 1)]
    out = []

    def words(level_left, start_pairs, word):
        if level_left == 0:
            shift = (0,) * (n - 1)
            for _, gamma in word:
                shift = vadd(shift, gamma)
            out.append(GvmMonomial(n, word, vsub(kappa, shift)))
            return
        for i in range(1, level_left + 1):
            for gamma in gammas:
                pair = (i, gamma)
                if word and _pair_key(pair) < _pair_key(word[-1]):
                    continue
                words(level_left - i, None, word + (pair,))

    words(level, None, ())
    return sorted(out)


@dataclass
class QuotientRankReport:
    n: int
    kappa: tuple
    boxes: list  # entries {radius, rows, cols, rank}
    stabilized: bool

    def bound_string(self, level=1):
        return "*".join(str(2 * j + 1) for j in range(level + 1))

    def as_dict(self):
        return {
            "n": self.n,
            "kappa": list(self.kappa),
            "boxes": self.boxes,
            "bound": self.bound_string(),
            "stabilized": self.stabilized,
        }


def quotient_dim_level1(n: int, kappa, p: DensityParams, boxes) -> QuotientRankReport:
    """Exact ranks of the level-one raising pairing over increasing boxes.

    Rows are the degree-(+1) generators E((1, gamma')), columns the level-one
    basis monomials E((-1, gamma)) . v_{kappa-gamma}; the entry is the
    coefficient of the single target v_{kappa+gamma'} under the action.
    Formal parameters are required: the kernel criterion in the module
    docstring needs the coefficient module irreducible.
    """
    if p.a != A or p.b != B:
        raise NotFormalParamsError("quotient rank needs formal parameters a, b")
    kappa = tuple(kappa)
    results = []
    ranks = []
    for box in sorted(boxes):
        columns = level_weight_basis(n, 1, kappa, box)
        raisings = [tuple(g) for g in product(range(-box, box + 1), repeat=n - 1)]
        raisings.sort()
        matrix = []
        for gamma_r in raisings:
            raiser = basis_element(n, (1,) + gamma_r)
            target = GvmMonomial(n, (), vadd(kappa, gamma_r))
            row = []
            for mono in columns:
                image = gvm_act(raiser, GvmVector(n, {mono: ONE}), p)
                for m in image.terms:
                    assert m == target, "raising image off the expected base vector"
                row.append(image.coefficient(target))
            matrix.append(row)
        rank = rank_scalar_matrix(matrix)
        results.append({"radius": box, "rows": len(matrix),
                        "cols": len(columns), "rank": rank})
        ranks.append(rank)
    stabilized = len(ranks) >= 2 and ranks[-1] == ranks[-2]
    return QuotientRankReport(n, kappa, results, stabilized)
