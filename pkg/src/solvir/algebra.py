"""The solenoidal Witt/Virasoro algebra of rank n.

Basis symbols are E(alpha) = t^alpha * d_mu for alpha in Z^n together with a
central symbol C.  The bracket is

    [E(alpha), E(beta)] = mu.(beta - alpha) E(alpha + beta)
                          + delta_{alpha, -beta} * ((mu.alpha)^3 - mu.alpha)/12 * C
    [C, anything] = 0

with the customary 1/12 normalization of the central term hard-coded; other
cocycle representatives are reachable through the cocycle toolkit, not here.
E(0) is the Euler field d_mu itself.  The lexicographic order on Z^n gives the
triangular decomposition whose zero part is spanned by E(0) and C.

Elements are finite Scalar-linear combinations of basis symbols.  Rank n is
fixed per element at construction; mixing ranks raises RankMismatchError.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import (
    AxisOutOfRangeError,
    CentralTermPresentError,
    FitFailedError,
    ParseError,
    RankMismatchError,
)
from .scalars import (
    ONE,
    Scalar,
    _TokenStream,
    _parse_int_list,
    _parse_scalar_expr,
    is_simple_product,
    mu_poly,
    scalar_str,
    tokenize,
)

# dict key for the central symbol; lattice points are int tuples, so the
# string sentinel can never collide with an E(alpha) key
CENTRAL = "c"


# --------------------------------------------------------------------------
# lattice helpers
# --------------------------------------------------------------------------


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def lex_compare(alpha, beta) -> int:
    """Total order on Z^n: -1, 0 or 1.  Compatible with addition."""
    if len(alpha) != len(beta):
        raise RankMismatchError(f"rank {len(alpha)} vs {len(beta)}")
    if alpha == beta:
        return 0
    return -1 if alpha < beta else 1


def lex_sign(alpha) -> int:
    """Sign of alpha against 0 in the lexicographic order."""
    for coord in alpha:
        if coord > 0:
            return 1
        if coord < 0:
            return -1
    return 0


@lru_cache(maxsize=None)
def eta0(alpha) -> Scalar:
    """((mu.alpha)^3 - mu.alpha)/12, the normalized central coefficient."""
    x = mu_poly(alpha)
    return Scalar(((x * x * x) - x).scale(Fraction(1, 12)))


@lru_cache(maxsize=None)
def _mu_scalar(alpha) -> Scalar:
    return Scalar(mu_poly(alpha))


# --------------------------------------------------------------------------
# elements
# --------------------------------------------------------------------------


def _coerce_coef(c) -> Scalar:
    if isinstance(c, Scalar):
        return c
    return Scalar.from_rational(c)


class AlgebraElement:
    """Finite Scalar-linear combination of E(alpha) symbols and C."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        if terms:
            for key, coef in terms.items():
                coef = _coerce_coef(coef)
                if key is not CENTRAL and key != CENTRAL:
                    key = tuple(key)
                    if len(key) != n:
                        raise RankMismatchError(
                            f"point {key} in rank-{n} element")
                else:
                    key = CENTRAL
                if coef:
                    clean[key] = coef
        self.terms = clean

    def _check(self, other):
        if self.n != other.n:
            raise RankMismatchError(f"rank {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, coef in other.terms.items():
            v = out.get(key)
            v = coef if v is None else v + coef
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        res = AlgebraElement.__new__(AlgebraElement)
        res.n = self.n
        res.terms = out
        return res

    def __neg__(self):
        res = AlgebraElement.__new__(AlgebraElement)
        res.n = self.n
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = _coerce_coef(c)
        if not c:
            return AlgebraElement(self.n)
        res = AlgebraElement.__new__(AlgebraElement)
        res.n = self.n
        res.terms = {k: coef * c for k, coef in self.terms.items()}
        return res

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, key) -> Scalar:
        from .scalars import ZERO

        if key != CENTRAL:
            key = tuple(key)
        return self.terms.get(key, ZERO)

    def support(self):
        """Lattice points carrying nonzero E-coefficients, sorted."""
        return sorted(k for k in self.terms if k != CENTRAL)

    def has_central(self):
        return CENTRAL in self.terms

    def __str__(self):
        return element_str(self)

    def __repr__(self):
        return f"AlgebraElement({self.n}, {element_str(self)})"


def basis_element(n: int, alpha) -> AlgebraElement:
    return AlgebraElement(n, {tuple(alpha): ONE})


def central_element(n: int) -> AlgebraElement:
    return AlgebraElement(n, {CENTRAL: ONE})


def euler_element(n: int) -> AlgebraElement:
    """d_mu, i.e. E(0)."""
    return basis_element(n, (0,) * n)


class SolenoidalAlgebra:
    """Shareable rank-n context; construction shorthand for elements."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("rank must be >= 1")
        self.n = n

    def e(self, *alpha) -> AlgebraElement:
        if len(alpha) == 1 and isinstance(alpha[0], (tuple, list)):
            alpha = tuple(alpha[0])
        return basis_element(self.n, alpha)

    def c(self) -> AlgebraElement:
        return central_element(self.n)

    def d(self) -> AlgebraElement:
        return euler_element(self.n)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self.n)

    def bracket(self, x, y) -> AlgebraElement:
        return vir_bracket(x, y)


# --------------------------------------------------------------------------
# brackets
# --------------------------------------------------------------------------


@lru_cache(maxsize=120_000)
def _basis_bracket_terms(ka, kb):
    """Bracket of two basis symbols as a terms dict; cached for scan reuse."""
    out = {}
    w = _mu_scalar(vsub(kb, ka))
    if w:
        out[vadd(ka, kb)] = w
    if all(a + b == 0 for a, b in zip(ka, kb)):
        cterm = eta0(ka)
        if cterm:
            out[CENTRAL] = cterm
    return out


def vir_bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Full bracket with central term; C brackets to zero with everything."""
    if x.n != y.n:
        raise RankMismatchError(f"rank {x.n} vs {y.n}")
    out = {}
    for ka, ca in x.terms.items():
        if ka == CENTRAL:
            continue
        for kb, cb in y.terms.items():
            if kb == CENTRAL:
                continue
            if cb is ONE:
                coef = ca
            elif ca is ONE:
                coef = cb
            else:
                coef = ca * cb
            for key, base in _basis_bracket_terms(ka, kb).items():
                term = base if coef is ONE else coef * base
                v = out.get(key)
                v = term if v is None else v + term
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    res = AlgebraElement.__new__(AlgebraElement)
    res.n = x.n
    res.terms = out
    return res


def witt_bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Centerless bracket; inputs must live in the Witt part."""
    if x.has_central() or y.has_central():
        raise CentralTermPresentError("witt_bracket input has a central term")
    out = vir_bracket(x, y)
    out.terms.pop(CENTRAL, None)
    return out


def jacobi_residual(x, y, z) -> AlgebraElement:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]]; zero for a Lie bracket."""
    return (vir_bracket(x, vir_bracket(y, z))
            + vir_bracket(y, vir_bracket(z, x))
            + vir_bracket(z, vir_bracket(x, y)))


def triangular_split(x: AlgebraElement):
    """Partition terms by the lex sign of their lattice point.

    Returns (plus, zero, minus); C and E(0) both belong to the zero part.
    """
    parts = {1: {}, 0: {}, -1: {}}
    for key, coef in x.terms.items():
        sign = 0 if key == CENTRAL else lex_sign(key)
        parts[sign][key] = coef
    mk = lambda t: AlgebraElement(x.n, t)
    return mk(parts[1]), mk(parts[0]), mk(parts[-1])


# --------------------------------------------------------------------------
# rank-one subalgebras Vir_i
# --------------------------------------------------------------------------


def vir_i_element(n: int, axis: int, m: int) -> AlgebraElement:
    """e_m^i = mu_i^{-1} t_i^m d_mu, the m-th basis vector of Vir_i."""
    if not 1 <= axis <= n:
        raise AxisOutOfRangeError(f"axis {axis} outside 1..{n}")
    eps = tuple(1 if j == axis - 1 else 0 for j in range(n))
    alpha = tuple(m * e for e in eps)
    coef = ONE.div_form(eps)
    return AlgebraElement(n, {alpha: coef})


def vir_i_cocycle_coefficients(n: int, axis: int):
    """Certify the restricted central extension on the axis subalgebra.

    Computes the central coefficient of [e_m^i, e_{-m}^i] at m = 1, 2, 3,
    fits eta_i(m) = a*m^3 + b*m exactly and checks the third sample against
    the fit.  The extension class is nontrivial precisely when a != 0.
    """
    samples = []
    for m in (1, 2, 3):
        br = vir_bracket(vir_i_element(n, axis, m), vir_i_element(n, axis, -m))
        samples.append(br.coefficient(CENTRAL))
    eta1, eta2, eta3 = samples
    sixth = Scalar.from_rational(Fraction(1, 6))
    a = (eta2 - eta1 - eta1) * sixth
    b = eta1 - a
    if a * 27 + b * 3 != eta3:
        raise FitFailedError("central samples are not cubic-odd in m")
    return a, b


# --------------------------------------------------------------------------
# text form: sums of "coef*e[a1,...,an]" and "coef*c"
# --------------------------------------------------------------------------


def element_str(x: AlgebraElement) -> str:
    if not x.terms:
        return "0"
    pieces = []
    for key in x.support():
        pieces.append((_coef_str(x.terms[key]),
                       "e[" + ",".join(str(c) for c in key) + "]"))
    if CENTRAL in x.terms:
        pieces.append((_coef_str(x.terms[CENTRAL]), "c"))
    rendered = []
    for coef, basis in pieces:
        rendered.append(basis if coef == "1" else f"{coef}*{basis}")
    return " + ".join(rendered)


def _coef_str(c: Scalar) -> str:
    s = scalar_str(c)
    return s if is_simple_product(c) else f"({s})"


def read_sign(ts: _TokenStream, sign=1) -> int:
    """Fold any run of leading +/- tokens into a single sign."""
    while ts.at_sym("-") or ts.at_sym("+"):
        _, op = ts.next()
        if op == "-":
            sign = -sign
    return sign


def parse_element(text: str, n: int) -> AlgebraElement:
    """Inverse of element_str; also accepts '-' separated sums."""
    ts = _TokenStream(tokenize(text))
    total = AlgebraElement(n)
    sign = read_sign(ts)
    while True:
        coef, key = _parse_element_term(ts, n)
        if sign < 0:
            coef = -coef
        total = total + AlgebraElement(n, {key: coef}) if key is not None else total
        if ts.done():
            return total
        kind, op = ts.next()
        if kind != "sym" or op not in "+-":
            raise ParseError(f"unexpected token {op!r} in element")
        sign = read_sign(ts, -1 if op == "-" else 1)


def _parse_element_term(ts: _TokenStream, n: int):
    """One product; returns (Scalar, key) with key None for a literal 0."""
    kind, value = ts.peek()
    if kind == "int" and value == 0:
        ts.next()
        return ONE, None
    coef = ONE
    while True:
        kind, value = ts.peek()
        if kind == "name" and value == "e":
            ts.next()
            ts.expect("sym", "[")
            alpha = _parse_int_list(ts)
            ts.expect("sym", "]")
            if len(alpha) != n:
                raise RankMismatchError(f"point {alpha} in rank-{n} element")
            return coef, alpha
        if kind == "name" and value == "c" and _ends_product(ts):
            ts.next()
            return coef, CENTRAL
        factor = _parse_scalar_factor(ts)
        coef = coef * factor
        if ts.at_sym("*"):
            ts.next()
            continue
        raise ParseError("element term lacks a basis symbol e[...] or c")


def _ends_product(ts: _TokenStream):
    """True when the token after the current one cannot extend the product."""
    nxt = ts.tokens[ts.i + 1] if ts.i + 1 < len(ts.tokens) else (None, None)
    return nxt != ("sym", "*") and nxt != ("sym", "^")


def _parse_scalar_factor(ts: _TokenStream) -> Scalar:
    kind, value = ts.peek()
    if kind == "sym" and value == "(":
        ts.next()
        out = _parse_scalar_expr(ts)
        ts.expect("sym", ")")
        if ts.at_sym("^"):
            ts.next()
            out = out ** ts.expect("int")
        return out
    if kind == "int":
        ts.next()
        out = Scalar.from_rational(value)
    elif kind == "name":
        ts.next()
        if value == "mu" and ts.at_sym("("):
            ts.expect("sym", "(")
            alpha = _parse_int_list(ts)
            ts.expect("sym", ")")
            out = Scalar.mu_form(alpha)
        else:
            out = Scalar.indeterminate(value)
    else:
        raise ParseError(f"unexpected token {value!r} in coefficient")
    if ts.at_sym("^"):
        ts.next()
        out = out ** ts.expect("int")
    return out
