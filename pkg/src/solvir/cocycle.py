"""2-cocycle calculus on the solenoidal Witt algebra.

A 2-cochain here is a skew function on pairs of lattice points.  Arbitrary
functions on Z^n x Z^n cannot be stored, so TwoCochain keeps a finite
parameterization with three parts, each exactly evaluable at every pair:

* a Scalar multiple of the canonical cocycle
      C0(alpha, beta) = ((mu.alpha)^3 - mu.alpha)/12 * delta_{alpha,-beta},
* the coboundary of a finitely supported 1-cochain f, i.e.
      (df)(alpha, beta) = mu.(beta - alpha) * f(alpha + beta),
* a finitely supported skew "extra" table (each unordered pair stored once,
  on its lex-sorted representative).

The normalization algorithm follows the change of basis
e'_alpha = e_alpha + theta(0, alpha)/(mu.alpha) * c: subtracting the
coboundary of the shift g(alpha) = theta(0, alpha)/(mu.alpha) kills every
theta(0, .) entry, and for a genuine cocycle the shifted cochain is
supported on the diagonal pairs (alpha, -alpha), where it defines an odd
table eta.  Valid eta tables fit eta(alpha) = a*(mu.alpha)^3 + b*(mu.alpha);
the class of the cocycle is measured by the coefficient a alone, which is
invariant under adding coboundaries.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .algebra import _mu_scalar, eta0, lex_compare, vadd, vneg, vsub
from .errors import (
    BoxTooSmallError,
    NotACocycleError,
    NotCubicOddError,
    NotNormalizableError,
    OutsideBoxError,
)
from .linalg import RationalEchelon
from .scalars import ONE, ZERO, Polynomial, Scalar, mu_poly


def canonical_cocycle(alpha, beta) -> Scalar:
    """((mu.alpha)^3 - mu.alpha)/12 when beta = -alpha, else 0."""
    if any(a + b for a, b in zip(alpha, beta)):
        return ZERO
    return eta0(tuple(alpha))


def box_points(n: int, radius: int):
    """All lattice points of rank n with coordinates in [-radius, radius]."""
    return [tuple(p) for p in product(range(-radius, radius + 1), repeat=n)]


class OneCochain:
    """Finitely supported map from lattice points to Scalars."""

    __slots__ = ("n", "support")

    def __init__(self, n: int, support=None):
        self.n = n
        self.support = {}
        if support:
            for alpha, value in support.items():
                value = value if isinstance(value, Scalar) else Scalar.from_rational(value)
                if value:
                    self.support[tuple(alpha)] = value

    def value(self, alpha) -> Scalar:
        return self.support.get(tuple(alpha), ZERO)

    def __add__(self, other):
        out = dict(self.support)
        for alpha, value in other.support.items():
            v = out.get(alpha)
            v = value if v is None else v + value
            if v:
                out[alpha] = v
            else:
                out.pop(alpha, None)
        res = OneCochain(self.n)
        res.support = out
        return res

    def __neg__(self):
        res = OneCochain(self.n)
        res.support = {a: -v for a, v in self.support.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, OneCochain) and self.n == other.n \
            and self.support == other.support

    def is_zero(self):
        return not self.support

    def to_records(self):
        return [[list(alpha), str(value)]
                for alpha, value in sorted(self.support.items())]

    @classmethod
    def from_records(cls, n, records):
        from .scalars import parse_scalar

        return cls(n, {tuple(alpha): parse_scalar(text) for alpha, text in records})

    def __repr__(self):
        return f"OneCochain({self.n}, {self.support!r})"


class TwoCochain:
    """canonical multiple + coboundary part + finite skew deviation."""

    __slots__ = ("n", "canonical_multiple", "cob", "extra")

    def __init__(self, n: int, canonical_multiple=ZERO, cob=None, extra=None):
        self.n = n
        cm = canonical_multiple
        self.canonical_multiple = cm if isinstance(cm, Scalar) else Scalar.from_rational(cm)
        self.cob = cob if cob is not None else OneCochain(n)
        self.extra = {}
        if extra:
            for (alpha, beta), value in extra.items():
                self._put(tuple(alpha), tuple(beta), value)

    def _put(self, alpha, beta, value):
        value = value if isinstance(value, Scalar) else Scalar.from_rational(value)
        cmp = lex_compare(alpha, beta)
        if cmp == 0:
            if value:
                raise ValueError("skewness forces zero on diagonal pairs")
            return
        if cmp > 0:
            alpha, beta, value = beta, alpha, -value
        key = (alpha, beta)
        v = self.extra.get(key)
        v = value if v is None else v + value
        if v:
            self.extra[key] = v
        else:
            self.extra.pop(key, None)

    def value(self, alpha, beta) -> Scalar:
        alpha, beta = tuple(alpha), tuple(beta)
        out = ZERO
        if self.canonical_multiple:
            c0 = canonical_cocycle(alpha, beta)
            if c0:
                out = out + self.canonical_multiple * c0
        if self.cob.support:
            f = self.cob.value(vadd(alpha, beta))
            if f:
                out = out + _mu_scalar(vsub(beta, alpha)) * f
        if self.extra:
            cmp = lex_compare(alpha, beta)
            if cmp < 0:
                v = self.extra.get((alpha, beta))
                if v is not None:
                    out = out + v
            elif cmp > 0:
                v = self.extra.get((beta, alpha))
                if v is not None:
                    out = out - v
        return out

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("rank mismatch")
        res = TwoCochain(self.n, self.canonical_multiple + other.canonical_multiple,
                         self.cob + other.cob, dict(self.extra))
        for (alpha, beta), value in other.extra.items():
            res._put(alpha, beta, value)
        return res

    def pair_sum_support(self):
        """Lattice sums s where theta can be nonzero on pairs with alpha+beta=s."""
        sums = set()
        if self.canonical_multiple:
            sums.add((0,) * self.n)
        sums.update(self.cob.support)
        for alpha, beta in self.extra:
            sums.add(vadd(alpha, beta))
        return sums

    def to_records(self):
        return {
            "n": self.n,
            "canonical_multiple": str(self.canonical_multiple),
            "coboundary": self.cob.to_records(),
            "extra": [[list(a), list(b), str(v)]
                      for (a, b), v in sorted(self.extra.items())],
        }

    @classmethod
    def from_records(cls, data):
        from .scalars import parse_scalar

        n = int(data["n"])
        cm = parse_scalar(data.get("canonical_multiple", "0"))
        cob = OneCochain.from_records(n, data.get("coboundary", []))
        extra = {(tuple(a), tuple(b)): parse_scalar(text)
                 for a, b, text in data.get("extra", [])}
        return cls(n, cm, cob, extra)


def canonical_cochain(n: int, multiple=ONE) -> TwoCochain:
    return TwoCochain(n, multiple)


def coboundary(f: OneCochain) -> TwoCochain:
    """df(e_alpha, e_beta) = f([e_alpha, e_beta])."""
    return TwoCochain(f.n, ZERO, f)


def cocycle_residual(theta: TwoCochain, alpha, beta, kappa) -> Scalar:
    """theta(e_a,[e_k,e_b]) + theta(e_b,[e_a,e_k]) + theta(e_k,[e_b,e_a])."""
    alpha, beta, kappa = tuple(alpha), tuple(beta), tuple(kappa)
    out = ZERO
    for x, y, z in ((alpha, kappa, beta), (beta, alpha, kappa), (kappa, beta, alpha)):
        # [e_y, e_z] = mu.(z - y) e_{y+z}
        coef = _mu_scalar(vsub(z, y))
        if coef:
            val = theta.value(x, vadd(y, z))
            if val:
                out = out + coef * val
    return out


def check_cocycle_on_box(theta: TwoCochain, box: int):
    """Raise NotACocycleError if some triple inside the box has residual != 0.

    Every residual term evaluates theta at a pair whose sum equals
    alpha+beta+kappa, so triples whose total falls outside theta's pair-sum
    support have residual zero term by term; only totals in the support need
    an explicit scan.  The scan over those is exhaustive and exact.
    """
    pts = box_points(theta.n, box)
    idx = set(pts)
    for total in sorted(theta.pair_sum_support()):
        for alpha in pts:
            for beta in pts:
                kappa = vsub(total, vadd(alpha, beta))
                if kappa not in idx:
                    continue
                res = cocycle_residual(theta, alpha, beta, kappa)
                if res:
                    raise NotACocycleError((alpha, beta, kappa), str(res))


class EtaTable:
    """Diagonal values eta(mu.alpha) of a normalized cocycle, within a box."""

    __slots__ = ("n", "box", "values")

    def __init__(self, n: int, box: int, values=None):
        self.n = n
        self.box = box
        self.values = {}
        if values:
            for alpha, value in values.items():
                value = value if isinstance(value, Scalar) else Scalar.from_rational(value)
                if value:
                    self.values[tuple(alpha)] = value
        for alpha, value in self.values.items():
            neg = vneg(alpha)
            if neg in self.values and self.values[neg] != -value:
                raise ValueError(f"eta table is not odd at {alpha}")

    def in_box(self, alpha):
        return all(abs(c) <= self.box for c in alpha)

    def value(self, alpha) -> Scalar:
        alpha = tuple(alpha)
        if not self.in_box(alpha):
            raise OutsideBoxError(f"{alpha} outside radius {self.box}")
        return self.values.get(alpha, ZERO)


def normalize_cocycle(theta: TwoCochain, box: int):
    """Shift a cocycle into diagonal form; returns (EtaTable, shift OneCochain).

    Validates the cocycle condition on the box first (NotACocycleError), then
    subtracts the coboundary of g(alpha) = theta(0, alpha)/(mu.alpha) and
    certifies that no off-diagonal pair inside the box survives
    (NotNormalizableError otherwise).
    """
    check_cocycle_on_box(theta, box)
    n = theta.n
    zero = (0,) * n

    shift_support = {}
    candidates = set(theta.cob.support)
    for a, b in theta.extra:
        if a == zero:
            candidates.add(b)
        if b == zero:
            candidates.add(a)
    for gamma in candidates:
        if gamma == zero:
            continue
        val = theta.value(zero, gamma)
        if val:
            shift_support[gamma] = val.div_form(gamma)
    shift = OneCochain(n, shift_support)

    shifted = TwoCochain(n, theta.canonical_multiple, theta.cob - shift,
                         dict(theta.extra))

    pts = box_points(n, box)
    for alpha in pts:
        for beta in pts:
            if all(a + b == 0 for a, b in zip(alpha, beta)):
                continue
            val = shifted.value(alpha, beta)
            if val:
                raise NotNormalizableError((alpha, beta), str(val))

    values = {}
    for alpha in pts:
        val = shifted.value(alpha, vneg(alpha))
        if val:
            values[alpha] = val
    return EtaTable(n, box, values), shift


def recognize_eta(eta: EtaTable):
    """Exact fit eta(alpha) = a*(mu.alpha)^3 + b*(mu.alpha) over the box.

    Needs box >= 2 so the first-axis samples alpha = eps1, 2*eps1 pin (a, b);
    every box point is then checked against the fit (NotCubicOddError).
    """
    if eta.box < 2:
        raise BoxTooSmallError("recognize_eta needs box >= 2")
    eps = (1,) + (0,) * (eta.n - 1)
    two_eps = (2,) + (0,) * (eta.n - 1)
    eta1 = eta.value(eps)
    eta2 = eta.value(two_eps)
    sixth = Scalar.from_rational(Fraction(1, 6))
    a = ((eta2 - eta1 - eta1) * sixth).div_form(eps).div_form(eps).div_form(eps)
    b = (eta1 - a * (Scalar.mu_form(eps) ** 3)).div_form(eps)
    for alpha in box_points(eta.n, eta.box):
        x = Scalar(mu_poly(alpha))
        if eta.value(alpha) != a * x * x * x + b * x:
            raise NotCubicOddError(f"table value at {alpha} off the cubic fit")
    return a, b


def full_equation_residual(eta: EtaTable, alpha, beta) -> Scalar:
    """2x*eta(x) - 2y*eta(y) - (x-y)*eta(x+y) - (x+y)*eta(x-y) at lattice points."""
    alpha, beta = tuple(alpha), tuple(beta)
    x = Scalar(mu_poly(alpha))
    y = Scalar(mu_poly(beta))
    return (x * eta.value(alpha) * 2 - y * eta.value(beta) * 2
            - (x - y) * eta.value(vadd(alpha, beta))
            - (x + y) * eta.value(vsub(alpha, beta)))


class FunctionalEquationSolution:
    """Kernel of the diagonal system a_k*(5 - 2^(k+2) + 3^k) = 0, k <= bound."""

    def __init__(self, degree_bound: int):
        self.degree_bound = degree_bound
        self.diagonal = {k: 5 - 2 ** (k + 2) + 3 ** k
                         for k in range(degree_bound + 1)}
        self.kernel_exponents = [k for k, c in self.diagonal.items() if c == 0]
        self.dimension = len(self.kernel_exponents)
        self.basis = [f"x^{k}" for k in self.kernel_exponents]

    def __repr__(self):
        return (f"FunctionalEquationSolution(degree_bound={self.degree_bound}, "
                f"basis={self.basis})")


def solve_functional_equation(degree_bound: int) -> FunctionalEquationSolution:
    """Polynomial solutions of 5x*eta(x) - 4x*eta(2x) + x*eta(3x) = 0.

    Substituting eta(x) = sum a_k x^k decouples the equation into the diagonal
    conditions a_k*(5 - 2^(k+2) + 3^k) = 0; the factor vanishes exactly for
    k in {1, 3}, so the kernel is spanned by x and x^3 once degree_bound >= 3.
    """
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    return FunctionalEquationSolution(degree_bound)


class H2Report:
    def __init__(self, cocycle_space_dim, coboundary_space_dim, box,
                 degree_bound, equations):
        self.cocycle_space_dim = cocycle_space_dim
        self.coboundary_space_dim = coboundary_space_dim
        self.quotient_dim = cocycle_space_dim - coboundary_space_dim
        self.box = box
        self.degree_bound = degree_bound
        self.equations = equations

    def as_dict(self):
        return {
            "cocycle_space_dim": self.cocycle_space_dim,
            "coboundary_space_dim": self.coboundary_space_dim,
            "quotient_dim": self.quotient_dim,
            "box": self.box,
            "degree_bound": self.degree_bound,
            "equations": self.equations,
        }


def h2_rank_experiment(n: int, box: int, degree_bound: int = 10) -> H2Report:
    """Truncated rank computation behind the one-dimensionality of H^2.

    After normalization a cocycle is the diagonal ansatz
    theta(alpha, beta) = delta_{alpha,-beta} * eta(mu.alpha) with polynomial
    eta = sum_k a_k x^k, k <= degree_bound.  The linear system imposed on the
    a_k consists of the skewness conditions (even coefficients vanish) plus
    the cocycle condition on every zero-sum triple inside the box, expanded
    into one rational equation per mu-monomial.  The kernel dimension is the
    cocycle space dimension; the coboundary directions inside the ansatz are
    the multiples of x (shifts reach exactly those), and the quotient
    dimension is their difference.
    """
    if box < 2:
        raise BoxTooSmallError("h2_rank_experiment needs box >= 2")
    ncoef = degree_bound + 1
    ech = RationalEchelon(ncoef)
    equations = 0

    # skewness: eta must be odd
    for k in range(0, ncoef, 2):
        row = [Fraction(0)] * ncoef
        row[k] = Fraction(2)
        ech.add_row(row)
        equations += 1

    x_direction = [Fraction(0)] * ncoef
    if ncoef > 1:
        x_direction[1] = Fraction(1)

    pts = box_points(n, box)
    idx = set(pts)
    powers = {}

    def pows(point):
        cached = powers.get(point)
        if cached is None:
            base = mu_poly(point)
            cached = [Polynomial.const(1)]
            for _ in range(degree_bound):
                cached.append(cached[-1] * base)
            powers[point] = cached
        return cached

    max_rank = ncoef - 2 if degree_bound >= 3 else ncoef
    seen = set()
    for alpha in pts:
        for beta in pts:
            kappa = vneg(vadd(alpha, beta))
            if kappa not in idx:
                continue
            key = tuple(sorted((alpha, beta, kappa)))
            if key in seen:
                continue
            seen.add(key)
            u = [mu_poly(vsub(beta, kappa)), mu_poly(vsub(kappa, alpha)),
                 mu_poly(vsub(alpha, beta))]
            xs = [pows(alpha), pows(beta), pows(kappa)]
            per_mon = {}
            for k in range(ncoef):
                col = Polynomial()
                for i in range(3):
                    col = col + u[i] * xs[i][k]
                for mon, coef in col.t.items():
                    row = per_mon.get(mon)
                    if row is None:
                        row = [Fraction(0)] * ncoef
                        per_mon[mon] = row
                    row[k] += coef
            for mon in sorted(per_mon, key=lambda m: (len(m), m)):
                row = per_mon[mon]
                if not any(row):
                    continue
                assert sum(c * v for c, v in zip(row, x_direction)) == 0, \
                    "x direction must solve every cocycle equation"
                equations += 1
                ech.add_row(row)
            if ech.rank >= max_rank:
                break
        if ech.rank >= max_rank:
            break

    cocycle_dim = ncoef - ech.rank
    cob_dim = 1 if ncoef > 1 else 0
    return H2Report(cocycle_dim, cob_dim, box, degree_bound, equations)
