"""Tensor-density modules T_mu(a, b) and their structure theory.

The module has basis {v_beta : beta in Z^n} with action

    E(alpha) . v_beta = (mu.beta + a + (mu.alpha) b) v_{alpha+beta},
    C . v = 0,

for parameters a, b.  Every weight space is one dimensional, so these are
the bounded weight modules.  T_mu(a, b) is irreducible unless b is 0 or 1
and a lies in the lattice Gamma_mu = {mu.gamma}; in the exceptional cases
(reduced to a = 0 by the shift isomorphism v_beta -> v_{beta+gamma}) the
module T(0,0) contains the invariant line through v_0 and T(0,1) contains
the codimension-one submodule spanned by {v_s : s != 0}.

Lattice membership of a is decided structurally, never numerically: a formal
parameter is generic, a declared lattice tag mu.gamma is a member, and a
rational constant is a member exactly when it is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import CENTRAL, AlgebraElement, vadd, vsub, vir_bracket
from .cocycle import box_points
from .errors import ParseError, RankMismatchError, WrongCaseError
from .scalars import (
    A,
    B,
    ONE,
    ZERO,
    Scalar,
    _TokenStream,
    _parse_int_list,
    is_simple_product,
    mu_poly,
    scalar_str,
    tokenize,
)


@dataclass(frozen=True)
class DensityParams:
    """Parameters (a, b); a may carry a lattice tag declaring a = mu.gamma."""

    n: int
    a: Scalar
    b: Scalar
    a_lattice_tag: Optional[tuple] = None

    def __post_init__(self):
        if self.a_lattice_tag is not None:
            tag = tuple(self.a_lattice_tag)
            if len(tag) != self.n:
                raise RankMismatchError(f"tag {tag} in rank-{self.n} params")
            if Scalar(mu_poly(tag)) != self.a:
                raise ValueError("lattice tag does not match the a parameter")
            object.__setattr__(self, "a_lattice_tag", tag)


def formal_params(n: int) -> DensityParams:
    return DensityParams(n, A, B)


def lattice_params(n: int, gamma, b) -> DensityParams:
    gamma = tuple(gamma)
    b = b if isinstance(b, Scalar) else Scalar.from_rational(b)
    return DensityParams(n, Scalar(mu_poly(gamma)), b, gamma)


class DensityVector:
    """Finite Scalar combination of basis vectors v_beta."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for beta, coef in terms.items():
                coef = coef if isinstance(coef, Scalar) else Scalar.from_rational(coef)
                if coef:
                    self.terms[tuple(beta)] = coef

    def __add__(self, other):
        if self.n != other.n:
            raise RankMismatchError(f"rank {self.n} vs {other.n}")
        out = dict(self.terms)
        for beta, coef in other.terms.items():
            v = out.get(beta)
            v = coef if v is None else v + coef
            if v:
                out[beta] = v
            else:
                out.pop(beta, None)
        res = DensityVector(self.n)
        res.terms = out
        return res

    def __neg__(self):
        res = DensityVector(self.n)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = c if isinstance(c, Scalar) else Scalar.from_rational(c)
        if not c:
            return DensityVector(self.n)
        res = DensityVector(self.n)
        res.terms = {k: coef * c for k, coef in self.terms.items()}
        return res

    def __eq__(self, other):
        return isinstance(other, DensityVector) and self.n == other.n \
            and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, beta) -> Scalar:
        return self.terms.get(tuple(beta), ZERO)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for beta in sorted(self.terms):
            coef = self.terms[beta]
            cs = scalar_str(coef)
            if not is_simple_product(coef):
                cs = f"({cs})"
            basis = "v[" + ",".join(str(c) for c in beta) + "]"
            pieces.append(basis if cs == "1" else f"{cs}*{basis}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"DensityVector({self.n}, {self})"


def basis_vector(n: int, beta) -> DensityVector:
    return DensityVector(n, {tuple(beta): ONE})


def parse_density_vector(text: str, n: int) -> DensityVector:
    from .algebra import _parse_scalar_factor, read_sign

    ts = _TokenStream(tokenize(text))
    total = DensityVector(n)
    sign = read_sign(ts)
    while True:
        kind, value = ts.peek()
        if kind == "int" and value == 0:
            ts.next()
        else:
            coef = ONE
            while True:
                kind, value = ts.peek()
                if kind == "name" and value == "v":
                    ts.next()
                    ts.expect("sym", "[")
                    beta = _parse_int_list(ts)
                    ts.expect("sym", "]")
                    if len(beta) != n:
                        raise RankMismatchError(f"point {beta} in rank-{n} vector")
                    break
                coef = coef * _parse_scalar_factor(ts)
                if ts.at_sym("*"):
                    ts.next()
                    continue
                raise ParseError("vector term lacks a basis symbol v[...]")
            if sign < 0:
                coef = -coef
            total = total + DensityVector(n, {beta: coef})
        if ts.done():
            return total
        kind, op = ts.next()
        if kind != "sym" or op not in "+-":
            raise ParseError(f"unexpected token {op!r} in vector")
        sign = read_sign(ts, -1 if op == "-" else 1)


def act_coefficient(alpha, beta, p: DensityParams) -> Scalar:
    """mu.beta + a + (mu.alpha) b."""
    return Scalar(mu_poly(beta)) + p.a + Scalar(mu_poly(alpha)) * p.b


def density_act(x: AlgebraElement, v: DensityVector, p: DensityParams) -> DensityVector:
    """Bilinear extension of the basis action; the central symbol acts by zero."""
    if x.n != v.n:
        raise RankMismatchError(f"rank {x.n} vs {v.n}")
    out = DensityVector(x.n)
    acc = {}
    for key, ce in x.terms.items():
        if key == CENTRAL:
            continue
        for beta, cv in v.terms.items():
            coef = ce * cv * act_coefficient(key, beta, p)
            if coef:
                target = vadd(key, beta)
                prev = acc.get(target)
                coef = coef if prev is None else prev + coef
                if coef:
                    acc[target] = coef
                else:
                    acc.pop(target, None)
    out.terms = acc
    return out


def density_axiom_residual(x, y, v, p: DensityParams) -> DensityVector:
    """[x,y].v - x.(y.v) + y.(x.v); zero for a genuine module."""
    return (density_act(vir_bracket(x, y), v, p)
            - density_act(x, density_act(y, v, p), p)
            + density_act(y, density_act(x, v, p), p))


IRREDUCIBLE = "irreducible"
REDUCIBLE_TRIVIAL_SUB = "reducible_trivial_sub"
REDUCIBLE_CODIM_ONE = "reducible_codim_one"


@dataclass(frozen=True)
class Classification:
    case: str
    witness: Optional[dict]

    def as_dict(self):
        return {"case": self.case, "witness": self.witness}


def _lattice_membership(p: DensityParams):
    """(member?, shift gamma) decided from the declared shape of a."""
    if p.a_lattice_tag is not None:
        return True, p.a_lattice_tag
    rat = p.a.as_rational()
    if rat is not None and rat == 0:
        return True, (0,) * p.n
    return False, None


def classify_density(p: DensityParams) -> Classification:
    """Irreducibility trichotomy of T_mu(a, b)."""
    member, gamma = _lattice_membership(p)
    b_val = None
    if p.b == ZERO:
        b_val = 0
    elif p.b == ONE:
        b_val = 1
    if not member or b_val is None:
        return Classification(IRREDUCIBLE, None)
    case = REDUCIBLE_TRIVIAL_SUB if b_val == 0 else REDUCIBLE_CODIM_ONE
    return Classification(case, {"shift": list(gamma), "b": b_val})


@dataclass
class SubmoduleReport:
    case: str
    box: int
    checks: list
    ok: bool

    def as_dict(self):
        return {"case": self.case, "box": self.box, "ok": self.ok,
                "checks": [{"id": cid, "ok": cok} for cid, cok in self.checks]}


def submodule_invariance_check(p: DensityParams, box: int) -> SubmoduleReport:
    """Certify the exceptional submodule structure inside a box.

    Works on the shifted module with a = 0 (the shift isomorphism moves any
    declared lattice value of a to zero).  For b = 0 the line through v_0 is
    invariant and each v_kappa, kappa != 0, reaches every basis vector of the
    box in one step with a symbolically nonzero coefficient.  For b = 1 the
    span of {v_s : s != 0} is invariant because the v_0 coefficient of
    E(alpha) . v_{-alpha} cancels, and the same reachability holds inside it.
    """
    cls = classify_density(p)
    if cls.case == IRREDUCIBLE:
        raise WrongCaseError("parameters are not an exceptional case")
    n = p.n
    shifted = DensityParams(n, ZERO, p.b)
    pts = box_points(n, box)
    checks = []

    if cls.case == REDUCIBLE_TRIVIAL_SUB:
        ok_line = True
        for alpha in pts:
            if density_act(_e(n, alpha), basis_vector(n, (0,) * n), shifted):
                ok_line = False
        checks.append(("invariant_line_v0", ok_line))
        ok_reach = True
        for kappa in pts:
            if not any(kappa):
                continue
            for target in pts:
                coef = act_coefficient(vsub(target, kappa), kappa, shifted)
                if coef.is_zero():
                    ok_reach = False
        checks.append(("v_kappa_reaches_box", ok_reach))
    else:
        ok_cancel = True
        for alpha in pts:
            if not any(alpha):
                continue
            image = density_act(_e(n, alpha), basis_vector(n, vneg_t(alpha)), shifted)
            if image.coefficient((0,) * n):
                ok_cancel = False
        checks.append(("v0_coefficient_cancels", ok_cancel))
        ok_reach = True
        for kappa in pts:
            if not any(kappa):
                continue
            for target in pts:
                if not any(target):
                    continue
                coef = act_coefficient(vsub(target, kappa), kappa, shifted)
                if coef.is_zero():
                    ok_reach = False
        checks.append(("codim_one_part_reaches_box", ok_reach))

    ok = all(c for _, c in checks)
    return SubmoduleReport(cls.case, box, checks, ok)


def _e(n, alpha):
    from .algebra import basis_element

    return basis_element(n, alpha)


def vneg_t(alpha):
    return tuple(-c for c in alpha)


def duality_check(p: DensityParams, alpha, gamma) -> Scalar:
    """Residual of the dual-module identification with T_mu(-a, 1-b).

    The contragredient action on the dual basis has coefficient
    -(mu.(gamma-alpha) + a + (mu.alpha) b); matching it against the
    T(-a, 1-b) coefficient mu.(-gamma) - a + (mu.alpha)(1-b) must give zero.
    """
    alpha, gamma = tuple(alpha), tuple(gamma)
    lhs = -(Scalar(mu_poly(vsub(gamma, alpha))) + p.a + Scalar(mu_poly(alpha)) * p.b)
    rhs = Scalar(mu_poly(vneg_t(gamma))) - p.a + Scalar(mu_poly(alpha)) * (ONE - p.b)
    return lhs - rhs
