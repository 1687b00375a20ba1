"""Bivariate curve construction and cyclotomic-point exclusion.

For a seven-tuple t, the parameter n of the univariate family is
replaced by a second variable, giving a curve C(y, x) with
C(x^n, x) proportional to the family member at n.  A cyclotomic factor
of any family member would produce a point on C with both coordinates
roots of unity; such a point survives on one of the transformed curves
C1(y, x) = C(-y, -x), C2 = C(y^2, x^2), C3 = C(-y^2, -x^2), so it must
show up as a cyclotomic factor of the resultants eliminating either
variable from (C, Ci).  The classifier below computes those
eliminations exactly and checks that every cyclotomic factor found is
one of the permitted kinds:

* indices 1 and 2 (coordinates +-1: the construction forces
  f(1) = -Q(1) != 0 and f(-1) = Q(-1) != 0, so these points never
  carry roots of the family member),
* indices p_i from the tuple (zeros of the cleared denominators; the
  reduced P, Q are coprime so these are not roots of f either),
* the order-contradiction pairs: an x-coordinate of order 12 with a
  y-coordinate of order 4 forces 3 | n, and order 20 with 4 forces
  5 | n, both against the admissibility of n.

Anything else is reported as Fail with the offending indices.
Eliminations use evaluation-interpolation with exact rational
reconstruction, an integrality check, and over-determined consistency
nodes on every run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from . import kernels
from .errors import IdenticallyZero
from .families import SevenTuple, _x_pow_minus_one
from .polycore import IntPoly, _divisors, _cyclotomic_coeffs, strip_cyclotomic


# ---------------------------------------------------------------------------
# bivariate polynomials as y-layers of x-coefficient lists


class BiPoly:
    """Dense bivariate integer polynomial, stored as layers[j] = the
    x-coefficient list of y^j, each layer normalized, no trailing zero
    layers."""

    __slots__ = ("layers",)

    def __init__(self, layers):
        ls = []
        for layer in layers:
            layer = list(layer)
            while layer and not layer[-1]:
                layer.pop()
            ls.append(layer)
        while ls and not ls[-1]:
            ls.pop()
        self.layers = ls

    @property
    def deg_y(self) -> int:
        return len(self.layers) - 1

    @property
    def deg_x(self) -> int:
        return max((len(l) - 1 for l in self.layers if l), default=-1)

    def is_zero(self) -> bool:
        return not self.layers

    def coeff(self, i: int, j: int) -> int:
        """Coefficient of x^i y^j."""
        if j >= len(self.layers) or i >= len(self.layers[j]):
            return 0
        return self.layers[j][i]

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.layers == other.layers

    def __repr__(self):
        return f"BiPoly(deg_x={self.deg_x}, deg_y={self.deg_y})"

    # -- arithmetic

    def __add__(self, other: "BiPoly") -> "BiPoly":
        n = max(len(self.layers), len(other.layers))
        out = []
        for j in range(n):
            a = self.layers[j] if j < len(self.layers) else []
            b = other.layers[j] if j < len(other.layers) else []
            m = max(len(a), len(b))
            layer = [0] * m
            for i, c in enumerate(a):
                layer[i] += c
            for i, c in enumerate(b):
                layer[i] += c
            out.append(layer)
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly([[-c for c in l] for l in self.layers])

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if self.is_zero() or other.is_zero():
            return BiPoly([])
        out = [[] for _ in range(len(self.layers) + len(other.layers) - 1)]
        for ja, la in enumerate(self.layers):
            if not la:
                continue
            for jb, lb in enumerate(other.layers):
                if not lb:
                    continue
                prod = kernels.mul(la, lb)
                tgt = out[ja + jb]
                if len(tgt) < len(prod):
                    tgt += [0] * (len(prod) - len(tgt))
                for i, c in enumerate(prod):
                    tgt[i] += c
        return BiPoly(out)

    def content(self) -> int:
        g = 0
        for layer in self.layers:
            g = kernels.content([g] + layer) if layer else g
            if g == 1:
                return 1
        return g

    def primitive(self) -> "BiPoly":
        g = self.content()
        if g <= 1:
            return self
        return BiPoly([kernels.scalar_div_exact(l, g) for l in self.layers])

    # -- substitutions

    def negate_vars(self) -> "BiPoly":
        """C(-y, -x): sign (-1)^(i+j) on the x^i y^j coefficient."""
        out = []
        for j, layer in enumerate(self.layers):
            out.append([c if (i + j) % 2 == 0 else -c for i, c in enumerate(layer)])
        return BiPoly(out)

    def square_vars(self) -> "BiPoly":
        """C(y^2, x^2)."""
        out = []
        for j, layer in enumerate(self.layers):
            spread = []
            for c in layer:
                spread.append(c)
                spread.append(0)
            if spread:
                spread.pop()
            out.append(spread)
            if j < len(self.layers) - 1:
                out.append([])
        return BiPoly(out)

    # -- specializations

    def at_y(self, y0: int) -> list:
        """x-coefficient list of C(y0, x)."""
        out: list = []
        p = 1
        for j, layer in enumerate(self.layers):
            if j:
                p *= y0
            if not layer:
                continue
            if len(out) < len(layer):
                out += [0] * (len(layer) - len(out))
            for i, c in enumerate(layer):
                if c:
                    out[i] += c * p
        while out and not out[-1]:
            out.pop()
        return out

    def at_x(self, x0: int) -> list:
        """y-coefficient list of C(y, x0)."""
        out = [kernels.eval_at(layer, x0, 1) if layer else 0 for layer in self.layers]
        while out and not out[-1]:
            out.pop()
        return out

    def at_y_monomial(self, n: int) -> IntPoly:
        """C(x^n, x) as a univariate polynomial."""
        out: list = []
        for j, layer in enumerate(self.layers):
            if not layer:
                continue
            shift = j * n
            if len(out) < len(layer) + shift:
                out += [0] * (len(layer) + shift - len(out))
            for i, c in enumerate(layer):
                out[i + shift] += c
        return IntPoly(out)

    def lc_in_x(self) -> list:
        """y-coefficient list of the coefficient of x^deg_x."""
        dx = self.deg_x
        out = [layer[dx] if len(layer) > dx else 0 for layer in self.layers]
        while out and not out[-1]:
            out.pop()
        return out

    def lc_in_y(self) -> list:
        """x-coefficient list of the coefficient of y^deg_y."""
        return list(self.layers[-1]) if self.layers else []


# ---------------------------------------------------------------------------
# curve construction


def build_curve(t: SevenTuple) -> BiPoly:
    """C(y, x) = (x^2 - 1) P(y, x) - x Q(y, x), content removed.

    Q/P is the four-term quotient sum with the last summand carrying y
    in place of x^n; the (y - 1) denominator is cleared and the common
    pure-x factor (known completely from the denominator factorization)
    is cancelled, so that C(x^n, x) = (x - 1) * family_member(t, n).
    """
    ps = t.primes
    dx = [1]
    for p in ps:
        dx = kernels.mul(dx, _x_pow_minus_one(p))
    # pure-x summand numerators times complementary denominators, all
    # sharing the (y - 1) factor of the common denominator
    t123: list = []
    pairs = [(ps[0], ps[1]), (ps[2], ps[3]), (ps[4], ps[5])]
    for a, b in pairs:
        term = _x_pow_minus_one(a + b)
        for p in ps:
            if p not in (a, b):
                term = kernels.mul(term, _x_pow_minus_one(p))
        if len(t123) < len(term):
            t123 += [0] * (len(term) - len(t123))
        for i, c in enumerate(term):
            t123[i] += c
    # y-summand: (y x^p7 - 1) * prod_{i<7}(x^{p_i} - 1)
    u = [1]
    for p in ps[:6]:
        u = kernels.mul(u, _x_pow_minus_one(p))
    # numerator N = A y + B over denominator D = dx * (y - 1)
    a_layer = [c for c in t123]
    xp7u = kernels.mul([0] * ps[6] + [1], u)
    if len(a_layer) < len(xp7u):
        a_layer += [0] * (len(xp7u) - len(a_layer))
    for i, c in enumerate(xp7u):
        a_layer[i] += c
    b_layer = [-c for c in t123]
    if len(b_layer) < len(u):
        b_layer += [0] * (len(u) - len(b_layer))
    for i, c in enumerate(u):
        b_layer[i] -= c
    # cancel the common pure-x factor of (A, B, dx); every common factor
    # divides dx, whose factorization is known, so trial division over
    # that list is a complete gcd
    factor_counts: dict = {}
    for p in ps:
        for d in _divisors(p):
            factor_counts[d] = factor_counts.get(d, 0) + 1
    for m in sorted(factor_counts):
        phim = list(_cyclotomic_coeffs(m))
        for _ in range(factor_counts[m]):
            qa = kernels.exact_div(a_layer, phim)
            if qa is None:
                break
            qb = kernels.exact_div(b_layer, phim)
            if qb is None:
                break
            qd = kernels.exact_div(dx, phim)
            if qd is None:
                raise AssertionError("denominator factor bookkeeping broke")
            a_layer, b_layer, dx = qa, qb, qd
    # C = (x^2 - 1) * dx * (y - 1) - x * (A y + B)
    x2m1dx = kernels.mul([-1, 0, 1], dx)
    y1 = [c for c in x2m1dx]
    y0 = [-c for c in x2m1dx]
    xa = kernels.mul([0, 1], a_layer)
    xb = kernels.mul([0, 1], b_layer)
    if len(y1) < len(xa):
        y1 += [0] * (len(xa) - len(y1))
    for i, c in enumerate(xa):
        y1[i] -= c
    if len(y0) < len(xb):
        y0 += [0] * (len(xb) - len(y0))
    for i, c in enumerate(xb):
        y0[i] -= c
    return BiPoly([y0, y1]).primitive()


def transform_curves(c: BiPoly):
    """C1(y,x) = C(-y,-x), C2 = C(y^2,x^2), C3 = C(-y^2,-x^2)."""
    c1 = c.negate_vars()
    c2 = c.square_vars()
    c3 = c2.negate_vars()
    return c1, c2, c3


# ---------------------------------------------------------------------------
# elimination by evaluation-interpolation


def eliminate(a: BiPoly, b: BiPoly, var: str, offset: Optional[int] = None, primitive: bool = True) -> IntPoly:
    """Resultant of a and b with respect to var ('x' or 'y').

    Specializes the kept variable at enough integers (Sylvester degree
    bound + 1, skipping nodes where a leading coefficient in the
    eliminated variable vanishes), computes univariate resultants, and
    reconstructs the polynomial by exact interpolation.  Ten additional
    nodes cross-check the reconstruction on every run.  Raises
    IdenticallyZero when the resultant vanishes (shared component).
    """
    if var not in ("x", "y"):
        raise ValueError("var must be 'x' or 'y'")
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of the zero polynomial")
    if var == "x":
        da_e, db_e = a.deg_x, b.deg_x
        da_k, db_k = a.deg_y, b.deg_y
        lca, lcb = a.lc_in_x(), b.lc_in_x()
        specialize = lambda bp, v: bp.at_y(v)
    else:
        da_e, db_e = a.deg_y, b.deg_y
        da_k, db_k = a.deg_x, b.deg_x
        lca, lcb = a.lc_in_y(), b.lc_in_y()
        specialize = lambda bp, v: bp.at_x(v)
    if da_e < 1 and db_e < 1:
        raise ValueError("both inputs are constant in the eliminated variable")
    bound = db_e * da_k + da_e * db_k
    need = bound + 1
    extra = 10
    if offset is None:
        offset = -(need + extra) // 2
    nodes = []
    values = []
    v = offset
    while len(nodes) < need + extra:
        if kernels.eval_at(lca, v, 1) != 0 and kernels.eval_at(lcb, v, 1) != 0:
            av = specialize(a, v)
            bv = specialize(b, v)
            from .polycore import _resultant_list

            values.append(_resultant_list(av, bv))
            nodes.append(v)
        v += 1
    main_nodes, main_vals = nodes[:need], values[:need]
    coeffs = _newton_interpolate(main_nodes, main_vals)
    if coeffs is None:
        raise AssertionError("interpolated resultant is not an integer polynomial")
    for nd, vv in zip(nodes[need:], values[need:]):
        if kernels.eval_at(coeffs, nd, 1) != vv:
            raise AssertionError("over-determination check failed")
    if not coeffs:
        raise IdenticallyZero(f"resultant in {var} vanishes identically")
    out = IntPoly(coeffs)
    return out.primitive() if primitive else out


def _newton_interpolate(nodes, values) -> Optional[list]:
    """Newton divided differences; returns int coefficient list or None."""
    n = len(nodes)
    coeffs = [Fraction(v) for v in values]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (nodes[i] - nodes[i - j])
    # expand the Newton form
    poly: list = []
    for k in range(n - 1, -1, -1):
        # poly = poly * (x - nodes[k]) + coeffs[k]
        new = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i + 1] += c
            new[i] -= c * nodes[k]
        if new:
            new[0] += coeffs[k]
        else:
            new = [Fraction(coeffs[k])]
        poly = new
        while poly and not poly[-1]:
            poly.pop()
    out = []
    for c in poly:
        if c.denominator != 1:
            return None
        out.append(c.numerator)
    return out


# ---------------------------------------------------------------------------
# classification


PAIR_NAMES = ("C1", "C2", "C3")
CASE_I = "I'"
CASE_II = "II"
CASE_III = "III"
CASE_IV = "IV"
CASE_FAIL = "Fail"


@dataclass(frozen=True)
class PairReport:
    pair: str
    y_elimination_degree: int
    x_elimination_degree: int
    x_side_factors: dict  # cyclotomic indices of the y-elimination (in x)
    y_side_factors: dict  # cyclotomic indices of the x-elimination (in y)
    case: str
    unexplained: tuple
    detail: str = ""


@dataclass(frozen=True)
class CaseReport:
    primes: tuple
    pairs: tuple

    @property
    def verdict(self) -> str:
        return "Pass" if all(p.case != CASE_FAIL for p in self.pairs) else "Fail"


def _classify_pair(t: SevenTuple, name: str, sy: dict, sx: dict, dy: int, dx: int) -> PairReport:
    ps = set(t.primes)
    trivial = {1, 2}
    unexplained = []
    has_12 = 12 in sy
    has_20 = 20 in sy
    pair_4 = 4 in sx
    for m in sorted(sy):
        if m in trivial or m in ps:
            continue
        if m == 12 and pair_4 and 3 in ps:
            continue
        if m == 20 and pair_4 and 5 in ps:
            continue
        unexplained.append(("y-elimination", m))
    for m in sorted(sx):
        if m in trivial or m in ps:
            continue
        if m == 4 and ((has_12 and 3 in ps) or (has_20 and 5 in ps)):
            continue
        unexplained.append(("x-elimination", m))
    if unexplained:
        case = CASE_FAIL
    elif has_20 and pair_4:
        case = CASE_IV
    elif has_12 and pair_4:
        case = CASE_III
    elif any(m in ps for m in list(sy) + list(sx)):
        case = CASE_II
    else:
        case = CASE_I
    return PairReport(
        pair=name,
        y_elimination_degree=dy,
        x_elimination_degree=dx,
        x_side_factors=dict(sorted(sy.items())),
        y_side_factors=dict(sorted(sx.items())),
        case=case,
        unexplained=tuple(unexplained),
    )


def rule_out_cyclotomic_points(t: SevenTuple, curve: Optional[BiPoly] = None) -> CaseReport:
    """Classify the cyclotomic factors of all six eliminations for t.

    `curve` overrides the constructed C(y, x) (used by negative-control
    tests that corrupt the curve on purpose).
    """
    c = build_curve(t) if curve is None else curve
    reports = []
    for name, ci in zip(PAIR_NAMES, transform_curves(c)):
        try:
            ry = eliminate(c, ci, "y")  # polynomial in x: x-coordinate data
            rx = eliminate(c, ci, "x")  # polynomial in y: y-coordinate data
        except IdenticallyZero as exc:
            reports.append(
                PairReport(
                    pair=name,
                    y_elimination_degree=-1,
                    x_elimination_degree=-1,
                    x_side_factors={},
                    y_side_factors={},
                    case=CASE_FAIL,
                    unexplained=(),
                    detail=f"shared component: {exc}",
                )
            )
            continue
        sy = strip_cyclotomic(ry).cyclotomic_part
        sx = strip_cyclotomic(rx).cyclotomic_part
        reports.append(_classify_pair(t, name, sy, sx, ry.degree, rx.degree))
    return CaseReport(primes=t.primes, pairs=tuple(reports))


def reachable_orders(a: int, tuple_product: int) -> set:
    """Orders of x0^n over admissible n, for x0 a primitive a-th root.

    n ranges over integers coprime to the tuple product; the order of
    x0^n is a / gcd(n, a), and gcd(n, a) = g is achievable exactly for
    divisors g of a coprime to the tuple product.
    """
    return {a // g for g in _divisors(a) if gcd(g, tuple_product) == 1}
