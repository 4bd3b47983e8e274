"""Truncated-jet superanalysis.

A jet is a finite derivative table at a body point.  Analytic continuation
shifts the argument by a nilpotent soul, so the Taylor sum is finite and
exact.  The trig backend works over the quotient ring
``Q[S, C] / (S^2 + C^2 - 1)``, where S and C stand for the sine and cosine
of a symbolic base angle and differentiation cycles through
``(S, C, -S, -C)``.

The truncation bound of a jet is a contract with the caller: for
transcendental jets choose the order at least the odd generator count of the
ring the soul lives in, so dropped terms are genuinely zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import multiindex as mi
from .errors import DomainError, ParityError
from .scalars import PolyQuotientRing, RationalRing, Relation
from .superring import SuperElement, SuperRing


@dataclass(frozen=True)
class SuperPoint:
    """A point of superspace: even coordinates and odd coordinates."""

    evens: tuple
    odds: tuple

    def __post_init__(self):
        for x in self.evens:
            if x.parity() not in (0,):
                raise ParityError("even coordinates must be even elements")
        for x in self.odds:
            if not x.is_zero() and x.parity() != 1:
                raise ParityError("odd coordinates must be odd elements")

    @property
    def arity(self):
        return (len(self.evens), len(self.odds))


def body_point(p: SuperPoint):
    """Componentwise body of the even coordinates; odd coordinates are dropped."""
    return tuple(x.body() for x in p.evens)


@dataclass(frozen=True)
class Jet:
    """Derivative table of a smooth function at a body point.

    ``table`` maps multi-degrees ``(i1, .., im)`` with total degree <= order
    to coefficient-ring values; missing entries are zero derivatives.
    ``base`` is the body point, or None when the base point is symbolic (the
    trig backend), in which case continuation arguments must be pure souls.
    """

    arity: int
    order: int
    ring: object  # CoeffRing of the values
    table: tuple  # sorted tuple of (degrees, value)
    base: tuple = None

    @classmethod
    def from_dict(cls, arity, order, ring, table, base=None):
        clean = {tuple(k): v for k, v in table.items() if not ring.is_zero(v)}
        for k in clean:
            if len(k) != arity or sum(k) > order:
                raise DomainError(f"table degree {k} out of range for order {order}")
        return cls(arity, order, ring, tuple(sorted(clean.items())), base)

    def as_dict(self):
        return dict(self.table)

    @classmethod
    def constant(cls, value, ring, arity=1, order=0, base=None):
        return cls.from_dict(arity, order, ring, {(0,) * arity: value}, base)

    def __add__(self, other):
        self._compat(other)
        out = self.as_dict()
        for k, v in other.table:
            acc = self.ring.add(out.get(k, self.ring.zero()), v)
            if self.ring.is_zero(acc):
                out.pop(k, None)
            else:
                out[k] = acc
        return Jet.from_dict(self.arity, min(self.order, other.order), self.ring, out, self.base)

    def __mul__(self, other):
        """Leibniz product: the jet of the pointwise product, truncated."""
        self._compat(other)
        order = min(self.order, other.order)
        out = {}
        for k1, v1 in self.table:
            for k2, v2 in other.table:
                k = tuple(a + b for a, b in zip(k1, k2))
                if sum(k) > order:
                    continue
                binom = 1
                for total, part in zip(k, k1):
                    binom *= math.comb(total, part)
                term = self.ring.mul(v1, v2)
                if binom != 1:
                    term = self.ring.mul(term, self.ring.from_int(binom))
                acc = self.ring.add(out.get(k, self.ring.zero()), term)
                if self.ring.is_zero(acc):
                    out.pop(k, None)
                else:
                    out[k] = acc
        return Jet.from_dict(self.arity, order, self.ring, out, self.base)

    def _compat(self, other):
        if self.arity != other.arity or self.ring != other.ring or self.base != other.base:
            raise DomainError("jets are not compatible")

    def derivative(self, axis: int = 0):
        """The jet of the partial derivative along ``axis``; order drops by one."""
        out = {}
        for k, v in self.table:
            if k[axis] == 0:
                continue
            nk = list(k)
            nk[axis] -= 1
            out[tuple(nk)] = v
        return Jet.from_dict(self.arity, self.order - 1, self.ring, out, self.base)

    def is_zero(self):
        return not self.table

    def to_json(self):
        return {
            "arity": self.arity,
            "order": self.order,
            "table": {",".join(map(str, k)): self.ring.value_to_json(v) for k, v in self.table},
        }

    @classmethod
    def from_json(cls, data, ring, base=None):
        table = {
            tuple(int(p) for p in key.split(",")): ring.value_from_json(v)
            for key, v in data["table"].items()
        }
        return cls.from_dict(int(data["arity"]), int(data["order"]), ring, table, base)


def continue_analytically(jet: Jet, xs) -> SuperElement:
    """Grassmann analytic continuation: the finite Taylor sum over souls."""
    xs = list(xs)
    if len(xs) != jet.arity:
        raise DomainError(f"expected {jet.arity} even coordinates, got {len(xs)}")
    ring = xs[0].ring
    if ring.coeff != jet.ring:
        raise DomainError("jet values and coordinates live over different coefficient rings")
    souls = []
    for i, x in enumerate(xs):
        if x.parity() != 0 and not x.is_zero():
            raise ParityError("continuation arguments must be even")
        constant = x.terms.get(0, ring.coeff.zero())
        if jet.base is None:
            if not ring.coeff.is_zero(constant):
                raise DomainError("symbolic-base jets accept pure souls only")
        elif not ring.coeff.eq(constant, jet.base[i]):
            raise DomainError("body of the argument does not match the jet base point")
        souls.append(SuperElement(ring, {b: c for b, c in x.terms.items() if b}))
    result = ring.zero()
    for degrees, value in jet.table:
        fact = 1
        for d in degrees:
            fact *= math.factorial(d)
        term = ring.from_coeff(value).scale(Fraction(1, fact))
        for soul, d in zip(souls, degrees):
            if d:
                term = term * soul ** d
        result = result + term
    return result


@dataclass(frozen=True)
class SuperSmoothFn:
    """A family of jets indexed by odd multi-indices (finite G-infinity data)."""

    odd_arity: int
    jets: tuple  # sorted tuple of (bitmask, Jet)

    @classmethod
    def from_dict(cls, odd_arity, jets):
        if any(b >> odd_arity for b in jets):
            raise DomainError("jet index exceeds the odd arity")
        return cls(odd_arity, tuple(sorted(jets.items())))


def eval_g_infinity(fn: SuperSmoothFn, point: SuperPoint) -> SuperElement:
    """``sum_mu continuation(jet_mu)(x) * xi_mu`` with factors in index order."""
    if len(point.odds) != fn.odd_arity:
        raise DomainError("odd arity mismatch")
    ring = point.evens[0].ring if point.evens else point.odds[0].ring
    result = ring.zero()
    for bits, jet in fn.jets:
        term = continue_analytically(jet, point.evens)
        for i in mi.indices_from_bits(bits):
            term = term * point.odds[i - 1]
        result = result + term
    return result


# -- super sine and cosine -------------------------------------------------------


def trig_coeff_ring() -> PolyQuotientRing:
    """``Q[S, C]`` with ``S^2 = 1 - C^2``."""
    base = RationalRing()
    plain = PolyQuotientRing(base, ("S", "C"))
    rhs = plain.sub(plain.one(), plain.mul(plain.var("C"), plain.var("C")))
    return PolyQuotientRing(base, ("S", "C"), Relation("square", ("S",), rhs))


def trig_super_ring(L: int) -> SuperRing:
    return SuperRing(trig_coeff_ring(), tuple(f"b{i}" for i in range(1, L + 1)))


def _trig_cycle(ring: PolyQuotientRing):
    s, c = ring.var("S"), ring.var("C")
    return (s, c, ring.neg(s), ring.neg(c))


def sin_jet(order: int, ring: PolyQuotientRing = None) -> Jet:
    ring = ring or trig_coeff_ring()
    cycle = _trig_cycle(ring)
    return Jet.from_dict(1, order, ring, {(k,): cycle[k % 4] for k in range(order + 1)})


def cos_jet(order: int, ring: PolyQuotientRing = None) -> Jet:
    ring = ring or trig_coeff_ring()
    cycle = _trig_cycle(ring)
    return Jet.from_dict(1, order, ring, {(k,): cycle[(k + 1) % 4] for k in range(order + 1)})


def _is_trig_ring(coeff) -> bool:
    return (
        isinstance(coeff, PolyQuotientRing)
        and coeff.variables == ("S", "C")
        and coeff.relation is not None
    )


def _trig_eval(theta: SuperElement, phase: int) -> SuperElement:
    ring = theta.ring
    if theta.parity() != 0 and not theta.is_zero():
        raise ParityError("the angle must be an even element")
    if not ring.coeff.is_zero(theta.terms.get(0, ring.coeff.zero())):
        raise DomainError("symbolic-angle backend takes the soul only (zero constant term)")
    order = ring.odd_count
    jet = sin_jet(order, ring.coeff) if phase == 0 else cos_jet(order, ring.coeff)
    return continue_analytically(jet, [theta])


def _series_eval(theta: SuperElement, sine: bool) -> SuperElement:
    ring = theta.ring
    if theta.parity() != 0 and not theta.is_zero():
        raise ParityError("the angle must be an even element")
    if not theta.is_nilpotent():
        raise DomainError("series backend requires a nilpotent angle (zero body)")
    result = ring.zero()
    power = theta if sine else ring.one()  # theta^(2i+1) or theta^(2i)
    k = 1 if sine else 0
    sign = 1
    theta_sq = theta * theta
    while not power.is_zero():
        result = result + power.scale(Fraction(sign, math.factorial(k)))
        power = power * theta_sq
        k += 2
        sign = -sign
    return result


def super_sin(theta: SuperElement) -> SuperElement:
    """Exact super sine.

    Over the trig quotient ring the angle is ``(symbolic base) + soul`` and
    ``theta`` carries the soul; elsewhere the body must vanish and the power
    series truncates exactly.
    """
    if _is_trig_ring(theta.ring.coeff):
        return _trig_eval(theta, 0)
    return _series_eval(theta, sine=True)


def super_cos(theta: SuperElement) -> SuperElement:
    """Exact super cosine; see :func:`super_sin`."""
    if _is_trig_ring(theta.ring.coeff):
        return _trig_eval(theta, 1)
    return _series_eval(theta, sine=False)


# -- even square roots and the supercircle -----------------------------------------


def _submasks(bits: int):
    mu = bits
    while True:
        yield mu
        if mu == 0:
            return
        mu = (mu - 1) & bits


def fraction_sqrt(fr: Fraction) -> Fraction:
    """Exact square root of a nonnegative rational, or DomainError."""
    fr = Fraction(fr)
    if fr < 0:
        raise DomainError("cannot take the square root of a negative rational")
    num = math.isqrt(fr.numerator)
    den = math.isqrt(fr.denominator)
    if num * num != fr.numerator or den * den != fr.denominator:
        raise DomainError(f"{fr} is not a perfect square in Q")
    return Fraction(num, den)


def sqrt_even(z: SuperElement, root0) -> SuperElement:
    """The even square root with prescribed body, by induction on index length.

    Solves ``x_lam = (z_lam - sum over proper partitions mu|nu of lam of
    sign(mu,nu) x_mu x_nu) / (2 x_0)`` in increasing index length; the result
    is verified by squaring.
    """
    ring = z.ring
    coeff = ring.coeff
    z._require_pure_grassmann()
    if z.parity() != 0 and not z.is_zero():
        raise ParityError("square roots are defined for even elements only")
    root0 = coeff.from_fraction(root0) if isinstance(root0, (int, Fraction)) else root0
    if not coeff.eq(coeff.mul(root0, root0), z.body()):
        raise DomainError("root0 squared does not equal the body of z")
    double = coeff.add(root0, root0)
    if coeff.is_zero(double):
        raise DomainError("2*root0 is not invertible")
    if not hasattr(coeff, "div"):
        raise DomainError("the coefficient ring does not support exact division")

    support = 0
    for b in z.terms:
        support |= b
    # The root may be supported anywhere inside the closure of z's support,
    # including masks where z itself is zero.
    masks = sorted(
        (b for b in _submasks(support) if b and b.bit_count() % 2 == 0),
        key=lambda b: (b.bit_count(), b),
    )
    coeffs = {0: root0}
    for lam in masks:
        acc = z.terms.get(lam, coeff.zero())
        # Subtract contributions of proper partitions mu | nu = lam.
        mu = (lam - 1) & lam
        while mu:
            nu = lam ^ mu
            xmu = coeffs.get(mu)
            xnu = coeffs.get(nu)
            if xmu is not None and xnu is not None:
                _, sign = mi.merge_bits(mu, nu)
                term = coeff.mul(xmu, xnu)
                if sign < 0:
                    term = coeff.neg(term)
                acc = coeff.sub(acc, term)
            mu = (mu - 1) & lam
        value = coeff.div(acc, double)
        if not coeff.is_zero(value):
            coeffs[lam] = value
    x = ring.element(coeffs)
    if x * x != z:
        raise DomainError("square-root recursion failed to verify")  # arithmetic bug
    return x


def sqrt_even_binomial(z: SuperElement, root0) -> SuperElement:
    """Independent oracle: ``root0 * sum_k binom(1/2, k) w^k`` with ``w = z/root0^2 - 1``."""
    ring = z.ring
    coeff = ring.coeff
    root0 = coeff.from_fraction(root0) if isinstance(root0, (int, Fraction)) else root0
    root_sq = coeff.mul(root0, root0)
    if not coeff.eq(root_sq, z.body()):
        raise DomainError("root0 squared does not equal the body of z")
    inv_sq = coeff.div(coeff.one(), root_sq)
    w = ring.from_coeff(inv_sq) * z - ring.one()
    result = ring.zero()
    power = ring.one()
    binom = Fraction(1)
    k = 0
    while not power.is_zero():
        result = result + power.scale(binom)
        binom *= Fraction(1, 2) - k
        k += 1
        binom /= k
        power = power * w
    return result * ring.from_coeff(root0)


def supercircle_chart(y: SuperElement, branch: str = "+") -> SuperPoint:
    """Inverse chart of the supercircle: ``y -> (+-sqrt(1 - y^2), y)``."""
    if branch not in ("+", "-"):
        raise DomainError("branch must be '+' or '-'")
    ring = y.ring
    body = y.body()
    if not isinstance(body, Fraction):
        raise DomainError("supercircle charts require rational bodies")
    if not (-1 < body < 1):
        raise DomainError("body of y must lie in (-1, 1)")
    root = fraction_sqrt(1 - body * body)
    if branch == "-":
        root = -root
    z = ring.one() - y * y
    x = sqrt_even(z, root)
    return SuperPoint((x, y), ())


def circle_tangent(point: SuperPoint, lam: SuperElement):
    """Tangent vector ``(-lam*y, lam*x)`` at an on-circle point ``(x, y)``."""
    if len(point.evens) != 2:
        raise DomainError("expected a point of the supercircle")
    x, y = point.evens
    ring = x.ring
    if x * x + y * y != ring.one():
        raise DomainError("point does not lie on the supercircle")
    tangent = (-(lam * y), lam * x)
    if not (x * tangent[0] + y * tangent[1]).is_zero():
        raise DomainError("tangency identity failed")  # arithmetic bug
    return tangent
