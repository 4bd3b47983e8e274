"""Coefficient rings under the anticommuting layer.

All arithmetic is exact.  Four scalar kinds are provided: rationals,
Gaussian rationals, integers mod n, and Gaussian rationals extended by
formal square roots of positive integers.  On top of any scalar kind sits
``PolyQuotientRing``: a commutative polynomial ring with at most one
quadratic relation, rewritten to a canonical normal form.

Ring values are plain data (``Fraction``, ``GaussianRational``, ``int``,
radical dicts, ``PolyValue``); all operations go through the ring object,
which owns the normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, RingMismatchError


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __eq__(self, other):
        return isinstance(other, GaussianRational) and self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i" if self.im != 1 else "i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        istr = "i" if mag == 1 else f"{mag}*i"
        return f"{self.re}{sign}{istr}"


def squarefree_split(n: int):
    """Write ``n = m*m*s`` with ``s`` squarefree; returns ``(m, s)``."""
    if n <= 0:
        raise DomainError("radicands must be positive integers")
    m, s = 1, 1
    d = 2
    while d * d <= n:
        count = 0
        while n % d == 0:
            n //= d
            count += 1
        m *= d ** (count // 2)
        if count % 2:
            s *= d
        d += 1
    return m, s * n


class CoeffRing:
    """Interface shared by all coefficient rings."""

    kind = None

    def zero(self):
        raise NotImplementedError

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        return self.from_fraction(Fraction(n))

    def from_fraction(self, fr):
        raise NotImplementedError

    def add(self, u, v):
        raise NotImplementedError

    def sub(self, u, v):
        return self.add(u, self.neg(v))

    def neg(self, u):
        raise NotImplementedError

    def mul(self, u, v):
        raise NotImplementedError

    def eq(self, u, v):
        return u == v

    def is_zero(self, u):
        return self.eq(u, self.zero())

    def conj(self, u):
        return u

    def key(self, u):
        """Hashable canonical form of a value."""
        return u

    def to_str(self, u):
        return str(u)

    def value_to_json(self, u):
        raise NotImplementedError

    def value_from_json(self, data):
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(repr(self.to_json()))


class RationalRing(CoeffRing):
    kind = "rational"

    def zero(self):
        return Fraction(0)

    def from_fraction(self, fr):
        return Fraction(fr)

    def add(self, u, v):
        return u + v

    def neg(self, u):
        return -u

    def mul(self, u, v):
        return u * v

    def div(self, u, v):
        return u / v

    def value_to_json(self, u):
        return str(u)

    def value_from_json(self, data):
        return _parse_fraction(str(data))

    def to_json(self):
        return {"kind": "rational"}


class GaussianRationalRing(CoeffRing):
    kind = "gaussian_rational"

    def zero(self):
        return GaussianRational(0, 0)

    def from_fraction(self, fr):
        return GaussianRational(fr, 0)

    def imaginary_unit(self):
        return GaussianRational(0, 1)

    def add(self, u, v):
        return u + v

    def neg(self, u):
        return -u

    def mul(self, u, v):
        return u * v

    def div(self, u, v):
        return u * v.inverse()

    def conj(self, u):
        return u.conj()

    def value_to_json(self, u):
        return {"re": str(u.re), "im": str(u.im)}

    def value_from_json(self, data):
        return GaussianRational(_parse_fraction(data["re"]), _parse_fraction(data["im"]))

    def to_json(self):
        return {"kind": "gaussian_rational"}


class IntegerModRing(CoeffRing):
    kind = "integer_mod"

    def __init__(self, n: int):
        if n < 2:
            raise DomainError("modulus must be at least 2")
        self.n = n

    def zero(self):
        return 0

    def from_int(self, n):
        return n % self.n

    def from_fraction(self, fr):
        fr = Fraction(fr)
        if fr.denominator == 1:
            return fr.numerator % self.n
        inv = pow(fr.denominator, -1, self.n)
        return (fr.numerator * inv) % self.n

    def add(self, u, v):
        return (u + v) % self.n

    def neg(self, u):
        return (-u) % self.n

    def mul(self, u, v):
        return (u * v) % self.n

    def value_to_json(self, u):
        return u

    def value_from_json(self, data):
        return int(data) % self.n

    def to_json(self):
        return {"kind": "integer_mod", "n": self.n}


class RadicalGaussianRing(CoeffRing):
    """Gaussian rationals extended by formal radicals ``sqrt(s)``.

    A value is a dict mapping a squarefree positive integer to a Gaussian
    rational coefficient (key 1 is the rational part).  Radicals multiply by
    ``sqrt(s)*sqrt(t) = g*sqrt(s*t/g^2)`` with ``g = gcd(s, t)``, which
    subsumes ``sqrt(c)**2 = c``.  Conjugation fixes radicals.
    """

    kind = "gaussian_radical"

    def __init__(self):
        self._base = GaussianRationalRing()

    def zero(self):
        return {}

    def from_fraction(self, fr):
        g = GaussianRational(fr, 0)
        return {1: g} if g else {}

    def from_gaussian(self, g):
        return {1: g} if g else {}

    def sqrt_int(self, n: int):
        """The value ``sqrt(n)`` for a positive integer ``n``."""
        m, s = squarefree_split(n)
        return {s: GaussianRational(m, 0)}

    def add(self, u, v):
        out = dict(u)
        for s, c in v.items():
            acc = out.get(s, self._base.zero()) + c
            if acc:
                out[s] = acc
            else:
                out.pop(s, None)
        return out

    def neg(self, u):
        return {s: -c for s, c in u.items()}

    def mul(self, u, v):
        import math

        out = {}
        for s, c in u.items():
            for t, d in v.items():
                g = math.gcd(s, t)
                key = (s // g) * (t // g)
                coeff = c * d * GaussianRational(g, 0)
                acc = out.get(key, self._base.zero()) + coeff
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return out

    def eq(self, u, v):
        return u == v

    def is_zero(self, u):
        return not u

    def conj(self, u):
        return {s: c.conj() for s, c in u.items()}

    def key(self, u):
        return tuple(sorted((s, c.re, c.im) for s, c in u.items()))

    def to_str(self, u):
        if not u:
            return "0"
        parts = []
        for s in sorted(u):
            c = u[s]
            cs = str(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            parts.append(cs if s == 1 else (f"sqrt({s})" if cs == "1" else f"{cs}*sqrt({s})"))
        return " + ".join(parts)

    def value_to_json(self, u):
        return [{"rad": s, "re": str(c.re), "im": str(c.im)} for s, c in sorted(u.items())]

    def value_from_json(self, data):
        out = {}
        for item in data:
            g = GaussianRational(_parse_fraction(item["re"]), _parse_fraction(item["im"]))
            if g:
                out[int(item["rad"])] = g
        return out

    def to_json(self):
        return {"kind": "gaussian_radical"}


def _coeff_str(base, c, lead=False):
    s = base.to_str(c)
    if any(op in s[1:] for op in "+-") or "sqrt" in s:
        return f"({s})"
    return s


@dataclass(frozen=True)
class PolyValue:
    """A polynomial in normal form: map from exponent tuples to base scalars."""

    coeffs: tuple  # sorted tuple of (exponents, scalar) pairs

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(sorted(d.items(), key=lambda kv: kv[0])))

    def as_dict(self):
        return dict(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, PolyValue) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)


@dataclass(frozen=True)
class Relation:
    """A single quadratic rewrite rule.

    ``("square", (v,))`` rewrites ``v**2 -> rhs``; ``("product", (u, v))``
    rewrites ``u*v -> rhs``.  ``rhs`` must not mention the rewritten
    variables, which makes the rewrite terminating and confluent.
    """

    form: str  # "square" | "product"
    heads: tuple
    rhs: "PolyValue"


class PolyQuotientRing(CoeffRing):
    """Commutative polynomials over a base scalar ring, modulo one relation."""

    kind = "poly_quotient"

    def __init__(self, base: CoeffRing, variables, relation: Relation = None):
        self.base = base
        self.variables = tuple(variables)
        self._var_pos = {v: i for i, v in enumerate(self.variables)}
        self.relation = relation
        if relation is not None:
            for h in relation.heads:
                if h not in self._var_pos:
                    raise DomainError(f"relation head {h!r} is not a ring variable")
                for exps, _ in relation.rhs.coeffs:
                    if exps[self._var_pos[h]]:
                        raise DomainError("relation right-hand side must not mention its head variables")
            self._rhs_powers = [self.one(), relation.rhs]

    # -- construction -----------------------------------------------------

    def zero(self):
        return PolyValue(())

    def from_fraction(self, fr):
        c = self.base.from_fraction(fr)
        if self.base.is_zero(c):
            return self.zero()
        return PolyValue(((tuple([0] * len(self.variables)), c),))

    def from_scalar(self, c):
        if self.base.is_zero(c):
            return self.zero()
        return PolyValue(((tuple([0] * len(self.variables)), c),))

    def var(self, name):
        exps = [0] * len(self.variables)
        exps[self._var_pos[name]] = 1
        return PolyValue(((tuple(exps), self.base.one()),))

    def monomial(self, exps, c):
        d = {tuple(exps): c}
        return self.normal_form_dict(d)

    # -- normal form -------------------------------------------------------

    def _rhs_power(self, k):
        while len(self._rhs_powers) <= k:
            self._rhs_powers.append(self.mul(self._rhs_powers[-1], self.relation.rhs))
        return self._rhs_powers[k]

    def _reduce_monomial(self, exps, c):
        """Rewrite one monomial; returns a dict of monomials."""
        rel = self.relation
        exps = list(exps)
        if rel.form == "square":
            i = self._var_pos[rel.heads[0]]
            k, exps[i] = divmod(exps[i], 2)
        else:
            i, j = (self._var_pos[h] for h in rel.heads)
            k = min(exps[i], exps[j])
            exps[i] -= k
            exps[j] -= k
        if k == 0:
            return {tuple(exps): c}
        out = {}
        for rexp, rc in self._rhs_power(k).coeffs:
            key = tuple(a + b for a, b in zip(exps, rexp))
            acc = self.base.add(out.get(key, self.base.zero()), self.base.mul(c, rc))
            if self.base.is_zero(acc):
                out.pop(key, None)
            else:
                out[key] = acc
        return out

    def normal_form_dict(self, d):
        if self.relation is None:
            return PolyValue.from_dict({e: c for e, c in d.items() if not self.base.is_zero(c)})
        out = {}
        for exps, c in d.items():
            if self.base.is_zero(c):
                continue
            for key, part in self._reduce_monomial(exps, c).items():
                acc = self.base.add(out.get(key, self.base.zero()), part)
                if self.base.is_zero(acc):
                    out.pop(key, None)
                else:
                    out[key] = acc
        return PolyValue.from_dict(out)

    def normal_form(self, p: PolyValue) -> PolyValue:
        return self.normal_form_dict(p.as_dict())

    # -- arithmetic ----------------------------------------------------------

    def add(self, u: PolyValue, v: PolyValue):
        out = u.as_dict()
        for exps, c in v.coeffs:
            acc = self.base.add(out.get(exps, self.base.zero()), c)
            if self.base.is_zero(acc):
                out.pop(exps, None)
            else:
                out[exps] = acc
        return PolyValue.from_dict(out)

    def neg(self, u: PolyValue):
        return PolyValue(tuple((e, self.base.neg(c)) for e, c in u.coeffs))

    def mul(self, u: PolyValue, v: PolyValue):
        out = {}
        for e1, c1 in u.coeffs:
            for e2, c2 in v.coeffs:
                key = tuple(a + b for a, b in zip(e1, e2))
                acc = self.base.add(out.get(key, self.base.zero()), self.base.mul(c1, c2))
                if self.base.is_zero(acc):
                    out.pop(key, None)
                else:
                    out[key] = acc
        return self.normal_form_dict(out)

    def is_zero(self, u: PolyValue):
        return not u.coeffs

    def conj(self, u: PolyValue):
        return PolyValue(tuple((e, self.base.conj(c)) for e, c in u.coeffs))

    def substitute_vars(self, u: PolyValue, mapping):
        """Rename variables per ``mapping`` (a permutation of variable names)."""
        perm = [self._var_pos[mapping.get(v, v)] for v in self.variables]
        out = {}
        for exps, c in u.coeffs:
            new = [0] * len(exps)
            for src, dst in enumerate(perm):
                new[dst] = exps[src]
            out[tuple(new)] = c
        return self.normal_form_dict(out)

    def key(self, u: PolyValue):
        return tuple((e, self.base.key(c)) for e, c in u.coeffs)

    def to_str(self, u: PolyValue):
        if not u.coeffs:
            return "0"
        parts = []
        for exps, c in sorted(u.coeffs, key=lambda kv: (sum(kv[0]), kv[0])):
            factors = []
            for v, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            cs = _coeff_str(self.base, c)
            if factors and cs == "1":
                parts.append("*".join(factors))
            elif factors:
                parts.append(cs + "*" + "*".join(factors))
            else:
                parts.append(cs)
        return " + ".join(parts)

    def value_to_json(self, u: PolyValue):
        return [
            {"exps": {v: e for v, e in zip(self.variables, exps) if e}, "c": self.base.value_to_json(c)}
            for exps, c in u.coeffs
        ]

    def value_from_json(self, data):
        d = {}
        for item in data:
            exps = [0] * len(self.variables)
            for v, e in item["exps"].items():
                exps[self._var_pos[v]] = int(e)
            d[tuple(exps)] = self.base.value_from_json(item["c"])
        return self.normal_form_dict(d)

    def to_json(self):
        rel = None
        if self.relation is not None:
            rel = {
                "lead": list(self.relation.heads) if len(self.relation.heads) > 1 else self.relation.heads[0],
                "rhs": self.value_to_json(self.relation.rhs),
            }
        return {
            "kind": "poly_quotient",
            "vars": list(self.variables),
            "relation": rel,
            "base": self.base.to_json(),
        }


def square_relation(ring_vars, base, head, rhs_dict):
    """Build a ``v**2 -> rhs`` relation from an exponent dict."""
    pos = {v: i for i, v in enumerate(ring_vars)}
    d = {}
    for exps, c in rhs_dict.items():
        full = [0] * len(ring_vars)
        for v, e in exps:
            full[pos[v]] = e
        d[tuple(full)] = c
    return Relation("square", (head,), PolyValue.from_dict({e: c for e, c in d.items() if not base.is_zero(c)}))


def coeff_ring_from_json(data) -> CoeffRing:
    kind = data["kind"]
    if kind == "rational":
        return RationalRing()
    if kind == "gaussian_rational":
        return GaussianRationalRing()
    if kind == "integer_mod":
        return IntegerModRing(int(data["n"]))
    if kind == "gaussian_radical":
        return RadicalGaussianRing()
    if kind == "poly_quotient":
        base = coeff_ring_from_json(data["base"])
        variables = tuple(data["vars"])
        ring = PolyQuotientRing(base, variables)
        rel = data.get("relation")
        if rel is not None:
            lead = rel["lead"]
            rhs_data = rel["rhs"]
            if isinstance(rhs_data, str):
                rhs = _parse_poly_text(ring, rhs_data)
            else:
                rhs = ring.value_from_json(rhs_data)
            if isinstance(lead, str) and "*" in lead:
                lead = lead.split("*")
            if isinstance(lead, str):
                relation = Relation("square", (lead,), rhs)
            else:
                relation = Relation("product", tuple(lead), rhs)
            ring = PolyQuotientRing(base, variables, relation)
        return ring
    raise DomainError(f"unknown coefficient ring kind {kind!r}")


def _parse_poly_text(ring: PolyQuotientRing, text: str) -> PolyValue:
    """Parse simple relation right-hand sides like ``1 - x1^2``.

    Full expression parsing lives in :mod:`superalg.expressions`; importing
    lazily avoids a module cycle.
    """
    from .expressions import parse_polynomial

    return parse_polynomial(text, ring)
