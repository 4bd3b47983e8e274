"""Super commutative ring values.

A :class:`SuperRing` pairs a commutative coefficient ring (see
:mod:`superalg.scalars`) with a list of anticommuting odd generators and an
optional graded involution.  Its elements are finite sums of
``coefficient * odd-monomial`` terms in normal form, stored as a map from
odd-generator bitmasks to coefficient values.

Even polynomial generators (when the coefficient ring is a quotient ring)
always have grade 0; the parity of a term is the parity of its odd monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import multiindex as mi
from .errors import CapacityError, DomainError, RingMismatchError
from .scalars import CoeffRing, PolyQuotientRing, coeff_ring_from_json


@dataclass(frozen=True)
class Involution:
    """Generator pairing for a graded involution.

    ``even_map`` permutes even polynomial variables; ``odd_map`` sends each
    odd generator name to ``(partner, sign)``.  The sign convention
    ``(x**diamond)**diamond == (-1)**|x| * x`` is realized by giving one
    direction of each odd pair the sign -1.
    """

    even_map: tuple = ()  # tuple of (name, name) pairs, both directions listed
    odd_map: tuple = ()  # tuple of (name, partner, sign)

    @classmethod
    def from_pairs(cls, even_pairs=(), odd_pairs=()):
        even = []
        for u, v in even_pairs:
            even.append((u, v))
            if u != v:
                even.append((v, u))
        odd = []
        for u, v in odd_pairs:
            odd.append((u, v, 1))
            odd.append((v, u, -1))
        return cls(tuple(even), tuple(odd))

    def even_dict(self):
        return dict(self.even_map)

    def odd_dict(self):
        return {u: (v, s) for u, v, s in self.odd_map}

    def to_json(self):
        seen = set()
        even = []
        for u, v in self.even_map:
            if (v, u) not in seen:
                even.append([u, v])
                seen.add((u, v))
        odd = [[u, v] for u, v, s in self.odd_map if s == 1]
        return {"even_pairs": even, "odd_pairs": odd}

    @classmethod
    def from_json(cls, data):
        return cls.from_pairs(
            [tuple(p) for p in data.get("even_pairs", [])],
            [tuple(p) for p in data.get("odd_pairs", [])],
        )


class SuperRing:
    """A super commutative ring: coefficient ring plus odd generators."""

    def __init__(self, coeff: CoeffRing, odd_names=(), involution: Involution = None):
        odd_names = tuple(odd_names)
        if len(odd_names) > mi.MAX_GENERATORS:
            raise CapacityError(f"at most {mi.MAX_GENERATORS} odd generators supported")
        if len(set(odd_names)) != len(odd_names):
            raise DomainError("odd generator names must be distinct")
        self.coeff = coeff
        self.odd_names = odd_names
        self._odd_pos = {name: i for i, name in enumerate(odd_names)}
        self.involution = involution
        if involution is not None:
            for u, v, _ in involution.odd_map:
                if u not in self._odd_pos or v not in self._odd_pos:
                    raise DomainError(f"involution pairs unknown odd generator {u!r}/{v!r}")

    # -- construction ------------------------------------------------------

    def element(self, terms) -> "SuperElement":
        clean = {b: c for b, c in terms.items() if not self.coeff.is_zero(c)}
        return SuperElement(self, clean)

    def zero(self) -> "SuperElement":
        return SuperElement(self, {})

    def one(self) -> "SuperElement":
        return self.from_fraction(1)

    def from_fraction(self, fr) -> "SuperElement":
        return self.element({0: self.coeff.from_fraction(Fraction(fr))})

    def from_coeff(self, value) -> "SuperElement":
        return self.element({0: value})

    def odd_gen(self, name) -> "SuperElement":
        if name not in self._odd_pos:
            raise DomainError(f"unknown odd generator {name!r}")
        return self.element({1 << self._odd_pos[name]: self.coeff.one()})

    def odd_gen_at(self, index: int) -> "SuperElement":
        """Odd generator by 1-based position."""
        return self.element({1 << (index - 1): self.coeff.one()})

    def even_gen(self, name) -> "SuperElement":
        if not isinstance(self.coeff, PolyQuotientRing):
            raise DomainError("ring has no even polynomial generators")
        return self.element({0: self.coeff.var(name)})

    def generator(self, name) -> "SuperElement":
        if name in self._odd_pos:
            return self.odd_gen(name)
        if isinstance(self.coeff, PolyQuotientRing) and name in self.coeff.variables:
            return self.even_gen(name)
        raise DomainError(f"unknown generator {name!r}")

    def generator_names(self):
        evens = self.coeff.variables if isinstance(self.coeff, PolyQuotientRing) else ()
        return tuple(evens) + self.odd_names

    @property
    def odd_count(self):
        return len(self.odd_names)

    # -- involution plumbing -------------------------------------------------

    def coeff_involute(self, value):
        value = self.coeff.conj(value)
        if self.involution is not None and isinstance(self.coeff, PolyQuotientRing):
            even = self.involution.even_dict()
            if even:
                value = self.coeff.substitute_vars(value, even)
        return value

    # -- serialization ------------------------------------------------------

    def to_json(self):
        return {
            "coeffs": self.coeff.to_json(),
            "odd_generators": list(self.odd_names),
            "involution": self.involution.to_json() if self.involution else None,
        }

    @classmethod
    def from_json(cls, data):
        coeff = coeff_ring_from_json(data["coeffs"])
        inv = data.get("involution")
        return cls(
            coeff,
            tuple(data.get("odd_generators", ())),
            Involution.from_json(inv) if inv else None,
        )

    def __eq__(self, other):
        return (
            isinstance(other, SuperRing)
            and self.coeff == other.coeff
            and self.odd_names == other.odd_names
            and self.involution == other.involution
        )

    def __hash__(self):
        return hash((self.coeff, self.odd_names))

    def __repr__(self):
        return f"SuperRing({self.coeff.to_json()}, odd={self.odd_names})"


def grassmann_ring(L: int, coeff: CoeffRing = None, prefix: str = "b") -> SuperRing:
    """The Grassmann algebra on ``L`` odd generators over ``coeff``."""
    from .scalars import RationalRing

    return SuperRing(coeff or RationalRing(), tuple(f"{prefix}{i}" for i in range(1, L + 1)))


class SuperElement:
    """A finite sum of ``coefficient * odd-monomial`` terms in normal form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: SuperRing, terms):
        self.ring = ring
        self.terms = terms

    # -- ring plumbing --------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, SuperElement):
            raise TypeError(f"cannot combine SuperElement with {type(other).__name__}")
        if self.ring != other.ring:
            raise RingMismatchError("operands belong to different rings")

    def __add__(self, other):
        self._check(other)
        coeff = self.ring.coeff
        out = dict(self.terms)
        for b, c in other.terms.items():
            acc = coeff.add(out.get(b, coeff.zero()), c)
            if coeff.is_zero(acc):
                out.pop(b, None)
            else:
                out[b] = acc
        return SuperElement(self.ring, out)

    def __neg__(self):
        coeff = self.ring.coeff
        return SuperElement(self.ring, {b: coeff.neg(c) for b, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        self._check(other)
        coeff = self.ring.coeff
        out = {}
        for b1, c1 in self.terms.items():
            for b2, c2 in other.terms.items():
                merged = mi.merge_bits(b1, b2)
                if merged is None:
                    continue
                bits, sign = merged
                c = coeff.mul(c1, c2)
                if sign < 0:
                    c = coeff.neg(c)
                acc = coeff.add(out.get(bits, coeff.zero()), c)
                if coeff.is_zero(acc):
                    out.pop(bits, None)
                else:
                    out[bits] = acc
        return SuperElement(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        return NotImplemented

    def scale(self, fr: Fraction):
        return self * self.ring.from_fraction(fr)

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers are not defined")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, SuperElement)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(self.key())

    def key(self):
        """Hashable canonical form (odd bitmask, coefficient key) pairs."""
        coeff = self.ring.coeff
        return tuple(sorted((b, coeff.key(c)) for b, c in self.terms.items()))

    def is_zero(self):
        return not self.terms

    # -- grading ---------------------------------------------------------------

    def parity(self):
        """0 or 1 for homogeneous elements, ``None`` for mixed ones."""
        parities = {b.bit_count() & 1 for b in self.terms}
        if not parities:
            return 0
        if len(parities) == 1:
            return parities.pop()
        return None

    def homogeneous_part(self, parity: int):
        return SuperElement(
            self.ring, {b: c for b, c in self.terms.items() if (b.bit_count() & 1) == parity}
        )

    def grade_split(self):
        return self.homogeneous_part(0), self.homogeneous_part(1)

    # -- body and soul -----------------------------------------------------------

    def _require_pure_grassmann(self):
        if isinstance(self.ring.coeff, PolyQuotientRing) and self.ring.coeff.variables:
            raise DomainError("body/soul are defined only for pure Grassmann rings")

    def body(self):
        """The coefficient at the empty odd monomial (pure Grassmann rings only)."""
        self._require_pure_grassmann()
        return self.terms.get(0, self.ring.coeff.zero())

    def soul(self):
        self._require_pure_grassmann()
        return SuperElement(self.ring, {b: c for b, c in self.terms.items() if b})

    def is_nilpotent(self):
        return self.ring.coeff.is_zero(self.body())

    # -- involution -------------------------------------------------------------

    def involute(self):
        """The graded involution; requires an involution table on the ring.

        Convention: ``(xy)** = (-1)**(|x||y|) y** x**`` and
        ``(x**)** = (-1)**|x| x``.
        """
        inv = self.ring.involution
        if inv is None:
            raise DomainError("ring has no involution table")
        odd_map = inv.odd_dict()
        coeff = self.ring.coeff
        names = self.ring.odd_names
        pos = self.ring._odd_pos
        out = {}
        for bits, c in self.terms.items():
            c = self.ring.coeff_involute(c)
            k = bits.bit_count()
            sign = -1 if (k * (k - 1) // 2) & 1 else 1
            # Reverse the factors, map each through the table, re-sort.
            mapped = []
            for i in reversed(mi.indices_from_bits(bits)):
                name = names[i - 1]
                partner, s = odd_map.get(name, (name, 1))
                sign *= s
                mapped.append(pos[partner])
            # Insertion-count the inversions of the mapped position sequence.
            inversions = 0
            for a in range(len(mapped)):
                for b in range(a + 1, len(mapped)):
                    if mapped[a] > mapped[b]:
                        inversions += 1
            if inversions & 1:
                sign = -sign
            new_bits = 0
            for p in mapped:
                if new_bits & (1 << p):
                    raise DomainError("involution table is not a bijection on odd generators")
                new_bits |= 1 << p
            if sign < 0:
                c = coeff.neg(c)
            acc = coeff.add(out.get(new_bits, coeff.zero()), c)
            if coeff.is_zero(acc):
                out.pop(new_bits, None)
            else:
                out[new_bits] = acc
        return SuperElement(self.ring, out)

    # -- printing and serialization ----------------------------------------------

    def to_text(self):
        """Canonical, sorted text form suitable for diffing."""
        if not self.terms:
            return "0"
        coeff = self.ring.coeff
        names = self.ring.odd_names
        parts = []
        for bits in sorted(self.terms, key=mi.sort_key):
            c = self.terms[bits]
            cs = coeff.to_str(c)
            odd = "*".join(names[i - 1] for i in mi.indices_from_bits(bits))
            if not odd:
                parts.append(cs)
            else:
                if " + " in cs or (len(cs) > 1 and ("+" in cs[1:] or "-" in cs[1:])):
                    cs = f"({cs})"
                parts.append(odd if cs == "1" else f"{cs}*{odd}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<SuperElement {self.to_text()}>"

    def terms_to_json(self):
        coeff = self.ring.coeff
        out = []
        for bits in sorted(self.terms, key=mi.sort_key):
            value = self.terms[bits]
            odd = list(mi.indices_from_bits(bits))
            if isinstance(coeff, PolyQuotientRing):
                for exps, c in value.coeffs:
                    even = {v: e for v, e in zip(coeff.variables, exps) if e}
                    out.append({"odd": odd, "even": even, "coeff": coeff.base.value_to_json(c)})
            else:
                out.append({"odd": odd, "even": {}, "coeff": coeff.value_to_json(value)})
        return out

    def to_json(self):
        return {"ring": self.ring.to_json(), "terms": self.terms_to_json()}

    @classmethod
    def terms_from_json(cls, ring: SuperRing, data):
        coeff = ring.coeff
        result = ring.zero()
        for item in data:
            bits = mi.bits_from_indices(item.get("odd", ())) if item.get("odd") else 0
            if isinstance(coeff, PolyQuotientRing):
                value = coeff.monomial(
                    [item.get("even", {}).get(v, 0) for v in coeff.variables],
                    coeff.base.value_from_json(item["coeff"]),
                )
            else:
                if item.get("even"):
                    raise DomainError("ring has no even polynomial generators")
                value = coeff.value_from_json(item["coeff"])
            result = result + SuperElement(ring, {bits: value} if not coeff.is_zero(value) else {})
        return result

    @classmethod
    def from_json(cls, data):
        ring = SuperRing.from_json(data["ring"])
        return cls.terms_from_json(ring, data["terms"])
