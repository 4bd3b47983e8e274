"""Multi-index bookkeeping for anticommuting monomials.

A multi-index is a strictly increasing tuple of positive integers labelling
a product of odd generators.  It is stored as a bitmask (bit ``i - 1`` set
means index ``i`` is present), which caps the generator count at 64.  The
empty index (bitmask 0) labels the unit monomial.

The sign of a product of two monomials is ``(-1)**inversions``, where
``inversions`` counts the transpositions needed to interleave the two sorted
index lists.  The two-generator swap rule is the special case of one
inversion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError

MAX_GENERATORS = 64


def bits_from_indices(indices) -> int:
    """Pack a strictly increasing index tuple into a bitmask."""
    bits = 0
    prev = 0
    for i in indices:
        if i <= prev:
            raise ValueError(f"indices must be strictly increasing, got {tuple(indices)}")
        if i > MAX_GENERATORS:
            raise CapacityError(f"index {i} exceeds the {MAX_GENERATORS}-generator capacity")
        bits |= 1 << (i - 1)
        prev = i
    return bits


def indices_from_bits(bits: int) -> tuple:
    """Unpack a bitmask into the strictly increasing index tuple."""
    out = []
    i = 1
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


def merge_bits(mu: int, nu: int):
    """Multiply the monomials labelled ``mu`` and ``nu``.

    Returns ``(union, sign)``, or ``None`` when the monomials share an index
    (a squared generator annihilates the product).
    """
    if mu & nu:
        return None
    # Count pairs (i in mu, j in nu) with i > j: each is one inversion when
    # the concatenation mu ++ nu is sorted.
    inversions = 0
    a = mu >> 1
    while a:
        inversions += (a & nu).bit_count()
        a >>= 1
    return mu | nu, -1 if inversions & 1 else 1


def sort_key(bits: int):
    """Canonical ordering: by length, then lexicographically by indices."""
    return (bits.bit_count(), indices_from_bits(bits))


@dataclass(frozen=True)
class MultiIndex:
    """A strictly increasing index tuple, bitmask-backed."""

    bits: int = 0

    @classmethod
    def from_indices(cls, indices) -> "MultiIndex":
        return cls(bits_from_indices(indices))

    @property
    def indices(self) -> tuple:
        return indices_from_bits(self.bits)

    @property
    def length(self) -> int:
        return self.bits.bit_count()

    @property
    def parity(self) -> int:
        return self.length & 1

    def merge(self, other: "MultiIndex"):
        """Product with ``other``: ``(MultiIndex, sign)`` or ``None`` if annihilated."""
        merged = merge_bits(self.bits, other.bits)
        if merged is None:
            return None
        bits, sign = merged
        return MultiIndex(bits), sign

    def to_text(self) -> str:
        """Text form ``b[1]b[3]``; the empty index prints as ``1``."""
        if not self.bits:
            return "1"
        return "".join(f"b[{i}]" for i in self.indices)

    def to_json(self) -> list:
        return list(self.indices)

    @classmethod
    def from_json(cls, data) -> "MultiIndex":
        return cls.from_indices(data)

    def __lt__(self, other: "MultiIndex") -> bool:
        return sort_key(self.bits) < sort_key(other.bits)


def enumerate_indices(L: int):
    """All ``2**L`` multi-indices with entries at most ``L``, canonically ordered."""
    if L < 0:
        raise ValueError("generator count must be nonnegative")
    if L > MAX_GENERATORS:
        raise CapacityError(f"generator count {L} exceeds {MAX_GENERATORS}")
    masks = sorted(range(1 << L), key=sort_key)
    return [MultiIndex(m) for m in masks]
