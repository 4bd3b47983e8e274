"""Finite free supermodules, graded morphisms, and idempotent splitting.

Conventions: modules are right modules; a morphism is a matrix with
columns-are-images, so ``phi(b_j) = sum_i b_i M[i][j]`` and
``phi(sum_j b_j c_j) = sum_i b_i (sum_j M[i][j] c_j)``.  A free type (p, q)
lists its p even basis vectors first, then its q odd ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ParityError, RingMismatchError, ShapeError
from .superring import SuperElement, SuperRing


@dataclass(frozen=True)
class FreeType:
    """Rank signature of a free supermodule: p even and q odd basis vectors."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ShapeError("ranks must be nonnegative")

    @property
    def size(self) -> int:
        return self.p + self.q

    @property
    def parities(self) -> tuple:
        return (0,) * self.p + (1,) * self.q

    def direct_sum(self, other: "FreeType") -> "FreeType":
        return FreeType(self.p + other.p, self.q + other.q)

    def tensor(self, other: "FreeType") -> "FreeType":
        return FreeType(self.p * other.p + self.q * other.q, self.p * other.q + self.q * other.p)

    def to_json(self):
        return {"p": self.p, "q": self.q}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), int(data["q"]))


class ModElement:
    """An element of a free supermodule: a coefficient vector over the ring."""

    __slots__ = ("ring", "ftype", "coeffs")

    def __init__(self, ring: SuperRing, ftype: FreeType, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != ftype.size:
            raise ShapeError(f"expected {ftype.size} coefficients, got {len(coeffs)}")
        self.ring = ring
        self.ftype = ftype
        self.coeffs = coeffs

    @classmethod
    def zero(cls, ring: SuperRing, ftype: FreeType):
        return cls(ring, ftype, [ring.zero()] * ftype.size)

    @classmethod
    def basis(cls, ring: SuperRing, ftype: FreeType, index: int):
        coeffs = [ring.zero()] * ftype.size
        coeffs[index] = ring.one()
        return cls(ring, ftype, coeffs)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("module elements over different rings")
        if self.ftype != other.ftype:
            raise ShapeError("module elements of different types")

    def __add__(self, other):
        self._check(other)
        return ModElement(self.ring, self.ftype, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return ModElement(self.ring, self.ftype, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return ModElement(self.ring, self.ftype, [-a for a in self.coeffs])

    def right_mul(self, a: SuperElement):
        """The right action ``x * a``."""
        return ModElement(self.ring, self.ftype, [c * a for c in self.coeffs])

    def left_mul(self, a: SuperElement):
        """The left action ``a * x`` via ``a x = (-1)**(|x||a|) x a``."""
        if a.parity() is None:
            raise ParityError("left action requires a homogeneous scalar")
        out = []
        for basis_parity, c in zip(self.ftype.parities, self.coeffs):
            acc = self.ring.zero()
            for cpar in (0, 1):
                part = c.homogeneous_part(cpar)
                term = part * a
                if a.parity() == 1 and (basis_parity + cpar) % 2 == 1:
                    term = -term
                acc = acc + term
            out.append(acc)
        return ModElement(self.ring, self.ftype, out)

    def parity(self):
        """0/1 for homogeneous elements (Notation-style (x, y) form), else None."""
        parities = set()
        for basis_parity, c in zip(self.ftype.parities, self.coeffs):
            if c.is_zero():
                continue
            cp = c.parity()
            if cp is None:
                return None
            parities.add((basis_parity + cp) % 2)
        if not parities:
            return 0
        return parities.pop() if len(parities) == 1 else None

    def homogeneous_part(self, parity: int):
        out = []
        for basis_parity, c in zip(self.ftype.parities, self.coeffs):
            out.append(c.homogeneous_part((parity + basis_parity) % 2))
        return ModElement(self.ring, self.ftype, out)

    def grade_split(self):
        return self.homogeneous_part(0), self.homogeneous_part(1)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, ModElement)
            and self.ring == other.ring
            and self.ftype == other.ftype
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ftype, tuple(c.key() for c in self.coeffs)))

    def __repr__(self):
        return "<ModElement [" + ", ".join(c.to_text() for c in self.coeffs) + "]>"


class SuperMorphism:
    """A right-linear map between free supermodules, stored as a matrix."""

    __slots__ = ("ring", "source", "target", "matrix")

    def __init__(self, ring: SuperRing, source: FreeType, target: FreeType, matrix):
        matrix = tuple(tuple(row) for row in matrix)
        if len(matrix) != target.size or any(len(row) != source.size for row in matrix):
            raise ShapeError(
                f"matrix must be {target.size}x{source.size}, got "
                f"{len(matrix)}x{len(matrix[0]) if matrix else 0}"
            )
        self.ring = ring
        self.source = source
        self.target = target
        self.matrix = matrix

    @classmethod
    def identity(cls, ring: SuperRing, ftype: FreeType):
        n = ftype.size
        return cls(
            ring, ftype, ftype,
            [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)],
        )

    @classmethod
    def zero(cls, ring: SuperRing, source: FreeType, target: FreeType):
        return cls(ring, source, target, [[ring.zero()] * source.size for _ in range(target.size)])

    @classmethod
    def scalar(cls, ring: SuperRing, ftype: FreeType, a: SuperElement):
        n = ftype.size
        return cls(
            ring, ftype, ftype,
            [[a if i == j else ring.zero() for j in range(n)] for i in range(n)],
        )

    def apply(self, x: ModElement) -> ModElement:
        if x.ftype != self.source:
            raise ShapeError("element type does not match morphism source")
        if x.ring != self.ring:
            raise RingMismatchError("element over a different ring")
        out = []
        for row in self.matrix:
            acc = self.ring.zero()
            for entry, c in zip(row, x.coeffs):
                acc = acc + entry * c
            out.append(acc)
        return ModElement(self.ring, self.target, out)

    def compose(self, other: "SuperMorphism") -> "SuperMorphism":
        """``self`` after ``other``."""
        if other.target != self.source:
            raise ShapeError("composition shape mismatch")
        if other.ring != self.ring:
            raise RingMismatchError("morphisms over different rings")
        rows = []
        for i in range(self.target.size):
            row = []
            for k in range(other.source.size):
                acc = self.ring.zero()
                for j in range(self.source.size):
                    acc = acc + self.matrix[i][j] * other.matrix[j][k]
                row.append(acc)
            rows.append(row)
        return SuperMorphism(self.ring, other.source, self.target, rows)

    def __add__(self, other):
        if (self.source, self.target) != (other.source, other.target):
            raise ShapeError("morphism addition shape mismatch")
        return SuperMorphism(
            self.ring, self.source, self.target,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.matrix, other.matrix)],
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SuperMorphism(
            self.ring, self.source, self.target,
            [[-a for a in row] for row in self.matrix],
        )

    def __eq__(self, other):
        return (
            isinstance(other, SuperMorphism)
            and self.ring == other.ring
            and (self.source, self.target) == (other.source, other.target)
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.source, self.target))

    def degree(self):
        """0 or 1 if homogeneous per the matrix parity contract, else None."""
        src = self.source.parities
        tgt = self.target.parities
        degrees = set()
        for i, row in enumerate(self.matrix):
            for j, entry in enumerate(row):
                if entry.is_zero():
                    continue
                par = entry.parity()
                if par is None:
                    return None
                degrees.add((par + tgt[i] + src[j]) % 2)
        if not degrees:
            return 0
        return degrees.pop() if len(degrees) == 1 else None

    def grade_split(self):
        """Even/odd parts: keep the parity-matching (resp. mismatching) entry component."""
        src = self.source.parities
        tgt = self.target.parities
        even_rows, odd_rows = [], []
        for i, row in enumerate(self.matrix):
            even_row, odd_row = [], []
            for j, entry in enumerate(row):
                match = (tgt[i] + src[j]) % 2
                even_row.append(entry.homogeneous_part(match))
                odd_row.append(entry.homogeneous_part((match + 1) % 2))
            even_rows.append(even_row)
            odd_rows.append(odd_row)
        return (
            SuperMorphism(self.ring, self.source, self.target, even_rows),
            SuperMorphism(self.ring, self.source, self.target, odd_rows),
        )

    def is_idempotent(self) -> bool:
        if self.source != self.target:
            raise ShapeError("idempotence requires a square matrix")
        return self.compose(self) == self

    def super_adjoint(self) -> "SuperMorphism":
        """Involuted super transpose.

        ``(M+)[i][j] = (-1)**(|j|(|i|+1)) * M[j][i]**diamond``; under the
        package's involution convention this is the adjoint for which the
        rank-one projectors of the supersphere construction are self-adjoint.
        """
        if self.source != self.target:
            raise ShapeError("adjoint requires a square matrix")
        par = self.source.parities
        n = self.source.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                entry = self.matrix[j][i].involute()
                if (par[j] * (par[i] + 1)) % 2:
                    entry = -entry
                row.append(entry)
            rows.append(row)
        return SuperMorphism(self.ring, self.source, self.target, rows)

    def to_json(self):
        return {
            "ring": self.ring.to_json(),
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "matrix": [[entry.terms_to_json() for entry in row] for row in self.matrix],
        }

    @classmethod
    def from_json(cls, data):
        ring = SuperRing.from_json(data["ring"])
        source = FreeType.from_json(data["source"])
        target = FreeType.from_json(data["target"])
        matrix = [
            [SuperElement.terms_from_json(ring, entry) for entry in row]
            for row in data["matrix"]
        ]
        return cls(ring, source, target, matrix)

    def __repr__(self):
        return f"<SuperMorphism {self.target.size}x{self.source.size}>"


def extend_basis_map(ring: SuperRing, source: FreeType, images) -> SuperMorphism:
    """The unique right-linear morphism sending basis vector k to ``images[k]``."""
    images = list(images)
    if len(images) != source.size:
        raise ShapeError(f"expected {source.size} images, got {len(images)}")
    target = images[0].ftype
    for img in images:
        if img.ftype != target:
            raise ShapeError("images must share a target type")
    matrix = [[images[j].coeffs[i] for j in range(source.size)] for i in range(target.size)]
    return SuperMorphism(ring, source, target, matrix)


def left_evaluate(phi: SuperMorphism, a: SuperElement, x: ModElement) -> ModElement:
    """``phi(a * x)`` computed through the right-module core.

    Requires ``phi`` and ``a`` homogeneous so the left-module contract
    ``phi(a x) = (-1)**(|phi||a|) a phi(x)`` is meaningful.
    """
    if phi.degree() is None:
        raise ParityError("morphism must be homogeneous")
    if a.parity() is None:
        raise ParityError("scalar must be homogeneous")
    return phi.apply(x.left_mul(a))


# -- idempotent splitting -----------------------------------------------------


@dataclass(frozen=True)
class SplitData:
    """Decomposition data for an idempotent ``g``: ``F = Im g + Ker g``."""

    image_projector: SuperMorphism  # g
    kernel_projector: SuperMorphism  # 1 - g
    iso: SuperMorphism  # F -> F + F, x -> (g(x), x - g(x))
    iso_inv: SuperMorphism  # F + F -> F, (p, h) -> p + h


def _stack_vertical(top: SuperMorphism, bottom: SuperMorphism) -> SuperMorphism:
    if top.source != bottom.source:
        raise ShapeError("stacked morphisms must share a source")
    return SuperMorphism(
        top.ring, top.source, top.target.direct_sum(bottom.target),
        list(top.matrix) + list(bottom.matrix),
    )


def _stack_horizontal(left: SuperMorphism, right: SuperMorphism) -> SuperMorphism:
    if left.target != right.target:
        raise ShapeError("stacked morphisms must share a target")
    return SuperMorphism(
        left.ring, left.source.direct_sum(right.source), left.target,
        [list(r1) + list(r2) for r1, r2 in zip(left.matrix, right.matrix)],
    )


def split_idempotent(g: SuperMorphism) -> SplitData:
    """Prop-4.6 style splitting off an idempotent."""
    if not g.is_idempotent():
        raise DomainError("morphism is not idempotent")
    ident = SuperMorphism.identity(g.ring, g.source)
    complement = ident - g
    iso = _stack_vertical(g, complement)
    iso_inv = _stack_horizontal(ident, ident)
    return SplitData(g, complement, iso, iso_inv)


def section_splitting(g: SuperMorphism, s: SuperMorphism):
    """Splitting of a surjection ``g: F -> P`` along a section ``s``.

    Returns ``(phi, phi_inv)`` with ``phi(x) = (g(x), x - s(g(x)))`` and
    ``phi_inv(p, h) = s(p) + h``; ``phi_inv  after  phi`` is verified to be the
    identity on ``F``.
    """
    if g.source != s.target or g.target != s.source:
        raise ShapeError("section shape mismatch")
    ident_p = SuperMorphism.identity(g.ring, g.target)
    if g.compose(s) != ident_p:
        raise DomainError("section contract violated: g after s is not the identity")
    ident_f = SuperMorphism.identity(g.ring, g.source)
    phi = _stack_vertical(g, ident_f - s.compose(g))
    phi_inv = _stack_horizontal(s, ident_f)
    if phi_inv.compose(phi) != ident_f:
        raise DomainError("splitting round-trip failed")  # arithmetic bug, not user error
    return phi, phi_inv


def lift_through_split_surjection(h: SuperMorphism, g: SuperMorphism, s: SuperMorphism) -> SuperMorphism:
    """A lift ``h~ = s after h`` through the split surjection ``g``; ``g after h~ = h``."""
    if g.compose(s) != SuperMorphism.identity(g.ring, g.target):
        raise DomainError("section contract violated: g after s is not the identity")
    lifted = s.compose(h)
    if g.compose(lifted) != h:
        raise DomainError("lift verification failed")
    return lifted


# -- direct sums and tensor products ---------------------------------------------


def direct_sum_elements(x: ModElement, y: ModElement) -> ModElement:
    """Block element of type ``x.ftype + y.ftype``; basis order is x-block then y-block."""
    if x.ring != y.ring:
        raise RingMismatchError("elements over different rings")
    return ModElement(x.ring, x.ftype.direct_sum(y.ftype), x.coeffs + y.coeffs)


def direct_sum_morphisms(phi: SuperMorphism, psi: SuperMorphism) -> SuperMorphism:
    if phi.ring != psi.ring:
        raise RingMismatchError("morphisms over different rings")
    ring = phi.ring
    source = phi.source.direct_sum(psi.source)
    target = phi.target.direct_sum(psi.target)
    rows = []
    for i in range(target.size):
        row = []
        for j in range(source.size):
            if i < phi.target.size and j < phi.source.size:
                row.append(phi.matrix[i][j])
            elif i >= phi.target.size and j >= phi.source.size:
                row.append(psi.matrix[i - phi.target.size][j - phi.source.size])
            else:
                row.append(ring.zero())
        rows.append(row)
    return SuperMorphism(ring, source, target, rows)


def tensor_basis(t1: FreeType, t2: FreeType):
    """Ordered basis of the tensor product: even index pairs first, then odd."""
    p1, p2 = t1.parities, t2.parities
    pairs = [(i, j) for i in range(t1.size) for j in range(t2.size)]
    even = [ij for ij in pairs if (p1[ij[0]] + p2[ij[1]]) % 2 == 0]
    odd = [ij for ij in pairs if (p1[ij[0]] + p2[ij[1]]) % 2 == 1]
    return even + odd


def tensor_elements(x: ModElement, y: ModElement) -> ModElement:
    """``x (x) y`` with the Koszul sign for moving coefficients past basis vectors."""
    if x.ring != y.ring:
        raise RingMismatchError("elements over different rings")
    ring = x.ring
    ftype = x.ftype.tensor(y.ftype)
    pairs = tensor_basis(x.ftype, y.ftype)
    p2 = y.ftype.parities
    coeffs = []
    for i, j in pairs:
        acc = ring.zero()
        for cpar in (0, 1):
            part = x.coeffs[i].homogeneous_part(cpar)
            term = part * y.coeffs[j]
            if cpar == 1 and p2[j] == 1:
                term = -term
            acc = acc + term
        coeffs.append(acc)
    return ModElement(ring, ftype, coeffs)


def tensor_morphisms(phi: SuperMorphism, psi: SuperMorphism) -> SuperMorphism:
    """``phi (x) psi`` acting by ``(phi(x)psi)(x(x)y) = (-1)**(|psi||x|) phi(x)(x)psi(y)``."""
    if phi.ring != psi.ring:
        raise RingMismatchError("morphisms over different rings")
    ring = phi.ring
    source = phi.source.tensor(psi.source)
    target = phi.target.tensor(psi.target)
    src_pairs = tensor_basis(phi.source, psi.source)
    tgt_pairs = tensor_basis(phi.target, psi.target)
    src1 = phi.source.parities
    tgt2 = psi.target.parities
    psi_parts = psi.grade_split()
    rows = [[ring.zero() for _ in src_pairs] for _ in tgt_pairs]
    for col, (i, j) in enumerate(src_pairs):
        for row, (k, l) in enumerate(tgt_pairs):
            acc = ring.zero()
            for d in (0, 1):
                n_entry = psi_parts[d].matrix[l][j]
                if n_entry.is_zero():
                    continue
                for mpar in (0, 1):
                    m_entry = phi.matrix[k][i].homogeneous_part(mpar)
                    if m_entry.is_zero():
                        continue
                    term = m_entry * n_entry
                    sign = (d * src1[i] + mpar * tgt2[l]) % 2
                    if sign:
                        term = -term
                    acc = acc + term
            rows[row][col] = acc
    return SuperMorphism(ring, source, target, rows)


# -- endomorphism modules ----------------------------------------------------------


def hom_basis_units(ftype: FreeType):
    """Matrix units ordered as a free type: even-parity units first, then odd."""
    par = ftype.parities
    units = [(i, j) for i in range(ftype.size) for j in range(ftype.size)]
    even = [ij for ij in units if (par[ij[0]] + par[ij[1]]) % 2 == 0]
    odd = [ij for ij in units if (par[ij[0]] + par[ij[1]]) % 2 == 1]
    return even + odd


def end_projector(e: SuperMorphism):
    """The conjugation map ``phi -> e after phi after e`` on Hom(F, F).

    Returns ``(E, units)``: ``E`` is a morphism on the free supermodule whose
    basis is the list ``units`` of matrix-unit positions; parity of unit
    ``(i, j)`` is ``|b_i| + |b_j|``.
    """
    if not e.is_idempotent():
        raise DomainError("morphism is not idempotent")
    ftype = e.source
    units = hom_basis_units(ftype)
    hom_type = FreeType(ftype.p * ftype.p + ftype.q * ftype.q, 2 * ftype.p * ftype.q)
    unit_pos = {u: n for n, u in enumerate(units)}
    ring = e.ring
    rows = [[ring.zero() for _ in units] for _ in units]
    for col, (k, l) in enumerate(units):
        # e after unit(k, l) after e has matrix entries M[i][k] * M[l][j].
        for (i, j), row in unit_pos.items():
            rows[row][col] = e.matrix[i][k] * e.matrix[l][j]
    return SuperMorphism(ring, hom_type, hom_type, rows), units
