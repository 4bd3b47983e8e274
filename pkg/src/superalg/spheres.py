"""Flagship projector examples: the sphere tangent projector and the mod-6 idempotent.

The sphere projector lives over the quotient ring
``R[x0..xn] / (x0^2 + ... + xn^2 - 1)`` and sends basis vector ``s_i`` to
``sum_j xi xj s_j``.  Its image is generated by ``alpha = sum_j xj s_j`` and
its kernel is the stably free tangent module.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .errors import DomainError
from .reports import SuiteReport
from .scalars import CoeffRing, IntegerModRing, PolyQuotientRing, RationalRing, Relation
from .supermodule import FreeType, ModElement, SuperMorphism, split_idempotent
from .superring import SuperElement, SuperRing


def sphere_coeff_ring(n: int, base: CoeffRing = None, prefix: str = "x") -> PolyQuotientRing:
    """``base[x0..xn]`` with the relation ``x0^2 = 1 - x1^2 - ... - xn^2``."""
    base = base or RationalRing()
    variables = tuple(f"{prefix}{i}" for i in range(n + 1))
    plain = PolyQuotientRing(base, variables)
    rhs = plain.one()
    for v in variables[1:]:
        rhs = plain.sub(rhs, plain.mul(plain.var(v), plain.var(v)))
    return PolyQuotientRing(base, variables, Relation("square", (variables[0],), rhs))


def sphere_ring(n: int, base: CoeffRing = None, odd_names=()) -> SuperRing:
    return SuperRing(sphere_coeff_ring(n, base), tuple(odd_names))


@dataclass(frozen=True)
class SphereProjectorBundle:
    """The tangent projector over the sphere quotient ring.

    Basis vectors s_0..s_n are all chosen even (type (n+1, 0)); the paper-free
    analog of the classical tangent bundle construction.
    """

    n: int
    ring: SuperRing
    g: SuperMorphism
    alpha: ModElement


def make_sphere_projector(n: int, base: CoeffRing = None, odd_names=()) -> SphereProjectorBundle:
    """Build the projector ``g(s_i) = sum_j xi xj s_j`` and verify its invariants."""
    if n < 1:
        raise DomainError("sphere dimension index must be at least 1")
    ring = sphere_ring(n, base, odd_names)
    xs = [ring.even_gen(f"x{i}") for i in range(n + 1)]
    ftype = FreeType(n + 1, 0)
    matrix = [[xs[i] * xs[j] for j in range(n + 1)] for i in range(n + 1)]
    g = SuperMorphism(ring, ftype, ftype, matrix)
    alpha = ModElement(ring, ftype, xs)
    bundle = SphereProjectorBundle(n, ring, g, alpha)
    # Construction-time invariants; a failure means an arithmetic bug.
    if not g.is_idempotent():
        raise DomainError("sphere projector failed idempotence")
    if g.apply(alpha) != alpha:
        raise DomainError("sphere projector does not fix alpha")
    for i in range(n + 1):
        if g.apply(ModElement.basis(ring, ftype, i)) != alpha.right_mul(xs[i]):
            raise DomainError("sphere projector columns are not multiples of alpha")
    return bundle


def stably_free_certificate(bundle: SphereProjectorBundle) -> SuiteReport:
    """Certify that ``Ker g`` is stably free: ``Ker g + (rank-1 free) = rank-(n+1) free``."""
    start = time.perf_counter()
    ring, g, alpha, n = bundle.ring, bundle.g, bundle.alpha, bundle.n
    report = SuiteReport(
        "sphere-projector",
        params={"n": n, "basis_parities": "all even (type (n+1,0))"},
    )
    report.add("idempotent", g.is_idempotent(), "g*g = g")

    xs = [ring.even_gen(f"x{i}") for i in range(n + 1)]
    multipliers_ok = all(
        g.apply(ModElement.basis(ring, g.source, i)) == alpha.right_mul(xs[i])
        for i in range(n + 1)
    )
    report.add(
        "image-generated-by-alpha",
        multipliers_ok,
        "multipliers: " + ", ".join(x.to_text() for x in xs),
    )
    report.add("fixes-alpha", g.apply(alpha) == alpha, "g(alpha) = alpha")

    split = split_idempotent(g)
    ident = SuperMorphism.identity(ring, g.source)
    round_trip = split.iso_inv.compose(split.iso) == ident
    report.add("splitting-round-trip", round_trip, "iso_inv after iso = id")

    trace = ring.zero()
    for i in range(n + 1):
        trace = trace + g.matrix[i][i]
    report.add("trace-is-one", trace == ring.one(), f"sum of xi^2 = {trace.to_text()}")

    if n == 1:
        kernel_gen = ModElement(ring, g.source, [xs[1], -xs[0]])
        report.add(
            "kernel-generator-n1",
            g.apply(kernel_gen).is_zero(),
            "g(x1*s0 - x0*s1) = 0",
        )
    report.add(
        "stably-free",
        report.passed,
        "Ker g + free(1) = free(%d); non-freeness for general n: cited, not machine-checked" % (n + 1),
    )
    report.wall_time = time.perf_counter() - start
    return report


def z6_ring() -> SuperRing:
    """``Z6[xi1, xi2]`` with two odd generators."""
    return SuperRing(IntegerModRing(6), ("xi1", "xi2"))


def _all_z6_elements(ring: SuperRing):
    masks = [0b00, 0b01, 0b10, 0b11]
    for values in itertools.product(range(6), repeat=4):
        yield ring.element({m: v for m, v in zip(masks, values)})


def z6_example() -> SuiteReport:
    """Exhaustive check of the multiplication-by-3 idempotent on Z6[xi1, xi2]."""
    start = time.perf_counter()
    ring = z6_ring()
    report = SuiteReport("z6", params={"ring": "Z6[xi1,xi2]"})
    three = ring.from_fraction(3)
    four = ring.one() - three  # 1 - 3 = 4 mod 6

    report.add("idempotent", (three * three) == three, "3*3 = 3 in Z6")
    report.add("orthogonal", (three * four).is_zero(), "3*(1-3) = 0 in Z6")

    image_e = set()
    image_c = set()
    decomposition_ok = True
    count = 0
    for x in _all_z6_elements(ring):
        count += 1
        ex = three * x
        cx = four * x
        image_e.add(ex.key())
        image_c.add(cx.key())
        if ex + cx != x:
            decomposition_ok = False
    report.add("element-count", count == 1296, f"enumerated {count} ring elements")
    report.add("image-cardinality", len(image_e) == 16, f"|Im e| = {len(image_e)}")
    report.add("complement-cardinality", len(image_c) == 81, f"|Im (1-e)| = {len(image_c)}")
    overlap = image_e & image_c
    report.add(
        "trivial-intersection",
        overlap == {ring.zero().key()},
        f"|Im e & Im(1-e)| = {len(overlap)}",
    )
    report.add("decomposition", decomposition_ok, "x = e(x) + (1-e)(x) for all 1296 elements")
    report.wall_time = time.perf_counter() - start
    return report
