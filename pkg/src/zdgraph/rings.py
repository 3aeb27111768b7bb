"""Finite reduced commutative rings in coordinate form.

Every finite reduced commutative ring treated here is a product of prime
fields F_q1 x ... x F_qk.  Elements are coordinate tuples, ideals are
determined by the set of coordinates on which they are allowed to be
nonzero, and all graph and topology work downstream runs on those
support sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    NotSquarefree,
    RingConstructionError,
    TooManyElements,
    TooManyFactors,
)

DEFAULT_MAX_FACTORS = 20
DEFAULT_ELEMENT_CAP = 10**6


# ---------------------------------------------------------------------------
# support masks
#
# Supports are frozensets of 0-based coordinate indices in the public API and
# bitmask ints internally.  Rendering is 1-based to match the usual I_{1,3}
# notation.


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def indices_of(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def iter_bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def render_support(support: Iterable[int]) -> str:
    inside = ",".join(str(i + 1) for i in sorted(support))
    return "{" + inside + "}"


# ---------------------------------------------------------------------------
# ring specifications


@dataclass(frozen=True)
class SquarefreeModulus:
    """Z_n for squarefree n; factors are listed in ascending order."""

    n: int


@dataclass(frozen=True)
class PrimeFactors:
    """An explicit product of prime fields, in the given coordinate order."""

    primes: tuple[int, ...]

    def __init__(self, primes: Iterable[int]):
        object.__setattr__(self, "primes", tuple(primes))


@dataclass(frozen=True)
class TableRing:
    """A ring given by addition and multiplication tables over indices 0..size-1."""

    size: int
    one: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]


RingSpec = SquarefreeModulus | PrimeFactors | TableRing


# ---------------------------------------------------------------------------
# elements and ideals


@dataclass(frozen=True)
class Element:
    """A ring element as a coordinate tuple, with an optional original label.

    The label is the residue for Z_n rings or the table index for table
    rings; it only affects rendering.
    """

    coords: tuple[int, ...]
    label: int | None = field(default=None, compare=False)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coords) if c != 0)

    @property
    def support_mask(self) -> int:
        return mask_of(i for i, c in enumerate(self.coords) if c != 0)

    def __str__(self) -> str:
        if self.label is not None:
            return str(self.label)
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Ideal:
    """An ideal of a product of fields: all elements supported inside `support`."""

    support: frozenset[int]

    @property
    def mask(self) -> int:
        return mask_of(self.support)

    def render(self, ring: "Ring | None" = None) -> str:
        if ring is not None and ring.modulus is not None:
            gen = 1
            for i in range(ring.k):
                if i not in self.support:
                    gen *= ring.qs[i]
            return f"({gen % ring.modulus})"
        return "I" + render_support(self.support)

    def __str__(self) -> str:
        return self.render()


class IdealAlgebra(NamedTuple):
    product: Ideal
    sum: Ideal
    left_in_right: bool
    equal: bool


# ---------------------------------------------------------------------------
# the ring


@dataclass(frozen=True)
class Ring:
    """A product of prime fields F_q1 x ... x F_qk.

    `modulus` is set when the ring came from a squarefree Z_n, in which case
    elements round-trip to residues by CRT.  `table_iso` maps table indices
    to coordinate tuples when the ring came from tables.
    """

    qs: tuple[int, ...]
    modulus: int | None = None
    table_iso: tuple[tuple[int, ...], ...] | None = None
    _crt_basis: tuple[int, ...] = field(default=(), repr=False, compare=False)

    @property
    def k(self) -> int:
        return len(self.qs)

    @property
    def size(self) -> int:
        return math.prod(self.qs)

    @property
    def full_mask(self) -> int:
        return (1 << self.k) - 1

    @property
    def is_field(self) -> bool:
        return self.k == 1

    def describe(self) -> dict:
        """Canonical JSON-able descriptor; identical for isomorphic inputs."""
        return {"kind": "product-of-prime-fields", "factors": list(self.qs)}

    # -- element constructors ------------------------------------------------

    def element(self, coords: Iterable[int]) -> Element:
        coords = tuple(c % q for c, q in zip(tuple(coords), self.qs, strict=True))
        return Element(coords, self._label_for(coords))

    def zero(self) -> Element:
        return self.element((0,) * self.k)

    def one(self) -> Element:
        return self.element((1,) * self.k)

    def two(self) -> Element:
        return self.element((2,) * self.k)

    def idempotent(self, i: int) -> Element:
        """e_i: the element with 1 in coordinate i and 0 elsewhere."""
        coords = tuple(1 if j == i else 0 for j in range(self.k))
        return self.element(coords)

    def from_residue(self, x: int) -> Element:
        if self.modulus is None:
            raise ValueError("ring was not built from a modulus")
        x %= self.modulus
        return self.element(tuple(x % q for q in self.qs))

    def from_table_index(self, idx: int) -> Element:
        if self.table_iso is None:
            raise ValueError("ring was not built from tables")
        coords = self.table_iso[idx]
        return Element(coords, idx)

    def _label_for(self, coords: tuple[int, ...]) -> int | None:
        if self.modulus is None:
            return None
        basis = self._crt_basis
        return sum(c * b for c, b in zip(coords, basis)) % self.modulus

    # -- arithmetic ------------------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        return self.element(x + y for x, y in zip(a.coords, b.coords))

    def mul(self, a: Element, b: Element) -> Element:
        return self.element(x * y for x, y in zip(a.coords, b.coords))

    def neg(self, a: Element) -> Element:
        return self.element(-x for x in a.coords)

    def is_zero_divisor(self, a: Element) -> bool:
        """Zero divisors include 0: everything with a nonzero annihilator."""
        return a.support_mask != self.full_mask

    def is_unit(self, a: Element) -> bool:
        return a.support_mask == self.full_mask

    # -- enumeration -----------------------------------------------------------

    def elements(self, cap: int = DEFAULT_ELEMENT_CAP) -> Iterator[Element]:
        if self.size > cap:
            raise TooManyElements(self.size, cap)
        coords = [0] * self.k
        while True:
            yield self.element(tuple(coords))
            i = self.k - 1
            while i >= 0:
                coords[i] += 1
                if coords[i] < self.qs[i]:
                    break
                coords[i] = 0
                i -= 1
            if i < 0:
                return

    def elements_with_support(self, support_mask: int) -> Iterator[Element]:
        """All elements whose support is exactly the given mask, in lex order."""
        idx = list(iter_bits(support_mask))
        vals = [1] * len(idx)
        while True:
            coords = [0] * self.k
            for j, i in enumerate(idx):
                coords[i] = vals[j]
            yield self.element(tuple(coords))
            j = len(idx) - 1
            while j >= 0:
                vals[j] += 1
                if vals[j] < self.qs[idx[j]]:
                    break
                vals[j] = 1
                j -= 1
            if j < 0:
                return

    def class_size(self, support_mask: int, distinct_elements: bool = True) -> int:
        """Number of elements with the given exact support."""
        return math.prod(self.qs[i] - 1 for i in iter_bits(support_mask))


# ---------------------------------------------------------------------------
# construction


def factor_squarefree(n: int) -> list[int]:
    """Trial-division factorization, insisting on squarefreeness."""
    if n < 2:
        raise RingConstructionError(f"modulus must be at least 2, got {n}")
    if n > 10**9:
        raise RingConstructionError(f"modulus {n} is above the 10^9 factorization bound")
    primes = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                raise NotSquarefree(n, d)
            primes.append(d)
        else:
            d += 1 if d == 2 else 2
    if m > 1:
        primes.append(m)
    return primes


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def _crt_basis(qs: tuple[int, ...], n: int) -> tuple[int, ...]:
    # basis[i] = (n/qi) * inverse(n/qi mod qi), so coords map back by a dot product
    basis = []
    for q in qs:
        m = n // q
        basis.append(m * pow(m, -1, q) % n)
    return tuple(basis)


def build_ring(spec: RingSpec, max_factors: int = DEFAULT_MAX_FACTORS) -> Ring:
    """Build the coordinate form of the ring described by `spec`.

    Fields and Z_2 are accepted here; graph constructors are where a ring
    without zero divisors gets rejected.
    """
    if isinstance(spec, SquarefreeModulus):
        primes = factor_squarefree(spec.n)
        if len(primes) > max_factors:
            raise TooManyFactors(len(primes), max_factors)
        qs = tuple(sorted(primes))
        return Ring(qs=qs, modulus=spec.n, _crt_basis=_crt_basis(qs, spec.n))
    if isinstance(spec, PrimeFactors):
        if not spec.primes:
            raise RingConstructionError("a ring needs at least one prime factor")
        for p in spec.primes:
            if not _is_prime(p):
                raise RingConstructionError(f"factor {p} is not prime")
        if len(spec.primes) > max_factors:
            raise TooManyFactors(len(spec.primes), max_factors)
        return Ring(qs=tuple(spec.primes))
    if isinstance(spec, TableRing):
        from .tables import decompose_table_ring

        return decompose_table_ring(spec, max_factors=max_factors)
    raise RingConstructionError(f"unsupported ring specification {spec!r}")


# ---------------------------------------------------------------------------
# annihilators and ideals


def annihilator_element(ring: Ring, a: Element) -> Ideal:
    """Ann(a) = everything supported off the support of a."""
    return Ideal(indices_of(ring.full_mask & ~a.support_mask))


def annihilator_ideal(ring: Ring, ideal: Ideal) -> Ideal:
    return Ideal(indices_of(ring.full_mask & ~ideal.mask))


def principal_ideal(ring: Ring, a: Element) -> Ideal:
    """(a): for a product of fields this is everything supported inside supp(a)."""
    return Ideal(a.support)


def ideal_kind(ring: Ring, ideal: Ideal) -> str:
    m = ideal.mask
    if m == 0:
        return "zero"
    if m == ring.full_mask:
        return "improper"
    return "annihilating"


def is_annihilating(ring: Ring, ideal: Ideal) -> bool:
    return ideal_kind(ring, ideal) == "annihilating"


def enumerate_ideals(ring: Ring, max_factors: int = DEFAULT_MAX_FACTORS) -> list[Ideal]:
    """All 2^k ideals in mask order: the zero ideal first, the whole ring last."""
    if ring.k > max_factors:
        raise TooManyFactors(ring.k, max_factors)
    return [Ideal(indices_of(m)) for m in range(1 << ring.k)]


def annihilating_ideals(ring: Ring, max_factors: int = DEFAULT_MAX_FACTORS) -> list[Ideal]:
    return [I for I in enumerate_ideals(ring, max_factors) if is_annihilating(ring, I)]


def ideal_product(ring: Ring, a: Ideal, b: Ideal) -> Ideal:
    # IJ = I n J when every factor is a field
    return Ideal(a.support & b.support)


def ideal_sum(ring: Ring, a: Ideal, b: Ideal) -> Ideal:
    return Ideal(a.support | b.support)


def ideal_contains(outer: Ideal, inner: Ideal) -> bool:
    return inner.support <= outer.support


def ideal_algebra(ring: Ring, a: Ideal, b: Ideal) -> IdealAlgebra:
    return IdealAlgebra(
        product=ideal_product(ring, a, b),
        sum=ideal_sum(ring, a, b),
        left_in_right=ideal_contains(b, a),
        equal=a.support == b.support,
    )


def elements_of_ideal(ring: Ring, ideal: Ideal, cap: int = DEFAULT_ELEMENT_CAP) -> list[Element]:
    """Explicit member list, for small rings and oracle work."""
    size = math.prod(ring.qs[i] for i in ideal.support)
    if size > cap:
        raise TooManyElements(size, cap)
    members = []
    coords = [0] * ring.k
    idx = sorted(ideal.support)

    def rec(j: int):
        if j == len(idx):
            members.append(ring.element(tuple(coords)))
            return
        for v in range(ring.qs[idx[j]]):
            coords[idx[j]] = v
            rec(j + 1)
        coords[idx[j]] = 0

    rec(0)
    return members
