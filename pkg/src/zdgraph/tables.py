"""Table-ring input: validation, decomposition into prime fields, and oracles.

A table ring is the fully explicit form of a finite ring: addition and
multiplication as index matrices.  Decomposition splits the ring along its
primitive idempotents, maps each factor to a prime field, and round-trips
the tables against coordinatewise arithmetic, so a successful decomposition
is itself a proof that the input was a valid reduced commutative ring.
The oracle class below recomputes annihilators, ideals, and primes straight
from the tables and is used to cross-check the coordinate machinery.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    DecompositionMismatch,
    FactorNotField,
    FactorNotPrimeField,
    InputFormatError,
    NotAdditiveGroup,
    NotCommutative,
    NotReduced,
    NotUnital,
    TooManyFactors,
)
from .rings import DEFAULT_MAX_FACTORS, Ring, TableRing, _is_prime


# ---------------------------------------------------------------------------
# generators (handy for tests, demos, and building corpus files)


def zn_tables(n: int) -> TableRing:
    if n < 1:
        raise InputFormatError(f"table size must be positive, got {n}")
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    mul = tuple(tuple((i * j) % n for j in range(n)) for i in range(n))
    return TableRing(size=n, one=1 % n, add=add, mul=mul)


def product_tables(qs: tuple[int, ...] | list[int]) -> TableRing:
    """Tables of F_q1 x ... x F_qk with the last coordinate varying fastest."""
    qs = tuple(qs)
    size = 1
    for q in qs:
        size *= q

    def to_coords(idx: int) -> tuple[int, ...]:
        out = []
        for q in reversed(qs):
            out.append(idx % q)
            idx //= q
        return tuple(reversed(out))

    def to_index(coords: tuple[int, ...]) -> int:
        idx = 0
        for c, q in zip(coords, qs):
            idx = idx * q + c
        return idx

    coords = [to_coords(i) for i in range(size)]
    add = tuple(
        tuple(to_index(tuple((a + b) % q for a, b, q in zip(coords[i], coords[j], qs)))
              for j in range(size))
        for i in range(size)
    )
    mul = tuple(
        tuple(to_index(tuple((a * b) % q for a, b, q in zip(coords[i], coords[j], qs)))
              for j in range(size))
        for i in range(size)
    )
    return TableRing(size=size, one=to_index(tuple(1 % q for q in qs)), add=add, mul=mul)


# ---------------------------------------------------------------------------
# JSON form
#
# {"size": n, "one": i, "add": [[...], ...], "mul": [[...], ...]}
# Matrices are row-major; rows may be nested lists or one flat list.


def table_to_json(t: TableRing) -> dict:
    return {
        "size": t.size,
        "one": t.one,
        "add": [list(row) for row in t.add],
        "mul": [list(row) for row in t.mul],
    }


def _parse_matrix(obj, size: int, name: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(obj, list):
        raise InputFormatError(f"{name} must be a list")
    if obj and all(isinstance(x, int) for x in obj):
        if len(obj) != size * size:
            raise InputFormatError(f"flat {name} must have {size * size} entries")
        rows = [tuple(obj[i * size:(i + 1) * size]) for i in range(size)]
    else:
        if len(obj) != size:
            raise InputFormatError(f"{name} must have {size} rows")
        rows = []
        for r in obj:
            if not isinstance(r, list) or len(r) != size:
                raise InputFormatError(f"every {name} row must have {size} entries")
            rows.append(tuple(r))
    for row in rows:
        for v in row:
            if not isinstance(v, int) or not 0 <= v < size:
                raise InputFormatError(f"{name} entry {v!r} is not an index below {size}")
    return tuple(rows)


def table_from_json(obj) -> TableRing:
    if not isinstance(obj, dict):
        raise InputFormatError("table document must be a JSON object")
    try:
        size = obj["size"]
        one = obj["one"]
    except KeyError as exc:
        raise InputFormatError(f"table document is missing field {exc.args[0]!r}") from None
    if not isinstance(size, int) or size < 1:
        raise InputFormatError(f"size must be a positive integer, got {size!r}")
    if not isinstance(one, int) or not 0 <= one < size:
        raise InputFormatError(f"one must be an index below {size}, got {one!r}")
    add = _parse_matrix(obj.get("add"), size, "add")
    mul = _parse_matrix(obj.get("mul"), size, "mul")
    return TableRing(size=size, one=one, add=add, mul=mul)


def load_table_file(path: str) -> TableRing:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputFormatError(f"cannot read table file {path}: {exc}") from exc
    return table_from_json(obj)


# ---------------------------------------------------------------------------
# decomposition


def _find_zero(t: TableRing) -> int:
    identity = tuple(range(t.size))
    for z in range(t.size):
        if t.add[z] == identity:
            return z
    raise NotAdditiveGroup("no additive identity found")


def decompose_table_ring(t: TableRing, max_factors: int = DEFAULT_MAX_FACTORS) -> Ring:
    """Split a table ring along primitive idempotents into prime fields.

    Factors are ordered by field size, ties broken by the smallest table
    index among the primitive idempotents, so the result is deterministic.
    Raises the specific construction error when the tables fail to describe
    a reduced commutative unital ring that is a product of prime fields.
    """
    n = t.size
    add, mul = t.add, t.mul
    zero = _find_zero(t)

    for x in range(n):
        if add[x] != tuple(add[y][x] for y in range(n)):
            raise NotAdditiveGroup(f"addition is not commutative at row {x}")
        if zero not in add[x]:
            raise NotAdditiveGroup(f"element {x} has no additive inverse")
    for x in range(n):
        row = mul[x]
        for y in range(x + 1, n):
            if row[y] != mul[y][x]:
                raise NotCommutative((x, y))
    if mul[t.one] != tuple(range(n)):
        raise NotUnital(f"index {t.one} is not a multiplicative identity")
    for x in range(n):
        if x != zero and mul[x][x] == zero:
            raise NotReduced(x)

    idempotents = [x for x in range(n) if mul[x][x] == x]
    primitives = []
    for e in idempotents:
        if e == zero:
            continue
        if all(mul[e][f] in (zero, e) for f in idempotents):
            primitives.append(e)

    # orthogonality and completeness of the primitive family
    for i, e in enumerate(primitives):
        for f in primitives[i + 1:]:
            if mul[e][f] != zero:
                raise FactorNotField((e, f))
    total = zero
    for e in primitives:
        total = add[total][e]
    if total != t.one:
        raise FactorNotField(f"primitive idempotents sum to {total}, not the identity")

    factors = []
    for e in primitives:
        members = sorted(set(mul[e][x] for x in range(n)))
        q = len(members)
        if not _is_prime(q):
            # a field factor of non-prime order (such as F_4) is out of scope
            inverses_ok = True
            for m in members:
                if m == zero:
                    continue
                if not any(mul[m][x] == e for x in members):
                    inverses_ok = False
                    break
            if inverses_ok:
                raise FactorNotPrimeField(q)
            raise FactorNotField(e)
        # walk the additive multiples of e; a prime-order factor must be Z_q
        multiples = {zero: 0}
        cur = zero
        for m in range(1, q):
            cur = add[cur][e]
            multiples[cur] = m
        if len(multiples) != q or set(multiples) != set(members):
            raise FactorNotField(e)
        factors.append((q, e, multiples))

    factors.sort(key=lambda item: (item[0], item[1]))
    qs = tuple(q for q, _, _ in factors)
    if len(qs) > max_factors:
        raise TooManyFactors(len(qs), max_factors)

    iso = []
    for x in range(n):
        coords = []
        for q, e, multiples in factors:
            part = mul[e][x]
            if part not in multiples:
                raise DecompositionMismatch(x)
            coords.append(multiples[part])
        iso.append(tuple(coords))
    if len(set(iso)) != n:
        raise DecompositionMismatch("coordinate map is not injective")

    # round trip: the tables must agree with coordinatewise arithmetic
    for x in range(n):
        ix = iso[x]
        arow, mrow = add[x], mul[x]
        for y in range(n):
            iy = iso[y]
            if iso[arow[y]] != tuple((a + b) % q for a, b, q in zip(ix, iy, qs)):
                raise DecompositionMismatch((x, y, "add"))
            if iso[mrow[y]] != tuple((a * b) % q for a, b, q in zip(ix, iy, qs)):
                raise DecompositionMismatch((x, y, "mul"))

    return Ring(qs=qs, table_iso=tuple(iso))


# ---------------------------------------------------------------------------
# table-mode oracle


@dataclass
class TableOracle:
    """Recomputes ring-theoretic data straight from the tables.

    Everything here is deliberately brute force; it exists to cross-check
    the coordinate implementations on small rings.
    """

    t: TableRing

    def __post_init__(self):
        self.n = self.t.size
        self.zero = _find_zero(self.t)

    def annihilator(self, x: int) -> frozenset[int]:
        mul = self.t.mul
        return frozenset(y for y in range(self.n) if mul[x][y] == self.zero)

    def annihilator_of_set(self, S: frozenset[int]) -> frozenset[int]:
        mul = self.t.mul
        return frozenset(y for y in range(self.n) if all(mul[x][y] == self.zero for x in S))

    def zero_divisors(self) -> set[int]:
        """Nonzero elements with a nonzero annihilator."""
        out = set()
        for x in range(self.n):
            if x == self.zero:
                continue
            if any(y != self.zero for y in self.annihilator(x)):
                out.add(x)
        return out

    def principal(self, x: int) -> frozenset[int]:
        return frozenset(self.t.mul[x])

    def is_ideal(self, S: frozenset[int]) -> bool:
        add, mul = self.t.add, self.t.mul
        if self.zero not in S:
            return False
        for a in S:
            for b in S:
                if add[a][b] not in S:
                    return False
            for r in range(self.n):
                if mul[a][r] not in S:
                    return False
        return True

    def all_ideals(self) -> list[frozenset[int]]:
        """Close the principal ideals under pairwise sum until a fixpoint."""
        add = self.t.add
        ideals = {self.principal(x) for x in range(self.n)}
        changed = True
        while changed:
            changed = False
            current = list(ideals)
            for i, A in enumerate(current):
                for B in current[i:]:
                    s = frozenset(add[a][b] for a in A for b in B)
                    if s not in ideals:
                        ideals.add(s)
                        changed = True
        return sorted(ideals, key=lambda s: (len(s), sorted(s)))

    def is_prime_ideal(self, S: frozenset[int]) -> bool:
        if len(S) == self.n:
            return False
        mul = self.t.mul
        for x in range(self.n):
            if x in S:
                continue
            row = mul[x]
            for y in range(x, self.n):
                if y not in S and row[y] in S:
                    return False
        return True

    def minimal_primes(self) -> list[frozenset[int]]:
        primes = [S for S in self.all_ideals() if self.is_prime_ideal(S)]
        return [P for P in primes if not any(Q < P for Q in primes)]

    def bourbaki_primes(self) -> list[tuple[frozenset[int], int]]:
        """Primes of the form Ann(x), each with one witness element."""
        found: dict[frozenset[int], int] = {}
        for x in range(self.n):
            if x == self.zero:
                continue
            ann = self.annihilator(x)
            if ann not in found and self.is_prime_ideal(ann):
                found[ann] = x
        return sorted(found.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
