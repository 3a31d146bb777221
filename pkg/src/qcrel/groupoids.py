"""Abelian groups, groupoid bases, their algebra laws, and complementary pairs.

A basis for an n-element system is a disjoint union of N copies of one
abelian group G (n = N * |G|) with multiplication defined only inside a
copy.  Copy i's elements occupy the flat index block [i*|G|, (i+1)*|G|);
the block starts are the identities.

A complementary pair on one underlying set carries two such groupoids:
Z with copies of G (copy-major blocks) and X with copies of H (stride
classes), glued by the canonical recoding that sends the Z-label
(copy i, group element g) to the X-label (copy flat(g), element i).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Sequence

from .relations import (
    FinRel,
    StateVec,
    converse,
    identity,
    is_unitary,
    swap,
    tensor,
    then,
)


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups, elements coded as mixed-radix flat indices.

    >>> g = AbelianGroup((2, 3))
    >>> g.order
    6
    >>> g.add(1, 5)     # (0,1) + (1,2) = (1,0) -> flat 3
    3
    """

    cyclic_orders: tuple[int, ...]

    def __init__(self, cyclic_orders: Sequence[int]) -> None:
        orders = tuple(int(n) for n in cyclic_orders)
        if not orders:
            raise ValueError("a group needs at least one cyclic factor")
        if any(n < 1 for n in orders):
            raise ValueError(f"cyclic factor orders must be >= 1, got {orders}")
        object.__setattr__(self, "cyclic_orders", orders)

    @property
    def order(self) -> int:
        return reduce(lambda a, b: a * b, self.cyclic_orders, 1)

    def coords(self, flat: int) -> tuple[int, ...]:
        out = []
        for n in reversed(self.cyclic_orders):
            flat, r = divmod(flat, n)
            out.append(r)
        return tuple(reversed(out))

    def flat(self, coords: Sequence[int]) -> int:
        value = 0
        for n, x in zip(self.cyclic_orders, coords):
            value = value * n + (x % n)
        return value

    def add(self, a: int, b: int) -> int:
        ca, cb = self.coords(a), self.coords(b)
        return self.flat(tuple((x + y) % n for x, y, n in zip(ca, cb, self.cyclic_orders)))

    def neg(self, a: int) -> int:
        return self.flat(tuple((-x) % n for x, n in zip(self.coords(a), self.cyclic_orders)))

    def spec(self) -> str:
        return "x".join(f"Z{n}" for n in self.cyclic_orders)


@dataclass(frozen=True)
class Groupoid:
    """N disjoint copies of one abelian group, with partial multiplication.

    Element coding: copy i, group element g  ->  flat index i*|G| + flat(g).
    Products exist only within a copy; the identities sit at the block starts.
    """

    base: AbelianGroup
    copies: int

    def __init__(self, base: AbelianGroup, copies: int = 1) -> None:
        if copies < 1:
            raise ValueError(f"a groupoid needs at least one copy, got {copies}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "copies", int(copies))

    @property
    def size(self) -> int:
        return self.copies * self.base.order

    def copy_of(self, e: int) -> int:
        return e // self.base.order

    def elem_of(self, e: int) -> int:
        return e % self.base.order

    def mult(self, a: int, b: int) -> Optional[int]:
        """The partial product, or None when a and b live in different copies."""
        n = self.base.order
        ca, cb = a // n, b // n
        if ca != cb:
            return None
        return ca * n + self.base.add(a % n, b % n)

    def inv(self, e: int) -> int:
        n = self.base.order
        return (e // n) * n + self.base.neg(e % n)

    def identities(self) -> list[int]:
        return [i * self.base.order for i in range(self.copies)]

    def is_identity(self, e: int) -> bool:
        return e % self.base.order == 0

    def mult_rel(self) -> FinRel:
        """Multiplication as a relation A*A -> A under the flat product coding."""
        n, size = self.base.order, self.size
        pairs = []
        for i in range(self.copies):
            block = i * n
            for x in range(n):
                for y in range(n):
                    a, b = block + x, block + y
                    pairs.append((a * size + b, block + self.base.add(x, y)))
        return FinRel(size * size, size, pairs)

    def unit_state(self) -> StateVec:
        return StateVec(self.size, self.identities())

    def comult_rel(self) -> FinRel:
        return converse(self.mult_rel())

    def counit_rel(self) -> FinRel:
        return converse(self.unit_state().as_ket())

    def classical_states(self) -> list[StateVec]:
        n = self.base.order
        return [StateVec(self.size, range(i * n, (i + 1) * n)) for i in range(self.copies)]

    def unbiased_states(self) -> list[StateVec]:
        n = self.base.order
        return [StateVec(self.size, (i * n + g for i in range(self.copies)))
                for g in range(n)]

    def spec(self) -> str:
        group = self.base.spec()
        return group if self.copies == 1 else f"{group}^{self.copies}"


@dataclass(frozen=True)
class LawReport:
    """Outcome of checking the five classical-structure laws."""

    coassociative: bool
    counital: bool
    frobenius: bool
    special: bool
    symmetric: bool

    @property
    def all_ok(self) -> bool:
        return (self.coassociative and self.counital and self.frobenius
                and self.special and self.symmetric)

    def as_dict(self) -> dict[str, bool]:
        return {
            "coassociative": self.coassociative,
            "counital": self.counital,
            "frobenius": self.frobenius,
            "special": self.special,
            "symmetric": self.symmetric,
        }


def check_structure_laws(mult: FinRel, unit: StateVec) -> LawReport:
    """Evaluate the five laws for an arbitrary (multiplication, unit) pair.

    Each law is decided by building both composite sides as relations and
    comparing them exactly; no symbolic reasoning is involved.
    """
    n = mult.cod_size
    if mult.dom_size != n * n:
        raise ValueError(f"multiplication must be {n * n}->{n}, got {mult.dom_size}->{mult.cod_size}")
    if unit.space_size != n:
        raise ValueError(f"unit lives on {unit.space_size} elements, expected {n}")
    idn = identity(n)
    delta = converse(mult)
    eps = converse(unit.as_ket())
    eta = unit.as_ket()
    nu = swap(n, n)

    coassociative = then(delta, tensor(delta, idn)) == then(delta, tensor(idn, delta))
    counital = (then(delta, tensor(eps, idn)) == idn
                and then(delta, tensor(idn, eps)) == idn)
    frobenius = (then(tensor(idn, delta), tensor(mult, idn))
                 == then(tensor(delta, idn), tensor(idn, mult)))
    special = then(delta, mult) == idn
    symmetric = then(then(eta, delta), nu) == then(eta, delta)
    return LawReport(coassociative, counital, frobenius, special, symmetric)


def verify_classical_structure(z: Groupoid) -> LawReport:
    """Check that the groupoid's multiplication and unit form a classical structure."""
    return check_structure_laws(z.mult_rel(), z.unit_state())


def _canonical_recode(g_order: int, h_order: int) -> tuple[int, ...]:
    """Z-flat index i*|G| + a  ->  X-flat index a*|H| + i."""
    recode = [0] * (g_order * h_order)
    for i in range(h_order):
        for a in range(g_order):
            recode[i * g_order + a] = a * h_order + i
    return tuple(recode)


@dataclass(frozen=True)
class ComplementaryPair:
    """Two groupoid bases on one underlying set, in the canonical mutually
    unbiased form: Z has |H| copies of G (blocks) and X has |G| copies of H
    (stride classes), glued by ``x_recode``.

    ``x_recode`` maps the underlying (Z-flat) coding to X's internal coding;
    all states returned by this class are expressed in the underlying coding.
    """

    g: AbelianGroup
    h: AbelianGroup
    z: Groupoid
    x: Groupoid
    x_recode: tuple[int, ...]
    canonical: bool

    def __init__(self, g: AbelianGroup, h: AbelianGroup,
                 x_recode: Optional[Sequence[int]] = None) -> None:
        z = Groupoid(g, copies=h.order)
        x = Groupoid(h, copies=g.order)
        if x_recode is None:
            recode = _canonical_recode(g.order, h.order)
            canonical = True
        else:
            recode = tuple(int(v) for v in x_recode)
            if sorted(recode) != list(range(z.size)):
                raise ValueError("x_recode must be a permutation of the underlying set")
            canonical = recode == _canonical_recode(g.order, h.order)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "x_recode", recode)
        object.__setattr__(self, "canonical", canonical)
        if canonical:
            # Mutual unbiasedness is structural for the canonical coding; keep it checked.
            z_classical = [s.members for s in self.z.classical_states()]
            x_unbiased = [s.members for s in self.x_unbiased_states()]
            if z_classical != x_unbiased:
                raise AssertionError("canonical pair violates the classical/unbiased correspondence")

    @property
    def size(self) -> int:
        return self.z.size

    def _from_x(self, states: list[StateVec]) -> list[StateVec]:
        inverse = [0] * self.size
        for underlying, xcode in enumerate(self.x_recode):
            inverse[xcode] = underlying
        return [StateVec(self.size, (inverse[m] for m in s.members)) for s in states]

    def x_classical_states(self) -> list[StateVec]:
        """X's classical states, expressed in the underlying coding."""
        return self._from_x(self.x.classical_states())

    def x_unbiased_states(self) -> list[StateVec]:
        """X's unbiased states, expressed in the underlying coding."""
        return self._from_x(self.x.unbiased_states())

    def x_mult(self, u: int, v: int) -> Optional[int]:
        """X's partial multiplication transported to the underlying coding."""
        w = self.x.mult(self.x_recode[u], self.x_recode[v])
        if w is None:
            return None
        inverse = self.x_recode.index(w)  # small sets; fine
        return inverse

    def is_complementary_pair(self) -> bool:
        """Whether the two bases really are complementary (always true for the
        canonical coding; an explicit recoding may break it)."""
        return self.canonical or is_complementary(self.z, self.x, self.x_recode)

    def spec(self) -> str:
        return f"pair({self.g.spec()},{self.h.spec()})"


def make_complementary_pair(g: AbelianGroup, h: AbelianGroup) -> ComplementaryPair:
    return ComplementaryPair(g, h)


def _controlled_not(z: Groupoid, x_mult, size: int) -> FinRel:
    """The abstract controlled-not {((x,y),(a, b*y)) with a.b = x} on size*size."""
    pairs = set()
    n = z.base.order
    for i in range(z.copies):
        block = i * n
        for a in range(block, block + n):
            for b in range(block, block + n):
                xx = z.mult(a, b)
                for y in range(size):
                    w = x_mult(b, y)
                    if w is not None:
                        pairs.add((xx * size + y, a * size + w))
    return FinRel(size * size, size * size, pairs)


def cnot(pair: ComplementaryPair) -> FinRel:
    """The controlled-not of the pair: copy in Z, then multiply in X."""
    return _controlled_not(pair.z, pair.x_mult, pair.size)


def is_complementary(z: Groupoid, x: Groupoid, recode: Sequence[int]) -> bool:
    """Decide complementarity of two bases on a shared set: the controlled-not
    built from (Z comultiplication, X multiplication under ``recode``) must be
    a bijection."""
    if z.size != x.size:
        raise ValueError(f"bases live on different sets: {z.size} vs {x.size}")
    recode = tuple(int(v) for v in recode)
    if sorted(recode) != list(range(z.size)):
        raise ValueError("recode must be a permutation of the underlying set")
    inverse = [0] * x.size
    for underlying, xcode in enumerate(recode):
        inverse[xcode] = underlying

    def x_mult(u: int, v: int) -> Optional[int]:
        w = x.mult(recode[u], recode[v])
        return None if w is None else inverse[w]

    return is_unitary(_controlled_not(z, x_mult, z.size))


def fourier_rel(pair: ComplementaryPair) -> FinRel:
    """The basis-change bijection for a square pair (|G| = |H| = n): i*n+g -> g*n+i.

    It carries the k-th Z-classical state onto the k-th X-classical state and
    is an involution.  Pairs with |G| != |H| have no such bijection (the two
    classical-state families have different sizes); prepare and measure
    X-classical states directly instead (the absorbed form used by the
    algorithm runners).
    """
    if pair.g.order != pair.h.order:
        raise ValueError(
            f"no basis-change bijection for pair({pair.g.spec()},{pair.h.spec()}): "
            "|G| != |H|; use absorbed preparation/measurement instead"
        )
    n = pair.g.order
    return FinRel(pair.size, pair.size,
                  ((i * n + g, g * n + i) for i in range(n) for g in range(n)))


_GROUPOID_SPEC = re.compile(r"^(Z\d+)(xZ\d+)*(\^\d+)?$")


def parse_group_spec(text: str) -> AbelianGroup:
    """Parse a product-of-cyclics spec like ``Z2`` or ``Z2xZ3``."""
    text = text.strip()
    if not re.fullmatch(r"Z\d+(xZ\d+)*", text):
        pos = _first_bad_position(text, allow_caret=False)
        raise ValueError(f"malformed group spec {text!r} at position {pos}")
    orders = [int(part[1:]) for part in text.split("x")]
    if any(n == 0 for n in orders):
        raise ValueError(f"group spec {text!r} names a cyclic factor of order 0")
    return AbelianGroup(orders)


def parse_groupoid_spec(text: str) -> Groupoid:
    """Parse ``Z<n>[xZ<m>...]^<copies>``; ``^1`` may be omitted.

    >>> parse_groupoid_spec("Z2^2").size
    4
    """
    text = text.strip()
    if not _GROUPOID_SPEC.fullmatch(text):
        pos = _first_bad_position(text, allow_caret=True)
        raise ValueError(f"malformed groupoid spec {text!r} at position {pos}")
    if "^" in text:
        group_part, copies_part = text.split("^")
        copies = int(copies_part)
    else:
        group_part, copies = text, 1
    if copies == 0:
        raise ValueError(f"groupoid spec {text!r} asks for 0 copies")
    return Groupoid(parse_group_spec(group_part), copies)


_PAIR_SPEC = re.compile(r"^pair\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)$")


def parse_pair_spec(text: str) -> ComplementaryPair:
    """Parse ``pair(G,H)`` where G and H are group specs, e.g. ``pair(Z2,Z2)``."""
    m = _PAIR_SPEC.fullmatch(text.strip())
    if not m:
        raise ValueError(f"malformed pair spec {text!r}: expected pair(G,H)")
    return make_complementary_pair(parse_group_spec(m.group(1)), parse_group_spec(m.group(2)))


def _first_bad_position(text: str, allow_caret: bool) -> int:
    allowed = set("Zx0123456789")
    if allow_caret:
        allowed.add("^")
    for i, ch in enumerate(text):
        if ch not in allowed:
            return i
    return len(text)
