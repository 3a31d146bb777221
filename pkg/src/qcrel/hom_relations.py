"""Structure-preserving relations between groupoid bases.

The predicates here decide, for a relation between two groupoids, whether it
preserves multiplication (groupoid homomorphism relation), the full monoid
structure, or the dual comonoid structure.  Comonoid homomorphism relations
are the *classical relations*: the relations that carry basis data to basis
data, and the admissible blackbox content of a unitary oracle.

Set-multiplication convention: for subsets A, B of a groupoid, A * B collects
the defined products only; undefined products contribute nothing.  The
homomorphism condition is enforced for every source pair, with the image of
an undefined product read as the empty set.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import NamedTuple

from .groupoids import Groupoid
from .relations import FinRel, tensor, then


@dataclass(frozen=True)
class StructuredRel:
    """A relation together with the groupoids on its two ends."""

    rel: FinRel
    source: Groupoid
    target: Groupoid

    def __post_init__(self) -> None:
        if self.rel.dom_size != self.source.size:
            raise ValueError(
                f"relation domain {self.rel.dom_size} != source groupoid size {self.source.size}"
            )
        if self.rel.cod_size != self.target.size:
            raise ValueError(
                f"relation codomain {self.rel.cod_size} != target groupoid size {self.target.size}"
            )

    @cached_property
    def images(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.source.size)]
        for (a, b) in self.rel.pairs:
            out[a].add(b)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def preimages(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.target.size)]
        for (a, b) in self.rel.pairs:
            out[b].add(a)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def is_groupoid_hom(self) -> bool:
        return is_groupoid_hom_relation(self)

    @cached_property
    def is_monoid_hom(self) -> bool:
        return is_monoid_hom_relation(self)

    @cached_property
    def is_classical(self) -> bool:
        return is_classical_relation(self)


def _set_product(target: Groupoid, left: frozenset[int], right: frozenset[int]) -> frozenset[int]:
    out = set()
    for u in left:
        for v in right:
            w = target.mult(u, v)
            if w is not None:
                out.add(w)
    return frozenset(out)


def is_groupoid_hom_relation(s: StructuredRel) -> bool:
    """The relational weakening of a functor between groupoids: it need not
    relate every element, but it must be multiplicative, R(x*y) == R(x)*R(y)
    for every source pair (the empty set standing in for the image of an
    undefined product), and identity elements may relate only to identity
    elements.  Without the identity clause the multiplicative condition
    admits relations (the full relation on a one-copy groupoid, for one)
    that break the unit half of the monoid-homomorphism property this
    predicate is meant to feed."""
    src, tgt = s.source, s.target
    img = s.images
    target_ids = frozenset(tgt.identities())
    for e in src.identities():
        if not img[e] <= target_ids:
            return False
    nothing: frozenset[int] = frozenset()
    for x in range(src.size):
        if not img[x]:
            # R(x) empty forces R(x)*R(y) empty; only R(x*y) needs checking.
            for y in range(src.size):
                p = src.mult(x, y)
                if p is not None and img[p]:
                    return False
                q = src.mult(y, x)
                if q is not None and img[q]:
                    return False
            continue
        for y in range(src.size):
            p = src.mult(x, y)
            lhs = img[p] if p is not None else nothing
            if lhs != _set_product(tgt, img[x], img[y]):
                return False
    return True


def is_surjective_on_objects(s: StructuredRel) -> bool:
    """Every target copy holds some element that is related to a source element."""
    hit = {s.target.copy_of(b) for (_, b) in s.rel.pairs}
    return len(hit) == s.target.copies


def is_monoid_hom_relation(s: StructuredRel) -> bool:
    """Exact equality of both monoid-homomorphism equations, built as relations."""
    r = s.rel
    mult_ok = (then(s.source.mult_rel(), r)
               == then(tensor(r, r), s.target.mult_rel()))
    unit_ok = (then(s.source.unit_state().as_ket(), r)
               == s.target.unit_state().as_ket())
    return mult_ok and unit_ok


class ClassicalEquations(NamedTuple):
    comult_ok: bool
    counit_ok: bool


def classical_equations(s: StructuredRel) -> ClassicalEquations:
    """The two comonoid-homomorphism equations, each as an exact relation equality."""
    r = s.rel
    comult_ok = (then(r, s.target.comult_rel())
                 == then(s.source.comult_rel(), tensor(r, r)))
    counit_ok = then(r, s.target.counit_rel()) == s.source.counit_rel()
    return ClassicalEquations(comult_ok, counit_ok)


def is_classical_relation(s: StructuredRel) -> bool:
    eqs = classical_equations(s)
    return eqs.comult_ok and eqs.counit_ok


def is_self_conjugate(s: StructuredRel) -> bool:
    """For every target element t: inverting the preimage of t's inverse gives
    the preimage of t (inverses taken inside each element's own copy)."""
    src, tgt = s.source, s.target
    pre = s.preimages
    for t in range(tgt.size):
        flipped = frozenset(src.inv(u) for u in pre[tgt.inv(t)])
        if flipped != pre[t]:
            return False
    return True


def _counit_allowed_images(source: Groupoid, target: Groupoid) -> list[list[frozenset[int]]]:
    """Per source element, the image sets compatible with the counit equation:
    an element may touch a target identity iff it is a source identity."""
    target_ids = set(target.identities())
    non_ids = [t for t in range(target.size) if t not in target_ids]
    all_subsets_non_id = _subsets(non_ids)
    all_subsets = _subsets(list(range(target.size)))
    touching = [s for s in all_subsets if s & target_ids]
    out = []
    for e in range(source.size):
        out.append(touching if source.is_identity(e) else all_subsets_non_id)
    return out


def _subsets(elems: list[int]) -> list[frozenset[int]]:
    subs = []
    for mask in range(1 << len(elems)):
        subs.append(frozenset(elems[i] for i in range(len(elems)) if mask >> i & 1))
    return subs


def _threads_from_env() -> int:
    raw = os.environ.get("QCREL_THREADS", "").strip()
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"QCREL_THREADS must be an integer, got {raw!r}") from exc
    return max(1, value)


def enumerate_classical_relations(source: Groupoid, target: Groupoid, *,
                                  max_candidate_bits: int = 24,
                                  threads: int | None = None) -> list[FinRel]:
    """All classical relations source -> target, canonically sorted.

    Brute force over the candidate space with exact pruning on the counit
    equation (the pruning drops only relations that fail it, so the result
    equals the unpruned scan).  Candidate ranges may be evaluated in
    parallel; the output is sorted by pair-set lexicographic order and does
    not depend on the schedule.
    """
    bits = source.size * target.size
    if bits > max_candidate_bits:
        raise ValueError(
            f"candidate space has 2^{bits} relations, beyond the 2^{max_candidate_bits} budget"
        )
    if threads is None:
        threads = _threads_from_env()

    choices = _counit_allowed_images(source, target)
    radices = [len(c) for c in choices]
    total = prod(radices)

    def candidate(index: int) -> FinRel:
        imgs = []
        for c, radix in zip(reversed(choices), reversed(radices)):
            index, r = divmod(index, radix)
            imgs.append(c[r])
        imgs.reverse()
        pairs = [(a, b) for a, img in enumerate(imgs) for b in img]
        return FinRel(source.size, target.size, pairs)

    def scan(start: int, stop: int) -> list[FinRel]:
        found = []
        for idx in range(start, stop):
            rel = candidate(idx)
            if is_classical_relation(StructuredRel(rel, source, target)):
                found.append(rel)
        return found

    if threads <= 1 or total < 2 * threads:
        results = scan(0, total)
    else:
        step = -(-total // threads)
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda b: scan(*b), bounds))
        results = [rel for chunk in chunks for rel in chunk]

    return sorted(results, key=lambda r: r.sorted_pairs())
