"""Set compositions, flags, and enumeration over finite labelled ground sets.

Blocks are stored as bitmasks over a GroundSet's dense label indices;
all public constructors and serialization work with label names.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class GroundMismatchError(ValueError):
    """Operands live on different ground sets."""


class MalformedFlagError(ValueError):
    """A chain of subsets is not a strictly increasing chain of proper parts."""


class OverlappingGroundError(ValueError):
    """Product operands share labels."""


class BoundExceededError(ValueError):
    """An enumeration bound was exceeded without an explicit override."""


class GroundSet:
    """An ordered tuple of distinct atom labels, indexed densely from 0."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels=()):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate labels: %r" % (self.labels,))
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    @property
    def size(self):
        return len(self.labels)

    @property
    def full_mask(self):
        return (1 << len(self.labels)) - 1

    def mask_of(self, labels):
        mask = 0
        for lab in labels:
            try:
                mask |= 1 << self._index[lab]
            except KeyError:
                raise ValueError("label %r not in ground set %r" % (lab, self.labels))
        return mask

    def labels_of(self, mask):
        return tuple(lab for i, lab in enumerate(self.labels) if mask >> i & 1)

    def __len__(self):
        return len(self.labels)

    def __contains__(self, lab):
        return lab in self._index

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return "GroundSet(%r)" % (self.labels,)


@dataclass(frozen=True)
class SetComposition:
    """An ordered sequence of disjoint non-empty blocks covering the ground set."""

    ground: GroundSet
    blocks: tuple[int, ...]

    def __post_init__(self):
        seen = 0
        for b in self.blocks:
            if b == 0:
                raise ValueError("empty block")
            if b & seen:
                raise ValueError("blocks overlap")
            seen |= b
        if seen != self.ground.full_mask:
            raise ValueError("blocks do not cover the ground set")

    @classmethod
    def from_labels(cls, ground, blocks):
        if not isinstance(ground, GroundSet):
            ground = GroundSet(ground)
        return cls(ground, tuple(ground.mask_of(b) for b in blocks))

    @property
    def length(self):
        return len(self.blocks)

    def type(self):
        """The integer composition of block sizes."""
        return tuple(b.bit_count() for b in self.blocks)

    def block_labels(self):
        return tuple(self.ground.labels_of(b) for b in self.blocks)

    def block_label_sets(self):
        return tuple(frozenset(self.ground.labels_of(b)) for b in self.blocks)

    def prefix_masks(self):
        """Cumulative unions S_1, ..., S_k (the last equals the full ground)."""
        out, acc = [], 0
        for b in self.blocks:
            acc |= b
            out.append(acc)
        return tuple(out)

    def to_json(self):
        return [list(self.ground.labels_of(b)) for b in self.blocks]

    def __str__(self):
        parts = self.block_labels()
        if all(len(lab) == 1 for block in parts for lab in block):
            return "|".join("".join(block) for block in parts) if parts else "()"
        return "|".join("{%s}" % ",".join(block) for block in parts) if parts else "()"


@dataclass(frozen=True)
class Flag:
    """A strictly increasing chain of proper non-empty subsets of the ground set."""

    ground: GroundSet
    chain: tuple[int, ...]

    def __post_init__(self):
        full = self.ground.full_mask
        prev = 0
        for m in self.chain:
            if m == 0 or m == full:
                raise MalformedFlagError("chain member is empty or the full set")
            if (prev & m) != prev or prev == m:
                raise MalformedFlagError("chain is not strictly increasing")
            prev = m

    def subsets(self):
        return tuple(self.ground.labels_of(m) for m in self.chain)


def type_of(comp):
    return comp.type()


def flag_of(comp):
    """The flag of cumulative unions, with the terminal full set dropped."""
    return Flag(comp.ground, comp.prefix_masks()[:-1])


def composition_of_flag(flag, ground=None):
    """Inverse of flag_of: successive differences, topping out at the ground set."""
    if ground is None:
        ground = flag.ground
    if ground != flag.ground:
        raise GroundMismatchError("flag is not over the given ground set")
    blocks, prev = [], 0
    for m in flag.chain:
        blocks.append(m & ~prev)
        prev = m
    if prev != ground.full_mask:
        blocks.append(ground.full_mask & ~prev)
    elif ground.size == 0:
        pass
    return SetComposition(ground, tuple(blocks))


def _submasks_ascending(mask):
    subs = []
    s = mask
    while s:
        subs.append(s)
        s = (s - 1) & mask
    subs.reverse()
    return subs


def set_compositions(ground):
    """All set compositions of the ground set, by length then lexicographically
    on the tuple of block bitmasks."""
    n = ground.size
    if n == 0:
        yield SetComposition(ground, ())
        return

    def rec(rest, k):
        if k == 1:
            yield (rest,)
            return
        for b in _submasks_ascending(rest):
            rem = rest & ~b
            if rem.bit_count() < k - 1:
                continue
            for tail in rec(rem, k - 1):
                yield (b,) + tail

    full = ground.full_mask
    for k in range(1, n + 1):
        for blocks in rec(full, k):
            yield SetComposition(ground, blocks)


def coarsenings(comp):
    """All compositions obtained by merging runs of adjacent blocks (incl. comp)."""
    k = comp.length
    out = set()
    for cuts in itertools.product((0, 1), repeat=max(k - 1, 0)):
        blocks, cur = [], 0
        for i, b in enumerate(comp.blocks):
            cur |= b
            if i == k - 1 or cuts[i]:
                blocks.append(cur)
                cur = 0
        out.add(SetComposition(comp.ground, tuple(blocks)))
    return out


def coarsening_closure(comps):
    closed = set()
    for c in comps:
        closed |= coarsenings(c)
    return frozenset(closed)


def refines(fine, coarse):
    """True iff coarse is obtained from fine by merging adjacent blocks."""
    if fine.ground != coarse.ground:
        raise GroundMismatchError("compositions on different ground sets")
    i = 0
    for db in coarse.blocks:
        acc = 0
        while acc != db:
            if i >= len(fine.blocks) or (fine.blocks[i] & db) != fine.blocks[i]:
                return False
            acc |= fine.blocks[i]
            i += 1
    return i == len(fine.blocks)


def quasi_shuffles(comp_a, comp_b):
    """All interleavings of the two block sequences where one block from each
    side may merge; operands must have disjoint ground sets."""
    if set(comp_a.ground.labels) & set(comp_b.ground.labels):
        raise OverlappingGroundError("ground sets overlap")
    ground = GroundSet(comp_a.ground.labels + comp_b.ground.labels)
    shift = comp_a.ground.size
    a = comp_a.blocks
    b = tuple(m << shift for m in comp_b.blocks)
    out = []

    def rec(i, j, prefix):
        if i == len(a) and j == len(b):
            out.append(SetComposition(ground, prefix))
            return
        if i < len(a):
            rec(i + 1, j, prefix + (a[i],))
        if j < len(b):
            rec(i, j + 1, prefix + (b[j],))
        if i < len(a) and j < len(b):
            rec(i + 1, j + 1, prefix + (a[i] | b[j],))

    rec(0, 0, ())
    return out


def induced_composition(ground, point):
    """Level sets of a positive integer point, ordered by increasing value."""
    if set(point) != set(ground.labels):
        raise ValueError("point coordinates do not match the ground set")
    by_value = {}
    for lab, v in point.items():
        if v < 1:
            raise ValueError("coordinates must be >= 1")
        by_value[v] = by_value.get(v, 0) | (1 << ground._index[lab])
    return SetComposition(ground, tuple(by_value[v] for v in sorted(by_value)))


def label_subsets(labels):
    """All subsets of a label tuple, as frozensets, smallest first."""
    labels = tuple(labels)
    for r in range(len(labels) + 1):
        for combo in itertools.combinations(labels, r):
            yield frozenset(combo)
