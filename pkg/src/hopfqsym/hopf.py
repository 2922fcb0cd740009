"""Characters on Hopf species, convolution and inversion, the
composition-indexed quasisymmetric invariant, and exhaustive axiom checks.

Species elements are duck-typed: they carry a ``ground`` tuple of labels and
provide ``restrict(S)``, ``contract(S)`` (returning None where the partial
map is undefined), a total product via ``*``, and a hashable ``key()``.
Every summation treats an undefined restriction or contraction as killing
its term.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Protocol

from .combinat import BoundExceededError, GroundSet, set_compositions
from .qseries import LaurentPoly, ps, ps_gaussian, sps
from .qsym import QSym

GROUND_CAP = 8


class HopfElement(Protocol):
    ground: tuple

    def restrict(self, subset): ...

    def contract(self, subset): ...

    def key(self): ...


def _check_cap(labels, force):
    if len(labels) > GROUND_CAP and not force:
        raise BoundExceededError(
            "ground set of size %d exceeds the cap %d; pass force=True"
            % (len(labels), GROUND_CAP)
        )


class Character:
    """An integer-valued multiplicative functional, memoized per element.

    Values are deterministic and the memo is only ever written with the value
    just computed, so concurrent calls with equal arguments return equal
    values; no locking is needed under the interpreter's atomic dict writes.
    """

    __slots__ = ("name", "fn", "connected", "_memo")

    def __init__(self, name, fn, connected=True):
        self.name = name
        self.fn = fn
        self.connected = connected
        self._memo = {}

    def __call__(self, h):
        key = h.key()
        try:
            return self._memo[key]
        except KeyError:
            val = self.fn(h)
            self._memo[key] = val
            return val

    def __repr__(self):
        return "Character(%r)" % self.name


def zeta_character():
    """The character that is 1 on every element."""
    return Character("zeta", lambda h: 1)


def unit_character():
    """The convolution identity: 1 on the empty ground set, 0 otherwise."""
    return Character("unit", lambda h: 1 if not h.ground else 0)


def indicator_character(name, predicate):
    """The submonoid indicator: 1 on elements satisfying the predicate.

    The caller asserts the predicate is closed under product, restriction,
    and contraction.
    """
    return Character(name, lambda h: 1 if predicate(h) else 0)


def convolve(phi, psi_char, h):
    """(phi * psi)(h) = sum over subsets S of phi(h|_S) psi(h/S)."""
    labels = h.ground
    total = 0
    for r in range(len(labels) + 1):
        for combo in itertools.combinations(labels, r):
            s = frozenset(combo)
            left = h.restrict(s)
            if left is None:
                continue
            right = h.contract(s)
            if right is None:
                continue
            total += phi(left) * psi_char(right)
    return total


def invert(phi):
    """Group inverse of a connected character, computed recursively over
    proper subsets and memoized per element."""
    if not phi.connected:
        raise ValueError("only connected characters are invertible")
    inv = Character("inverse:%s" % phi.name, None)

    def fn(h):
        labels = h.ground
        if not labels:
            return 1
        total = 0
        for r in range(len(labels)):
            for combo in itertools.combinations(labels, r):
                s = frozenset(combo)
                left = h.restrict(s)
                if left is None:
                    continue
                right = h.contract(s)
                if right is None:
                    continue
                total += inv(left) * phi(right)
        return -total

    inv.fn = fn
    return inv


def minors(h, comp):
    """The minor sequence (h|_{S_i}) / S_{i-1} along a set composition, or
    None as soon as one step is undefined."""
    out = []
    prev = frozenset()
    acc = set()
    for block in comp.block_label_sets():
        acc |= block
        restricted = h.restrict(frozenset(acc))
        if restricted is None:
            return None
        minor = restricted.contract(prev)
        if minor is None:
            return None
        out.append(minor)
        prev = frozenset(acc)
    return out


def psi(phi, h, force=False):
    """The quasisymmetric invariant: sum over set compositions C of
    prod_i phi(i-th minor) times M_type(C)."""
    _check_cap(h.ground, force)
    ground = GroundSet(h.ground)
    acc = {}
    for comp in set_compositions(ground):
        ms = minors(h, comp)
        if ms is None:
            continue
        val = 1
        for m in ms:
            val *= phi(m)
            if val == 0:
                break
        if val == 0:
            continue
        t = comp.type()
        acc[t] = acc.get(t, 0) + val
    return QSym(acc)


def psi_via_colorings(phi, h, n):
    """Independent coloring-sum oracle: sum over all maps f: ground -> [n] of
    prod_i phi(i-th minor under f) * q^(sum (f(x)-1))."""
    labels = h.ground
    acc = {}
    for f in itertools.product(range(1, n + 1), repeat=len(labels)):
        weight = sum(f) - len(labels)
        val = 1
        prev = frozenset()
        defined = True
        for color in sorted(set(f)):
            cur = frozenset(lab for lab, c in zip(labels, f) if c <= color)
            restricted = h.restrict(cur)
            minor = restricted.contract(prev) if restricted is not None else None
            if minor is None:
                defined = False
                break
            val *= phi(minor)
            if val == 0:
                break
            prev = cur
        if defined and val:
            acc[weight] = acc.get(weight, 0) + val
    return LaurentPoly(acc)


def p_polynomial(phi, h, n, force=False):
    """ps of the invariant at n >= 0."""
    return ps(psi(phi, h, force=force), n)


def p_gaussian(phi, h, force=False):
    """The invariant's principal specialization as a Gaussian function; use
    .eval(n) for any integer n, including negatives."""
    return ps_gaussian(psi(phi, h, force=force))


def q_series(phi, h, cutoff, force=False):
    """Stable principal specialization of the invariant, truncated."""
    return sps(psi(phi, h, force=force), cutoff)


@dataclass
class AxiomReport:
    """Outcome of an exhaustive axiom scan over one element (or a pair)."""

    subject: str
    checked: int = 0
    vacuous: list = field(default_factory=list)
    one_sided: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def describe(self):
        if self.ok:
            return "%s: %d instances checked, %d vacuous (both sides undefined)" % (
                self.subject,
                self.checked,
                len(self.vacuous),
            )
        axiom, s, t = self.violations[0]
        return "%s: axiom %d violated at S=%r, T=%r" % (self.subject, axiom, s, t)


def _record(report, axiom, s_labels, t_labels, lhs, rhs, directional=False):
    report.checked += 1
    if lhs is None and rhs is None:
        report.vacuous.append((axiom, s_labels, t_labels))
        return
    if lhs is None and rhs is not None and directional:
        # the composite map is allowed to be more partial than the primitive
        report.one_sided.append((axiom, s_labels, t_labels))
        return
    if lhs is None or rhs is None or lhs != rhs:
        report.violations.append((axiom, s_labels, t_labels))


def check_hopf_axioms(h, force=False):
    """Exhaustively verify the restriction/contraction compatibilities:

    1. (h|_S)|_T = h|_T             for T <= S
    2. (h/T)/(S-T) = h/S            for T <= S
    3. (h|_S)/T = (h/T)|_(S-T)      for T <= S

    Instances where both sides are undefined pass vacuously and are recorded.
    In axioms 1 and 2, the composite left side has a smaller domain than the
    right side for partial species (restricting a poset to a non-ideal kills
    the composite while h|_0 stays defined), so a defined right side with an
    undefined left side passes and is recorded as one-sided; the reverse
    direction is a violation.  Axiom 3 must match definedness exactly.
    """
    labels = h.ground
    if len(labels) > 5 and not force:
        raise BoundExceededError("exhaustive axiom scan capped at 5 labels")
    report = AxiomReport(subject=repr(h))
    n = len(labels)
    restricted = {}
    contracted = {}
    for mask in range(1 << n):
        s = frozenset(labels[i] for i in range(n) if mask >> i & 1)
        restricted[mask] = h.restrict(s)
        contracted[mask] = h.contract(s)
    for smask in range(1 << n):
        s = frozenset(labels[i] for i in range(n) if smask >> i & 1)
        s_sorted = tuple(sorted(s))
        tmask = smask
        while True:
            t = frozenset(labels[i] for i in range(n) if tmask >> i & 1)
            t_sorted = tuple(sorted(t))
            diff = s - t
            hs, ht = restricted[smask], restricted[tmask]
            hqt, hqs = contracted[tmask], contracted[smask]
            lhs1 = hs.restrict(t) if hs is not None else None
            _record(report, 1, s_sorted, t_sorted, lhs1, ht, directional=True)
            lhs2 = hqt.contract(diff) if hqt is not None else None
            _record(report, 2, s_sorted, t_sorted, lhs2, hqs, directional=True)
            lhs3 = hs.contract(t) if hs is not None else None
            rhs3 = hqt.restrict(diff) if hqt is not None else None
            _record(report, 3, s_sorted, t_sorted, lhs3, rhs3)
            if tmask == 0:
                break
            tmask = (tmask - 1) & smask
    return report


def check_product_axioms(f, g):
    """Exhaustively verify, for every subset S of the combined ground set:

    4. (f*g)|_S = f|_(S & A) * g|_(S & B)
    5. (f*g)/S = f/(S & A) * g/(S & B)
    """
    prod = f * g
    a_labels = frozenset(f.ground)
    b_labels = frozenset(g.ground)
    report = AxiomReport(subject="%r * %r" % (f, g))
    labels = prod.ground
    for r in range(len(labels) + 1):
        for combo in itertools.combinations(labels, r):
            s = frozenset(combo)
            s_sorted = tuple(sorted(s))
            fa = f.restrict(s & a_labels)
            gb = g.restrict(s & b_labels)
            rhs4 = fa * gb if fa is not None and gb is not None else None
            _record(report, 4, s_sorted, (), prod.restrict(s), rhs4)
            fa = f.contract(s & a_labels)
            gb = g.contract(s & b_labels)
            rhs5 = fa * gb if fa is not None and gb is not None else None
            _record(report, 5, s_sorted, (), prod.contract(s), rhs5)
    return report
