"""Verification suites over the built-in corpus (or user-supplied elements).

Each suite re-derives one family of identities with independent code paths
and reports per-check pass/fail with the first counterexample found, for the
CLI's ``check`` command.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import corpus
from .ehrhart import (
    closed_cone_weight,
    ehrhart_qsym,
    euler_characteristic,
    lattice_count_box,
    lattice_count_simplex,
)
from .hilbert import EHRHART_SHIFT, hilbert_q, hilbert_unigraded
from .hopf import (
    check_hopf_axioms,
    check_product_axioms,
    convolve,
    invert,
    p_gaussian,
    p_polynomial,
    psi,
    psi_via_colorings,
    q_series,
)
from .qseries import LaurentPoly, SeriesTrunc, ps, ps1, sps
from .species import (
    coloring_complex,
    complex_product,
    gamma_complex,
    is_forbidden_complex,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _result(name, failures, checked):
    if failures:
        return CheckResult(name, False, "first counterexample: %s" % failures[0])
    return CheckResult(name, True, "%d instances" % checked)


def _small_hopf_corpus(elements=None):
    pool = elements if elements is not None else corpus.hopf_elements()
    return {k: v for k, v in pool.items() if len(v.ground) <= 4}


def _corpus_complexes():
    out = {}
    for name, x in corpus.builtin_complexes().items():
        if len(x.ground) <= 4:
            out[name] = x
    for name, g in corpus.builtin_graphs().items():
        out["coloring:" + name] = coloring_complex(g)
    for kname, pred, phi, name, h in corpus.submonoid_pairs():
        if len(h.ground) <= 4:
            out["canonical:%s:%s" % (kname, name)] = gamma_complex(pred, h)
    return out


# --- axioms -------------------------------------------------------------------


def _check_restriction_axioms(elements=None):
    failures, checked = [], 0
    for name, h in _small_hopf_corpus(elements).items():
        report = check_hopf_axioms(h)
        checked += report.checked
        if not report.ok:
            failures.append("%s: %s" % (name, report.describe()))
    return _result("restriction-contraction axioms (1-3)", failures, checked)


def _disjoint_pairs():
    graphs = corpus.builtin_graphs()
    posets = corpus.builtin_posets()
    matroids = corpus.builtin_matroids()
    return [
        ("edge2 * path3", graphs["edge2"], graphs["path3"]),
        ("point * edge2'", graphs["point"], graphs["edge2"].relabel({"a": "p", "b": "q"})),
        (
            "chain2 * fork'",
            posets["chain2"],
            posets["fork"].relabel({"x": "u", "y": "v", "z": "w"}),
        ),
        (
            "u12 * u23'",
            matroids["u12"],
            matroids["u23"].relabel({"a": "x", "b": "y", "c": "z"}),
        ),
    ]


def _check_product_axioms_suite(elements=None):
    failures, checked = [], 0
    for label, f, g in _disjoint_pairs():
        report = check_product_axioms(f, g)
        checked += report.checked
        if not report.ok:
            failures.append("%s: %s" % (label, report.describe()))
    return _result("product axioms (4-5)", failures, checked)


def _check_complex_monoid(elements=None):
    from .species import RelComplex

    failures, checked = [], 0
    a = RelComplex.make("1", [[["1"]]])
    b = RelComplex.make("ab", [[["a"], ["b"]]], [[["a", "b"]]])
    c = RelComplex.make("xy", [[["x"], ["y"]]])
    left = complex_product(complex_product(a, b), c)
    right = complex_product(a, complex_product(b, c))
    checked += 1
    if left.delta != right.delta or left.gamma != right.gamma:
        failures.append("associativity fails on three small complexes")
    unit = RelComplex.make((), [[]])
    for name, x in corpus.builtin_complexes().items():
        if len(x.ground) > 4:
            continue
        checked += 1
        prod = complex_product(x, unit)
        if prod.delta != x.delta or prod.gamma != x.gamma:
            failures.append("unit law fails on %s" % name)
    return _result("complex monoid product", failures, checked)


# --- identities ----------------------------------------------------------------


def _check_multiplicativity(elements=None):
    failures, checked = [], 0
    for label, f, g in _disjoint_pairs():
        phi = corpus.default_character_for(f)
        if type(f) is not type(g):
            continue
        checked += 1
        if psi(phi, f) * psi(phi, g) != psi(phi, f * g):
            failures.append("invariant not multiplicative on %s" % label)
        for n in range(4):
            checked += 1
            lhs = p_polynomial(phi, f * g, n)
            rhs = p_polynomial(phi, f, n) * p_polynomial(phi, g, n)
            if lhs != rhs:
                failures.append("box polynomial not multiplicative on %s, n=%d" % (label, n))
    return _result("multiplicativity", failures, checked)


def _check_convolution_identity(elements=None):
    failures, checked = [], 0
    for name, h in _small_hopf_corpus(elements).items():
        phi = corpus.default_character_for(h)
        size = len(h.ground)
        labels = h.ground
        for m in range(3):
            for n in range(3):
                checked += 1
                rhs = 0
                for r in range(size + 1):
                    for combo in itertools.combinations(labels, r):
                        s = frozenset(combo)
                        left = h.restrict(s)
                        right = h.contract(s)
                        if left is None or right is None:
                            continue
                        term = p_polynomial(phi, left, m) * p_polynomial(phi, right, n)
                        rhs = rhs + term.shifted(m * (size - len(s)))
                if p_polynomial(phi, h, m + n) != rhs:
                    failures.append("%s at (m,n)=(%d,%d)" % (name, m, n))
    return _result("convolution identity", failures, checked)


def _check_group_law(elements=None):
    failures, checked = [], 0
    for name, h in _small_hopf_corpus(elements).items():
        phi = corpus.default_character_for(h)
        inv = invert(phi)
        checked += 2
        expected = 1 if not h.ground else 0
        if convolve(phi, inv, h) != expected:
            failures.append("phi * inverse != unit on %s" % name)
        if invert(inv)(h) != phi(h):
            failures.append("double inverse differs on %s" % name)
    return _result("character group law", failures, checked)


def _check_coloring_theorem(elements=None):
    failures, checked = [], 0
    for name, h in _small_hopf_corpus(elements).items():
        phi = corpus.default_character_for(h)
        invariant = psi(phi, h)
        for n in range(5):
            checked += 1
            if ps(invariant, n) != psi_via_colorings(phi, h, n):
                failures.append("%s at n=%d" % (name, n))
    return _result("coloring expansion", failures, checked)


def _check_invariant_equals_cone_counting(elements=None):
    failures, checked = [], 0
    for kname, pred, phi, name, h in corpus.submonoid_pairs():
        if len(h.ground) > 4:
            continue
        checked += 1
        x = gamma_complex(pred, h)
        if not is_forbidden_complex(x):
            failures.append("canonical complex of (%s, %s) not forbidden" % (kname, name))
        if psi(phi, h) != ehrhart_qsym(x):
            failures.append("invariant differs from cone count on (%s, %s)" % (kname, name))
    return _result("invariant = cone generating function", failures, checked)


# --- ehrhart-hilbert -------------------------------------------------------------


def _check_box_counts(elements=None):
    failures, checked = [], 0
    for name, x in _corpus_complexes().items():
        e = ehrhart_qsym(x)
        expansion = ps1(e)
        for n in range(4):
            checked += 1
            if lattice_count_box(x, n) != expansion.eval(n + 1):
                failures.append("unweighted box count on %s at n=%d" % (name, n))
            w = lattice_count_box(x, n, weighted=True)
            expected = ps(e, n + 1)
            if w != expected:
                failures.append("weighted box count on %s at n=%d" % (name, n))
    return _result("box lattice counts", failures, checked)


def _check_simplex_counts(elements=None):
    failures, checked = [], 0
    for name, x in _corpus_complexes().items():
        size = len(x.ground)
        series = sps(ehrhart_qsym(x), 8)
        for m in range(size, 9):
            checked += 1
            if lattice_count_simplex(x, m) != series.coefficient(m - size):
                failures.append("simplex count on %s at m=%d" % (name, m))
    return _result("simplex lattice counts", failures, checked)


def _check_hilbert_theorem(elements=None):
    failures, checked = [], 0
    for name, x in _corpus_complexes().items():
        e = ehrhart_qsym(x)
        expansion = ps1(e)
        size = len(x.ground)
        for n in range(6):
            checked += 2
            if hilbert_unigraded(x, n) != expansion.eval(n + EHRHART_SHIFT):
                failures.append("unigraded identity on %s at n=%d" % (name, n))
            lhs = hilbert_q(x, n).subs_qinv().shifted(n * size)
            if lhs != ps(e, n + EHRHART_SHIFT):
                failures.append("q-twisted identity on %s at n=%d" % (name, n))
    return _result("hilbert = lattice counting", failures, checked)


# --- reciprocity ------------------------------------------------------------------


def _check_gaussian_reciprocity(elements=None):
    # P_phi(h, q, -n) = q^(-|I|) P_inverse(h, 1/q, n): the left side counts
    # negative colors, so its powers of q are negative.
    failures, checked = [], 0
    for name, h in _small_hopf_corpus(elements).items():
        phi = corpus.default_character_for(h)
        inv = invert(phi)
        f = p_gaussian(phi, h)
        size = len(h.ground)
        for n in range(1, 5):
            checked += 1
            rhs = p_polynomial(inv, h, n).subs_qinv().shifted(-size)
            if f.eval(-n) != rhs:
                failures.append("%s at n=%d" % (name, n))
    return _result("negative-argument reciprocity", failures, checked)


def _check_sps_reciprocity(elements=None):
    # Q_phi(h, 1/q) = q^|I| Q_inverse(h, q).  Both stable series are rational
    # with denominator D = prod(1 - q^s), s = 1..|I|; multiplying the
    # truncations by D recovers the numerator polynomials exactly (their
    # degree is at most |I|^2 < cutoff).  D(1/q) = (-1)^|I| q^(-T) D(q) with
    # T = |I|(|I|+1)/2, so on numerators the identity reads
    # (-1)^|I| q^T N_phi(1/q) = q^|I| N_inv(q).
    failures, checked = [], 0
    cutoff = 20
    for name, h in _small_hopf_corpus(elements).items():
        phi = corpus.default_character_for(h)
        inv = invert(phi)
        size = len(h.ground)
        window = SeriesTrunc.one(cutoff)
        for s in range(1, size + 1):
            window = window * (SeriesTrunc.one(cutoff) - SeriesTrunc.monomial(s, cutoff))
        num_phi = q_series(phi, h, cutoff) * window
        num_inv = q_series(inv, h, cutoff) * window
        degree_bound = size * size
        checked += 1
        if any(num_phi.coeffs[degree_bound + 1 :]) or any(num_inv.coeffs[degree_bound + 1 :]):
            failures.append("numerator degree bound broken on %s" % name)
            continue
        poly_phi = LaurentPoly({e: c for e, c in enumerate(num_phi.coeffs)})
        poly_inv = LaurentPoly({e: c for e, c in enumerate(num_inv.coeffs)})
        lhs = poly_phi.subs_qinv().shifted(size * (size + 1) // 2) * ((-1) ** size)
        rhs = poly_inv.shifted(size)
        if lhs != rhs:
            failures.append("series reciprocity fails on %s" % name)
    return _result("stable-series reciprocity", failures, checked)


def _check_euler(elements=None):
    failures, checked = [], 0
    for kname, pred, phi, name, h in corpus.submonoid_pairs():
        if len(h.ground) > 4:
            continue
        checked += 1
        x = gamma_complex(pred, h)
        if euler_characteristic(x) != invert(phi)(h):
            failures.append("euler characteristic differs on (%s, %s)" % (kname, name))
        size = len(h.ground)
        f = p_gaussian(phi, h)
        for n in range(1, 3):
            checked += 1
            total = 0
            for values in itertools.product(range(1, n + 1), repeat=size):
                total += closed_cone_weight(x, dict(zip(h.ground, values)))
            if total != (-1) ** size * f.eval(-n).at_one():
                failures.append("closed-cone count differs on (%s, %s), n=%d" % (kname, name, n))
    return _result("euler characteristic corollary", failures, checked)


SUITES = {
    "axioms": (_check_restriction_axioms, _check_product_axioms_suite, _check_complex_monoid),
    "identities": (
        _check_multiplicativity,
        _check_convolution_identity,
        _check_group_law,
        _check_coloring_theorem,
        _check_invariant_equals_cone_counting,
    ),
    "ehrhart-hilbert": (_check_box_counts, _check_simplex_counts, _check_hilbert_theorem),
    "reciprocity": (_check_gaussian_reciprocity, _check_sps_reciprocity, _check_euler),
}


def run_suite(suite, elements=None, jobs=1):
    """Run one named suite; returns a list of CheckResult in a fixed order."""
    try:
        checks = SUITES[suite]
    except KeyError:
        raise ValueError("unknown suite %r (known: %s)" % (suite, ", ".join(sorted(SUITES))))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(fn, elements) for fn in checks]
            return [f.result() for f in futures]
    return [fn(elements) for fn in checks]
