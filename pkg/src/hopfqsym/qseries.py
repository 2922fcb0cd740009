"""Exact arithmetic in q.

Laurent polynomials with integer coefficients, q-binomial coefficients, the
shifted difference operators D_m(f)(n) = f(n+1) - q^m f(n), window-based
Gaussian polynomial functions evaluable on all of Z, truncated power series
for the stable specialization, and the specializations ps / ps1 / sps of
quasisymmetric functions.
"""

from __future__ import annotations

import functools
import itertools
import math


class LaurentPoly:
    """An integer-coefficient polynomial in q and q^-1, stored sparsely."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        data = {}
        for e, c in (coeffs or {}).items():
            if c:
                data[int(e)] = int(c)
        self.coeffs = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def term(cls, coeff, exp):
        return cls({exp: coeff})

    @classmethod
    def q(cls, exp=1):
        return cls({exp: 1})

    def coefficient(self, exp):
        return self.coeffs.get(exp, 0)

    @property
    def is_zero(self):
        return not self.coeffs

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else None

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else None

    def __add__(self, other):
        other = _as_poly(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        other = _as_poly(other)
        out = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = _as_poly(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def shifted(self, k):
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def subs_qinv(self):
        """Substitute q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def at_one(self):
        """Evaluate at q = 1."""
        return sum(self.coeffs.values())

    def divide_exact_monomial(self, coeff, exp):
        """Exact division by coeff * q^exp; every coefficient must divide."""
        out = {}
        for e, c in self.coeffs.items():
            if c % coeff:
                raise ArithmeticError("inexact monomial division")
            out[e - exp] = c // coeff
        return LaurentPoly(out)

    def to_json(self):
        return [[e, c] for e, c in sorted(self.coeffs.items())]

    @classmethod
    def from_json(cls, data):
        return cls({e: c for e, c in data})

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for e, c in sorted(self.coeffs.items()):
            if e == 0:
                bits.append(str(c))
            else:
                var = "q" if e == 1 else "q^%d" % e
                bits.append(var if c == 1 else "-%s" % var if c == -1 else "%d%s" % (c, var))
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


def _as_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    raise TypeError("cannot interpret %r as a Laurent polynomial" % (x,))


@functools.cache
def qbinomial(n, k):
    """The q-binomial coefficient, via the Pascal recurrence
    [n, k] = [n-1, k-1] + q^k * [n-1, k]."""
    if n < 0 or k < 0:
        raise ValueError("qbinomial requires natural arguments")
    if k > n:
        return LaurentPoly.zero()
    if k == 0:
        return LaurentPoly.one()
    return qbinomial(n - 1, k - 1) + qbinomial(n - 1, k).shifted(k)


def d_op(m, f):
    """The difference operator D_m: n |-> f(n+1) - q^m f(n)."""

    def df(n):
        return _as_poly(f(n + 1)) - _as_poly(f(n)).shifted(m)

    return df


def _d_chain_window(values, d):
    vals = [_as_poly(v) for v in values]
    for m in range(d + 1):
        vals = [vals[i + 1] - vals[i].shifted(m) for i in range(len(vals) - 1)]
    return vals


def is_gaussian(values, d):
    """True iff the composite D_d o ... o D_0 kills the window of consecutive
    values; the window must contain at least 2(d+1) entries."""
    values = list(values)
    if len(values) < 2 * (d + 1):
        raise ValueError("window too short: need %d values, got %d" % (2 * (d + 1), len(values)))
    return all(v.is_zero for v in _d_chain_window(values, d))


@functools.cache
def shift_annihilator(d):
    """Coefficients c[0..d+1] of prod_{m=0}^{d} (E - q^m), monic in the shift E."""
    coeffs = [LaurentPoly.one()]
    for m in range(d + 1):
        qm = LaurentPoly.q(m)
        new = [LaurentPoly.zero()] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k + 1] = new[k + 1] + c
            new[k] = new[k] - c * qm
        coeffs = new
    return tuple(coeffs)


class GaussianFn:
    """A function Z -> LaurentPoly of bounded degree, represented by the value
    window f(0), ..., f(d); other values come from the order-(d+1) recurrence
    prod_{m=0}^{d} (E - q^m) f = 0, run forward or backward."""

    __slots__ = ("degree", "window", "_values")

    def __init__(self, degree, window):
        window = tuple(_as_poly(v) for v in window)
        if degree < 0 or len(window) != degree + 1:
            raise ValueError("window must hold exactly degree+1 values")
        self.degree = degree
        self.window = window
        self._values = dict(enumerate(window))

    def eval(self, n):
        if n in self._values:
            return self._values[n]
        c = shift_annihilator(self.degree)
        order = self.degree + 1
        hi = max(self._values)
        while hi < n:
            base = hi + 1 - order
            val = LaurentPoly.zero()
            for k in range(order):
                val = val - c[k] * self._values[base + k]
            hi += 1
            self._values[hi] = val
        lo = min(self._values)
        # c[0] = (-1)^{d+1} q^{d(d+1)/2} is an invertible monomial.
        sign = -1 if order % 2 else 1
        texp = self.degree * (self.degree + 1) // 2
        while lo > n:
            base = lo - 1
            val = LaurentPoly.zero()
            for k in range(1, order + 1):
                val = val - c[k] * self._values[base + k]
            self._values[base] = val.divide_exact_monomial(sign, texp)
            lo -= 1
        return self._values[n]

    def __eq__(self, other):
        return (
            isinstance(other, GaussianFn)
            and self.degree == other.degree
            and self.window == other.window
        )

    def __hash__(self):
        return hash((self.degree, self.window))

    def to_json(self):
        return {"degree": self.degree, "window": [v.to_json() for v in self.window]}

    def __repr__(self):
        return "GaussianFn(degree=%d, window=%r)" % (self.degree, list(self.window))


class QBinomialForm:
    """A degree-d Gaussian function displayed as sum_j c_j(q) * qbin(n+j, d)."""

    __slots__ = ("degree", "qcoeffs")

    def __init__(self, degree, qcoeffs):
        qcoeffs = tuple(_as_poly(c) for c in qcoeffs)
        if len(qcoeffs) != degree + 1:
            raise ValueError("need degree+1 coefficients")
        self.degree = degree
        self.qcoeffs = qcoeffs

    def eval(self, n):
        total = LaurentPoly.zero()
        for j, c in enumerate(self.qcoeffs):
            total = total + c * qbinomial(n + j, self.degree)
        return total

    def __eq__(self, other):
        return (
            isinstance(other, QBinomialForm)
            and self.degree == other.degree
            and self.qcoeffs == other.qcoeffs
        )

    def to_json(self):
        return {"degree": self.degree, "coeffs": [c.to_json() for c in self.qcoeffs]}

    def __repr__(self):
        return "QBinomialForm(degree=%d, coeffs=%r)" % (self.degree, list(self.qcoeffs))


def to_qbinomial_basis(f):
    """Rewrite a GaussianFn in the shifted q-binomial basis qbin(n+j, d).

    The interpolation matrix qbin(i+j, d), i = 0..d, vanishes for i+j < d and
    has qbin(d, d) = 1 on the antidiagonal, so the system is unitriangular and
    back-substitution stays inside Laurent polynomials; no fractions arise.
    """
    d = f.degree
    coeffs = [None] * (d + 1)
    for i in range(d + 1):
        val = f.eval(i)
        for j in range(d - i + 1, d + 1):
            val = val - coeffs[j] * qbinomial(i + j, d)
        coeffs[d - i] = val
    form = QBinomialForm(d, coeffs)
    for i in range(d + 1):
        if form.eval(i) != f.eval(i):
            raise AssertionError("q-binomial interpolation failed to reproduce the window")
    return form


class SeriesTrunc:
    """A power series in q truncated at a fixed cutoff, with integer coefficients."""

    __slots__ = ("cutoff", "coeffs")

    def __init__(self, cutoff, coeffs=None):
        if cutoff < 0:
            raise ValueError("cutoff must be >= 0")
        coeffs = list(coeffs or [])
        if len(coeffs) > cutoff + 1:
            raise ValueError("too many coefficients for the cutoff")
        coeffs += [0] * (cutoff + 1 - len(coeffs))
        self.cutoff = cutoff
        self.coeffs = tuple(int(c) for c in coeffs)

    @classmethod
    def zero(cls, cutoff):
        return cls(cutoff)

    @classmethod
    def one(cls, cutoff):
        return cls(cutoff, [1])

    @classmethod
    def monomial(cls, exp, cutoff):
        if exp < 0:
            raise ValueError("series exponents must be >= 0")
        coeffs = [0] * (cutoff + 1)
        if exp <= cutoff:
            coeffs[exp] = 1
        return cls(cutoff, coeffs)

    @classmethod
    def geometric(cls, a, cutoff):
        """1 / (1 - q^a) truncated."""
        if a < 1:
            raise ValueError("geometric factor needs a >= 1")
        coeffs = [1 if m % a == 0 else 0 for m in range(cutoff + 1)]
        return cls(cutoff, coeffs)

    @classmethod
    def from_laurent(cls, poly, cutoff):
        if any(e < 0 for e in poly.coeffs):
            raise ValueError("negative exponents cannot be truncated to a power series")
        coeffs = [0] * (cutoff + 1)
        for e, c in poly.coeffs.items():
            if e <= cutoff:
                coeffs[e] = c
        return cls(cutoff, coeffs)

    def coefficient(self, m):
        if m < 0 or m > self.cutoff:
            raise IndexError("coefficient outside the truncation window")
        return self.coeffs[m]

    def _match(self, other):
        if isinstance(other, int):
            other = SeriesTrunc(self.cutoff, [other])
        if not isinstance(other, SeriesTrunc):
            raise TypeError("cannot combine with %r" % (other,))
        if other.cutoff != self.cutoff:
            raise ValueError("cutoff mismatch: %d vs %d" % (self.cutoff, other.cutoff))
        return other

    def __add__(self, other):
        other = self._match(other)
        return SeriesTrunc(self.cutoff, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return SeriesTrunc(self.cutoff, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._match(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return SeriesTrunc(self.cutoff, [c * other for c in self.coeffs])
        other = self._match(other)
        out = [0] * (self.cutoff + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(self.cutoff + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return SeriesTrunc(self.cutoff, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, SeriesTrunc)
            and self.cutoff == other.cutoff
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.cutoff, self.coeffs))

    def to_json(self):
        return {"cutoff": self.cutoff, "coeffs": list(self.coeffs)}

    def __repr__(self):
        return "SeriesTrunc(cutoff=%d, coeffs=%r)" % (self.cutoff, list(self.coeffs))


# ---------------------------------------------------------------------------
# Specializations of quasisymmetric functions.
# ---------------------------------------------------------------------------


@functools.cache
def _ps_monomial(alpha, n):
    """ps(M_alpha)(n) = sum over 0 <= i_1 < ... < i_k <= n-1 of q^(sum alpha_j i_j)."""
    out = {}
    k = len(alpha)
    for idx in itertools.combinations(range(n), k):
        e = sum(a * i for a, i in zip(alpha, idx))
        out[e] = out.get(e, 0) + 1
    return LaurentPoly(out)


def ps(qsym, n):
    """Principal specialization: substitute x_i = q^(i-1) for i <= n, 0 beyond."""
    if n < 0:
        raise ValueError("ps needs n >= 0; use ps_gaussian(...).eval for negative n")
    total = LaurentPoly.zero()
    for alpha, coeff in qsym.terms.items():
        total = total + _ps_monomial(alpha, n) * coeff
    return total


def ps_gaussian(qsym):
    """The Gaussian function n |-> ps(Q)(n), windowed at degree max-weight."""
    d = qsym.max_weight()
    return GaussianFn(d, [ps(qsym, i) for i in range(d + 1)])


def binom_int(n, k):
    """Binomial coefficient as a polynomial in n, exact on all integers."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    den = math.factorial(k)
    if num % den:
        raise ArithmeticError("binomial product not divisible by k!")
    return num // den


class BinomialPoly:
    """An integer combination of binomial coefficients C(n, j), evaluable on Z."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {int(j): int(c) for j, c in (coeffs or {}).items() if c}

    def eval(self, n):
        return sum(c * binom_int(n, j) for j, c in self.coeffs.items())

    def __eq__(self, other):
        return isinstance(other, BinomialPoly) and self.coeffs == other.coeffs

    def to_json(self):
        return [[j, c] for j, c in sorted(self.coeffs.items())]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            "%d*C(n,%d)" % (c, j) for j, c in sorted(self.coeffs.items())
        )


def ps1(qsym):
    """Principal specialization at q = 1: ps1(M_alpha)(n) = C(n, len(alpha))."""
    coeffs = {}
    for alpha, coeff in qsym.terms.items():
        j = len(alpha)
        coeffs[j] = coeffs.get(j, 0) + coeff
    return BinomialPoly(coeffs)


def _suffix_sums(alpha):
    out, acc = [], 0
    for a in reversed(alpha):
        acc += a
        out.append(acc)
    out.reverse()
    return out


def sps(qsym, cutoff):
    """Stable principal specialization, truncated at q^cutoff.

    Uses the closed form sps(M_alpha) = q^(sum_j (j-1) alpha_j) /
    prod_j (1 - q^(alpha_j + ... + alpha_k)); the suffix sums are strictly
    decreasing so each factor appears once.
    """
    total = SeriesTrunc.zero(cutoff)
    for alpha, coeff in qsym.terms.items():
        shift = sum(j * a for j, a in enumerate(alpha))
        if shift > cutoff:
            continue
        term = SeriesTrunc.monomial(shift, cutoff)
        for s in _suffix_sums(alpha):
            term = term * SeriesTrunc.geometric(s, cutoff)
        total = total + term * coeff
    return total


def sps_monomial_oracle(alpha, cutoff):
    """Definitional sps(M_alpha) by direct enumeration of increasing index
    tuples; used to validate the closed form."""
    out = [0] * (cutoff + 1)
    k = len(alpha)
    if k == 0:
        out[0] = 1
        return SeriesTrunc(cutoff, out)
    # exponents are sum alpha_j * e_j with e_1 < ... < e_k; each e_j <= cutoff
    for idx in itertools.combinations(range(cutoff + 1), k):
        e = sum(a * i for a, i in zip(alpha, idx))
        if e <= cutoff:
            out[e] += 1
    return SeriesTrunc(cutoff, out)
