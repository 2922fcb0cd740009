"""Quasisymmetric functions in the monomial basis, with integer coefficients."""

from __future__ import annotations

from collections import Counter


def quasi_shuffle_compositions(alpha, beta):
    """Overlapping-shuffle product of two integer compositions.

    Returns a dict mapping each resulting composition (a tuple) to its
    multiplicity.  At every step the head of either operand is emitted, or
    both heads merge into their sum.
    """
    if not alpha:
        return {tuple(beta): 1}
    if not beta:
        return {tuple(alpha): 1}
    a, rest_a = alpha[0], alpha[1:]
    b, rest_b = beta[0], beta[1:]
    res = Counter()
    for comp, c in quasi_shuffle_compositions(rest_a, beta).items():
        res[(a,) + comp] += c
    for comp, c in quasi_shuffle_compositions(alpha, rest_b).items():
        res[(b,) + comp] += c
    for comp, c in quasi_shuffle_compositions(rest_a, rest_b).items():
        res[(a + b,) + comp] += c
    return dict(res)


def _term_order(comp):
    return (sum(comp), comp)


class QSym:
    """A finitely supported integer combination of monomial basis elements M_alpha."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for comp, coeff in (terms or {}).items():
            comp = tuple(int(p) for p in comp)
            if any(p < 1 for p in comp):
                raise ValueError("composition parts must be positive: %r" % (comp,))
            if coeff:
                clean[comp] = clean.get(comp, 0) + int(coeff)
        self.terms = {c: v for c, v in clean.items() if v}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def monomial(cls, alpha):
        return cls({tuple(alpha): 1})

    def coefficient(self, alpha):
        return self.terms.get(tuple(alpha), 0)

    def is_zero(self):
        return not self.terms

    def max_weight(self):
        return max((sum(c) for c in self.terms), default=0)

    def is_homogeneous(self):
        return len({sum(c) for c in self.terms}) <= 1

    def __add__(self, other):
        other = _as_qsym(other)
        out = dict(self.terms)
        for c, v in other.terms.items():
            out[c] = out.get(c, 0) + v
        return QSym(out)

    __radd__ = __add__

    def __neg__(self):
        return QSym({c: -v for c, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_qsym(other))

    def __rsub__(self, other):
        return _as_qsym(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return QSym({c: v * other for c, v in self.terms.items()})
        other = _as_qsym(other)
        out = {}
        for ca, va in self.terms.items():
            for cb, vb in other.terms.items():
                for comp, mult in quasi_shuffle_compositions(ca, cb).items():
                    out[comp] = out.get(comp, 0) + va * vb * mult
        return QSym(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = QSym({(): other})
        return isinstance(other, QSym) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coproduct(self):
        """Deconcatenation coproduct: dict (beta, gamma) -> coefficient."""
        out = {}
        for comp, coeff in self.terms.items():
            for i in range(len(comp) + 1):
                key = (comp[:i], comp[i:])
                out[key] = out.get(key, 0) + coeff
        return {k: v for k, v in out.items() if v}

    def to_json_dict(self):
        terms = [
            {"composition": list(comp), "coeff": coeff}
            for comp, coeff in sorted(self.terms.items(), key=lambda kv: _term_order(kv[0]))
        ]
        return {"terms": terms}

    @classmethod
    def from_json_dict(cls, data):
        return cls({tuple(t["composition"]): t["coeff"] for t in data["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for comp, coeff in sorted(self.terms.items(), key=lambda kv: _term_order(kv[0])):
            name = "M(%s)" % ",".join(map(str, comp)) if comp else "1"
            bits.append("%d*%s" % (coeff, name))
        return " + ".join(bits)

    __repr__ = __str__


def _as_qsym(x):
    if isinstance(x, QSym):
        return x
    if isinstance(x, int):
        return QSym({(): x})
    raise TypeError("cannot interpret %r as a quasisymmetric function" % (x,))
