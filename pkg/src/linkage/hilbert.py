"""Hilbert series of graded modules and finitely supported graded functions."""

from __future__ import annotations

from dataclasses import dataclass, field


def _clean(d):
    return {k: v for k, v in sorted(d.items()) if v}


def _mul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return _clean(out)


def _div_one_minus(q, w):
    """Exact quotient of a Laurent polynomial by ``1 - t^w`` or ``None``."""
    if not q:
        return {}
    lo, hi = min(q), max(q)
    p = {}
    for k in range(lo, hi - w + 1):
        p[k] = q.get(k, 0) + p.get(k - w, 0)
    for k in range(hi - w + 1, hi + 1):
        if q.get(k, 0) + p.get(k - w, 0) != 0:
            return None
    return _clean(p)


@dataclass(frozen=True)
class GradedFunction:
    """Finitely supported map degree -> dimension (graded shadow of a finite-length module)."""

    values: dict = field(default_factory=dict)

    def __post_init__(self):
        vals = _clean(self.values)
        if any(v < 0 for v in vals.values()):
            raise ValueError("graded dimensions must be non-negative")
        object.__setattr__(self, "values", vals)

    def reversed(self):
        """Degree reversal j -> -j (graded Matlis duality)."""
        return GradedFunction({-k: v for k, v in self.values.items()})

    @property
    def length(self):
        return sum(self.values.values())

    def is_zero(self):
        return not self.values

    def __eq__(self, other):
        if not isinstance(other, GradedFunction):
            return NotImplemented
        return self.values == other.values

    def __hash__(self):
        return hash(tuple(self.values.items()))

    def to_json(self):
        return [[k, v] for k, v in self.values.items()]

    def __str__(self):
        if not self.values:
            return "0"
        return " + ".join(f"{v}*t^{k}" for k, v in self.values.items())


class HilbertSeries:
    """Rational Hilbert series ``numerator(t) / prod(1 - t^w_i)``.

    The numerator is a Laurent polynomial (twists may be negative) kept as a
    sorted dict exponent -> integer coefficient.
    """

    __slots__ = ("numerator", "weights")

    def __init__(self, numerator, weights):
        self.numerator = _clean(dict(numerator))
        self.weights = tuple(weights)

    def _same(self, other):
        if self.weights != other.weights:
            raise ValueError("Hilbert series over different gradings")

    def __add__(self, other):
        self._same(other)
        d = dict(self.numerator)
        for k, v in other.numerator.items():
            d[k] = d.get(k, 0) + v
        return HilbertSeries(d, self.weights)

    def __neg__(self):
        return HilbertSeries({k: -v for k, v in self.numerator.items()}, self.weights)

    def __sub__(self, other):
        return self + (-other)

    def shift(self, k):
        """Multiply by ``t^k``, i.e. the series of M(-k)."""
        return HilbertSeries({e + k: v for e, v in self.numerator.items()}, self.weights)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.weights == other.weights and self.numerator == other.numerator

    def __hash__(self):
        return hash((tuple(self.numerator.items()), self.weights))

    def is_zero(self):
        return not self.numerator

    @property
    def dim(self):
        """Pole order at t = 1; -1 for the zero series."""
        q = self.numerator
        if not q:
            return -1
        mult = 0
        while True:
            nxt = _div_one_minus(q, 1)
            if nxt is None:
                break
            q = nxt
            mult += 1
        return len(self.weights) - mult

    def _monomial_counts(self, top):
        counts = [0] * (top + 1)
        counts[0] = 1
        for w in self.weights:
            for k in range(w, top + 1):
                counts[k] += counts[k - w]
        return counts

    def coefficient(self, j):
        if not self.numerator:
            return 0
        top = j - min(self.numerator)
        if top < 0:
            return 0
        counts = self._monomial_counts(top)
        return sum(c * counts[j - e] for e, c in self.numerator.items() if 0 <= j - e <= top)

    def expansion(self, lo, hi):
        return [self.coefficient(j) for j in range(lo, hi + 1)]

    def graded_function(self):
        """The Hilbert function of a finite-length module (error otherwise)."""
        q = dict(self.numerator)
        for w in self.weights:
            q = _div_one_minus(q, w)
            if q is None:
                raise ValueError("Hilbert series is not a Laurent polynomial: module has positive dimension")
        return GradedFunction(q)

    def to_json(self):
        return {"numerator": [[k, v] for k, v in self.numerator.items()], "weights": list(self.weights)}

    def __str__(self):
        if not self.numerator:
            return "0"
        num = " + ".join(f"{v}*t^{k}" for k, v in self.numerator.items())
        den = "*".join(f"(1-t^{w})" for w in self.weights)
        return f"({num})/({den})"

    __repr__ = __str__


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def monomial_numerator(gens, weights):
    """Numerator of HS(S/J) over prod(1 - t^w) for the monomial ideal J = (gens)."""
    gens = _minimalize(gens)
    if not gens:
        return {0: 1}
    if not any(gens[0]):
        return {}
    n = len(weights)
    deg = lambda g: sum(w * e for w, e in zip(weights, g))
    support = [frozenset(i for i in range(n) if g[i]) for g in gens]
    counts = [0] * n
    for s in support:
        for i in s:
            counts[i] += 1
    best = max(range(n), key=lambda i: (counts[i], -i))
    if counts[best] <= 1:
        # pairwise coprime generators
        out = {0: 1}
        for g in gens:
            out = _mul(out, {0: 1, deg(g): -1})
        return out
    e = min(g[best] for g in gens if g[best])
    pivot = tuple(e if i == best else 0 for i in range(n))
    plus = [g for g in gens if not g[best]] + [pivot]
    colon = [tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens]
    a = monomial_numerator(plus, weights)
    b = monomial_numerator(colon, weights)
    out = dict(a)
    d = deg(pivot)
    for k, v in b.items():
        out[k + d] = out.get(k + d, 0) + v
    return _clean(out)
