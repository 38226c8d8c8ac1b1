"""Prime fields, graded polynomial rings, free modules and homogeneous matrices.

Terms are stored internally as *keys*: tuples ``(comp, -deg, e_n, ..., e_1)``.
Python tuple order on keys is the reverse of the module order
(position-over-term, lower component first, then grevlex), so the leading
term of a vector is ``min(vec)`` and keys can sit directly in a heap.
Multiplying a term by a monomial is componentwise addition of keys.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from operator import add

from .errors import HomogeneityError, InputError, PreconditionError, RingMismatchError

DEFAULT_CHAR = 32003


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


@dataclass(frozen=True)
class AmbientRing:
    """Graded polynomial ring k[x_1..x_n] over F_p (``char=0`` selects QQ)."""

    names: tuple
    weights: tuple = None
    char: int = DEFAULT_CHAR
    order: str = "grevlex"

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise InputError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise InputError(f"duplicate variable names in {names}")
        for name in names:
            if not name.isidentifier():
                raise InputError(f"bad variable name {name!r}")
        weights = (1,) * len(names) if self.weights is None else tuple(int(w) for w in self.weights)
        if len(weights) != len(names) or any(w < 1 for w in weights):
            raise InputError("variable weights must be positive, one per variable")
        object.__setattr__(self, "weights", weights)
        if self.char != 0 and not is_prime(self.char):
            raise InputError(f"characteristic {self.char} is not prime")
        if self.order != "grevlex":
            raise InputError("computations use grevlex (position-over-term for modules)")

    @property
    def n(self):
        return len(self.names)

    # coefficient field

    def coef(self, c):
        if self.char:
            return int(c) % self.char
        return Fraction(c)

    def inv(self, c):
        if not c:
            raise ZeroDivisionError("inverse of zero")
        if self.char:
            return pow(c, self.char - 2, self.char)
        return 1 / Fraction(c)

    def signed(self, c):
        """Symmetric representative, used only for printing."""
        if self.char and c > self.char // 2:
            return c - self.char
        return c

    # monomials and keys

    def deg(self, exps):
        return sum(w * e for w, e in zip(self.weights, exps))

    def key(self, exps, comp=0):
        return (comp, -self.deg(exps)) + tuple(reversed(exps))

    @staticmethod
    def exps(key):
        return tuple(reversed(key[2:]))

    @staticmethod
    def key_deg(key):
        return -key[1]

    def unit_key(self, comp=0):
        return (comp, 0) + (0,) * self.n

    def lcm_key(self, a, b):
        es = tuple(max(x, y) for x, y in zip(a[2:], b[2:]))
        w = self.weights[::-1]
        return (a[0], -sum(x * y for x, y in zip(w, es))) + es

    def var(self, name):
        return Polynomial.from_exps(self, {self._index(name): 1})

    def gens(self):
        return [self.var(x) for x in self.names]

    def _index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}") from None

    def one(self):
        return Polynomial(self, {(0,) * self.n: 1})

    def zero(self):
        return Polynomial(self, {})

    def poly(self, text):
        return parse_polynomial(text, self)

    def __str__(self):
        vs = " ".join(f"{x}:{w}" for x, w in zip(self.names, self.weights))
        return f"char {self.char}; vars {vs}"


@dataclass(frozen=True)
class Monomial:
    exponents: tuple
    component: int = 0

    def degree(self, ring):
        return ring.deg(self.exponents)


def monomial_compare(a, b, ring, order="grevlex"):
    """Return 1, 0 or -1 as ``a`` is greater than, equal to or smaller than ``b``.

    ``order`` is one of ``grevlex``, ``lex`` or ``pot`` (position over term,
    lower component index wins, ties by grevlex).
    """
    if len(a.exponents) != len(b.exponents) or len(a.exponents) != ring.n:
        raise InputError("monomials over different numbers of variables")
    if order == "pot":
        if a.component != b.component:
            return 1 if a.component < b.component else -1
        order = "grevlex"
    if order == "lex":
        ka, kb = a.exponents, b.exponents
        return (ka > kb) - (ka < kb)
    if order != "grevlex":
        raise InputError(f"unknown order {order!r}")
    ka, kb = ring.key(a.exponents), ring.key(b.exponents)
    return (ka < kb) - (ka > kb)


# --- vector helpers (engine representation: dict key -> coeff) ----------------


def vec_axpy(target, vec, c, shift, p):
    """target += c * shift * vec, in place; ``shift`` is a key with comp offset."""
    if p:
        for k, a in vec.items():
            t = tuple(map(add, k, shift))
            v = (target.get(t, 0) + c * a) % p
            if v:
                target[t] = v
            else:
                target.pop(t, None)
    else:
        for k, a in vec.items():
            t = tuple(map(add, k, shift))
            v = target.get(t, 0) + c * a
            if v:
                target[t] = v
            else:
                target.pop(t, None)
    return target


def vec_mul_poly(vec, poly, p, comp_shift=0):
    """Product of a vector and a polynomial (both as key dicts)."""
    out = {}
    for k, c in poly.items():
        shift = (k[0] + comp_shift,) + k[1:]
        vec_axpy(out, vec, c, shift, p)
    return out


def vec_add(a, b, p, c=1):
    out = dict(a)
    z = (0,) * len(next(iter(b))) if b else None
    if b:
        vec_axpy(out, b, c, z, p)
    return out


def vec_shift_comp(vec, offset):
    return {(k[0] + offset,) + k[1:]: c for k, c in vec.items()}


def vec_split(vec, cut):
    """Split a vector into components ``< cut`` and ``>= cut`` (second one re-indexed)."""
    lo, hi = {}, {}
    for k, c in vec.items():
        if k[0] < cut:
            lo[k] = c
        else:
            hi[(k[0] - cut,) + k[1:]] = c
    return lo, hi


def vec_degree(vec, twists):
    k = next(iter(vec))
    return -k[1] + twists[k[0]]


class Polynomial:
    """A polynomial of the ambient ring; terms live in a dict exps -> coeff."""

    __slots__ = ("ring", "_t")

    def __init__(self, ring, terms=None):
        self.ring = ring
        t = {}
        for e, c in (terms or {}).items():
            c = ring.coef(c)
            if c:
                t[tuple(e)] = c
        self._t = t

    @classmethod
    def from_exps(cls, ring, powers, coeff=1):
        e = [0] * ring.n
        for i, k in powers.items():
            e[i] = k
        return cls(ring, {tuple(e): coeff})

    @classmethod
    def from_keys(cls, ring, kd):
        p = cls.__new__(cls)
        p.ring = ring
        p._t = {ring.exps(k): c for k, c in kd.items()}
        return p

    def to_keys(self, comp=0):
        r = self.ring
        return {r.key(e, comp): c for e, c in self._t.items()}

    @property
    def terms(self):
        """(Monomial, coeff) pairs, largest term first."""
        r = self.ring
        items = sorted(self._t.items(), key=lambda ec: r.key(ec[0]))
        return [(Monomial(e), c) for e, c in items]

    def is_zero(self):
        return not self._t

    def is_constant(self):
        return all(not any(e) for e in self._t)

    def degrees(self):
        return {self.ring.deg(e) for e in self._t}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise HomogeneityError(f"{self} is not homogeneous")
        return ds.pop()

    def leading_term(self):
        return self.terms[0] if self._t else None

    def _check(self, other):
        if isinstance(other, int):
            return Polynomial(self.ring, {(0,) * self.ring.n: other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError("polynomials over different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        t = dict(self._t)
        for e, c in other._t.items():
            t[e] = t.get(e, 0) + c
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        t = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = tuple(map(add, e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Polynomial(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InputError("exponents must be non-negative integers")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._check(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __str__(self):
        if not self._t:
            return "0"
        r = self.ring
        out = []
        for mono, c in self.terms:
            c = r.signed(c)
            factors = []
            for name, k in zip(r.names, mono.exponents):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            body = "*".join(factors)
            neg = c < 0
            a = -c if neg else c
            if not body:
                s = str(a)
            elif a == 1:
                s = body
            else:
                s = f"{a}*{body}"
            if not out:
                out.append(("-" if neg else "") + s)
            else:
                out.append((" - " if neg else " + ") + s)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


def parse_polynomial(text, ring):
    """Parse ``text`` (integers, variables, ``+ - * ^`` and parentheses)."""
    if not isinstance(text, str):
        raise InputError("polynomial text must be a string")
    src = text.strip().replace("^", "**")
    if not src:
        raise InputError("empty polynomial")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise InputError(f"malformed polynomial {text!r}") from exc

    def walk(node):
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise InputError(f"non-integer constant in {text!r}")
            return Polynomial(ring, {(0,) * ring.n: node.value})
        if isinstance(node, ast.Name):
            return ring.var(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                e = node.right
                if isinstance(e, ast.UnaryOp) or not (
                    isinstance(e, ast.Constant) and type(e.value) is int
                ):
                    raise InputError(f"exponents must be non-negative integers in {text!r}")
                return walk(node.left) ** e.value
            ops = {ast.Add: lambda a, b: a + b, ast.Sub: lambda a, b: a - b, ast.Mult: lambda a, b: a * b}
            for op, fn in ops.items():
                if isinstance(node.op, op):
                    return fn(walk(node.left), walk(node.right))
        raise InputError(f"unsupported syntax in {text!r}")

    return walk(tree.body)


def as_polynomial(x, ring):
    if isinstance(x, Polynomial):
        if x.ring != ring:
            raise RingMismatchError("polynomial over a different ring")
        return x
    if isinstance(x, int):
        return Polynomial(ring, {(0,) * ring.n: x})
    return parse_polynomial(x, ring)


@dataclass(frozen=True)
class FreeModule:
    """Graded free module; ``twists[j]`` is the degree of the j-th basis element."""

    ring: AmbientRing
    twists: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(t) for t in self.twists))

    @property
    def rank(self):
        return len(self.twists)

    def dual(self):
        return FreeModule(self.ring, tuple(-t for t in self.twists))

    def __add__(self, other):
        return FreeModule(self.ring, self.twists + other.twists)


class GradedMatrix:
    """Homogeneous matrix ``source -> target``; columns stored as key dicts.

    Entry (i, j) must be homogeneous of degree ``source[j] - target[i]``.
    """

    __slots__ = ("ring", "target", "source", "cols")

    def __init__(self, ring, target, source, cols, check=True):
        self.ring = ring
        self.target = tuple(target)
        self.source = tuple(source)
        self.cols = tuple(cols)
        if len(self.cols) != len(self.source):
            raise InputError("number of columns does not match the source rank")
        if check:
            self._check()

    def _check(self):
        r = len(self.target)
        for j, col in enumerate(self.cols):
            for k in col:
                if not 0 <= k[0] < r:
                    raise InputError("column entry outside the target")
                if -k[1] != self.source[j] - self.target[k[0]]:
                    raise HomogeneityError(
                        f"entry ({k[0]},{j}) has degree {-k[1]}, expected "
                        f"{self.source[j] - self.target[k[0]]}"
                    )

    @classmethod
    def from_rows(cls, ring, rows, target=None, source=None):
        """Build from a list of rows of polynomials (or strings).

        Missing column twists are inferred from the first nonzero entry; an
        all-zero column needs an explicit ``source``.
        """
        rows = [[as_polynomial(x, ring) for x in row] for row in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else (len(source) if source is not None else 0)
        if any(len(row) != nc for row in rows):
            raise InputError("ragged matrix")
        target = tuple(target) if target is not None else (0,) * nr
        if len(target) != nr:
            raise InputError("row twists do not match the number of rows")
        if source is None:
            source = []
            for j in range(nc):
                for i in range(nr):
                    if not rows[i][j].is_zero():
                        source.append(rows[i][j].degree + target[i])
                        break
                else:
                    raise InputError(f"column {j} is zero; its twist cannot be inferred")
        cols = []
        for j in range(nc):
            col = {}
            for i in range(nr):
                col.update(rows[i][j].to_keys(i))
            cols.append(col)
        return cls(ring, target, source, cols)

    @classmethod
    def identity(cls, ring, twists):
        one = ring.unit_key()
        cols = [{(j,) + one[1:]: 1} for j in range(len(twists))]
        return cls(ring, twists, twists, cols, check=False)

    @classmethod
    def zero(cls, ring, target, source):
        return cls(ring, target, source, [{} for _ in source], check=False)

    @property
    def shape(self):
        return len(self.target), len(self.source)

    @property
    def source_module(self):
        return FreeModule(self.ring, self.source)

    @property
    def target_module(self):
        return FreeModule(self.ring, self.target)

    def entry(self, i, j):
        return Polynomial.from_keys(self.ring, {(0,) + k[1:]: c for k, c in self.cols[j].items() if k[0] == i})

    def rows(self):
        return [[self.entry(i, j) for j in range(len(self.source))] for i in range(len(self.target))]

    def is_zero(self):
        return not any(self.cols)

    def transpose(self):
        """The dual map ``target* -> source*``."""
        new = [{} for _ in self.target]
        for j, col in enumerate(self.cols):
            for k, c in col.items():
                new[k[0]][(j,) + k[1:]] = c
        return GradedMatrix(
            self.ring, [-t for t in self.source], [-t for t in self.target], new, check=False
        )

    def compose(self, f):
        """``self @ f``: first ``f``, then ``self``."""
        if tuple(f.target) != tuple(self.source):
            raise InputError("cannot compose: twists do not match")
        p = self.ring.char
        cols = []
        for col in f.cols:
            out = {}
            for k, c in col.items():
                vec_axpy(out, self.cols[k[0]], c, (0,) + k[1:], p)
            cols.append(out)
        return GradedMatrix(self.ring, self.target, f.source, cols, check=False)

    __matmul__ = compose

    def hstack(self, other):
        if tuple(other.target) != tuple(self.target):
            raise InputError("hstack needs equal targets")
        return GradedMatrix(self.ring, self.target, self.source + other.source, self.cols + other.cols, check=False)

    def select_columns(self, idx):
        return GradedMatrix(self.ring, self.target, [self.source[j] for j in idx], [self.cols[j] for j in idx], check=False)

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (self.ring, self.target, self.source, self.cols) == (other.ring, other.target, other.source, other.cols)

    def __hash__(self):
        return hash((self.target, self.source, len(self.cols)))

    def __str__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows())
        return f"[{body}]"

    def __repr__(self):
        return f"GradedMatrix(target={self.target}, source={self.source}, {self})"


def matrix_compose(g, f):
    return g.compose(f)


def hilbert_series_free(F):
    from .hilbert import HilbertSeries

    num = {}
    for t in F.twists:
        num[t] = num.get(t, 0) + 1
    return HilbertSeries(num, F.ring.weights)


class QuotientRing:
    """R = S/I for a homogeneous ideal I of the ambient ring S."""

    def __init__(self, ambient, ideal=()):
        self.ambient = ambient
        gens = []
        for g in ideal:
            g = as_polynomial(g, ambient)
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise HomogeneityError(f"ideal generator {g} is not homogeneous")
            if g.degree == 0:
                raise PreconditionError("the ideal contains a unit; the quotient ring is zero")
            gens.append(g)
        self.ideal_gens = tuple(gens)

    @cached_property
    def groebner(self):
        """Reduced Groebner basis of I as monic key dicts (component 0)."""
        from .groebner import ideal_groebner

        return ideal_groebner(self.ambient, [g.to_keys() for g in self.ideal_gens])

    @cached_property
    def _signature(self):
        return (self.ambient, tuple(tuple(sorted(g.items())) for g in self.groebner))

    def __eq__(self, other):
        if not isinstance(other, QuotientRing):
            return NotImplemented
        if self is other:
            return True
        if self.ambient != other.ambient:
            return False
        if not self.ideal_gens and not other.ideal_gens:
            return True
        return self._signature == other._signature

    def __hash__(self):
        return hash(self.ambient)

    @property
    def n(self):
        return self.ambient.n

    @property
    def is_polynomial_ring(self):
        return not self.ideal_gens

    def cover(self):
        """The ambient polynomial ring as a QuotientRing."""
        if self.is_polynomial_ring:
            return self
        return QuotientRing(self.ambient)

    def quotient(self, extra):
        return QuotientRing(self.ambient, list(self.ideal_gens) + [as_polynomial(g, self.ambient) for g in extra])

    def reduce(self, vec):
        """Normal form of a vector modulo I times the free module."""
        if not self.ideal_gens or not vec:
            return dict(vec)
        from .groebner import reduce_mod_ideal

        return reduce_mod_ideal(vec, self.groebner, self.ambient.char)

    def reduce_poly(self, f):
        f = as_polynomial(f, self.ambient)
        return Polynomial.from_keys(self.ambient, self.reduce(f.to_keys()))

    def as_module(self):
        from .resolution import PresentedModule

        return PresentedModule.free(self, [0])

    @cached_property
    def dim(self):
        from .resolution import krull_dim

        return krull_dim(self.as_module())

    @cached_property
    def depth(self):
        from .resolution import depth

        return depth(self.as_module())

    @property
    def cm_flag(self):
        return self.depth == self.dim

    @cached_property
    def canonical_module(self):
        from .functors import canonical_module

        return canonical_module(self)

    @cached_property
    def gorenstein_flag(self):
        if not self.cm_flag:
            return False
        w = self.canonical_module
        return w.num_generators == 1 and w.num_relations == 0

    def __str__(self):
        s = str(self.ambient)
        if self.ideal_gens:
            s += "; ideal " + ", ".join(str(g) for g in self.ideal_gens)
        return s

    def __repr__(self):
        return f"QuotientRing({self})"


def polynomial_ring(names, weights=None, char=DEFAULT_CHAR):
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    return AmbientRing(tuple(names), weights, char)


def quotient_ring(names, ideal=(), weights=None, char=DEFAULT_CHAR):
    """Convenience constructor: ``quotient_ring("x y", ["x*y"])``."""
    S = polynomial_ring(names, weights, char)
    return QuotientRing(S, ideal)
