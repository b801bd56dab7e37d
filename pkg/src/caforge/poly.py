"""Sparse multivariate and dense univariate polynomials over exact fields.

``MPoly`` stores a map from exponent tuples to nonzero coefficients.  Storage
order is irrelevant; iteration and serialization always run in descending
graded-reverse-lexicographic order so equal polynomials print identically.
"""

from __future__ import annotations

import heapq
import operator
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .fields import QQ, CoeffField, PrimeField

MAX_EXPONENT = 2**16 - 1

INHOMOGENEOUS = "inhomogeneous"
ZERO_DEGREE = "zero"


def grevlex_key(e: tuple) -> tuple:
    """Sort key: a larger key is a larger monomial in grevlex."""
    return (sum(e), tuple(-x for x in reversed(e)))


def _grevlex_heapkey(e: tuple) -> tuple:
    # min-heap key that pops the grevlex-largest monomial first
    return (-sum(e), tuple(reversed(e)))


def _reduce_coeff(field: CoeffField, c):
    if isinstance(field, PrimeField):
        return c % field.p
    return c


def _check_exponent(e: tuple) -> None:
    for x in e:
        if x < 0 or x > MAX_EXPONENT:
            raise ValueError(f"exponent {x} outside 0..{MAX_EXPONENT}")


class MPoly:
    __slots__ = ("field", "nvars", "_terms")

    def __init__(self, field: CoeffField, nvars: int, terms=None):
        self.field = field
        self.nvars = nvars
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have length {nvars}")
                _check_exponent(e)
                c = field.convert(c)
                if e in clean:
                    c = _reduce_coeff(field, clean[e] + c)
                if c:
                    clean[e] = c
                else:
                    clean.pop(e, None)
        self._terms = clean

    @classmethod
    def _raw(cls, field, nvars, terms: dict) -> "MPoly":
        # trusted constructor: terms already reduced and free of zeros
        obj = cls.__new__(cls)
        obj.field = field
        obj.nvars = nvars
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, field: CoeffField, nvars: int) -> "MPoly":
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, field: CoeffField, nvars: int, c) -> "MPoly":
        c = field.convert(c)
        return cls._raw(field, nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, field: CoeffField, nvars: int, i: int) -> "MPoly":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls._raw(field, nvars, {tuple(e): field.one})

    @classmethod
    def monomial(cls, field: CoeffField, exponent: Sequence[int], c=1) -> "MPoly":
        return cls(field, len(exponent), {tuple(exponent): c})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        """Read-only view of the term map (do not mutate)."""
        return self._terms

    def items(self) -> list:
        """Terms in descending grevlex order."""
        return sorted(self._terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.nvars in self._terms)

    def constant_coeff(self):
        return self._terms.get((0,) * self.nvars, self.field.zero)

    def coeff(self, exponent: Sequence[int]):
        return self._terms.get(tuple(exponent), self.field.zero)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def support_vars(self) -> set:
        return {i for e in self._terms for i, x in enumerate(e) if x}

    def leading_term(self, key=grevlex_key):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=key)
        return e, self._terms[e]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars or other.field != self.field:
                raise ValueError(
                    f"ring mismatch: {self.field}[{self.nvars}] vs {other.field}[{other.nvars}]"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(self.field, self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        res = dict(self._terms)
        for e, c in other._terms.items():
            v = _reduce_coeff(F, res.get(e, 0) + c)
            if v:
                res[e] = v
            else:
                res.pop(e, None)
        return MPoly._raw(F, self.nvars, res)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return MPoly._raw(F, self.nvars, {e: _reduce_coeff(F, -c) for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        if len(other._terms) == 1:
            (e2, c2), = other._terms.items()
            if not any(e2):
                return self.scale(c2)
        res: dict = {}
        add = operator.add
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(map(add, e1, e2))
                res[e] = res.get(e, 0) + c1 * c2
        if isinstance(F, PrimeField):
            p = F.p
            res = {e: c % p for e, c in res.items() if c % p}
        else:
            res = {e: c for e, c in res.items() if c}
        return MPoly._raw(F, self.nvars, res)

    __rmul__ = __mul__

    def scale(self, c) -> "MPoly":
        F = self.field
        c = F.convert(c)
        if not c:
            return MPoly.zero(F, self.nvars)
        return MPoly._raw(F, self.nvars, {e: _reduce_coeff(F, v * c) for e, v in self._terms.items()})

    def mul_monomial(self, exponent: tuple, c=None) -> "MPoly":
        F = self.field
        add = operator.add
        if c is None:
            return MPoly._raw(F, self.nvars, {tuple(map(add, e, exponent)): v for e, v in self._terms.items()})
        c = F.convert(c)
        if not c:
            return MPoly.zero(F, self.nvars)
        return MPoly._raw(
            F, self.nvars,
            {tuple(map(add, e, exponent)): _reduce_coeff(F, v * c) for e, v in self._terms.items()},
        )

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MPoly.constant(self.field, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        # division by a nonzero constant only; use divexact for polynomials
        if isinstance(other, MPoly):
            if not other.is_constant() or other.is_zero():
                return NotImplemented
            other = other.constant_coeff()
        return self.scale(self.field.inv(self.field.convert(other)))

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.field == other.field and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.constant(self.field, self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def monic(self) -> "MPoly":
        """Divide by the grevlex leading coefficient."""
        if not self._terms:
            return self
        _, c = self.leading_term()
        return self.scale(self.field.inv(c))

    # -- evaluation and variable surgery -------------------------------------

    def evaluate(self, point: Sequence):
        F = self.field
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        pt = [F.convert(v) for v in point]
        total = 0
        for e, c in self._terms.items():
            t = c
            for v, k in zip(pt, e):
                if k:
                    t = t * v**k
            total = total + t
        return _reduce_coeff(F, total) if isinstance(F, PrimeField) else F.convert(total)

    def extend(self, extra: int) -> "MPoly":
        """Same polynomial viewed in ``nvars + extra`` variables (new ones last)."""
        pad = (0,) * extra
        return MPoly._raw(self.field, self.nvars + extra, {e + pad: c for e, c in self._terms.items()})

    def drop_vars(self, indices: Iterable[int]) -> "MPoly":
        """Remove variables that do not occur; raises if one does."""
        drop = set(indices)
        keep = [i for i in range(self.nvars) if i not in drop]
        res = {}
        for e, c in self._terms.items():
            if any(e[i] for i in drop):
                raise ValueError("cannot drop a variable that occurs")
            res[tuple(e[i] for i in keep)] = c
        return MPoly._raw(self.field, len(keep), res)

    def substitute_constant(self, i: int, value) -> "MPoly":
        """Set variable ``i`` to a field constant, keeping the variable count."""
        F = self.field
        v = F.convert(value)
        res: dict = {}
        for e, c in self._terms.items():
            k = e[i]
            t = c * v**k if k else c
            if k:
                e = e[:i] + (0,) + e[i + 1:]
            res[e] = res.get(e, 0) + t
        res = {e: _reduce_coeff(F, c) for e, c in res.items()}
        return MPoly._raw(F, self.nvars, {e: c for e, c in res.items() if c})

    def change_field(self, field: CoeffField) -> "MPoly":
        return MPoly(field, self.nvars, {e: c for e, c in self._terms.items()})

    def partial(self, i: int) -> "MPoly":
        F = self.field
        res = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                v = _reduce_coeff(F, c * k)
                if v:
                    res[e[:i] + (k - 1,) + e[i + 1:]] = v
        return MPoly._raw(F, self.nvars, res)

    def to_upoly(self, i: int = 0) -> "UPoly":
        """Convert a polynomial involving only variable ``i`` to a UPoly."""
        deg = self.degree_in(i)
        coeffs = [self.field.zero] * (deg + 1)
        for e, c in self._terms.items():
            if any(x for j, x in enumerate(e) if j != i):
                raise ValueError("polynomial involves more than one variable")
            coeffs[e[i]] = c
        return UPoly(self.field, coeffs)

    def __repr__(self):
        return f"MPoly({format_poly(self)!r}, nvars={self.nvars}, field={self.field})"

    def __str__(self):
        return format_poly(self)


def divexact(a: MPoly, b: MPoly) -> MPoly:
    """Exact quotient ``a / b``; raises ValueError if ``b`` does not divide ``a``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    F = a.field
    if a.is_zero():
        return MPoly.zero(F, a.nvars)
    lb, cb = b.leading_term()
    inv_cb = F.inv(cb)
    rem = dict(a.terms)
    heap = [(_grevlex_heapkey(e), e) for e in rem]
    heapq.heapify(heap)
    bterms = list(b.terms.items())
    sub = operator.sub
    add = operator.add
    q = {}
    while rem:
        _, e = heapq.heappop(heap)
        if e not in rem:
            continue
        c = rem[e]
        qe = tuple(map(sub, e, lb))
        if any(x < 0 for x in qe):
            raise ValueError("inexact division")
        qc = _reduce_coeff(F, c * inv_cb)
        q[qe] = qc
        for eb, cbb in bterms:
            t = tuple(map(add, qe, eb))
            old = rem.get(t)
            v = _reduce_coeff(F, (old if old is not None else 0) - qc * cbb)
            if v:
                if old is None:
                    heapq.heappush(heap, (_grevlex_heapkey(t), t))
                rem[t] = v
            elif old is not None:
                del rem[t]
    return MPoly._raw(F, a.nvars, q)


def weighted_degree(p: MPoly, weights: Sequence[int]):
    """Common weighted degree of all terms, ``INHOMOGENEOUS`` or ``ZERO_DEGREE``."""
    if len(weights) != p.nvars:
        raise ValueError("weights length must equal the number of variables")
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    if p.is_zero():
        return ZERO_DEGREE
    degs = {sum(w * x for w, x in zip(weights, e)) for e in p.terms}
    if len(degs) > 1:
        return INHOMOGENEOUS
    return degs.pop()


# -- univariate -------------------------------------------------------------


class UPoly:
    """Dense univariate polynomial; ``coeffs[k]`` is the coefficient of X^k."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CoeffField, coeffs: Iterable):
        cs = [field.convert(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, field: CoeffField, roots: Iterable) -> "UPoly":
        """The monic polynomial prod (X - r)."""
        f = cls(field, [1])
        for r in roots:
            f = f * cls(field, [field.neg(field.convert(r)), 1])
        return f

    @classmethod
    def x(cls, field: CoeffField) -> "UPoly":
        return cls(field, [0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def monic(self) -> "UPoly":
        if not self.coeffs or self.coeffs[-1] == self.field.one:
            return self
        inv = self.field.inv(self.coeffs[-1])
        return UPoly(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def _coerce(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return UPoly(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(F, [F.add(self.coeff(k), other.coeff(k)) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        if not self.coeffs or not other.coeffs:
            return UPoly(F, [])
        res = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    res[i + j] += a * b
        return UPoly(F, res)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = UPoly(self.field, [1])
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, other: "UPoly"):
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        F = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly(F, []), self
        q = [F.zero] * (dq + 1)
        inv = F.inv(other.coeffs[-1])
        db = other.degree
        for k in range(dq, -1, -1):
            c = F.mul(rem[k + db], inv)
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = F.sub(rem[k + j], F.mul(c, b))
        return UPoly(F, q), UPoly(F, rem[:db])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UPoly(self.field, [other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        F = self.field
        x = F.convert(x)
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def compose_linear(self, a, b) -> "UPoly":
        """f(a*X + b)."""
        F = self.field
        lin = UPoly(F, [b, a])
        acc = UPoly(F, [])
        for c in reversed(self.coeffs):
            acc = acc * lin + UPoly(F, [c])
        return acc

    def to_mpoly(self) -> MPoly:
        return MPoly(self.field, 1, {(k,): c for k, c in enumerate(self.coeffs) if c})

    def __repr__(self):
        return f"UPoly({format_upoly(self)!r}, field={self.field})"

    def __str__(self):
        return format_upoly(self)


def upoly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd by Euclid's algorithm; gcd(0, 0) = 0."""
    if f.field != g.field:
        raise ValueError("field mismatch")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# -- ring homomorphisms -----------------------------------------------------


class RingHom:
    """Substitution homomorphism sending source variable i to ``images[i]``."""

    __slots__ = ("source_nvars", "target_nvars", "images", "field")

    def __init__(self, images: Sequence[MPoly], source_nvars: int | None = None):
        images = tuple(images)
        if source_nvars is None:
            source_nvars = len(images)
        if len(images) != source_nvars:
            raise ValueError("one image per source variable is required")
        if not images:
            raise ValueError("a homomorphism needs at least one variable image")
        tn = {im.nvars for im in images}
        fs = {im.field for im in images}
        if len(tn) != 1 or len(fs) != 1:
            raise ValueError("all images must live in one target ring")
        self.source_nvars = source_nvars
        self.target_nvars = tn.pop()
        self.field = fs.pop()
        self.images = images

    @classmethod
    def identity(cls, field: CoeffField, nvars: int) -> "RingHom":
        return cls([MPoly.var(field, nvars, i) for i in range(nvars)])

    @classmethod
    def inclusion(cls, field: CoeffField, nvars: int, extra: int) -> "RingHom":
        return cls([MPoly.var(field, nvars + extra, i) for i in range(nvars)])

    @classmethod
    def permutation(cls, field: CoeffField, nvars: int, perm: Sequence[int]) -> "RingHom":
        """x_i -> x_{perm[i]}."""
        return cls([MPoly.var(field, nvars, perm[i]) for i in range(nvars)])

    def __call__(self, p: MPoly) -> MPoly:
        return apply_hom(self, p)

    def compose(self, inner: "RingHom") -> "RingHom":
        """The homomorphism ``p -> self(inner(p))``."""
        if inner.target_nvars != self.source_nvars:
            raise ValueError("arity mismatch in composition")
        return RingHom([apply_hom(self, im) for im in inner.images])

    def __eq__(self, other):
        return isinstance(other, RingHom) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "RingHom(" + ", ".join(format_poly(im) for im in self.images) + ")"


def apply_hom(h: RingHom, p: MPoly) -> MPoly:
    if p.nvars != h.source_nvars:
        raise ValueError(f"arity mismatch: polynomial has {p.nvars} variables, map expects {h.source_nvars}")
    if p.field != h.field:
        raise ValueError("field mismatch")
    F = h.field
    powers: dict = {}

    def power(i, k):
        key = (i, k)
        if key not in powers:
            powers[key] = h.images[i] ** k
        return powers[key]

    acc: dict = {}
    for e, c in p.terms.items():
        t = MPoly.constant(F, h.target_nvars, c)
        for i, k in enumerate(e):
            if k:
                t = t * power(i, k)
        for te, tc in t.terms.items():
            acc[te] = acc.get(te, 0) + tc
    acc = {e: _reduce_coeff(F, c) for e, c in acc.items()}
    return MPoly._raw(F, h.target_nvars, {e: c for e, c in acc.items() if c})


# -- text format ------------------------------------------------------------


def var_names(nvars: int, prefix: str = "x") -> tuple:
    return tuple(f"{prefix}{i + 1}" for i in range(nvars))


def _format_monomial(e, names) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(p: MPoly, names: Sequence[str] | None = None) -> str:
    """Canonical text form (descending grevlex), parseable by :func:`parse_poly`."""
    if names is None:
        names = var_names(p.nvars)
    if len(names) != p.nvars:
        raise ValueError("names length must equal the number of variables")
    if p.is_zero():
        return "0"
    F = p.field
    out = []
    for e, c in p.items():
        neg = False
        if F.characteristic == 0 and c < 0:
            neg, c = True, -c
        mono = _format_monomial(e, names)
        cs = F.format(c)
        if mono:
            body = mono if cs == "1" else f"{cs}*{mono}"
        else:
            body = cs
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_upoly(f: UPoly, name: str = "X") -> str:
    return format_poly(f.to_mpoly(), (name,))


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            toks.append(("op", ch, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text, nvars, field, names):
        self.toks = _tokenize(text)
        self.i = 0
        self.nvars = nvars
        self.field = field
        self.index = {name: k for k, name in enumerate(names)}

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, ch):
        t = self.take()
        if t[0] != "op" or t[1] != ch:
            raise ParseError(f"expected {ch!r}", t[2])

    def parse(self) -> MPoly:
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected token {t[1]!r}", t[2])
        return p

    def expr(self):
        p = self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                q = self.term()
                p = p + q if t[1] == "+" else p - q
            else:
                return p

    def term(self):
        p = self.unary()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "*/":
                self.take()
                q = self.unary()
                if t[1] == "*":
                    p = p * q
                else:
                    if not q.is_constant() or q.is_zero():
                        raise ParseError("division only by a nonzero constant", t[2])
                    try:
                        p = p / q
                    except ZeroDivisionError:
                        raise ParseError("division by a constant that vanishes in the field", t[2])
            else:
                return p

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            p = self.unary()
            return -p if t[1] == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "num":
                raise ParseError("exponent must be a non-negative integer", e[2])
            if e[1] > MAX_EXPONENT:
                raise ParseError("exponent too large", e[2])
            return base ** e[1]
        return base

    def atom(self):
        t = self.take()
        kind, val, pos = t
        if kind == "num":
            return MPoly.constant(self.field, self.nvars, val)
        if kind == "name":
            if val not in self.index:
                raise ParseError(f"unknown variable {val!r}", pos)
            return MPoly.var(self.field, self.nvars, self.index[val])
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_poly(
    text: str,
    nvars: int,
    field: CoeffField = QQ,
    names: Sequence[str] | None = None,
) -> MPoly:
    """Parse the polynomial grammar (integers, a/b, + - * ^, parentheses)."""
    if names is None:
        names = var_names(nvars)
    if len(names) != nvars:
        raise ValueError("names length must equal the number of variables")
    return _Parser(text, nvars, field, names).parse()


def parse_upoly(text: str, field: CoeffField = QQ, name: str = "X") -> UPoly:
    return parse_poly(text, 1, field, (name,)).to_upoly(0)
