"""Exact sparse bivariate Laurent polynomials over the integers.

A polynomial is a finite map from exponent pairs ``(i, j)`` (both possibly
negative) to nonzero Python ints, so arithmetic is exact at any coefficient
size.  The zero polynomial is the empty map.

Canonical term order, used for rendering and JSON, is total degree
descending, then x-exponent descending.  Within one total degree the
x-exponent determines the pair, so the order has no ties and the printed
form is a pure function of the term map.

Text form: terms joined by " + " / " - ", each term ``c*x^i*y^j`` with
``x^1`` shortened to ``x``, unit coefficients and zero exponents omitted,
e.g. ``x^2 + 2*x*y + y^2 - 1``.  ``parse`` accepts exactly this dialect
(whitespace-insensitively) and round-trips with ``str``.

JSON form: list of ``[i, j, "c"]`` triples in canonical order, with the
coefficient as a decimal string.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import ParseError, ReversalRange, ValidationError

Exponents = tuple[int, int]


def _canonical_order(pair: Exponents) -> tuple[int, int]:
    i, j = pair
    return (-(i + j), -i)


class BiPoly:
    """Immutable sparse polynomial in Z[x, x^-1, y, y^-1]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, int] | None = None):
        clean: dict[Exponents, int] = {}
        if terms:
            for (i, j), c in terms.items():
                if not (isinstance(i, int) and isinstance(j, int) and isinstance(c, int)):
                    raise ValidationError(f"non-integer term ({i}, {j}): {c!r}")
                if c:
                    clean[(i, j)] = c
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "BiPoly":
        return _ZERO

    @staticmethod
    def one() -> "BiPoly":
        return _ONE

    @staticmethod
    def x() -> "BiPoly":
        return _X

    @staticmethod
    def y() -> "BiPoly":
        return _Y

    @staticmethod
    def constant(c: int) -> "BiPoly":
        return BiPoly({(0, 0): c})

    @staticmethod
    def monomial(c: int, i: int, j: int) -> "BiPoly":
        return BiPoly({(i, j): c})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, i: int, j: int) -> int:
        """Coefficient of x^i y^j (0 when the term is absent)."""
        return self._terms.get((i, j), 0)

    def items(self) -> list[tuple[Exponents, int]]:
        """Terms in canonical order."""
        return [(e, self._terms[e]) for e in sorted(self._terms, key=_canonical_order)]

    def support(self) -> set[Exponents]:
        return set(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponents, int]]:
        return iter(self.items())

    def total_degree(self) -> int:
        """Maximum i + j over stored terms; 0 for the zero polynomial."""
        if not self._terms:
            return 0
        return max(i + j for i, j in self._terms)

    def max_exponent(self, axis: str) -> int:
        """Largest exponent of the given axis ('x' or 'y'); 0 when zero."""
        k = _axis_index(axis)
        if not self._terms:
            return 0
        return max(e[k] for e in self._terms)

    def min_exponent(self, axis: str) -> int:
        k = _axis_index(axis)
        if not self._terms:
            return 0
        return min(e[k] for e in self._terms)

    def has_negative_exponents(self) -> bool:
        return any(i < 0 or j < 0 for i, j in self._terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return _wrap(acc)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "BiPoly":
        return _wrap({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        acc: dict[Exponents, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                s = acc.get(e, 0) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    del acc[e]
        return _wrap(acc)

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise ValidationError("negative powers of polynomials are not defined")
        out = _ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: int) -> "BiPoly":
        if c == 0:
            return _ZERO
        return _wrap({e: c * v for e, v in self._terms.items()})

    def shift(self, di: int, dj: int) -> "BiPoly":
        """Multiply by the monomial x^di y^dj."""
        if not (di or dj):
            return self
        return _wrap({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    # -- specialization and reshaping ---------------------------------------

    def substitute_one(self, axis: str) -> "BiPoly":
        """Set the given variable to 1, collapsing onto the other axis."""
        k = _axis_index(axis)
        acc: dict[Exponents, int] = {}
        for e, c in self._terms.items():
            key = (0, e[1]) if k == 0 else (e[0], 0)
            s = acc.get(key, 0) + c
            if s:
                acc[key] = s
            else:
                del acc[key]
        return _wrap(acc)

    def reversed_in(self, axis: str, n: int) -> "BiPoly":
        """Exponent reversal on one axis: x^n * p(x^-1) (or the y analogue).

        Requires the polynomial to have no negative exponents and n at least
        the maximum exponent on that axis, so the result is a polynomial.
        """
        if self.has_negative_exponents():
            raise ReversalRange("reversal requires nonnegative exponents")
        k = _axis_index(axis)
        if self._terms and n < max(e[k] for e in self._terms):
            raise ReversalRange(f"reversal bound {n} below maximum {axis}-exponent")
        if k == 0:
            return _wrap({(n - i, j): c for (i, j), c in self._terms.items()})
        return _wrap({(i, n - j): c for (i, j), c in self._terms.items()})

    def swap_vars(self) -> "BiPoly":
        """Exchange the roles of x and y."""
        return _wrap({(j, i): c for (i, j), c in self._terms.items()})

    def evaluate(self, xv: int, yv: int) -> int | Fraction:
        """Exact value at integer arguments (Fraction only when a negative
        exponent meets a base other than +-1)."""
        total: int | Fraction = 0
        for (i, j), c in self._terms.items():
            term: int | Fraction = c
            for base, e in ((xv, i), (yv, j)):
                if e >= 0:
                    term *= base ** e
                else:
                    if base == 0:
                        raise ZeroDivisionError("negative exponent at 0")
                    term *= Fraction(1, base ** (-e))
            total += term
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def divisible_by_x_plus_y_minus_1(self) -> bool:
        """Exact divisibility by (x + y - 1), for nonnegative-exponent input."""
        _, rem = self.divmod_x_plus_y_minus_1()
        return rem.is_zero()

    def divmod_x_plus_y_minus_1(self) -> tuple["BiPoly", "BiPoly"]:
        """Division with remainder by (x + y - 1), viewing the polynomial in
        x with coefficients in Z[y]; the remainder is then y-univariate."""
        if self.has_negative_exponents():
            raise ValidationError("division requires nonnegative exponents")
        # cols[i] = dict j -> coefficient of x^i y^j
        cols: dict[int, dict[int, int]] = {}
        for (i, j), c in self._terms.items():
            cols.setdefault(i, {})[j] = c
        if not cols:
            return _ZERO, _ZERO
        quot: dict[Exponents, int] = {}
        for i in range(max(cols), 0, -1):
            head = cols.pop(i, None)
            if not head:
                continue
            below = cols.setdefault(i - 1, {})
            for j, c in head.items():
                quot[(i - 1, j)] = c
                # subtract c * x^(i-1) y^j * (y - 1)
                for dj, sign in ((1, -1), (0, 1)):
                    s = below.get(j + dj, 0) + sign * c
                    if s:
                        below[j + dj] = s
                    else:
                        below.pop(j + dj, None)
        rem = _wrap({(0, j): c for j, c in cols.get(0, {}).items() if c})
        return _wrap(quot), rem

    # -- equality, hashing, rendering ---------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        return render(self)


def _wrap(terms: dict[Exponents, int]) -> BiPoly:
    """Internal fast constructor for already-clean term dicts."""
    p = BiPoly()
    object.__setattr__(p, "_terms", terms)
    return p


def _axis_index(axis: str) -> int:
    if axis == "x":
        return 0
    if axis == "y":
        return 1
    raise ValidationError(f"unknown axis {axis!r}, expected 'x' or 'y'")


_ZERO = BiPoly()
_ONE = BiPoly({(0, 0): 1})
_X = BiPoly({(1, 0): 1})
_Y = BiPoly({(0, 1): 1})

X = _X
Y = _Y
X_PLUS_Y_MINUS_1 = BiPoly({(1, 0): 1, (0, 1): 1, (0, 0): -1})


def add_scaled_into(acc: dict[Exponents, int], p: BiPoly, c: int, di: int, dj: int) -> None:
    """Accumulate c * x^di y^dj * p into a raw term dict (hot-path helper)."""
    if c == 0:
        return
    for (i, j), v in p._terms.items():
        e = (i + di, j + dj)
        s = acc.get(e, 0) + c * v
        if s:
            acc[e] = s
        else:
            del acc[e]


def from_dict(acc: Mapping[Exponents, int]) -> BiPoly:
    """Wrap an accumulated term dict (zero coefficients are dropped)."""
    return _wrap({e: c for e, c in acc.items() if c})


# -- text form ---------------------------------------------------------------


def _monomial_body(i: int, j: int) -> str:
    parts = []
    for sym, e in (("x", i), ("y", j)):
        if e == 1:
            parts.append(sym)
        elif e != 0:
            parts.append(f"{sym}^{e}")
    return "*".join(parts)


def render(p: BiPoly) -> str:
    """Canonical text form; inverse of ``parse``."""
    items = p.items()
    if not items:
        return "0"
    chunks: list[str] = []
    for idx, ((i, j), c) in enumerate(items):
        body = _monomial_body(i, j)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if idx == 0:
            chunks.append(text if c > 0 else f"-{text}")
        else:
            chunks.append(f"{' + ' if c > 0 else ' - '}{text}")
    return "".join(chunks)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[xy])(?:\^(?P<exp>-?\d+))?|(?P<op>[+\-*]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    tokens: list[tuple[str, str]] = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character at position {pos}: {text[pos:]!r}")
        pos = m.end()
        if m.group("int") is not None:
            tokens.append(("int", m.group("int")))
        elif m.group("var") is not None:
            tokens.append(("pow", m.group("var") + ":" + (m.group("exp") or "1")))
        else:
            tokens.append(("op", m.group("op")))
    return tokens


def parse(text: str) -> BiPoly:
    """Parse the canonical text dialect produced by ``render``."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text")
    acc: dict[Exponents, int] = {}
    idx = 0
    first = True
    while idx < len(tokens):
        sign = 1
        kind, val = tokens[idx]
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            idx += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' before term, got {val!r}")
        coeff = sign
        i = j = 0
        saw_factor = False
        while idx < len(tokens):
            kind, val = tokens[idx]
            if kind == "int":
                coeff *= int(val)
            elif kind == "pow":
                var, _, e = val.partition(":")
                if var == "x":
                    i += int(e)
                else:
                    j += int(e)
            else:
                raise ParseError(f"expected a factor, got {val!r}")
            saw_factor = True
            idx += 1
            if idx < len(tokens) and tokens[idx] == ("op", "*"):
                idx += 1
                if idx >= len(tokens):
                    raise ParseError("dangling '*' in polynomial text")
                continue
            break
        if not saw_factor:
            raise ParseError("dangling sign in polynomial text")
        first = False
        e = (i, j)
        s = acc.get(e, 0) + coeff
        if s:
            acc[e] = s
        else:
            acc.pop(e, None)
    return _wrap(acc)


# -- JSON form ----------------------------------------------------------------


def to_json(p: BiPoly) -> list[list]:
    """Canonically ordered [i, j, "coeff"] triples."""
    return [[i, j, str(c)] for (i, j), c in p.items()]


def from_json(data: Iterable) -> BiPoly:
    acc: dict[Exponents, int] = {}
    for row in data:
        try:
            i, j, c = row
            e = (int(i), int(j))
            v = int(c)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad polynomial triple {row!r}") from exc
        s = acc.get(e, 0) + v
        if s:
            acc[e] = s
        else:
            acc.pop(e, None)
    return _wrap(acc)
