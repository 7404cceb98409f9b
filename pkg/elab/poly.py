#!/usr/bin/env python3

"""
Poly4: exact sparse polynomials in the four coordinates x, y, z, w.
Arithmetic and differentiation are exact (rational coefficients via sympy); \
    evaluation is compiled to numpy once per polynomial and broadcasts.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
from collections.abc import Callable, Iterable, Mapping, Sequence
from functools import cached_property
from numbers import Number
from typing import Any, Self

# Import third-party PyPI libraries
import numpy as np
import sympy as sp

# Coordinate symbols, in the order every Poly4 exponent tuple uses
GENS: tuple[sp.Symbol, ...] = sp.symbols("x y z w", real=True)
VAR_NAMES = ("x", "y", "z", "w")
N_VARS = len(GENS)

# (ex, ey, ez, ew)
Exponents = tuple[int, int, int, int]

# One JSON-serialized term: {"coef": number, "exp": [ex, ey, ez, ew]}
TermJSON = Mapping[str, Any]


def to_rational(coef: Number | str | sp.Rational) -> sp.Rational:
    """ Convert a coefficient into an exact rational. Floats are read by \
        their shortest decimal representation, so 0.05 becomes 1/20.

    :param coef: Number | str | sp.Rational, coefficient to convert
    :return: sp.Rational, exact value of `coef`
    """
    if isinstance(coef, float):
        if not np.isfinite(coef):
            raise ValueError(f"Polynomial coefficient {coef} is not finite")
        coef = repr(coef)
    return sp.Rational(coef)


class Poly4:
    """ Immutable multivariate polynomial in (x, y, z, w). """
    _ZERO_EXP: Exponents = (0, 0, 0, 0)

    def __init__(self, expr: sp.Expr | sp.Poly | Number = 0) -> None:
        """
        :param expr: sp.Expr | sp.Poly | Number, polynomial expression in \
            the symbols of `GENS`; defaults to the zero polynomial
        """
        if isinstance(expr, float):
            expr = to_rational(expr)
        self._poly = sp.Poly(expr, *GENS, domain="QQ")

    # Construction

    @classmethod
    def constant(cls, value: Number) -> Self:
        return cls(to_rational(value))

    @classmethod
    def var(cls, name_or_index: str | int) -> Self:
        """
        :param name_or_index: str | int, "x"/"y"/"z"/"w" or 0..3
        :return: Poly4, the coordinate function itself
        """
        ix = VAR_NAMES.index(name_or_index) \
            if isinstance(name_or_index, str) else name_or_index
        return cls(GENS[ix])

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Number, Sequence[int]]]
                   ) -> Self:
        """ Build a polynomial from (coefficient, exponents) pairs. \
            Repeated exponent tuples are summed.

        :param terms: Iterable[tuple[Number, Sequence[int]]], each pair \
            being a coefficient and four nonnegative integer exponents
        :raises ValueError: if any exponent tuple is malformed
        :return: Poly4
        """
        coefs: dict[Exponents, sp.Rational] = {}
        for coef, exps in terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != N_VARS or min(exps) < 0:
                raise ValueError(f"Invalid exponent tuple {exps}: need "
                                 f"{N_VARS} nonnegative integers")
            coefs[exps] = coefs.get(exps, 0) + to_rational(coef)
        if not coefs:
            return cls()
        return cls(sp.Poly.from_dict(coefs, *GENS, domain="QQ"))

    @classmethod
    def from_json(cls, terms: Iterable[TermJSON]) -> Self:
        """
        :param terms: Iterable[TermJSON], e.g. [{"coef": 0.05, \
            "exp": [1, 0, 0, 0]}] for 0.05*x
        :return: Poly4
        """
        return cls.from_terms((term["coef"], term["exp"]) for term in terms)

    # Serialization

    def to_json(self) -> list[dict[str, Any]]:
        return [{"coef": float(coef), "exp": list(exps)}
                for exps, coef in self.terms().items()]

    def terms(self) -> dict[Exponents, sp.Rational]:
        """
        :return: dict[Exponents, sp.Rational] mapping each exponent tuple \
            with a nonzero coefficient to that coefficient
        """
        return {exps: coef for exps, coef in self._poly.terms()
                if coef != 0}

    # Properties

    @property
    def expr(self) -> sp.Expr:
        return self._poly.as_expr()

    def is_zero(self) -> bool:
        return self._poly.is_zero

    def has_var(self, name_or_index: str | int) -> bool:
        """
        :return: bool, True if any term has a positive exponent in the \
            given coordinate; else False
        """
        ix = VAR_NAMES.index(name_or_index) \
            if isinstance(name_or_index, str) else name_or_index
        return any(exps[ix] > 0 for exps in self.terms())

    def terms_free_of(self, *names: str) -> dict[Exponents, sp.Rational]:
        """
        :param names: str, coordinate names
        :return: dict[Exponents, sp.Rational], the terms whose exponents in \
            every one of the named coordinates are zero
        """
        ixs = [VAR_NAMES.index(name) for name in names]
        return {exps: coef for exps, coef in self.terms().items()
                if all(exps[ix] == 0 for ix in ixs)}

    def weighted_degrees(self, weights: Sequence[int]) -> set[int]:
        return {sum(w * e for w, e in zip(weights, exps))
                for exps in self.terms()}

    # Exact algebra

    def diff(self, name_or_index: str | int) -> "Poly4":
        ix = VAR_NAMES.index(name_or_index) \
            if isinstance(name_or_index, str) else name_or_index
        return Poly4(self._poly.diff(GENS[ix]))

    def subs(self, **values: Number) -> "Poly4":
        """ Substitute exact values for some coordinates.

        :param values: Mapping[str, Number], e.g. subs(z=0)
        :return: Poly4
        """
        return Poly4(self.expr.subs({GENS[VAR_NAMES.index(k)]:
                                     to_rational(v) for k, v in
                                     values.items()}))

    def _coerce(self, other: Any) -> sp.Poly:
        if isinstance(other, Poly4):
            return other._poly
        if isinstance(other, (Number, sp.Number)):
            return sp.Poly(to_rational(other), *GENS, domain="QQ")
        return NotImplemented

    def __add__(self, other: Any) -> "Poly4":
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Poly4(self._poly + o)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Poly4":
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Poly4(self._poly - o)

    def __rsub__(self, other: Any) -> "Poly4":
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Poly4(o - self._poly)

    def __mul__(self, other: Any) -> "Poly4":
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Poly4(self._poly * o)

    __rmul__ = __mul__

    def __neg__(self) -> "Poly4":
        return Poly4(-self._poly)

    def __pow__(self, power: int) -> "Poly4":
        return Poly4(self._poly ** power)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        return False if o is NotImplemented else (self._poly - o).is_zero

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms().items())))

    def __repr__(self) -> str:
        return f"Poly4({self.expr})"

    # Numerical evaluation

    @cached_property
    def _compiled(self) -> Callable[..., Any]:
        return sp.lambdify(GENS, self.expr, modules="numpy")

    def __call__(self, x: Any, y: Any, z: Any, w: Any) -> np.ndarray:
        """ Evaluate at one point or at arrays of points (broadcasting).

        :return: np.ndarray of floats, broadcast to the shape of the inputs
        """
        shape = np.broadcast(x, y, z, w).shape
        value = self._compiled(x, y, z, w)
        return np.broadcast_to(np.asarray(value, dtype=float), shape)

    def at(self, point: Sequence[float]) -> float:
        """
        :param point: Sequence[float], (x, y, z, w)
        :return: float, value of this polynomial at `point`
        """
        return float(self(*point[:N_VARS]))
