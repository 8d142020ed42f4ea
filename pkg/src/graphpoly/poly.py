"""Exact sparse multivariate polynomials over the integers.

A polynomial carries a fixed, ordered tuple of variable names (at most a
handful in practice) and a dict mapping exponent tuples to non-zero int
coefficients.  All arithmetic is exact; coefficients are arbitrary
precision.  Values are immutable once constructed, so they can be shared
freely between threads.

Rational arithmetic only appears in ``interpolate_integer``, which fits a
polynomial through exact points and insists the result has integer
coefficients (a non-integer coefficient signals a bug in the caller).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class VariableMismatchError(ValueError):
    """Raised when combining polynomials over different variable tuples."""


def _strip_zeros(terms: dict) -> dict:
    return {e: c for e, c in terms.items() if c != 0}


class SparsePoly:
    """Immutable sparse polynomial with named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, int] | None = None):
        object.__setattr__(self, "vars", tuple(variables))
        cleaned = {}
        if terms:
            nv = len(self.vars)
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nv:
                    raise ValueError(f"exponent tuple {exps} does not match variables {self.vars}")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                coeff = int(coeff)
                if coeff:
                    cleaned[exps] = cleaned.get(exps, 0) + coeff
                    if cleaned[exps] == 0:
                        del cleaned[exps]
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "SparsePoly":
        return cls(variables, {})

    @classmethod
    def const(cls, variables: Iterable[str], value: int) -> "SparsePoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): int(value)})

    @classmethod
    def var(cls, name: str, variables: Iterable[str] | None = None) -> "SparsePoly":
        variables = (name,) if variables is None else tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): 1})

    # -- ring operations -------------------------------------------------

    def _check_vars(self, other: "SparsePoly") -> None:
        if self.vars != other.vars:
            raise VariableMismatchError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(self.vars, _strip_zeros(out))

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        self._check_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return SparsePoly(self.vars, _strip_zeros(out))

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check_vars(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(self.vars, _strip_zeros(out))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, k: int) -> "SparsePoly":
        if k == 0:
            return SparsePoly.zero(self.vars)
        return SparsePoly(self.vars, {e: c * k for e, c in self.terms.items()})

    def __pow__(self, n: int) -> "SparsePoly":
        if n < 0:
            raise ValueError("negative power")
        out = SparsePoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def eval_int(self, assignment: Mapping[str, int]) -> int:
        """Evaluate at integer values for every variable."""
        for v in self.vars:
            if v not in assignment:
                raise ValueError(f"missing value for variable {v!r}")
        total = 0
        for exps, coeff in self.terms.items():
            t = coeff
            for v, e in zip(self.vars, exps):
                if e:
                    t *= assignment[v] ** e
            total += t
        return total

    def coefficient(self, exps) -> int:
        """Coefficient of a given exponent vector (mapping or tuple); 0 if absent."""
        if isinstance(exps, Mapping):
            key = tuple(int(exps.get(v, 0)) for v in self.vars)
        else:
            key = tuple(int(e) for e in exps)
        return self.terms.get(key, 0)

    def degree(self, name: str) -> int:
        if not self.terms:
            return 0
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def min_total_degree(self) -> int:
        if not self.terms:
            return 0
        return min(sum(e) for e in self.terms)

    # -- substitution -----------------------------------------------------

    def subs_int(self, name: str, value: int) -> "SparsePoly":
        """Substitute an integer for one variable, dropping it from the tuple."""
        i = self.vars.index(name)
        new_vars = self.vars[:i] + self.vars[i + 1:]
        out: dict = {}
        for exps, coeff in self.terms.items():
            e = exps[:i] + exps[i + 1:]
            c = coeff * value ** exps[i]
            if c:
                out[e] = out.get(e, 0) + c
        return SparsePoly(new_vars, _strip_zeros(out))

    def subs_poly(self, name: str, replacement: "SparsePoly") -> "SparsePoly":
        """Substitute a polynomial for one variable.

        The result is over the remaining variables followed by any new
        variables of the replacement, in order.
        """
        i = self.vars.index(name)
        kept = self.vars[:i] + self.vars[i + 1:]
        new_vars = kept + tuple(v for v in replacement.vars if v not in kept)
        rep = replacement._embed(new_vars)
        max_k = max((e[i] for e in self.terms), default=0)
        powers = [SparsePoly.const(new_vars, 1)]
        for _ in range(max_k):
            powers.append(powers[-1] * rep)
        kept_idx = {v: j for j, v in enumerate(kept)}
        out = SparsePoly.zero(new_vars)
        for exps, coeff in sorted(self.terms.items()):
            rest = exps[:i] + exps[i + 1:]
            mono_exps = tuple(rest[kept_idx[v]] if v in kept_idx else 0 for v in new_vars)
            out = out + SparsePoly(new_vars, {mono_exps: coeff}) * powers[exps[i]]
        return out

    def _embed(self, new_vars: tuple) -> "SparsePoly":
        """Reinterpret over a superset variable tuple."""
        pos = [new_vars.index(v) for v in self.vars]
        out = {}
        for exps, coeff in self.terms.items():
            e = [0] * len(new_vars)
            for p, x in zip(pos, exps):
                e[p] = x
            out[tuple(e)] = coeff
        return SparsePoly(new_vars, out)

    def rename_var(self, old: str, new: str) -> "SparsePoly":
        i = self.vars.index(old)
        new_vars = self.vars[:i] + (new,) + self.vars[i + 1:]
        return SparsePoly(new_vars, dict(self.terms))

    # -- comparisons and hashing -------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparsePoly)
                and self.vars == other.vars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- serialization ------------------------------------------------------

    def _sorted_terms(self):
        # graded lexicographic, largest first: deterministic canonical order
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self._sorted_terms():
            factors = []
            for v, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mag = abs(coeff)
            if factors:
                body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
            else:
                body = str(mag)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"SparsePoly({self.vars!r}, {self!s})"

    def to_json_obj(self) -> list:
        """Canonical JSON form: list of {"exps": {var: int}, "coeff": str}."""
        out = []
        for exps, coeff in self._sorted_terms():
            out.append({"exps": {v: e for v, e in zip(self.vars, exps) if e},
                        "coeff": str(coeff)})
        return out

    @classmethod
    def from_json_obj(cls, variables: Iterable[str], obj: list) -> "SparsePoly":
        variables = tuple(variables)
        terms = {}
        for item in obj:
            exps = tuple(int(item["exps"].get(v, 0)) for v in variables)
            terms[exps] = terms.get(exps, 0) + int(item["coeff"])
        return cls(variables, terms)

    # -- interpolation -------------------------------------------------------

    @classmethod
    def interpolate_integer(cls, points, variable: str = "x") -> "SparsePoly":
        """Fit the unique polynomial of degree < len(points) through exact points.

        ``points`` is a sequence of (abscissa, value) pairs with distinct
        integer abscissae; values may be ints or Fractions.  Raises if the
        interpolant has a non-integer coefficient.
        """
        pts = [(int(x), Fraction(y)) for x, y in points]
        xs = [x for x, _ in pts]
        if len(set(xs)) != len(xs):
            raise ValueError("duplicate abscissae in interpolation points")
        n = len(pts)
        if n == 0:
            raise ValueError("no interpolation points")
        # Newton's divided differences, then expand.
        coef = [y for _, y in pts]
        for j in range(1, n):
            for i in range(n - 1, j - 1, -1):
                coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
        # expand sum coef[k] * prod_{i<k} (x - xs[i])
        poly = [Fraction(0)] * n
        basis = [Fraction(1)] + [Fraction(0)] * (n - 1)  # running product, degree k
        deg = 0
        for k in range(n):
            for d in range(deg + 1):
                poly[d] += coef[k] * basis[d]
            if k < n - 1:
                new = [Fraction(0)] * n
                for d in range(deg + 1):
                    new[d + 1] += basis[d]
                    new[d] -= basis[d] * xs[k]
                basis = new
                deg += 1
        terms = {}
        for d, c in enumerate(poly):
            if c != 0:
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c} at degree {d}")
                terms[(d,)] = int(c)
        return cls((variable,), terms)
