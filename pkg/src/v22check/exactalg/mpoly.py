"""Sparse multivariate polynomials over the scalar tower."""

from __future__ import annotations

from fractions import Fraction

from .scalars import QuadExt, RatFunc, UPoly, is_scalar, normalize, scalar_str, specialize


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""


def _norm(c):
    t = type(c)
    if t is Fraction:
        return c
    return normalize(c)


def _grlex_key(exp):
    return (sum(exp), exp)


class MPoly:
    """Polynomial with named variables; terms map exponent tuples to nonzero scalars."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        out = {}
        if terms:
            n = len(self.vars)
            for e, c in terms.items():
                if len(e) != n:
                    raise ValueError("exponent length does not match variables")
                c = _norm(c)
                if c:
                    out[tuple(e)] = c
        self.terms = out

    @classmethod
    def _raw(cls, variables, terms):
        obj = object.__new__(cls)
        obj.vars = variables
        obj.terms = terms
        return obj

    @classmethod
    def var(cls, name: str, variables=None) -> "MPoly":
        variables = tuple(variables) if variables is not None else (name,)
        if name not in variables:
            raise ValueError(f"{name} not among {variables}")
        e = tuple(1 if v == name else 0 for v in variables)
        return cls._raw(variables, {e: Fraction(1)})

    @classmethod
    def const(cls, c, variables=()) -> "MPoly":
        variables = tuple(variables)
        c = _norm(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def zero(cls, variables=()) -> "MPoly":
        return cls._raw(tuple(variables), {})

    # ring plumbing

    def with_vars(self, variables) -> "MPoly":
        """Re-express in a larger (or reordered) variable list."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        idx = []
        for v in self.vars:
            if v not in variables:
                if any(e[self.vars.index(v)] for e in self.terms):
                    raise ValueError(f"variable {v} is used but missing from {variables}")
                idx.append(None)
            else:
                idx.append(variables.index(v))
        n = len(variables)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for k, j in zip(e, idx):
                if j is not None:
                    ne[j] = k
            out[tuple(ne)] = c
        return MPoly._raw(variables, out)

    def _align(self, other):
        if isinstance(other, MPoly):
            if other.vars == self.vars:
                return self, other
            merged = self.vars + tuple(v for v in other.vars if v not in self.vars)
            return self.with_vars(merged), other.with_vars(merged)
        if is_scalar(other):
            return self, MPoly.const(other, self.vars)
        return None, None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        out = dict(a.terms)
        for e, c in b.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = _norm(s + c)
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly._raw(a.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.vars, {e: _norm(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        if is_scalar(other):
            c = _norm(other)
            if not c:
                return MPoly._raw(self.vars, {})
            out = {}
            for e, x in self.terms.items():
                p = _norm(x * c)
                if p:
                    out[e] = p
            return MPoly._raw(self.vars, out)
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        acc = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                p = c1 * c2
                s = acc.get(e)
                acc[e] = p if s is None else s + p
        out = {}
        for e, c in acc.items():
            c = _norm(c)
            if c:
                out[e] = c
        return MPoly._raw(a.vars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            if other.is_constant():
                other = other.constant_coeff()
            else:
                return NotImplemented
        if not is_scalar(other):
            return NotImplemented
        c = _norm(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (Fraction(1) / c if isinstance(c, Fraction) else c.inverse())

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            if other.vars == self.vars:
                return self.terms == other.terms
            a, b = self._align(other)
            return a.terms == b.terms
        if is_scalar(other):
            return self.terms == MPoly.const(other, self.vars).terms
        return NotImplemented

    def __hash__(self):
        used = sorted(self.used_vars())
        p = self.with_vars(tuple(used)) if self.terms else MPoly.zero(())
        return hash(frozenset(p.terms.items()) | {tuple(used)})

    # inspection

    def used_vars(self):
        return {v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms)}

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_coeff(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, var: str) -> int:
        if var not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def min_degree(self, var: str) -> int:
        i = self.vars.index(var)
        return min((e[i] for e in self.terms), default=-1)

    def coeff(self, monomial: dict):
        """Coefficient of the monomial given as {var: exponent}."""
        for v in monomial:
            if v not in self.vars:
                raise KeyError(v)
        e = tuple(monomial.get(v, 0) for v in self.vars)
        return self.terms.get(e, Fraction(0))

    def coeffs_in(self, var: str) -> dict:
        """Split as sum of var^k * C_k; returns {k: C_k} with C_k in the same ring."""
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            ne = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[ne] = c
        return {k: MPoly._raw(self.vars, t) for k, t in out.items()}

    def univariate_coeffs(self, var: str) -> list:
        """Scalar coefficients (low first) when var is the only variable used."""
        extra = self.used_vars() - {var}
        if extra:
            raise ValueError(f"not univariate in {var}: also uses {sorted(extra)}")
        d = self.degree(var)
        out = [Fraction(0)] * (d + 1)
        if var not in self.vars:
            return [self.constant_coeff()] if self.terms else []
        i = self.vars.index(var)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    def homogeneous_part(self, k: int, variables=None) -> "MPoly":
        """Degree-k part, degree measured in the given variables (default all)."""
        if variables is None:
            idx = range(len(self.vars))
        else:
            idx = [self.vars.index(v) for v in variables if v in self.vars]
        return MPoly._raw(self.vars, {e: c for e, c in self.terms.items() if sum(e[i] for i in idx) == k})

    def jet(self, k: int, variables=None) -> "MPoly":
        return self.homogeneous_part(k, variables)

    def order(self, variables=None) -> int:
        """Lowest degree present (-1 for zero)."""
        if not self.terms:
            return -1
        if variables is None:
            idx = range(len(self.vars))
        else:
            idx = [self.vars.index(v) for v in variables if v in self.vars]
        return min(sum(e[i] for i in idx) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading_term(self):
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    # calculus and substitution

    def partial(self, var: str) -> "MPoly":
        if var not in self.vars:
            return MPoly.zero(self.vars)
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = _norm(k * c)
        return MPoly._raw(self.vars, out)

    def substitute(self, bindings: dict) -> "MPoly":
        """Simultaneously replace variables by polynomials or scalars."""
        for name in bindings:
            if name not in self.vars:
                raise KeyError(f"cannot bind {name}: not a variable of {self.vars}")
        images = {}
        new_vars = []
        for name in self.vars:
            val = bindings.get(name, None)
            if name not in bindings:
                new_vars.append(name)
            elif isinstance(val, MPoly):
                new_vars.extend(val.vars)
        seen = []
        for v in new_vars:
            if v not in seen:
                seen.append(v)
        target = tuple(seen)
        for name in self.vars:
            if name in bindings:
                val = bindings[name]
                images[name] = val.with_vars(target) if isinstance(val, MPoly) else MPoly.const(val, target)
            else:
                images[name] = MPoly.var(name, target)
        powers = {name: [MPoly.const(1, target)] for name in self.vars}

        def power(name, k):
            lst = powers[name]
            while len(lst) <= k:
                lst.append(lst[-1] * images[name])
            return lst[k]

        result = MPoly.zero(target)
        for e, c in self.terms.items():
            term = MPoly.const(c, target)
            for name, k in zip(self.vars, e):
                if k:
                    term = term * power(name, k)
            result = result + term
        return result

    def evaluate(self, point: dict):
        """Value at a full assignment of scalars."""
        missing = [v for v in self.used_vars() if v not in point]
        if missing:
            raise KeyError(f"no value for {sorted(missing)}")
        cache = {}
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for name, k in zip(self.vars, e):
                if k:
                    key = (name, k)
                    p = cache.get(key)
                    if p is None:
                        p = point[name] ** k
                        cache[key] = p
                    term = term * p
            total = total + term
        return normalize(total)

    def map_coeffs(self, fn) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            c = _norm(fn(c))
            if c:
                out[e] = c
        return MPoly._raw(self.vars, out)

    def specialize_u(self, value, root_sign: int = 1) -> "MPoly":
        return self.map_coeffs(lambda c: specialize(c, value, root_sign))

    def permute_exponents(self, perm) -> "MPoly":
        """New exponent tuple at position j is old exponent at perm[j]."""
        return MPoly._raw(self.vars, {tuple(e[i] for i in perm): c for e, c in self.terms.items()})

    def drop_unused(self) -> "MPoly":
        used = self.used_vars()
        return self.with_vars(tuple(v for v in self.vars if v in used))

    # division

    def divide_exact(self, other: "MPoly") -> "MPoly":
        a, b = self._align(other)
        if not b:
            raise ZeroDivisionError("division by the zero polynomial")
        lb, cb = b.leading_term()
        rem = a
        quot = MPoly.zero(a.vars)
        while rem:
            le, lc = rem.leading_term()
            if any(x < y for x, y in zip(le, lb)):
                raise NotDivisible("remainder is nonzero")
            qe = tuple(x - y for x, y in zip(le, lb))
            qc = _norm(lc / cb)
            t = MPoly._raw(a.vars, {qe: qc})
            quot = quot + t
            rem = rem - t * b
        return quot

    def divides(self, other: "MPoly") -> bool:
        try:
            other.divide_exact(self)
            return True
        except NotDivisible:
            return False

    # printing

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: _grlex_key(ec[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            if isinstance(c, Fraction):
                if not mono:
                    s = scalar_str(c)
                elif c == 1:
                    s = mono
                elif c == -1:
                    s = "-" + mono
                else:
                    s = f"{scalar_str(c)}*{mono}"
            else:
                neg = isinstance(c, RatFunc) and c.num.lc() < 0
                cs = f"({-c})" if neg else f"({c})"
                s = f"{cs}*{mono}" if mono else cs
                if neg:
                    s = "-" + s
            if not pieces:
                pieces.append(s)
            elif s.startswith("-"):
                pieces.append(" - " + s[1:])
            else:
                pieces.append(" + " + s)
        return "".join(pieces)

    def __repr__(self):
        return f"MPoly({self.vars}, {self})"


def as_mpoly(x, variables=()) -> MPoly:
    if isinstance(x, MPoly):
        return x
    return MPoly.const(x, variables)


def linear_coefficients(p: MPoly, variables) -> list:
    """Coefficients of a linear form in the given variable order."""
    out = []
    for v in variables:
        out.append(p.coeff({v: 1}) if v in p.vars else Fraction(0))
    return out


def coefficient_field_elements(p: MPoly):
    return list(p.terms.values())


__all__ = ["MPoly", "NotDivisible", "as_mpoly", "linear_coefficients", "QuadExt", "RatFunc", "UPoly"]
