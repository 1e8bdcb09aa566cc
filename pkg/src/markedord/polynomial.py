"""Exact multivariate polynomials over the rationals.

A MultiPoly is an immutable map from exponent tuples (one slot per declared
variable) to nonzero Fractions.  Ring operations on polynomials with
different variable lists work over the union of the two lists.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import DuplicateAbscissa, ParseError, UnknownVariable


def _frac(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c)


def format_rational(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class MultiPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables=(), terms=None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        clean = {}
        n = len(self.variables)
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r}")
            c = _frac(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c, variables=()):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name, variables=None):
        variables = tuple(variables) if variables is not None else (name,)
        if name not in variables:
            raise UnknownVariable(name)
        exps = tuple(int(v == name) for v in variables)
        return cls(variables, {exps: 1})

    @classmethod
    def zero(cls, variables=()):
        return cls(variables)

    # variable bookkeeping --------------------------------------------
    def with_variables(self, variables):
        """Re-express over ``variables``, which must contain every used variable."""
        variables = tuple(variables)
        pos = {v: i for i, v in enumerate(variables)}
        for exps in self.terms:
            for v, e in zip(self.variables, exps):
                if e and v not in pos:
                    raise UnknownVariable(v)
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(variables)
            for v, e in zip(self.variables, exps):
                if e:
                    new[pos[v]] = e
            out[tuple(new)] = c
        return MultiPoly(variables, out)

    def rename(self, mapping):
        return MultiPoly([mapping.get(v, v) for v in self.variables], self.terms)

    def _align(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.variables)
        if other.variables == self.variables:
            return self, other
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.with_variables(merged), other.with_variables(merged)

    # ring operations -------------------------------------------------
    def __add__(self, other):
        a, b = self._align(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(a.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._align(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._align(other)
        out = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(a.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c):
        c = _frac(c)
        return MultiPoly(self.variables, {e: v / c for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.variables)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        used = self.used_variables()
        p = self.with_variables(used)
        return hash((p.variables, frozenset(p.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # queries ---------------------------------------------------------
    def used_variables(self):
        return tuple(v for i, v in enumerate(self.variables)
                     if any(e[i] for e in self.terms))

    def _pos(self, v):
        try:
            return self.variables.index(v)
        except ValueError:
            raise UnknownVariable(v) from None

    def degree_in(self, v):
        i = self._pos(v)
        return max((e[i] for e in self.terms), default=0)

    def total_degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exps):
        if isinstance(exps, dict):
            exps = tuple(exps.get(v, 0) for v in self.variables)
        return self.terms.get(tuple(exps), Fraction(0))

    def eval(self, point):
        """Exact evaluation; ``point`` maps every used variable to a rational."""
        vals = []
        for i, v in enumerate(self.variables):
            if v in point:
                vals.append(_frac(point[v]))
            elif any(e[i] for e in self.terms):
                raise UnknownVariable(v)
            else:
                vals.append(Fraction(0))
        total = Fraction(0)
        for exps, c in self.terms.items():
            t = c
            for x, e in zip(vals, exps):
                if e:
                    t *= x ** e
            total += t
        return total

    def __call__(self, **point):
        return self.eval(point)

    def substitute(self, mapping):
        """Replace variables by polynomials; unmapped variables stay as they are."""
        images = []
        for v in self.variables:
            images.append(mapping[v] if v in mapping else MultiPoly.var(v))
        result = MultiPoly.zero()
        for exps, c in self.terms.items():
            term = MultiPoly.constant(c)
            for img, e in zip(images, exps):
                if e:
                    term = term * (img ** e)
            result = result + term
        return result

    # output ----------------------------------------------------------
    def sorted_terms(self):
        """Graded lexicographic order, variables ranked by declaration order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exps) if e
            )
            mag = format_rational(abs(c))
            body = f"{mag}*{mono}" if mono else mag
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r}, vars={list(self.variables)!r})"

    def to_json(self):
        return {
            "variables": [str(v) for v in self.variables],
            "terms": [
                {"exps": {str(v): e for v, e in zip(self.variables, exps) if e},
                 "coeff": format_rational(c)}
                for exps, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data):
        try:
            terms = data["terms"]
            variables = list(data.get("variables", []))
            for t in terms:
                for v in t["exps"]:
                    if v not in variables:
                        variables.append(v)
            out = {}
            for t in terms:
                exps = tuple(int(t["exps"].get(v, 0)) for v in variables)
                out[exps] = out.get(exps, 0) + Fraction(t["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(message=f"bad polynomial JSON: {exc}") from exc
        return cls(variables, out)


@dataclass(frozen=True)
class LinForm:
    """Integer affine form sum(coeffs[v] * v) + constant."""

    coeffs: dict = field(default_factory=dict)
    constant: int = 0

    def to_poly(self, variables=None):
        variables = tuple(variables) if variables is not None else tuple(self.coeffs)
        p = MultiPoly.constant(self.constant, variables)
        for v, a in self.coeffs.items():
            if a:
                p = p + a * MultiPoly.var(v, variables)
        return p

    def shifted(self, delta):
        return LinForm(dict(self.coeffs), self.constant + delta)


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def evaluate(p, point):
    return p.eval(point)


def degree_in(p, v):
    return p.degree_in(v)


def rising_binomial(t, d, variables=None):
    """C(t + d, d) = (t+1)(t+2)...(t+d) / d! as a polynomial in the form t."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    base = t.to_poly(variables) if isinstance(t, LinForm) else t
    result = MultiPoly.constant(1, base.variables)
    for i in range(1, d + 1):
        result = result * (base + i)
    return result / factorial(d)


def interpolate_univariate(samples, var="m"):
    """Lagrange interpolant through ``(x, y)`` samples, exact."""
    samples = [(int(x), _frac(y)) for x, y in samples]
    xs = [x for x, _ in samples]
    if len(set(xs)) != len(xs):
        dup = next(x for x in xs if xs.count(x) > 1)
        raise DuplicateAbscissa(dup)
    m = MultiPoly.var(var)
    result = MultiPoly.zero((var,))
    for i, (xi, yi) in enumerate(samples):
        if not yi:
            continue
        basis = MultiPoly.constant(yi, (var,))
        denom = Fraction(1)
        for j, (xj, _) in enumerate(samples):
            if j != i:
                basis = basis * (m - xj)
                denom *= xi - xj
        result = result + basis / denom
    return result
