"""Exact sparse multivariate polynomial arithmetic over the integers.

The ring is Z[t, x1, x2, ..., y1, y2, ..., a1, a2, ...]: four variable
families with the fixed total order t < x1 < x2 < ... < y1 < y2 < ...
< a1 < a2 < ... (family first, then index ascending).  Monomials are
compared in graded-lexicographic order: higher total degree wins, and ties
are broken by the exponent of the earliest variable in the family order,
so e.g. x1^2 > x1*x2 > x2^2.

Coefficients are Python ints, so nothing ever overflows.  Canonical form is
maintained everywhere: no zero coefficient and no zero exponent is ever
stored, and two polynomials are equal iff their term maps are equal.

All values are immutable and every operation is a pure function; values can
be shared freely across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, Mapping


class NotDivisible(ArithmeticError):
    """exact_div was asked for a quotient that does not exist in the ring."""


class IndexUnderflow(ValueError):
    """A variable index would be shifted below 1."""


class UnassignedVariable(LookupError):
    """eval_int met a variable with no value in the assignment."""


class Family(IntEnum):
    """Variable families, in their fixed order."""

    T = 0
    X = 1
    Y = 2
    A = 3


_FAMILY_LETTER = {Family.T: "t", Family.X: "x", Family.Y: "y", Family.A: "a"}
_LETTER_FAMILY = {v: k for k, v in _FAMILY_LETTER.items()}


@dataclass(frozen=True, order=True)
class Variable:
    """An indexed variable.  The t family has a single member, index 0."""

    family: Family
    index: int = 0

    def __post_init__(self) -> None:
        if self.family == Family.T:
            if self.index != 0:
                raise ValueError("t is a single variable; its index is fixed at 0")
        elif self.index < 1:
            raise ValueError(f"{self.family.name} indices start at 1, got {self.index}")

    def text(self) -> str:
        letter = _FAMILY_LETTER[self.family]
        return letter if self.family == Family.T else f"{letter}{self.index}"


def tvar() -> Variable:
    """The interpolation variable t."""
    return Variable(Family.T, 0)


def xvar(i: int) -> Variable:
    return Variable(Family.X, i)


def yvar(i: int) -> Variable:
    return Variable(Family.Y, i)


def avar(i: int) -> Variable:
    return Variable(Family.A, i)


@dataclass(frozen=True)
class Monomial:
    """A product of variable powers; exponents are >= 1, sorted by variable."""

    exps: tuple[tuple[Variable, int], ...] = ()

    def __post_init__(self) -> None:
        previous: Variable | None = None
        for variable, exponent in self.exps:
            if exponent < 1:
                raise ValueError(f"stored exponent on {variable.text()} must be >= 1")
            if previous is not None and not previous < variable:
                raise ValueError("exponent pairs must be strictly sorted by variable")
            previous = variable

    @staticmethod
    def of(exponents: Mapping[Variable, int] | Iterable[tuple[Variable, int]]) -> "Monomial":
        """Build a monomial from (variable, exponent) data, merging duplicates."""
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        merged: dict[Variable, int] = {}
        for variable, exponent in items:
            merged[variable] = merged.get(variable, 0) + exponent
        cleaned = {v: e for v, e in merged.items() if e != 0}
        return Monomial(tuple(sorted(cleaned.items())))

    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def family_degree(self, family: Family) -> int:
        return sum(e for v, e in self.exps if v.family == family)

    def mul(self, other: "Monomial") -> "Monomial":
        if not self.exps:
            return other
        if not other.exps:
            return self
        return Monomial.of(tuple(self.exps) + tuple(other.exps))

    def divides(self, other: "Monomial") -> bool:
        """True iff self divides other, i.e. every exponent fits."""
        theirs = dict(other.exps)
        return all(theirs.get(v, 0) >= e for v, e in self.exps)

    def quotient(self, divisor: "Monomial") -> "Monomial":
        """self / divisor; the caller must know divisor divides self."""
        ours = dict(self.exps)
        for variable, exponent in divisor.exps:
            remaining = ours.get(variable, 0) - exponent
            if remaining < 0:
                raise ValueError(f"{divisor.text()} does not divide {self.text()}")
            if remaining:
                ours[variable] = remaining
            else:
                ours.pop(variable, None)
        return Monomial(tuple(sorted(ours.items())))

    def sort_key(self):
        """Graded-lex key: compare by total degree, then earliest variable."""
        return (
            self.degree(),
            tuple(((-v.family, -v.index), e) for v, e in self.exps),
        )

    def text(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(
            v.text() + (f"^{e}" if e >= 2 else "") for v, e in self.exps
        )


_ONE_MONOMIAL = Monomial()


class Polynomial:
    """An immutable sparse polynomial: a map from Monomial to nonzero int."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        data: dict[Monomial, int] = {}
        if terms:
            for monomial, coefficient in terms.items():
                if not isinstance(coefficient, int):
                    raise TypeError(f"coefficients must be int, got {type(coefficient)!r}")
                if coefficient != 0:
                    data[monomial] = coefficient
        self._terms = data
        self._hash: int | None = None

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls({_ONE_MONOMIAL: 1})

    @classmethod
    def const(cls, value: int) -> "Polynomial":
        return cls({_ONE_MONOMIAL: value})

    @classmethod
    def variable(cls, v: Variable) -> "Polynomial":
        return cls({Monomial(((v, 1),)): 1})

    @classmethod
    def term(cls, monomial: Monomial, coefficient: int = 1) -> "Polynomial":
        return cls({monomial: coefficient})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> dict[Monomial, int]:
        """A copy of the term map (monomial -> nonzero coefficient)."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial (reporting convention)."""
        if not self._terms:
            return -1
        return max(m.degree() for m in self._terms)

    def leading(self) -> tuple[Monomial, int]:
        """The graded-lex leading (monomial, coefficient) pair."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        monomial = max(self._terms, key=Monomial.sort_key)
        return monomial, self._terms[monomial]

    def variables(self) -> set[Variable]:
        out: set[Variable] = set()
        for monomial in self._terms:
            out.update(v for v, _ in monomial.exps)
        return out

    def coefficient(self, monomial: Monomial) -> int:
        return self._terms.get(monomial, 0)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, int):
            return Polynomial.const(value)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = Polynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            total = merged.get(monomial, 0) + coefficient
            if total:
                merged[monomial] = total
            else:
                merged.pop(monomial, None)
        return Polynomial(merged)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = Polynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = Polynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        other = Polynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be non-negative ints")
        result = Polynomial.one()
        for _ in range(exponent):
            result = mul(result, self)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({canonical_text(self)!r})"

    def __str__(self) -> str:
        return canonical_text(self)


def tpoly() -> Polynomial:
    return Polynomial.variable(tvar())


def xpoly(i: int) -> Polynomial:
    return Polynomial.variable(xvar(i))


def ypoly(i: int) -> Polynomial:
    return Polynomial.variable(yvar(i))


def apoly(i: int) -> Polynomial:
    return Polynomial.variable(avar(i))


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    """Coefficient-wise sum in canonical form."""
    return p + q


def mul(p: Polynomial, q: Polynomial, degree_cap: int | None = None) -> Polynomial:
    """Product of p and q.

    With degree_cap, every product monomial of total degree > degree_cap is
    discarded; this realizes the degree-truncated power-series ring used by
    the Cauchy identity check.
    """
    if p.is_zero() or q.is_zero():
        return Polynomial.zero()
    out: dict[Monomial, int] = {}
    for m1, c1 in p.items():
        if degree_cap is not None and m1.degree() > degree_cap:
            continue
        for m2, c2 in q.items():
            monomial = m1.mul(m2)
            if degree_cap is not None and monomial.degree() > degree_cap:
                continue
            total = out.get(monomial, 0) + c1 * c2
            if total:
                out[monomial] = total
            else:
                del out[monomial]
    return Polynomial(out)


def truncate(p: Polynomial, degree_cap: int) -> Polynomial:
    """Drop every term of total degree > degree_cap.

    Truncation is the quotient map onto the degree-capped ring, so applying
    it after full arithmetic agrees with doing all arithmetic capped.
    """
    return Polynomial({m: c for m, c in p.items() if m.degree() <= degree_cap})


def exact_div(p: Polynomial, d: Polynomial) -> Polynomial:
    """The exact quotient q with q*d = p.

    Works by repeatedly cancelling the graded-lex leading term of the running
    remainder against the leading term of d.  Raises NotDivisible as soon as
    a leading term fails to divide (monomial or integer coefficient), which
    signals either a bug or a false identity.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    divisor_monomial, divisor_coeff = d.leading()
    quotient: dict[Monomial, int] = {}
    remainder = p.terms()
    while remainder:
        lead = max(remainder, key=Monomial.sort_key)
        lead_coeff = remainder[lead]
        if not divisor_monomial.divides(lead) or lead_coeff % divisor_coeff != 0:
            raise NotDivisible(
                f"leading term {lead_coeff}*{lead.text()} is not divisible "
                f"by {divisor_coeff}*{divisor_monomial.text()}"
            )
        q_monomial = lead.quotient(divisor_monomial)
        q_coeff = lead_coeff // divisor_coeff
        quotient[q_monomial] = quotient.get(q_monomial, 0) + q_coeff
        for m2, c2 in d.items():
            monomial = q_monomial.mul(m2)
            total = remainder.get(monomial, 0) - q_coeff * c2
            if total:
                remainder[monomial] = total
            else:
                remainder.pop(monomial, None)
    return Polynomial(quotient)


def substitute_zero(p: Polynomial, family: Family, from_index: int) -> Polynomial:
    """Set every variable of `family` with index >= from_index to zero.

    Every term containing such a variable is removed.
    """
    if family == Family.T:
        raise ValueError("substitute_zero applies to the X, Y and A families only")
    kept = {
        m: c
        for m, c in p.items()
        if not any(v.family == family and v.index >= from_index for v, _ in m.exps)
    }
    return Polynomial(kept)


def substitute_family(
    p: Polynomial, family: Family, target_family: Family, index_shift: int
) -> Polynomial:
    """Rename every variable (family, k) to (target_family, k + index_shift).

    Other families are untouched.  Raises IndexUnderflow if any shifted index
    falls below 1.  Renaming may merge exponents with variables already
    present in a term (e.g. when x-variables land on existing a-variables).
    """
    if family == Family.T or target_family == Family.T:
        raise ValueError("substitute_family applies to the X, Y and A families only")
    if family == target_family and index_shift == 0:
        return p
    out: dict[Monomial, int] = {}
    for monomial, coefficient in p.items():
        pairs: list[tuple[Variable, int]] = []
        for variable, exponent in monomial.exps:
            if variable.family == family:
                shifted = variable.index + index_shift
                if shifted < 1:
                    raise IndexUnderflow(
                        f"{variable.text()} shifted by {index_shift} leaves the index range"
                    )
                variable = Variable(target_family, shifted)
            pairs.append((variable, exponent))
        renamed = Monomial.of(pairs)
        total = out.get(renamed, 0) + coefficient
        if total:
            out[renamed] = total
        else:
            del out[renamed]
    return Polynomial(out)


def eval_int(p: Polynomial, assignment: Mapping[Variable, int]) -> int:
    """Exact integer value of p at an integer point.

    The assignment must cover every variable occurring in p; a missing
    variable raises UnassignedVariable naming it.
    """
    total = 0
    for monomial, coefficient in p.items():
        value = coefficient
        for variable, exponent in monomial.exps:
            if variable not in assignment:
                raise UnassignedVariable(f"no value assigned to {variable.text()}")
            value *= assignment[variable] ** exponent
        total += value
    return total


def canonical_text(p: Polynomial) -> str:
    """Deterministic text form; terms in descending graded-lex order.

    Grammar: poly := "0" | term (" + " term | " - " term)*, with the sign of
    the leading term absorbed into an optional leading "-".  A term's integer
    coefficient is omitted when |coeff| = 1 and at least one variable factor
    exists; exponents appear only when >= 2.
    """
    if p.is_zero():
        return "0"
    ordered = sorted(p.items(), key=lambda item: item[0].sort_key(), reverse=True)
    chunks: list[str] = []
    for position, (monomial, coefficient) in enumerate(ordered):
        magnitude = abs(coefficient)
        if not monomial.exps:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial.text()
        else:
            body = f"{magnitude}*{monomial.text()}"
        if position == 0:
            chunks.append(body if coefficient > 0 else f"-{body}")
        else:
            chunks.append(f" + {body}" if coefficient > 0 else f" - {body}")
    return "".join(chunks)


_TERM_SEP_RE = re.compile(r" ([+-]) ")
_FACTOR_RE = re.compile(r"(t|[xya][1-9][0-9]*)(?:\^([0-9]+))?\Z")


def _variable_from_text(token: str) -> Variable:
    family = _LETTER_FAMILY[token[0]]
    if family == Family.T:
        return tvar()
    return Variable(family, int(token[1:]))


def _parse_term(chunk: str) -> tuple[Monomial, int]:
    if not chunk or " " in chunk:
        raise ValueError(f"malformed term {chunk!r}")
    factors = chunk.split("*")
    coefficient = 1
    if factors[0].isdigit():
        coefficient = int(factors[0])
        factors = factors[1:]
    exponents: dict[Variable, int] = {}
    for factor in factors:
        match = _FACTOR_RE.match(factor)
        if not match:
            raise ValueError(f"malformed factor {factor!r} in term {chunk!r}")
        variable = _variable_from_text(match.group(1))
        exponent = int(match.group(2)) if match.group(2) else 1
        if match.group(2) and exponent < 2:
            raise ValueError(f"explicit exponent must be >= 2 in term {chunk!r}")
        if variable in exponents:
            raise ValueError(f"repeated variable {variable.text()} in term {chunk!r}")
        exponents[variable] = exponent
    return Monomial.of(exponents), coefficient


def parse_poly(text: str) -> Polynomial:
    """Parse the canonical text form; inverse of canonical_text."""
    s = text.strip()
    if s == "0":
        return Polynomial.zero()
    if not s:
        raise ValueError("empty polynomial text")
    sign = 1
    if s.startswith("-"):
        sign = -1
        s = s[1:]
    pieces = _TERM_SEP_RE.split(s)
    signed_terms: list[tuple[int, str]] = [(sign, pieces[0])]
    for operator, chunk in zip(pieces[1::2], pieces[2::2]):
        signed_terms.append((1 if operator == "+" else -1, chunk))
    accumulated: dict[Monomial, int] = {}
    for term_sign, chunk in signed_terms:
        monomial, coefficient = _parse_term(chunk)
        accumulated[monomial] = accumulated.get(monomial, 0) + term_sign * coefficient
    return Polynomial(accumulated)
