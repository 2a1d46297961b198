"""Exact sparse multivariate Laurent polynomials over the integers.

Monomials are maps ``variable id -> nonzero integer exponent``, coefficients
are arbitrary-precision integers, and every operation is exact.  Values are
immutable; arithmetic returns fresh polynomials.

The canonical text form ("3*x1^-1*x2 + 1") orders terms by their exponent
vector over the sorted variable set, descending lexicographically, so equal
polynomials always print identically.  This is what seed files, golden tests
and the HTTP service rely on.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping

# A monomial key: variable/exponent pairs, sorted by variable, exponents != 0.
Term = tuple[tuple[str, int], ...]


class InexactDivision(ArithmeticError):
    """Raised when a Laurent division leaves a nonzero remainder."""

    def __init__(self, message: str, remainder: "LaurentPoly"):
        super().__init__(f"{message}; remainder {remainder}")
        self.remainder = remainder


def _mk_term(pairs: Iterable[tuple[str, int]]) -> Term:
    return tuple(sorted((v, e) for v, e in pairs if e != 0))


def _term_mul(a: Term, b: Term) -> Term:
    exps: dict[str, int] = dict(a)
    for v, e in b:
        n = exps.get(v, 0) + e
        if n:
            exps[v] = n
        else:
            exps.pop(v, None)
    return tuple(sorted(exps.items()))


def _term_div(a: Term, b: Term) -> Term:
    exps: dict[str, int] = dict(a)
    for v, e in b:
        n = exps.get(v, 0) - e
        if n:
            exps[v] = n
        else:
            exps.pop(v, None)
    return tuple(sorted(exps.items()))


class LaurentPoly:
    """An element of Z[x_v, x_v^-1 : v in variables]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Term, int] | None = None):
        clean: dict[Term, int] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    clean[key] = clean.get(key, 0) + coeff
                    if not clean[key]:
                        del clean[key]
        self.terms: dict[Term, int] = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({(): 1})

    @staticmethod
    def constant(c: int) -> "LaurentPoly":
        return LaurentPoly({(): int(c)})

    @staticmethod
    def variable(name: str) -> "LaurentPoly":
        return LaurentPoly({((name, 1),): 1})

    @staticmethod
    def monomial(exponents: Mapping[str, int], coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({_mk_term(exponents.items()): int(coeff)})

    # -- predicates and accessors -----------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def is_constant(self) -> bool:
        return all(key == () for key in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_subtraction_free(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def coefficient(self, exponents: Mapping[str, int]) -> int:
        return self.terms.get(_mk_term(exponents.items()), 0)

    def variables(self) -> list[str]:
        seen: set[str] = set()
        for key in self.terms:
            for v, _ in key:
                seen.add(v)
        return sorted(seen)

    def num_terms(self) -> int:
        return len(self.terms)

    def min_exponent(self, var: str) -> int:
        """Smallest exponent of ``var`` over all terms (0 if absent from a term)."""
        if not self.terms:
            return 0
        return min(dict(key).get(var, 0) for key in self.terms)

    def max_exponent(self, var: str) -> int:
        if not self.terms:
            return 0
        return max(dict(key).get(var, 0) for key in self.terms)

    # -- ring operations ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == LaurentPoly.constant(other).terms
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            n = out.get(k, 0) + c
            if n:
                out[k] = n
            else:
                out.pop(k, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.constant(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly({k: c * other for k, c in self.terms.items()})
        out: dict[Term, int] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = _term_mul(ka, kb)
                n = out.get(k, 0) + ca * cb
                if n:
                    out[k] = n
                else:
                    out.pop(k, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.invert_monomial() ** (-n)
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def invert_monomial(self) -> "LaurentPoly":
        """Inverse, defined only when the polynomial is +-x^a."""
        if len(self.terms) != 1:
            raise InexactDivision("only monomials are invertible", self)
        (key, coeff), = self.terms.items()
        if coeff not in (1, -1):
            raise InexactDivision("monomial coefficient not a unit", self)
        return LaurentPoly({tuple((v, -e) for v, e in key): coeff})

    # -- division ----------------------------------------------------------

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / divisor in the Laurent ring.

        Runs leading-term reduction under the lexicographic order on full
        exponent vectors.  For an exact division this terminates after one
        step per quotient term; inexactness is detected either by a
        coefficient that fails to divide or by the candidate quotient term
        leaving the exponent window supp(self) - supp(divisor).
        """
        if divisor.is_zero():
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero():
            return LaurentPoly.zero()
        if divisor.is_monomial():
            (key, coeff), = divisor.terms.items()
            out: dict[Term, int] = {}
            for k, c in self.terms.items():
                if c % coeff:
                    raise InexactDivision("coefficient not divisible", self)
                out[_term_div(k, key)] = c // coeff
            return LaurentPoly(out)

        variables = sorted(set(self.variables()) | set(divisor.variables()))

        def vec(key: Term) -> tuple[int, ...]:
            d = dict(key)
            return tuple(d.get(v, 0) for v in variables)

        lo = {v: self.min_exponent(v) - divisor.max_exponent(v) for v in variables}
        hi = {v: self.max_exponent(v) - divisor.min_exponent(v) for v in variables}

        div_terms = sorted(divisor.terms, key=vec)
        lead_key = div_terms[-1]
        lead_coeff = divisor.terms[lead_key]

        remainder = dict(self.terms)
        quotient: dict[Term, int] = {}
        while remainder:
            rk = max(remainder, key=vec)
            rc = remainder[rk]
            if rc % lead_coeff:
                raise InexactDivision("leading coefficient not divisible",
                                      LaurentPoly(remainder))
            t_key = _term_div(rk, lead_key)
            t_exp = dict(t_key)
            for v in t_exp:
                if not (lo.get(v, 0) <= t_exp[v] <= hi.get(v, 0)):
                    raise InexactDivision("quotient support out of range",
                                          LaurentPoly(remainder))
            t_coeff = rc // lead_coeff
            quotient[t_key] = quotient.get(t_key, 0) + t_coeff
            for dk, dc in divisor.terms.items():
                k = _term_mul(t_key, dk)
                n = remainder.get(k, 0) - t_coeff * dc
                if n:
                    remainder[k] = n
                else:
                    remainder.pop(k, None)
        return LaurentPoly(quotient)

    # -- substitution ------------------------------------------------------

    def substitute(self, images: Mapping[str, "LaurentPoly"]) -> "LaurentPoly":
        """Substitute variables by polynomials.

        Unmapped variables stay themselves.  A variable occurring with a
        negative exponent must map to an invertible monomial.
        """
        cache: dict[tuple[str, int], LaurentPoly] = {}

        def image_power(v: str, e: int) -> LaurentPoly:
            got = cache.get((v, e))
            if got is not None:
                return got
            img = images.get(v)
            if img is None:
                out = LaurentPoly.monomial({v: e})
            elif e >= 0:
                out = img ** e
            else:
                out = img.invert_monomial() ** (-e)
            cache[(v, e)] = out
            return out

        total = LaurentPoly.zero()
        for key, coeff in self.terms.items():
            part = LaurentPoly.constant(coeff)
            for v, e in key:
                part = part * image_power(v, e)
            total = total + part
        return total

    def rename(self, mapping: Mapping[str, str]) -> "LaurentPoly":
        out: dict[Term, int] = {}
        for key, coeff in self.terms.items():
            new = _mk_term((mapping.get(v, v), e) for v, e in key)
            out[new] = out.get(new, 0) + coeff
        return LaurentPoly(out)

    def specialize_ones(self, names: Iterable[str]) -> "LaurentPoly":
        """Set every listed variable to 1."""
        drop = set(names)
        out: dict[Term, int] = {}
        for key, coeff in self.terms.items():
            new = tuple((v, e) for v, e in key if v not in drop)
            out[new] = out.get(new, 0) + coeff
        return LaurentPoly(out)

    def evaluate_int(self, values: Mapping[str, int]) -> int:
        """Evaluate at integer points (all variables must be mapped; negative
        exponents require the base to be +-1)."""
        total = 0
        for key, coeff in self.terms.items():
            part = coeff
            for v, e in key:
                base = values[v]
                if e < 0:
                    if base not in (1, -1):
                        raise ValueError(f"cannot invert {base}")
                    part *= base ** (-e % 2)
                else:
                    part *= base ** e
            total += part
        return total

    # -- monomial structure --------------------------------------------------

    def divisible_max_term(self) -> dict[str, int] | None:
        """Exponents of a term that every other term divides, if one exists.

        Existence means: some term's exponent vector dominates all others
        componentwise.  Returns None when there is no such term.
        """
        if not self.terms:
            return None
        best: dict[str, int] | None = None
        for key in self.terms:
            cand = dict(key)
            if best is None:
                best = cand
                continue
            merged = {v: max(best.get(v, 0), cand.get(v, 0))
                      for v in set(best) | set(cand)}
            best = {v: e for v, e in merged.items() if e != 0}
        assert best is not None
        for key in self.terms:
            d = dict(key)
            if any(d.get(v, 0) > best.get(v, 0) for v in d):
                return None
        top = _mk_term(best.items())
        return dict(top) if top in self.terms else None

    # -- canonical text and JSON -------------------------------------------

    def _ordered_terms(self) -> list[tuple[Term, int]]:
        # lexicographic on the (variable, exponent) pair sequence, descending:
        # "3*x1^-1*x2 + 1" puts the constant last
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for key, coeff in self._ordered_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in key)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    __repr__ = __str__

    def to_terms(self) -> list[dict]:
        return [{"coeff": c, "monomial": dict(k)} for k, c in self._ordered_terms()]

    @staticmethod
    def from_terms(items: Iterable[Mapping]) -> "LaurentPoly":
        out: dict[Term, int] = {}
        for item in items:
            key = _mk_term(item["monomial"].items())
            out[key] = out.get(key, 0) + int(item["coeff"])
        return LaurentPoly(out)

    def to_json(self) -> str:
        return json.dumps(self.to_terms())

    @staticmethod
    def from_json(text: str) -> "LaurentPoly":
        return LaurentPoly.from_terms(json.loads(text))

    @staticmethod
    def parse(text: str) -> "LaurentPoly":
        """Parse the canonical text form (inverse of ``str``)."""
        text = text.strip()
        if text in ("", "0"):
            return LaurentPoly.zero()
        total = LaurentPoly.zero()
        for sign, chunk in _split_top_level(text):
            total = total + _parse_term(chunk) * sign
        return total


def _split_top_level(text: str) -> Iterator[tuple[int, str]]:
    """Split a polynomial string on +/- that are not inside brackets."""
    depth = 0
    sign = 1
    cur: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "[":
            depth += 1
            cur.append(ch)
        elif ch == "]":
            depth -= 1
            cur.append(ch)
        elif ch in "+-" and depth == 0 and (not cur or cur[-1] != "^"):
            chunk = "".join(cur).strip()
            if chunk:
                yield sign, chunk
                sign = 1
            sign *= -1 if ch == "-" else 1
            cur = []
        else:
            cur.append(ch)
        i += 1
    chunk = "".join(cur).strip()
    if chunk:
        yield sign, chunk


def _parse_term(chunk: str) -> LaurentPoly:
    coeff = 1
    exps: dict[str, int] = {}
    for factor in chunk.split("*"):
        factor = factor.strip()
        if not factor:
            continue
        if factor.lstrip("-").isdigit():
            coeff *= int(factor)
            continue
        if "^" in factor:
            var, _, power = factor.rpartition("^")
            exps[var] = exps.get(var, 0) + int(power)
        else:
            exps[factor] = exps.get(factor, 0) + 1
    return LaurentPoly.monomial(exps, coeff)


# -- tropical semifield -----------------------------------------------------


class TropicalMonomial:
    """A Laurent monomial in the tropical semifield (min-plus on exponents)."""

    __slots__ = ("exps",)

    def __init__(self, exps: Mapping[str, int] | None = None):
        self.exps: dict[str, int] = {v: int(e) for v, e in (exps or {}).items() if e}

    @staticmethod
    def one() -> "TropicalMonomial":
        return TropicalMonomial()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TropicalMonomial):
            return NotImplemented
        return self.exps == other.exps

    def __hash__(self) -> int:
        return hash(frozenset(self.exps.items()))

    def __mul__(self, other: "TropicalMonomial") -> "TropicalMonomial":
        out = dict(self.exps)
        for v, e in other.exps.items():
            out[v] = out.get(v, 0) + e
        return TropicalMonomial(out)

    def __truediv__(self, other: "TropicalMonomial") -> "TropicalMonomial":
        out = dict(self.exps)
        for v, e in other.exps.items():
            out[v] = out.get(v, 0) - e
        return TropicalMonomial(out)

    def __pow__(self, n: int) -> "TropicalMonomial":
        return TropicalMonomial({v: e * n for v, e in self.exps.items()})

    def oplus(self, other: "TropicalMonomial") -> "TropicalMonomial":
        keys = set(self.exps) | set(other.exps)
        return TropicalMonomial(
            {v: min(self.exps.get(v, 0), other.exps.get(v, 0)) for v in keys})

    def as_poly(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.exps)

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}"
                        for v, e in sorted(self.exps.items()))

    __repr__ = __str__


def tropical_eval(poly: LaurentPoly,
                  assignment: Mapping[str, TropicalMonomial]) -> TropicalMonomial:
    """Evaluate a subtraction-free polynomial in the tropical semifield.

    Addition is componentwise min of exponent vectors; multiplication adds
    them.  Coefficients must be positive (they are invisible tropically).
    """
    if poly.is_zero():
        raise ValueError("tropical evaluation of 0 is undefined")
    if not poly.is_subtraction_free():
        raise ValueError("tropical evaluation needs a subtraction-free polynomial")
    result: TropicalMonomial | None = None
    for key, _coeff in poly.terms.items():
        value = TropicalMonomial.one()
        for v, e in key:
            base = assignment.get(v)
            if base is None:
                raise KeyError(f"no tropical value for variable {v!r}")
            value = value * (base ** e)
        result = value if result is None else result.oplus(value)
    assert result is not None
    return result
