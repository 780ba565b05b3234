"""Exact sparse arithmetic for even Laurent polynomials and truncated series.

Everything downstream (graph counts, volume polynomials, residue checks)
works with Laurent polynomials that contain only even powers of each
variable t_j.  Such a polynomial is stored sparsely as a mapping

    exponents (a_1, ..., a_n)  ->  coefficient,

where ``a_j`` is the (possibly negative) exponent of ``u_j = t_j**2`` and
every coefficient is a nonzero ``fractions.Fraction``.  The total degree in
t of a term is therefore ``2 * sum(a)``.

All values are immutable by convention: no operation mutates its operands,
so shared references (including the memo tables built on top of this
module) are safe under concurrent readers.

Coefficients use ``fractions.Fraction`` directly -- arbitrary precision,
always reduced, positive denominator -- and are serialized as exact
``"numerator/denominator"`` strings, never floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

#: Exact rational scalar type used across the package.
Rational = Fraction

Exponents = tuple[int, ...]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class EvenLaurentPoly:
    """A Laurent polynomial in t_1..t_n involving only even powers.

    Parameters
    ----------
    arity:
        Number of variables ``n`` (0 is allowed and means a constant).
    terms:
        Mapping from integer exponent vectors of length ``arity`` (in the
        squared variables ``u_j = t_j**2``) to rational coefficients.
        Zero coefficients are dropped on construction.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Sequence[int], object] | None = None):
        if arity < 0:
            raise ValueError("arity must be nonnegative")
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(exps)
            if len(key) != arity:
                raise ValueError(f"exponent vector {key} does not match arity {arity}")
            if not all(isinstance(e, int) for e in key):
                raise ValueError(f"exponents must be integers: {key}")
            c = _as_fraction(coeff)
            if c:
                clean[key] = clean.get(key, Fraction(0)) + c
                if not clean[key]:
                    del clean[key]
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("EvenLaurentPoly is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "EvenLaurentPoly":
        return cls(arity, {})

    @classmethod
    def constant(cls, arity: int, value) -> "EvenLaurentPoly":
        return cls(arity, {(0,) * arity: _as_fraction(value)})

    @classmethod
    def monomial(cls, arity: int, exponents: Sequence[int], coefficient=1) -> "EvenLaurentPoly":
        return cls(arity, {tuple(exponents): _as_fraction(coefficient)})

    # -- ring operations ------------------------------------------------

    def _require_same_shape(self, other: "EvenLaurentPoly") -> None:
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} != {other.arity}")

    def __add__(self, other: "EvenLaurentPoly") -> "EvenLaurentPoly":
        self._require_same_shape(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, Fraction(0)) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return EvenLaurentPoly(self.arity, out)

    def __neg__(self) -> "EvenLaurentPoly":
        return EvenLaurentPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "EvenLaurentPoly") -> "EvenLaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "EvenLaurentPoly":
        if isinstance(other, EvenLaurentPoly):
            self._require_same_shape(other)
            out: dict[Exponents, Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple(x + y for x, y in zip(e1, e2))
                    s = out.get(key, Fraction(0)) + c1 * c2
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
            return EvenLaurentPoly(self.arity, out)
        c = _as_fraction(other)
        return EvenLaurentPoly(self.arity, {e: c * v for e, v in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "EvenLaurentPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = EvenLaurentPoly.constant(self.arity, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EvenLaurentPoly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    __hash__ = None  # mutable dict inside; identity hashing would mislead

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"EvenLaurentPoly({self.arity}, 0)"
        bits = [f"{c}*u^{list(e)}" for e, c in self.sorted_terms()]
        return f"EvenLaurentPoly({self.arity}, {' + '.join(bits)})"

    # -- calculus and structure -----------------------------------------

    def d_square(self, var: int) -> "EvenLaurentPoly":
        """Partial derivative with respect to ``u_var = t_var**2`` (0-based)."""
        self._check_var(var)
        out: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            k = exps[var]
            if k == 0:
                continue
            key = exps[:var] + (k - 1,) + exps[var + 1 :]
            s = out.get(key, Fraction(0)) + c * k
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return EvenLaurentPoly(self.arity, out)

    def shift(self, var: int, k: int) -> "EvenLaurentPoly":
        """Multiply by ``u_var**k``."""
        self._check_var(var)
        return EvenLaurentPoly(
            self.arity,
            {e[:var] + (e[var] + k,) + e[var + 1 :]: c for e, c in self.terms.items()},
        )

    def substitute_slots(self, mapping: Mapping[int, int], new_arity: int) -> "EvenLaurentPoly":
        """Re-embed into ``new_arity`` variables via an injective slot map.

        ``mapping[old_slot] = new_slot`` must cover every slot this
        polynomial actually uses; unmapped new slots get exponent 0.
        """
        targets = list(mapping.values())
        if len(set(targets)) != len(targets):
            raise ValueError("slot map must be injective")
        if any(not 0 <= s < new_arity for s in targets):
            raise ValueError("slot map target out of range")
        out: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            key = [0] * new_arity
            for old, e in enumerate(exps):
                if e == 0:
                    continue
                if old not in mapping:
                    raise ValueError(f"slot {old} used but not mapped")
                key[mapping[old]] = e
            k = tuple(key)
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return EvenLaurentPoly(new_arity, out)

    def diagonal_merge(self, keep: int, absorb: int) -> "EvenLaurentPoly":
        """Identify variable ``absorb`` with variable ``keep`` (0-based).

        Exponents add; the absorbed slot disappears and the arity drops
        by one.  Slots after ``absorb`` shift down.
        """
        self._check_var(keep)
        self._check_var(absorb)
        if keep == absorb:
            raise ValueError("cannot merge a slot with itself")
        out: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            merged = list(exps)
            merged[keep] += merged[absorb]
            del merged[absorb]
            key = tuple(merged)
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return EvenLaurentPoly(self.arity - 1, out)

    def leading_part(self) -> "EvenLaurentPoly":
        """Terms of maximal total degree (in t: ``2*sum(a)``)."""
        if not self.terms:
            return self
        top = max(sum(e) for e in self.terms)
        return EvenLaurentPoly(
            self.arity, {e: c for e, c in self.terms.items() if sum(e) == top}
        )

    def max_total_degree(self) -> int | None:
        """Maximal ``sum(a)`` over terms, or None for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=None)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def evaluate(self, point: Sequence[object]) -> Fraction:
        """Evaluate at a rational point; nonzero coordinates required
        wherever a negative exponent occurs."""
        if len(point) != self.arity:
            raise ValueError("point length does not match arity")
        us = [_as_fraction(x) ** 2 for x in point]
        total = Fraction(0)
        for exps, c in self.terms.items():
            v = c
            for u, e in zip(us, exps):
                if e == 0:
                    continue
                if u == 0 and e < 0:
                    raise ZeroDivisionError("negative exponent at a zero coordinate")
                v *= u**e
            total += v
        return total

    def partial_evaluate(self, assignments: Mapping[int, object]) -> "EvenLaurentPoly":
        """Substitute rational values for a subset of slots.

        Returns a polynomial in the remaining variables; their relative
        order is preserved.
        """
        for var in assignments:
            self._check_var(var)
        values = {var: _as_fraction(x) ** 2 for var, x in assignments.items()}
        keep = [i for i in range(self.arity) if i not in values]
        out: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            v = c
            for var, u in values.items():
                e = exps[var]
                if e == 0:
                    continue
                if u == 0 and e < 0:
                    raise ZeroDivisionError("negative exponent at a zero coordinate")
                v *= u**e
            key = tuple(exps[i] for i in keep)
            s = out.get(key, Fraction(0)) + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return EvenLaurentPoly(len(keep), out)

    def _check_var(self, var: int) -> None:
        if not 0 <= var < self.arity:
            raise ValueError(f"variable index {var} out of range for arity {self.arity}")

    # -- canonical forms --------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms sorted lexicographically by exponent vector (the canonical
        order used by every serializer)."""
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def to_json_dict(self) -> dict:
        return {
            "arity": self.arity,
            "terms": [
                {
                    "exponents": list(e),
                    "coefficient": f"{c.numerator}/{c.denominator}",
                }
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "EvenLaurentPoly":
        arity = doc["arity"]
        terms: dict[Exponents, Fraction] = {}
        for item in doc["terms"]:
            terms[tuple(item["exponents"])] = Fraction(item["coefficient"])
        return cls(arity, terms)

    def to_latex(self, var: str = "t") -> str:
        """Render grouped by total degree, highest first."""
        if not self.terms:
            return "0"
        groups: dict[int, list[str]] = {}
        for exps, c in self.sorted_terms():
            mono = "".join(
                f"{var}_{{{j + 1}}}^{{{2 * e}}}" for j, e in enumerate(exps) if e
            )
            if c.denominator == 1:
                num = str(abs(c.numerator))
            else:
                num = rf"\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
            if mono and num == "1":
                num = ""
            sign = "-" if c < 0 else "+"
            groups.setdefault(sum(exps), []).append(f"{sign} {num}{mono}".strip())
        lines = []
        for deg in sorted(groups, reverse=True):
            lines.append(" ".join(groups[deg]))
        text = " ".join(lines)
        return text[2:] if text.startswith("+ ") else text


def divided_difference(f: EvenLaurentPoly, slot_a: int, slot_b: int) -> EvenLaurentPoly:
    """Exact divided difference ``(f - f|_{u_a -> u_b}) / (u_a - u_b)``.

    ``f`` must not involve ``slot_b``; the result is an even Laurent
    polynomial of the same arity using both slots.  Division is performed
    by synthetic expansion per monomial, then re-multiplied to verify
    exactness -- a nonzero remainder means an internal arithmetic bug and
    aborts.
    """
    f._check_var(slot_a)
    f._check_var(slot_b)
    if slot_a == slot_b:
        raise ValueError("divided difference needs two distinct slots")
    if any(e[slot_b] for e in f.terms):
        raise ValueError(f"slot {slot_b} must be free in the input")

    out: dict[Exponents, Fraction] = {}

    def bump(base: Exponents, ea: int, eb: int, c: Fraction) -> None:
        key = list(base)
        key[slot_a] = ea
        key[slot_b] = eb
        k = tuple(key)
        s = out.get(k, Fraction(0)) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)

    for exps, c in f.terms.items():
        k = exps[slot_a]
        if k > 0:
            # (u_a^k - u_b^k)/(u_a - u_b) = sum_{i<k} u_a^i u_b^{k-1-i}
            for i in range(k):
                bump(exps, i, k - 1 - i, c)
        elif k < 0:
            # (u_a^k - u_b^k)/(u_a - u_b) = -sum_{i<-k} u_a^{k+i} u_b^{-1-i}
            for i in range(-k):
                bump(exps, k + i, -1 - i, -c)
    result = EvenLaurentPoly(f.arity, out)

    # abort rather than return a truncated quotient
    swapped = _swap_slot(f, slot_a, slot_b)
    u_a = EvenLaurentPoly.monomial(f.arity, _unit(f.arity, slot_a))
    u_b = EvenLaurentPoly.monomial(f.arity, _unit(f.arity, slot_b))
    if (u_a - u_b) * result != f - swapped:
        raise ArithmeticError("divided difference left a nonzero remainder")
    return result


def _unit(arity: int, slot: int) -> Exponents:
    return tuple(1 if i == slot else 0 for i in range(arity))


def _swap_key(exps: Exponents, a: int, b: int) -> Exponents:
    key = list(exps)
    key[a], key[b] = key[b], key[a]
    return tuple(key)


def _swap_slot(f: EvenLaurentPoly, a: int, b: int) -> EvenLaurentPoly:
    return EvenLaurentPoly(f.arity, {_swap_key(e, a, b): c for e, c in f.terms.items()})


class TruncatedSeries:
    """A multivariate power series kept to total degree <= order.

    Exponent vectors are componentwise nonnegative; coefficients are exact
    rationals.  Addition and multiplication truncate to the common order.
    """

    __slots__ = ("arity", "order", "terms")

    def __init__(self, arity: int, order: int, terms: Mapping[Sequence[int], object] | None = None):
        if arity < 0 or order < 0:
            raise ValueError("arity and order must be nonnegative")
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(exps)
            if len(key) != arity:
                raise ValueError(f"exponent vector {key} does not match arity {arity}")
            if any(e < 0 for e in key):
                raise ValueError("series exponents must be nonnegative")
            if sum(key) > order:
                continue
            c = _as_fraction(coeff)
            if c:
                clean[key] = clean.get(key, Fraction(0)) + c
                if not clean[key]:
                    del clean[key]
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.arity != other.arity or self.order != other.order:
            raise ValueError("series shapes differ")
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return TruncatedSeries(self.arity, self.order, out)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if self.arity != other.arity or self.order != other.order:
                raise ValueError("series shapes differ")
            out: dict[Exponents, Fraction] = {}
            for e1, c1 in self.terms.items():
                d1 = sum(e1)
                for e2, c2 in other.terms.items():
                    if d1 + sum(e2) > self.order:
                        continue
                    key = tuple(x + y for x, y in zip(e1, e2))
                    s = out.get(key, Fraction(0)) + c1 * c2
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
            return TruncatedSeries(self.arity, self.order, out)
        c = _as_fraction(other)
        return TruncatedSeries(self.arity, self.order, {e: c * v for e, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and (self.arity, self.order) == (other.arity, other.order)
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"TruncatedSeries(arity={self.arity}, order={self.order}, {len(self.terms)} terms)"


@lru_cache(maxsize=None)
def _edge_series(a: int, order: int) -> tuple[Fraction, ...]:
    """Coefficients (index = power of x) of t^{2a} * (t^2 - 1)/2 under
    t = (x+1)/(x-1), expanded at x = 0.

    For a >= 0 this is 2x (x+1)^{2a} / (x-1)^{2a+2}; for a = -b < 0 it is
    2x (x-1)^{2b-2} / (x+1)^{2b}.  Both are analytic at 0 and start at x^1.
    """
    coeffs = [Fraction(0)] * (order + 1)
    if a >= 0:
        # (x-1)^{-(2a+2)} = (1-x)^{-(2a+2)} since the exponent is even
        k = 2 * a + 2
        tail = [Fraction(comb(k - 1 + m, k - 1)) for m in range(order + 1)]
        head = [Fraction(comb(2 * a, i)) for i in range(2 * a + 1)]
    else:
        b = -a
        k = 2 * b
        tail = [Fraction((-1) ** m * comb(k - 1 + m, k - 1)) for m in range(order + 1)]
        head = [Fraction((-1) ** (2 * b - 2 - i) * comb(2 * b - 2, i)) for i in range(2 * b - 1)]
    # multiply head * tail, shift by one (the factor 2x)
    for i, h in enumerate(head):
        if not h:
            continue
        for m, t in enumerate(tail):
            pos = i + m + 1
            if pos > order:
                break
            coeffs[pos] += 2 * h * t
    return tuple(coeffs)


def laurent_to_series(p: EvenLaurentPoly, order: int) -> TruncatedSeries:
    """Expand ``p(t(x)) * prod_j (t_j^2 - 1)/2`` at x = 0, truncated to
    total degree ``order``, where ``t_j = (x_j + 1)/(x_j - 1)``.

    Every monomial contributes a product of univariate series each of
    which carries one power of x_j, so no output term has a zero exponent.
    """
    n = p.arity
    acc: dict[Exponents, Fraction] = {}
    for exps, coeff in p.terms.items():
        partial: dict[Exponents, Fraction] = {(): coeff}
        for a in exps:
            series = _edge_series(a, order)
            grown: dict[Exponents, Fraction] = {}
            for stem, c in partial.items():
                room = order - sum(stem)
                for m in range(1, room + 1):
                    s = series[m]
                    if not s:
                        continue
                    key = stem + (m,)
                    v = grown.get(key, Fraction(0)) + c * s
                    if v:
                        grown[key] = v
                    else:
                        grown.pop(key, None)
            partial = grown
            if not partial:
                break
        for key, c in partial.items():
            v = acc.get(key, Fraction(0)) + c
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
    return TruncatedSeries(n, order, acc)
