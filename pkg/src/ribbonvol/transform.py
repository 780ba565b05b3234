"""The Laplace-transformed recursion engine.

One engine, three configurations.  Each configuration produces, for every
stable (g, n), an even Laurent polynomial F_{g,n}(t_1..t_n):

* ``LAPLACE``     -- the Laplace transforms L_{g,n} of the integral
                     ribbon-graph counts (genuine Laurent polynomials,
                     dyadic coefficients);
* ``EUCLIDEAN``   -- the polynomial volumes V^E_{g,n} of the unit-edge
                     moduli (the top-degree part of L_{g,n});
* ``SYMPLECTIC``  -- the volumes V^S_{g,n} for twice the standard
                     symplectic form, proportional to V^E by the constant
                     2^{5g-5+2n}.

For n >= 2 the recursion reads, with u = t^2 and a configuration kernel
kappa(u):

    F_{g,n} = A * sum_{j=2}^{n} d/dt_j [ t_j * D_j ]  +  B * kappa(u_1) *
              [ F_{g-1,n+1}(t_1, t_1, rest)
                + sum over ordered stable splittings F F ]

where D_j is the divided difference of x |-> kappa(x^2) F_{g,n-1}(x, rest)
between the slots t_1 and t_j, the derivative of an even h is realized as
d/dt_j [t_j h] = h + 2 u_j dh/du_j, and the genus term is dropped at
g = 0.  The splitting sum runs over ``enumerate_splittings`` exactly as
enumerated (each ordered assignment once, no extra weight).

Everything is computed bottom-up in the complexity 2g - 2 + n and
memoized per configuration; results are canonical (symmetric, exact) and
safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .exactmath import EvenLaurentPoly, divided_difference
from .surface import enumerate_splittings, is_stable


@dataclass(frozen=True)
class RecursionConfig:
    """One admissible configuration of the engine.

    ``kappa`` is a one-variable even Laurent polynomial in u = t^2;
    ``base_03`` and ``base_11`` seed the recursion at the two minimal
    surface types.
    """

    name: str
    a_factor: Fraction
    b_factor: Fraction
    kappa: EvenLaurentPoly
    base_03: EvenLaurentPoly
    base_11: EvenLaurentPoly


LAPLACE = RecursionConfig(
    name="laplace",
    a_factor=Fraction(-1, 16),
    b_factor=Fraction(-1, 32),
    # (u - 1)^3 / u
    kappa=EvenLaurentPoly(1, {(2,): 1, (1,): -3, (0,): 3, (-1,): -1}),
    # -(1/16) (1 - 1/(u1 u2 u3))
    base_03=EvenLaurentPoly(
        3, {(0, 0, 0): Fraction(-1, 16), (-1, -1, -1): Fraction(1, 16)}
    ),
    # -(1/128) (u - 1)^3 / u^2
    base_11=EvenLaurentPoly(
        1,
        {
            (1,): Fraction(-1, 128),
            (0,): Fraction(3, 128),
            (-1,): Fraction(-3, 128),
            (-2,): Fraction(1, 128),
        },
    ),
)

EUCLIDEAN = RecursionConfig(
    name="euclidean",
    a_factor=Fraction(-1, 16),
    b_factor=Fraction(-1, 32),
    kappa=EvenLaurentPoly(1, {(2,): 1}),
    base_03=EvenLaurentPoly.constant(3, Fraction(-1, 16)),
    base_11=EvenLaurentPoly(1, {(1,): Fraction(-1, 128)}),
)

SYMPLECTIC = RecursionConfig(
    name="symplectic",
    a_factor=Fraction(-1, 4),
    b_factor=Fraction(-1, 4),
    kappa=EvenLaurentPoly(1, {(2,): 1}),
    base_03=EvenLaurentPoly.constant(3, Fraction(-1, 8)),
    base_11=EvenLaurentPoly(1, {(1,): Fraction(-1, 32)}),
)

CONFIGS = {c.name: c for c in (LAPLACE, EUCLIDEAN, SYMPLECTIC)}

_tables: dict[str, dict[tuple[int, int], EvenLaurentPoly]] = {name: {} for name in CONFIGS}


def compute(config: RecursionConfig, g: int, n: int) -> EvenLaurentPoly:
    """The polynomial F_{g,n} for one configuration (memoized)."""
    if not is_stable(g, n):
        raise ValueError(f"(g, n) = ({g}, {n}) is not stable")
    table = _tables.setdefault(config.name, {})
    hit = table.get((g, n))
    if hit is not None:
        return hit
    if (g, n) == (0, 3):
        value = config.base_03
    elif (g, n) == (1, 1):
        value = config.base_11
    else:
        value = _recurse(config, g, n)
    table[(g, n)] = value
    return value


def _recurse(config: RecursionConfig, g: int, n: int) -> EvenLaurentPoly:
    kappa0 = config.kappa.substitute_slots({0: 0}, n)
    result = EvenLaurentPoly.zero(n)

    if n >= 2:
        prev = compute(config, g, n - 1)
        j_sum = EvenLaurentPoly.zero(n)
        for b in range(1, n):
            spectators = [s for s in range(1, n) if s != b]
            mapping = {0: 0}
            mapping.update({i + 1: s for i, s in enumerate(spectators)})
            f = prev.substitute_slots(mapping, n) * kappa0
            h = divided_difference(f, 0, b)
            # d/dt_b [t_b h] for even h: h + 2 u_b dh/du_b
            j_sum = j_sum + h + 2 * h.d_square(b).shift(b, 1)
        result = result + config.a_factor * j_sum

    bracket = EvenLaurentPoly.zero(n)
    if g >= 1:
        higher = compute(config, g - 1, n + 1)
        bracket = bracket + higher.diagonal_merge(0, 1)
    for sp in enumerate_splittings(g, range(1, n)):
        f1 = _embed_part(config, sp.g1, sp.part1, n)
        f2 = _embed_part(config, sp.g2, sp.part2, n)
        bracket = bracket + f1 * f2
    if bracket:
        result = result + config.b_factor * (kappa0 * bracket)
    return result


def _embed_part(config, g_part, slots, n):
    poly = compute(config, g_part, len(slots) + 1)
    mapping = {0: 0}
    mapping.update({i + 1: s for i, s in enumerate(sorted(slots))})
    return poly.substitute_slots(mapping, n)


def kontsevich_ratio(g: int, n: int) -> Fraction:
    """The constant V^S_{g,n} / V^E_{g,n}; raises if the two volume
    polynomials are not exactly proportional."""
    vs = compute(SYMPLECTIC, g, n)
    ve = compute(EUCLIDEAN, g, n)
    if set(vs.terms) != set(ve.terms):
        raise ArithmeticError(f"({g},{n}): volume polynomials have different support")
    ratios = {vs.terms[e] / ve.terms[e] for e in ve.terms}
    if len(ratios) != 1:
        raise ArithmeticError(f"({g},{n}): volume polynomials are not proportional")
    return ratios.pop()


def euclidean_matches_leading(g: int, n: int) -> bool:
    """Whether V^E_{g,n} equals the top-degree part of L_{g,n} exactly."""
    return compute(EUCLIDEAN, g, n) == compute(LAPLACE, g, n).leading_part()


def _odd_double_factorial(m: int) -> int:
    # (2d+1)!! for m = 2d+1
    out = 1
    for k in range(1, m + 1, 2):
        out *= k
    return out


def intersection_numbers(g: int, n: int) -> dict[tuple, Fraction]:
    """Extract <tau_{d_1} ... tau_{d_n}> coefficients from V^S_{g,n}.

    The volume polynomial is read against the ansatz

        V^S = (-1)^n sum_{|d| = 3g-3+n} <tau_d> prod_j (2d_j+1)!! (t_j/2)^{2d_j}

    literally -- no renormalization is applied.  Returns a map keyed by
    the degree vector sorted in decreasing order; extraction must agree
    across all orderings of each degree vector, and reconstructing V^S
    from the returned map must be exact (both verified here).
    """
    vs = compute(SYMPLECTIC, g, n)
    target = 3 * g - 3 + n
    sign = (-1) ** n
    out: dict[tuple, Fraction] = {}
    for exps, coeff in vs.terms.items():
        if sum(exps) != target or any(e < 0 for e in exps):
            raise ArithmeticError(
                f"({g},{n}): unexpected monomial {exps} in the symplectic volume"
            )
        value = coeff * sign
        for d in exps:
            value *= Fraction(4**d, _odd_double_factorial(2 * d + 1))
        key = tuple(sorted(exps, reverse=True))
        if key in out and out[key] != value:
            raise ArithmeticError(f"({g},{n}): extraction differs across orderings of {key}")
        out[key] = value

    rebuilt = {}
    for key, value in out.items():
        for exps in set(permutations(key)):
            coeff = value * sign
            for d in exps:
                coeff *= Fraction(_odd_double_factorial(2 * d + 1), 4**d)
            rebuilt[exps] = coeff
    if EvenLaurentPoly(n, rebuilt) != vs:
        raise ArithmeticError(f"({g},{n}): intersection-number round trip failed")
    return out
