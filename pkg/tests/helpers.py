"""Shared random generators for the unit and end-to-end suites."""

from fractions import Fraction

from longhom.terms import Coord, Const, Max, Min, NegPart, PosPart


def random_term(rng, n, depth, signed=False):
    """Random lattice term over dimension n with nesting at most `depth`.

    Constants stay below 1000, matching the parser's cap, so sentinel
    evaluation is exact on everything this produces.
    """
    roll = rng.random()
    if depth == 0 or roll < 0.3:
        pick = rng.random()
        if pick < 0.55:
            i = rng.randint(1, n)
            if not signed:
                return Coord(i)
            return PosPart(i) if rng.random() < 0.5 else NegPart(i)
        return Const(Fraction(rng.randint(0, 999), rng.randint(1, 12)))
    width = rng.randint(2, 3)
    args = tuple(random_term(rng, n, depth - 1, signed) for _ in range(width))
    return Max(args) if roll < 0.65 else Min(args)


def subsets_of(n):
    """All nonempty index tuples over {1..n}."""
    out = []
    for mask in range(1, 1 << n):
        out.append(tuple(i + 1 for i in range(n) if mask >> i & 1))
    return out
