"""Max/min lattice terms: maps R^n -> R written as expressions over
coordinates, signed coordinate parts and rational constants.

The two-valued diagonal semantics substitutes "cofinal" for the coordinates
in a subset I and "bounded" for everything else; max is join and min is
meet.  For this term language the semantics is exact: along the I-diagonal
a term either eventually equals the diagonal parameter (cofinal) or is
eventually constant (bounded).
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from .lattice import MAX_DIM, Antichain, UpSet

# Parsed constants are kept strictly below the smaller sentinel so that a
# sentinel evaluation can never collide with an embedded constant.
CONST_CAP = Fraction(1000)
SENTINELS = (Fraction(10) ** 3, Fraction(10) ** 6)


class TermSyntaxError(ValueError):
    """Malformed term text; pos is the 0-based offset of the problem."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class MapTerm:
    """Abstract syntax of a lattice-term map; subclasses are the node kinds."""

    __slots__ = ()

    def __str__(self):
        return print_term(self)


@dataclass(frozen=True, slots=True)
class Coord(MapTerm):
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"coordinate index must be >= 1, got {self.index!r}")


@dataclass(frozen=True, slots=True)
class PosPart(MapTerm):
    """Fold of the positive end of a long-line coordinate onto the ray."""
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"coordinate index must be >= 1, got {self.index!r}")


@dataclass(frozen=True, slots=True)
class NegPart(MapTerm):
    """Fold of the negative end of a long-line coordinate onto the ray."""
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"coordinate index must be >= 1, got {self.index!r}")


@dataclass(frozen=True, slots=True)
class Const(MapTerm):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value < 0:
            raise ValueError(f"negative constant {self.value}")


@dataclass(frozen=True, slots=True)
class Max(MapTerm):
    args: tuple[MapTerm, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) < 2:
            raise ValueError("max needs at least two arguments")
        if not all(isinstance(a, MapTerm) for a in self.args):
            raise ValueError("max arguments must be terms")


@dataclass(frozen=True, slots=True)
class Min(MapTerm):
    args: tuple[MapTerm, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) < 2:
            raise ValueError("min needs at least two arguments")
        if not all(isinstance(a, MapTerm) for a in self.args):
            raise ValueError("min arguments must be terms")


class DiagonalSignature(enum.Enum):
    COFINAL = "cofinal"
    BOUNDED = "bounded"


class _Parser:
    def __init__(self, text, n):
        self.text = text
        self.n = n
        self.pos = 0

    def error(self, message, pos=None):
        raise TermSyntaxError(message, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def parse_term(self) -> MapTerm:
        self.skip_ws()
        if self.pos >= len(self.text):
            self.error("expected a term")
        c = self.text[self.pos]
        if c == "m":
            return self.parse_lattice_op()
        if c in "xpn":
            return self.parse_atom()
        if c.isdigit():
            return self.parse_constant()
        self.error(f"unexpected character {c!r}")

    def parse_lattice_op(self) -> MapTerm:
        start = self.pos
        word = self.text[self.pos:self.pos + 3]
        if word not in ("max", "min"):
            self.error("expected 'max' or 'min'", start)
        self.pos += 3
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != "(":
            self.error(f"expected '(' after '{word}'")
        self.pos += 1
        args = [self.parse_term()]
        while True:
            self.skip_ws()
            if self.pos >= len(self.text):
                self.error("unterminated argument list")
            c = self.text[self.pos]
            if c == ",":
                self.pos += 1
                args.append(self.parse_term())
            elif c == ")":
                if len(args) < 2:
                    self.error(f"'{word}' needs at least two arguments")
                self.pos += 1
                break
            else:
                self.error("expected ',' or ')'")
        return Max(tuple(args)) if word == "max" else Min(tuple(args))

    def parse_atom(self) -> MapTerm:
        kind = self.text[self.pos]
        start = self.pos
        self.pos += 1
        index = self.parse_int()
        if not 1 <= index <= self.n:
            self.error(f"index {index} out of range 1..{self.n}", start)
        if kind == "x":
            return Coord(index)
        if kind == "p":
            return PosPart(index)
        return NegPart(index)

    def parse_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected digits")
        return int(self.text[start:self.pos])

    def parse_constant(self) -> Const:
        start = self.pos
        num = self.parse_int()
        value = Fraction(num)
        if self.pos < len(self.text) and self.text[self.pos] == ".":
            self.pos += 1
            self.parse_int()
            value = Fraction(self.text[start:self.pos])
        elif self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            den_start = self.pos
            den = self.parse_int()
            if den == 0:
                self.error("zero denominator", den_start)
            value = Fraction(num, den)
        if value >= CONST_CAP:
            self.error(f"constant must be below {CONST_CAP}", start)
        return Const(value)


def parse_term(text: str, n: int) -> MapTerm:
    """Parse a term over dimension n.

    Grammar: term := "max(" term ("," term)+ ")" | "min(" term ("," term)+
    ")" | atom; atom := "x" INT | "p" INT | "n" INT | NUMBER.  Whitespace is
    insignificant, indices are 1-based and must not exceed n, and NUMBER is
    a nonnegative decimal or a rational written "p/q", below 1000 so that
    sentinel evaluation stays exact.  "p"/"n" atoms are the signed parts of
    a long-line coordinate and are rejected by the unsigned operations.
    """
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {n!r}")
    parser = _Parser(text, n)
    term = parser.parse_term()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("unexpected trailing input")
    return term


def _format_rational(q: Fraction) -> str:
    num, den = q.numerator, q.denominator
    if den == 1:
        return str(num)
    d, twos, fives = den, 0, 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d == 1:
        # terminating decimal, printed with the minimal number of digits
        k = max(twos, fives)
        scaled = str(num * 10 ** k // den).rjust(k + 1, "0")
        return f"{scaled[:-k]}.{scaled[-k:]}"
    return f"{num}/{den}"


def print_term(t: MapTerm) -> str:
    """Canonical text form; parse_term(print_term(t), n) reproduces t."""
    if isinstance(t, Coord):
        return f"x{t.index}"
    if isinstance(t, PosPart):
        return f"p{t.index}"
    if isinstance(t, NegPart):
        return f"n{t.index}"
    if isinstance(t, Const):
        return _format_rational(t.value)
    if isinstance(t, Max):
        return "max(" + ",".join(print_term(a) for a in t.args) + ")"
    if isinstance(t, Min):
        return "min(" + ",".join(print_term(a) for a in t.args) + ")"
    raise TypeError(f"not a term: {t!r}")


def max_index(t: MapTerm) -> int:
    """Largest coordinate index mentioned by the term; 0 for constants."""
    if isinstance(t, (Coord, PosPart, NegPart)):
        return t.index
    if isinstance(t, Const):
        return 0
    return max(max_index(a) for a in t.args)


def _signature_mask(t: MapTerm, cofinal_mask: int) -> bool:
    """True when the term is cofinal with the given coordinates cofinal."""
    if isinstance(t, Coord):
        return bool(cofinal_mask >> (t.index - 1) & 1)
    if isinstance(t, Const):
        return False
    if isinstance(t, Max):
        return any(_signature_mask(a, cofinal_mask) for a in t.args)
    if isinstance(t, Min):
        return all(_signature_mask(a, cofinal_mask) for a in t.args)
    if isinstance(t, (PosPart, NegPart)):
        raise ValueError(f"signed atom {t} in unsigned context")
    raise TypeError(f"not a term: {t!r}")


def diagonal_signature(f: MapTerm, I) -> DiagonalSignature:
    """Two-valued evaluation of f along the I-diagonal.

    Coordinates in I count as cofinal, all other coordinates and every
    constant as bounded; max is join and min is meet.
    """
    mask = 0
    for i in I:
        if i < 1:
            raise ValueError(f"index {i!r} is not a 1-based coordinate")
        mask |= 1 << (i - 1)
    if mask == 0:
        raise ValueError("I must be a nonempty set of indices")
    cofinal = _signature_mask(f, mask)
    return DiagonalSignature.COFINAL if cofinal else DiagonalSignature.BOUNDED


def cofinality_class(f: MapTerm, n: int) -> UpSet:
    """All nonempty I in {1..n} along whose diagonal f is cofinal.

    The result is upward closed, and contains {1..n} whenever nonempty.
    """
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {n!r}")
    top = max_index(f)
    if top > n:
        raise ValueError(f"term mentions x{top} but the dimension is {n}")
    members = [mask for mask in range(1, 1 << n) if _signature_mask(f, mask)]
    return UpSet(members, n)


def homotopy_class(f: MapTerm, n: int) -> Antichain:
    """The minimal elements of the cofinality class: the invariant that
    determines f up to homotopy."""
    return cofinality_class(f, n).minimal()


def homotopic(f: MapTerm, g: MapTerm, n: int) -> bool:
    """Whether f and g have equal cofinality classes over dimension n."""
    return cofinality_class(f, n) == cofinality_class(g, n)


def canonical_representative(a: Antichain) -> MapTerm:
    """The max-of-mins term attached to an antichain.

    Max over the antichain members of the min of their coordinates, with
    singleton max/min collapsed; the empty antichain yields the constant 0.
    """
    groups = []
    for subset in a.subsets():
        if len(subset) == 1:
            groups.append(Coord(subset[0]))
        else:
            groups.append(Min(tuple(Coord(i) for i in subset)))
    if not groups:
        return Const(0)
    if len(groups) == 1:
        return groups[0]
    return Max(tuple(groups))


@dataclass(frozen=True, slots=True)
class VectorTerm:
    """A self-map of R^n given coordinatewise by n terms."""

    components: tuple[MapTerm, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("a vector term needs at least one component")
        if not all(isinstance(c, MapTerm) for c in self.components):
            raise ValueError("vector components must be terms")

    @property
    def n(self) -> int:
        return len(self.components)

    def __str__(self):
        return print_vector(self)


def parse_vector(text: str, n: int) -> VectorTerm:
    """Parse n components separated by ';' into a self-map of R^n."""
    parts = text.split(";")
    if len(parts) != n:
        raise ValueError(
            f"expected {n} components separated by ';', got {len(parts)}")
    return VectorTerm(tuple(parse_term(part, n) for part in parts))


def print_vector(v: VectorTerm) -> str:
    return ";".join(print_term(c) for c in v.components)


def _substitute(t: MapTerm, replacements: tuple[MapTerm, ...]) -> MapTerm:
    if isinstance(t, Coord):
        if t.index > len(replacements):
            raise ValueError(
                f"term mentions x{t.index} but only {len(replacements)} "
                "components are available")
        return replacements[t.index - 1]
    if isinstance(t, Const):
        return t
    if isinstance(t, Max):
        return Max(tuple(_substitute(a, replacements) for a in t.args))
    if isinstance(t, Min):
        return Min(tuple(_substitute(a, replacements) for a in t.args))
    if isinstance(t, (PosPart, NegPart)):
        raise ValueError(f"signed atom {t} in unsigned context")
    raise TypeError(f"not a term: {t!r}")


def compose(f: VectorTerm, g: VectorTerm) -> VectorTerm:
    """The composite f after g, by substituting g's components into f.

    Purely syntactic; no simplification is attempted.
    """
    if f.n != g.n:
        raise ValueError(f"dimension mismatch: {f.n} vs {g.n}")
    return VectorTerm(tuple(_substitute(c, g.components) for c in f.components))


def eval_numeric(f: MapTerm, point) -> Fraction:
    """Evaluate the term at a point with nonnegative rational entries.

    Exact arithmetic throughout, so max/min ties carry no floating-point
    ambiguity.
    """
    values = tuple(Fraction(x) for x in point)
    for x in values:
        if x < 0:
            raise ValueError(f"point entries must be nonnegative, got {x}")

    def rec(t):
        if isinstance(t, Coord):
            if t.index > len(values):
                raise ValueError(
                    f"term mentions x{t.index} but the point has "
                    f"{len(values)} entries")
            return values[t.index - 1]
        if isinstance(t, Const):
            return t.value
        if isinstance(t, Max):
            return max(rec(a) for a in t.args)
        if isinstance(t, Min):
            return min(rec(a) for a in t.args)
        if isinstance(t, (PosPart, NegPart)):
            raise ValueError(f"signed atom {t} in unsigned context")
        raise TypeError(f"not a term: {t!r}")

    return rec(f)


def diagonal_point(I, n: int, t) -> tuple[Fraction, ...]:
    """The I-diagonal sample point: t at the coordinates in I, 0 elsewhere."""
    height = Fraction(t)
    if height < 0:
        raise ValueError(f"diagonal height must be nonnegative, got {height}")
    chosen = set()
    for i in I:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
        chosen.add(i)
    if not chosen:
        raise ValueError("I must be a nonempty set of indices")
    return tuple(height if i in chosen else Fraction(0)
                 for i in range(1, n + 1))
