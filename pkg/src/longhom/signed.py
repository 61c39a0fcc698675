"""Signed classification: maps L^n -> R via admissible signed subsets, and
maps R^n -> L as two copies of the unsigned classes glued at the bounded one.

A signed subset picks, for some coordinates of L^n, one of the two ends of
that long-line factor; admissibility forbids picking both ends of the same
coordinate.  The signed atoms PosPart/NegPart are the folds of one end onto
the ray, so max/min terms in them represent maps L^n -> R and generate a
representative for every class.
"""

from dataclasses import dataclass

from .lattice import (Antichain, MAX_DIM, _count_position_antichains,
                      _later_incomparable_rows_from, count_antichains,
                      indices_from_mask)
from .terms import (Coord, Const, MapTerm, Max, Min, NegPart, PosPart,
                    homotopy_class, max_index)

ADMISSIBLE_MAX_DIM = 12
SIGNED_COUNT_MAX_DIM = 3


class SignedSubset:
    """A nonempty admissible subset of {+1..+n, -1..-n}.

    pos and neg are bitmasks over {1..n}; admissibility means they are
    disjoint.  Ordered componentwise: s <= t iff s.pos is a subset of t.pos
    and s.neg a subset of t.neg.
    """

    __slots__ = ("n", "pos", "neg")

    def __init__(self, pos, neg, n):
        if not 1 <= n <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {n!r}")
        pos_mask = _mask(pos, n)
        neg_mask = _mask(neg, n)
        if pos_mask & neg_mask:
            clash = indices_from_mask(pos_mask & neg_mask)[0]
            raise ValueError(
                f"inadmissible: both +{clash} and -{clash} are present")
        if not (pos_mask | neg_mask):
            raise ValueError("a signed subset must be nonempty")
        self.n = n
        self.pos = pos_mask
        self.neg = neg_mask

    @classmethod
    def from_tokens(cls, tokens, n) -> "SignedSubset":
        """Build from strings like "+1" and "-2"."""
        pos, neg = [], []
        for tok in tokens:
            text = str(tok)
            if len(text) < 2 or text[0] not in "+-" or not text[1:].isdigit():
                raise ValueError(f"bad signed index {tok!r}; expected e.g. '+1'")
            (pos if text[0] == "+" else neg).append(int(text[1:]))
        return cls(pos, neg, n)

    def tokens(self) -> tuple[str, ...]:
        """JSON form: signed strings sorted by coordinate index."""
        out = {i: f"+{i}" for i in indices_from_mask(self.pos)}
        out.update((i, f"-{i}") for i in indices_from_mask(self.neg))
        return tuple(out[i] for i in sorted(out))

    def leq(self, other: "SignedSubset") -> bool:
        return (self.pos & ~other.pos) == 0 and (self.neg & ~other.neg) == 0

    def size(self) -> int:
        return (self.pos | self.neg).bit_count()

    def sort_key(self):
        signs = sorted([(i, 0) for i in indices_from_mask(self.pos)]
                       + [(i, 1) for i in indices_from_mask(self.neg)])
        return (self.size(), tuple(signs))

    def __eq__(self, other):
        return (isinstance(other, SignedSubset) and self.n == other.n
                and self.pos == other.pos and self.neg == other.neg)

    def __hash__(self):
        return hash((self.n, self.pos, self.neg))

    def __repr__(self):
        return f"SignedSubset({list(self.tokens())}, n={self.n})"


def _mask(indices, n):
    mask = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
        mask |= 1 << (i - 1)
    return mask


def admissible_subsets(n: int):
    """All nonempty admissible signed subsets over {1..n}, canonically
    ordered; there are 3^n - 1 of them (each coordinate: +, - or absent)."""
    if not 1 <= n <= ADMISSIBLE_MAX_DIM:
        raise ValueError(
            f"dimension must be in 1..{ADMISSIBLE_MAX_DIM}, got {n!r}")
    subsets = []
    for pos in range(1 << n):
        neg_space = ((1 << n) - 1) & ~pos
        neg = neg_space
        while True:
            if pos or neg:
                s = SignedSubset.__new__(SignedSubset)
                s.n, s.pos, s.neg = n, pos, neg
                subsets.append(s)
            if neg == 0:
                break
            neg = (neg - 1) & neg_space
    subsets.sort(key=SignedSubset.sort_key)
    return iter(subsets)


class SignedAntichain:
    """Pairwise incomparable nonempty admissible signed subsets."""

    __slots__ = ("n", "elements")

    def __init__(self, elements, n):
        if not 1 <= n <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {n!r}")
        elems = sorted(set(elements), key=SignedSubset.sort_key)
        for e in elems:
            if not isinstance(e, SignedSubset) or e.n != n:
                raise ValueError(f"not a signed subset over 1..{n}: {e!r}")
        for i, a in enumerate(elems):
            for b in elems[i + 1:]:
                if a.leq(b) or b.leq(a):
                    raise ValueError(
                        "comparable signed subsets %s and %s cannot share "
                        "an antichain" % (list(a.tokens()), list(b.tokens())))
        self.n = n
        self.elements = tuple(elems)

    @classmethod
    def from_token_lists(cls, lists, n) -> "SignedAntichain":
        return cls((SignedSubset.from_tokens(toks, n) for toks in lists), n)

    def to_token_lists(self) -> list[list[str]]:
        return [list(e.tokens()) for e in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, SignedAntichain)
                and self.n == other.n and self.elements == other.elements)

    def __hash__(self):
        return hash((self.n, self.elements))

    def __repr__(self):
        return f"SignedAntichain({self.to_token_lists()}, n={self.n})"


def _signed_signature(t: MapTerm, pos_mask: int, neg_mask: int) -> bool:
    """True when the term is cofinal along the signed diagonal (pos, neg)."""
    if isinstance(t, PosPart):
        return bool(pos_mask >> (t.index - 1) & 1)
    if isinstance(t, NegPart):
        return bool(neg_mask >> (t.index - 1) & 1)
    if isinstance(t, Const):
        return False
    if isinstance(t, Max):
        return any(_signed_signature(a, pos_mask, neg_mask) for a in t.args)
    if isinstance(t, Min):
        return all(_signed_signature(a, pos_mask, neg_mask) for a in t.args)
    if isinstance(t, Coord):
        raise ValueError(f"unsigned atom {t} in signed context")
    raise TypeError(f"not a term: {t!r}")


def signed_cofinality_class(f: MapTerm, n: int) -> frozenset:
    """All admissible signed subsets along whose diagonal f is cofinal.

    f must be built from PosPart/NegPart atoms and constants (domain L^n).
    The result is upward closed within the admissible subsets.
    """
    if not 1 <= n <= ADMISSIBLE_MAX_DIM:
        raise ValueError(
            f"dimension must be in 1..{ADMISSIBLE_MAX_DIM}, got {n!r}")
    top = max_index(f)
    if top > n:
        raise ValueError(f"term mentions index {top} but the dimension is {n}")
    return frozenset(s for s in admissible_subsets(n)
                     if _signed_signature(f, s.pos, s.neg))


def signed_minimal_elements(family, n: int) -> SignedAntichain:
    """Componentwise-minimal members of a family of signed subsets."""
    members = set(family)
    for s in members:
        if not isinstance(s, SignedSubset) or s.n != n:
            raise ValueError(f"not a signed subset over 1..{n}: {s!r}")
    minimal = [s for s in members
               if not any(o != s and o.leq(s) for o in members)]
    return SignedAntichain(minimal, n)


def signed_homotopy_class(f: MapTerm, n: int) -> SignedAntichain:
    """Minimal elements of the signed cofinality class."""
    return signed_minimal_elements(signed_cofinality_class(f, n), n)


def count_classes_Ln_to_R(n: int) -> int:
    """Number of homotopy classes of maps L^n -> R: the antichains of the
    admissible signed subsets, the empty antichain included."""
    if not 1 <= n <= SIGNED_COUNT_MAX_DIM:
        raise ValueError(
            f"dimension must be in 1..{SIGNED_COUNT_MAX_DIM}, got {n!r}")
    elements = list(admissible_subsets(n))

    def comparable(a, b):
        return a.leq(b) or b.leq(a)

    rows = _later_incomparable_rows_from(elements, comparable)
    return _count_position_antichains(rows)


@dataclass(frozen=True, slots=True)
class ClassIntoL:
    """A homotopy class of maps R^n -> L: bounded, or an unsigned class
    pushed into the positive or the negative end.

    The bounded classes of the two ends coincide, so "bounded" carries no
    sign; plus/minus always carry a nonempty antichain.
    """

    tag: str
    antichain: Antichain | None

    def __post_init__(self):
        if self.tag not in ("bounded", "plus", "minus"):
            raise ValueError(f"unknown tag {self.tag!r}")
        if self.tag == "bounded":
            if self.antichain is not None:
                raise ValueError("the bounded class carries no antichain")
        else:
            if not isinstance(self.antichain, Antichain) or len(self.antichain) == 0:
                raise ValueError(f"tag {self.tag!r} needs a nonempty antichain")

    @classmethod
    def bounded(cls) -> "ClassIntoL":
        return cls("bounded", None)

    @classmethod
    def plus(cls, antichain: Antichain) -> "ClassIntoL":
        return cls("plus", antichain)

    @classmethod
    def minus(cls, antichain: Antichain) -> "ClassIntoL":
        return cls("minus", antichain)

    def to_json_dict(self) -> dict:
        if self.tag == "bounded":
            return {"tag": "bounded"}
        return {"tag": self.tag, "antichain": self.antichain.to_lists()}


def classify_Rn_to_L(sign: str, f: MapTerm, n: int) -> ClassIntoL:
    """Class of the unsigned term f mapped into one end of L.

    sign is "+" or "-" and selects the end; bounded terms land in the single
    shared bounded class, where the sign is irrelevant.
    """
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    a = homotopy_class(f, n)
    if len(a) == 0:
        return ClassIntoL.bounded()
    return ClassIntoL.plus(a) if sign == "+" else ClassIntoL.minus(a)


def count_classes_Rn_to_L(n: int) -> int:
    """Number of homotopy classes of maps R^n -> L: two copies of the
    unsigned count glued at the bounded class."""
    return 2 * (count_antichains(n) - 1) + 1
