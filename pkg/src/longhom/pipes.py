"""Pipe codes: surfaces glued from k half-plane pieces along an arrow word.

A code is a string over U/D of length k; piece i is glued to piece i+1
(cyclically) with the arrow recording which of the two edge rays of piece i
is the shared one.  Within a piece, cofinality along the bottom edge forces
cofinality along the diagonal edge, so arrow i generates i < i+1 when it
points up and i+1 < i when it points down; the derived preorder on the k
edge rays classifies the maps out of the pipe, one class per antichain.
"""

from .lattice import (FinitePreorder, antichains_of_preorder,
                      count_antichains_of_preorder, preorder_from_generators)

UP = "U"
DOWN = "D"


class PipeCodeError(ValueError):
    """Malformed pipe code text; pos is the 0-based offending offset."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def check_code(code: str) -> str:
    """Validate and normalize a code: a nonempty string over {U, D},
    lowercase accepted."""
    if not isinstance(code, str):
        raise PipeCodeError(f"expected a string of arrows, got {code!r}", 0)
    text = code.upper()
    if not text:
        raise PipeCodeError("a pipe code must have at least one arrow", 0)
    for i, c in enumerate(text):
        if c not in (UP, DOWN):
            raise PipeCodeError(
                f"bad arrow {code[i]!r}; a code uses only 'U' and 'D'", i)
    return text


def pipe_generators(code: str) -> list[tuple[int, int]]:
    """One generating relation per arrow, cyclically: arrow i yields
    (i, i+1) when up and (i+1, i) when down, with k+1 wrapping to 1.

    Returned as a list of length k; distinct arrows may generate the same
    pair (both arrows of a length-2 code join the same two rays).
    """
    text = check_code(code)
    k = len(text)
    out = []
    for i in range(1, k + 1):
        nxt = i % k + 1
        out.append((i, nxt) if text[i - 1] == UP else (nxt, i))
    return out


def pipe_preorder(code: str) -> FinitePreorder:
    """The preorder on the k edge rays generated by the arrows.

    i is below itself exactly when the generators close a cycle through i,
    which happens iff all arrows of the code are equal.
    """
    text = check_code(code)
    return preorder_from_generators(len(text), pipe_generators(text))


def count_pipe_classes(code: str) -> int:
    """Number of homotopy classes of maps from the pipe to the ray: the
    antichains of the code's preorder, the empty one (bounded maps)
    included.  Every singleton is an antichain, so there are always
    exactly k unbounded singleton classes."""
    return count_antichains_of_preorder(pipe_preorder(code))


def pipe_class_antichains(code: str):
    """The classes themselves, as ascending tuples of edge-ray indices."""
    return antichains_of_preorder(pipe_preorder(code))


def code_orbit(code: str) -> set[str]:
    """All codes reachable by rotation, global arrow flip, or both."""
    text = check_code(code)
    flip = text.translate(str.maketrans({UP: DOWN, DOWN: UP}))
    out = set()
    for base in (text, flip):
        for r in range(len(base)):
            out.add(base[r:] + base[:r])
    return out


def code_equivalent(a: str, b: str) -> bool:
    """Whether two codes describe homeomorphic pipes: equal up to rotation
    and/or a global exchange of up and down arrows."""
    a = check_code(a)
    b = check_code(b)
    return len(a) == len(b) and b in code_orbit(a)
