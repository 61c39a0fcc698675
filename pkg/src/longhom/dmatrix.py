"""Direction matrices of self-maps of R^n and their Boolean-matrix monoid.

Rows and columns are indexed by the nonempty subsets of {1..n} in canonical
order.  Row I records the unique diagonal Delta_J tracked by the image of
Delta_I, or nothing when every component is bounded there, so each row has
at most one 1; the matrix of a composite satisfies D(f.g) = D(g) * D(f).
"""

from .lattice import canonical_subsets, indices_from_mask
from .terms import VectorTerm, _signature_mask, compose, max_index


class DirectionMatrix:
    """(2^n - 1) x (2^n - 1) zero/one matrix with at most one 1 per row.

    Stored sparsely: targets[r] is the column subset's bitmask for the 1 in
    row r, or None for a zero row, with rows in canonical subset order.
    """

    __slots__ = ("n", "targets")

    def __init__(self, n, targets):
        rows = canonical_subsets(n)
        targets = tuple(targets)
        if len(targets) != len(rows):
            raise ValueError(
                f"expected {len(rows)} rows for dimension {n}, got {len(targets)}")
        for t in targets:
            if t is None:
                continue
            if not isinstance(t, int) or t == 0 or t >> n:
                raise ValueError(f"row target {t!r} is not a nonempty subset mask")
        self.n = n
        self.targets = targets

    @classmethod
    def identity(cls, n) -> "DirectionMatrix":
        return cls(n, canonical_subsets(n))

    def target_of(self, I) -> tuple[int, ...] | None:
        """Column subset carrying the 1 in row I, as indices; None if zero."""
        rows = canonical_subsets(self.n)
        mask = 0
        for i in I:
            if not 1 <= i <= self.n:
                raise ValueError(f"index {i} out of range 1..{self.n}")
            mask |= 1 << (i - 1)
        if mask == 0:
            raise ValueError("rows are indexed by nonempty subsets")
        t = self.targets[rows.index(mask)]
        return None if t is None else indices_from_mask(t)

    def to_json_dict(self) -> dict:
        rows = []
        for mask, t in zip(canonical_subsets(self.n), self.targets):
            rows.append({
                "I": list(indices_from_mask(mask)),
                "J": None if t is None else list(indices_from_mask(t)),
            })
        return {"n": self.n, "rows": rows}

    def __eq__(self, other):
        return (isinstance(other, DirectionMatrix)
                and self.n == other.n and self.targets == other.targets)

    def __hash__(self):
        return hash((self.n, self.targets))

    def __repr__(self):
        parts = []
        for mask, t in zip(canonical_subsets(self.n), self.targets):
            tgt = "0" if t is None else str(list(indices_from_mask(t)))
            parts.append(f"{list(indices_from_mask(mask))}->{tgt}")
        return f"DirectionMatrix(n={self.n}, {', '.join(parts)})"


def direction_matrix(f: VectorTerm) -> DirectionMatrix:
    """Direction matrix of a self-map of R^n given by unsigned lattice terms.

    Row I holds a 1 in column J = the set of components that are cofinal
    along Delta_I; the row is zero when every component is bounded there.
    """
    n = f.n
    for c in f.components:
        top = max_index(c)
        if top > n:
            raise ValueError(f"component mentions x{top} but the dimension is {n}")
    targets = []
    for mask in canonical_subsets(n):
        J = 0
        for k, c in enumerate(f.components):
            if _signature_mask(c, mask):
                J |= 1 << k
        targets.append(J if J else None)
    return DirectionMatrix(n, targets)


def bool_mat_mul(a: DirectionMatrix, b: DirectionMatrix) -> DirectionMatrix:
    """Boolean semiring product (OR of ANDs).

    With at most one 1 per row, row I of a*b is row J of b where J is the
    target of row I of a, or zero; so the product shape is closed.
    """
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    rows = canonical_subsets(a.n)
    position = {mask: r for r, mask in enumerate(rows)}
    targets = []
    for t in a.targets:
        targets.append(None if t is None else b.targets[position[t]])
    return DirectionMatrix(a.n, targets)


def verify_monoid_law(f: VectorTerm, g: VectorTerm) -> bool:
    """Whether D(f.g) equals D(g) * D(f); true for every pair of unsigned
    lattice-term self-maps."""
    lhs = direction_matrix(compose(f, g))
    rhs = bool_mat_mul(direction_matrix(g), direction_matrix(f))
    return lhs == rhs
