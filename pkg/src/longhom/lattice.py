"""Antichains, up-sets and finite preorders over subsets of {1..n}.

Nonempty subsets of {1..n} are carried as integer bitmasks: bit i-1 set
means index i is present.  The canonical order on subsets is cardinality
first, then lexicographic on the sorted index tuples; every enumeration
and serialized form in this package follows it.
"""

import itertools
from functools import lru_cache

MAX_DIM = 16
ENUM_MAX_DIM = 6
ORACLE_MAX_DIM = 4
DP_MAX_DIM = 5
PREORDER_MAX_SIZE = 64
PREORDER_ENUM_MAX = 24
ISO_MAX_SIZE = 8


def _check_dim(n):
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {n!r}")


def _check_element(mask, n):
    if mask == 0:
        raise ValueError("the empty subset is not a valid element")
    if mask >> n:
        raise ValueError(
            f"subset {list(indices_from_mask(mask))} exceeds dimension {n}")


def mask_from_indices(indices, n: int) -> int:
    """Bitmask for a collection of 1-based indices, all within 1..n."""
    _check_dim(n)
    mask = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
        mask |= 1 << (i - 1)
    return mask


def indices_from_mask(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def subset_key(mask: int):
    """Canonical sort key: cardinality, then the sorted index tuple."""
    return (mask.bit_count(), indices_from_mask(mask))


@lru_cache(maxsize=None)
def canonical_subsets(n: int) -> tuple[int, ...]:
    """All nonempty subsets of {1..n} in canonical order."""
    _check_dim(n)
    return tuple(sorted(range(1, 1 << n), key=subset_key))


class Antichain:
    """A family of pairwise inclusion-incomparable nonempty subsets of {1..n}.

    Elements are stored in canonical order; two antichains compare equal iff
    they hold the same subsets at the same dimension.  The empty antichain is
    a valid value (it is the class of the bounded maps).
    """

    __slots__ = ("n", "masks")

    def __init__(self, masks, n):
        _check_dim(n)
        unique = sorted(set(masks), key=subset_key)
        for m in unique:
            _check_element(m, n)
        for a, b in itertools.combinations(unique, 2):
            if a & ~b == 0 or b & ~a == 0:
                raise ValueError(
                    "comparable subsets %s and %s cannot share an antichain"
                    % (list(indices_from_mask(a)), list(indices_from_mask(b))))
        self.masks = tuple(unique)
        self.n = n

    @classmethod
    def _trusted(cls, masks, n):
        # caller guarantees canonical order and pairwise incomparability
        self = object.__new__(cls)
        self.masks = masks
        self.n = n
        return self

    @classmethod
    def from_lists(cls, lists, n):
        return cls((mask_from_indices(s, n) for s in lists), n)

    def to_lists(self) -> list[list[int]]:
        """JSON form: sorted array of sorted 1-based index arrays."""
        return [list(indices_from_mask(m)) for m in self.masks]

    def subsets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(indices_from_mask(m) for m in self.masks)

    def __iter__(self):
        return iter(self.subsets())

    def __len__(self):
        return len(self.masks)

    def __eq__(self, other):
        return (isinstance(other, Antichain)
                and self.n == other.n and self.masks == other.masks)

    def __hash__(self):
        return hash((self.n, self.masks))

    def __repr__(self):
        return f"Antichain({self.to_lists()}, n={self.n})"


class UpSet:
    """An upward closed family of nonempty subsets of {1..n}."""

    __slots__ = ("n", "masks")

    def __init__(self, members, n):
        _check_dim(n)
        mset = frozenset(members)
        full = (1 << n) - 1
        for m in mset:
            _check_element(m, n)
            # adding any single missing index must stay inside the family;
            # one-step closure implies closure under all supersets
            rest = full & ~m
            while rest:
                bit = rest & -rest
                rest &= rest - 1
                if (m | bit) not in mset:
                    raise ValueError(
                        "family is not upward closed: %s present, %s missing"
                        % (list(indices_from_mask(m)),
                           list(indices_from_mask(m | bit))))
        self.masks = mset
        self.n = n

    @classmethod
    def from_lists(cls, lists, n):
        return cls((mask_from_indices(s, n) for s in lists), n)

    def to_lists(self) -> list[list[int]]:
        ordered = sorted(self.masks, key=subset_key)
        return [list(indices_from_mask(m)) for m in ordered]

    def subsets(self) -> tuple[tuple[int, ...], ...]:
        ordered = sorted(self.masks, key=subset_key)
        return tuple(indices_from_mask(m) for m in ordered)

    def contains_mask(self, mask: int) -> bool:
        return mask in self.masks

    def __contains__(self, subset) -> bool:
        return mask_from_indices(subset, self.n) in self.masks

    def __iter__(self):
        return iter(self.subsets())

    def __len__(self):
        return len(self.masks)

    def minimal(self) -> Antichain:
        """Inclusion-minimal members; inverse of upward_closure."""
        return minimal_elements(self.subsets(), self.n)

    def __eq__(self, other):
        return (isinstance(other, UpSet)
                and self.n == other.n and self.masks == other.masks)

    def __hash__(self):
        return hash((self.n, self.masks))

    def __repr__(self):
        return f"UpSet({self.to_lists()}, n={self.n})"


def minimal_elements(family, n: int) -> Antichain:
    """Inclusion-minimal members of a family of nonempty subsets of {1..n}.

    Accepts any iterable of index collections (an UpSet works as-is).
    Families containing the empty subset are rejected.
    """
    masks = set()
    for subset in family:
        m = mask_from_indices(subset, n)
        _check_element(m, n)
        masks.add(m)
    minimal = [m for m in masks
               if not any(o != m and o & ~m == 0 for o in masks)]
    return Antichain(minimal, n)


def upward_closure(a: Antichain) -> UpSet:
    """Smallest up-set containing the antichain; inverse of UpSet.minimal()."""
    out = set()
    full = (1 << a.n) - 1
    for m in a.masks:
        free = full & ~m
        sub = free
        while True:
            out.add(m | sub)
            if sub == 0:
                break
            sub = (sub - 1) & free
    return UpSet(out, a.n)


def _later_incomparable_rows_from(items, comparable):
    """rows[i] = bitmask of positions j > i with items[j] incomparable to
    items[i]; the row shape feeds the shared antichain DFS below."""
    rows = []
    for i, a in enumerate(items):
        row = 0
        for j in range(i + 1, len(items)):
            if not comparable(a, items[j]):
                row |= 1 << j
        rows.append(row)
    return rows


def _later_incomparable_rows(masks):
    return _later_incomparable_rows_from(
        masks, lambda a, b: a & ~b == 0 or b & ~a == 0)


def _iter_position_antichains(rows):
    """Position tuples of pairwise compatible picks, in DFS preorder.

    rows[i] must only contain positions greater than i, so every antichain
    is produced exactly once, as an ascending tuple.
    """
    chosen = []

    def rec(avail):
        a = avail
        while a:
            p = (a & -a).bit_length() - 1
            a &= a - 1
            chosen.append(p)
            yield tuple(chosen)
            yield from rec(avail & rows[p])
            chosen.pop()

    yield ()
    yield from rec((1 << len(rows)) - 1)


def _count_position_antichains(rows):
    """Number of pairwise compatible picks, including the empty one."""
    memo = {}

    def cnt(avail):
        if avail == 0:
            return 1
        r = memo.get(avail)
        if r is None:
            r = 1
            a = avail
            while a:
                p = (a & -a).bit_length() - 1
                a &= a - 1
                r += cnt(avail & rows[p])
            memo[avail] = r
        return r

    return cnt((1 << len(rows)) - 1)


def enumerate_antichains(n: int):
    """All antichains of the nonempty subsets of {1..n}, canonical order.

    Deterministic and duplicate-free, starting with the empty antichain.
    The length of the stream equals count_antichains(n).  The count grows
    like the Dedekind numbers, hence the cap at ENUM_MAX_DIM.
    """
    if not 1 <= n <= ENUM_MAX_DIM:
        raise ValueError(
            f"full enumeration is supported for 1..{ENUM_MAX_DIM}, got {n!r}")
    masks = canonical_subsets(n)
    rows = _later_incomparable_rows(masks)

    def gen():
        for positions in _iter_position_antichains(rows):
            yield Antichain._trusted(tuple(masks[p] for p in positions), n)

    return gen()


def count_antichains(n: int) -> int:
    """Number of antichains of the nonempty subsets of {1..n}.

    Memoized depth-first count over the canonical subset order; agrees with
    enumerate_antichains without materializing the stream.
    """
    if not 1 <= n <= ENUM_MAX_DIM:
        raise ValueError(
            f"counting is supported for 1..{ENUM_MAX_DIM}, got {n!r}")
    masks = canonical_subsets(n)
    return _count_position_antichains(_later_incomparable_rows(masks))


def count_antichains_oracle(n: int) -> int:
    """Independent recount by scanning every family of nonempty subsets.

    Walks all 2^(2^n - 1) indicator families, keeps the upward closed ones,
    and uses the bijection between up-sets and antichains given by taking
    minimal elements.  Doubly exponential, hence the cap at ORACLE_MAX_DIM.
    """
    if not 1 <= n <= ORACLE_MAX_DIM:
        raise ValueError(
            f"the exhaustive scan is supported for 1..{ORACLE_MAX_DIM}, got {n!r}")
    masks = canonical_subsets(n)
    pos = {mask: i for i, mask in enumerate(masks)}
    full = (1 << n) - 1
    sup = []
    for mask in masks:
        row = 0
        rest = full & ~mask
        while rest:
            bit = rest & -rest
            rest &= rest - 1
            row |= 1 << pos[mask | bit]
        sup.append(row)
    count = 0
    for fam in range(1 << len(masks)):
        ok = True
        f = fam
        while f:
            p = (f & -f).bit_length() - 1
            f &= f - 1
            if sup[p] & ~fam:
                ok = False
                break
        if ok:
            count += 1
    return count


def _monotone_tables(nvars: int) -> list[int]:
    """Truth tables of monotone Boolean functions on nvars inputs, as ints."""
    if nvars == 0:
        return [0, 1]
    prev = _monotone_tables(nvars - 1)
    width = 1 << (nvars - 1)
    return [lo | (hi << width) for lo in prev for hi in prev if lo & ~hi == 0]


def count_antichains_dp(n: int) -> int:
    """Recount via the last-variable split of monotone Boolean functions.

    Antichains of the subsets of {1..n} correspond to monotone Boolean
    functions of n inputs, i.e. to pairs (f0, f1) of monotone functions of
    n-1 inputs with f0 <= f1 pointwise.  Dropping the single antichain whose
    only member is the empty set restricts the count to nonempty subsets.
    """
    if not 1 <= n <= DP_MAX_DIM:
        raise ValueError(
            f"the pair scan is supported for 1..{DP_MAX_DIM}, got {n!r}")
    tabs = _monotone_tables(n - 1)
    pairs = sum(1 for lo in tabs for hi in tabs if lo & ~hi == 0)
    return pairs - 1


class FinitePreorder:
    """A preorder on {1..k}: the transitive closure of a generating relation.

    reaches(i, j) means some generator path of length >= 1 joins i to j, so
    reaches(i, i) holds exactly when i lies on a generator cycle; that self
    comparability is meaningful and is preserved.  The reflexive-transitive
    relation (relation_pairs) adds the diagonal on top of reaches.
    """

    __slots__ = ("k", "_rows")

    def __init__(self, k, rows):
        if not 1 <= k <= PREORDER_MAX_SIZE:
            raise ValueError(f"size must be in 1..{PREORDER_MAX_SIZE}, got {k!r}")
        rows = tuple(rows)
        if len(rows) != k:
            raise ValueError(f"expected {k} rows, got {len(rows)}")
        for i, row in enumerate(rows):
            if row >> k:
                raise ValueError(f"row {i + 1} mentions elements beyond {k}")
            f = row
            while f:
                j = (f & -f).bit_length() - 1
                f &= f - 1
                if rows[j] & ~row:
                    raise ValueError("relation is not transitively closed")
        self.k = k
        self._rows = rows

    def reaches(self, i: int, j: int) -> bool:
        """Whether a generator path of length >= 1 joins i to j."""
        self._check(i)
        self._check(j)
        return bool(self._rows[i - 1] >> (j - 1) & 1)

    def leq(self, i: int, j: int) -> bool:
        """The reflexive-transitive relation: i == j or reaches(i, j)."""
        return i == j or self.reaches(i, j)

    def self_loop(self, i: int) -> bool:
        return self.reaches(i, i)

    def comparable(self, i: int, j: int) -> bool:
        """Whether two distinct elements are related in either direction."""
        if i == j:
            raise ValueError("comparability is a question about distinct elements")
        return self.reaches(i, j) or self.reaches(j, i)

    def reach_pairs(self) -> list[tuple[int, int]]:
        """All (i, j) with a path i -> j of length >= 1, sorted."""
        out = []
        for i in range(1, self.k + 1):
            row = self._rows[i - 1]
            f = row
            while f:
                j = (f & -f).bit_length() - 1
                f &= f - 1
                out.append((i, j + 1))
        return out

    def relation_pairs(self) -> list[tuple[int, int]]:
        """The reflexive-transitive relation as sorted pairs."""
        pairs = set(self.reach_pairs())
        pairs.update((i, i) for i in range(1, self.k + 1))
        return sorted(pairs)

    def relabel(self, perm) -> "FinitePreorder":
        """Image under a bijection of {1..k}; perm[i-1] is the new label of i."""
        perm = tuple(perm)
        if sorted(perm) != list(range(1, self.k + 1)):
            raise ValueError(f"not a permutation of 1..{self.k}: {perm!r}")
        rows = [0] * self.k
        for i in range(self.k):
            row = self._rows[i]
            new = 0
            f = row
            while f:
                j = (f & -f).bit_length() - 1
                f &= f - 1
                new |= 1 << (perm[j] - 1)
            rows[perm[i] - 1] = new
        return FinitePreorder(self.k, rows)

    def is_isomorphic_to(self, other: "FinitePreorder") -> bool:
        """Brute-force isomorphism test; factorial in k, capped at ISO_MAX_SIZE."""
        if not isinstance(other, FinitePreorder):
            raise TypeError("expected a FinitePreorder")
        if self.k != other.k:
            return False
        if self.k > ISO_MAX_SIZE:
            raise ValueError(f"isomorphism testing is capped at k={ISO_MAX_SIZE}")

        def profile(p):
            return sorted((row.bit_count(),
                           sum(r >> i & 1 for r in p._rows),
                           row >> i & 1)
                          for i, row in enumerate(p._rows))

        if profile(self) != profile(other):
            return False
        for perm in itertools.permutations(range(1, self.k + 1)):
            if self.relabel(perm) == other:
                return True
        return False

    def _check(self, i):
        if not 1 <= i <= self.k:
            raise ValueError(f"element {i!r} out of range 1..{self.k}")

    def __eq__(self, other):
        return (isinstance(other, FinitePreorder)
                and self.k == other.k and self._rows == other._rows)

    def __hash__(self):
        return hash((self.k, self._rows))

    def __repr__(self):
        return f"FinitePreorder(k={self.k}, reach={self.reach_pairs()})"


def preorder_from_generators(k: int, pairs) -> FinitePreorder:
    """Transitive closure of the generating pairs on {1..k}.

    The diagonal is not added: (i, i) appears in the result exactly when i
    lies on a generator cycle.
    """
    if not 1 <= k <= PREORDER_MAX_SIZE:
        raise ValueError(f"size must be in 1..{PREORDER_MAX_SIZE}, got {k!r}")
    rows = [0] * k
    for a, b in pairs:
        if not (1 <= a <= k and 1 <= b <= k):
            raise ValueError(f"pair ({a!r}, {b!r}) out of range 1..{k}")
        rows[a - 1] |= 1 << (b - 1)
    # bitset Floyd-Warshall; paths of length >= 1 only
    for mid in range(k):
        bit = 1 << mid
        reach_mid = rows[mid]
        for i in range(k):
            if rows[i] & bit:
                rows[i] |= reach_mid
    return FinitePreorder(k, rows)


def _preorder_compat_rows(p: FinitePreorder):
    return _later_incomparable_rows_from(
        range(1, p.k + 1), p.comparable)


def antichains_of_preorder(p: FinitePreorder):
    """All antichains of the preorder as ascending index tuples.

    An antichain may not contain two distinct comparable elements; i below
    itself does not disqualify the singleton {i}.  Starts with the empty
    tuple; deterministic order; capped at PREORDER_ENUM_MAX elements.
    """
    if p.k > PREORDER_ENUM_MAX:
        raise ValueError(
            f"antichain enumeration is capped at k={PREORDER_ENUM_MAX}")
    rows = _preorder_compat_rows(p)

    def gen():
        for positions in _iter_position_antichains(rows):
            yield tuple(q + 1 for q in positions)

    return gen()


def count_antichains_of_preorder(p: FinitePreorder) -> int:
    """Number of antichains of the preorder, the empty one included."""
    if p.k > PREORDER_ENUM_MAX:
        raise ValueError(
            f"antichain counting is capped at k={PREORDER_ENUM_MAX}")
    return _count_position_antichains(_preorder_compat_rows(p))
