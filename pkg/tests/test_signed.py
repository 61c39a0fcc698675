import itertools
import random

import pytest

from longhom.lattice import Antichain
from longhom.signed import (ClassIntoL, SignedAntichain, SignedSubset,
                            admissible_subsets, classify_Rn_to_L,
                            count_classes_Ln_to_R, count_classes_Rn_to_L,
                            signed_cofinality_class, signed_homotopy_class,
                            signed_minimal_elements)
from longhom.terms import Const, Max, Min, NegPart, PosPart, parse_term
from tests.helpers import random_term


def test_signed_subset_basics():
    s = SignedSubset([1], [2], 2)
    assert s.tokens() == ("+1", "-2")
    assert s.size() == 2
    assert SignedSubset.from_tokens(["-2", "+1"], 2) == s
    with pytest.raises(ValueError):
        SignedSubset([1], [1], 2)  # both ends of one coordinate
    with pytest.raises(ValueError):
        SignedSubset([], [], 2)
    with pytest.raises(ValueError):
        SignedSubset([3], [], 2)
    with pytest.raises(ValueError):
        SignedSubset.from_tokens(["1"], 2)  # sign is mandatory
    with pytest.raises(ValueError):
        SignedSubset.from_tokens(["+x"], 2)


def test_signed_order_is_componentwise():
    small = SignedSubset([1], [], 2)
    big = SignedSubset([1], [2], 2)
    flip = SignedSubset([], [1], 2)
    assert small.leq(big)
    assert not big.leq(small)
    assert not small.leq(flip) and not flip.leq(small)


def test_admissible_count_is_3_to_n_minus_1():
    for n in (1, 2, 3, 4):
        subs = list(admissible_subsets(n))
        assert len(subs) == 3 ** n - 1
        assert len(set(subs)) == len(subs)
        assert subs == sorted(subs, key=SignedSubset.sort_key)
    with pytest.raises(ValueError):
        admissible_subsets(0)


def test_signed_antichain_validation():
    a = SignedAntichain.from_token_lists([["+1"], ["-1"]], 1)
    assert a.to_token_lists() == [["+1"], ["-1"]]
    with pytest.raises(ValueError):
        SignedAntichain.from_token_lists([["+1"], ["+1", "-2"]], 2)
    assert len(SignedAntichain([], 2)) == 0


def test_signed_cofinality_examples():
    # p1 is cofinal exactly along diagonals using the positive end of x1
    cls = signed_cofinality_class(PosPart(1), 2)
    assert all(s.pos & 1 for s in cls)
    assert len(cls) == 3  # {+1}, {+1,+2}, {+1,-2}
    assert signed_homotopy_class(PosPart(1), 2).to_token_lists() == [["+1"]]

    both = Max((PosPart(1), NegPart(1)))
    assert signed_homotopy_class(both, 1).to_token_lists() == [["+1"], ["-1"]]

    assert signed_homotopy_class(Const(0), 2).to_token_lists() == []

    tied = Min((PosPart(1), NegPart(2)))
    assert signed_homotopy_class(tied, 2).to_token_lists() == [["+1", "-2"]]

    # min over both ends of one coordinate is bounded everywhere:
    # no admissible diagonal is cofinal in both
    pinched = Min((PosPart(1), NegPart(1)))
    assert signed_homotopy_class(pinched, 1).to_token_lists() == []


def test_signed_rejects_unsigned_atoms():
    with pytest.raises(ValueError):
        signed_cofinality_class(parse_term("x1", 1), 1)
    with pytest.raises(ValueError):
        signed_cofinality_class(PosPart(3), 2)


def test_signed_class_is_upward_closed():
    rng = random.Random(45)
    for _ in range(100):
        n = rng.randint(1, 3)
        f = random_term(rng, n, 3, signed=True)
        cls = signed_cofinality_class(f, n)
        for s in admissible_subsets(n):
            for t in admissible_subsets(n):
                if s in cls and s.leq(t):
                    assert t in cls


def test_minimal_elements_determine_the_class():
    rng = random.Random(46)
    for _ in range(100):
        n = rng.randint(1, 3)
        f = random_term(rng, n, 3, signed=True)
        cls = signed_cofinality_class(f, n)
        mins = signed_minimal_elements(cls, n)
        rebuilt = {t for t in admissible_subsets(n)
                   if any(m.leq(t) for m in mins)}
        assert rebuilt == set(cls)


def test_count_Ln_to_R():
    assert count_classes_Ln_to_R(1) == 4
    assert count_classes_Ln_to_R(2) == 47
    with pytest.raises(ValueError):
        count_classes_Ln_to_R(4)


def test_count_Ln_to_R_matches_enumeration():
    # brute force over subsets of the admissible poset, n <= 2
    for n in (1, 2):
        elements = list(admissible_subsets(n))
        count = 0
        for bits in range(1 << len(elements)):
            chosen = [e for i, e in enumerate(elements) if bits >> i & 1]
            if all(not (a.leq(b) or b.leq(a))
                   for a, b in itertools.combinations(chosen, 2)):
                count += 1
        assert count_classes_Ln_to_R(n) == count


def test_count_Ln_to_R_n3():
    assert count_classes_Ln_to_R(3) == 15935


def test_every_signed_antichain_has_a_term_n2():
    # realizability: max of min-blocks hits every antichain
    n = 2
    elements = list(admissible_subsets(n))
    seen = set()
    for bits in range(1 << len(elements)):
        chosen = [e for i, e in enumerate(elements) if bits >> i & 1]
        if any(a.leq(b) or b.leq(a)
               for a, b in itertools.combinations(chosen, 2)):
            continue
        blocks = []
        for s in chosen:
            atoms = ([PosPart(i) for i in range(1, n + 1) if s.pos >> (i - 1) & 1]
                     + [NegPart(i) for i in range(1, n + 1) if s.neg >> (i - 1) & 1])
            blocks.append(atoms[0] if len(atoms) == 1 else Min(tuple(atoms)))
        if not blocks:
            term = Const(0)
        elif len(blocks) == 1:
            term = blocks[0]
        else:
            term = Max(tuple(blocks))
        got = signed_homotopy_class(term, n)
        assert got == SignedAntichain(chosen, n)
        seen.add(got)
    assert len(seen) == count_classes_Ln_to_R(n)


def test_class_into_l_shapes():
    b = ClassIntoL.bounded()
    assert b.to_json_dict() == {"tag": "bounded"}
    a = Antichain.from_lists([[1]], 2)
    assert ClassIntoL.plus(a).to_json_dict() == \
        {"tag": "plus", "antichain": [[1]]}
    assert ClassIntoL.minus(a).to_json_dict() == \
        {"tag": "minus", "antichain": [[1]]}
    with pytest.raises(ValueError):
        ClassIntoL("plus", None)
    with pytest.raises(ValueError):
        ClassIntoL("bounded", a)
    with pytest.raises(ValueError):
        ClassIntoL("sideways", a)


def test_classify_Rn_to_L():
    f = parse_term("max(x1, min(x1, x2))", 2)
    up = classify_Rn_to_L("+", f, 2)
    assert up == ClassIntoL.plus(Antichain.from_lists([[1]], 2))
    down = classify_Rn_to_L("-", f, 2)
    assert down.tag == "minus"
    assert down != up  # the two ends are distinct classes

    # bounded maps land in one shared class, sign notwithstanding
    zero = parse_term("0", 2)
    assert classify_Rn_to_L("+", zero, 2) == classify_Rn_to_L("-", zero, 2)
    with pytest.raises(ValueError):
        classify_Rn_to_L("x", f, 2)


def test_count_Rn_to_L():
    assert count_classes_Rn_to_L(1) == 3
    assert count_classes_Rn_to_L(2) == 9
    assert count_classes_Rn_to_L(3) == 37
    assert count_classes_Rn_to_L(4) == 333


def test_count_Rn_to_L_matches_classifier_n2():
    # every distinct ClassIntoL value over all sign/antichain combinations
    from longhom.lattice import enumerate_antichains
    from longhom.terms import canonical_representative
    n = 2
    seen = set()
    for a in enumerate_antichains(n):
        rep = canonical_representative(a)
        for sign in "+-":
            seen.add(classify_Rn_to_L(sign, rep, n))
    assert len(seen) == count_classes_Rn_to_L(n)
