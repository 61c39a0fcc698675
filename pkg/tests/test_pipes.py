import itertools
import random

import pytest

from longhom.pipes import (PipeCodeError, check_code, code_equivalent,
                           code_orbit, count_pipe_classes,
                           pipe_class_antichains, pipe_generators,
                           pipe_preorder)


def test_check_code():
    assert check_code("ud") == "UD"
    assert check_code("UUDDU") == "UUDDU"
    for bad, pos in (("", 0), ("UXD", 1), ("ab", 0), (None, 0)):
        with pytest.raises(PipeCodeError) as exc:
            check_code(bad)
        assert exc.value.pos == pos
        assert "position" in str(exc.value)


def test_generators_one_per_arrow():
    assert pipe_generators("U") == [(1, 1)]
    assert pipe_generators("UUD") == [(1, 2), (2, 3), (1, 3)]
    assert pipe_generators("DDD") == [(2, 1), (3, 2), (1, 3)]
    # both arrows of a length-2 code join the same two rays
    assert pipe_generators("UD") == [(1, 2), (1, 2)]
    assert pipe_generators("DU") == [(2, 1), (2, 1)]


def test_preorder_shapes():
    p = pipe_preorder("UD")
    assert p.reaches(1, 2)
    assert not p.reaches(2, 1)
    assert not p.self_loop(1) and not p.self_loop(2)

    chain = pipe_preorder("UUD")
    assert chain.reaches(1, 3) and not chain.reaches(3, 1)

    cyc = pipe_preorder("UUU")
    assert all(cyc.self_loop(i) for i in (1, 2, 3))
    assert all(cyc.reaches(i, j) for i in (1, 2, 3) for j in (1, 2, 3))


def test_class_counts():
    assert count_pipe_classes("U") == 2
    assert count_pipe_classes("D") == 2
    assert count_pipe_classes("UD") == 3
    assert count_pipe_classes("UUD") == 4
    assert count_pipe_classes("UUU") == 4
    assert count_pipe_classes("UDUD") == 7
    assert count_pipe_classes("UDUDUD") == 18
    assert count_pipe_classes("UDUDUDUD") == 47


def test_class_antichains():
    assert list(pipe_class_antichains("UUD")) == [(), (1,), (2,), (3,)]
    assert list(pipe_class_antichains("UD")) == [(), (1,), (2,)]
    got = list(pipe_class_antichains("UDUD"))
    assert len(got) == 7
    assert (1, 3) in got  # the two sinks of the alternating code


def test_every_code_has_k_singleton_classes():
    for k in range(1, 7):
        for bits in range(1 << k):
            code = "".join("U" if bits >> i & 1 else "D" for i in range(k))
            classes = list(pipe_class_antichains(code))
            singles = [c for c in classes if len(c) == 1]
            assert len(singles) == k
            assert classes[0] == ()


def test_all_equal_codes_collapse():
    for k in (1, 2, 3, 5):
        for arrow in "UD":
            code = arrow * k
            assert count_pipe_classes(code) == k + 1
            p = pipe_preorder(code)
            assert all(p.self_loop(i) for i in range(1, k + 1))


def test_orbit_and_equivalence():
    assert code_orbit("UD") == {"UD", "DU"}
    assert code_orbit("U") == {"U", "D"}
    assert code_equivalent("UUD", "UDU")   # rotation
    assert code_equivalent("UUD", "DDU")   # global flip
    assert code_equivalent("uud", "UDU")   # case-insensitive
    assert not code_equivalent("UUD", "UUU")
    assert not code_equivalent("UD", "UDUD")
    assert len(code_orbit("UUDUD")) <= 10


def test_equivalence_is_an_equivalence_relation():
    codes = ["".join(bits) for bits in itertools.product("UD", repeat=4)]
    for a in codes:
        assert code_equivalent(a, a)
    rng = random.Random(8)
    for _ in range(100):
        a, b, c = rng.choice(codes), rng.choice(codes), rng.choice(codes)
        assert code_equivalent(a, b) == code_equivalent(b, a)
        if code_equivalent(a, b) and code_equivalent(b, c):
            assert code_equivalent(a, c)


def test_orbit_members_agree_on_classes():
    # rotation relabels the preorder; the global flip reverses it, which
    # leaves incomparability (hence the antichain list) untouched
    for k in (3, 4, 5, 6):
        for bits in itertools.product("UD", repeat=k):
            a = "".join(bits)
            for b in code_orbit(a):
                assert count_pipe_classes(a) == count_pipe_classes(b)


def test_flip_reverses_the_preorder():
    for k in (1, 2, 3, 4, 5):
        for bits in itertools.product("UD", repeat=k):
            code = "".join(bits)
            flip = code.translate(str.maketrans("UD", "DU"))
            p, q = pipe_preorder(code), pipe_preorder(flip)
            assert set(q.reach_pairs()) == \
                {(j, i) for i, j in p.reach_pairs()}
            assert list(pipe_class_antichains(code)) == \
                list(pipe_class_antichains(flip))


def test_reversed_flip_relabels_the_preorder():
    # reading the code backwards swaps which edge ray of each gluing is
    # shared, so reversal plus flip is the relabeling i -> k+1-i
    for k in (2, 3, 4, 5, 6):
        for bits in itertools.product("UD", repeat=k):
            code = "".join(bits)
            mirrored = code.translate(str.maketrans("UD", "DU"))[::-1]
            assert pipe_preorder(code).is_isomorphic_to(
                pipe_preorder(mirrored))
