import itertools

import pytest

from coxtw.biclosed import Complement, Explicit, HatForm, Twisted, act_on_biclosed
from coxtw.elements import from_word, identity, simple, translation
from coxtw.errors import DomainError, NotReducedError
from coxtw.infwords import (WordInvSet, classify, limit_set, t_gamma_infinity,
                            validate_periodic)
from coxtw.system import Root, build_system

A1T = build_system("A~1")
A2T = build_system("A~2")
A2 = build_system("A2")

ALPHA = Root((1,))
DMA = Root((-1,), 1)


def test_validate_periodic_accepts_translation_word():
    w = validate_periodic(A1T, (), (0, 1))
    assert w.period == (0, 1)
    assert w.period_el == translation(A1T, (1,))
    assert w.member(ALPHA)
    assert w.member(Root((1,), 3))
    assert not w.member(DMA)
    assert w.tail_limit_roots() == {ALPHA}


def test_validate_periodic_prefix():
    # s1 (s0 s1)^inf spells the same word as (s1 s0)^inf
    w = validate_periodic(A1T, (1,), (0, 1))
    assert w.member(DMA)
    assert w.member(Root((-1,), 2))
    assert not w.member(Root((1,), 1))
    trunc = list(itertools.islice(w.truncations(), 4))
    assert [t.length for t in trunc] == [1, 2, 3, 4]


def test_validate_periodic_rejections():
    with pytest.raises(NotReducedError) as info:
        validate_periodic(A2, (), (0,))
    assert info.value.failing_power == 2
    with pytest.raises(NotReducedError) as info:
        validate_periodic(A2, (0, 0), (1,))
    assert info.value.failing_power == 0
    with pytest.raises(NotReducedError):
        validate_periodic(A1T, (0,), (0, 1))   # s0 s0 s1 ... collapses


def test_empty_period_on_finite_system():
    w = validate_periodic(A2, (0, 1), ())
    assert w.period == ()
    assert w.member(Root((1, 0)))
    assert not w.tail_member(Root((0, 1)))
    assert w.tail_limit_roots() == frozenset()
    assert [t.word for t in itertools.islice(w.truncations(), 3)] == [(0, 1)]


def test_word_invset_oracle():
    orc = WordInvSet(validate_periodic(A1T, (), (0, 1)))
    assert orc.member(ALPHA) and orc.member(Root((1,), 2))
    assert not orc.member(DMA)
    assert limit_set(orc) == {ALPHA}


def test_classify_finite():
    orc = Explicit(A1T, {ALPHA})
    res = classify(orc)
    assert res.kind == "finite"
    assert res.element == simple(A1T, 0)
    assert res.witness_json() == [0]
    # memoized on the oracle
    assert classify(orc) is res


def test_classify_infinite_hat():
    neg = HatForm(A1T, simple(A1T, 0), (), ())
    res = classify(neg)
    assert res.kind == "infinite"
    assert res.witness_json() == {"prefix": [], "period": [1, 0]}
    pos = HatForm(A1T, identity(A1T), (), ())
    assert classify(pos).witness_json() == {"prefix": [], "period": [0, 1]}


def test_classify_neither():
    full = Complement(Explicit(A1T, set()))
    res = classify(full)
    assert res.kind == "neither"
    assert res.witness_json() == [[1, 1], [-1, 1]]
    fins = {r.fin() for r in res.bad_pair}
    assert fins == {ALPHA, -ALPHA}
    assert all(full.member(r) for r in res.bad_pair)


def test_classify_canonicalizes_twist():
    # a twisted copy of an infinite inversion set is still one, and the
    # classifier rebuilds it from scratch rather than echoing the twist
    tw = act_on_biclosed(simple(A2T, 0), HatForm(A2T, from_word(A2T, (0, 1, 0)), (), ()))
    res = classify(tw)
    assert res.kind == "infinite"
    assert res.word.prefix == ()
    assert res.word.period == (0, 2, 0, 1, 0, 2, 0, 1, 0, 2, 0, 1)
    assert isinstance(tw, Twisted)


def test_classify_shifted_word_oracle():
    orc = WordInvSet(validate_periodic(A1T, (1,), (0, 1)))
    res = classify(orc)
    assert res.kind == "infinite"
    assert res.witness_json() == {"prefix": [], "period": [1, 0]}


def test_t_gamma_infinity_a1():
    orc, word = t_gamma_infinity(A1T, (1,))
    assert word.period == (0, 1)
    assert orc.limit_roots() == {ALPHA}
    orc, word = t_gamma_infinity(A1T, (-1,))
    assert word.period == (1, 0)
    assert orc.limit_roots() == {-ALPHA}


def test_t_gamma_infinity_dominant_a2():
    gamma = A2T.dominant_coweight_for(())
    assert gamma == (3, 3)
    orc, word = t_gamma_infinity(A2T, gamma)
    assert orc.limit_roots() == frozenset(A2T.positive_roots)
    assert len(word.period) == 12
    # truncation inversion sets grow inside the oracle
    prev = frozenset()
    for el in itertools.islice(word.truncations(), 5):
        cur = el.inversion_set()
        assert prev <= cur
        assert all(orc.member(r) for r in cur)
        prev = cur


def test_t_gamma_infinity_rejections():
    with pytest.raises(DomainError):
        t_gamma_infinity(A2, (1, 0))
    with pytest.raises(DomainError):
        t_gamma_infinity(A1T, (0,))


def test_word_oracle_agrees_with_classifier_witness():
    base = validate_periodic(A2T, (), translation(A2T, (2, 1)).word)
    orc = WordInvSet(base)
    res = classify(orc)
    assert res.kind == "infinite"
    other = res.word
    for rho in A2T.positive_roots_up_to(3):
        assert base.member(rho) == other.member(rho)
