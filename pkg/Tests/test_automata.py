import itertools
import random

import pytest

from Automata.DeterministicAutomaton import DetBuchiAutomaton
from Automata.DeterministicAutomaton import DeterministicAutomaton
from Automata.DeterministicAutomaton import Dfa
from Automata.DeterministicAutomaton import SafetyAutomaton
from Automata.automaton_library import a_star_b
from Automata.automaton_library import ab_omega
from Automata.automaton_library import ab_plus
from Automata.automaton_library import coordination_language
from Automata.automaton_library import ends_with_b
from Automata.automaton_library import eventually_constant_language
from Automata.automaton_library import grim_trigger_language
from Automata.automaton_library import infinitely_many_b
from Automata.automaton_library import letters_ab
from Automata.automaton_library import universal
from Automata.language_operations import alive_states
from Automata.language_operations import arrow
from Automata.language_operations import as_buchi
from Automata.language_operations import contains
from Automata.language_operations import enumerate_lassos
from Automata.language_operations import equivalent
from Automata.language_operations import intersect
from Automata.language_operations import is_empty
from Automata.language_operations import is_strategical
from Automata.language_operations import left_quotient
from Automata.language_operations import omega_membership
from Automata.language_operations import pref_automaton
from Automata.language_operations import safety_closure
from Automata.language_operations import trim
from Tests.conftest import A
from Tests.conftest import B
from Tests.conftest import CC
from Tests.conftest import CD
from Tests.conftest import DC
from Tests.conftest import DD
from Utility.random_instances import random_buchi
from Utility.random_instances import random_lasso
from Utility.random_instances import random_safety
from VerificationPipelines.oracles import all_lassos
from Words.LassoWord import LassoWord
from Words.MoveAlphabet import MoveAlphabet
from Words.word_operations import normalize_lasso


def only_b():
    return DetBuchiAutomaton(letters_ab(), ["s"], "s", {("s", B): "s"}, ["s"])


def closure_of_eventually_b():
    return SafetyAutomaton(letters_ab(), ["before", "after"], "before",
                           {("before", A): "before", ("before", B): "after", ("after", B): "after"})


def test_construction_checks(ab_alphabet):
    with pytest.raises(ValueError):
        Dfa(ab_alphabet, ["s"], "t", {})
    with pytest.raises(ValueError):
        Dfa(ab_alphabet, ["s"], "s", {("s", A): "t"})
    with pytest.raises(ValueError):
        Dfa(ab_alphabet, ["s"], "s", {("s", (2,)): "s"})
    with pytest.raises(ValueError):
        DetBuchiAutomaton(ab_alphabet, ["s"], "s", {}, ["t"])


def test_dfa_accepts():
    x = a_star_b()
    assert x.accepts((A, A, B))
    assert x.accepts((B,))
    assert not x.accepts((A,))
    assert not x.accepts((B, A))
    completed = x.completed()
    assert all(len(completed.successors(state)) == 2 for state in completed.states)


def test_omega_membership():
    assert omega_membership(LassoWord((), (A, B)), ab_omega())
    assert omega_membership(LassoWord((A,), (B, A)), ab_omega())
    assert not omega_membership(LassoWord((), (A,)), ab_omega())
    assert not omega_membership(LassoWord((B,), (A, B)), ab_omega())
    assert omega_membership(LassoWord((A, A), (B,)), eventually_constant_language(letters_ab(), A, B))
    assert not omega_membership(LassoWord((), (A,)), eventually_constant_language(letters_ab(), A, B))


def test_arrow_of_a_star_b_is_empty():
    assert is_empty(arrow(a_star_b()))[0]


def test_arrow_of_ab_plus():
    assert equivalent(arrow(ab_plus()), ab_omega())


def test_arrow_of_words_ending_in_b():
    assert equivalent(arrow(ends_with_b()), infinitely_many_b())


def test_pref_automaton():
    prefixes = pref_automaton(eventually_constant_language(letters_ab(), A, B))
    assert prefixes.accepts(())
    assert prefixes.accepts((A, A))
    assert prefixes.accepts((A, B, B))
    assert not prefixes.accepts((B, A))


def test_pref_of_empty_language_is_empty(ab_alphabet):
    dead = DetBuchiAutomaton(ab_alphabet, ["s"], "s", {("s", A): "s"}, [])
    assert alive_states(dead) == frozenset()
    assert pref_automaton(dead).is_empty_automaton
    assert not pref_automaton(dead).accepts(())


def test_left_quotient():
    language = eventually_constant_language(letters_ab(), A, B)
    assert equivalent(left_quotient(language, (A, B)), only_b())
    assert equivalent(left_quotient(language, (A, A)), language)
    assert is_empty(left_quotient(language, (B, A)))[0]


def test_safety_closure_of_eventually_b():
    language = eventually_constant_language(letters_ab(), A, B)
    closure = safety_closure(language)
    assert equivalent(closure, closure_of_eventually_b())
    included, witness = contains(closure, language)
    assert not included
    assert witness == LassoWord((), (A,))


def test_contains_with_counterexample():
    assert contains(ab_omega(), infinitely_many_b()) == (True, None)
    included, witness = contains(infinitely_many_b(), ab_omega())
    assert not included
    assert omega_membership(witness, infinitely_many_b())
    assert not omega_membership(witness, ab_omega())
    assert witness == normalize_lasso(witness)


def test_contains_against_enumeration():
    rng = random.Random(131714)
    alphabet = letters_ab()
    lassos = list(all_lassos(alphabet, 3, 3))
    for _ in range(60):
        first = random_buchi(rng, alphabet, max_states=3, density=0.7, accepting_probability=0.5)
        second = random_buchi(rng, alphabet, max_states=3, density=0.7, accepting_probability=0.5)
        included, witness = contains(first, second)
        if included:
            assert not any(omega_membership(h, first) and not omega_membership(h, second) for h in lassos)
        else:
            assert omega_membership(witness, first) and not omega_membership(witness, second)


def test_contains_rejects_different_alphabets(pd_alphabet):
    with pytest.raises(ValueError):
        contains(ab_omega(), universal(pd_alphabet))


def test_is_strategical():
    assert is_strategical(ab_omega())
    assert is_strategical(closure_of_eventually_b())
    assert not is_strategical(infinitely_many_b())
    assert not is_strategical(eventually_constant_language(letters_ab(), A, B))


def test_eventually_constant_profile_is_not_strategical(pd_alphabet):
    assert not is_strategical(eventually_constant_language(pd_alphabet, CC, DC))
    assert is_strategical(grim_trigger_language(pd_alphabet))


def test_intersect_safety(pd_alphabet):
    both = intersect(grim_trigger_language(pd_alphabet), coordination_language(pd_alphabet))
    cooperation = SafetyAutomaton(pd_alphabet, ["s"], "s", {("s", CC): "s"})
    assert isinstance(both, SafetyAutomaton)
    assert equivalent(both, cooperation)


def test_intersect_with_one_nontrivial_buchi():
    both = intersect(infinitely_many_b(), closure_of_eventually_b())
    assert isinstance(both, DetBuchiAutomaton)
    assert equivalent(both, eventually_constant_language(letters_ab(), A, B))


def test_intersect_rejects_two_nontrivial_buchi():
    with pytest.raises(NotImplementedError):
        intersect(ab_omega(), infinitely_many_b())


def test_trim_removes_dead_ends(ab_alphabet):
    raw = Dfa(ab_alphabet, ["s", "t", "u"], "s", {("s", A): "s", ("s", B): "t", ("t", A): "u"})
    trimmed = trim(raw)
    assert set(trimmed.states) == {"s"}
    assert trimmed.successors("s") == {A: "s"}


def test_is_empty_witness():
    empty, witness = is_empty(ab_omega())
    assert not empty
    assert witness == LassoWord((), (A, B))


def test_as_buchi_keeps_the_language(pd_alphabet):
    language = grim_trigger_language(pd_alphabet)
    assert equivalent(as_buchi(language), language)
    with pytest.raises(TypeError):
        as_buchi(a_star_b())


def test_enumerate_lassos_of_ab_omega():
    assert list(enumerate_lassos(ab_omega(), 6)) == [LassoWord((), (A, B))]


def test_enumerate_lassos_members(pd_alphabet):
    language = grim_trigger_language(pd_alphabet)
    lassos = list(enumerate_lassos(language, 3))
    assert len(lassos) == len(set(lassos))
    assert LassoWord((), (CC,)) in lassos
    assert LassoWord((CD,), (DC,)) in lassos
    assert LassoWord((CC, CD), (DD,)) in lassos
    for h in lassos:
        assert h == normalize_lasso(h)
        assert h.representation_length <= 3
        assert omega_membership(h, language)
    expected = {normalize_lasso(h) for h in all_lassos(pd_alphabet, 2, 3)
                if h.representation_length <= 3 and omega_membership(h, language)}
    assert set(lassos) == expected


def test_universal_contains_everything(pd_alphabet):
    for language in (grim_trigger_language(pd_alphabet), coordination_language(pd_alphabet)):
        assert contains(language, universal(pd_alphabet))[0]
    assert equivalent(universal(pd_alphabet), safety_closure(universal(pd_alphabet)))


def test_all_lassos_counts(ab_alphabet):
    count = sum(1 for _ in all_lassos(ab_alphabet, 1, 2))
    assert count == (1 + 2) * (2 + 4)
    assert all(isinstance(h, LassoWord) for h in itertools.islice(all_lassos(ab_alphabet, 1, 1), 3))


def words_up_to(alphabet, length):
    for size in range(length + 1):
        yield from itertools.product(alphabet.letters, repeat=size)


@pytest.mark.corpus
def test_pref_automaton_is_prefix_closed():
    rng = random.Random(131714)
    alphabet = MoveAlphabet.from_lists(["a", "b", "c"])
    words = list(words_up_to(alphabet, 5))
    for _ in range(25):
        language = random_buchi(rng, alphabet, max_states=6)
        prefixes = pref_automaton(language)
        accepted = {word for word in words if prefixes.accepts(word)}
        for word in accepted:
            assert all(word[:k] in accepted for k in range(len(word)))
        for word in words[:40]:
            assert (word in accepted) == (not is_empty(left_quotient(language, word))[0])


@pytest.mark.corpus
def test_left_quotient_composes():
    rng = random.Random(131714)
    alphabet = letters_ab()
    words = list(words_up_to(alphabet, 3))
    for _ in range(10):
        language = random_buchi(rng, alphabet, max_states=4, density=0.8, accepting_probability=0.5)
        for u in words:
            after_u = left_quotient(language, u)
            for v in words:
                assert equivalent(left_quotient(after_u, v), left_quotient(language, u + v))


def test_trim_keeps_safety_membership():
    rng = random.Random(131714)
    alphabet = letters_ab()
    for _ in range(40):
        states = list(range(rng.randint(1, 5)))
        transitions = {(state, letter): rng.choice(states)
                       for state in states for letter in alphabet.letters if rng.random() < 0.6}
        raw = SafetyAutomaton(alphabet, states, 0, transitions)
        trimmed = trim(DeterministicAutomaton(alphabet, states, 0, transitions))
        for _ in range(100):
            h = random_lasso(rng, alphabet)
            assert omega_membership(h, trimmed) == omega_membership(h, raw)


def test_safety_closure_is_idempotent():
    rng = random.Random(131714)
    alphabet = letters_ab()
    for _ in range(60):
        closure = safety_closure(random_buchi(rng, alphabet, max_states=5))
        assert equivalent(safety_closure(closure), closure)
        assert is_strategical(closure)


def test_intersect_random_safety_pairs(pd_alphabet):
    rng = random.Random(131714)
    for _ in range(30):
        first = random_safety(rng, pd_alphabet, density=0.8)
        second = random_safety(rng, pd_alphabet, density=0.8)
        both = intersect(first, second)
        assert isinstance(both, SafetyAutomaton)
        for _ in range(50):
            h = random_lasso(rng, pd_alphabet, max_stem=3, max_cycle=3)
            assert omega_membership(h, both) == (omega_membership(h, first) and omega_membership(h, second))
