"""
Hand-built automata for the omega-rational expressions of the running
examples. Expressions are not parsed; each one is spelled out here.
"""

from Automata.DeterministicAutomaton import DetBuchiAutomaton
from Automata.DeterministicAutomaton import Dfa
from Automata.DeterministicAutomaton import SafetyAutomaton
from Words.MoveAlphabet import MoveAlphabet


def letters_ab():
    return MoveAlphabet.from_lists(["a", "b"])


def _pd_letter(alphabet, text):
    return alphabet.letter_from_names(text.split(","))


def grim_trigger_language(alphabet):
    """
    (c,c)^omega + (c,c)^*(c,d)((d,c) + (d,d))^omega
    """
    cc, cd, dc, dd = (_pd_letter(alphabet, text) for text in ("c,c", "c,d", "d,c", "d,d"))
    return SafetyAutomaton(alphabet, ["cooperate", "punish"], "cooperate",
                           {("cooperate", cc): "cooperate",
                            ("cooperate", cd): "punish",
                            ("punish", dc)   : "punish",
                            ("punish", dd)   : "punish"})


def coordination_language(alphabet):
    """
    (c,c)^omega + (d,d)^omega
    """
    cc, dd = _pd_letter(alphabet, "c,c"), _pd_letter(alphabet, "d,d")
    return SafetyAutomaton(alphabet, ["start", "cooperate", "defect"], "start",
                           {("start", cc)    : "cooperate",
                            ("start", dd)    : "defect",
                            ("cooperate", cc): "cooperate",
                            ("defect", dd)   : "defect"})


def wait_for_cooperation_language(alphabet):
    """
    (d,d)^omega + (d,d)^*(d,c)((c,c) + (c,d))^omega
    """
    cc, cd, dc, dd = (_pd_letter(alphabet, text) for text in ("c,c", "c,d", "d,c", "d,d"))
    return SafetyAutomaton(alphabet, ["waiting", "cooperating"], "waiting",
                           {("waiting", dd)    : "waiting",
                            ("waiting", dc)    : "cooperating",
                            ("cooperating", cc): "cooperating",
                            ("cooperating", cd): "cooperating"})


def eventually_constant_language(alphabet, stay, switch):
    """
    stay^* switch^omega, which is not closed: stay^omega is a limit
    of its members without belonging to it.
    """
    return DetBuchiAutomaton(alphabet, ["before", "after"], "before",
                             {("before", stay)  : "before",
                              ("before", switch): "after",
                              ("after", switch) : "after"},
                             ["after"])


def a_star_b():
    """
    X = a^* b
    """
    alphabet = letters_ab()
    a, b = (0,), (1,)
    return Dfa(alphabet, ["start", "done"], "start", {("start", a): "start", ("start", b): "done"}, ["done"])


def ab_plus():
    """
    X = (ab)^+
    """
    alphabet = letters_ab()
    a, b = (0,), (1,)
    return Dfa(alphabet, ["start", "middle", "done"], "start",
               {("start", a): "middle", ("middle", b): "done", ("done", a): "middle"}, ["done"])


def ends_with_b():
    """
    X = (a + b)^* b
    """
    alphabet = letters_ab()
    a, b = (0,), (1,)
    return Dfa(alphabet, ["other", "seen_b"], "other",
               {("other", a): "other", ("other", b): "seen_b", ("seen_b", a): "other", ("seen_b", b): "seen_b"},
               ["seen_b"])


def ab_omega():
    """
    (ab)^omega
    """
    alphabet = letters_ab()
    a, b = (0,), (1,)
    return DetBuchiAutomaton(alphabet, ["even", "odd"], "even", {("even", a): "odd", ("odd", b): "even"}, ["even"])


def infinitely_many_b():
    """
    (a^* b)^omega
    """
    alphabet = letters_ab()
    a, b = (0,), (1,)
    return DetBuchiAutomaton(alphabet, ["other", "seen_b"], "other",
                             {("other", a): "other", ("other", b): "seen_b",
                              ("seen_b", a): "other", ("seen_b", b): "seen_b"},
                             ["seen_b"])


def universal(alphabet):
    return SafetyAutomaton(alphabet, ["any"], "any", {("any", letter): "any" for letter in alphabet.letters})
