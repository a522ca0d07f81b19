from dataclasses import dataclass

from Words.MoveAlphabet import FiniteWord
from Words.MoveAlphabet import MoveLetter


@dataclass(frozen=True)
class LassoWord:
    """
    Ultimately periodic infinite word stem . cycle^omega, the
    computable stand-in for a match h in A^omega.
    """
    stem: FiniteWord
    cycle: FiniteWord

    def __post_init__(self):
        object.__setattr__(self, "stem", tuple(tuple(letter) for letter in self.stem))
        object.__setattr__(self, "cycle", tuple(tuple(letter) for letter in self.cycle))
        if len(self.cycle) == 0:
            raise ValueError("The cycle of a lasso must not be empty.")

    def letter_at(self, t: int) -> MoveLetter:
        if t < 0:
            raise ValueError("Negative position {}".format(t))
        if t < len(self.stem):
            return self.stem[t]
        return self.cycle[(t - len(self.stem)) % len(self.cycle)]

    def phase(self, t: int) -> int:
        """
        Position inside the finite representation; two positions with
        the same phase are followed by the same infinite suffix.
        """
        if t < len(self.stem):
            return t
        return len(self.stem) + (t - len(self.stem)) % len(self.cycle)

    def suffix(self, t: int) -> "LassoWord":
        if t < len(self.stem):
            return LassoWord(self.stem[t:], self.cycle)
        shift = (t - len(self.stem)) % len(self.cycle)
        return LassoWord((), self.cycle[shift:] + self.cycle[:shift])

    @property
    def representation_length(self) -> int:
        return len(self.stem) + len(self.cycle)

    def __repr__(self):
        return "LassoWord(stem={}, cycle={})".format(list(self.stem), list(self.cycle))
