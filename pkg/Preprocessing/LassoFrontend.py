import re

from Words.LassoWord import LassoWord
from Words.MoveAlphabet import MoveAlphabet

_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_letter(alphabet: MoveAlphabet, token: str):
    """
    'c,d' -> (0, 1) for the Prisoner's Dilemma alphabet. Single-player
    alphabets may omit the commas altogether.
    """
    names = token.split(",")
    if len(names) == 1 and alphabet.player_count > 1:
        raise ValueError("Letter {!r} needs {} comma-joined actions".format(token, alphabet.player_count))
    return alphabet.letter_from_names([name.strip() for name in names])


def format_letter(alphabet: MoveAlphabet, letter):
    return ",".join(alphabet.letter_names(letter))


def parse_word(alphabet: MoveAlphabet, text: str):
    tokens = _TOKEN.findall(text)
    if "(" in tokens or ")" in tokens:
        raise ValueError("A finite word cannot contain parentheses: {!r}".format(text))
    if tokens == ["_"]:
        return ()
    return tuple(parse_letter(alphabet, token) for token in tokens)


def format_word(alphabet: MoveAlphabet, word):
    if len(word) == 0:
        return "_"
    return " ".join(format_letter(alphabet, letter) for letter in word)


def parse_lasso(alphabet: MoveAlphabet, text: str) -> LassoWord:
    """
    'c,c c,d ( d,d )' means (c,c)(c,d) . ((d,d))^omega.
    The cycle is the only parenthesised group and closes the word.
    """
    tokens = _TOKEN.findall(text)
    if tokens.count("(") != 1 or tokens.count(")") != 1:
        raise ValueError("A lasso needs exactly one parenthesised cycle: {!r}".format(text))
    opening = tokens.index("(")
    closing = tokens.index(")")
    if closing != len(tokens) - 1 or closing < opening:
        raise ValueError("The cycle must close the lasso: {!r}".format(text))
    stem = tuple(parse_letter(alphabet, token) for token in tokens[:opening])
    cycle = tuple(parse_letter(alphabet, token) for token in tokens[opening + 1:closing])
    if len(cycle) == 0:
        raise ValueError("The cycle of {!r} is empty".format(text))
    return LassoWord(stem, cycle)


def format_lasso(alphabet: MoveAlphabet, lasso: LassoWord):
    parts = [format_letter(alphabet, letter) for letter in lasso.stem]
    parts.append("(")
    parts.extend(format_letter(alphabet, letter) for letter in lasso.cycle)
    parts.append(")")
    return " ".join(parts)


if __name__ == '__main__':
    pd = MoveAlphabet.from_lists(["c", "d"], ["c", "d"])
    match = parse_lasso(pd, "c,c c,d ( d,d )")
    print(match)
    print(format_lasso(pd, match))
