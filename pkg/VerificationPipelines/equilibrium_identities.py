import random

from tabulate import tabulate
from tqdm import tqdm

from Games.EquilibriumFamily import equilibrium_family
from Utility.random_instances import random_product_vector
from Words.MoveAlphabet import MoveAlphabet


def run(seed=131714, cases=100, show=True):
    """
    gamma(sigma) is the intersection of the X_i and each Y_i the
    intersection of the other players' X_j; equilibrium_family checks
    both and raises on a mismatch.
    """
    rng = random.Random(seed)
    failures = 0
    for _ in tqdm(range(cases), disable=not show):
        alphabet = MoveAlphabet.from_lists(["c", "d", "e"][:rng.randint(2, 3)], ["c", "d"])
        try:
            equilibrium_family(random_product_vector(rng, alphabet, max_memory=4))
        except RuntimeError:
            failures += 1
    rows = [["X = X_1 & X_2, Y_1 = X_2, Y_2 = X_1", cases, failures, ""]]
    if show:
        print(tabulate(rows, headers=["check", "cases", "discrepancies", "detail"]))
    return rows
