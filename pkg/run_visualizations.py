"""
A place for plots and sanity checks
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from Games.EquilibriumFamily import equilibrium_family
from Games.Game import prisoners_dilemma
from Games.discounted_payoff import discounted_payoff
from Games.good_matches import is_good_match
from Strategies.strategy_library import C
from Strategies.strategy_library import D
from Strategies.strategy_library import grim_trigger_pair
from Strategies.strategy_library import prisoners_dilemma_alphabet
from Words.LassoWord import LassoWord


def plot_grim_trigger_margins(path="grim_trigger_margins.png"):
    alphabet = prisoners_dilemma_alphabet()
    game = prisoners_dilemma(alphabet)
    family = equilibrium_family(grim_trigger_pair(alphabet))
    cooperation = LassoWord((), ((C, C),))
    deltas = np.linspace(0.02, 0.98, 49)
    plt.figure(figsize=(8, 5))
    for player in range(game.player_count):
        margins = [is_good_match(cooperation, family.y_players[player], game, player, delta).margin for delta in deltas]
        plt.plot(deltas, margins, label="{}".format(alphabet.player_names[player]))
    plt.axhline(0.0, color="grey", linewidth=0.8)
    plt.axvline(0.25, color="grey", linestyle="--", linewidth=0.8)
    plt.xlabel("discount factor")
    plt.ylabel("worst good-match margin of (c,c)^omega")
    plt.legend()
    plt.savefig(path)
    plt.close()
    print("Saved {}".format(path))


def plot_waiting_payoffs(path="waiting_payoffs.png"):
    alphabet = prisoners_dilemma_alphabet()
    game = prisoners_dilemma(alphabet)
    deltas = np.linspace(0.02, 0.98, 49)
    plt.figure(figsize=(8, 5))
    for n in range(6):
        h = LassoWord(((D, D),) * n + ((D, C),), ((C, D),))
        plt.plot(deltas, [discounted_payoff(game, delta, h)[1] for delta in deltas], label="n = {}".format(n))
    plt.axhline(1.0, color="grey", linewidth=0.8)
    plt.xlabel("discount factor")
    plt.ylabel("payoff of the column for (d,d)^n (d,c) (c,d)^omega")
    plt.legend()
    plt.savefig(path)
    plt.close()
    print("Saved {}".format(path))


if __name__ == '__main__':
    plot_grim_trigger_margins()
    plot_waiting_payoffs()
