"""Exact computation of totally mixed Nash equilibria.

Games are passed as JSON text in the same format the command-line tool reads.
Shapes are strategy counts, so "2,2,2" is three players with two strategies each.
"""

import json

from . import _tmne
from ._tmne import PositiveDimensional, hermite_signature

__all__ = [
    "PositiveDimensional",
    "bounds",
    "certify",
    "count",
    "delta",
    "hermite_signature",
    "isolated",
    "load",
    "random_game",
    "solve",
    "zero_dim_test",
]


def _text(game):
    if isinstance(game, dict):
        return json.dumps(game)
    return game


def load(path):
    with open(path, encoding="utf-8") as f:
        return f.read()


def delta(shape):
    out = json.loads(_tmne.delta(shape))
    out["delta"] = int(out["delta"])
    return out


def bounds(shape):
    out = json.loads(_tmne.bounds(shape))
    for key in ("delta", "D", "N"):
        out[key] = int(out[key])
    out["delta_i"] = [int(x) for x in out["delta_i"]]
    return out


def random_game(shape, seed):
    return json.loads(_tmne.random_game(shape, seed))


def solve(game, seed=1, decimals=-1):
    return json.loads(_tmne.solve(_text(game), seed, False, decimals))


def certify(game, seed=1):
    return json.loads(_tmne.solve(_text(game), seed, True, -1))


def count(game, seed=1):
    return _tmne.count(_text(game), seed)


def zero_dim_test(game, trials=40, seed=1):
    return _tmne.zero_dim_test(_text(game), trials, seed)


def isolated(game, seed=1, trials=40):
    return json.loads(_tmne.isolated(_text(game), seed, trials))
