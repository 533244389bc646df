"""
Local Search Moves

Single-arc additions, deletions and reversals between feature
variables. Arcs leaving the class variable are never touched.

The code is licensed under the MIT license.
"""

from typing import List, NamedTuple, Optional
from textpgm.core.loader import processing_handler
from textpgm.interface.base import Base
from textpgm.interface.network import Dag
from textpgm.bayesnet.scores import ScoreCache

# Smallest score gain that counts as an improvement
MIN_IMPROVEMENT = 1e-9


class Move(NamedTuple):
    """
    One arc operation on parent -> child
    """

    kind: str
    parent: int
    child: int

    def inverse(self) -> "Move":
        """
        The move that undoes this one
        """

        if self.kind == "add":
            return Move("delete", self.parent, self.child)
        if self.kind == "delete":
            return Move("add", self.parent, self.child)

        return Move("reverse", self.child, self.parent)

    def apply(self, dag: Dag) -> Dag:
        """
        Returns the graph after the move
        """

        parents = list(dag.parents)

        if self.kind in ("delete", "reverse"):
            parents[self.child] = tuple(
                p for p in parents[self.child] if p != self.parent
            )
        if self.kind == "add":
            parents[self.child] = parents[self.child] + (self.parent,)
        if self.kind == "reverse":
            parents[self.parent] = parents[self.parent] + (self.child,)

        return Dag(dag.n, parents)


class ScoredMove(NamedTuple):
    """
    A move with its score delta
    """

    delta: float
    move: Move


def candidate_moves(dag: Dag, max_parents: int) -> List[Move]:
    """
    All legal moves in tie-break order: additions, deletions,
    reversals, each by (parent, child)
    """

    features = range(1, dag.n)
    adds, deletes, reverses = [], [], []

    for u in features:
        for v in features:
            if u == v:
                continue
            if u in dag.parents[v]:
                deletes.append(Move("delete", u, v))
                if len(dag.feature_parents(u)) < max_parents and not dag.has_path(
                    u, v, skip=(u, v)
                ):
                    reverses.append(Move("reverse", u, v))
            elif len(dag.feature_parents(v)) < max_parents and not dag.has_path(v, u):
                adds.append(Move("add", u, v))

    return adds + deletes + reverses


def move_delta(cache: ScoreCache, dag: Dag, move: Move) -> float:
    """
    Score change caused by a move, from the affected families only
    """

    u, v = move.parent, move.child
    family_v = dag.parents[v]

    if move.kind == "add":
        return cache.family(v, family_v + (u,)) - cache.family(v, family_v)

    removed = tuple(p for p in family_v if p != u)
    delta = cache.family(v, removed) - cache.family(v, family_v)

    if move.kind == "reverse":
        family_u = dag.parents[u]
        delta += cache.family(u, family_u + (v,)) - cache.family(u, family_u)

    return delta


def score_moves(cache: ScoreCache, dag: Dag, max_parents: int) -> List[ScoredMove]:
    """
    Score every legal move, in tie-break order
    """

    moves = candidate_moves(dag, max_parents)
    deltas = processing_handler(
        [(cache, dag, move) for move in moves], move_delta, 1, Base.threads
    )

    return [ScoredMove(delta, move) for delta, move in zip(deltas, moves)]


def best_move(scored: List[ScoredMove]) -> Optional[ScoredMove]:
    """
    Largest delta, earliest in tie-break order on ties
    """

    best = None
    for candidate in scored:
        if best is None or candidate.delta > best.delta:
            best = candidate

    return best


def ranked_moves(scored: List[ScoredMove]) -> List[ScoredMove]:
    """
    Moves by decreasing delta, ties in tie-break order
    """

    return sorted(scored, key=lambda candidate: -candidate.delta)
