"""scikit-learn style front end.

The estimators take a single graph as ``X`` (a :class:`~plsrd.graph.Graph`,
a :class:`~plsrd.graph.FamilySpec`, a networkx graph or a
``{"n": ..., "edges": ...}`` mapping) so they can be cloned, grid-searched
over their parameters and dropped into pipelines.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .bounds import max_two_packing
from .graph import FamilySpec, Graph, generate
from .labeling import check_labeling
from .solver import SolveOptions, solve


def check_graph(X) -> Graph:
    """Coerce any supported graph description into a :class:`Graph`."""
    if isinstance(X, Graph):
        return X
    if isinstance(X, FamilySpec):
        return generate(X)
    if isinstance(X, dict):
        return Graph.from_edges(int(X["n"]), X["edges"])
    if hasattr(X, "nodes") and hasattr(X, "edges"):
        nodes = sorted(X.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        if not nodes:
            raise ValueError("empty graph")
        return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in X.edges()])
    raise TypeError(f"cannot interpret {type(X).__name__} as a graph")


class PLSRDSolver(TransformerMixin, BaseEstimator):
    """Exact PLSRD number of a graph.

    After ``fit`` the estimator exposes ``optimum_``, ``witness_``,
    ``proven_optimal_`` and ``n_nodes_``.  ``transform`` returns the
    witness labeling as an integer array.
    """

    def __init__(self, algorithm="bnb", n_jobs=None, node_budget=None, time_budget=None, canonical_witness=True):
        self.algorithm = algorithm
        self.n_jobs = n_jobs
        self.node_budget = node_budget
        self.time_budget = time_budget
        self.canonical_witness = canonical_witness

    def _options(self, warm_start=None) -> SolveOptions:
        return SolveOptions(
            algorithm=self.algorithm,
            workers=self.n_jobs,
            node_budget=self.node_budget,
            time_budget=self.time_budget,
            warm_start=None if warm_start is None else check_labeling(warm_start),
            canonical_witness=self.canonical_witness,
        )

    def fit(self, X, y=None, warm_start=None):
        g = check_graph(X)
        result = solve(g, self._options(warm_start))
        self.graph_ = g
        self.result_ = result
        self.optimum_ = result.optimum
        self.witness_ = np.asarray(result.witness, dtype=np.int8)
        self.proven_optimal_ = result.proven_optimal
        self.n_nodes_ = result.nodes_explored
        return self

    def transform(self, X):
        check_is_fitted(self, "result_")
        if check_graph(X) != self.graph_:
            return np.asarray(solve(check_graph(X), self._options()).witness, dtype=np.int8)
        return self.witness_.copy()


class TwoPackingFinder(TransformerMixin, BaseEstimator):
    """Maximum (``exact=True``) or greedy maximal 2-packing of a graph.

    ``transform`` gives the 0/1 membership indicator over the vertices.
    """

    def __init__(self, exact=True):
        self.exact = exact

    def fit(self, X, y=None):
        g = check_graph(X)
        self.graph_ = g
        self.packing_ = max_two_packing(g, exact=self.exact)
        self.vertices_ = np.asarray(self.packing_.vertices, dtype=np.intp)
        return self

    def transform(self, X):
        check_is_fitted(self, "packing_")
        g = check_graph(X)
        packing = self.packing_ if g == self.graph_ else max_two_packing(g, exact=self.exact)
        out = np.zeros(g.n, dtype=np.int8)
        out[list(packing.vertices)] = 1
        return out
