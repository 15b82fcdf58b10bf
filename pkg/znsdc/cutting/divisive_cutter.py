"""
ZnSDC: A Zincwarecode package.
License
-------
This program and the accompanying materials are made available under the terms
of the Eclipse Public License v2.0 which accompanies this distribution, and is
available at https://www.eclipse.org/legal/epl-v20.html
SPDX-License-Identifier: EPL-2.0
Copyright Contributors to the Zincwarecode Project.
Contact Information
-------------------
email: zincwarecode@gmail.com
github: https://github.com/zincware
web: https://zincwarecode.com/
Citation
--------
If you use this module please cite us with:

Summary
-------
Semi-supervised divisive cutting of an in-tree.
"""
import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from znsdc.data.dataset import LabelSet
from znsdc.mst.spanning_tree import Edge, SpanningTree
from znsdc.tree.forest import Forest
from znsdc.tree.intree import InTree
from znsdc.utils.exceptions import CutError, InputError, InvariantViolation

logger = logging.getLogger(__name__)

REASON_CUT = "cut"
REASON_PURE = "pure"
REASON_UNLABELED_SIDE = "unlabeled-side"


@dataclass(frozen=True)
class CutRecord:
    """
    One explored edge.

    Attributes
    ----------
    rank : int
            1-based position of the edge in descending length order.
    child : int
            Child endpoint of the directed edge.
    parent : int
            Parent endpoint of the directed edge.
    length : float
            Edge length.
    accepted : bool
            Whether the edge was removed.
    reason : str
            "cut", "pure" or "unlabeled-side".
    """

    rank: int
    child: int
    parent: int
    length: float
    accepted: bool
    reason: str

    def to_line(self) -> str:
        """
        Tab separated diagnostic line.
        """
        status = "accepted" if self.accepted else "skipped"
        return (
            f"{self.rank}\t{self.child}\t{self.parent}\t{self.length!r}\t"
            f"{status}\t{self.reason}"
        )


@dataclass
class CutLog:
    """
    Record of the cut phase.

    Attributes
    ----------
    records : list of CutRecord
            Explored edges with strictly increasing rank.
    elapsed : float
            Wall time of the whole cut phase in seconds.
    """

    records: List[CutRecord] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def accepted(self) -> List[CutRecord]:
        """
        Records of the removed edges.
        """
        return [record for record in self.records if record.accepted]

    @property
    def n_cuts(self) -> int:
        """
        Number of removed edges.
        """
        return len(self.accepted)

    @property
    def n_explored(self) -> int:
        """
        Number of edges looked at before the exploration stopped.
        """
        return len(self.records)

    def replay(self, intree: InTree) -> Forest:
        """
        Apply the accepted cuts to a fresh forest of intree.
        """
        forest = Forest(intree)
        for record in self.accepted:
            forest.cut(record.child)
        return forest

    def to_text(self, include_timing: bool = True) -> str:
        """
        Diagnostic text, one line per explored edge.

        Parameters
        ----------
        include_timing : bool (default = True)
                Write the elapsed time into the header. Leave it out to get
                reproducible bytes.
        """
        lines = [f"# explored={self.n_explored} cuts={self.n_cuts}"]
        if include_timing:
            lines.append(f"# elapsed_seconds={self.elapsed!r}")
        lines.append("# rank\tchild\tparent\tlength\tstatus\treason")
        lines.extend(record.to_line() for record in self.records)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ComponentLabelView:
    """
    Labels on both sides of an edge inside its component.

    Attributes
    ----------
    child_side : Counter
            Category multiset of the labeled nodes below the edge.
    parent_side : Counter
            Category multiset of the other labeled nodes of the component.
    """

    child_side: Counter
    parent_side: Counter

    @property
    def component(self) -> Counter:
        """
        Category multiset of the whole component.
        """
        return self.child_side + self.parent_side

    @property
    def impure(self) -> bool:
        """
        Whether the component holds more than one category.
        """
        return len(self.component) > 1

    @property
    def both_sides_labeled(self) -> bool:
        """
        Whether removing the edge leaves a labeled node on each side.
        """
        return sum(self.child_side.values()) > 0 and sum(self.parent_side.values()) > 0


def _directed(intree: InTree, edge: Edge) -> Tuple[int, int]:
    """
    (child, parent) of an edge of the uncut in-tree.
    """
    if intree.parent[edge.u] == edge.v:
        return edge.u, edge.v
    if intree.parent[edge.v] == edge.u:
        return edge.v, edge.u
    raise InputError(f"Edge {edge.pair} is not part of the in-tree.")


def side_labels(
    forest: Forest, tree: SpanningTree, edge: Edge, labels: LabelSet
) -> ComponentLabelView:
    """
    Category multisets on both sides of an uncut edge.

    The child side is collected by walking the child's current subtree, the parent
    side by collecting the remaining labeled nodes of the component.

    Parameters
    ----------
    forest : Forest
            Current forest.
    tree : SpanningTree
            The spanning tree the forest was oriented from.
    edge : Edge
            An edge of tree.
    labels : LabelSet
            Supervision.

    Returns
    -------
    view : ComponentLabelView
    """
    if edge.pair not in tree.edge_set():
        raise InputError(f"Edge {edge.pair} is not an edge of the spanning tree.")
    child, parent = _directed(forest.intree, edge)
    if forest.parent[child] != parent:
        raise CutError(f"Edge {edge.pair} has already been cut.")

    child_side: Counter = Counter()
    below = set()
    stack = [child]
    while stack:
        node = stack.pop()
        below.add(node)
        category = labels.category_of(node)
        if category is not None:
            child_side[category] += 1
        stack.extend(forest.children_of(node))

    component_root = forest.find_root(parent)
    parent_side: Counter = Counter()
    for index, category in labels.items():
        if index not in below and forest.find_root(index) == component_root:
            parent_side[category] += 1
    return ComponentLabelView(child_side=child_side, parent_side=parent_side)


class _LabelLedger:
    """
    Labeled members and category counts of every component.

    Side queries use the preorder intervals of the in-tree, so they cost
    O(labels in the component) instead of a subtree walk.
    """

    def __init__(self, intree: InTree, labels: LabelSet):
        self.intree = intree
        indices = labels.indices
        categories = [labels.entries[int(i)] for i in indices]
        self.category_names, codes = np.unique(categories, return_inverse=True)
        self.code_of = dict(zip(indices.tolist(), codes.tolist()))
        root = int(intree.root)
        self.members: Dict[int, np.ndarray] = {root: indices}
        self.n_categories: Dict[int, int] = {root: self._count(indices)}
        self.impure = {root} if self.n_categories[root] > 1 else set()

    def _count(self, members: np.ndarray) -> int:
        return len({self.code_of[int(i)] for i in members})

    def split(self, component: int, child: int) -> Tuple[np.ndarray, np.ndarray]:
        """
        Labeled members of the component below and above child.
        """
        members = self.members[component]
        entries = self.intree.entry[members]
        below = (entries >= self.intree.entry[child]) & (
            entries < self.intree.exit[child]
        )
        return members[below], members[~below]

    def apply_cut(
        self, component: int, child: int, below: np.ndarray, above: np.ndarray
    ):
        """
        Register that child now roots its own component.
        """
        self.members[child] = below
        self.members[component] = above
        self.impure.discard(component)
        for root, members in ((child, below), (component, above)):
            self.n_categories[root] = self._count(members)
            if self.n_categories[root] > 1:
                self.impure.add(root)


def divisive_cut(
    intree: InTree, tree: SpanningTree, labels: LabelSet
) -> Tuple[Forest, CutLog]:
    """
    Remove edges until every sub-tree is pure.

    Edges are explored once, longest first (equal lengths by ascending index pair).
    An edge is removed if its component holds more than one category and both
    sides of it keep at least one labeled node. The exploration stops as soon as
    every component is pure.

    Parameters
    ----------
    intree : InTree
            Orientation of tree.
    tree : SpanningTree
            Minimal spanning tree.
    labels : LabelSet
            Validated labels with at least one entry.

    Returns
    -------
    forest : Forest
            Forest in which every component is labeled and pure.
    log : CutLog
            Explored edges and the time spent.
    """
    if intree.n_nodes != tree.n_nodes or intree.edge_set() != tree.edge_set():
        raise InputError("The in-tree was not oriented from this spanning tree.")
    if len(labels) == 0:
        raise InputError("Cutting needs at least one labeled point.")
    for index in labels.entries:
        if not 0 <= index < intree.n_nodes:
            raise InputError(f"Label index {index} is out of range.")

    start = time.perf_counter()
    forest = Forest(intree)
    ledger = _LabelLedger(intree, labels)
    records = []

    for rank, edge in enumerate(tree.sorted_descending(), start=1):
        if not ledger.impure:
            break
        child, parent = _directed(intree, edge)
        component = forest.enclosing_root(parent)

        if component not in ledger.impure:
            reason = REASON_PURE
        else:
            below, above = ledger.split(component, child)
            if below.size == 0 or above.size == 0:
                reason = REASON_UNLABELED_SIDE
            else:
                forest.cut(child)
                ledger.apply_cut(component, child, below, above)
                reason = REASON_CUT

        records.append(
            CutRecord(
                rank=rank,
                child=child,
                parent=parent,
                length=edge.length,
                accepted=reason == REASON_CUT,
                reason=reason,
            )
        )

    log = CutLog(records=records, elapsed=time.perf_counter() - start)

    if ledger.impure:
        raise InvariantViolation(
            f"Exploration ended with impure components {sorted(ledger.impure)}."
        )
    if forest.n_cuts != log.n_cuts:
        raise InvariantViolation("Forest roots and accepted cuts disagree.")
    if any(ledger.members[root].size == 0 for root in forest.roots):
        raise InvariantViolation("A component was left without labeled nodes.")

    logger.debug(
        "Explored %d edges, removed %d in %.3g s",
        log.n_explored,
        log.n_cuts,
        log.elapsed,
    )
    return forest, log
