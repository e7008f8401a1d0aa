# the decreasing-diagram condition on the label sequences of a valley

from __future__ import annotations

from collections.abc import Sequence

from src.core.orders.preorder import RulePreorder


def _side_decreasing(labels: Sequence[str], own: str, other: str, order: RulePreorder) -> bool:
    """`labels` splits as A·M·T: A below `own`, M at most one label ≼ `other`, T below `own` or `other`."""
    n = len(labels)
    for i in range(n + 1):
        if i > 0 and not order.gt(own, labels[i - 1]):
            break
        for j in (i, i + 1):
            if j > n:
                continue
            if j == i + 1 and not order.geq(other, labels[i]):
                continue
            if all(order.gt(own, l) or order.gt(other, l) for l in labels[j:]):
                return True
    return False


def matches_star(left_labels: Sequence[str], right_labels: Sequence[str],
                 alpha: str, beta: str, order: RulePreorder) -> bool:
    """True iff the valley closing an α/β peak is decreasing, with the roles of α and β swapped on the right."""
    return (_side_decreasing(left_labels, alpha, beta, order)
            and _side_decreasing(right_labels, beta, alpha, order))
