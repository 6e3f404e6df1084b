"""
Deterministic linear-time selection (median of medians) in the comparison model.
"""

from typing import Any, Callable, List, Optional, Sequence

from saddlepoint.engine.view import QueryCounters
from saddlepoint.errors import ContractError

GROUP = 5


def _insertion_sort(items: List[Any], lt: Callable[[Any, Any], bool]) -> List[Any]:
    for k in range(1, len(items)):
        item = items[k]
        pos = k
        while pos > 0 and lt(item, items[pos - 1]):
            items[pos] = items[pos - 1]
            pos -= 1
        items[pos] = item
    return items


def _select(items: List[Any], k: int, lt: Callable[[Any, Any], bool]) -> Any:
    while True:
        if len(items) <= GROUP:
            return _insertion_sort(items, lt)[k - 1]

        medians = []
        for start in range(0, len(items), GROUP):
            group = _insertion_sort(items[start:start + GROUP], lt)
            medians.append(group[(len(group) - 1) // 2])
        pivot = _select(medians, (len(medians) + 1) // 2, lt)

        less, equal, greater = [], [], []
        for item in items:
            if lt(item, pivot):
                less.append(item)
            elif lt(pivot, item):
                greater.append(item)
            else:
                equal.append(item)

        if k <= len(less):
            items = less
        elif k <= len(less) + len(equal):
            return pivot
        else:
            k -= len(less) + len(equal)
            items = greater


def select_rank(values: Sequence[Any], k: int, counters: Optional[QueryCounters] = None) -> Any:
    """
    The k-th smallest element of `values` (1-based, duplicates counted).

    Args:
        values: Mutually comparable values.
        k: Rank, 1 <= k <= len(values).
        counters: Counters to charge comparisons to; a throwaway set is used
            when omitted.

    Returns:
        The element of rank k.
    """
    if not values:
        raise ContractError("Cannot select from an empty sequence")
    if not 1 <= k <= len(values):
        raise ContractError(f"Rank {k} outside 1..{len(values)}")
    counters = counters if counters is not None else QueryCounters()
    return _select(list(values), k, counters.lt)


def median(values: Sequence[Any], counters: Optional[QueryCounters] = None) -> Any:
    """Element of rank ceil(len/2)."""
    return select_rank(values, (len(values) + 1) // 2, counters)
