"""A small backtracking constraint solver."""
from __future__ import annotations

from typing import Any, Callable, Iterable, Iterator, Sequence


def solve(variables: Sequence, domain: Callable[[Any, dict], Iterable],
          constraints: Sequence[tuple[Sequence, Callable[[dict], bool]]]) -> Iterator[dict]:
    """Backtracking search: each constraint is tested as soon as its variables are bound."""
    pos = {v: i for i, v in enumerate(variables)}
    at: list[list] = [[] for _ in variables]
    for keys, check in constraints:
        at[max(pos[k] for k in keys)].append(check)
    assignment: dict = {}
    n = len(variables)

    def go(i):
        if i == n:
            yield dict(assignment)
            return
        v = variables[i]
        for val in domain(v, assignment):
            assignment[v] = val
            if all(check(assignment) for check in at[i]):
                yield from go(i + 1)
        assignment.pop(v, None)

    yield from go(0)
