"""State search

Enumerates base states and keeps those whose propagated states satisfy
the link condition at every vertex of C and orient C quasi-coherently.
"""

import logging
from functools import partial
from itertools import product
from typing import Iterable, List, Mapping, Optional, Sequence

from rigidcover.complex import (
    Colouring,
    State,
    StateRule,
    require_proper_colouring,
    state_is_quasi_coherent,
    state_passes_links,
)
from rigidcover.polytope import Polytope
from rigidcover.utils.constants import EXHAUSTIVE_SEARCH_MAX_FACETS
from rigidcover.utils.exceptions import InputError
from rigidcover.utils.executor import map_ordered

Permutation = Mapping[int, int]


def all_states(facets: Sequence[int]) -> Iterable[State]:
    """Every I/O assignment, in lexicographic order of encode() with O < I"""
    facets = tuple(facets)
    for bits in product((True, False), repeat=len(facets)):
        yield State(facets, frozenset(f for f, out in zip(facets, bits) if out))


def canonical(state: State, symmetries: Sequence[Permutation]) -> str:
    """Smallest encoding over the orbit of a state"""
    return min([state.encode()] + [state.permuted(g).encode() for g in symmetries])


def _passes(p: Polytope, col: Colouring, rule: StateRule, state: State) -> bool:
    return (state_passes_links(p, col, rule, state)
            and state_is_quasi_coherent(p, col, rule, state))


def search_states(p: Polytope, col: Colouring, rule: StateRule,
                  candidates: Optional[Iterable[State]] = None,
                  symmetries: Optional[Sequence[Permutation]] = None,
                  workers: int = 1) -> List[State]:
    """Find base states whose complex can be lifted to the cyclic cover

    A state passes when every ascending and descending link is connected
    and the complex it orients is quasi-coherent.

    Args:
        p: Polytope
        col: Proper colouring
        rule: Propagation rule
        candidates: States to test (default: all 2^n_facets states)
        symmetries: Facet permutations; one state per orbit is kept
        workers: Worker processes for the filter

    Returns:
        Passing states in candidate order

    Raises:
        ColouringError: Colouring is not proper
        StateRuleError: Rule does not fit the colouring
        InputError: Exhaustive search requested on too many facets
    """
    require_proper_colouring(p, col)
    rule.validate(col.c)
    if candidates is None:
        if p.facet_count > EXHAUSTIVE_SEARCH_MAX_FACETS:
            raise InputError(
                f'Exhaustive search over 2^{p.facet_count} states is not supported; '
                f'pass explicit candidates (limit {EXHAUSTIVE_SEARCH_MAX_FACETS} facets)'
            )
        candidates = all_states(p.facet_ids)
    candidates = list(candidates)
    logging.info('Searching %d candidate states', len(candidates))

    verdicts = map_ordered(partial(_passes, p, col, rule), candidates, workers=workers)
    passing = [state for state, ok in zip(candidates, verdicts) if ok]

    if symmetries:
        seen = set()
        unique = []
        for state in passing:
            key = canonical(state, symmetries)
            if key not in seen:
                seen.add(key)
                unique.append(state)
        passing = unique

    logging.info('%d states pass the link and quasi-coherence checks', len(passing))
    return passing
