"""Shared corpus builders and hypothesis strategies."""

import random

import pytest
from hypothesis import strategies as st

from crekit.syntax import EPSILON, CountRange, Symbol, alt, concat, rep

SYMBOLS = ("a", "b", "c")


def random_expr(rng, depth, symbols=SYMBOLS, allow_unbounded=True):
    if depth == 0 or rng.random() < 0.35:
        if rng.random() < 0.12:
            return EPSILON
        return Symbol(rng.choice(symbols))
    kind = rng.choices(("concat", "alt", "rep"), weights=(4, 3, 3))[0]
    if kind == "concat":
        parts = [
            random_expr(rng, depth - 1, symbols, allow_unbounded)
            for _ in range(rng.randint(2, 3))
        ]
        return concat(parts)
    if kind == "alt":
        branches = [
            random_expr(rng, depth - 1, symbols, allow_unbounded)
            for _ in range(rng.randint(2, 3))
        ]
        return alt(branches)
    inner = random_expr(rng, depth - 1, symbols, allow_unbounded)
    low = rng.randint(0, 3)
    if allow_unbounded and rng.random() < 0.25:
        return rep(inner, low, None)
    return rep(inner, low, rng.randint(max(low, 1), min(low + 2, 4)))


def make_corpus(count, seed, symbols=SYMBOLS, depth=3, allow_unbounded=True):
    rng = random.Random(seed)
    return [random_expr(rng, depth, symbols, allow_unbounded) for _ in range(count)]


@pytest.fixture(scope="session")
def corpus():
    """Deterministic mixed corpus used by the engine cross-checks."""
    return make_corpus(500, seed=20240527)


@st.composite
def count_ranges(draw):
    low = draw(st.integers(0, 3))
    if draw(st.booleans()):
        return CountRange(low, None)
    return CountRange(low, draw(st.integers(max(low, 1), 4)))


def _extend(children):
    concats = st.lists(children, min_size=2, max_size=3).map(concat)
    alts = st.lists(children, min_size=2, max_size=3).map(alt)
    reps = st.tuples(children, count_ranges()).map(
        lambda t: rep(t[0], t[1].low, t[1].high)
    )
    return st.one_of(concats, alts, reps)


def expressions(symbols=SYMBOLS):
    base = st.one_of(
        st.sampled_from(symbols).map(Symbol),
        st.just(EPSILON),
    )
    return st.recursive(base, _extend, max_leaves=8)


def _extend_sugar(children):
    concats = st.lists(children, min_size=2, max_size=3).map(concat)
    alts = st.lists(children, min_size=2, max_size=3).map(alt)
    sugar = st.sampled_from([(0, 1), (0, None), (1, None)])
    reps = st.tuples(children, sugar).map(lambda t: rep(t[0], *t[1]))
    return st.one_of(concats, alts, reps)


def sugar_expressions(symbols=SYMBOLS):
    """Expressions using only the classic ?/*/+ operator ranges."""
    base = st.one_of(
        st.sampled_from(symbols).map(Symbol),
        st.just(EPSILON),
    )
    return st.recursive(base, _extend_sugar, max_leaves=8)
