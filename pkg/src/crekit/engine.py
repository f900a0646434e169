"""Exact semantics of counted regular expressions.

The semantic pipeline is: rewrite occurrence indicators into the
counter-free fragment (``expand``), build the epsilon-free position
automaton (``glushkov``), then decide membership by subset simulation or
enumerate words breadth-first.  ``length_set`` computes the set of word
lengths directly on the *unexpanded* tree, which both avoids the unary
blowup and gives an independent cross-check of the automaton path.

Counter expansion is unary, so it is guarded by an explicit node cap:
exceeding the cap raises ExpansionCapExceeded up front (the required size
is computed arithmetically before anything is built), never silently
truncates.

Words are tuples of symbol names.  Their text form is space-separated
lexemes, with the empty word written ``%``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ExpansionCapExceeded, ExprSyntaxError, ResultTooLarge
from .syntax import (
    EPSILON,
    Alt,
    Concat,
    CountRange,
    Epsilon,
    Expr,
    Rep,
    Symbol,
    alphabet_of,
    alt,
    concat,
    is_symbol_name,
)

DEFAULT_EXPANSION_CAP = 100_000
DEFAULT_WORD_LIMIT = 100_000

Word = tuple[str, ...]


def render_word(w: Word) -> str:
    """Serialize a word; the empty word renders as '%'."""
    return " ".join(w) if w else "%"


def parse_word(text: str) -> Word:
    """Parse a space-separated word; '%' (or empty text) is the empty word."""
    stripped = text.strip()
    if stripped in ("", "%"):
        return ()
    symbols = tuple(stripped.split())
    for sym in symbols:
        if not is_symbol_name(sym):
            raise ExprSyntaxError(f"invalid symbol {sym!r} in word", text.index(sym))
    return symbols


def node_count(e: Expr) -> int:
    """Number of AST nodes, counting shared subtrees once per occurrence."""
    if isinstance(e, (Symbol, Epsilon)):
        return 1
    if isinstance(e, Concat):
        return 1 + sum(node_count(p) for p in e.parts)
    if isinstance(e, Alt):
        return 1 + sum(node_count(b) for b in e.branches)
    if isinstance(e, Rep):
        return 1 + node_count(e.inner)
    raise TypeError(f"not an Expr: {e!r}")


def occurrence_count(e: Expr) -> int:
    """Number of symbol occurrences (Glushkov positions) in ``e``."""
    if isinstance(e, Symbol):
        return 1
    if isinstance(e, Epsilon):
        return 0
    if isinstance(e, Concat):
        return sum(occurrence_count(p) for p in e.parts)
    if isinstance(e, Alt):
        return sum(occurrence_count(b) for b in e.branches)
    return occurrence_count(e.inner)


# --- counter expansion -------------------------------------------------------


def _expansion_size(e: Expr) -> int:
    """Node count of expand(e) before flattening; pure arithmetic."""
    if isinstance(e, (Symbol, Epsilon)):
        return 1
    if isinstance(e, Concat):
        return 1 + sum(_expansion_size(p) for p in e.parts)
    if isinstance(e, Alt):
        return 1 + sum(_expansion_size(b) for b in e.branches)
    s = _expansion_size(e.inner)
    low, high = e.count.low, e.count.high
    if high is None:
        if low <= 1:
            return 1 + s
        return 1 + low * s + (1 + s)
    if high == 1:
        return s + 2 if low == 0 else s
    return low * s + (high - low) * (s + 2) + 1


def expand(e: Expr, cap: int = DEFAULT_EXPANSION_CAP) -> Expr:
    """Rewrite counted repetition into the counter-free fragment.

    Rules: E{l,u} becomes l copies of E followed by u-l copies of (E|%);
    E{l,unbounded} becomes l copies of E followed by E{0,unbounded}.  The
    star-normal repetitions {0,unbounded} and {1,unbounded} survive as-is.
    The language is preserved; the result may share subtrees.
    """
    required = _expansion_size(e)
    if required > cap:
        raise ExpansionCapExceeded(required, cap)
    return _expand(e)


def _expand(e: Expr) -> Expr:
    if isinstance(e, (Symbol, Epsilon)):
        return e
    if isinstance(e, Concat):
        return concat(_expand(p) for p in e.parts)
    if isinstance(e, Alt):
        return alt(_expand(b) for b in e.branches)
    inner = _expand(e.inner)
    low, high = e.count.low, e.count.high
    if high is None:
        if low <= 1:
            return Rep(inner, CountRange(low, None))
        return concat([inner] * low + [Rep(inner, CountRange(0, None))])
    optional = alt([inner, EPSILON])
    return concat([inner] * low + [optional] * (high - low))


# --- position automaton ------------------------------------------------------


@dataclass(frozen=True)
class Nfa:
    """Epsilon-free automaton; state 0 is initial, states 1..n are positions."""

    state_count: int
    initial: int
    accepting: frozenset[int]
    transitions: frozenset[tuple[int, str, int]]

    def __post_init__(self):
        if not 0 <= self.initial < self.state_count:
            raise ValueError("initial state out of range")
        for q in self.accepting:
            if not 0 <= q < self.state_count:
                raise ValueError("accepting state out of range")
        for src, _, dst in self.transitions:
            if not (0 <= src < self.state_count and 0 <= dst < self.state_count):
                raise ValueError("transition state out of range")

    @cached_property
    def successors(self) -> dict[int, dict[str, frozenset[int]]]:
        table: dict[int, dict[str, set[int]]] = {}
        for src, sym, dst in self.transitions:
            table.setdefault(src, {}).setdefault(sym, set()).add(dst)
        return {
            src: {sym: frozenset(dsts) for sym, dsts in row.items()}
            for src, row in table.items()
        }

    def step(self, states, symbol: str) -> frozenset[int]:
        out: set[int] = set()
        for q in states:
            out |= self.successors.get(q, {}).get(symbol, frozenset())
        return frozenset(out)

    def accepts(self, word: Word) -> bool:
        current: frozenset[int] = frozenset((self.initial,))
        for sym in word:
            current = self.step(current, sym)
            if not current:
                return False
        return bool(current & self.accepting)


_STAR_RANGES = ((0, 1), (0, None), (1, None))


def glushkov(e: Expr) -> Nfa:
    """Position automaton of a counter-free expression.

    Accepts the classic operator ranges {0,1}, {0,unbounded} and
    {1,unbounded}; any other occurrence indicator must be expanded first.
    """
    symbols: list[str] = []  # symbols[p-1] is the symbol of position p
    follow: dict[int, set[int]] = {}

    def build(x: Expr) -> tuple[bool, frozenset[int], frozenset[int]]:
        # returns (nullable, first, last)
        if isinstance(x, Symbol):
            symbols.append(x.name)
            p = len(symbols)
            follow[p] = set()
            only = frozenset((p,))
            return False, only, only
        if isinstance(x, Epsilon):
            return True, frozenset(), frozenset()
        if isinstance(x, Alt):
            nullable, first, last = False, frozenset(), frozenset()
            for b in x.branches:
                n, f, l = build(b)
                nullable, first, last = nullable or n, first | f, last | l
            return nullable, first, last
        if isinstance(x, Concat):
            nullable, first, last = True, frozenset(), frozenset()
            for part in x.parts:
                n, f, l = build(part)
                for p in last:
                    follow[p] |= f
                if nullable:
                    first |= f
                last = last | l if n else l
                nullable = nullable and n
            return nullable, first, last
        if isinstance(x, Rep):
            if (x.count.low, x.count.high) not in _STAR_RANGES:
                raise ValueError(
                    f"glushkov needs expanded input, found {x.count.render()}"
                )
            n, f, l = build(x.inner)
            if x.count.high is None:
                for p in l:
                    follow[p] |= f
            return n or x.count.low == 0, f, l
        raise TypeError(f"not an Expr: {x!r}")

    nullable, first, last = build(e)
    transitions = {(0, symbols[p - 1], p) for p in first}
    for p, succ in follow.items():
        for q in succ:
            transitions.add((p, symbols[q - 1], q))
    accepting = set(last)
    if nullable:
        accepting.add(0)
    return Nfa(
        state_count=len(symbols) + 1,
        initial=0,
        accepting=frozenset(accepting),
        transitions=frozenset(transitions),
    )


# --- membership and enumeration ----------------------------------------------


def member(e: Expr, word: Word, *, cap: int = DEFAULT_EXPANSION_CAP) -> bool:
    """True iff ``word`` belongs to the language of ``e``."""
    return glushkov(expand(e, cap)).accepts(tuple(word))


def language_iter(
    e: Expr,
    max_len: int,
    *,
    cap: int = DEFAULT_EXPANSION_CAP,
    symbol_order=None,
):
    """Yield the words of L(e) with length <= max_len.

    Order is length first, then lexicographic by ``symbol_order`` (default:
    first-occurrence order of the expression's alphabet).
    """
    nfa = glushkov(expand(e, cap))
    syms = tuple(symbol_order) if symbol_order is not None else tuple(alphabet_of(e))
    start: frozenset[int] = frozenset((nfa.initial,))
    frontier: list[tuple[Word, frozenset[int]]] = [((), start)]
    if start & nfa.accepting:
        yield ()
    for _ in range(max_len):
        if not frontier:
            return
        nxt: list[tuple[Word, frozenset[int]]] = []
        for word, states in frontier:
            for sym in syms:
                reached = nfa.step(states, sym)
                if not reached:
                    continue
                extended = word + (sym,)
                nxt.append((extended, reached))
                if reached & nfa.accepting:
                    yield extended
        frontier = nxt


def enumerate_words(
    e: Expr,
    max_len: int,
    *,
    cap: int = DEFAULT_EXPANSION_CAP,
    word_limit: int = DEFAULT_WORD_LIMIT,
) -> list[Word]:
    """All words of L(e) with length <= max_len, in length-then-lex order."""
    out: list[Word] = []
    for word in language_iter(e, max_len, cap=cap):
        out.append(word)
        if len(out) > word_limit:
            raise ResultTooLarge(word_limit)
    return out


# --- length sets ---------------------------------------------------------------


@dataclass(frozen=True)
class LengthSet:
    """Word lengths of a language within [0, cutoff].

    ``saturated`` is True exactly when the language also has words longer
    than the cutoff.
    """

    members: frozenset[int]
    saturated: bool


def _trunc_sumset(a: set[int], b: set[int], cutoff: int) -> tuple[set[int], bool]:
    out: set[int] = set()
    dropped = False
    for x in a:
        for y in b:
            if x + y <= cutoff:
                out.add(x + y)
            else:
                dropped = True
    return out, dropped


def _rep_lengths(
    s: set[int], low: int, high: int | None, cutoff: int
) -> tuple[set[int], bool]:
    dropped = False
    fold: set[int] = {0}  # lengths using exactly i copies, i advancing below
    for _ in range(low):
        fold, d = _trunc_sumset(fold, s, cutoff)
        dropped = dropped or d
        if not fold:
            break
    result = set(fold)
    copies = low
    while fold and (high is None or copies < high):
        fold, d = _trunc_sumset(fold, s, cutoff)
        dropped = dropped or d
        copies += 1
        new = fold - result
        if not new:
            # every later level stays inside result, with no further drops
            break
        result |= new
    return result, dropped


def _lengths(e: Expr, cutoff: int) -> tuple[set[int], bool]:
    if isinstance(e, Symbol):
        return ({1}, False) if cutoff >= 1 else (set(), True)
    if isinstance(e, Epsilon):
        return {0}, False
    if isinstance(e, Alt):
        members: set[int] = set()
        saturated = False
        for b in e.branches:
            m, sat = _lengths(b, cutoff)
            members |= m
            saturated = saturated or sat
        return members, saturated
    if isinstance(e, Concat):
        acc = {0}
        saturated = False
        for part in e.parts:
            m, sat = _lengths(part, cutoff)
            saturated = saturated or sat
            acc, dropped = _trunc_sumset(acc, m, cutoff)
            saturated = saturated or dropped
        return acc, saturated
    if isinstance(e, Rep):
        m, sat = _lengths(e.inner, cutoff)
        members, dropped = _rep_lengths(m, e.count.low, e.count.high, cutoff)
        return members, sat or dropped
    raise TypeError(f"not an Expr: {e!r}")


def length_set(e: Expr, cutoff: int) -> LengthSet:
    """Lengths of words of L(e) up to ``cutoff``, computed structurally."""
    if cutoff < 1:
        raise ValueError("cutoff must be positive")
    members, saturated = _lengths(e, cutoff)
    return LengthSet(frozenset(members), saturated)
