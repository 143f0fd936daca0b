"""The four-letter path language of the walk.

Letters carry index pairs a = (-1,-1), b = (-1,+1), c = (+1,-1),
d = (+1,+1); a word is a path of the extension graph, meaning consecutive
letters agree on their shared index.  Contraction collapses the overlap
into a P/Q word one symbol longer than the letter word, with -1 read as P
and +1 as Q.

Times 0 and 1 have no letter words (their walk cells are the empty word,
P and Q); the language starts at t = 2, where the time-t words are the
letter words of length t - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import coalgebra
from .coalgebra import CoproductTable, FormalSum

LETTERS = "abcd"
INDEX_PAIRS = {"a": (-1, -1), "b": (-1, 1), "c": (1, -1), "d": (1, 1)}
PAIR_TO_LETTER = {pair: letter for letter, pair in INDEX_PAIRS.items()}

# Out-neighbours in the extension graph: x -> y iff x's second index is
# y's first.
SUCCESSORS = {"a": "ab", "b": "cd", "c": "ab", "d": "cd"}
PREDECESSORS = {"a": "ac", "b": "ac", "c": "bd", "d": "bd"}

# Last-letter rewrite rules of the two grammars.  Applying the Markov rule
# appends one letter along an edge; the coassociative rule replaces the
# last letter by one of its two coproduct terms.
MARKOV_RULES = {x: tuple(x + y for y in SUCCESSORS[x]) for x in LETTERS}
COASSOC_RULES = {
    "a": ("aa", "bc"),
    "b": ("ab", "bd"),
    "c": ("dc", "ca"),
    "d": ("dd", "cb"),
}
GRAMMARS = {"markov": MARKOV_RULES, "coassoc": COASSOC_RULES}


def is_path_word(w: str) -> bool:
    if not w or set(w) - set(LETTERS):
        return False
    return all(y in SUCCESSORS[x] for x, y in zip(w, w[1:]))


def require_path_word(w: str) -> str:
    if not w:
        raise ValueError("letter words must be nonempty")
    bad = set(w) - set(LETTERS)
    if bad:
        raise ValueError(f"unknown letters {sorted(bad)} in {w!r}")
    for i, (x, y) in enumerate(zip(w, w[1:])):
        if y not in SUCCESSORS[x]:
            raise ValueError(f"{w!r} breaks at position {i}: {x!r} does not compose with {y!r}")
    return w


def _symbol(i: int) -> str:
    return "P" if i == -1 else "Q"


def contract(w: str) -> str:
    """Collapse overlapping index pairs into the underlying P/Q word."""
    require_path_word(w)
    first, second = INDEX_PAIRS[w[0]]
    out = [_symbol(first), _symbol(second)]
    out.extend(_symbol(INDEX_PAIRS[x][1]) for x in w[1:])
    return "".join(out)


def uncontract(m: str) -> str:
    """The unique letter word contracting to m (defined for length >= 2)."""
    if len(m) < 2:
        raise ValueError("words of length < 2 have no letter preimage")
    if set(m) - {"P", "Q"}:
        raise ValueError(f"expected a P/Q word, got {m!r}")
    index = {"P": -1, "Q": 1}
    return "".join(PAIR_TO_LETTER[(index[x], index[y])] for x, y in zip(m, m[1:]))


def word_index(w: str) -> int:
    """Sum of the path's vertex indices; the walk vertex of the word."""
    require_path_word(w)
    return INDEX_PAIRS[w[0]][0] + sum(INDEX_PAIRS[x][1] for x in w)


def generate(t: int, grammar: str = "markov") -> frozenset[str]:
    """All time-t words (letter length t - 1), deduplicated.

    Both grammars return the same set: every path of length t - 1 in the
    extension graph, 2^t words in total.
    """
    rules = _rules(grammar)
    if t < 2:
        raise ValueError(f"the language starts at t = 2, got t = {t}")
    words = set(LETTERS)
    for _ in range(t - 2):
        words = {w[:-1] + image for w in words for image in rules[w[-1]]}
    return frozenset(words)


def _rules(grammar: str) -> dict[str, tuple[str, str]]:
    try:
        return GRAMMARS[grammar]
    except KeyError:
        raise ValueError(f"unknown grammar {grammar!r}; pick markov or coassoc") from None


def grammar_table(grammar: str) -> CoproductTable:
    """The coproduct table whose rightmost iteration drives the grammar."""
    _rules(grammar)
    if grammar == "markov":
        return coalgebra.markov_pair_e()[0]
    return coalgebra.coproduct_e()


def generate_sum(t: int, grammar: str = "markov") -> FormalSum:
    """Multiset-preserving variant of `generate`, as a formal sum."""
    if t < 2:
        raise ValueError(f"the language starts at t = 2, got t = {t}")
    seed = FormalSum.basis(LETTERS)
    return coalgebra.iterate_rightmost(grammar_table(grammar), seed, t - 2)


def words_at_vertex(t: int, k: int) -> frozenset[str]:
    """Time-t words with index k; empty off the parity lattice."""
    if t < 2:
        raise ValueError(f"the language starts at t = 2, got t = {t}")
    if (t + k) % 2 or abs(k) > t:
        return frozenset()
    return frozenset(w for w in generate(t) if word_index(w) == k)


LEMMAS = (
    "lemma-sum-ab",
    "lemma-sum-cd",
    "lemma-contraction-mult",
    "mixed-coassoc",
    "corollary-equality",
)


@dataclass(frozen=True)
class LemmaReport:
    lemma: str
    ok: bool
    checked: int
    failures: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def check_lemma(lemma: str, depth: int = 1) -> LemmaReport:
    """Exact checks of the grammar lemmas.

    lemma-sum-ab / lemma-sum-cd: the two coproducts agree on a+b and c+d.
    lemma-contraction-mult: appending P or Q to a contraction equals the
    contraction of the extended word, plus the summed corollary
    C(x)(P+Q) = C(applying the Markov rule to x).
    mixed-coassoc: (id (x) coassoc) after markov = (id (x) markov) after
    markov, letter by letter.
    corollary-equality: rightmost iterates of the two coproducts agree on
    a+b+c+d up to the given depth, as exact formal sums.
    """
    if lemma not in LEMMAS:
        raise ValueError(f"unknown lemma {lemma!r}")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    dm = grammar_table("markov")
    dc = grammar_table("coassoc")
    failures: list[str] = []
    checked = 0

    if lemma in ("lemma-sum-ab", "lemma-sum-cd"):
        pair = "ab" if lemma == "lemma-sum-ab" else "cd"
        lhs = dm.apply(pair[0]) + dm.apply(pair[1])
        rhs = dc.apply(pair[0]) + dc.apply(pair[1])
        checked = 1
        if lhs != rhs:
            failures.append(f"markov and coassociative coproducts differ on {pair[0]}+{pair[1]}")
    elif lemma == "lemma-contraction-mult":
        closing = {"P": -1, "Q": 1}
        for y in LETTERS:
            for factor, sign in closing.items():
                z = PAIR_TO_LETTER[(INDEX_PAIRS[y][1], sign)]
                for x in PREDECESSORS[y]:
                    checked += 1
                    if contract(x + y) + factor != contract(x + y + z):
                        failures.append(f"C({x}{y}){factor} != C({x}{y}{z})")
        for x in LETTERS:
            checked += 1
            lhs_words = {contract(x) + "P", contract(x) + "Q"}
            rhs_words = {contract(x + z) for z in SUCCESSORS[x]}
            if lhs_words != rhs_words:
                failures.append(f"C({x})(P+Q) misses the Markov image of {x}")
    elif lemma == "mixed-coassoc":
        for x in LETTERS:
            checked += 1
            base = dm.apply(x)
            if coalgebra.apply_at(dc, base, 2) != coalgebra.apply_at(dm, base, 2):
                failures.append(f"mixed coassociativity fails on {x}")
    else:  # corollary-equality
        seed = FormalSum.basis(LETTERS)
        left = right = seed
        for n in range(1, depth + 1):
            left = coalgebra.iterate_rightmost(dm, left, 1)
            right = coalgebra.iterate_rightmost(dc, right, 1)
            checked += 1
            if left != right:
                failures.append(f"iterates differ at depth {n}")
                break
    return LemmaReport(lemma, not failures, checked, tuple(failures))
