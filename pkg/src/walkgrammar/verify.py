"""Self-contained verification suite behind `verify all` and `orbits verify`.

Each check recomputes its expected side from scratch (hard-coded tables
from the source text, or a brute-force enumeration) rather than trusting
the module under test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import coalgebra, graphs, language, orbits, quantize, walk


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


# Non-null walk polynomials for t <= 4.
XI_TABLE = {
    0: {0: {""}},
    1: {-1: {"P"}, 1: {"Q"}},
    2: {-2: {"PP"}, 0: {"PQ", "QP"}, 2: {"QQ"}},
    3: {
        -3: {"PPP"},
        -1: {"QPP", "PQP", "PPQ"},
        1: {"PQQ", "QPQ", "QQP"},
        3: {"QQQ"},
    },
    4: {
        -4: {"PPPP"},
        -2: {"QPPP", "PQPP", "PPQP", "PPPQ"},
        0: {"PPQQ", "PQPQ", "PQQP", "QQPP", "QPQP", "QPPQ"},
        2: {"PQQQ", "QPQQ", "QQPQ", "QQQP"},
        4: {"QQQQ"},
    },
}


def closed_walks(t: int) -> frozenset[orbits.Pattern]:
    """Brute-force enumeration of all closed length-t walks, canonicalized."""
    out: set[orbits.Pattern] = set()

    def extend(path: str) -> None:
        if len(path) == t:
            if path[0] in language.SUCCESSORS[path[-1]]:
                out.add(orbits.canonicalize(path))
            return
        for nxt in language.SUCCESSORS[path[-1]]:
            extend(path + nxt)

    for letter in language.LETTERS:
        extend(letter)
    return frozenset(out)


def coalgebra_checks(max_n: int = 5) -> list[CheckResult]:
    results = []
    delta_e = coalgebra.coproduct_e()
    eps_e = coalgebra.counit_e()
    results.append(
        CheckResult(
            "four-letter coproduct is coassociative",
            bool(coalgebra.verify_axiom("coassociativity", delta_e)),
        )
    )
    results.append(
        CheckResult(
            "four-letter counit laws",
            bool(coalgebra.verify_axiom("right-counit", delta_e, counit=eps_e))
            and bool(
                coalgebra.verify_axiom("left-counit", delta_e, delta_e, left_counit=eps_e)
            ),
        )
    )
    dm, _ = coalgebra.markov_pair_e()
    report = coalgebra.verify_axiom("coassociativity", dm)
    results.append(
        CheckResult(
            "markov coproduct of the extension graph breaks coassociativity",
            not report.ok,
            f"witness {report.witness}",
        )
    )
    for name, (delta, delta_tilde) in sorted(coalgebra.markov_fixtures(max_n).items()):
        results.append(
            CheckResult(
                f"breaking equation: {name}",
                bool(coalgebra.verify_axiom("breaking-equation", delta, delta_tilde)),
            )
        )
    for n in range(2, max_n + 1):
        delta, delta_tilde = coalgebra.de_bruijn_markov_pair(n)
        ok = all(
            bool(coalgebra.verify_axiom(axiom, delta, delta_tilde))
            for axiom in ("codialgebra-1", "codialgebra-2", "codialgebra-3", "breaking-equation")
        )
        eps = coalgebra.de_bruijn_counit(n)
        ok = ok and bool(coalgebra.verify_axiom("right-counit", delta, counit=eps))
        ok = ok and bool(
            coalgebra.verify_axiom("left-counit", delta, delta_tilde, left_counit=eps)
        )
        results.append(CheckResult(f"co-dialgebra axioms: de-bruijn-{n}", ok))
        ext = coalgebra.extension_coproduct(n)
        ok = bool(coalgebra.verify_axiom("coassociativity", ext)) and bool(
            coalgebra.verify_axiom("right-counit", ext, counit=coalgebra.extension_counit(n))
        )
        results.append(CheckResult(f"extension coproduct coassociative with counit: n={n}", ok))
    return results


def lemma_checks(depth: int) -> list[CheckResult]:
    return [
        CheckResult(f"lemma: {lemma}", bool(language.check_lemma(lemma, depth=depth)))
        for lemma in language.LEMMAS
    ]


def walk_checks(max_t: int) -> list[CheckResult]:
    results = []
    state = walk.initial_symbolic()
    ok = True
    for t in range(5):
        if {k: set(v) for k, v in state.items() if v} != XI_TABLE[t]:
            ok = False
        if t < 4:
            state = walk.step_symbolic(state)
    results.append(CheckResult("symbolic walk reproduces the t<=4 table", ok))

    state = walk.initial_symbolic()
    ok = True
    for _ in range(min(max_t, walk.SYMBOLIC_MAX_DEFAULT)):
        state = walk.step_symbolic(state)
        try:
            state.validate()
        except AssertionError as exc:
            ok = False
            results.append(CheckResult("cell-size and word-balance laws", False, str(exc)))
            break
    if ok:
        results.append(CheckResult("cell-size and word-balance laws", True))

    coin = quantize.hadamard_coin()
    sym = walk.run_symbolic(min(max_t, 8))
    lhs = walk.evaluate(walk.step_symbolic(sym), coin)
    rhs = walk.step_numeric(walk.evaluate(sym, coin), coin)
    results.append(
        CheckResult(
            "evaluate commutes with stepping",
            bool(np.max(np.abs(lhs.amps - rhs.amps)) < 1e-12),
        )
    )

    defect = walk.unitarity_defect(walk.run_numeric(coin, 200))
    results.append(
        CheckResult("norm preservation at t=200", defect < walk.UNITARITY_TOL, f"defect {defect:.2e}")
    )

    report = walk.commutator_check(coin)
    results.append(
        CheckResult(
            "dispersion commutator is right concatenation by QP-PQ",
            bool(report),
            f"max deviation {report.max_deviation:.2e}",
        )
    )

    rng = np.random.default_rng(7)
    bits = [int(b) for b in rng.integers(0, 2, size=24)]
    results.append(CheckResult("shift conjugacy bound", bool(walk.shift_conjugacy_check(bits))))
    return results


def language_checks(max_t: int) -> list[CheckResult]:
    results = []
    ok = all(
        language.generate(t, "markov") == language.generate(t, "coassoc")
        for t in range(2, max_t + 1)
    )
    results.append(CheckResult("grammar equivalence", ok))
    ok = True
    state = walk.run_symbolic(min(max_t, walk.SYMBOLIC_MAX_DEFAULT))
    for k in state.vertices():
        words = language.words_at_vertex(state.time, k)
        if {language.contract(w) for w in words} != set(state.cell(k)):
            ok = False
    results.append(CheckResult("letter words match walk cells under contraction", ok))
    return results


def orbit_checks(max_t: int) -> list[CheckResult]:
    results = []
    ok = all(orbits.orbits_at_time(t) == closed_walks(t) for t in range(2, max_t + 1))
    results.append(CheckResult("growth reaches exactly the closed walks", ok))

    ok = True
    for t in range(3, max_t + 1):
        pats = orbits.orbits_at_time(t)
        for k in range(-t, t + 1, 2):
            words = language.words_at_vertex(t, k)
            read_union = set()
            for p in pats:
                if orbits.orbit_index(p) == k:
                    read_union |= orbits.read(p)
            if read_union != words:
                ok = False
    results.append(CheckResult("orbit readings cover the words at every vertex", ok))

    ok = all(
        w in orbits.read(orbits.complete(w))
        for t in range(2, max_t + 1)
        for w in language.generate(t)
    )
    results.append(CheckResult("completion/reading duality", ok))

    ok = True
    for t in range(2, max_t + 1):
        counts: dict[int, int] = {}
        for p in orbits.orbits_at_time(t):
            counts[orbits.orbit_index(p)] = counts.get(orbits.orbit_index(p), 0) + 1
        for k, count in counts.items():
            if count < orbits.orbit_count_lower_bound(t, k):
                ok = False
    results.append(CheckResult("orbit counting bound", ok))

    fundamentals = orbits.fundamental_orbits()
    expected = {orbits.canonicalize(s) for s in ("a", "d", "bc", "abc", "bdc", "abdc")}
    results.append(CheckResult("six fundamental orbits", fundamentals == expected))

    ok = True
    for t in range(2, min(max_t, 12) + 1):
        for p in orbits.orbits_at_time(t):
            dec = orbits.decompose(p)
            pieces = dec.fundamentals()
            if not set(pieces) <= fundamentals:
                ok = False
            from collections import Counter

            if sum((Counter(q.letters) for q in pieces), Counter()) != Counter(p.letters):
                ok = False
            if dec.reglue() != p:
                ok = False
    results.append(CheckResult("decomposition into fundamentals with exact regluing", ok))
    return results


def quantize_checks(seed: int = 11, samples: int = 40) -> list[CheckResult]:
    results = []
    rng = np.random.default_rng(seed)
    worst = 0.0
    ok = True
    for i in range(samples):
        u = quantize.random_unitary(2 + i % 4, rng)
        report = quantize.verify_channel(quantize.row_split(u))
        worst = max(worst, report.max_deviation)
        ok = ok and report.ok
    results.append(
        CheckResult("row splits are quantum channels", ok, f"max deviation {worst:.2e}")
    )
    report = quantize.verify_pq_relations(quantize.hadamard())
    results.append(CheckResult("P/Q entry relations (Hadamard)", bool(report)))
    _, _, lam = quantize.jones_generators(quantize.hadamard())
    results.append(
        CheckResult("Jones parameter of the Hadamard coin is -1", bool(abs(lam + 1) < 1e-12))
    )
    b2 = graphs.bernoulli_matrix(2)
    results.append(
        CheckResult(
            "Hadamard witnesses the unistochasticity of the uniform matrix",
            graphs.is_unistochastic(b2, quantize.hadamard()),
        )
    )
    results.append(
        CheckResult(
            "row-product relations on uniform matrices",
            all(bool(graphs.verify_x_relations(graphs.bernoulli_matrix(n))) for n in range(2, 7)),
        )
    )
    return results


def run_all(max_t: int = 8) -> list[CheckResult]:
    if max_t < 3:
        raise ValueError("need max_t >= 3")
    results = []
    results += coalgebra_checks()
    results += lemma_checks(depth=max(1, max_t - 2))
    results += walk_checks(max_t)
    results += language_checks(max_t)
    results += orbit_checks(max_t)
    results += quantize_checks()
    return results
