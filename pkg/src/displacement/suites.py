"""Named verification suites and the scenario check registry.

A check is a named, parameterized computation that returns a verdict
("pass", "bounded-pass", "fail", "some", "none" or "not-applicable")
plus human-readable detail lines.  Suites are predefined scenarios: a
list of checks with expected verdicts.  A suite run succeeds when every
check's verdict matches its expectation, so expected-fail refutations
count as success.
"""

from __future__ import annotations

import random
import zlib
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import checkers, hnn, matrices, plmaps, wreath
from .core import (
    BudgetExceededError,
    FgSubgroup,
    commutator,
    element_order,
    enumerate_subgroup,
)
from .perms import symmetric_group
from .serialize import to_jsonable

DEFAULT_BOUNDS = {"p_max": 10, "budget": 10**7, "radius": 3}


def _result(verdict: str, detail: List[str], counterexample=None) -> dict:
    out = {"verdict": verdict, "detail": detail}
    if counterexample is not None:
        out["counterexample"] = to_jsonable(counterexample)
    return out


def _from_report(rep) -> dict:
    return _result(rep.verdict, list(rep.checks), rep.counterexample)


def _merge(reports) -> dict:
    """Combine sub-reports: fail dominates, then bounded-pass."""
    detail: List[str] = []
    verdict = "pass"
    for rep in reports:
        detail.extend(rep["detail"] if isinstance(rep, dict) else rep.checks)
        v = rep["verdict"] if isinstance(rep, dict) else rep.verdict
        if v == "fail":
            cx = rep.get("counterexample") if isinstance(rep, dict) else rep.counterexample
            return _result("fail", detail, cx)
        if v == "bounded-pass":
            verdict = "bounded-pass"
    return _result(verdict, detail)


def _tower(params) -> wreath.TowerSpec:
    base = symmetric_group(params.get("degree", 3))
    return wreath.TowerSpec(base, ("prefix", tuple(params["orders"])))


# -- check implementations ----------------------------------------------


def run_wreath_zn_witness(params, bounds, rng) -> dict:
    tower = _tower(params)
    cert, rep = wreath.zn_witness(tower, tower.base, params["level"], params["p"])
    reverify = checkers.verify_certificate(cert)
    out = _merge([rep, reverify])
    out["detail"].append("certificate re-verified by the generic checker")
    return out


def run_wreath_brute_search(params, bounds, rng) -> dict:
    tower = _tower(params)
    level = params["level"]
    H = wreath.embed_subgroup(tower.base, tower, level)
    size = wreath.level_order(tower, level, bounds["budget"])
    t = wreath.brute_search_zp_witness(tower, level, H, params["p"], bounds["budget"])
    if t is None:
        return _result("none", [f"exhausted all {size} elements, no witness"])
    return _result("some", [f"witness found among {size} elements"], t)


def run_wreath_torsion_exhaustive(params, bounds, rng) -> dict:
    tower = _tower(params)
    level = params["level"]
    H = wreath.embed_subgroup(tower.base, tower, level)
    count = 0
    for t in wreath.enumerate_level(tower, level, bounds["budget"]):
        order = element_order(t)
        rep = checkers.check_czc(H, t, order)
        if rep.ok:
            return _result(
                "fail", [f"t of order {order} passes the Z-conjugate conditions"], t
            )
        count += 1
    return _result(
        "pass",
        [f"all {count} elements fail the Z-conjugate conditions at p <= ord(t)"],
    )


def run_sym_zn_witness(params, bounds, rng) -> dict:
    H = symmetric_group(params.get("degree", 3))
    cert, rep = wreath.sym_zn_witness(H, params["n"])
    reverify = checkers.verify_certificate(cert)
    return _merge([rep, reverify])


def _random_unitriangular(rng, n: int, upper: bool) -> List[List[Fraction]]:
    m = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if (j > i) if upper else (j < i):
                m[i][j] = Fraction(rng.randint(-3, 3))
    return m


def _random_invertible(rng, n: int) -> matrices.RationalMatrix:
    """L*D*U with unit triangles and invertible diagonal: always in GL_n."""
    low = _random_unitriangular(rng, n, upper=False)
    up = _random_unitriangular(rng, n, upper=True)
    diag = [Fraction(rng.choice([1, -1, 2, -2, 3])) for _ in range(n)]
    prod = [
        [sum(low[i][k] * diag[k] * up[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    return matrices.RationalMatrix(prod)


def _mul2(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)
    ]


def run_gl_block_identity(params, bounds, rng) -> dict:
    """Oracle for 2x2-block conjugation inside GL_4: assemble
    [[XAX^-1, XB], [CX^-1, D]] blockwise and compare exactly."""
    samples = params.get("samples", 200)
    for i in range(samples):
        X = _random_invertible(rng, 2)
        g = _random_invertible(rng, 4)
        got = matrices.block_conjugate(X, g)
        gp = g.padded(4)
        Xe = [list(r) for r in X.padded(2)]
        Xi = [list(r) for r in X.inverse().padded(2)]
        A = [[gp[i][j] for j in range(2)] for i in range(2)]
        B = [[gp[i][j + 2] for j in range(2)] for i in range(2)]
        C = [[gp[i + 2][j] for j in range(2)] for i in range(2)]
        D = [[gp[i + 2][j + 2] for j in range(2)] for i in range(2)]
        XAXi = _mul2(_mul2(Xe, A), Xi)
        XB = _mul2(Xe, B)
        CXi = _mul2(C, Xi)
        expected = matrices.RationalMatrix(
            [XAXi[0] + XB[0], XAXi[1] + XB[1], CXi[0] + D[0], CXi[1] + D[1]]
        )
        if got != expected:
            return _result("fail", [f"mismatch at sample {i}"], (X, g))
    return _result("pass", [f"{samples} random block conjugations match the oracle"])


def run_gl_centralizer(params, bounds, rng) -> dict:
    tests = [
        matrices.RationalMatrix([[-1, 0], [0, 1]]),
        matrices.RationalMatrix([[1, 0], [0, -1]]),
        matrices.RationalMatrix([[1, 0], [1, 1]]),
    ]
    space = matrices.centralizer_space(tests, ambient=4)
    detail = [f"centralizer dimension {space.dim} in M_4"]
    if space.dim != 5:
        return _result("fail", detail + ["expected dimension 5"])
    for M in matrices.matrices_of(space, 4):
        scalar_block = (
            M[0][0] == M[1][1]
            and M[0][1] == 0
            and M[1][0] == 0
        )
        off_blocks_zero = all(
            M[i][j] == 0 and M[j][i] == 0 for i in range(2) for j in range(2, 4)
        )
        if not (scalar_block and off_blocks_zero):
            return _result("fail", detail + ["basis element not of shape aI_2 (+) D"])
    detail.append("every basis element has the aI_2 (+) D block shape")
    full = matrices.centralizer_space(matrices.gl2z_generators().generators, ambient=2)
    detail.append(f"full generator set centralizer has dimension {full.dim} (scalars)")
    if full.dim != 1:
        return _result("fail", detail)
    return _result("pass", detail)


def run_gl_z2(params, bounds, rng) -> dict:
    H = matrices.gl2z_generators()
    cert, rep = matrices.gl_block_swap_witness(H)
    reverify = checkers.verify_certificate(cert)
    if not (rep.ok and reverify.ok):
        return _merge([rep, reverify])
    t = cert.payload["t"]
    czc = checkers.check_czc(H, t, 2)
    if czc.ok:
        return _result("fail", ["Z-conjugate conditions unexpectedly hold at p = 2"])
    detail = list(rep.checks)
    detail.append("Z/2 certificate re-verified by the generic checker")
    detail.append("Z-conjugate conditions fail at p = 2 (t^2 = 1), as they must")
    return _result("pass", detail)


def _random_pl_word(rng, gens, max_len: int):
    pool = list(gens) + [g.inverse() for g in gens]
    w = plmaps.PLContext().identity
    for _ in range(rng.randint(1, max_len)):
        w = w * rng.choice(pool)
    return w


def run_pl_tower(params, bounds, rng) -> dict:
    depth = params.get("depth", 3)
    samples = params.get("samples", 200)
    disp_p = params.get("displace_p_max", 50)
    czc_p = params.get("czc_p_max", 10)
    gens, dissipators, intervals = plmaps.tower_gamma(depth)
    detail = [f"tower of depth {depth} built with {len(gens)} generators"]
    reports = []
    for i in range(1, depth):
        t = dissipators[i - 1]
        I = plmaps.IntervalSet([intervals[i - 1]])
        reports.append(plmaps.displaces(t, I, disp_p))
        level = FgSubgroup(f"Gamma_{i}", gens[: i + 1])
        reports.append(checkers.check_czc(level, t, czc_p))
    merged = _merge(reports)
    if merged["verdict"] == "fail":
        return merged
    detail.extend(merged["detail"])
    level_sets = [plmaps.IntervalSet([iv]) for iv in intervals]
    for k in range(samples):
        g = _random_pl_word(rng, gens, 8)
        sup = plmaps.pl_support(g)
        for (l0, r0), (l1, r1) in zip(sup.intervals, sup.intervals[1:]):
            if r0 > l1:
                return _result("fail", [f"support not disjoint for sample {k}"], g)
        for I in level_sets[:-1]:
            gi = I.image(g)
            if not (gi.is_disjoint_from(I) or gi == I):
                return _result(
                    "fail", [f"conjugacy dichotomy fails at sample {k}"], (g, I)
                )
    detail.append(
        f"{samples} sampled words: supports are finite disjoint interval sets"
    )
    detail.append(
        f"{samples} sampled words: g(I_i) is disjoint from I_i or equal to it"
    )
    return _result(merged["verdict"], detail)


def run_pl_fixed_point(params, bounds, rng) -> dict:
    samples = params.get("samples", 50)
    h = plmaps.unique_fixed_point_element()
    half = Fraction(1, 2)
    detail = []
    if h(half) != half:
        return _result("fail", ["h does not fix 1/2"])
    sup = plmaps.pl_support(h)
    if sup != plmaps.IntervalSet([(0, half), (half, 1)]):
        return _result("fail", [f"support is {sup!r}, not (0,1/2) u (1/2,1)"])
    detail.append("h fixes 1/2 and moves every other point of (0, 1)")
    if not plmaps.in_standard_f_copy(h):
        return _result("fail", ["h is not in the standard copy on (0, 1)"])
    detail.append("h lies in the standard copy on (0, 1)")
    x0, x1 = plmaps.thompson_generators()
    for p in range(1, samples + 1):
        u = h if p % 2 else h.inverse()
        power = u
        for _ in range(p // 3):
            power = power * u
        if power(half) != half:
            return _result("fail", [f"a power of h moves 1/2"], power)
    detail.append(f"{samples} centralizing elements (powers of h) fix 1/2 exactly")
    moved = 0
    for k in range(samples):
        u = _random_pl_word(rng, (x0, x1), 6)
        if u(half) != half:
            moved += 1
            if commutator(u, h).is_identity():
                return _result(
                    "fail", [f"element moving 1/2 centralizes h (sample {k})"], u
                )
    detail.append(
        f"{moved} sampled elements moving 1/2 all fail to centralize h"
    )
    return _result("pass", detail)


def _random_britton_word(rng, pres, max_letters: int):
    m = rng.randint(0, max_letters)
    letters = []
    for _ in range(m):
        x = rng.choice(pres.letters)
        sign = rng.choice((1, -1))
        letters.append((x, sign, rng.randrange(pres.size)))
    return (rng.randrange(pres.size), tuple(letters))


def run_britton_engine(params, bounds, rng) -> dict:
    base = symmetric_group(params.get("degree", 3))
    samples = params.get("samples", 500)
    detail = []
    b_pres = hnn.binate_presentation(base)
    m_pres = hnn.mitosis_presentation(base)
    e = base.context.identity
    # defining relations, exhaustively over the base group
    for g in b_pres.group_elems:
        lhs = (
            b_pres.stable_letter("d")
            * b_pres.base_element(e, g)
            * b_pres.stable_letter("d").inverse()
        )
        if lhs != b_pres.base_element(g, g):
            return _result("fail", ["d (1,g) d^-1 != (g,g)"], g)
        back = (
            b_pres.stable_letter("d").inverse()
            * b_pres.base_element(g, g)
            * b_pres.stable_letter("d")
        )
        if back != b_pres.base_element(e, g):
            return _result("fail", ["d^-1 (g,g) d != (1,g)"], g)
        s_lhs = (
            m_pres.stable_letter("s")
            * m_pres.base_element(g, e)
            * m_pres.stable_letter("s").inverse()
        )
        if s_lhs != m_pres.base_element(e, g):
            return _result("fail", ["s (g,1) s^-1 != (1,g)"], g)
    detail.append(
        f"defining rewrites verified for all {len(b_pres.group_elems)} base elements"
    )
    # Britton's lemma: reduced one-letter words are never the identity
    count = 0
    for pres in (b_pres, m_pres):
        for word in hnn.iter_reduced_words(pres, 1):
            if hnn.stable_letter_count(word) != 1:
                continue
            if hnn.is_identity(pres, word):
                return _result("fail", ["reduced 1-letter word is trivial"], word)
            count += 1
    detail.append(f"all {count} reduced one-stable-letter words are nontrivial")
    # confluence under randomized pinch orders
    for pres in (b_pres, m_pres):
        for k in range(samples):
            w = _random_britton_word(rng, pres, 6)
            first = hnn.britton_reduce(pres, w)
            second = hnn.britton_reduce(pres, w, rng=rng)
            if hnn.normal_form(pres, first) != hnn.normal_form(pres, second):
                return _result("fail", [f"confluence breaks at sample {k}"], w)
            quot = hnn.word_mul(pres, first, hnn.word_inv(pres, second))
            if not hnn.is_identity(pres, quot):
                return _result("fail", [f"reductions differ in the group ({k})"], w)
    detail.append(
        f"{samples} randomized-order reductions per presentation agree with the"
        " deterministic order"
    )
    return _result("pass", detail)


def run_bass_serre(params, bounds, rng) -> dict:
    base = symmetric_group(params.get("degree", 3))
    radius = params.get("radius", bounds["radius"])
    pres = hnn.binate_presentation(base)
    e = base.context.identity
    nontrivial = [g for g in pres.group_elems if not g.is_identity()]
    ball = hnn.tree_ball(pres, radius)
    detail = [f"tree ball of radius {radius} has {len(ball)} vertices"]
    for g in nontrivial:
        word = (pres.encode(g, e), ())
        fixed = [v for v in ball if hnn.fixes_vertex(pres, word, v)]
        if len(fixed) != 1 or fixed[0].label != hnn.BASE_VERTEX_LABEL:
            return _result(
                "fail",
                [f"(g,1) fixes {len(fixed)} vertices within radius {radius}"],
                g,
            )
    detail.append(
        f"all {len(nontrivial)} nontrivial (g,1) fix exactly the base vertex"
    )
    ball1 = hnn.tree_ball(pres, 1)
    for g in nontrivial:
        word = (pres.encode(g, g), ())
        fixed = [v for v in ball1 if hnn.fixes_vertex(pres, word, v)]
        if len(fixed) < 2:
            return _result("fail", ["diagonal element fixes fewer than 2 vertices"], g)
    detail.append("every nontrivial (g,g) fixes at least 2 vertices at radius 1")
    # stabilizer structure at radius 1, exhaustively over the base group
    for v in ball1:
        if v.distance == 0:
            continue
        r = v.word[0]
        sign = v.word[1][0][1]
        member = pres._in_B["d"] if sign == 1 else pres._in_A["d"]
        for code in range(pres.size):
            expected = member[pres.mul(pres.mul(pres.inv(r), code), r)]
            got = hnn.fixes_vertex(pres, (code, ()), v)
            if expected != got:
                return _result(
                    "fail", ["stabilizer mismatch at a radius-1 vertex"], (v.label, code)
                )
    detail.append(
        "radius-1 stabilizers are exactly the expected conjugates of the"
        " associated subgroups"
    )
    return _result("pass", detail)


def run_cc_search_b1(params, bounds, rng) -> dict:
    base = symmetric_group(params.get("degree", 3))
    max_letters = params["max_letters"]
    t = hnn.cc_witness_search_b1(base, max_letters, bounds["budget"])
    pres_size = len(enumerate_subgroup(list(base.generators))) ** 2
    space = pres_size * (2 * pres_size) ** max_letters
    if t is None:
        return _result(
            "none", [f"no commuting-conjugates witness among {space} bounded words"]
        )
    return _result("some", [f"witness found in the {space}-word space"], t)


def run_mitosis(params, bounds, rng) -> dict:
    base = symmetric_group(params.get("degree", 3))
    rep = hnn.mitosis_check(base)
    if not rep.ok:
        return _from_report(rep)
    pres = hnn.mitosis_presentation(base)
    s = pres.stable_letter("s")
    d = pres.stable_letter("d")
    ds = d * s
    minus = pres.minus_subgroup()
    mit = checkers.check_mitotic(minus, s, ds)
    # binate data derived from the mitosis pair: f = conj(t1, .) and the
    # conjugator t2 * t1^-1, so that t f(h) t^-1 = t2 h t2^-1 = h * f(h)
    f = checkers.GeneratorMap.from_callable(minus, lambda h: s * h * s.inverse())
    binate = checkers.check_binate(minus, f, d)
    out = _merge([rep, mit, binate])
    if out["verdict"] == "pass":
        out["detail"].append(
            "generic mitotic and binate checkers accept the instantiated data"
        )
    return out


def run_hall_sym(params, bounds, rng) -> dict:
    H = symmetric_group(params.get("degree", 3))
    reports = []
    for n in params.get("ns", [2, 3, 4]):
        cert, rep = wreath.sym_zn_witness(H, n)
        reports.append(rep)
        reports.append(checkers.verify_certificate(cert))
    out = _merge(reports)
    if out["verdict"] == "pass":
        out["detail"].append("certificates re-verified by the generic checker")
    return out


CHECK_TYPES: Dict[str, Callable] = {
    "wreath-zn-witness": run_wreath_zn_witness,
    "wreath-brute-search": run_wreath_brute_search,
    "wreath-torsion-exhaustive": run_wreath_torsion_exhaustive,
    "sym-zn-witness": run_sym_zn_witness,
    "gl-block-identity": run_gl_block_identity,
    "gl-centralizer": run_gl_centralizer,
    "gl-z2": run_gl_z2,
    "pl-tower": run_pl_tower,
    "pl-fixed-point": run_pl_fixed_point,
    "britton-engine": run_britton_engine,
    "bass-serre": run_bass_serre,
    "cc-search-b1": run_cc_search_b1,
    "mitosis": run_mitosis,
    "hall-sym": run_hall_sym,
}

DEFAULT_EXPECT: Dict[str, str] = {
    "wreath-zn-witness": "pass",
    "wreath-brute-search": "none",
    "wreath-torsion-exhaustive": "pass",
    "sym-zn-witness": "pass",
    "gl-block-identity": "pass",
    "gl-centralizer": "pass",
    "gl-z2": "pass",
    "pl-tower": "bounded-pass",
    "pl-fixed-point": "pass",
    "britton-engine": "pass",
    "bass-serre": "pass",
    "cc-search-b1": "none",
    "mitosis": "pass",
    "hall-sym": "pass",
}


def _suite(name: str, summary: str, checks: List[dict]) -> dict:
    return {"name": name, "summary": summary, "checks": checks}


SUITES: Dict[str, dict] = {}


def _register(name: str, summary: str, checks: List[dict]) -> None:
    SUITES[name] = _suite(name, summary, checks)


_register(
    "wreath-cznc",
    "constructive Z/2 witnesses in wreath towers over Sym(3)",
    [
        {
            "id": f"level-{i}",
            "type": "wreath-zn-witness",
            "params": {"degree": 3, "orders": [2, 2, 2, 2], "level": i, "p": 2},
        }
        for i in range(1, 5)
    ]
    + [
        {
            "id": "order-4-level-1",
            "type": "wreath-zn-witness",
            "params": {"degree": 3, "orders": [4], "level": 1, "p": 2},
        }
    ],
)

_register(
    "wreath-converse",
    "exhaustive search: Sym(3) wr Z/3 has no Z/2 witness for Sym(3)",
    [
        {
            "id": "no-z2-witness",
            "type": "wreath-brute-search",
            "params": {"degree": 3, "orders": [3], "level": 1, "p": 2},
            "expect": "none",
        },
        {
            "id": "z2-witness-exists",
            "type": "wreath-brute-search",
            "params": {"degree": 3, "orders": [2], "level": 1, "p": 2},
            "expect": "some",
        },
    ],
)

_register(
    "torsion-obstruction",
    "every element of Sym(3) wr Z/3 fails the Z-conjugate conditions",
    [
        {
            "id": "exhaustive-648",
            "type": "wreath-torsion-exhaustive",
            "params": {"degree": 3, "orders": [3], "level": 1},
        }
    ],
)

_register(
    "gl-block",
    "block conjugation formula against the full-matrix oracle",
    [
        {
            "id": "random-200",
            "type": "gl-block-identity",
            "params": {"samples": 200},
        }
    ],
)

_register(
    "gl-centralizer",
    "centralizer of the three test matrices in M_4 is aI_2 (+) D",
    [{"id": "dimension-and-shape", "type": "gl-centralizer", "params": {}}],
)

_register(
    "gl-z2",
    "block swap is a Z/2 witness for GL_2(Z) but no Z witness",
    [{"id": "swap-witness", "type": "gl-z2", "params": {}}],
)

_register(
    "pl-tower",
    "depth-3 PL tower: displacement, bounded Z-conjugates, sampled lemmas",
    [
        {
            "id": "depth-3",
            "type": "pl-tower",
            "params": {
                "depth": 3,
                "displace_p_max": 50,
                "czc_p_max": 10,
                "samples": 200,
            },
            "expect": "bounded-pass",
        }
    ],
)

_register(
    "pl-fixed-point",
    "element with unique interior fixed point 1/2; centralizers fix it",
    [{"id": "fixed-point-kernel", "type": "pl-fixed-point", "params": {"samples": 50}}],
)

_register(
    "britton",
    "rewriting engine: defining relations, Britton's lemma, confluence",
    [
        {
            "id": "engine",
            "type": "britton-engine",
            "params": {"degree": 3, "samples": 500},
        }
    ],
)

_register(
    "bass-serre",
    "fixed vertices in the tree: unique for (g,1), edge for (g,g)",
    [{"id": "fixed-vertices", "type": "bass-serre", "params": {"degree": 3, "radius": 3}}],
)

_register(
    "binate-tower-no-cc",
    "bounded refutation: no 2-letter commuting-conjugates witness over Sym(3)",
    [
        {
            "id": "search",
            "type": "cc-search-b1",
            "params": {"degree": 3, "max_letters": 2},
            "expect": "none",
        }
    ],
)

_register(
    "mitosis",
    "mitosis data of m(Sym(3)) via normal forms",
    [{"id": "s-and-ds", "type": "mitosis", "params": {"degree": 3}}],
)

_register(
    "hall-sym",
    "Z/n witnesses for Sym(3) inside larger symmetric groups",
    [{"id": "n-2-3-4", "type": "hall-sym", "params": {"degree": 3, "ns": [2, 3, 4]}}],
)

SUITES["all"] = _suite(
    "all",
    "every named suite, in order",
    [
        dict(check, id=f"{name}/{check['id']}")
        for name, suite in SUITES.items()
        for check in suite["checks"]
    ],
)


def list_suites() -> str:
    lines = []
    for name in SUITES:
        lines.append(f"{name:20s} {SUITES[name]['summary']}")
    return "\n".join(lines) + "\n"


def _run_one(check: dict, bounds: dict, seed: int) -> dict:
    fn = CHECK_TYPES[check["type"]]
    params = check.get("params", {})
    expect = check.get("expect", DEFAULT_EXPECT[check["type"]])
    rng = random.Random((seed << 32) ^ zlib.crc32(check["id"].encode()))
    result = fn(params, bounds, rng)
    return {
        "id": check["id"],
        "type": check["type"],
        "verdict": result["verdict"],
        "expected": expect,
        "ok": result["verdict"] == expect,
        "detail": result["detail"],
        "counterexample": result.get("counterexample"),
    }


def run_checks(checks: List[dict], bounds: dict, seed: int, jobs: int = 1) -> dict:
    """Run a list of scenario checks; the report lists them in input
    order regardless of completion order."""
    merged_bounds = dict(DEFAULT_BOUNDS)
    merged_bounds.update(bounds or {})
    for check in checks:
        if check["type"] not in CHECK_TYPES:
            raise ValueError(f"unknown check type {check['type']!r}")
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(lambda c: _run_one(c, merged_bounds, seed), checks)
            )
    else:
        results = [_run_one(c, merged_bounds, seed) for c in checks]
    ok = sum(1 for r in results if r["ok"])
    return {
        "seed": seed,
        "bounds": merged_bounds,
        "checks": results,
        "totals": {"checks": len(results), "ok": ok, "violations": len(results) - ok},
    }


def run_suite(
    name: str, bounds: Optional[dict] = None, seed: int = 0, jobs: int = 1
) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; try one of: {', '.join(SUITES)}")
    report = run_checks(SUITES[name]["checks"], bounds or {}, seed, jobs)
    report["suite"] = name
    return report
