"""Command-line entry point: every module as a subcommand, text in and out.

One result per line, with a machine-parsable key=value trailer. Exit status:
0 when the requested check passes or the object is produced, 1 when a check
fails, 2 for usage or malformed input, 3 for unexpected internal errors.
CHAINGROUP_BUDGET (an integer) caps enumeration sizes for the permutation
and graph searches.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import braids, finite, graphs, homology, homs, oracle, riemann_hurwitz as rh
from .braids import BraidWord


def _budget(default: int) -> int:
    raw = os.environ.get("CHAINGROUP_BUDGET")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"CHAINGROUP_BUDGET must be an integer, got {raw!r}")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _word(n: int, text: str) -> BraidWord:
    return braids.parse_letters(n, (int(t) for t in text.split()))


# ---------------------------------------------------------------- braid ----


def _cmd_braid(args) -> int:
    if args.op == "garside":
        print(braids.format_braid(braids.garside(args.n)))
        print(f"check=half-twist-word n={args.n} length={args.n * (args.n - 1) // 2}")
        return 0
    if args.op == "delta":
        w = braids.flip_delta(args.n)
        print(braids.format_braid(w))
        print(f"check=index-shift-word n={args.n} exponent={braids.exponent(w)}")
        return 0
    if args.op == "gen":
        w = braids.generator(args.n, args.k)
        print(braids.format_braid(w))
        print(f"check=generator-normalization n={args.n} k={args.k}")
        return 0
    if args.op == "exp":
        w = _word(args.n, args.word)
        print(braids.exponent(w))
        print(f"check=sign-sum n={args.n}")
        return 0
    if args.op == "eq":
        u, v = _word(args.n, args.words[0]), _word(args.n, args.words[1])
        equal = oracle.are_equal(u, v)
        print("equal" if equal else "not-equal")
        print(f"check=word-equality n={args.n} result={str(equal).lower()}")
        return 0 if equal else 1
    if args.op == "central":
        w = _word(args.n, args.word)
        central = oracle.is_central(w)
        print("central" if central else "not-central")
        print(f"check=centrality n={args.n} result={str(central).lower()}")
        return 0 if central else 1
    raise AssertionError(args.op)


# ------------------------------------------------------------------ hom ----


def _print_hom(h: homs.BraidHom) -> None:
    print(homs.format_hom(h))


def _cmd_hom(args) -> int:
    if args.op == "verify":
        h = homs.parse_hom(_read_input(args.file))
        ok = oracle.verify_candidate_hom(h.n, {i + 1: w for i, w in enumerate(h.images)})
        print("homomorphism" if ok else "relation-failed")
        print(f"check=generator-relations n={h.n} m={h.m} result={str(ok).lower()}")
        return 0 if ok else 1
    if args.op == "theorem4":
        gamma = _word(args.n, args.gamma or "")
        h = homs.theorem4_endo(args.n, gamma, args.eps, args.k)
        _print_hom(h)
        print(f"check=conjugated-power-endomorphism n={args.n} eps={args.eps} k={args.k}")
        return 0
    if args.op == "cable":
        h = homs.cabling_b3(args.k)
        _print_hom(h)
        print(f"check=cable-half-twist k={args.k} target={3 * args.k}")
        return 0
    if args.op == "cyclic":
        h = homs.parse_hom(_read_input(args.file))
        homs.BraidHom.checked(h.n, h.m, h.images)
        cyc = homs.cyclic_test(h)
        print("cyclic" if cyc else "noncyclic")
        print(f"check=all-images-equal result={str(cyc).lower()}")
        return 0 if cyc else 1
    raise AssertionError(args.op)


# ------------------------------------------------------------- homology ----


def _parse_matrix_blocks(text: str) -> list:
    blocks = [b for b in text.split("\n\n") if b.strip()]
    return [homology.parse_matrix(b) for b in blocks]


def _parse_elements(text: str) -> list[homology.CentralExtElement]:
    out = []
    for block in (b for b in text.split("\n\n") if b.strip()):
        lines = [ln for ln in block.splitlines() if ln.strip()]
        twist: tuple[int, ...] = ()
        if lines and lines[-1].startswith("twist="):
            raw = lines.pop()[6:]
            twist = tuple(int(t) for t in raw.split(",") if t)
        mat = homology.parse_matrix("\n".join(lines))
        out.append(homology.CentralExtElement(mat, twist))
    return out


def _format_element(e: homology.CentralExtElement) -> str:
    twist = ",".join(map(str, e.twist))
    return homology.format_matrix(e.mat) + f"\ntwist={twist}"


def _cmd_homology(args) -> int:
    if args.op == "chain":
        lat = homology.standard_lattice(args.genus)
        chain = homology.build_chain(lat, args.k)
        print(homology.format_chain(chain))
        print(f"check=chain-intersection-pattern genus={args.genus} k={args.k}")
        return 0
    if args.op == "rep":
        lat = homology.standard_lattice(args.genus)
        chain = homology.build_chain(lat, args.k)
        ms = homology.monodromy_rep(lat, chain, args.eps)
        print("\n\n".join(homology.format_matrix(m) for m in ms))
        print(f"check=twist-relations genus={args.genus} k={args.k} eps={args.eps}")
        return 0
    if args.op == "square":
        lat = homology.standard_lattice(args.genus)
        chain = homology.build_chain(lat, args.k)
        sq = homology.chain_product_square(lat, chain)
        print(homology.format_matrix(sq))
        parity = "even" if args.k % 2 == 0 else "odd"
        print(f"check=chain-relation-square genus={args.genus} k={args.k} parity={parity}")
        return 0
    if args.op == "extract":
        ms = _parse_matrix_blocks(_read_input(args.file))
        if not ms or len(ms[0]) % 2 != 0:
            raise ValueError("need square matrices of even rank")
        lat = homology.standard_lattice(len(ms[0]) // 2)
        res = homology.extract_triple(lat, ms)
        if isinstance(res, homology.CyclicVerdict):
            print("cyclic")
            print("check=triple-recovery result=cyclic")
            return 0
        if isinstance(res, homology.NotRecognized):
            print("not-recognized")
            print("check=triple-recovery result=not-recognized")
            return 1
        print(homology.format_chain(list(res.chain)))
        print(f"eps={res.epsilon}")
        print(homology.format_matrix(res.direction))
        print("check=triple-recovery result=ok")
        return 0
    if args.op == "lift":
        elements = _parse_elements(_read_input(args.file))
        adjusted = homology.lift_adjust(elements)
        print("\n\n".join(_format_element(e) for e in adjusted))
        print(f"check=central-defect-correction count={len(adjusted)}")
        return 0
    raise AssertionError(args.op)


# ------------------------------------------------------------------- ln ----


def _cmd_ln(args) -> int:
    if args.op == "validate":
        p = finite.LnParams(args.r, args.M, args.m, args.d, args.s)
        ok = finite.validate_params(p)
        print("valid" if ok else "invalid")
        print(f"check=divisibility-constraints result={str(ok).lower()}")
        return 0 if ok else 1
    if args.op == "card":
        p = finite.LnParams(args.r, args.M, args.m, args.d, args.s)
        inv = finite.ln_group(p)
        print(inv.cardinality())
        factors = ",".join(map(str, inv.factors))
        print(f"check=quotient-cardinality factors={factors}")
        return 0
    if args.op == "snf":
        rows = [
            [int(t) for t in ln.split()]
            for ln in _read_input(args.file).splitlines()
            if ln.strip()
        ]
        inv = finite.smith_normal_form(rows)
        print(f"factors={','.join(map(str, inv.factors))}")
        print(f"free_rank={inv.free_rank}")
        print("check=invariant-factors")
        return 0
    raise AssertionError(args.op)


# ----------------------------------------------------------------- perm ----


def _format_perm_images(rep: finite.PermRep) -> str:
    parts = []
    for g in rep.images:
        parts.append(" ".join(f"{i + 1}->{x + 1}" for i, x in enumerate(g)))
    return " ; ".join(parts)


def _cmd_perm(args) -> int:
    budget = _budget(6)
    reps = finite.enum_perm_reps(args.n, args.k, dedup_conjugacy=args.dedup, budget=budget)
    cyclic = sum(1 for r in reps if r.is_cyclic())
    print(f"count={len(reps)} cyclic={cyclic} noncyclic={len(reps) - cyclic}")
    if not args.summary:
        for rep in reps:
            tag = "cyclic" if rep.is_cyclic() else "noncyclic"
            print(f"{tag} : {_format_perm_images(rep)}")
    print(f"check=relation-search n={args.n} k={args.k}")
    return 0


# ---------------------------------------------------------------- graph ----


def _format_class(cls: graphs.GraphClass) -> str:
    if isinstance(cls, graphs.TypeA):
        return f"type=A k={cls.k} p={cls.p} d={cls.d}"
    return f"type=B k={cls.k} l={cls.l} d={cls.d}"


def _cmd_graph(args) -> int:
    if args.op == "classify":
        g = graphs.parse_graph(_read_input(args.file))
        cls = graphs.classify(g)
        print(_format_class(cls))
        print(f"check=edge-transitive-classification m={g.num_edges}")
        return 0
    if args.op == "generate":
        if args.type == "A":
            if args.p is None:
                raise ValueError("type A needs --p")
            cls: graphs.GraphClass = graphs.TypeA(args.k, args.p, args.d)
        else:
            if args.l is None:
                raise ValueError("type B needs --l")
            cls = graphs.TypeB(args.k, args.l, args.d)
        g = graphs.generate(cls, args.m)
        print(graphs.format_graph(g))
        print(f"check=template-construction m={args.m}")
        return 0
    if args.op == "brute":
        budget = _budget(8)
        found = graphs.brute_enumerate(args.m, budget=budget)
        print(f"count={len(found)}")
        for g in found:
            print(_format_class(graphs.classify(g)))
        print(f"check=exhaustive-search m={args.m}")
        return 0
    if args.op == "audit":
        g = graphs.parse_graph(_read_input(args.file))
        rep = graphs.genus_audit(g, args.genus, args.b)
        print("feasible" if rep.feasible else "infeasible")
        print(
            f"curves={rep.num_curves} cycles={rep.independent_cycles}"
            f" low_degree={rep.low_degree_vertices} equality={str(rep.equality_case).lower()}"
        )
        print(f"check=curve-count-bounds genus={args.genus} b={args.b}")
        return 0 if rep.feasible else 1
    raise AssertionError(args.op)


# ------------------------------------------------------------------- rh ----


def _cmd_rh(args) -> int:
    if args.op == "check":
        branch = tuple(int(t) for t in args.branch.split(",") if t) if args.branch else ()
        datum = rh.RamificationData(args.chi, args.m, branch, args.chiq)
        ok = rh.rh_check(datum)
        print("feasible" if ok else "infeasible")
        print(f"check=ramified-covering-equation result={str(ok).lower()}")
        return 0 if ok else 1
    if args.op == "enum":
        chis = [int(t) for t in args.chiqs.split(",") if t]
        data = rh.rh_enumerate(args.chi, args.m, chis)
        print(f"count={len(data)}")
        for d in data:
            print(rh.format_rh(d))
        print(f"check=branch-data-enumeration chi={args.chi} m={args.m}")
        return 0
    if args.op == "bounds":
        bounds = rh.order_bounds(args.genus, args.b)
        print(f"finite_subgroup_max={bounds.finite_subgroup_max}")
        print(f"cyclic_max={bounds.cyclic_max}")
        print(f"genus1_max={bounds.genus1_max}")
        print(f"check=order-bounds genus={args.genus} b={args.b}")
        return 0
    if args.op == "audit5":
        rep = rh.section5_audit(args.r, args.m, args.d)
        print(f"ineq6_holds={rep.ineq6_holds}")
        if rep.ineq7_holds is not None:
            print(f"ineq7_holds={rep.ineq7_holds}")
        if rep.ineq8_holds is not None:
            print(f"ineq8_holds={rep.ineq8_holds}")
        print(f"subgroup_card={rep.subgroup_card}")
        print(
            f"kernel_lower_bound={rep.kernel_lower_bound} chi_bound={rep.chi_bound}"
            f" exceeds={str(rep.kernel_exceeds_bound).lower()}"
        )
        print(f"check=abelian-subgroup-contradictions r={args.r} m={args.m} d={args.d}")
        return 0
    raise AssertionError(args.op)


# ---------------------------------------------------------------- suite ----


def _suite_identities() -> list[tuple[str, bool]]:
    items = []
    for n in range(3, 9):
        delta = braids.flip_delta(n)
        half = braids.garside(n)
        ok = all(
            oracle.are_equal(
                delta * braids.generator(n, i) * delta.inverse(), braids.generator(n, i + 1)
            )
            for i in range(n)
        )
        items.append((f"index-shift-conjugation n={n}", ok))
        ok = all(
            oracle.are_equal(
                half * BraidWord(n, (i,)) * half.inverse(), BraidWord(n, (n - i,))
            )
            for i in range(1, n)
        )
        items.append((f"half-twist-reversal n={n}", ok))
        items.append((f"center-generator n={n}", oracle.are_equal(delta**n, half**2)))
        items.append((f"center-commutes n={n}", oracle.is_central(half**2)))
    return items


_TABLE1 = [
    (3, 3, 3, 9),
    (3, 4, 4, 16),
    (3, 5, 5, 25),
    (4, 3, 3, 27),
    (4, 4, 2, 32),
    (4, 4, 4, 64),
    (4, 5, 5, 125),
]


def _suite_table1() -> list[tuple[str, bool]]:
    import random

    items = []
    for r_amb, p, d, expected in _TABLE1:
        params = finite.LnParams(r_amb - 1, p, p, d, 0)
        ok = (
            finite.validate_params(params)
            and finite.ln_group(params).cardinality() == expected == d * p ** (r_amb - 2)
        )
        items.append((f"difference-subgroup-order r={r_amb} p={p} d={d} -> {expected}", ok))
    rng = random.Random(20260808)
    done = 0
    all_ok = True
    while done < 50:
        r = rng.choice([3, 4, 5])
        m = rng.randint(1, 6)
        q = rng.randint(1, 3)
        d = rng.choice([dd for dd in range(1, m + 1) if m % dd == 0])
        s = m * rng.randint(0, 4)
        params = finite.LnParams(r, q * m, m, d, s)
        if not finite.validate_params(params):
            continue
        all_ok &= finite.ln_group(params).cardinality() == q * d * m ** (r - 1)
        done += 1
    items.append(("random-quotients-match-cardinality-law x50", all_ok))
    return items


def _suite_graphs(budget: int) -> list[tuple[str, bool]]:
    items = []
    for m in range(1, min(8, budget) + 1):
        brute = graphs.brute_enumerate(m, budget=budget)
        keys_brute = {graphs.canonical_key(g) for g in brute}
        keys_gen = {
            graphs.canonical_key(graphs.generate(c, m)) for c in graphs.all_classes(m)
        }
        items.append((f"bidirectional-coverage m={m}", keys_brute == keys_gen))
    items.append(
        (
            "loop-rose-classification",
            graphs.classify(graphs.generate(graphs.TypeA(1, 1, 12), 12))
            == graphs.TypeA(1, 1, 12),
        )
    )
    items.append(
        (
            "two-orbit-bundles-classification",
            graphs.classify(graphs.generate(graphs.TypeB(1, 2, 6), 12))
            == graphs.TypeB(1, 2, 6),
        )
    )
    items.append(
        (
            "bipartite-3-4-classification",
            graphs.classify(graphs.generate(graphs.TypeB(1, 3, 4), 12))
            == graphs.TypeB(1, 3, 4),
        )
    )
    special = graphs.generate(graphs.TypeB(3, 4, 1), 12)
    items.append(("equality-case-closed-genus-6", graphs.genus_audit(special, 6, 0).feasible))
    items.append(
        ("equality-case-rejected-with-boundary", not graphs.genus_audit(special, 6, 1).feasible)
    )
    return items


def _suite_perm(budget: int) -> list[tuple[str, bool | None]]:
    items: list[tuple[str, bool | None]] = []

    def run(n, k, pred, label):
        if k > budget:
            items.append((f"{label} (skipped, budget={budget})", None))
            return
        reps = finite.enum_perm_reps(n, k, budget=budget)
        items.append((label, pred(reps)))

    for k in range(1, 5):
        run(5, k, lambda reps: all(r.is_cyclic() for r in reps), f"n=5 k={k} all-cyclic")
    for k in range(1, 6):
        run(6, k, lambda reps: all(r.is_cyclic() for r in reps), f"n=6 k={k} all-cyclic")
    run(
        4,
        3,
        lambda reps: all(r.images[0] == r.images[2] for r in reps),
        "n=4 k=3 first-equals-third",
    )
    run(
        6,
        6,
        lambda reps: any(not r.is_cyclic() for r in reps),
        "n=6 k=6 noncyclic-exists",
    )
    return items


def _suite_rh() -> list[tuple[str, bool]]:
    items = []
    infeasible = all(
        not rh.rh_check(rh.RamificationData(-4, 8, (4,), chi_q)) for chi_q in (1, -1, -3)
    )
    items.append(("order-8-single-branch-point-infeasible", infeasible))
    ob = rh.order_bounds(2, 0)
    items.append(("closed-genus-2-bounds", (ob.finite_subgroup_max, ob.cyclic_max) == (84, 10)))
    items.append(
        ("genus-bounds-scale", rh.order_bounds(5, 0).finite_subgroup_max == 84 * 4)
    )
    g1 = [rh.order_bounds(1, b).genus1_max for b in (0, 1, 2, 3, 4, 5, 6)]
    items.append(("genus-1-order-table", g1 == [6, 6, 6, 3, 2, 1, 1]))
    items.append(
        ("power-growth-r", all(not rh.inequality7_holds(r) for r in range(3, 11)))
    )
    items.append(
        ("power-growth-r-large-m", all(not rh.inequality8_holds(r) for r in range(3, 11)))
    )
    items.append(
        ("exponential-genus-growth", all(not rh.inequality10_holds(g) for g in range(31)))
    )
    return items


def _cmd_suite(args) -> int:
    budget = _budget(8)
    if args.name == "identities":
        items = _suite_identities()
    elif args.name == "table1":
        items = _suite_table1()
    elif args.name == "graphs":
        items = _suite_graphs(budget)
    elif args.name == "perm":
        items = _suite_perm(min(budget, 6))
    elif args.name == "rh":
        items = _suite_rh()
    else:
        raise ValueError(f"unknown suite {args.name!r}")
    failed = 0
    for label, ok in items:
        if ok is None:
            print(f"[skip] {label}")
        elif ok:
            print(f"[pass] {label}")
        else:
            failed += 1
            print(f"[FAIL] {label}")
    print(f"suite={args.name} items={len(items)} failed={failed}")
    return 0 if failed == 0 else 1


# ----------------------------------------------------------------- main ----


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaingroup",
        description="exact braid, homology, quotient, graph, and covering checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("braid", help="braid word constructions and oracle checks")
    ops = p.add_subparsers(dest="op", required=True)
    for name in ("garside", "delta"):
        q = ops.add_parser(name)
        q.add_argument("--n", type=int, required=True)
    q = ops.add_parser("gen")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q = ops.add_parser("eq")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("words", nargs=2)
    for name in ("central", "exp"):
        q = ops.add_parser(name)
        q.add_argument("--n", type=int, required=True)
        q.add_argument("word")
    p.set_defaults(func=_cmd_braid)

    p = sub.add_parser("hom", help="braid-to-braid homomorphisms")
    ops = p.add_subparsers(dest="op", required=True)
    q = ops.add_parser("verify")
    q.add_argument("file")
    q = ops.add_parser("theorem4")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--gamma", default="")
    q.add_argument("--eps", type=int, default=1)
    q.add_argument("--k", type=int, default=0)
    q = ops.add_parser("cable")
    q.add_argument("--k", type=int, required=True)
    q = ops.add_parser("cyclic")
    q.add_argument("file")
    p.set_defaults(func=_cmd_hom)

    p = sub.add_parser("homology", help="lattice chains and transvection algebra")
    ops = p.add_subparsers(dest="op", required=True)
    for name in ("chain", "rep", "square"):
        q = ops.add_parser(name)
        q.add_argument("--genus", type=int, required=True)
        q.add_argument("--k", type=int, required=True)
        if name == "rep":
            q.add_argument("--eps", type=int, default=1)
    for name in ("extract", "lift"):
        q = ops.add_parser(name)
        q.add_argument("file")
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("ln", help="finite abelian quotients")
    ops = p.add_subparsers(dest="op", required=True)
    for name in ("validate", "card"):
        q = ops.add_parser(name)
        for flag in ("r", "M", "m", "d", "s"):
            q.add_argument(f"--{flag}", type=int, required=True)
    q = ops.add_parser("snf")
    q.add_argument("file")
    p.set_defaults(func=_cmd_ln)

    p = sub.add_parser("perm", help="permutation representation search")
    ops = p.add_subparsers(dest="op", required=True)
    q = ops.add_parser("enum")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--dedup", action="store_true")
    q.add_argument("--summary", action="store_true")
    p.set_defaults(func=_cmd_perm)

    p = sub.add_parser("graph", help="edge-transitive cyclic graph actions")
    ops = p.add_subparsers(dest="op", required=True)
    q = ops.add_parser("classify")
    q.add_argument("file")
    q = ops.add_parser("generate")
    q.add_argument("--type", choices=("A", "B"), required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--p", type=int)
    q.add_argument("--l", type=int)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q = ops.add_parser("brute")
    q.add_argument("--m", type=int, required=True)
    q = ops.add_parser("audit")
    q.add_argument("file")
    q.add_argument("--genus", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("rh", help="ramified covering arithmetic and order bounds")
    ops = p.add_subparsers(dest="op", required=True)
    q = ops.add_parser("check")
    q.add_argument("--chi", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--branch", default="")
    q.add_argument("--chiq", type=int, required=True)
    q = ops.add_parser("enum")
    q.add_argument("--chi", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--chiqs", required=True)
    q = ops.add_parser("bounds")
    q.add_argument("--genus", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q = ops.add_parser("audit5")
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_rh)

    p = sub.add_parser("suite", help="named verification bundles")
    p.add_argument("name", choices=("identities", "table1", "graphs", "perm", "rh"))
    p.set_defaults(func=_cmd_suite)

    return parser


def dispatch(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
