"""Command line interface: ``clonevote COMMAND FILE [options]``.

Exit status is 0 when a question was answered, 1 when the answer is
Inconclusive or a search cap was hit, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import strategies as st
from .cloning import CloningVector, SuccessMode, check_success_exact, estimate_success_probability
from .costs import INF, UnitCost, ZeroCost, decide_q_cloning, parse_budget
from .election import condorcet_status
from .errors import CloningError, SearchSpaceTooLarge
from .formats import parse_costs, parse_election, parse_majority_spec, read_text, serialize_election
from .oracle import SearchCaps, pnk_experiment
from .rules import RUNOFF, Rule, plurality_scores, scores, winners
from .tournament import majority_graph, mcgarvey_realize

ANSWERED, UNSETTLED, USAGE = 0, 1, 2


def _plain(x):
    """Make derived values JSON friendly: inf and fractions become strings."""
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if hasattr(x, "item"):
        return x.item()
    return x


def _vector_map(e, vector):
    return {e.label(j): k for j, k in enumerate(vector) if k != 1} if vector is not None else None


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2, default=_plain))
    else:
        print(text)


def _election(args):
    return parse_election(read_text(args.file))


def _rule(args):
    return Rule.parse(args.rule, args.k)


def _caps(args):
    return SearchCaps(args.caps_clones, args.caps_assignments)


def _parse_vector(e, text):
    counts = {}
    for part in text.split(","):
        if not part.strip():
            continue
        name, _, k = part.partition("=")
        if not k:
            raise CloningError(f"vector entries look like name=k, got {part!r}")
        counts[name.strip()] = int(k)
    return CloningVector.from_mapping(e, counts)


def cmd_score(args):
    e, rule = _election(args), _rule(args)
    sc = plurality_scores(e) if rule.name == RUNOFF else scores(e, rule)
    table = {e.label(j): int(sc[j]) for j in range(e.m)}
    title = "first-round plurality" if rule.name == RUNOFF else str(rule)
    _emit(args, {"rule": str(rule), "scores": table}, "\n".join(f"{x}\t{v}" for x, v in table.items()) + f"\n({title})")
    return ANSWERED


def cmd_winners(args):
    e, rule = _election(args), _rule(args)
    won = sorted(winners(e, rule))
    cs = condorcet_status(e)
    label = lambda j: None if j is None else e.label(j)  # noqa: E731
    payload = {
        "rule": str(rule),
        "winners": [e.label(j) for j in won],
        "condorcet_winner": label(cs.winner),
        "condorcet_loser": label(cs.loser),
    }
    text = f"winners: {', '.join(payload['winners'])}"
    text += f"\ncondorcet winner: {payload['condorcet_winner'] or '-'}"
    text += f"\ncondorcet loser: {payload['condorcet_loser'] or '-'}"
    _emit(args, payload, text)
    return ANSWERED


def _strategy_payload(e, strategy):
    if strategy is None:
        return None
    return {
        "vector": _vector_map(e, strategy.vector),
        "extra_clones": strategy.vector.extra,
        "certificate": strategy.certificate.kind,
    }


def cmd_analyze(args):
    e, rule = _election(args), _rule(args)
    mode = SuccessMode.parse(args.mode)
    rep = st.analyze(e, rule, args.preferred, mode, args.only_preferred, args.samples, args.seed)
    strat = _strategy_payload(e, rep.strategy)
    payload = {
        "verdict": str(rep.verdict),
        "vector": strat and strat["vector"],
        "cost": strat and strat["extra_clones"],
        "certificate": strat and strat["certificate"],
        "violated": rep.violated or None,
        "note": rep.note or None,
        "derived": {k: _plain(v) for k, v in rep.derived.items()},
    }
    text = rep.summary()
    if rep.derived:
        text += "\n" + "\n".join(f"  {k} = {_plain(v)}" for k, v in rep.derived.items())
    if rep.note:
        text += f"\n  note: {rep.note}"
    _emit(args, payload, text)
    return UNSETTLED if rep.verdict is st.Verdict.INCONCLUSIVE else ANSWERED


def _costs(args, e):
    spec = args.costs.strip().lower()
    if spec == "zc":
        return ZeroCost
    if spec == "uc":
        return UnitCost
    return parse_costs(read_text(args.costs), e)


def cmd_solve(args):
    e, rule = _election(args), _rule(args)
    mode = SuccessMode.parse(args.mode)
    p = _costs(args, e)
    d = decide_q_cloning(e, rule, args.preferred, mode, p, parse_budget(args.budget), _caps(args))
    vector = getattr(d.strategy, "vector", None)
    cert = getattr(getattr(d.strategy, "certificate", None), "kind", None)
    if cert is None and d.source == "oracle" and vector is not None:
        cert = "witness" if mode.kind == "zero_plus" else "all_orderings"
    derived = {k: _plain(v) for k, v in d.report.derived.items()} if d.report is not None else {}
    payload = {
        "verdict": d.answer,
        "vector": _vector_map(e, vector),
        "cost": _plain(d.cost),
        "certificate": cert,
        "source": d.source,
        "reason": d.reason,
        "derived": derived,
    }
    text = f"{d.answer}"
    if vector is not None:
        text += f": clone {vector.describe(e)} at cost {d.cost}"
    if d.reason:
        text += f" ({d.reason})"
    _emit(args, payload, text)
    return UNSETTLED if d.answer == "Inconclusive" else ANSWERED


def cmd_verify(args):
    e, rule = _election(args), _rule(args)
    vector = _parse_vector(e, args.vector)
    mode = SuccessMode.parse(args.mode)
    try:
        res = check_success_exact(e, rule, args.preferred, vector, mode, args.caps_assignments, args.method)
    except SearchSpaceTooLarge as exc:
        _emit(args, {"verdict": "CapExceeded", "size": exc.size, "cap": exc.limit}, f"CapExceeded: {exc}")
        return UNSETTLED
    found = res.witness or res.counterexample
    payload = {
        "verdict": res.status,
        "vector": _vector_map(e, vector),
        "mode": str(mode),
        "method": res.method,
        "checked": res.checked,
        "certificate": "witness" if res.witness else ("counterexample" if res.counterexample else None),
        "orderings": found.describe(e, vector) if found is not None else None,
    }
    text = f"{res.status} for {vector.describe(e)} in mode {mode} ({res.method}, checked {res.checked})"
    if res.reason:
        text += f"\n  {res.reason}"
    if found is not None:
        kind = "witness" if res.witness else "counterexample"
        text += f"\n  {kind}:\n" + "\n".join(f"    {line}" for line in found.describe(e, vector))
    _emit(args, payload, text)
    return ANSWERED


def cmd_estimate(args):
    e, rule = _election(args), _rule(args)
    vector = _parse_vector(e, args.vector)
    est = estimate_success_probability(e, rule, args.preferred, vector, args.samples, args.seed, args.workers)
    payload = {
        "vector": _vector_map(e, vector),
        "successes": est.successes,
        "samples": est.samples,
        "seed": est.seed,
        "estimate": str(est.estimate),
        "stderr": est.stderr(),
    }
    text = f"{est.successes}/{est.samples} = {float(est.estimate):.6f} (stderr {est.stderr():.6f}, seed {est.seed})"
    _emit(args, payload, text)
    return ANSWERED


def cmd_mcgarvey(args):
    spec = parse_majority_spec(read_text(args.file))
    e = mcgarvey_realize(spec)
    ok = majority_graph(e) == spec.graph()
    if args.json:
        print(json.dumps({"voters": e.n, "round_trip": ok, "election": serialize_election(e)}, indent=2))
    else:
        sys.stdout.write(serialize_election(e))
    return ANSWERED


def cmd_pnk(args):
    res = pnk_experiment(args.n, args.k, args.trials, args.seed, args.workers)
    payload = {
        "n": res.n,
        "k": res.k,
        "trials": res.trials,
        "seed": res.seed,
        "successes": res.successes,
        "estimate": str(res.estimate),
    }
    _emit(args, payload, f"P({res.n},{res.k}): {res.successes} successes in {res.trials} trials (seed {res.seed})")
    return ANSWERED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--caps-clones", type=int, default=SearchCaps.max_extra_clones)
    common.add_argument("--caps-assignments", type=int, default=SearchCaps.max_assignments)

    def with_rule(p, preferred=True):
        p.add_argument("file")
        p.add_argument("--rule", required=True)
        p.add_argument("--k", type=int, help="approval count for k-approval")
        if preferred:
            p.add_argument("--preferred", required=True)

    ap = argparse.ArgumentParser(prog="clonevote", description="Manipulation by cloning in elections.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", parents=[common], help="score every candidate")
    with_rule(p, preferred=False)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("winners", parents=[common], help="winners and Condorcet status")
    with_rule(p, preferred=False)
    p.set_defaults(func=cmd_winners)

    p = sub.add_parser("analyze", parents=[common], help="characterize cloning manipulation")
    with_rule(p)
    p.add_argument("--mode", default="0plus", help="0plus, 1 or a threshold such as 1/2")
    p.add_argument("--only-preferred", action="store_true", help="Borda: only clone the preferred candidate")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", parents=[common], help="decide cloning within a budget")
    with_rule(p)
    p.add_argument("--mode", default="0plus")
    p.add_argument("--costs", default="uc", help="zc, uc or a cost table file")
    p.add_argument("--budget", default="inf")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="exactly check one cloning vector")
    with_rule(p)
    p.add_argument("--vector", required=True, help="name=k,... (unlisted candidates stay single)")
    p.add_argument("--mode", default="1")
    p.add_argument("--method", default="enumerate", choices=("enumerate", "factored", "auto"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("estimate", parents=[common], help="sample random clone orderings")
    with_rule(p)
    p.add_argument("--vector", required=True)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("mcgarvey", parents=[common], help="realize a majority spec as an election")
    p.add_argument("file")
    p.set_defaults(func=cmd_mcgarvey)

    p = sub.add_parser("pnk", parents=[common], help="random permutation experiment")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_pnk)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else ANSWERED
    try:
        return args.func(args)
    except (CloningError, ValueError, OSError) as exc:
        print(f"clonevote: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
