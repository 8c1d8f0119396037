"""Checks against the frozen worked examples shipped in ``data/``."""
from __future__ import annotations

import json
from importlib import resources

from .combi_r import CheckReport, r_apply
from .laurent import LPoly
from .mpf import build_X, build_Xhat, prob_trace
from .multiline import MultilineState, T_full, conjecture_check, fm_steady, pi
from .osc0 import AM, AP, K, UNIT
from .quantum_r import QZ, rmatrix_full
from .words import Config, Word, basic_sectors, config_text, levels_from_multiplicity, phi

_TOKENS = {"1": UNIT, "k": K, "a+": AP, "a-": AM}


def load(name: str = "worked_examples.json") -> dict:
    return json.loads(resources.files("ntasep").joinpath("data", name).read_text())


def parse_ctm_term(text: str) -> tuple:
    """``"a-.a+.1"`` -> tuple of monomials."""
    return tuple(_TOKENS[t] for t in text.split("."))


def parse_poly(triples) -> LPoly:
    return LPoly(QZ, {(qe, ze): c for qe, ze, c in triples})


def parse_table_key(key: str) -> tuple[Word, ...]:
    return tuple(Word.parse(w) for w in key.split(","))


def check_steady(data: dict) -> CheckReport:
    rep = CheckReport("steady states")
    for sector, want in data["steady"].items():
        m = tuple(int(x) for x in sector.split(","))
        got = fm_steady(m).normalized().weights
        rep.checked += 1
        got_text = {config_text(k): v for k, v in got.items()}
        if got_text != want:
            rep.failures.append({"sector": sector})
    return rep


def check_apply_r(data: dict) -> CheckReport:
    rep = CheckReport("combinatorial R")
    for ex in data["apply_r"]:
        rep.checked += 1
        b, a = r_apply(Word.parse(ex["i"]), Word.parse(ex["j"]))
        if (str(b), str(a)) != (ex["b"], ex["a"]):
            rep.failures.append({"input": [ex["i"], ex["j"]], "got": [str(b), str(a)]})
    return rep


def check_rmatrix(data: dict) -> CheckReport:
    rep = CheckReport("quantum R tables")
    for lmL, table in data["rmatrix"].items():
        l, m, L = (int(x) for x in lmL.split(","))
        ours = rmatrix_full(l, m, L)
        rep.checked += 1
        want = {parse_table_key(k): parse_poly(v) for k, v in table.items()}
        if ours != want:
            extra = sorted(",".join(map(str, k)) for k in set(ours) ^ set(want))
            diff = sorted(",".join(map(str, k)) for k in set(ours) & set(want) if ours[k] != want[k])
            rep.failures.append({"table": lmL, "key_mismatch": extra, "value_mismatch": diff})
    closed = data["rmatrix_closed_form_1_1"]
    L = closed["L"]
    ours = rmatrix_full(1, 1, L)
    e = [Word.from_sites([p], L) for p in range(L)]
    want = {}
    for x in range(L):
        for y in range(L):
            if x == y:
                want[(e[x], e[x], e[x], e[x])] = parse_poly(closed["diagonal"])
            else:
                want[(e[x], e[y], e[x], e[y])] = parse_poly(closed["same_pair"])
                form = closed["exchange_i_lt_j"] if x < y else closed["exchange_i_gt_j"]
                want[(e[y], e[x], e[x], e[y])] = parse_poly(form)
    rep.checked += 1
    if ours != want:
        rep.failures.append({"table": f"1,1,{L} closed form"})
    return rep


def check_multiline(data: dict) -> CheckReport:
    rep = CheckReport("phi, levels and time evolution")
    ph = data["phi"]
    rep.checked += 1
    got = [str(w) for w in phi(Config.parse(ph["sigma"], ph["n"]))]
    if got != ph["words"]:
        rep.failures.append({"phi": got})
    lv = data["levels"]
    rep.checked += 1
    if list(levels_from_multiplicity(lv["multiplicity"])) != lv["levels"]:
        rep.failures.append({"levels": lv})
    te = data["time_evolution"]
    s = MultilineState.parse(te["state"])
    rep.checked += 1
    if config_text(pi(s)) != te["pi"]:
        rep.failures.append({"pi": config_text(pi(s))})
    for k, ex in te["T"].items():
        rep.checked += 1
        k_out, s2 = T_full(s, int(k))
        bad = config_text(pi(s2)) != ex["pi"]
        bad |= "state" in ex and [str(r) for r in s2.rows] != ex["state"]
        bad |= "k_out" in ex and k_out != ex["k_out"]
        if bad:
            rep.failures.append({"k": k, "state": [str(r) for r in s2.rows], "k_out": k_out})
    return rep


def check_operators(data: dict) -> CheckReport:
    rep = CheckReport("corner transfer matrix operators")
    ops = data["operators"]
    for i, terms in ops["n2"]["X"].items():
        rep.checked += 1
        want = {parse_ctm_term(t): 1 for t in terms}
        if build_X(int(i), 2, ops["n2"]["order"]).terms != want:
            rep.failures.append({"n": 2, "i": i})
    cases = [("n3_X0", 0, 3, False), ("n3_Xhat0", 0, 3, True), ("n4_X1", 1, 4, False)]
    for name, i, n, hat in cases:
        entry = ops[name]
        rep.checked += 1
        terms = entry["terms"]
        want = {parse_ctm_term(t): c for t, c in terms.items()} if isinstance(terms, dict) else {
            parse_ctm_term(t): 1 for t in terms
        }
        build = build_Xhat if hat else build_X
        if build(i, n, entry["order"]).terms != want:
            rep.failures.append({"operator": name})
    for ex in data["trace"]:
        rep.checked += 1
        sigma = tuple(int(x) for x in ex["sigma"].split(","))
        if prob_trace(sigma) != ex["value"]:
            rep.failures.append({"sigma": ex["sigma"]})
    return rep


def run_all() -> list[CheckReport]:
    data = load()
    return [
        check_steady(data),
        check_apply_r(data),
        check_rmatrix(data),
        check_multiline(data),
        check_operators(data),
    ]


def conjecture_report(max_L: int = 5, max_n: int = 3) -> list[dict]:
    """Summary of the carrier single-image test over all small basic sectors and carrier weights."""
    out = []
    for L in range(2, max_L + 1):
        for n in range(1, max_n + 1):
            for m in basic_sectors(L, n):
                for r in range(1, L):
                    rep = conjecture_check(m, r)
                    out.append({k: rep[k] for k in ("sector", "r", "configs", "singleton", "stationary")})
    return out
