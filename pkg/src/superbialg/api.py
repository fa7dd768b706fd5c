"""Report-producing handlers shared by the HTTP service and the CLI.

Every handler returns a ReproductionReport: a deterministic, JSON-stable
list of pass/fail items (no timestamps, sorted content).  Exit semantics:
a report passes iff every item with status "pass"/"fail" passed; items with
status "evidence" are informational.
"""
from __future__ import annotations

import json
from typing import Any, Literal

import sympy as sp
from pydantic import BaseModel, Field

from . import bialgebra, catalog, disc, manin, quantize, supergroup
from .liealg import validate_structure
from .scalars import is_zero_expr, param, parse_exact

__all__ = [
    "ReportItem",
    "ReproductionReport",
    "check_algebra",
    "classify_duals",
    "schouten_report",
    "find_r_report",
    "poisson_report",
    "build_double_report",
    "verify_appendix_report",
    "theorem1_report",
    "osp_report",
    "quantize_report",
    "rtt_report",
    "quantum_r_report",
    "reproduce_table",
    "report_json",
]


class ReportItem(BaseModel):
    name: str
    status: Literal["pass", "fail", "evidence"]
    expected: Any = None
    computed: Any = None
    detail: str | None = None


class ReproductionReport(BaseModel):
    command: str
    items: list[ReportItem] = Field(default_factory=list)
    passed: bool = True
    summary: dict = Field(default_factory=dict)

    def add(self, name, ok, expected=None, computed=None, detail=None, evidence=False):
        status = "evidence" if evidence else ("pass" if ok else "fail")
        self.items.append(
            ReportItem(name=name, status=status, expected=expected,
                       computed=computed, detail=detail)
        )

    def finish(self) -> "ReproductionReport":
        counts = {"pass": 0, "fail": 0, "evidence": 0}
        for item in self.items:
            counts[item.status] += 1
        self.summary = counts
        self.passed = counts["fail"] == 0
        return self


def report_json(report: ReproductionReport) -> str:
    return json.dumps(report.model_dump(), sort_keys=True, indent=2, default=str)


def _params(params: dict | None) -> dict:
    return {k: parse_exact(v) for k, v in (params or {}).items()}


# ---------------------------------------------------------------------------
# individual operations
# ---------------------------------------------------------------------------


def check_algebra(name: str | None = None, file_json: str | None = None,
                  params: dict | None = None) -> ReproductionReport:
    rep = ReproductionReport(command="check-algebra")
    if file_json is not None:
        g = catalog.algebra_from_json(file_json)
    elif name is not None:
        g = catalog.load(name, _params(params))
    else:
        rep.add("input", False, detail="provide an algebra name or a JSON document")
        return rep.finish()
    v = validate_structure(g)
    rep.add(f"{g.name}: graded antisymmetry", not v.antisymmetry)
    rep.add(f"{g.name}: grading constraint", not v.grading)
    rep.add(f"{g.name}: graded Jacobi (index form)", not v.jacobi)
    rep.add(f"{g.name}: graded Jacobi (matrix form)", not v.jacobi_matrix)
    rep.add(f"{g.name}: forms agree entrywise", v.crosscheck_ok)
    return rep.finish()


_POISSON_FIX = None


def _poisson_fixture() -> dict:
    global _POISSON_FIX
    if _POISSON_FIX is None:
        from importlib import resources

        _POISSON_FIX = json.loads(
            resources.files("superbialg.data").joinpath("poisson_table.json").read_text()
        )
    return _POISSON_FIX


COBOUNDARY_LABELS = tuple(_poisson_fixture()["r_matrices"])


def _fixture_rmatrix(label: str, params: dict | None = None):
    g = catalog.gl11("nonstandard")
    sub = {param(k): v for k, v in _params(params).items()}
    terms = [
        (int(i) - 1, int(j) - 1, parse_exact(c).subs(sub))
        for i, j, c in _poisson_fixture()["r_matrices"][label]
    ]
    return bialgebra.rmatrix_from_wedges(g, terms)


def classify_duals(p="1/2") -> ReproductionReport:
    """Coboundary status of all dual pairs: the solver runs on the
    i-dropped pair exactly as the classification prescribes, in both
    directions."""
    rep = ReproductionReport(command="classify-duals")
    g_std = catalog.gl11("standard")
    g_ns = catalog.gl11("nonstandard")
    for label in catalog.dual_names():
        entry = catalog.dual_entry(label)
        sample = entry.sample_grid()[0]
        if "p" in entry.params:
            sample = {"p": p}
        gd_std = catalog.load_dual(label, sample)
        gd_ns = gd_std.to_nonstandard()
        compatible = not bialgebra.mixed_sji_residual(g_std, gd_std)
        rep.add(f"{label}: compatible pair", compatible)
        res = bialgebra.find_r(g_ns, gd_ns)
        expected_cob = label in COBOUNDARY_LABELS
        got_nonzero = res.found and bool(res.r.coeffs)
        rep.add(
            f"{label}: coboundary", got_nonzero == expected_cob,
            expected="nonzero r" if expected_cob else "no nonzero r",
            computed="r found" if got_nonzero else (
                "only r = 0" if res.found else "inconsistent"),
        )
        dual_dir = bialgebra.find_r(gd_ns, g_ns)
        rep.add(
            f"{label}: dual-direction solve", True,
            computed={
                "skew_solution": dual_dir.found,
                "unconstrained_consistent": dual_dir.consistent_unconstrained,
            },
            evidence=True,
        )
    return rep.finish()


def schouten_report(label: str | None = None, r_json: str | None = None,
                    params: dict | None = None) -> ReproductionReport:
    rep = ReproductionReport(command="schouten")
    g = catalog.gl11("nonstandard")
    if r_json is not None:
        data = json.loads(r_json)
        coeffs = {
            (item["i"] - 1, item["j"] - 1): parse_exact(item["re"]) + sp.I * parse_exact(item["im"])
            for item in data
        }
        r = bialgebra.RMatrix(g, coeffs)
        name = "custom r"
    else:
        label = catalog.normalize_label(label or "C2_-1+A11.ii")
        r = _fixture_rmatrix(label, params)
        name = label
    cls = bialgebra.classify_r(g, r)
    rep.add(f"{name}: classification", True, computed=cls.as_dict(), evidence=True)
    wedge = {
        ",".join(str(i + 1) for i in k): str(v) for k, v in cls.schouten_wedge.items()
    }
    rep.add(f"{name}: schouten wedge coefficients", True, computed=wedge, evidence=True)
    if label is not None and label in _poisson_fixture()["schouten"]:
        sub = {param(k): v for k, v in _params(params).items()}
        expect = {
            k: sp.expand(parse_exact(v).subs(sub))
            for k, v in _poisson_fixture()["schouten"][label].items()
        }
        got = {
            ",".join(str(i + 1) for i in k): sp.expand(v)
            for k, v in cls.schouten_wedge.items()
        }
        same = set(expect) == set(got) and all(
            is_zero_expr(expect[k] - got[k]) for k in expect
        )
        rep.add(f"{name}: schouten matches the golden table", same,
                expected={k: str(v) for k, v in expect.items()},
                computed={k: str(v) for k, v in got.items()})
        rep.add(
            f"{name}: kind matches",
            cls.kind == _poisson_fixture()["kinds"][label],
            expected=_poisson_fixture()["kinds"][label], computed=cls.kind,
        )
    return rep.finish()


def find_r_report(dual: str, params: dict | None = None) -> ReproductionReport:
    rep = ReproductionReport(command="find-r")
    g = catalog.gl11("nonstandard")
    label = catalog.normalize_label(dual)
    gd = catalog.load_dual(label, _params(params)).to_nonstandard()
    res = bialgebra.find_r(g, gd)
    if res.found:
        sparse = [
            {"i": i + 1, "j": j + 1, "coeff": str(c)} for (i, j), c in sorted(res.r.coeffs.items())
        ]
        rep.add(f"{label}: r-matrix", True, computed=sparse, evidence=True)
        dual_back = bialgebra.cocommutator_from_r(g, res.r)
        rep.add(f"{label}: cobracket round-trip", dual_back.eq_constants(gd))
    else:
        rep.add(f"{label}: r-matrix", True, computed="inconsistent (not coboundary)",
                evidence=True)
    rep.add(f"{label}: unconstrained solve consistent", True,
            computed=res.consistent_unconstrained, evidence=True)
    return rep.finish()


def poisson_report(label: str = "C2_-1+A11.ii", params: dict | None = None,
                   pairs: str = "all") -> ReproductionReport:
    rep = ReproductionReport(command="poisson-gl11")
    label = catalog.normalize_label(label)
    fixture = _poisson_fixture()["rows"][label]
    sub = {param(k): v for k, v in _params(params).items()}
    r = _fixture_rmatrix(label, params)
    table = supergroup.bracket_table(r, split=fixture["split"])
    wanted = None if pairs == "all" else {tuple(p.split(",")) for p in pairs.split(";")}
    for key, expect in fixture["brackets"].items():
        a, b = key.split(",")
        if wanted is not None and (a, b) not in wanted:
            continue
        entry = table[(a, b)]
        for col in (("L", "R", "total") if fixture["split"] else ("total",)):
            target = supergroup.CHART.function(
                {
                    tuple(n for n in mono.split("*") if n != "1"): parse_exact(c).subs(sub)
                    for mono, c in expect[col].items()
                }
            )
            ok = entry[col].eq(target)
            rep.add(f"{label}: {{{a},{b}}}{'^' + col if col != 'total' else ''}", ok,
                    expected=str(target), computed=str(entry[col]))
    return rep.finish()


def build_double_report(dual: str = "I22", params: dict | None = None) -> ReproductionReport:
    rep = ReproductionReport(command="build-double")
    label = catalog.normalize_label(dual)
    d = manin.build_double(dual=label, params=_params(params))
    rep.add(f"{label}: canonical double satisfies the graded Jacobi identity",
            validate_structure(d.algebra, matrix_form=False).ok)
    rep.add(f"{label}: pairing ad-invariant",
            manin.pairing_ad_invariant(d.algebra, d.pairing))
    fix = manin.fixture_tensor(label, {k: str(v) for k, v in d.params.items()})
    rep.add(f"{label}: presented tensor matches the golden bracket table",
            d.presented.eq_constants(fix))
    rep.add(f"{label}: presented tensor closes", True,
            computed=d.presented_closes, evidence=True)
    inv = manin.double_invariants(d)
    rep.add(f"{label}: invariants", True, computed=inv, evidence=True)
    return rep.finish()


def verify_appendix_report(limit_samples: int | None = None) -> ReproductionReport:
    rep = ReproductionReport(command="verify-appendix-a")
    for item in manin.appendix_maps():
        samples = item["samples"]
        if limit_samples:
            samples = samples[:limit_samples]
        ok_all = True
        for sample in samples:
            v = {k: parse_exact(x) for k, x in sample.items()}
            v.setdefault("p", sp.Rational(1, 2))
            src = manin.build_double(dual=item["source"], params=item["source_params"](v))
            dst = manin.build_double(dual=item["target"], params=item["target_params"](v))
            res = manin.verify_manin_iso(src, dst, item["matrix"](v))
            if not (res.bracket_ok and res.invertible):
                ok_all = False
        rep.add(
            f"{item['tag']}: {item['source']} -> {item['target']} bracket isomorphism "
            f"({len(samples)} samples)", ok_all,
        )
        v = {k: parse_exact(x) for k, x in samples[0].items()}
        v.setdefault("p", sp.Rational(1, 2))
        vp = item["pairing_subfamily"](v)
        src = manin.build_double(dual=item["source"], params=item["source_params"](v))
        dst = manin.build_double(dual=item["target"], params=item["target_params"](v))
        resp = manin.verify_manin_iso(src, dst, item["matrix"](vp))
        rep.add(
            f"{item['tag']}: {item['source']} -> {item['target']} pairing on the "
            f"recorded subfamily", resp.ok,
            detail=f"real subfamily: {item['pairing_real']}",
        )
    return rep.finish()


def theorem1_report(p="1/2") -> ReproductionReport:
    rep = ReproductionReport(command="theorem1")
    data = manin.theorem1_partition(p)
    for tag, cls in data["classes"].items():
        rep.add(f"class {tag}", True, computed=cls, evidence=True)
    for w in data["witnesses"]:
        ok = w["bracket_isomorphism"] and w["invertible"] and w["pairing_on_subfamily"]
        rep.add(
            f"witness {w['class']}: {w['from']}{w['from_params']} -> "
            f"{w['to']}{w['to_params']}", ok, computed=w,
        )
    rep.add("separation invariants", True,
            computed=data["separation"]["invariants"], evidence=True)
    for pairinfo in data["separation"]["pairwise"]:
        rep.add(
            f"separation {pairinfo['pair'][0]} vs {pairinfo['pair'][1]}", True,
            computed=pairinfo, evidence=True,
        )
    return rep.finish()


def osp_report(kmax: int = 3, chart: str = "real") -> ReproductionReport:
    rep = ReproductionReport(command="osp-invariants")
    checks = disc.omega_contraction_check()
    rep.add("inverse two-form graded-antisymmetric", checks["graded_antisymmetric"])
    rep.add("two-form contraction is the graded identity",
            checks["upper_lower_identity"] and checks["lower_upper_identity"])
    S = disc.special_solution()
    residuals = disc.pde_residuals(S)
    rep.add("bracket system residuals vanish",
            all(v.is_zero() for v in residuals.values()))
    rep.add("representation matrices satisfy the algebra", disc.rep_algebra_check())
    g = catalog.gl11("nonstandard")
    r = _fixture_rmatrix("C2_-1+A11.ii")
    inv = disc.motion_invariants(S, r, kmax, chart=chart)
    rep.add("first invariant vanishes", inv[0].is_zero())
    if kmax >= 3 and chart == "real":
        i2e, i3e = disc.expected_invariants()
        rep.add("quadratic invariant matches the closed form", inv[1].eq(i2e))
        rep.add("cubic invariant matches the closed form", inv[2].eq(i3e))
    invc = disc.motion_invariants(S, r, kmax, chart="complex")
    invol = disc.involution_check(invc[1:])
    rep.add("invariants are in involution",
            all(v.is_zero() for v in invol.values()))
    if chart == "real" and kmax >= 3:
        rep.add("independence evidence", True,
                computed=disc.independence_evidence(inv[1:3]), evidence=True)
    return rep.finish()


def quantize_report(prop: str = "P3", lam=None, order: int = 8,
                    reading: str = "poly") -> ReproductionReport:
    rep = ReproductionReport(command="quantize")
    prop = prop.upper()
    readings = [reading] if prop != "P5" else ["poly", "exp"]
    for rd in readings:
        axioms = quantize.check_hopf_axioms(prop, order=order, lam=lam, p5_reading=rd)
        tag = f"{prop}" + (f"(lambda={lam})" if lam is not None else "") + (
            f"[{rd}]" if prop == "P5" else "")
        for key in ("coproduct_morphism", "coassociativity", "counit", "antipode",
                    "classical_limit", "confluent"):
            rep.add(f"{tag}: {key}", axioms[key])
    delta = quantize.first_order_cocommutator(prop, order=min(order, 4), lam=lam)
    dual_label, uses_lam = quantize.COCOMMUTATOR_DUALS[prop]
    dparams = None
    if uses_lam:
        dparams = {"p": lam if lam is not None else "1/2"}
        if lam is None:
            delta = quantize.first_order_cocommutator(prop, order=4, lam=sp.Rational(1, 2))
    gd = catalog.load_dual(dual_label, dparams).to_nonstandard()
    names = dict(enumerate(quantize.UH_GENS))
    p = (0, 0, 1, 1)
    ok = True
    for i in range(4):
        target = {}
        for a in range(4):
            for b in range(4):
                c = (-1) ** (p[a] * p[b]) * gd.f[a][b][i]
                if not is_zero_expr(c):
                    target[(names[a], names[b])] = sp.sympify(c)
        got = delta[names[i]]
        for key in set(got) | set(target):
            if not is_zero_expr(sp.expand(got.get(key, 0) - target.get(key, 0))):
                ok = False
    rep.add(
        f"{prop}: first-order cobracket matches the {dual_label} dual "
        "(normalization constant h)", ok,
    )
    return rep.finish()


def rtt_report() -> ReproductionReport:
    rep = ReproductionReport(command="rtt-check")
    data = quantize.rtt_relations()
    rep.add("every matrix entry reduces to zero under the relation set",
            all(data["reduce_to_zero"].values()))
    for name, where in data["golden_matches"].items():
        rep.add(f"relation recovered: {name}", where is not None,
                computed={"entry": where})
    fr = quantize.frt_hopf_check()
    for key in ("confluent", "inverse_identities", "coproduct_morphism", "counit",
                "antipode", "sdet_central", "sdet_classical_limit"):
        rep.add(f"quantum matrix algebra: {key}", fr[key])
    return rep.finish()


def quantum_r_report() -> ReproductionReport:
    rep = ReproductionReport(command="quantum-r")
    R = quantize.quantum_R()
    diag = [str(R[i, i].expr) for i in range(4)]
    rep.add("R is diagonal (1, e^h, e^-h, 1)",
            diag == ["1", "exp(h)", "exp(-h)", "1"], computed=diag)
    from .supermatrix import SuperMatrix

    rep.add("classical limit is the identity",
            quantize.quantum_R(0).eq(SuperMatrix.identity((0, 1, 1, 0))))
    rep.add("graded quantum Yang-Baxter identity", quantize.qybe_check(R))
    rep.add("flip-intertwiner identity in the fundamental",
            quantize.intertwiner_check())
    return rep.finish()


# ---------------------------------------------------------------------------
# golden table suites
# ---------------------------------------------------------------------------


def _suite_duals() -> ReproductionReport:
    rep = ReproductionReport(command="reproduce-table IV")
    g = catalog.gl11("standard")
    for label in catalog.dual_names():
        entry = catalog.dual_entry(label)
        for sample in entry.sample_grid():
            gd = catalog.load_dual(label, sample)
            v = validate_structure(gd)
            mixed = bialgebra.mixed_sji_residual(g, gd)
            swapped = bialgebra.mixed_sji_residual(gd, g)
            cross = bialgebra.crosscheck_mixed_forms(g, gd)
            tag = f"{label} {sample}" if sample else label
            rep.add(f"{tag}: dual satisfies the graded identities", v.ok)
            rep.add(f"{tag}: mixed compatibility (both directions, both forms)",
                    not mixed and not swapped and cross)
    family = bialgebra.solve_dual_linear(g)
    for case in "ABCD":
        fam = catalog.case_family(case)
        ok = (
            validate_structure(fam).ok
            and not bialgebra.mixed_sji_residual(g, fam)
            and family.contains(fam)
        )
        rep.add(f"case {case}: symbolic family solves the linear layer", ok)
        for item in catalog.case_isomorphisms(case):
            all_ok = True
            for sample in item["samples"]:
                v = {k: parse_exact(x) for k, x in sample.items()}
                v.setdefault("alpha", param("alpha"))
                v.setdefault("beta", param("beta"))
                member = catalog.case_family(case, alpha=item["alpha"](v), beta=item["beta"](v))
                tp = item.get("target_params")
                target = catalog.load(item["target"], tp(v) if tp else None)
                from .liealg import is_isomorphism

                if not is_isomorphism(member, target, item["matrix"](v)):
                    all_ok = False
            rep.add(f"case {case}: {item['name']} maps onto {item['target']}", all_ok)
    return rep.finish()


def _suite_rmatrices() -> ReproductionReport:
    rep = ReproductionReport(command="reproduce-table V")
    g = catalog.gl11("nonstandard")
    fixture = _poisson_fixture()
    for label in catalog.dual_names():
        entry = catalog.dual_entry(label)
        samples = entry.sample_grid()
        if "p" in entry.params:
            samples = [{"p": "1/2"}, {"p": "-1/2"}, {"p": "1/3"}]
        for sample in samples[:3]:
            gd = catalog.load_dual(label, sample).to_nonstandard()
            res = bialgebra.find_r(g, gd)
            tag = f"{label} {sample}" if sample else label
            if label in COBOUNDARY_LABELS:
                sub = {param(k): v for k, v in _params(sample).items()}
                r_expect = _fixture_rmatrix(label, sample)
                ok = res.found and res.r.eq(r_expect) and not res.kernel
                rep.add(f"{tag}: recovers the golden r-matrix", ok)
                dual_back = bialgebra.cocommutator_from_r(g, res.r)
                rep.add(f"{tag}: cobracket reproduces the dual",
                        dual_back.eq_constants(gd))
                cls = bialgebra.classify_r(g, res.r)
                rep.add(f"{tag}: kind", cls.kind == fixture["kinds"][label],
                        expected=fixture["kinds"][label], computed=cls.kind)
                expect = {
                    tuple(int(x) - 1 for x in k.split(",")): sp.expand(parse_exact(c).subs(sub))
                    for k, c in fixture["schouten"][label].items()
                }
                got = cls.schouten_wedge
                same = set(expect) == set(got) and all(
                    is_zero_expr(sp.expand(expect[k] - got[k])) for k in expect
                )
                rep.add(f"{tag}: schouten coefficients", same,
                        expected={str(k): str(v) for k, v in expect.items()},
                        computed={str(k): str(v) for k, v in got.items()})
            else:
                nonzero = res.found and bool(res.r.coeffs)
                rep.add(f"{tag}: no nonzero coboundary structure", not nonzero,
                        computed="r = 0 only" if res.found else "inconsistent")
    return rep.finish()


def _suite_poisson() -> ReproductionReport:
    rep = ReproductionReport(command="reproduce-table VI")
    for label in COBOUNDARY_LABELS:
        params = {"p": "1/2"} if "p" in label else None
        sub = poisson_report(label, params)
        for item in sub.items:
            rep.items.append(item)
        if "p" in label:
            sub2 = poisson_report(label, {"p": "-1/2"})
            for item in sub2.items:
                rep.items.append(item)
    return rep.finish()


def _suite_doubles() -> ReproductionReport:
    rep = ReproductionReport(command="reproduce-table VII")
    for label in manin.double_table_rows():
        entry = catalog.dual_entry(label)
        for sample in entry.sample_grid()[:2]:
            d = manin.build_double(dual=label, params=sample)
            fix = manin.fixture_tensor(label, sample)
            tag = f"{label} {sample}" if sample else label
            rep.add(f"{tag}: canonical double valid + pairing invariant",
                    validate_structure(d.algebra, matrix_form=False).ok
                    and manin.pairing_ad_invariant(d.algebra, d.pairing))
            rep.add(f"{tag}: presented brackets match the golden table",
                    d.presented.eq_constants(fix))
    appendix = verify_appendix_report()
    rep.items.extend(appendix.items)
    # the explicit two-family transformation on epsilon samples
    for eps1 in (1, -1):
        for eps2 in (1, -1):
            src = manin.build_double(dual="C3+A_eps.i", params={"eps": eps1})
            dst = manin.build_double(dual="C3+A_eps.ii", params={"eps": eps2})
            ok = True
            for (a, b) in ((1, 1), (2, -1)):
                C = manin.section6_matrix(eps1, eps2, a, b, 2, -1, 3, "1/2")
                res = manin.verify_manin_iso(dst, src, C)
                if not (res.bracket_ok and res.invertible):
                    ok = False
            rep.add(f"two-family transformation eps=({eps1},{eps2})", ok)
    t1 = theorem1_report()
    rep.items.extend(t1.items)
    return rep.finish()


def reproduce_table(table: str) -> ReproductionReport:
    table = table.upper().strip()
    suites = {
        "IV": _suite_duals,
        "V": _suite_rmatrices,
        "VI": _suite_poisson,
        "VII": _suite_doubles,
    }
    if table not in suites:
        raise KeyError(f"unknown table {table!r}; choose from {sorted(suites)}")
    return suites[table]()
