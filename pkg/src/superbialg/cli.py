"""Thin command-line client over the report handlers.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.
All command-line parameters are exact rationals ("1/2"); floating point is
rejected.  `--format json` output is byte-stable across runs.
"""
from __future__ import annotations

import json
import sys

import click

from . import api, catalog


def _split_params(param_list) -> dict:
    out = {}
    for item in param_list:
        if "=" not in item:
            raise click.UsageError(f"--param expects name=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _emit(report, fmt: str):
    if fmt == "json":
        click.echo(api.report_json(report))
    elif fmt == "csv":
        click.echo("name,status,detail")
        for item in report.items:
            detail = (item.detail or "").replace('"', "'")
            click.echo(f'"{item.name}",{item.status},"{detail}"')
    else:
        width = max((len(i.name) for i in report.items), default=10)
        for item in report.items:
            mark = {"pass": "ok", "fail": "FAIL", "evidence": "info"}[item.status]
            line = f"{item.name:<{width}}  {mark}"
            if item.status == "fail" and item.expected is not None:
                line += f"  expected={item.expected} computed={item.computed}"
            click.echo(line)
        click.echo(
            f"-- {report.summary.get('pass', 0)} passed, "
            f"{report.summary.get('fail', 0)} failed, "
            f"{report.summary.get('evidence', 0)} informational"
        )
    sys.exit(0 if report.passed else 1)


FMT = click.option("--format", "fmt", type=click.Choice(["json", "csv", "table"]),
                   default="table", show_default=True)
PARAM = click.option("--param", "params", multiple=True,
                     help="exact rational parameter, e.g. --param p=1/2")


@click.group()
def main():
    """Exact verification suite for the gl(1|1) superbialgebra catalog."""


@main.command("check-algebra")
@click.option("--name", default=None, help="catalog label (e.g. gl11, D5, C3+A)")
@click.option("--file", "file_", type=click.Path(exists=True), default=None,
              help="algebra JSON document")
@PARAM
@FMT
def check_algebra(name, file_, params, fmt):
    if name is None and file_ is None:
        raise click.UsageError(
            "provide --name or --file; valid labels: "
            + ", ".join(sorted(catalog.catalog_names()))
        )
    doc = open(file_).read() if file_ else None
    try:
        report = api.check_algebra(name, doc, _split_params(params))
    except KeyError as exc:
        raise click.UsageError(str(exc))
    _emit(report, fmt)


@main.command("classify-duals")
@click.option("--param-p", "p", default="1/2", show_default=True)
@FMT
def classify_duals(p, fmt):
    _emit(api.classify_duals(p), fmt)


@main.command("schouten")
@click.option("--label", default=None, help="coboundary row label")
@click.option("--r", "r_json", default=None,
              help='sparse r-matrix JSON: [{"i":1,"j":2,"re":"1","im":"0"}, ...]')
@PARAM
@FMT
def schouten(label, r_json, params, fmt):
    if label is None and r_json is None:
        raise click.UsageError("provide --label or --r")
    try:
        _emit(api.schouten_report(label, r_json, _split_params(params)), fmt)
    except KeyError as exc:
        raise click.UsageError(str(exc))


@main.command("find-r")
@click.option("--dual", required=True, help="dual label, e.g. C2_1+A11.i")
@PARAM
@FMT
def find_r(dual, params, fmt):
    try:
        _emit(api.find_r_report(dual, _split_params(params)), fmt)
    except KeyError as exc:
        raise click.UsageError(str(exc))


@main.command("poisson-gl11")
@click.option("--r", "label", default="C2_-1+A11.ii", show_default=True,
              help="coboundary row label selecting the r-matrix")
@click.option("--pairs", default="all", show_default=True,
              help='"all" or a ;-separated list like "y,psi;y,chi"')
@PARAM
@FMT
def poisson_gl11(label, pairs, params, fmt):
    try:
        _emit(api.poisson_report(label, _split_params(params), pairs), fmt)
    except KeyError as exc:
        raise click.UsageError(str(exc))


@main.command("build-double")
@click.option("--dual", default="I22", show_default=True)
@PARAM
@FMT
def build_double(dual, params, fmt):
    try:
        _emit(api.build_double_report(dual, _split_params(params)), fmt)
    except KeyError as exc:
        raise click.UsageError(str(exc))


@main.command("verify-appendix-a")
@FMT
def verify_appendix(fmt):
    _emit(api.verify_appendix_report(), fmt)


@main.command("theorem1")
@click.option("--param-p", "p", default="1/2", show_default=True)
@FMT
def theorem1(p, fmt):
    _emit(api.theorem1_report(p), fmt)


@main.command("osp-invariants")
@click.option("--kmax", default=3, show_default=True, type=int)
@click.option("--chart", type=click.Choice(["real", "complex"]), default="real",
              show_default=True)
@FMT
def osp_invariants(kmax, chart, fmt):
    if kmax < 1:
        raise click.UsageError("kmax must be at least 1")
    _emit(api.osp_report(kmax, chart), fmt)


@main.command("quantize")
@click.option("--prop", type=click.Choice(["P3", "P4", "P5", "P6"]), default="P3",
              show_default=True)
@click.option("--lambda", "lam", default=None, help="exact rational for P6")
@click.option("--order", default=8, show_default=True, type=int)
@click.option("--reading", type=click.Choice(["poly", "exp"]), default="poly",
              show_default=True, help="which reading of the ambiguous relation")
@FMT
def quantize_cmd(prop, lam, order, reading, fmt):
    _emit(api.quantize_report(prop, lam, order, reading), fmt)


@main.command("rtt-check")
@FMT
def rtt_check(fmt):
    _emit(api.rtt_report(), fmt)


@main.command("quantum-r")
@FMT
def quantum_r(fmt):
    _emit(api.quantum_r_report(), fmt)


@main.command("reproduce-table")
@click.option("--table", type=click.Choice(["IV", "V", "VI", "VII"]), required=True)
@FMT
def reproduce_table(table, fmt):
    _emit(api.reproduce_table(table), fmt)


if __name__ == "__main__":
    main()
