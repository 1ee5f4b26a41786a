"""Command-line front end.

Every task writes one deterministic report (JSON with sorted keys, or
markdown) and exits 0 when all of its checks pass, 1 when a check fails and
2 on a bad configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import __version__, battery, sl2model
from . import exactlin as el
from . import lagrange as lg
from . import poisson as ps
from .degen import (build_g_d_eta, complexify_subspace, is_lagrangian_I, limit_H,
                    real_points, real_structure_test)
from .liealg import DomainError, build_chevalley
from .manin import compact_triple
from .rootsys import (CapabilityError, Z_sigma, build_root_system, enumerate_extended_signatures,
                      parse_algebra, parse_diagram, parse_signature, signature,
                      signature_sets, weyl_enumerate)

TASKS = ("roots", "signatures", "build", "check", "normalizer", "model-point", "components",
         "drinfeld", "pi", "limit", "complexify", "sl2-demo", "suite")
ALIASES = {"limits": "limit", "sl2": "sl2-demo", "model": "model-point"}
FORMATS = ("json", "md")


class ConfigError(ValueError):
    pass


@dataclass
class JobConfig:
    task: str
    algebra: str = "A2"
    sigma: str | None = None
    diagram: str = "id"
    chars: str | None = None
    H: str | None = None
    seed: int = 0
    out: str | None = None
    format: str = "json"

    def validate(self) -> "JobConfig":
        self.task = ALIASES.get(self.task, self.task)
        if self.task not in TASKS:
            raise ConfigError(f"unknown task {self.task!r}; choose from {', '.join(TASKS)}")
        if self.format in ("markdown",):
            self.format = "md"
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}")
        if not isinstance(self.seed, int):
            raise ConfigError("seed must be an integer")
        return self


def _fractions(text: str | None, rank: int, what: str):
    if text is None:
        return None
    try:
        vals = tuple(Fraction(x.strip()) for x in str(text).split(","))
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"cannot parse {what} {text!r}") from None
    if len(vals) != rank:
        raise ConfigError(f"{what} needs {rank} comma-separated values")
    return vals


class Report:
    def __init__(self, cfg: JobConfig):
        self.cfg = cfg
        self.checks = []
        self.data = {}

    def check(self, name: str, anchor: str, ok: bool) -> bool:
        self.checks.append({"name": name, "anchor": anchor, "passed": bool(ok)})
        return bool(ok)

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def failures(self):
        return [c["name"] for c in self.checks if not c["passed"]]

    def to_json(self) -> dict:
        cfg = {k: v for k, v in asdict(self.cfg).items() if k not in ("out", "format")}
        return {"task": self.cfg.task, "version": __version__, "config": cfg,
                "passed": self.passed, "checks": self.checks, "data": self.data}


# ---------------------------------------------------------------- setup helpers

class Context:
    def __init__(self, cfg: JobConfig):
        try:
            kind, rank = parse_algebra(cfg.algebra)
            self.rs = build_root_system(kind, rank)
        except (CapabilityError, ValueError) as exc:
            raise ConfigError(str(exc)) from None
        self.cfg = cfg
        self._g = None
        try:
            self.d = parse_diagram(self.rs, cfg.diagram)
        except (ValueError, CapabilityError) as exc:
            raise ConfigError(f"bad diagram {cfg.diagram!r}: {exc}") from None

    @property
    def g(self):
        if self._g is None:
            self._g = build_chevalley(self.rs)
        return self._g

    def sigma(self, default=1):
        if self.cfg.sigma is None:
            return signature((default,) * self.rs.rank, self.d)
        try:
            return parse_signature(self.cfg.sigma, self.rs.rank, self.d)
        except (ValueError, DomainError) as exc:
            raise ConfigError(f"bad signature {self.cfg.sigma!r}: {exc}") from None

    def chars(self):
        s = _fractions(self.cfg.chars, self.rs.rank, "characters")
        if s is not None and any(x <= 0 for x in s):
            raise ConfigError("characters must be positive rationals")
        return s

    def H(self):
        return _fractions(self.cfg.H, self.rs.rank, "H weights")

    def subject(self):
        """The Lagrangian named by --sigma/--diagram, translated by --chars if given."""
        sig = self.sigma()
        s = self.chars()
        if s is not None:
            if not self.d.is_identity:
                raise ConfigError("--chars needs the identity diagram")
            return f"l_H[{battery.sig_label(sig)}]", sig, lg.l_H_sigma(self.g, sig, s)
        return f"l[{battery.d_label(self.d)};{battery.sig_label(sig)}]", sig, lg.build_l_d_sigma(self.g, self.d, sig)


def _space(W) -> dict:
    return W.to_json()


def _axioms(rep: Report, g, label: str, l):
    fails = lg.lagrangian_failures(l, g)
    for ax in ("dimension", "isotropy", "closure"):
        rep.check(f"{label}: {ax}", f"lagrangian-{ax}", ax not in fails)


# ---------------------------------------------------------------- tasks

def task_roots(ctx: Context, rep: Report):
    rs = ctx.rs
    rep.data = {"root_system": rs.to_json(), "weyl_order": len(weyl_enumerate(rs))}
    rep.check("roots closed under negation", "root-system", all(rs.is_root(tuple(-x for x in a)) for a in rs.roots))
    rep.check("positives are half the roots", "root-system", 2 * len(rs.positives) == len(rs.roots))


def task_signatures(ctx: Context, rep: Report):
    rs = ctx.rs
    rows = []
    for sig in enumerate_extended_signatures(rs, ctx.d):
        S, plus, supp = signature_sets(rs, sig)
        rows.append({"sigma": battery.sig_label(sig), "support": [i + 1 for i in S],
                     "nowhere_zero": sig.nowhere_zero, "sigma_plus": [list(a) for a in plus],
                     "Z_order": Z_sigma(rs, sig).order})
        rep.check(f"{battery.sig_label(sig)}: constant on d-orbits", "extended-signature",
                  all(sig.values[ctx.d(i)] == v for i, v in enumerate(sig.values)))
    rep.data = {"diagram": battery.d_label(ctx.d), "signatures": rows}


def task_build(ctx: Context, rep: Report):
    label, sig, l = ctx.subject()
    _axioms(rep, ctx.g, label, l)
    rep.data = {"label": label, "subspace": _space(l)}


def task_check(ctx: Context, rep: Report):
    g = ctx.g
    if ctx.cfg.sigma is not None or ctx.cfg.chars is not None:
        label, _, l = ctx.subject()
        items = [(label, l)]
    else:
        items = battery.named_lagrangians(g)
        items += [(label, l) for label, _, _, l in battery.l_d_sigma_family(g)]
    for label, l in items:
        _axioms(rep, g, label, l)
    rep.data = {"subalgebras": [label for label, _ in items]}


def task_normalizer(ctx: Context, rep: Report):
    g = ctx.g
    label, sig, l = ctx.subject()
    N = lg.normalizer_in(g, l)
    z = g.l - len(sig.support)
    if sig.nowhere_zero:
        rep.check(f"{label}: self-normalizing", "real-form-normalizer", N == l)
    if ctx.cfg.chars is None:
        rep.check(f"{label}: dim g - dim N = dim_C g - dim_C z_sigma", "orbit-dimension", g.dim - N.dim == g.n - z)
    rep.data = {"label": label, "normalizer": _space(N), "normalizer_dim": N.dim}


def task_model_point(ctx: Context, rep: Report):
    g = ctx.g
    label, _, l = ctx.subject()
    t = compact_triple(g)
    T = ps.T_map(t, l)
    model = lg.is_model_point(g, l)
    rep.check(f"{label}: model point iff T(l) = l", "t-map-fixed-points", model == (T == l))
    rep.check(f"{label}: T(l) is a model point", "t-map-image", lg.is_model_point(g, T))
    rep.data = {"label": label, "model_point": model, "in_L0": lg.in_L0(g, l, ctx.cfg.seed),
                "T": _space(T), "l_cap_k_dim": lg.intersect_with_k(g, l).dim}


def task_components(ctx: Context, rep: Report):
    g = ctx.g
    try:
        strata = lg.enumerate_strata(g)
    except CapabilityError as exc:
        raise ConfigError(str(exc)) from None
    rows = []
    for ld in strata:
        dim = lg.formula_dim(g, ld)
        ess = lg.is_essential(ld, g.rs)
        rows.append(dict(ld.to_json(), dim=dim, essential=ess))
        rep.check(f"S={[i + 1 for i in ld.S]} eps={ld.epsilon}: formula = stratum dimension",
                  "component-dimension", dim == lg.stratum_dimension(g, ld))
    rep.data = {"strata": rows, "strata_count": len(rows),
                "essential_count": sum(r["essential"] for r in rows)}


def task_drinfeld(ctx: Context, rep: Report):
    g = ctx.g
    if not ctx.d.is_identity:
        raise ConfigError("the pi_{H,sigma} formula needs the identity diagram")
    sig = ctx.sigma()
    s = ctx.chars() or (Fraction(2),) * g.l
    l = lg.l_H_sigma(g, sig, s)
    kt = lg.kt_criterion(g, sig, s)
    rep.data = {"sigma": battery.sig_label(sig), "chars": [el.frac_str(x) for x in s], "criterion": kt,
                "l_H_sigma": _space(l)}
    rep.check("l_H_sigma cap k = t iff criterion", "kt-criterion", (lg.intersect_with_k(g, l) == g.t) == kt)
    try:
        spec = ps.pi_H_sigma(g, sig, s)
    except DomainError as exc:
        rep.data["singular"] = str(exc)
        rep.check("pi_{H,sigma} coefficients regular", "pi-H-sigma-formula", False)
        return
    rep.data["coefficients"] = {str(list(a)): el.frac_str(c) for a, c in ps.pi_H_sigma_coefficients(g, sig, s).items()}
    scale = ps.solve_pi_scale(g, sig, s)
    rep.data["scale"] = None if scale is None else el.frac_str(scale)
    rep.check("Drinfeld image of pi_{H,sigma} = l_H_sigma", "drinfeld-map", ps.drinfeld_l_from_pi(spec) == l)


def task_pi(ctx: Context, rep: Report):
    g = ctx.g
    label, _, l = ctx.subject()
    cert = ps.certificate(compact_triple(g), l)
    rep.check(f"{label}: [R,R] vanishes on the annihilator of d_l", "pi-jacobi", cert["jacobi"])
    rep.check(f"{label}: tangency", "pi-tangency", cert["tangency"])
    if cert["model_point"]:
        rep.check(f"{label}: T(l) = l at a model point", "t-map-fixed-points", cert["T_fixed"])
    rep.data = {"label": label, "certificate": cert}


def task_limit(ctx: Context, rep: Report):
    g = ctx.g
    hi = ctx.sigma()
    H = ctx.H() or (Fraction(1),) * g.l
    if any(x < 0 for x in H):
        raise ConfigError("H weights must be non-negative")
    L = lg.build_l_d_sigma(g, ctx.d, hi)
    lim = limit_H(g, L, H)
    rep.check("limit is Lagrangian", "limit-lagrangian", lg.is_lagrangian(lim, g))
    lo_vals = tuple(0 if h else v for v, h in zip(hi.values, H))
    data = {"source": battery.sig_label(hi), "H": [el.frac_str(x) for x in H], "limit": _space(lim)}
    try:
        lo = signature(lo_vals, ctx.d)
    except DomainError:
        lo = None
    if lo is not None:
        data["target"] = battery.sig_label(lo)
        rep.check(f"limit = l[{battery.d_label(ctx.d)};{battery.sig_label(lo)}]", "limit-family",
                  lim == lg.build_l_d_sigma(g, ctx.d, lo))
    ht = battery.h_tau(g, ctx.d)
    tn = el.subspace_sum(g.t, g.nplus)
    T = ps.T_map(compact_triple(g), lim)
    data["limit_is_h_tau_plus_n"] = lim == el.subspace_sum(ht, g.nplus)
    data["dim_h_tau_cap_t"] = el.intersect(ht, g.t).dim
    data["T_limit_is_t_plus_n"] = T == tn
    data["T_limit"] = _space(T)
    rep.check("T(limit) is a model point", "t-map-image", lg.is_model_point(g, T))
    rep.data = data


def task_complexify(ctx: Context, rep: Report):
    g = ctx.g
    label, sig, l = ctx.subject()
    W = complexify_subspace(g, l)
    rep.check(f"{label}: I-Lagrangian", "complexification-lagrangian", is_lagrangian_I(g, W) == lg.is_lagrangian(l, g))
    rep.check(f"{label}: tau-stable", "complexification-real-structure", real_structure_test(g, W))
    rep.check(f"{label}: real points recover l", "complexification-real-points", real_points(g, W) == l)
    if ctx.cfg.chars is None and all(v in (0, 1) for v in sig.values):
        rep.check(f"{label}: equals g_(d,eta)", "g-d-eta", W == build_g_d_eta(g, ctx.d, sig.values))
    rep.data = {"label": label, "complexification": _space(W)}


def task_sl2_demo(ctx: Context, rep: Report):
    r = sl2model.report()
    rep.check("derived brackets equal the reference table", "sl2-bracket-table", r["matches_reference"])
    for k, ok in r["casimirs"].items():
        rep.check(f"{k} is a Casimir", "sl2-casimirs", ok)
    rep.check("Jacobi identity", "sl2-jacobi", r["jacobi"])
    rep.check("sphere family Jacobi for symbolic a", "sphere-family", r["sphere_jacobi_symbolic_a"])
    rep.check("antipodal symmetry exactly at a = 1/2", "sphere-family",
              sl2model.antipodal_solutions() == [Fraction(1, 2)])
    rep.data = r


def task_suite(ctx: Context, rep: Report):
    crits = battery.run_all(ctx.cfg.seed)
    for c in crits:
        rep.check(f"criterion {c.number}: {c.title}", c.anchor, c.passed)
    rep.data = {"criteria": [c.to_json() for c in crits]}


HANDLERS = {"roots": task_roots, "signatures": task_signatures, "build": task_build, "check": task_check,
            "normalizer": task_normalizer, "model-point": task_model_point, "components": task_components,
            "drinfeld": task_drinfeld, "pi": task_pi, "limit": task_limit, "complexify": task_complexify,
            "sl2-demo": task_sl2_demo, "suite": task_suite}


# ---------------------------------------------------------------- output

def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        return "`" + json.dumps(v, sort_keys=True) + "`"
    return str(v)


def render_markdown(rep: Report) -> str:
    scope = {"sl2-demo": "sl2", "suite": "sl2, sl3"}.get(rep.cfg.task, rep.cfg.algebra)
    lines = [f"# {rep.cfg.task} ({scope})", "",
             f"Result: **{'PASS' if rep.passed else 'FAIL'}**", ""]
    if rep.cfg.task == "sl2-demo":
        lines += ["| bracket | value |", "|---|---|"]
        lines += [f"| {b['pair']} | {b['value']} |" for b in rep.data["brackets"]]
        lines += ["", f"Scale against the reference table: {rep.data['scale']}", "",
                  "| Casimir | verdict |", "|---|---|"]
        lines += [f"| {k} | {'Casimir' if ok else 'not Casimir'} |" for k, ok in sorted(rep.data["casimirs"].items())]
        lines.append("")
    lines += ["| check | anchor | result |", "|---|---|---|"]
    lines += [f"| {c['name']} | {c['anchor']} | {'PASS' if c['passed'] else 'FAIL'} |" for c in rep.checks]
    if rep.cfg.task != "sl2-demo":
        lines += ["", "## Data", ""]
        lines += [f"- {k}: {_cell(v)}" for k, v in sorted(rep.data.items())]
    return "\n".join(lines) + "\n"


def render(rep: Report) -> str:
    if rep.cfg.format == "md":
        return render_markdown(rep)
    return json.dumps(rep.to_json(), sort_keys=True, indent=2, default=str) + "\n"


def run(cfg: JobConfig) -> int:
    cfg.validate()
    ctx = Context(cfg)
    rep = Report(cfg)
    HANDLERS[cfg.task](ctx, rep)
    text = render(rep)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not rep.passed:
        for name in rep.failures():
            print(f"FAILED: {name}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------- argument parsing

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lagr", description="Exact checks for Lagrangian subalgebras.")
    p.add_argument("task_pos", nargs="?", metavar="task", help="one of: " + ", ".join(TASKS))
    p.add_argument("--task", dest="task_flag")
    p.add_argument("--config", help="JSON file with any of the flag names as keys")
    p.add_argument("--algebra")
    p.add_argument("--sigma")
    p.add_argument("--diagram")
    p.add_argument("--chars")
    p.add_argument("--H", dest="H")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--format")
    p.add_argument("--version", action="version", version=__version__)
    return p


def config_from_args(args) -> JobConfig:
    values = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object")
        known = set(JobConfig.__dataclass_fields__)
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        values.update(raw)
    for key in ("algebra", "sigma", "diagram", "chars", "H", "seed", "out", "format"):
        v = getattr(args, key)
        if v is not None:
            values[key] = v
    task = args.task_flag or args.task_pos or values.pop("task", None)
    values.pop("task", None)
    if not task:
        raise ConfigError("no task given")
    for key in ("chars", "H", "sigma"):
        if isinstance(values.get(key), list):
            values[key] = ",".join(str(x) for x in values[key])
    return JobConfig(task=task, **values)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        return run(cfg)
    except (ConfigError, TypeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
