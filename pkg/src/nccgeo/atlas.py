"""The classification table of irreducible ncc symmetric Lie algebras,
shipped as embedded JSON and validated on load.

Each row records the algebra, its Cartan dual, the fixed algebra, the
real ranks r and s, the type tag, the restricted root system, the causal
Euler element labels, and the g_1 dimension formula.  The rank relation
of a type tag (complex/nonsplit: r = 2s, cayley/split: r = s) is checked
over the row's parameter domain by the tiny arithmetic interpreter.
"""

from __future__ import annotations

import ast
import itertools
import json
import operator
from dataclasses import dataclass
from importlib import resources

from .errors import AtlasError
from .grading import canonical_euler
from .liecore import AlgebraDescriptor, build_algebra

__all__ = ["AtlasRow", "load_atlas", "lookup", "realizable", "eval_formula"]

_RANK_RELATION = {
    "complex": lambda r, s: r == 2 * s,
    "cayley": lambda r, s: r == s,
    "split": lambda r, s: r == s,
    "nonsplit": lambda r, s: r == 2 * s,
}

_BIN_OPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv,
    ast.Div: operator.truediv,
}


def eval_formula(expr: str, env: dict) -> int:
    """Evaluate a row formula like "j*(n-j)" over integer parameters.

    Supported: integers, + - * // /, parentheses, and parameter names;
    "jp" means min(j, n-j) and is derived automatically.
    """
    env = dict(env)
    if "j" in env and "n" in env and "jp" not in env:
        env["jp"] = min(env["j"], env["n"] - env["j"])

    def rec(node):
        if isinstance(node, ast.Expression):
            return rec(node.body)
        if isinstance(node, ast.Constant):
            if not isinstance(node.value, int):
                raise AtlasError(f"non-integer literal in formula {expr!r}")
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise AtlasError(f"unknown parameter {node.id!r} in formula {expr!r}")
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _BIN_OPS:
            return _BIN_OPS[type(node.op)](rec(node.left), rec(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -rec(node.operand)
        raise AtlasError(f"unsupported syntax in formula {expr!r}")

    try:
        value = rec(ast.parse(expr.strip(), mode="eval"))
    except SyntaxError as exc:
        raise AtlasError(f"cannot parse formula {expr!r}") from exc
    if isinstance(value, float):
        if abs(value - round(value)) > 1e-9:
            raise AtlasError(f"formula {expr!r} is not integral on {env}")
        value = int(round(value))
    return value


@dataclass(frozen=True)
class AtlasRow:
    id: str
    type_tag: str
    g_name: str
    gc_name: str
    h_name: str
    g1_name: str
    r: str
    s: str
    root_system: str
    euler_labels: tuple[str, ...]
    g1_dim: str
    params: dict
    realization: dict | None

    def param_samples(self):
        """Iterate dicts over the row's declared parameter domain."""
        if not self.params:
            yield {}
            return
        names, domains = [], []
        dependent = {}
        for name, dom in self.params.items():
            if isinstance(dom, str):
                dependent[name] = dom  # e.g. "1..n-1"
            else:
                names.append(name)
                domains.append(list(dom))
        for combo in itertools.product(*domains) if names else [()]:
            env = dict(zip(names, combo))
            if not dependent:
                yield env
                continue
            for dname, dom in dependent.items():
                lo_s, hi_s = dom.split("..")
                lo = eval_formula(lo_s, env)
                hi = eval_formula(hi_s, env)
                for val in range(lo, hi + 1):
                    yield {**env, dname: val}

    def rank_values(self, env: dict) -> tuple[int, int]:
        return eval_formula(self.r, env), eval_formula(self.s, env)

    def g1_dim_value(self, env: dict) -> int:
        return eval_formula(self.g1_dim, env)

    def validate(self):
        relation = _RANK_RELATION.get(self.type_tag)
        if relation is None:
            raise AtlasError(f"row {self.id}: unknown type tag {self.type_tag!r}")
        for env in self.param_samples():
            r, s = self.rank_values(env)
            if r < 1 or s < 1:
                raise AtlasError(f"row {self.id}: ranks must be positive on {env}")
            if not relation(r, s):
                raise AtlasError(
                    f"row {self.id}: rank relation for {self.type_tag} fails on {env}"
                    f" (r={r}, s={s})"
                )
            if self.g1_dim_value(env) < 1:
                raise AtlasError(f"row {self.id}: empty g_1 on {env}")


def load_atlas() -> list[AtlasRow]:
    """Parse and validate the embedded table."""
    try:
        text = resources.files("nccgeo.data").joinpath("atlas.json").read_text()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise AtlasError(f"cannot load atlas data: {exc}") from exc
    rows = []
    for raw in data["rows"]:
        try:
            row = AtlasRow(
                id=raw["id"],
                type_tag=raw["type_tag"],
                g_name=raw["g_name"],
                gc_name=raw["gc_name"],
                h_name=raw["h_name"],
                g1_name=raw["g1_name"],
                r=str(raw["r"]),
                s=str(raw["s"]),
                root_system=raw["root_system"],
                euler_labels=tuple(raw["euler_labels"]),
                g1_dim=str(raw["g1_dim"]),
                params=raw.get("params", {}),
                realization=raw.get("realization"),
            )
        except KeyError as exc:
            raise AtlasError(f"malformed row {raw.get('id', '?')}: missing {exc}") from exc
        row.validate()
        rows.append(row)
    return rows


def lookup(rows: list[AtlasRow], query: str) -> list[AtlasRow]:
    """Rows matching a name, a type tag, or a root system; [] if none."""
    q = query.strip().lower()
    out = []
    for row in rows:
        names = {row.g_name.lower(), row.gc_name.lower(), row.h_name.lower()}
        if q == row.type_tag.lower() or q in names or q == row.root_system.lower():
            out.append(row)
    return out


def realizable(row: AtlasRow, **params) -> AlgebraDescriptor | None:
    """Matrix descriptor for the sl/so/sp rows; None for the rest.

    Parameters override the row defaults, e.g. realizable(row, n=3).
    """
    if row.realization is None:
        return None
    env = dict(row.realization.get("defaults", {}))
    env.update(params)
    values = [eval_formula(p, env) for p in row.realization["params"]]
    return build_algebra(row.realization["family"], values)


def realization_eulers(row: AtlasRow, alg: AlgebraDescriptor, **params) -> list:
    """The row's causal Euler elements in the realized descriptor."""
    env = dict(row.realization.get("defaults", {})) if row.realization else {}
    env.update(params)
    labels = []
    for template in row.realization["euler"]:
        labels.append(template.format(**env) if "{" in template else template)
    return [canonical_euler(alg, label) for label in labels]
