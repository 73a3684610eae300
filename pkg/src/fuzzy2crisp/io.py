"""JSON documents for fuzzy and crisp rule bases.

Infinite trapezoid parameters are written as the strings ``"-inf"`` and
``"inf"``; intervals in crisp regions use the bracket notation of
:meth:`Interval.parse`, e.g. ``"(-inf, 4.96]"``.  A crisp document embeds its
source fuzzy base so that comparison conditions can be evaluated from the file
alone.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .fuzzy import (
    MODES,
    FuzzyRule,
    FuzzyRuleBase,
    LinguisticVariable,
    RuleBaseError,
    TrapezoidalFuzzySet,
)
from .miner import GEOMETRIES, ComparisonCondition, CrispRule, CrispRuleBase, ScoreSumCondition
from .regions import Hyperrectangle, Interval, Region

FUZZY_KIND = "fuzzy-rule-base"
CRISP_KIND = "crisp-rule-base"


class DocumentError(ValueError):
    """A rule-base document is malformed; the message starts with its location."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


def _number_out(v: float):
    if v == math.inf:
        return "inf"
    if v == -math.inf:
        return "-inf"
    return v


def _number_in(v, where: str) -> float:
    if isinstance(v, bool):
        raise DocumentError(where, f"expected a number, got {v!r}")
    if isinstance(v, (int, float)):
        out = float(v)
    elif isinstance(v, str) and v.strip().lower() in ("inf", "+inf", "-inf"):
        out = float(v)
    else:
        raise DocumentError(where, f"expected a number or \"-inf\"/\"inf\", got {v!r}")
    if math.isnan(out):
        raise DocumentError(where, "NaN is not allowed")
    return out


def _require(doc: dict, key: str, where: str, kind=None):
    if not isinstance(doc, dict):
        raise DocumentError(where, "expected an object")
    if key not in doc:
        raise DocumentError(where, f"missing field {key!r}")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise DocumentError(f"{where}.{key}" if where else key, f"expected {kind.__name__}, got {type(value).__name__}")
    return value


def _int(v, where: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise DocumentError(where, f"expected an integer, got {v!r}")
    return v


def interval_from_text(text, where: str) -> Interval:
    if not isinstance(text, str):
        raise DocumentError(where, f"expected an interval string, got {text!r}")
    try:
        return Interval.parse(text)
    except ValueError as exc:
        raise DocumentError(where, str(exc))


def fuzzy_to_dict(base: FuzzyRuleBase) -> dict:
    variables = []
    for var in base.variables:
        entry = {"name": var.name}
        if not var.domain.is_full:
            entry["domain"] = str(var.domain)
        entry["labels"] = [{"name": fs.label, "params": [_number_out(p) for p in fs.params]} for fs in var.labels]
        variables.append(entry)
    rules = []
    for rule in base.rules:
        entry = {"antecedent": [[base.variables[j].name, label] for j, label in rule.antecedent]}
        if sum(rule.scores) == 1:
            entry["class"] = rule.consequent
        else:
            entry["scores"] = list(rule.scores)
        rules.append(entry)
    return {
        "kind": FUZZY_KIND,
        "n_classes": base.n_classes,
        "max_antecedent": base.max_antecedent,
        "mode": base.mode,
        "variables": variables,
        "rules": rules,
    }


def fuzzy_from_dict(doc: dict, where: str = "") -> FuzzyRuleBase:
    def at(suffix):
        return f"{where}.{suffix}" if where else suffix

    if not isinstance(doc, dict):
        raise DocumentError(where, "expected an object")
    kind = doc.get("kind", FUZZY_KIND)
    if kind != FUZZY_KIND:
        raise DocumentError(at("kind"), f"expected {FUZZY_KIND!r}, got {kind!r}")
    n_classes = _int(_require(doc, "n_classes", where), at("n_classes"))
    if n_classes < 1:
        raise DocumentError(at("n_classes"), "must be >= 1")
    mode = doc.get("mode", "sufficient")
    if mode not in MODES:
        raise DocumentError(at("mode"), f"unknown inference mode {mode!r}, expected one of {MODES}")
    max_ante = doc.get("max_antecedent")
    if max_ante is not None:
        max_ante = _int(max_ante, at("max_antecedent"))

    variables = []
    for i, vdoc in enumerate(_require(doc, "variables", where, list)):
        vw = at(f"variables[{i}]")
        name = _require(vdoc, "name", vw, str)
        domain = Interval.full()
        if "domain" in vdoc:
            domain = interval_from_text(vdoc["domain"], f"{vw}.domain")
        labels = []
        for k, ldoc in enumerate(_require(vdoc, "labels", vw, list)):
            lw = f"{vw}.labels[{k}]"
            label = _require(ldoc, "name", lw, str)
            params = _require(ldoc, "params", lw, list)
            if len(params) != 4:
                raise DocumentError(f"{lw}.params", f"trapezoid {label!r} needs 4 parameters, got {len(params)}")
            values = [_number_in(p, f"{lw}.params[{n}]") for n, p in enumerate(params)]
            try:
                labels.append(TrapezoidalFuzzySet(label, *values))
            except RuleBaseError as exc:
                raise DocumentError(lw, str(exc))
        try:
            variables.append(LinguisticVariable(name, tuple(labels), domain))
        except RuleBaseError as exc:
            raise DocumentError(vw, str(exc))

    by_name = {v.name: j for j, v in enumerate(variables)}
    rules = []
    rule_docs = _require(doc, "rules", where, list)
    if not rule_docs:
        raise DocumentError(at("rules"), "rule list is empty")
    for i, rdoc in enumerate(rule_docs):
        rw = at(f"rules[{i}]")
        pairs = []
        for k, pair in enumerate(_require(rdoc, "antecedent", rw, list)):
            pw = f"{rw}.antecedent[{k}]"
            if not (isinstance(pair, list) and len(pair) == 2):
                raise DocumentError(pw, "expected a [variable, label] pair")
            var, label = pair
            if isinstance(var, str):
                if var not in by_name:
                    raise DocumentError(pw, f"unknown variable {var!r}")
                j = by_name[var]
            else:
                j = _int(var, pw)
                if not 0 <= j < len(variables):
                    raise DocumentError(pw, f"feature index {j} outside 0..{len(variables) - 1}")
            if label not in variables[j].label_names:
                raise DocumentError(pw, f"variable {variables[j].name!r} has no label {label!r}")
            pairs.append((j, label))
        try:
            if "scores" in rdoc:
                scores = rdoc["scores"]
                if not isinstance(scores, list):
                    raise DocumentError(f"{rw}.scores", "expected a list")
                rules.append(FuzzyRule(tuple(pairs), tuple(_int(s, f"{rw}.scores") for s in scores)))
            else:
                cls = _int(_require(rdoc, "class", rw), f"{rw}.class")
                rules.append(FuzzyRule.for_class(tuple(pairs), cls, n_classes))
        except RuleBaseError as exc:
            raise DocumentError(rw, str(exc))
    try:
        return FuzzyRuleBase(tuple(variables), tuple(rules), n_classes, max_ante, mode)
    except RuleBaseError as exc:
        raise DocumentError(where, str(exc))


def _condition_to_dict(cond) -> dict | None:
    if cond is None:
        return None
    if isinstance(cond, ComparisonCondition):
        return {"type": "comparison", "subjects": list(cond.subjects), "rivals": list(cond.rivals)}
    return {"type": "score_sum", "class": cond.subject_class, "rivals": list(cond.rivals)}


def crisp_to_dict(crb: CrispRuleBase) -> dict:
    rules = []
    for rule in crb.rules:
        rules.append(
            {
                "subset": list(rule.subset),
                "region": [[str(iv) for iv in box.dims] for box in rule.region.boxes],
                "condition": _condition_to_dict(rule.condition),
                "class": rule.consequent,
            }
        )
    return {
        "kind": CRISP_KIND,
        "mode": crb.mode,
        "geometry": crb.geometry,
        "source": fuzzy_to_dict(crb.source),
        "rules": rules,
    }


def _index_list(values, limit: int, where: str) -> tuple[int, ...]:
    if not isinstance(values, list) or not values:
        raise DocumentError(where, "expected a non-empty list of indices")
    out = tuple(_int(v, where) for v in values)
    for v in out:
        if not 0 <= v < limit:
            raise DocumentError(where, f"index {v} outside 0..{limit - 1}")
    return out


def crisp_from_dict(doc: dict) -> CrispRuleBase:
    if not isinstance(doc, dict):
        raise DocumentError("", "expected an object")
    if doc.get("kind") != CRISP_KIND:
        raise DocumentError("kind", f"expected {CRISP_KIND!r}, got {doc.get('kind')!r}")
    mode = _require(doc, "mode", "")
    if mode not in MODES:
        raise DocumentError("mode", f"unknown mode {mode!r}")
    geometry = _require(doc, "geometry", "")
    if geometry not in GEOMETRIES:
        raise DocumentError("geometry", f"unknown geometry {geometry!r}")
    source = fuzzy_from_dict(_require(doc, "source", ""), "source")
    m, n_rules, n_classes = source.n_features, source.n_rules, source.n_classes
    rules = []
    for i, rdoc in enumerate(_require(doc, "rules", "", list)):
        rw = f"rules[{i}]"
        subset = _index_list(_require(rdoc, "subset", rw), n_rules, f"{rw}.subset")
        boxes = []
        for b, bdoc in enumerate(_require(rdoc, "region", rw, list)):
            bw = f"{rw}.region[{b}]"
            if not isinstance(bdoc, list) or len(bdoc) != m:
                raise DocumentError(bw, f"expected {m} intervals")
            boxes.append(Hyperrectangle(tuple(interval_from_text(t, f"{bw}[{j}]") for j, t in enumerate(bdoc))))
        region = Region(m, tuple(boxes))
        if region.is_empty:
            raise DocumentError(f"{rw}.region", "region is empty")
        cls = _int(_require(rdoc, "class", rw), f"{rw}.class")
        if not 0 <= cls < n_classes:
            raise DocumentError(f"{rw}.class", f"class {cls} outside 0..{n_classes - 1}")
        cdoc = rdoc.get("condition")
        cond = None
        if cdoc is not None:
            cw = f"{rw}.condition"
            ctype = _require(cdoc, "type", cw)
            if ctype == "comparison":
                cond = ComparisonCondition(
                    _index_list(_require(cdoc, "subjects", cw), n_rules, f"{cw}.subjects"),
                    _index_list(_require(cdoc, "rivals", cw), n_rules, f"{cw}.rivals"),
                )
            elif ctype == "score_sum":
                cond = ScoreSumCondition(
                    _int(_require(cdoc, "class", cw), f"{cw}.class"),
                    _index_list(_require(cdoc, "rivals", cw), n_classes, f"{cw}.rivals"),
                )
            else:
                raise DocumentError(f"{cw}.type", f"unknown condition type {ctype!r}")
            if (mode == "sufficient") != (ctype == "comparison"):
                raise DocumentError(f"{cw}.type", f"{ctype!r} condition in a {mode} rule base")
        rules.append(CrispRule(region, cls, cond, subset))
    return CrispRuleBase(tuple(rules), mode, geometry, source)


def _pretty(value, depth: int = 0) -> str:
    """JSON with one item per line, except lists of scalars which stay inline."""
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(value, dict) and value:
        items = [f"{inner}{json.dumps(k)}: {_pretty(v, depth + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        items = [inner + _pretty(v, depth + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(value)


def dumps(obj) -> str:
    if isinstance(obj, FuzzyRuleBase):
        return _pretty(fuzzy_to_dict(obj)) + "\n"
    if isinstance(obj, CrispRuleBase):
        return _pretty(crisp_to_dict(obj)) + "\n"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def loads(text: str):
    """Parse a fuzzy or crisp document, dispatching on its ``kind`` field."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}", exc.msg)
    if isinstance(doc, dict) and doc.get("kind") == CRISP_KIND:
        return crisp_from_dict(doc)
    return fuzzy_from_dict(doc)


def load(path) -> FuzzyRuleBase | CrispRuleBase:
    return loads(Path(path).read_text(encoding="utf-8"))


def load_fuzzy(path) -> FuzzyRuleBase:
    obj = load(path)
    if not isinstance(obj, FuzzyRuleBase):
        raise DocumentError("kind", f"{path} holds a crisp rule base, expected a fuzzy one")
    return obj


def load_crisp(path) -> CrispRuleBase:
    obj = load(path)
    if not isinstance(obj, CrispRuleBase):
        raise DocumentError("kind", f"{path} holds a fuzzy rule base, expected a crisp one")
    return obj


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")
