import argparse
import json
import logging
import sys
from typing import Any, List, Optional

from dotenv import load_dotenv

from tabkit.abtableau import ABTableau, character_ab, enumerate_ab
from tabkit.alphabet import BUILTINS, GradedAlphabet, builtin, naturals
from tabkit.charverify import (
    highest_weight_gl,
    highest_weight_super,
    highest_weight_tableau,
    highest_weight_tableau_gl,
    super_character_window,
)
from tabkit.coeffs import c, c_hat, dual_classes, product_classes
from tabkit.config import TabkitConfig
from tabkit.duality import LevelOneWord, kappa, rho_ab, skew_jdt_ab
from tabkit.exception import ConfigError, TabkitException
from tabkit.insertion import col_insert_tableau, row_insert_tableau
from tabkit.rational import enumerate_rational
from tabkit.shape import as_generalized, as_partition
from tabkit.suites import SUITES, run_suite
from tabkit.switching import enumerate_LR, jdt, lr_count, switch_full
from tabkit.tableau import Tableau
from tabkit.utils.env import parse_pair

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    """Input that parses as arguments but not as a tabkit value"""


def parse_alphabet(text: str, name: str = "A") -> GradedAlphabet:
    """Builtin `name:k`, a JSON alphabet, or comma separated labels.

    A trailing prime on a label (`b1'`) gives the letter parity 1.
    """
    text = text.strip()
    if text.startswith("{"):
        return GradedAlphabet.from_json(_json(text))
    head, _, size = text.partition(":")
    if head in BUILTINS:
        if not size.isdigit():
            raise UsageError(f"builtin alphabet {head!r} needs a size, e.g. {head}:3")
        return builtin(head, int(size))
    labels, parities = [], []
    for raw in (p.strip() for p in text.split(",")):
        if not raw:
            continue
        primed = raw.endswith("'")
        labels.append(raw[:-1] if primed else raw)
        parities.append(1 if primed else 0)
    return GradedAlphabet.from_labels(name, labels, parities)


def _json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"not valid JSON: {text!r} ({e})")


def parse_tableau(text: str, alphabet: Optional[GradedAlphabet], inner=()) -> Tableau:
    """A Tableau JSON object, or a JSON list of label rows over `alphabet`."""
    data = _json(text)
    if isinstance(data, dict):
        return Tableau.from_json(data, alphabet)
    if alphabet is None:
        raise UsageError("rows of labels need an --alphabet")
    return Tableau.from_rows(alphabet, data, inner)


def _read(value: Optional[str]) -> str:
    if value is None or value == "-":
        value = sys.stdin.read()
    if not value.strip():
        raise UsageError("empty input")
    return value


def _canonical(item: Any) -> str:
    return json.dumps(item, sort_keys=True)


def _emit(payload: Any, ascii_text: Optional[str], config: TabkitConfig) -> None:
    if config.output == "ascii" and ascii_text is not None:
        print(ascii_text)
    else:
        print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))


def _emit_many(items: List[Any], config: TabkitConfig, render=None) -> None:
    items = sorted(items, key=lambda x: _canonical(x.to_json()))
    if config.output == "ascii" and render is not None:
        print("\n\n".join(render(x) for x in items))
    else:
        _emit([x.to_json() for x in items], None, config)


def cmd_insert(args, config: TabkitConfig) -> int:
    alphabet = parse_alphabet(args.alphabet) if args.alphabet else None
    t = parse_tableau(args.t, alphabet)
    t2 = parse_tableau(args.t2, alphabet or t.alphabet)
    if args.mode == "col":
        res = col_insert_tableau(t, t2)
    else:
        res = row_insert_tableau(t2, t)
    text = f"{res.result.render_ascii()}\n\n{res.recording.render_ascii()}"
    _emit({"result": res.result.to_json(), "recording": res.recording.to_json()}, text, config)
    return EXIT_OK


def cmd_switch(args, config: TabkitConfig) -> int:
    s_alphabet = parse_alphabet(args.s_alphabet, "S") if args.s_alphabet else naturals(3)
    t_alphabet = parse_alphabet(args.t_alphabet, "T") if args.t_alphabet else s_alphabet.prime()
    s = parse_tableau(args.s, s_alphabet)
    t = parse_tableau(args.t, t_alphabet, s.outer)
    t_new, s_new = switch_full(s, t)
    text = f"{t_new.render_ascii()}\n\n{s_new.render_ascii()}"
    _emit({"t": t_new.to_json(), "s": s_new.to_json()}, text, config)
    return EXIT_OK


def cmd_jdt(args, config: TabkitConfig) -> int:
    alphabet = parse_alphabet(args.alphabet) if args.alphabet else None
    t = parse_tableau(args.t, alphabet, as_partition(_json(args.inner)))
    j, recording = jdt(t)
    text = f"{j.render_ascii()}\n\n{recording.render_ascii()}"
    _emit({"rectification": j.to_json(), "recording": recording.to_json()}, text, config)
    return EXIT_OK


def cmd_lr_count(args, config: TabkitConfig) -> int:
    lam, mu, nu = (as_partition(_json(x)) for x in (args.lam, args.mu, args.nu))
    print(lr_count(lam, mu, nu))
    return EXIT_OK


def cmd_coeff(args, config: TabkitConfig) -> int:
    lam, mu, nu = (as_generalized(_json(x)) for x in (args.lam, args.mu, args.nu))
    value = c(lam, mu, nu) if args.kind == "c" else c_hat(lam, mu, nu)
    if not args.witness:
        print(value)
        return EXIT_OK
    classes = product_classes(lam, mu, nu) if args.kind == "c" else dual_classes(lam, mu, nu)
    payload = {"value": value, "classes": sorted((x.to_json() for x in classes), key=_canonical)}
    text = "\n\n".join([str(value)] + [x.rep.render_ascii() for x in classes])
    _emit(payload, text, config)
    return EXIT_OK


def _alphabet_pair(args, config: TabkitConfig):
    k = config.truncation
    a = parse_alphabet(args.a, "A") if args.a else builtin("zpos", k)
    b = parse_alphabet(args.b, "B") if args.b else builtin("znonpos", k)
    return a, b


def cmd_rsk(args, config: TabkitConfig) -> int:
    a, b = _alphabet_pair(args, config)
    data = _json(_read(args.words))
    if not isinstance(data, list) or not data:
        raise UsageError("rsk needs a non-empty JSON list of [plus, minus] label lists")
    words = [LevelOneWord.of(a, plus, b, minus) for plus, minus in data]
    p_w, q_w = kappa(words)
    text = f"{p_w.render_ascii()}\n\n{q_w.render_ascii()}"
    _emit({"p": p_w.to_json(), "q": q_w.to_json()}, text, config)
    return EXIT_OK


def cmd_lr_ab(args, config: TabkitConfig) -> int:
    t1 = ABTableau.from_json(_json(_read(args.t1)))
    t2 = ABTableau.from_json(_json(args.t2))
    t, cls = rho_ab(t1, t2, args.d)
    text = f"{t.render_ascii()}\n\n{cls.rep.render_ascii()}"
    _emit({"tableau": t.to_json(), "class": cls.to_json()}, text, config)
    return EXIT_OK


def cmd_skew_jdt(args, config: TabkitConfig) -> int:
    x = ABTableau.from_json(_json(_read(args.x)))
    j, cls = skew_jdt_ab(x)
    text = f"{j.render_ascii()}\n\n{cls.rep.render_ascii()}"
    _emit({"tableau": j.to_json(), "class": cls.to_json()}, text, config)
    return EXIT_OK


def cmd_char(args, config: TabkitConfig) -> int:
    lam = as_generalized(_json(args.lam))
    d_cap = config.window[0]
    poly = super_character_window(lam, config.truncation, d_cap, mode=args.mode)
    if args.mode == "super":
        hw, tab = highest_weight_super(lam), highest_weight_tableau(lam)
    else:
        hw, tab = highest_weight_gl(lam), highest_weight_tableau_gl(lam)
    payload = {
        "character": poly.to_json(),
        "highest_weight": hw.to_json(),
        "highest_weight_tableau": tab.to_json(),
    }
    _emit(payload, f"{poly.as_expr()}\n\n{tab.render_ascii()}", config)
    return EXIT_OK


def cmd_enumerate(args, config: TabkitConfig) -> int:
    if args.kind == "lr":
        if not args.mu or not args.nu:
            raise UsageError("enumerate lr needs --mu and --nu")
        lam, mu, nu = (as_partition(_json(x)) for x in (args.shape, args.mu, args.nu))
        _emit_many(list(enumerate_LR(lam, mu, nu)), config, Tableau.render_ascii)
        return EXIT_OK
    shape = as_generalized(_json(args.shape))
    if args.kind == "rational":
        _emit_many(list(enumerate_rational(shape)), config, lambda t: t.render_ascii())
        return EXIT_OK
    a, b = _alphabet_pair(args, config)
    inner = as_generalized(_json(args.mu)) if args.mu else None
    items = list(enumerate_ab(shape, a, b, config.window[0], inner))
    if args.count:
        poly = character_ab(shape, a, b, config.window[0], inner)
        _emit({"count": len(items), "character": poly.to_json()}, str(len(items)), config)
        return EXIT_OK
    _emit_many(items, config, ABTableau.render_ascii)
    return EXIT_OK


def cmd_verify(args, config: TabkitConfig) -> int:
    report = run_suite(args.suite, config)
    text = f"{args.suite}: {'passed' if report.passed else 'FAILED'}"
    if report.mismatches:
        text += "\n" + "\n".join(report.mismatches)
    _emit(report.to_json(), text, config)
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--trunc", type=int, default=argparse.SUPPRESS)
    common.add_argument("--window", default=argparse.SUPPRESS, help="Degree caps as D,E.")
    common.add_argument(
        "--ascii", action="store_true", default=argparse.SUPPRESS, help="Render tableaux."
    )

    parser = argparse.ArgumentParser(
        prog="tabkit",
        description="Tableau combinatorics over graded alphabets.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("insert", parents=[common], help="Insert one tableau into another.")
    p.add_argument("t")
    p.add_argument("t2")
    p.add_argument("--mode", choices=["row", "col"], default="col")
    p.add_argument("--alphabet")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("switch", parents=[common], help="Switch S past T.")
    p.add_argument("s")
    p.add_argument("t")
    p.add_argument("--s-alphabet")
    p.add_argument("--t-alphabet")
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("jdt", parents=[common], help="Rectify a skew tableau.")
    p.add_argument("t")
    p.add_argument("--inner", default="[]")
    p.add_argument("--alphabet")
    p.set_defaults(func=cmd_jdt)

    p = sub.add_parser("lr-count", parents=[common], help="N^lam_{mu nu}.")
    for name in ("lam", "mu", "nu"):
        p.add_argument(name)
    p.set_defaults(func=cmd_lr_count)

    p = sub.add_parser("coeff", parents=[common], help="Stable coefficients c and c-hat.")
    p.add_argument("kind", choices=["c", "chat"])
    for name in ("lam", "mu", "nu"):
        p.add_argument(name)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("rsk", parents=[common], help="(P_w, Q_w) of level one words.")
    p.add_argument("words", nargs="?")
    p.add_argument("--a")
    p.add_argument("--b")
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("lr-ab", parents=[common], help="Product LR rule for A/B tableaux.")
    p.add_argument("t1")
    p.add_argument("t2")
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_lr_ab)

    p = sub.add_parser("skew-jdt", parents=[common], help="Skew LR rule for A/B tableaux.")
    p.add_argument("x", nargs="?")
    p.set_defaults(func=cmd_skew_jdt)

    p = sub.add_parser("char", parents=[common], help="Windowed characters and highest weights.")
    p.add_argument("lam")
    p.add_argument("--mode", choices=["super", "gl"], default="super")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("enumerate", parents=[common], help="List tableaux of a shape.")
    p.add_argument("shape")
    p.add_argument("--kind", choices=["ab", "rational", "lr"], default="ab")
    p.add_argument("--mu")
    p.add_argument("--nu")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="Run a verification suite.")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.set_defaults(func=cmd_verify)
    return parser


def load_config(args) -> TabkitConfig:
    """Environment (and .env) first, then command line flags on top."""
    load_dotenv()
    config = TabkitConfig.load_from_env_config()
    overrides = {}
    if hasattr(args, "threads"):
        overrides["threads"] = args.threads
    if hasattr(args, "seed"):
        overrides["seed"] = args.seed
    if hasattr(args, "trunc"):
        overrides["truncation"] = args.trunc
    if hasattr(args, "window"):
        overrides["window"] = parse_pair(args.window, "--window")
    if getattr(args, "ascii", False):
        overrides["output"] = "ascii"
    return TabkitConfig(**{**config.model_dump(), **overrides})


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        config = load_config(args)
        return args.func(args, config)
    except (UsageError, ConfigError, KeyError, ValueError) as e:
        logging.error(f"Usage error: {e}")
        return EXIT_USAGE
    except TabkitException as e:
        logging.error(f"{type(e).__name__} in {args.command}: {e}")
        logging.debug(f"Arguments: {vars(args)}", exc_info=True)
        return EXIT_INTERNAL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
