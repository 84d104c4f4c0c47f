"""Command line front end.

A thin client over the HTTP service: by default it talks to the app
in-process through an ASGI test transport (no server needed); set
PATIENCE_SERVICE_URL to point it at a running server instead.

Exit codes: 0 success, 1 usage or parse error, 2 domain error (invalid
pile configuration, unstable pair, exceeded guard), 3 verification
failure.  Output is deterministic: identical arguments give identical
bytes on stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

import httpx


class _CliFailure(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code
        self.message = message


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract here wants 1
    def error(self, message: str) -> None:
        raise _CliFailure(1, f"{self.prog}: error: {message}")


def _compact(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _make_client() -> httpx.Client:
    base_url = os.environ.get("PATIENCE_SERVICE_URL")
    if base_url:
        return httpx.Client(base_url=base_url, timeout=httpx.Timeout(600.0))
    import warnings

    with warnings.catch_warnings():
        # some starlette releases nag about the httpx-backed test client;
        # it is the supported in-process transport here
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _post(client: httpx.Client, path: str, payload: dict) -> dict:
    try:
        response = client.post(path, json=payload)
    except httpx.HTTPError as exc:
        raise _CliFailure(1, f"service unreachable: {exc}") from exc
    if response.status_code in (400, 422):
        raise _CliFailure(1, _detail(response))
    if response.status_code == 409:
        raise _CliFailure(2, _detail(response))
    if response.status_code != 200:
        raise _CliFailure(1, f"service error {response.status_code}: {response.text}")
    return response.json()


def _detail(response: httpx.Response) -> str:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    if detail is None:
        return response.text
    if isinstance(detail, str):
        return detail
    return _compact(detail)


def _read_pair_document(source: str) -> dict:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise _CliFailure(1, f"cannot read {source}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _CliFailure(1, f"bad pair JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise _CliFailure(1, "pair document must be a JSON object")
    return doc


def _cmd_sort(client: httpx.Client, args: argparse.Namespace) -> int:
    print(_compact(_post(client, "/sort", {"perm": args.perm})))
    return 0


def _cmd_rpw(client: httpx.Client, args: argparse.Namespace) -> int:
    print(_post(client, "/rpw", {"perm": args.perm})["perm"])
    return 0


def _cmd_normal(client: httpx.Client, args: argparse.Namespace) -> int:
    print(_post(client, "/normal", {"perm": args.perm})["perm"])
    return 0


def _cmd_shadow(client: httpx.Client, args: argparse.Namespace) -> int:
    print(_compact(_post(client, "/shadow", {"perm": args.perm})))
    return 0


def _cmd_extended(client: httpx.Client, args: argparse.Namespace) -> int:
    print(_compact(_post(client, "/extended", {"perm": args.perm})))
    return 0


def _cmd_invert(client: httpx.Client, args: argparse.Namespace) -> int:
    doc = _read_pair_document(args.pair)
    print(_post(client, "/invert", doc)["perm"])
    return 0


def _cmd_class(client: httpx.Client, args: argparse.Namespace) -> int:
    for member in _post(client, "/class", {"perm": args.perm})["perms"]:
        print(member)
    return 0


def _cmd_avoid(client: httpx.Client, args: argparse.Namespace) -> int:
    payload = {"perm": args.perm, "pattern": args.pattern}
    print("true" if _post(client, "/avoid", payload)["avoids"] else "false")
    return 0


def _cmd_occurrences(client: httpx.Client, args: argparse.Namespace) -> int:
    payload = {"perm": args.perm, "pattern": args.pattern}
    for occ in _post(client, "/occurrences", payload)["occurrences"]:
        print(_compact({"positions": occ}))
    return 0


def _cmd_enumerate(client: httpx.Client, args: argparse.Namespace) -> int:
    payload = {"what": args.what, "n": args.n, "pattern": args.pattern}
    body = _post(client, "/enumerate", payload)
    if body.get("items") is not None:
        for item in body["items"]:
            print(_compact(item))
    if body.get("report") is not None:
        print(_compact(body["report"]))
    return 0


def _cmd_verify(client: httpx.Client, args: argparse.Namespace) -> int:
    body = _post(client, "/verify", {"max_n": args.max_n})
    for result in body["results"]:
        print(_compact(result))
    passed = sum(1 for r in body["results"] if r["pass"])
    print(f"{passed}/{len(body['results'])} checks passed", file=sys.stderr)
    return 0 if body["ok"] else 3


_DISPATCH = {
    "sort": _cmd_sort,
    "rpw": _cmd_rpw,
    "shadow": _cmd_shadow,
    "extended": _cmd_extended,
    "invert": _cmd_invert,
    "class": _cmd_class,
    "normal": _cmd_normal,
    "avoid": _cmd_avoid,
    "occurrences": _cmd_occurrences,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="patience",
        description="Patience sorting combinatorics: piles, shadows, "
        "stable pairs, pattern avoidance.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def perm_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("perm", help="permutation in one-line notation")
        return p

    perm_command("sort", "pile configuration as JSON")
    perm_command("rpw", "reverse patience word of the pile configuration")
    perm_command("shadow", "shadow diagram corners as JSON")
    perm_command("extended", "insertion and recording piles as JSON")
    perm_command("normal", "canonical representative of the interchange class")
    perm_command("class", "every permutation with the same piles, one per line")

    p = sub.add_parser("invert", help="permutation of a stable pair")
    p.add_argument(
        "--pair",
        required=True,
        metavar="FILE",
        help='pair JSON {"R":...,"S":...}; use "-" for stdin',
    )

    p = perm_command("avoid", "true/false pattern avoidance")
    p.add_argument("--pattern", required=True, help="e.g. 2-31, 312, 3-~1-42")

    p = perm_command("occurrences", "pattern occurrences, one JSON line each")
    p.add_argument("--pattern", required=True, help="unbarred pattern")

    p = sub.add_parser("enumerate", help="exhaustive streams and counts")
    p.add_argument(
        "--what",
        required=True,
        choices=["configs", "noncrossing", "stable-pairs", "avoiders"],
    )
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--pattern", help="required for --what avoiders")
    p.add_argument(
        "--sorted",
        action="store_true",
        help="accepted for compatibility; output is always deterministic",
    )

    p = sub.add_parser("verify", help="run the identity checks, one JSON line each")
    p.add_argument("--max-n", type=int, default=5, help="cap every check at this size")
    p.add_argument(
        "--sorted",
        action="store_true",
        help="accepted for compatibility; output is always deterministic",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        with _make_client() as client:
            return _DISPATCH[args.command](client, args)
    except _CliFailure as failure:
        print(failure.message, file=sys.stderr)
        return failure.code


if __name__ == "__main__":
    sys.exit(main())
