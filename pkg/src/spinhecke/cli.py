"""Command-line front end: a thin client of the HTTP service.

Without --server the requests are served in-process against the same
application object (so the CLI works standalone); with --server they go
over the wire to a running `spinhecke serve` instance.  Output is
deterministic JSON; exit codes: 0 success, 2 parse/user error,
3 verification failure, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .suites import DEFAULT_SEED

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VERIFY = 3
EXIT_INTERNAL = 4


class Client:
    """Minimal transport wrapper: in-process test client or remote HTTP."""

    def __init__(self, server: str | None = None):
        if server:
            import httpx
            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            import warnings
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient
            from .service import app
            self._client = TestClient(app)

    def get(self, path: str, params: dict):
        r = self._client.get(path, params=params)
        return r.status_code, r.json()

    def post(self, path: str, payload: dict):
        r = self._client.post(path, json=payload)
        return r.status_code, r.json()


def _emit(status: int, body) -> int:
    print(json.dumps(body, indent=2, sort_keys=True))
    if status >= 500:
        return EXIT_INTERNAL
    if status >= 400:
        return EXIT_PARSE
    if isinstance(body, dict) and body.get("passed") is False:
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="spinhecke",
        description="Exact computation in spin, covering and Hecke-Clifford "
                    "algebras.")
    ap.add_argument("--server", default=None,
                    help="base URL of a running service (default: in-process)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="normal form of an expression")
    p.add_argument("--algebra", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expr", required=True)

    p = sub.add_parser("mul", help="product of two expressions")
    p.add_argument("--algebra", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)

    p = sub.add_parser("map", help="apply phi/psi or an involution")
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expr", required=True)

    p = sub.add_parser("dims", help="basis sizes")
    p.add_argument("--algebra", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("jm", help="Jucys-Murphy elements")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("cyclotomic", help="classify Phi(X^-k F(X))")
    p.add_argument("--F", required=True)
    p.add_argument("--n", type=int, default=None,
                   help="also report the quotient dimension at this rank")

    p = sub.add_parser("classify", help="classify a graded ideal from generators")
    p.add_argument("--gens", required=True, nargs="+",
                   help="generators, e.g. 'p1-1' 'q1'")
    p.add_argument("--n", type=int, default=None)

    p = sub.add_parser("rep", help="matrix of an element in the basic spin "
                                   "representation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expr", required=True)

    p = sub.add_parser("intertwine", help="verify intertwiner relations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", default="all")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8752)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn
        uvicorn.run("spinhecke.service:app", host=args.host, port=args.port)
        return EXIT_OK
    client = Client(args.server)
    if args.command == "nf":
        status, body = client.post("/nf", {"algebra": args.algebra,
                                           "n": args.n, "expr": args.expr})
    elif args.command == "mul":
        status, body = client.post("/mul", {"algebra": args.algebra,
                                            "n": args.n, "lhs": args.lhs,
                                            "rhs": args.rhs})
    elif args.command == "map":
        status, body = client.post("/map", {"name": args.name, "n": args.n,
                                            "expr": args.expr})
    elif args.command == "dims":
        status, body = client.get("/dims", {"algebra": args.algebra,
                                            "n": args.n})
    elif args.command == "verify":
        payload = {"suite": args.suite, "seed": args.seed}
        if args.n is not None:
            payload["n"] = args.n
        status, body = client.post("/verify", payload)
    elif args.command == "jm":
        status, body = client.get("/jm", {"n": args.n})
    elif args.command == "cyclotomic":
        payload = {"F": args.F}
        if args.n is not None:
            payload["n"] = args.n
        status, body = client.post("/cyclotomic", payload)
    elif args.command == "classify":
        payload = {"gens": args.gens}
        if args.n is not None:
            payload["n"] = args.n
        status, body = client.post("/cyclotomic/classify", payload)
    elif args.command == "rep":
        status, body = client.get("/rep", {"n": args.n, "expr": args.expr})
    elif args.command == "intertwine":
        status, body = client.post("/intertwine", {"n": args.n,
                                                   "check": args.check})
    else:  # pragma: no cover
        raise SystemExit(2)
    return _emit(status, body)


if __name__ == "__main__":
    sys.exit(main())
