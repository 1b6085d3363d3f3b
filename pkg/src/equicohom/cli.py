"""Command-line client for the equicohom service.

The CLI is a thin client: every subcommand builds one request and sends
it to the FastAPI app, in process by default or over HTTP when --url is
given.  Exit codes: 0 success, 1 verification failure, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx


def _client(url):
    if url:
        return httpx.Client(base_url=url, timeout=600.0)
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app
    return TestClient(app, raise_server_exceptions=False)


def _request(args, method, path, payload=None):
    import warnings
    with _client(args.url) as client, warnings.catch_warnings():
        warnings.simplefilter("ignore")
        if method == "GET":
            resp = client.get(path)
        else:
            resp = client.post(path, json=payload or {})
    if resp.status_code == 422:
        body = resp.json()
        detail = body.get("detail", body)
        print("error: %s" % detail, file=sys.stderr)
        raise SystemExit(2)
    resp.raise_for_status()
    return resp.json()


def _emit(args, data, text_fn):
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        text_fn(data)


def cmd_normalize(args):
    data = _request(args, "POST", "/normalize",
                    {"ring": args.ring, "expr": args.expr})
    _emit(args, data, lambda d: print(d["normal_form"]))
    return 0


def cmd_multiply(args):
    data = _request(args, "POST", "/multiply",
                    {"ring": args.ring, "exprs": args.expr})
    _emit(args, data, lambda d: print(d["normal_form"]))
    return 0


def cmd_basis(args):
    data = _request(args, "POST", "/basis",
                    {"ring": args.ring, "coset": args.coset,
                     "window": args.window,
                     "monomials": args.format != "csv"})
    if args.format == "csv":
        print("a,b,count")
        for cell in data["cells"]:
            print("%d,%d,%d" % (cell["a"], cell["b"], cell["count"]))
    elif args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for cell in data["cells"]:
            print("(%d, %d): %d  %s" % (cell["a"], cell["b"], cell["count"],
                                        " ".join(cell["monomials"])))
    return 0


def cmd_map(args):
    data = _request(args, "POST", "/map",
                    {"name": args.name, "expr": args.expr})
    def text(d):
        r = d["result"]
        if isinstance(r, list):
            print(json.dumps(r))
        else:
            print(r)
    _emit(args, data, text)
    return 0


def cmd_euler(args):
    data = _request(args, "POST", "/euler",
                    {"m": args.m, "n": args.n, "twisted": args.twisted})
    _emit(args, data, lambda d: print(d["result"]))
    return 0


def cmd_waner(args):
    bundles = [b for b in args.bundles.split(",") if b]
    data = _request(args, "POST", "/waner", {"bundles": bundles})
    def text(d):
        for k, c in enumerate(d["coefficients"]):
            print("t^%d: %s" % (k, c))
    _emit(args, data, text)
    return 0


def cmd_units(args):
    data = _request(args, "GET", "/units")
    def text(d):
        print("table ok: %s" % d["table_ok"])
        print("squares ok: %s" % d["squares_ok"])
        print("units found: %d (matches expected: %s)"
              % (d["count"], d["matches_expected"]))
    _emit(args, data, text)
    return 0


def cmd_push(args):
    data = _request(args, "POST", "/push",
                    {"a0": args.a0, "a1": args.a1, "a2": args.a2,
                     "a3": args.a3})
    _emit(args, data, lambda d: print(d["result"]))
    return 0


def cmd_verify(args):
    payload = {}
    if args.confluence:
        payload["criteria"] = ["C01a", "C01b", "C01c"]
    elif args.criteria:
        payload["criteria"] = [c for c in args.criteria.split(",") if c]
    data = _request(args, "POST", "/verify", payload)
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in data["report"]:
            print(line)
    return 0 if data["ok"] else 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="equicohom",
        description="Exact symbolic computation in the C2-equivariant "
                    "cohomology of BT^2.")
    p.add_argument("--url", default=None,
                   help="base URL of a running service (default: in-process)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        sp.add_argument("--format", choices=("text", "json", "csv"),
                        default="text")
        return sp

    sp = add("normalize", cmd_normalize, help="normal form of an expression")
    sp.add_argument("--ring", choices=("bt2", "bt1", "bu2", "h"),
                    default="bt2")
    sp.add_argument("--expr", required=True)

    sp = add("multiply", cmd_multiply, help="normal form of a product")
    sp.add_argument("--ring", choices=("bt2", "bt1", "bu2", "h"),
                    default="bt2")
    sp.add_argument("--expr", action="append", required=True,
                    help="repeatable factor")

    sp = add("basis", cmd_basis, help="module basis grid for an RO(C2) page")
    sp.add_argument("--ring", choices=("bt2", "bt1"), default="bt2")
    sp.add_argument("--coset", default="0",
                    help="grading coset, e.g. 'W01+W10'")
    sp.add_argument("--window", default="0:6:0:10",
                    help="a_min:a_max:b_min:b_max")

    sp = add("map", cmd_map, help="apply a homomorphism")
    sp.add_argument("--name", required=True,
                    choices=("rho", "phi", "eta", "sstar", "delta", "chi1",
                             "chi2", "gamma", "t", "pi1", "pi2"))
    sp.add_argument("--expr", required=True)

    sp = add("euler", cmd_euler, help="Euler class of O(m,n) or chi O(m,n)")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--twisted", action="store_true")

    sp = add("waner", cmd_waner, help="total Waner class of a sum of "
                                      "line bundles")
    sp.add_argument("--bundles", required=True,
                    help="comma list from: w1,xw1,w2,xw2,T,xT")

    add("units", cmd_units, help="unit-group verification report")

    sp = add("push", cmd_push, help="pushforward of a decomposed element")
    for coord in ("a0", "a1", "a2", "a3"):
        sp.add_argument("--" + coord, default="0",
                        help="BU(2) coefficient of the %s generator" % coord)

    sp = add("verify", cmd_verify, help="run the verification suite")
    sp.add_argument("--criteria", default=None,
                    help="comma list of criterion codes (default: all)")
    sp.add_argument("--confluence", action="store_true",
                    help="only the confluence criteria (C01a, C01b, C01c)")

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already
        raise
    try:
        return args.fn(args)
    except SystemExit:
        raise
    except httpx.HTTPError as exc:
        print("transport error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
