"""Deterministic stand-in for an external entailment scorer.

Speaks the same one-line JSON protocol as a real zero-shot model server but
scores with plain lexical overlap, so the full pipeline (and its tests) can
run on a machine with no model weights and no network. Run it as a
subprocess provider:

    python3 -m attrex.nli_stub

or as an HTTP provider:

    python3 -m attrex.nli_stub --http 8731

In lexical mode the topic words are the hypothesis tokens minus template
scaffolding ("this text is about ..."); a premise containing any topic word
(substring, case-insensitive) scores high, anything else scores low. The
flags --score/--malformed/--delay exist for exercising client error paths.
"""

import argparse
import json
import sys
import time
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

SCAFFOLD = {"this", "text", "is", "about", "a", "an", "the", "of"}
HIGH = 0.92
LOW = 0.04


def topic_words(hypothesis: str):
    words = [w.strip(".,;:!?\"'").lower() for w in hypothesis.split()]
    return [w for w in words if w and w not in SCAFFOLD]


def lexical_score(premise: str, hypothesis: str) -> float:
    haystack = premise.lower()
    hits = sum(1 for w in topic_words(hypothesis) if w in haystack)
    if hits == 0:
        return LOW
    return min(1.0, HIGH + 0.01 * (hits - 1))


def respond(line: str, args) -> str:
    if args.malformed:
        return "this is not json"
    try:
        doc = json.loads(line)
        premise = doc["premise"]
        hypothesis = doc["hypothesis"]
    except (json.JSONDecodeError, KeyError, TypeError):
        return json.dumps({"error": "bad request"})
    if args.score is not None:
        return json.dumps({"score": args.score})
    return json.dumps({"score": lexical_score(premise, hypothesis)})


def serve_stdio(args):
    for line in sys.stdin:
        if not line.strip():
            continue
        if args.delay:
            time.sleep(args.delay)
        sys.stdout.write(respond(line, args) + "\n")
        sys.stdout.flush()


def build_http_server(args) -> ThreadingHTTPServer:
    class Handler(BaseHTTPRequestHandler):
        def do_POST(self):
            length = int(self.headers.get("Content-Length", 0))
            body = self.rfile.read(length).decode("utf-8")
            if args.delay:
                time.sleep(args.delay)
            out = respond(body, args).encode("utf-8")
            self.send_response(200)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(out)))
            self.end_headers()
            self.wfile.write(out)

        def log_message(self, *a):
            pass

    return ThreadingHTTPServer(("127.0.0.1", args.http), Handler)


def serve_http(args):
    server = build_http_server(args)
    print("listening on %d" % server.server_port, flush=True)
    server.serve_forever()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        description="deterministic lexical-overlap entailment stub")
    parser.add_argument("--score", type=float, default=None,
                        help="always answer this fixed score")
    parser.add_argument("--malformed", action="store_true",
                        help="answer with non-JSON garbage")
    parser.add_argument("--delay", type=float, default=0.0,
                        help="sleep this many seconds before each answer")
    parser.add_argument("--http", type=int, default=None, metavar="PORT",
                        help="serve HTTP on this port instead of stdio")
    args = parser.parse_args(argv)
    if args.http is not None:
        serve_http(args)
    else:
        serve_stdio(args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
