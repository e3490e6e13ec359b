"""Client for an external zero-shot entailment scorer.

The scorer itself is not part of this package; it is any process or HTTP
endpoint speaking a one-line JSON protocol: requests are
{"premise": ..., "hypothesis": ...} and responses are {"score": s} with
0 <= s <= 1. Two transports are supported: a line-delimited subprocess pipe
and HTTP POST. Transport failures (timeouts, dead process, connection
errors) and protocol failures (non-JSON, missing/out-of-range score) raise
distinct exception types so callers can tell them apart.
"""

import json
import queue
import shlex
import subprocess
import threading
import urllib.error
import urllib.request
from dataclasses import dataclass, field

DEFAULT_TEMPLATE = "This text is about {}."
DEFAULT_TIMEOUT = 10.0

_EOF = object()


class ProviderTransportError(RuntimeError):
    """The provider could not be reached or did not answer in time."""


class ProviderProtocolError(RuntimeError):
    """The provider answered, but not with a valid score document."""


@dataclass(frozen=True)
class NliProviderHandle:
    """How to reach the external scorer.

    transport is "subprocess-stdio" (command is a program argv or shell
    string) or "http" (endpoint is a URL accepting POST). The hypothesis
    template must contain exactly one {} placeholder.
    """

    transport: str
    command: tuple = ()
    endpoint: str = ""
    hypothesis_template: str = DEFAULT_TEMPLATE
    timeout: float = DEFAULT_TIMEOUT

    def __post_init__(self):
        if self.transport not in ("subprocess-stdio", "http"):
            raise ValueError("unknown transport %r" % self.transport)
        if self.transport == "subprocess-stdio" and not self.command:
            raise ValueError("subprocess-stdio transport needs a command")
        if self.transport == "http" and not self.endpoint:
            raise ValueError("http transport needs an endpoint")
        if self.hypothesis_template.count("{}") != 1:
            raise ValueError(
                "hypothesis template must contain exactly one {} placeholder")
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")

    def hypothesis(self, topic: str) -> str:
        return self.hypothesis_template.replace("{}", topic, 1)


def _parse_response(body: str) -> float:
    try:
        doc = json.loads(body)
    except json.JSONDecodeError:
        raise ProviderProtocolError(
            "malformed provider response: %r" % body.strip()) from None
    if not isinstance(doc, dict) or "score" not in doc:
        raise ProviderProtocolError(
            "provider response missing 'score': %r" % body.strip())
    score = doc["score"]
    if isinstance(score, bool) or not isinstance(score, (int, float)):
        raise ProviderProtocolError("provider score is not a number: %r" % score)
    if not 0.0 <= score <= 1.0:
        raise ProviderProtocolError("provider score out of range: %r" % score)
    return float(score)


class NliClient:
    """Blocking scorer over one of the two transports.

    Subprocess mode keeps the child alive across calls: requests go down
    stdin one JSON document per line, a reader thread feeds stdout lines to
    a queue, and each call waits on the queue with the handle's timeout.
    """

    def __init__(self, handle: NliProviderHandle):
        self.handle = handle
        self._proc = None
        self._lines = None
        self._lock = threading.Lock()

    def _ensure_process(self):
        if self._proc is not None and self._proc.poll() is None:
            return
        command = self.handle.command
        argv = shlex.split(command) if isinstance(command, str) else list(command)
        try:
            self._proc = subprocess.Popen(
                argv,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                stderr=subprocess.DEVNULL,
                text=True,
                bufsize=1,
            )
        except OSError as exc:
            raise ProviderTransportError(
                "cannot start provider %r: %s" % (argv, exc)) from None
        self._lines = queue.Queue()

        def reader(proc, lines):
            for line in proc.stdout:
                lines.put(line)
            lines.put(_EOF)

        threading.Thread(
            target=reader, args=(self._proc, self._lines), daemon=True).start()

    def _score_subprocess(self, premise, hypothesis):
        with self._lock:
            self._ensure_process()
            request = json.dumps(
                {"premise": premise, "hypothesis": hypothesis},
                ensure_ascii=False)
            try:
                self._proc.stdin.write(request + "\n")
                self._proc.stdin.flush()
            except (BrokenPipeError, OSError) as exc:
                raise ProviderTransportError(
                    "provider pipe closed: %s" % exc) from None
            try:
                line = self._lines.get(timeout=self.handle.timeout)
            except queue.Empty:
                raise ProviderTransportError(
                    "provider timed out after %.1fs" % self.handle.timeout
                ) from None
            if line is _EOF:
                raise ProviderTransportError("provider closed its output")
            return _parse_response(line)

    def _score_http(self, premise, hypothesis):
        body = json.dumps(
            {"premise": premise, "hypothesis": hypothesis},
            ensure_ascii=False).encode("utf-8")
        request = urllib.request.Request(
            self.handle.endpoint, data=body,
            headers={"Content-Type": "application/json"})
        try:
            with urllib.request.urlopen(
                    request, timeout=self.handle.timeout) as resp:
                if resp.status != 200:
                    raise ProviderTransportError(
                        "provider returned HTTP %d" % resp.status)
                payload = resp.read().decode("utf-8")
        except urllib.error.HTTPError as exc:
            raise ProviderTransportError(
                "provider returned HTTP %d" % exc.code) from None
        except (urllib.error.URLError, TimeoutError, OSError) as exc:
            raise ProviderTransportError(
                "cannot reach provider: %s" % exc) from None
        return _parse_response(payload)

    def score(self, premise: str, hypothesis: str) -> float:
        if self.handle.transport == "http":
            return self._score_http(premise, hypothesis)
        return self._score_subprocess(premise, hypothesis)

    def close(self):
        if self._proc is not None:
            try:
                self._proc.stdin.close()
            except OSError:
                pass
            self._proc.terminate()
            try:
                self._proc.wait(timeout=2)
            except subprocess.TimeoutExpired:
                self._proc.kill()
                self._proc.wait()
            self._proc = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
