"""URL canonicalization for de-duplication."""

from __future__ import annotations

from urllib.parse import parse_qsl, urlencode, urlsplit, urlunsplit

from ..errors import InvalidUrl

_DEFAULT_PORTS = {"http": 80, "https": 443}
_TRACKING_KEYS = frozenset({"fbclid", "gclid"})


def _is_tracking(key: str) -> bool:
    return key in _TRACKING_KEYS or key.startswith("utm_")


def canonicalize_url(url: str) -> str:
    """Normalize ``url`` so trivially different spellings compare equal.

    Lowercases scheme and host, drops default ports and fragments, strips
    tracking parameters (utm_*, fbclid, gclid), and sorts the remaining
    query keys. Idempotent: applying it twice changes nothing.

    Raises InvalidUrl for relative or unparseable input.
    """
    try:
        parts = urlsplit(url)
        port = parts.port
    except ValueError as exc:
        raise InvalidUrl(f"{url!r}: {exc}") from None
    scheme = parts.scheme.lower()
    host = parts.hostname or ""
    if not scheme or not host:
        raise InvalidUrl(f"not an absolute URL: {url!r}")
    if ":" in host:
        host = f"[{host}]"
    netloc = host
    if "@" in parts.netloc:
        netloc = parts.netloc.rsplit("@", 1)[0] + "@" + host
    if port is not None and port != _DEFAULT_PORTS.get(scheme):
        netloc = f"{netloc}:{port}"
    pairs = [
        (key, value)
        for key, value in parse_qsl(parts.query, keep_blank_values=True)
        if not _is_tracking(key)
    ]
    query = urlencode(sorted(pairs))
    return urlunsplit((scheme, netloc, parts.path, query, ""))
