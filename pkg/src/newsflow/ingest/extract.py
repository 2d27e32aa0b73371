"""Title and body extraction from article HTML.

Extraction is an interface: any callable taking the page HTML and
returning a (title, body) pair. The built-in baseline picks the largest
contiguous block of <p> text, which holds up surprisingly well on news
pages where the article is one run of paragraphs and the chrome is not.
"""

from __future__ import annotations

from html.parser import HTMLParser
from typing import Callable

from ..errors import ExtractError

Extractor = Callable[[str], tuple[str, str]]

_SKIP_CONTENT = frozenset({"script", "style", "noscript", "svg", "template"})

# Tags that interrupt a run of paragraphs. Inline markup (a, em, span, b)
# does not break a run; a div or heading between two <p> elements does.
_BLOCK_TAGS = frozenset({
    "address", "article", "aside", "blockquote", "div", "dl", "fieldset",
    "figure", "footer", "form", "h1", "h2", "h3", "h4", "h5", "h6",
    "header", "hr", "li", "main", "nav", "ol", "pre", "section", "table",
    "td", "th", "tr", "ul",
})


def _collapse(chunks: list[str]) -> str:
    return " ".join("".join(chunks).split())


class _PageParser(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.runs: list[list[str]] = []
        self.og_title = ""
        self._skip = 0
        self._run: list[str] = []
        self._paragraph: list[str] | None = None
        self._title: list[str] | None = None
        self._title_text = ""
        self._h1: list[str] | None = None
        self._h1_text = ""

    def _end_paragraph(self):
        if self._paragraph is not None:
            text = _collapse(self._paragraph)
            if text:
                self._run.append(text)
            self._paragraph = None

    def _break_run(self):
        self._end_paragraph()
        if self._run:
            self.runs.append(self._run)
            self._run = []

    def handle_starttag(self, tag, attrs):
        if tag in _SKIP_CONTENT:
            self._skip += 1
            return
        if self._skip:
            return
        if tag == "meta":
            fields = dict(attrs)
            if fields.get("property") == "og:title" and not self.og_title:
                self.og_title = " ".join((fields.get("content") or "").split())
        elif tag == "p":
            self._end_paragraph()
            self._paragraph = []
        elif tag == "br":
            if self._paragraph is not None:
                self._paragraph.append(" ")
        elif tag in _BLOCK_TAGS:
            self._break_run()
            if tag == "h1" and not self._h1_text:
                self._h1 = []
        elif tag == "title":
            self._title = []

    def handle_endtag(self, tag):
        if tag in _SKIP_CONTENT:
            self._skip = max(0, self._skip - 1)
            return
        if self._skip:
            return
        if tag == "p":
            self._end_paragraph()
        elif tag in _BLOCK_TAGS:
            self._break_run()
            if tag == "h1" and self._h1 is not None:
                self._h1_text = self._h1_text or _collapse(self._h1)
                self._h1 = None
        elif tag == "title":
            self._title_text = self._title_text or _collapse(self._title or [])
            self._title = None

    def handle_data(self, data):
        if self._skip:
            return
        if self._paragraph is not None:
            self._paragraph.append(data)
        elif self._h1 is not None:
            self._h1.append(data)
        elif self._title is not None:
            self._title.append(data)

    def finish(self) -> None:
        self.close()
        self._break_run()

    @property
    def page_title(self) -> str:
        return self.og_title or self._h1_text or self._title_text


def extract_article(html: str) -> tuple[str, str]:
    """Baseline extractor: largest contiguous <p>-text block.

    The title comes from og:title, then the first <h1>, then <title>.
    Raises ExtractError when the page has no paragraph text at all.
    """
    parser = _PageParser()
    parser.feed(html)
    parser.finish()
    if not parser.runs:
        raise ExtractError("no paragraph text found")
    best = max(parser.runs, key=lambda run: sum(len(p) for p in run))
    return parser.page_title, "\n\n".join(best)
