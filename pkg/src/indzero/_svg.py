"""Minimal hand-written SVG 1.1 emitter for line-art figures."""

from __future__ import annotations

import json
from xml.sax.saxutils import escape

import numpy as np


def _num(x: float) -> str:
    return f"{x:.6g}"


class Figure:
    """Complex-plane canvas: world coordinates map to pixels with y flipped."""

    def __init__(self, xmin, xmax, ymin, ymax, width=800, title=""):
        self.xmin, self.xmax, self.ymin, self.ymax = map(float, (xmin, xmax, ymin, ymax))
        self.width = int(width)
        aspect = (self.ymax - self.ymin) / (self.xmax - self.xmin)
        self.height = max(50, int(round(self.width * aspect)))
        self.title = title
        self.items = []
        self.metadata = None

    @classmethod
    def fit(cls, points, pad=0.08, **kw):
        pts = np.asarray(points, dtype=np.complex128)
        xmin, xmax = float(pts.real.min()), float(pts.real.max())
        ymin, ymax = float(pts.imag.min()), float(pts.imag.max())
        span = max(xmax - xmin, ymax - ymin, 1e-12)
        return cls(xmin - pad * span, xmax + pad * span, ymin - pad * span, ymax + pad * span, **kw)

    def px(self, z):
        x = (z.real - self.xmin) / (self.xmax - self.xmin) * self.width
        y = (self.ymax - z.imag) / (self.ymax - self.ymin) * self.height
        return x, y

    def polyline(self, points, color="black", width=1.5, dash=None, cls="curve", label=None):
        pts = np.asarray(points, dtype=np.complex128)
        cmds = []
        for i, z in enumerate(pts):
            x, y = self.px(z)
            cmds.append(("M" if i == 0 else "L") + f"{_num(x)} {_num(y)}")
        style = f'fill="none" stroke="{color}" stroke-width="{width}"'
        if dash:
            style += f' stroke-dasharray="{dash}"'
        lab = f' data-label="{escape(label)}"' if label else ""
        self.items.append(f'<path class="{cls}"{lab} {style} d="{" ".join(cmds)}"/>')

    def marker(self, z, color="black", r=3.5, label=None):
        x, y = self.px(z)
        lab = f' data-label="{escape(label)}"' if label else ""
        self.items.append(
            f'<circle class="marker"{lab} cx="{_num(x)}" cy="{_num(y)}" r="{r}" fill="{color}"/>')

    def rect(self, x0, y0, x1, y1, color):
        # world-coordinate rectangle
        ax, ay = self.px(complex(x0, y1))
        bx, by = self.px(complex(x1, y0))
        self.items.append(
            f'<rect class="cell" x="{_num(ax)}" y="{_num(ay)}" width="{_num(bx - ax)}" '
            f'height="{_num(by - ay)}" fill="{color}" stroke="none"/>')

    def axes(self):
        if self.ymin < 0 < self.ymax:
            self.polyline([complex(self.xmin, 0), complex(self.xmax, 0)], "#999", 0.6, cls="axis")
        if self.xmin < 0 < self.xmax:
            self.polyline([complex(0, self.ymin), complex(0, self.ymax)], "#999", 0.6, cls="axis")

    def text(self, x, y, s, size=13, color="black"):
        self.items.append(
            f'<text x="{_num(x)}" y="{_num(y)}" font-size="{size}" fill="{color}" '
            f'font-family="sans-serif">{escape(s)}</text>')

    def legend(self, entries):
        # entries: (label, color, dash)
        y = 20
        for label, color, dash in entries:
            d_attr = f' stroke-dasharray="{dash}"' if dash else ""
            self.items.append(
                f'<line class="legend" x1="12" y1="{y}" x2="40" y2="{y}" stroke="{color}" '
                f'stroke-width="2"{d_attr}/>')
            self.text(46, y + 4, label)
            y += 18

    def render(self) -> str:
        head = ('<?xml version="1.0" encoding="UTF-8"?>\n'
                f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                f'width="{self.width}" height="{self.height}" '
                f'viewBox="0 0 {self.width} {self.height}">\n')
        body = []
        if self.title:
            body.append(f"<title>{escape(self.title)}</title>")
        if self.metadata is not None:
            body.append(f"<metadata>{escape(json.dumps(self.metadata, sort_keys=True))}</metadata>")
        body.append(f'<rect width="{self.width}" height="{self.height}" fill="white"/>')
        body.extend(self.items)
        return head + "\n".join(body) + "\n</svg>\n"
